//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' natural]
//! atom     := rational | 'x' | '(' expr ')'
//! rational := natural ['/' natural]
//! ```
//!
//! There is no implicit multiplication, `/` only joins two integer
//! literals, and exponents are non-negative integer literals.

use std::fmt;

use num::bigint::BigInt;
use num::Zero;

use crate::algebra::Rational;
use crate::poly::PowerPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed polynomial together with the text it came from.
#[derive(Debug, Clone)]
pub struct PolyExpr {
    pub source: String,
    pub poly: PowerPoly,
}

impl PolyExpr {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(PolyExpr {
            source: text.to_string(),
            poly: parse_poly(text)?,
        })
    }
}

pub fn parse_poly(text: &str) -> Result<PowerPoly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

const MAX_EXPONENT: usize = 1024;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PowerPoly, ParseError> {
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            negate = c == b'-';
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PowerPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PowerPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(b'-') => return Err(self.err("negative exponents are not allowed")),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.err("expected an integer exponent after `^`")),
        }
        let digits = self.digits();
        let exp: usize = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| self.err(format!("exponent exceeds the limit of {}", MAX_EXPONENT)))?;
        if self.peek() == Some(b'^') {
            return Err(self.err("chained `^` is ambiguous; use parentheses"));
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<PowerPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational().map(PowerPoly::constant),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == "x" {
                    Ok(PowerPoly::x())
                } else {
                    Err(ParseError {
                        offset: start,
                        message: format!("unknown identifier `{}`", name),
                    })
                }
            }
            Some(_) => Err(self.err("expected a number, `x`, or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.big_digits()?;
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(numer));
        }
        let slash = self.pos;
        self.pos += 1;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let denom = self.big_digits()?;
                if denom.is_zero() {
                    return Err(ParseError {
                        offset: slash,
                        message: "zero denominator in rational literal".into(),
                    });
                }
                Ok(Rational::new(numer, denom))
            }
            _ => Err(ParseError {
                offset: slash,
                message: "`/` is only allowed between integer literals".into(),
            }),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_string()
    }

    fn big_digits(&mut self) -> Result<BigInt, ParseError> {
        let d = self.digits();
        if d.is_empty() {
            return Err(self.err("expected digits"));
        }
        Ok(d.parse().expect("digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn literal_polynomials() {
        assert_eq!(
            parse_poly("x^2 - 3*x + 2").unwrap(),
            PowerPoly::from_ints(&[2, -3, 1])
        );
        assert_eq!(
            parse_poly("(x-1)*(x-2)").unwrap(),
            PowerPoly::from_ints(&[2, -3, 1])
        );
        assert_eq!(
            parse_poly("1/2*x + 1/3").unwrap(),
            PowerPoly::new(vec![ratio(1, 3), ratio(1, 2)])
        );
    }

    #[test]
    fn whitespace_is_free() {
        assert_eq!(
            parse_poly("  x ^ 2-3 * x+ 2 ").unwrap(),
            parse_poly("x^2-3*x+2").unwrap()
        );
    }

    #[test]
    fn leading_sign_and_parens() {
        assert_eq!(
            parse_poly("-x + 1").unwrap(),
            PowerPoly::from_ints(&[1, -1])
        );
        assert_eq!(
            parse_poly("-(x - 1)").unwrap(),
            PowerPoly::from_ints(&[1, -1])
        );
        assert_eq!(parse_poly("(((7)))").unwrap(), PowerPoly::from_ints(&[7]));
    }

    #[test]
    fn error_offsets() {
        let e = parse_poly("x^2 + $").unwrap_err();
        assert_eq!(e.offset, 6);

        let e = parse_poly("x + y").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.message.contains("unknown identifier"));

        let e = parse_poly("x^-2").unwrap_err();
        assert!(e.message.contains("negative exponent"));

        let e = parse_poly("1/0").unwrap_err();
        assert!(e.message.contains("zero denominator"));

        let e = parse_poly("x/2").unwrap_err();
        assert!(e.message.contains("trailing input"));

        assert!(parse_poly("2*x x").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("x^2^3").is_err());
    }

    #[test]
    fn no_implicit_multiplication() {
        assert!(parse_poly("3x").is_err());
        assert!(parse_poly("2(x+1)").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = PowerPoly> {
        proptest::collection::vec((-99i64..=99, 1i64..=10), 0..=7)
            .prop_map(|cs| PowerPoly::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn print_then_parse_is_identity(p in arb_poly()) {
            let printed = p.to_string();
            let reparsed = parse_poly(&printed).unwrap();
            prop_assert_eq!(&reparsed, &p);
            // and printing is a fixed point
            prop_assert_eq!(reparsed.to_string(), printed);
        }

        #[test]
        fn constants_roundtrip(n in -999i64..=999, d in 1i64..=99) {
            let c = PowerPoly::constant(ratio(n, d));
            prop_assert_eq!(parse_poly(&c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn canonical_display_examples() {
        assert_eq!(
            PowerPoly::from_ints(&[2, -3, 1]).to_string(),
            "x^2 - 3*x + 2"
        );
        assert_eq!(PowerPoly::from_ints(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(PowerPoly::zero().to_string(), "0");
        assert_eq!(
            PowerPoly::new(vec![ratio(1, 3), ratio(1, 2)]).to_string(),
            "1/2*x + 1/3"
        );
        assert_eq!(rat(-7).to_string(), "-7");
    }
}
