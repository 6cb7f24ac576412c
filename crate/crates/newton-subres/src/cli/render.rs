//! Text, LaTeX, and JSON rendering for CLI output. All formats are
//! deterministic; rationals print as `p/q` strings in JSON.

use num::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{Rational, ScalarMatrix};
use crate::poly::{KnotVector, NewtonPoly, PowerPoly};
use crate::subres::SubresultantResult;

pub fn rational_list(rs: &[Rational]) -> String {
    rs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn index_tuple(t: &[usize]) -> String {
    t.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `c*B[i]` terms, highest basis element first.
pub fn newton_string(p: &NewtonPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for i in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[i];
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{}*B[{}]", c.abs(), i));
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn latex_string(p: &PowerPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let coeffs = p.coeffs();
    let mut out = String::new();
    let mut first = true;
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&latex_rational(&mag)),
            _ => {
                if !mag.is_one() {
                    out.push_str(&latex_rational(&mag));
                    out.push(' ');
                }
                if k == 1 {
                    out.push('x');
                } else {
                    out.push_str(&format!("x^{{{}}}", k));
                }
            }
        }
    }
    out
}

pub fn matrix_string(m: &ScalarMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", rational_list(m.row(i))))
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn json_rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(r.to_string())).collect())
}

/// Power coefficients padded to a fixed length so degree information
/// survives the trip through JSON.
fn padded_power_coeffs(p: &PowerPoly, len: usize) -> Vec<Rational> {
    (0..len.max(p.coeffs().len())).map(|k| p.coeff(k)).collect()
}

pub fn sres_json(system_knots: &KnotVector, r: &SubresultantResult) -> Value {
    json!({
        "delta": r.delta.delta(),
        "delta0": r.delta.delta0(),
        "eps": r.delta.eps(),
        "sign": r.sign,
        "knots": json_rationals(system_knots.as_slice()),
        "newton_coeffs": json_rationals(r.poly.coeffs()),
        "power_coeffs": json_rationals(&padded_power_coeffs(&r.poly.to_power(), r.delta.eps() + 1)),
        "leading": r.leading.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn newton_rendering() {
        let np = NewtonPoly::new(KnotVector::new(vec![rat(1)]), vec![rat(0), rat(-1)]).unwrap();
        assert_eq!(newton_string(&np), "-1*B[1]");
        let np = NewtonPoly::new(
            KnotVector::new(vec![rat(1), rat(2)]),
            vec![ratio(1, 2), rat(3), rat(1)],
        )
        .unwrap();
        assert_eq!(newton_string(&np), "1*B[2] + 3*B[1] + 1/2*B[0]");
        assert_eq!(newton_string(&NewtonPoly::zero(KnotVector::zeros(2))), "0");
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(
            latex_string(&PowerPoly::new(vec![ratio(1, 3), ratio(-1, 2), rat(1)])),
            "x^{2} - \\frac{1}{2} x + \\frac{1}{3}"
        );
        assert_eq!(latex_string(&PowerPoly::from_ints(&[1, -1])), "-x + 1");
    }

    #[test]
    fn matrix_rendering() {
        let m = ScalarMatrix::from_rows(vec![vec![rat(0), rat(-2)], vec![rat(1), rat(3)]]);
        assert_eq!(matrix_string(&m), "[[0, -2], [1, 3]]");
    }
}
