//! Univariate polynomial arithmetic in the power basis and in Newton bases.
//!
//! A Newton basis is fixed by a knot vector `lambda = (l1, ..., ln)`:
//! `B_0 = 1` and `B_i = (x - l_i) * B_{i-1}`. All-zero knots give back the
//! power basis. Knots may repeat.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{Rational, ScalarMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("basis too small: need at least {needed} knots, got {got}")]
    BasisTooSmall { needed: usize, got: usize },
    #[error("coefficient count {coeffs} does not match knot count {knots} + 1")]
    CoeffCount { coeffs: usize, knots: usize },
}

/// Polynomial in the power basis; `coeffs[i]` is the coefficient of `x^i`.
/// The zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerPoly {
    coeffs: Vec<Rational>,
}

impl PowerPoly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PowerPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        PowerPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PowerPoly { coeffs }
    }

    /// `lead * prod_i (x - roots[i])`.
    pub fn from_roots(lead: &Rational, roots: &[Rational]) -> Self {
        let mut acc = Self::constant(lead.clone());
        for r in roots {
            acc = &acc * &Self::new(vec![-r.clone(), Rational::one()]);
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> PowerPoly {
        if c.is_zero() {
            return Self::zero();
        }
        PowerPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> PowerPoly {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder with `self = q * rhs + r`, `deg r < deg rhs`.
    pub fn divmod(&self, rhs: &PowerPoly) -> Result<(PowerPoly, PowerPoly), PolyError> {
        let dd = rhs.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = rhs.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((PowerPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            for j in 0..dd {
                let t = &rhs.coeffs[j] * &q;
                rem[k - dd + j] -= t;
            }
            rem[k] = Rational::zero();
            quot[k - dd] = q;
        }
        Ok((PowerPoly::new(quot), PowerPoly::new(rem)))
    }

    /// True when `rhs` divides `self` exactly.
    pub fn is_divisible_by(&self, rhs: &PowerPoly) -> bool {
        match self.divmod(rhs) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic scalar multiple (zero stays zero).
    pub fn monic(&self) -> PowerPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => PowerPoly::zero(),
        }
    }

    /// Monic gcd by the Euclidean algorithm over the rationals.
    pub fn gcd(&self, rhs: &PowerPoly) -> PowerPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Expand into the Newton basis over `knots`; requires
    /// `knots.len() >= deg(self)`. Trailing coefficients are zero-padded so
    /// the result always has `knots.len() + 1` coefficients.
    pub fn to_newton(&self, knots: &KnotVector) -> Result<NewtonPoly, PolyError> {
        let deg = self.coeffs.len().saturating_sub(1);
        if knots.len() < deg {
            return Err(PolyError::BasisTooSmall {
                needed: deg,
                got: knots.len(),
            });
        }
        // Repeated synthetic division: the remainder by (x - l_i) is the
        // next basis coefficient, the quotient carries on.
        let mut out = Vec::with_capacity(knots.len() + 1);
        let mut cur = self.coeffs.clone();
        for i in 0..knots.len() {
            let l = knots.get(i);
            if cur.is_empty() {
                out.push(Rational::zero());
                continue;
            }
            let mut rem = Rational::zero();
            for c in cur.iter().rev() {
                rem = rem * l + c;
            }
            // Quotient of the division by (x - l).
            let mut quot = Vec::with_capacity(cur.len().saturating_sub(1));
            let mut carry = Rational::zero();
            for c in cur.iter().skip(1).rev() {
                carry = carry * l + c;
                quot.push(carry.clone());
            }
            quot.reverse();
            out.push(rem);
            cur = quot;
        }
        out.push(cur.first().cloned().unwrap_or_else(Rational::zero));
        NewtonPoly::new(knots.clone(), out)
    }
}

impl Add for &PowerPoly {
    type Output = PowerPoly;
    fn add(self, rhs: &PowerPoly) -> PowerPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PowerPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PowerPoly {
    type Output = PowerPoly;
    fn sub(self, rhs: &PowerPoly) -> PowerPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PowerPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &PowerPoly {
    type Output = PowerPoly;
    fn neg(self) -> PowerPoly {
        PowerPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &PowerPoly {
    type Output = PowerPoly;
    fn mul(self, rhs: &PowerPoly) -> PowerPoly {
        if self.is_zero() || rhs.is_zero() {
            return PowerPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerPoly::new(out)
    }
}

/// Canonical rendering: descending powers, explicit `*`, rationals as `p/q`.
/// Parsing the output with the CLI grammar reproduces the polynomial.
impl fmt::Display for PowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Knot vector fixing a Newton basis. Repeated knots are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnotVector {
    knots: Vec<Rational>,
}

impl KnotVector {
    pub fn new(knots: Vec<Rational>) -> Self {
        KnotVector { knots }
    }

    pub fn zeros(n: usize) -> Self {
        KnotVector {
            knots: vec![Rational::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    /// `lambda_{i+1}` (zero-based index).
    pub fn get(&self, i: usize) -> &Rational {
        &self.knots[i]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.knots
    }

    pub fn prefix(&self, n: usize) -> KnotVector {
        assert!(n <= self.knots.len(), "prefix longer than knot vector");
        KnotVector {
            knots: self.knots[..n].to_vec(),
        }
    }
}

/// Polynomial in the Newton basis over its own knot vector: coefficient `i`
/// multiplies `B_i`. Always stores exactly `knots.len() + 1` coefficients;
/// trailing zeros are meaningful padding, not trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPoly {
    knots: KnotVector,
    coeffs: Vec<Rational>,
}

impl NewtonPoly {
    pub fn new(knots: KnotVector, coeffs: Vec<Rational>) -> Result<Self, PolyError> {
        if coeffs.len() != knots.len() + 1 {
            return Err(PolyError::CoeffCount {
                coeffs: coeffs.len(),
                knots: knots.len(),
            });
        }
        Ok(NewtonPoly { knots, coeffs })
    }

    pub fn zero(knots: KnotVector) -> Self {
        let coeffs = vec![Rational::zero(); knots.len() + 1];
        NewtonPoly { knots, coeffs }
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of the top basis element `B_n`; equals the power-basis
    /// leading coefficient when the polynomial has full degree.
    pub fn top_coeff(&self) -> &Rational {
        self.coeffs.last().expect("nonempty coefficients")
    }

    /// Largest `i` with a nonzero `B_i` coefficient; `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Generalized Horner evaluation, without basis conversion.
    pub fn eval(&self, r: &Rational) -> Rational {
        let n = self.knots.len();
        let mut acc = self.coeffs[n].clone();
        for i in (0..n).rev() {
            acc = acc * (r - self.knots.get(i)) + &self.coeffs[i];
        }
        acc
    }

    /// Expand into the power basis (Horner over the basis recursion).
    pub fn to_power(&self) -> PowerPoly {
        let n = self.knots.len();
        let mut acc = PowerPoly::constant(self.coeffs[n].clone());
        for i in (0..n).rev() {
            let factor = PowerPoly::new(vec![-self.knots.get(i).clone(), Rational::one()]);
            acc = &(&acc * &factor) + &PowerPoly::constant(self.coeffs[i].clone());
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> NewtonPoly {
        NewtonPoly {
            knots: self.knots.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// The basis polynomials `B_0, ..., B_k` over `knots`, expanded in the power
/// basis. Requires `knots.len() >= k`.
pub fn newton_basis(knots: &KnotVector, k: usize) -> Result<Vec<PowerPoly>, PolyError> {
    if knots.len() < k {
        return Err(PolyError::BasisTooSmall {
            needed: k,
            got: knots.len(),
        });
    }
    let mut out = Vec::with_capacity(k + 1);
    let mut b = PowerPoly::one();
    out.push(b.clone());
    for i in 0..k {
        b = &b * &PowerPoly::new(vec![-knots.get(i).clone(), Rational::one()]);
        out.push(b.clone());
    }
    Ok(out)
}

/// The `n x n` change-of-basis matrix `T` with `(B_0, ..., B_{n-1}) =
/// (x^0, ..., x^{n-1}) * T`; column `j` holds the power coefficients of
/// `B_j`. Unit upper triangular, so `det T = 1`. Requires
/// `knots.len() >= n - 1`.
pub fn transition_matrix(knots: &KnotVector, n: usize) -> Result<ScalarMatrix, PolyError> {
    if n == 0 {
        return Ok(ScalarMatrix::zero(0, 0));
    }
    let basis = newton_basis(knots, n - 1)?;
    Ok(ScalarMatrix::from_fn(n, n, |i, j| basis[j].coeff(i)))
}

/// All roots of `p` in the rationals, with multiplicity, provided `p` splits
/// completely; `None` otherwise. Uses the rational root bound on an
/// integer-scaled copy, deflating after every hit.
pub fn rational_roots(p: &PowerPoly) -> Option<Vec<Rational>> {
    let deg = p.degree()?;
    let mut roots = Vec::with_capacity(deg);
    let mut cur = p.clone();
    while cur.degree().is_some_and(|d| d >= 1) {
        // Zero roots first: strip factors of x.
        if cur.coeff(0).is_zero() {
            roots.push(Rational::zero());
            let (q, r) = cur.divmod(&PowerPoly::x()).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            cur = q;
            continue;
        }
        // Scale to integer coefficients with trivial content handling.
        let mut den = BigInt::one();
        for c in cur.coeffs() {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = cur
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let c0 = ints
            .first()
            .expect("nonzero constant term")
            .magnitude()
            .clone();
        let cn = ints.last().expect("nonzero leading").magnitude().clone();
        let mut found = None;
        'search: for pnum in divisors(&BigInt::from_biguint(num::bigint::Sign::Plus, c0)) {
            for qden in divisors(&BigInt::from_biguint(num::bigint::Sign::Plus, cn.clone())) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(&pnum * BigInt::from(sign), qden.clone());
                    if cur.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let root = found?;
        let lin = PowerPoly::new(vec![-root.clone(), Rational::one()]);
        let (q, r) = cur.divmod(&lin).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        roots.push(root);
        cur = q;
    }
    Some(roots)
}

/// Positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
