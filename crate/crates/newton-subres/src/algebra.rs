//! Exact scalar arithmetic and dense exact linear algebra.
//!
//! Everything here is over the field of arbitrary-precision rationals.
//! Determinants of scalar matrices are computed fraction-free: each row is
//! scaled to integers, the integer matrix goes through Bareiss elimination,
//! and the cleared factor is divided back out at the end. Determinants of
//! matrices with polynomial entries are computed by evaluating at enough
//! rational points and interpolating.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use thiserror::Error;

use crate::poly::{KnotVector, NewtonPoly, PowerPoly};

/// The coefficient field: arbitrary-precision rationals. Values are kept in
/// canonical form (reduced, positive denominator) by construction.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` with a possibly negative exponent. Panics on `0^negative`.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    assert!(
        !base.is_zero() || exp > 0,
        "zero base with negative exponent"
    );
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        ScalarMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        ScalarMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ScalarMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// New matrix keeping the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> ScalarMatrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self.at(i, cols[j]).clone())
    }

    pub fn mul(&self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * rhs.at(k, j);
            }
            acc
        })
    }

    pub fn scale(&self, c: &Rational) -> ScalarMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// `self + c * I`; requires a square matrix.
    pub fn add_scaled_identity(&self, c: &Rational) -> ScalarMatrix {
        assert!(self.is_square(), "not square");
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.at(i, i) + c;
            out.set(i, i, v);
        }
        out
    }
}

/// Exact determinant by row denominator clearing plus fraction-free
/// (Bareiss) elimination over the integers. The 0x0 determinant is 1.
pub fn det_exact(m: &ScalarMatrix) -> Result<Rational, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    // Scale each row to integers, remembering the product of the factors.
    let mut cleared = BigInt::one();
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = BigInt::one();
        for v in m.row(i) {
            l = l.lcm(v.denom());
        }
        let row: Vec<BigInt> = m
            .row(i)
            .iter()
            .map(|v| v.numer() * (&l / v.denom()))
            .collect();
        cleared *= l;
        work.push(row);
    }
    let det = bareiss_det(work);
    Ok(Rational::new(det, cleared))
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negated = !negated;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Exact division: the 2x2-minor update stays integral.
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Dense row-major matrix of power-basis polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PowerPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<PowerPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<PowerPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> PowerPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &PowerPoly {
        &self.entries[i * self.cols + j]
    }

    /// Evaluate every entry at `x = r`.
    pub fn eval(&self, r: &Rational) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).eval(r))
    }
}

/// Distinct small-integer sample points `0, 1, -1, 2, -2, ...`.
fn sample_points(count: usize) -> Vec<Rational> {
    let mut pts = Vec::with_capacity(count);
    let mut k: i64 = 0;
    pts.push(rat(0));
    while pts.len() < count {
        k += 1;
        pts.push(rat(k));
        if pts.len() < count {
            pts.push(rat(-k));
        }
    }
    pts.truncate(count);
    pts
}

/// Interpolate the unique polynomial of degree < `xs.len()` through the
/// given points, by divided differences. The sample points must be distinct.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> PowerPoly {
    let n = xs.len();
    assert_eq!(n, ys.len());
    if n == 0 {
        return PowerPoly::zero();
    }
    let mut c: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &c[i] - &c[i - 1];
            let den = &xs[i] - &xs[i - j];
            c[i] = num / den;
        }
    }
    let knots = KnotVector::new(xs[..n - 1].to_vec());
    NewtonPoly::new(knots, c)
        .expect("consistent lengths")
        .to_power()
}

/// Exact determinant of a polynomial matrix whose true determinant degree is
/// at most `degree_bound`, by evaluation at `degree_bound + 1` points and
/// interpolation.
pub fn det_polymatrix(m: &PolyMatrix, degree_bound: usize) -> Result<PowerPoly, MatrixError> {
    if m.rows != m.cols {
        return Err(MatrixError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(PowerPoly::one());
    }
    let xs = sample_points(degree_bound + 1);
    let mut ys = Vec::with_capacity(xs.len());
    for x in &xs {
        ys.push(det_exact(&m.eval(x))?);
    }
    Ok(interpolate(&xs, &ys))
}

/// Evaluate the polynomial `q` at the square matrix `m` by Horner's scheme:
/// `q_k*M^k + ... + q_1*M + q_0*I`.
pub fn mat_poly_eval(q: &PowerPoly, m: &ScalarMatrix) -> Result<ScalarMatrix, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let coeffs = q.coeffs();
    if coeffs.is_empty() {
        return Ok(ScalarMatrix::zero(n, n));
    }
    let mut acc = ScalarMatrix::identity(n).scale(&coeffs[coeffs.len() - 1]);
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(m).add_scaled_identity(c);
    }
    Ok(acc)
}
