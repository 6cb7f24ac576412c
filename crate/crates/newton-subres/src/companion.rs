//! Generalized companion matrix of a polynomial in a Newton basis.
//!
//! For `P = p_n*B_n + ... + p_0*B_0` of degree `n >= 1` over knots
//! `(l1, ..., ln)`, the companion matrix represents multiplication by
//! `p_n * x` on polynomials of degree below `n`, modulo `P`, in the basis
//! `(B_0, ..., B_{n-1})`. It is `scale * matrix` with `scale = p_n` and
//! `matrix` lower bidiagonal plus a last column:
//! knots on the diagonal, ones on the subdiagonal, `-p_i/p_n` in the last
//! column, and `l_n - p_{n-1}/p_n` in the corner.

use num::{One, Zero};
use thiserror::Error;

use crate::algebra::{mat_poly_eval, Rational, ScalarMatrix};
use crate::poly::{newton_basis, KnotVector, NewtonPoly, PowerPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompanionError {
    #[error("polynomial must have degree >= 1 with a nonzero top coefficient")]
    Degree,
}

/// The companion matrix, stored as the pair `(scale, matrix)` with the top
/// coefficient factored out, so `full() = scale * matrix`. Consumers that
/// need the matrix divided by the leading coefficient read `reduced()`
/// directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix {
    matrix: ScalarMatrix,
    scale: Rational,
    knots: KnotVector,
}

impl CompanionMatrix {
    /// The factor with the leading coefficient divided out.
    pub fn reduced(&self) -> &ScalarMatrix {
        &self.matrix
    }

    /// The leading coefficient `p_n`.
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    /// `scale * matrix`.
    pub fn full(&self) -> ScalarMatrix {
        self.matrix.scale(&self.scale)
    }
}

pub fn companion_matrix(p: &NewtonPoly) -> Result<CompanionMatrix, CompanionError> {
    let n = p.knots().len();
    let coeffs = p.coeffs();
    let lead = &coeffs[n];
    if n == 0 || lead.is_zero() {
        return Err(CompanionError::Degree);
    }
    let mut m = ScalarMatrix::zero(n, n);
    for (i, c) in coeffs.iter().take(n - 1).enumerate() {
        m.set(i, i, p.knots().get(i).clone());
        m.set(i + 1, i, Rational::one());
        m.set(i, n - 1, -(c / lead));
    }
    m.set(n - 1, n - 1, p.knots().get(n - 1) - &coeffs[n - 1] / lead);
    Ok(CompanionMatrix {
        matrix: m,
        scale: lead.clone(),
        knots: p.knots().clone(),
    })
}

/// The defect of the companion matrix as a multiplication map before
/// reduction: the row vector `p_n*x*(B_0, ..., B_{n-1}) - (B_0, ..., B_{n-1}) * L`
/// where `L = full()`. Every entry is zero except the last, which equals `P`
/// itself.
pub fn mult_defect(p: &NewtonPoly) -> Result<Vec<PowerPoly>, CompanionError> {
    let comp = companion_matrix(p)?;
    let n = comp.order();
    let lam = comp.full();
    let basis = newton_basis(p.knots(), n - 1).expect("enough knots");
    let scale_x = PowerPoly::new(vec![Rational::zero(), comp.scale().clone()]);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = &scale_x * &basis[j];
        for (i, b) in basis.iter().enumerate() {
            acc = &acc - &b.scale(lam.at(i, j));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Entries of `(B_0, ..., B_{n-1}) * Q(L/p_n) - Q * (B_0, ..., B_{n-1})`.
/// Every entry reduces to zero modulo `P`: evaluating `Q` at the reduced
/// companion matrix acts as multiplication by `Q` up to multiples of `P`.
pub fn modular_defect(p: &NewtonPoly, q: &PowerPoly) -> Result<Vec<PowerPoly>, CompanionError> {
    let comp = companion_matrix(p)?;
    let n = comp.order();
    let qm = mat_poly_eval(q, comp.reduced()).expect("square matrix");
    let basis = newton_basis(p.knots(), n - 1).expect("enough knots");
    let p_power = p.to_power();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = -&(q * &basis[j]);
        for (i, b) in basis.iter().enumerate() {
            acc = &acc + &b.scale(qm.at(i, j));
        }
        debug_assert!(acc.is_divisible_by(&p_power));
        out.push(acc);
    }
    Ok(out)
}
