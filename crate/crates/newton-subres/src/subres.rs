//! Subresultants of a polynomial system in a Newton basis.
//!
//! A system is `F = (F0, F1, ..., Ft)` with `d0 = deg F0` maximal; `F0` is
//! carried in the Newton basis over a knot vector of length `d0`, the other
//! members in the power basis. For a multi-index `delta` with
//! `|delta| <= d0`, the subresultant `S_delta(F)` is computed two ways:
//!
//! - [`sres`]: sign and power of the leading coefficient times the
//!   determinantal polynomial of the companion subresultant matrix `N`,
//!   yielding the result directly in the same Newton basis;
//! - [`sres_single_det`]: one determinant of `N` stacked over a bidiagonal
//!   polynomial block, evaluated by interpolation.
//!
//! Both agree exactly; the second serves as an internal cross-check and the
//! first exposes the coefficients as minors.

use num::{One, Zero};
use thiserror::Error;

use crate::algebra::{
    det_exact, det_polymatrix, mat_poly_eval, rational_pow, PolyMatrix, Rational, ScalarMatrix,
};
use crate::companion::companion_matrix;
use crate::poly::{KnotVector, NewtonPoly, PowerPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubresError {
    #[error("|delta| = {total} exceeds d0 = {d0}")]
    IndexOutOfRange { total: usize, d0: usize },
    #[error("delta is identically zero: the subresultant matrix is empty")]
    NullDelta,
    #[error("delta length {got} does not match system arity {expected}")]
    Arity { got: usize, expected: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("family member {index} is not an exact multiple of its predecessor")]
    InvalidBasis { index: usize },
    #[error("invalid polynomial system: {0}")]
    System(String),
}

/// The input system. `F0` fixes the basis; all other members are plain
/// power-basis polynomials (they need not be re-expressed over the knots).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    f0: NewtonPoly,
    others: Vec<PowerPoly>,
    degrees: Vec<usize>,
}

impl PolySystem {
    /// `f0` must have full degree over its knots (nonzero top coefficient)
    /// and dominate every other degree.
    pub fn new(f0: NewtonPoly, others: Vec<PowerPoly>) -> Result<Self, SubresError> {
        if others.is_empty() {
            return Err(SubresError::System("need at least two polynomials".into()));
        }
        let d0 = f0.knots().len();
        if f0.top_coeff().is_zero() {
            return Err(SubresError::System(
                "F0 must have a nonzero top coefficient".into(),
            ));
        }
        let mut degrees = vec![d0];
        for (i, fi) in others.iter().enumerate() {
            let di = fi
                .degree()
                .ok_or_else(|| SubresError::System(format!("polynomial {} is zero", i + 1)))?;
            if di > d0 {
                return Err(SubresError::System(format!(
                    "deg F{} = {} exceeds deg F0 = {}",
                    i + 1,
                    di,
                    d0
                )));
            }
            degrees.push(di);
        }
        Ok(PolySystem {
            f0,
            others,
            degrees,
        })
    }

    /// Convert a power-basis `f0` onto `knots` (which must have exactly
    /// `deg f0` entries) and build the system.
    pub fn from_power(
        f0: PowerPoly,
        others: Vec<PowerPoly>,
        knots: KnotVector,
    ) -> Result<Self, SubresError> {
        let d0 = f0
            .degree()
            .ok_or_else(|| SubresError::System("F0 is zero".into()))?;
        if knots.len() != d0 {
            return Err(SubresError::System(format!(
                "knot vector length {} must equal deg F0 = {}",
                knots.len(),
                d0
            )));
        }
        let nf0 = f0.to_newton(&knots).expect("knot count equals the degree");
        Self::new(nf0, others)
    }

    pub fn f0(&self) -> &NewtonPoly {
        &self.f0
    }

    pub fn others(&self) -> &[PowerPoly] {
        &self.others
    }

    /// `(d0, d1, ..., dt)`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn d0(&self) -> usize {
        self.degrees[0]
    }

    /// Number of trailing polynomials `t`.
    pub fn arity(&self) -> usize {
        self.others.len()
    }

    pub fn knots(&self) -> &KnotVector {
        self.f0.knots()
    }

    /// Leading coefficient of `F0`.
    pub fn lead(&self) -> &Rational {
        self.f0.top_coeff()
    }

    pub fn delta(&self, delta: &[usize]) -> Result<DeltaIndex, SubresError> {
        delta_params(&self.degrees, delta)
    }
}

/// A multi-index `delta` together with its derived parameters: the exponent
/// `delta0` applied to the leading coefficient and the result degree bound
/// `eps = d0 - |delta|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaIndex {
    delta: Vec<usize>,
    delta0: i64,
    eps: usize,
}

impl DeltaIndex {
    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn delta0(&self) -> i64 {
        self.delta0
    }

    pub fn eps(&self) -> usize {
        self.eps
    }

    pub fn total(&self) -> usize {
        self.delta.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(|&d| d == 0)
    }
}

/// Derive `delta0 = max(d_i + delta_i - d0, 1 - |delta|)` and
/// `eps = d0 - |delta|` from the degree list `(d0, ..., dt)`.
pub fn delta_params(degrees: &[usize], delta: &[usize]) -> Result<DeltaIndex, SubresError> {
    if degrees.len() != delta.len() + 1 {
        return Err(SubresError::Arity {
            got: delta.len(),
            expected: degrees.len().saturating_sub(1),
        });
    }
    let d0 = degrees[0];
    let total: usize = delta.iter().sum();
    if total > d0 {
        return Err(SubresError::IndexOutOfRange { total, d0 });
    }
    let mut delta0 = 1 - total as i64;
    for (di, de) in degrees[1..].iter().zip(delta) {
        delta0 = delta0.max(*di as i64 + *de as i64 - d0 as i64);
    }
    Ok(DeltaIndex {
        delta: delta.to_vec(),
        delta0,
        eps: d0 - total,
    })
}

/// The subresultant matrix: `|delta| x d0`, stacking for each `i` the
/// transposed first `delta_i` columns of `F_i(L/a)`, where `L/a` is the
/// reduced companion matrix of `F0`.
pub fn build_n(sys: &PolySystem, delta: &DeltaIndex) -> Result<ScalarMatrix, SubresError> {
    check_delta(sys, delta)?;
    if delta.is_zero() {
        return Err(SubresError::NullDelta);
    }
    let comp = companion_matrix(sys.f0()).expect("d0 >= 1 since |delta| >= 1");
    let reduced = comp.reduced();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(delta.total());
    for (fi, &di) in sys.others().iter().zip(delta.delta()) {
        if di == 0 {
            continue;
        }
        let fi_m = mat_poly_eval(fi, reduced).expect("square matrix");
        for j in 0..di {
            rows.push(fi_m.column(j));
        }
    }
    Ok(ScalarMatrix::from_rows(rows))
}

fn check_delta(sys: &PolySystem, delta: &DeltaIndex) -> Result<(), SubresError> {
    if delta.delta().len() != sys.arity() {
        return Err(SubresError::Arity {
            got: delta.delta().len(),
            expected: sys.arity(),
        });
    }
    if delta.total() > sys.d0() {
        return Err(SubresError::IndexOutOfRange {
            total: delta.total(),
            d0: sys.d0(),
        });
    }
    Ok(())
}

/// Determinantal polynomial of a wide matrix against the Newton basis
/// `B_0, ..., B_k` over `knots`: the coefficient of `B_i` is the minor on
/// column `i` followed by the trailing `n - k - 1` columns. `m` must have
/// `n` columns and `n - k` rows.
pub fn detp(m: &ScalarMatrix, knots: &KnotVector, k: usize) -> Result<NewtonPoly, SubresError> {
    let coeffs = detp_minors(m, k)?;
    if knots.len() < k {
        return Err(SubresError::Dimension(format!(
            "need {} knots for the basis, got {}",
            k,
            knots.len()
        )));
    }
    Ok(NewtonPoly::new(knots.prefix(k), coeffs).expect("lengths agree"))
}

/// Determinantal polynomial against an arbitrary family `P_0, ..., P_k`.
pub fn detp_family(m: &ScalarMatrix, family: &[PowerPoly]) -> Result<PowerPoly, SubresError> {
    assert!(!family.is_empty(), "family must contain P_0");
    let k = family.len() - 1;
    let coeffs = detp_minors(m, k)?;
    let mut acc = PowerPoly::zero();
    for (c, p) in coeffs.iter().zip(family) {
        acc = &acc + &p.scale(c);
    }
    Ok(acc)
}

fn detp_minors(m: &ScalarMatrix, k: usize) -> Result<Vec<Rational>, SubresError> {
    let n = m.cols();
    if k > n || m.rows() + k != n {
        return Err(SubresError::Dimension(format!(
            "matrix is {}x{}, expected {} rows for k = {}",
            m.rows(),
            m.cols(),
            n.saturating_sub(k),
            k
        )));
    }
    let mut coeffs = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut cols = Vec::with_capacity(n - k);
        cols.push(i);
        cols.extend(k + 1..n);
        let minor = m.select_columns(&cols);
        coeffs.push(det_exact(&minor).expect("square minor"));
    }
    Ok(coeffs)
}

/// The `eps x d0` bidiagonal block with `x - l_s` on the diagonal and `-1`
/// beside it, used to fold a determinantal polynomial over a Newton basis
/// into a single determinant. `eps = 0` gives an empty block.
pub fn build_x_newton(
    knots: &KnotVector,
    eps: usize,
    d0: usize,
) -> Result<PolyMatrix, SubresError> {
    if eps > 0 && eps >= d0 {
        return Err(SubresError::Dimension(format!(
            "block needs eps < d0, got eps = {} with d0 = {}",
            eps, d0
        )));
    }
    if knots.len() < eps {
        return Err(SubresError::Dimension(format!(
            "need {} knots, got {}",
            eps,
            knots.len()
        )));
    }
    Ok(PolyMatrix::from_fn(eps, d0, |s, j| {
        if j == s {
            PowerPoly::new(vec![-knots.get(s).clone(), Rational::one()])
        } else if j == s + 1 {
            PowerPoly::constant(-Rational::one())
        } else {
            PowerPoly::zero()
        }
    }))
}

/// Same block for an arbitrary family `P_0, ..., P_k`: row `s` carries the
/// exact ratio `P_s / P_{s-1}` on the diagonal. Families whose consecutive
/// ratios are not polynomials are rejected.
pub fn build_x_family(family: &[PowerPoly], n: usize) -> Result<PolyMatrix, SubresError> {
    assert!(!family.is_empty(), "family must contain P_0");
    let k = family.len() - 1;
    if k > 0 && k >= n {
        return Err(SubresError::Dimension(format!(
            "block needs k < n, got k = {} with n = {}",
            k, n
        )));
    }
    let mut ratios = Vec::with_capacity(k);
    for s in 1..=k {
        let (q, r) = family[s]
            .divmod(&family[s - 1])
            .map_err(|_| SubresError::InvalidBasis { index: s })?;
        if !r.is_zero() {
            return Err(SubresError::InvalidBasis { index: s });
        }
        ratios.push(q);
    }
    Ok(PolyMatrix::from_fn(k, n, |s, j| {
        if j == s {
            ratios[s].clone()
        } else if j == s + 1 {
            PowerPoly::constant(-Rational::one())
        } else {
            PowerPoly::zero()
        }
    }))
}

/// A subresultant in the Newton basis over the first `eps` knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubresultantResult {
    /// `S_delta`, expressed over the knot prefix of length `eps`.
    pub poly: NewtonPoly,
    /// The principal coefficient `s_delta`: the coefficient of `B_eps`
    /// (equivalently of `x^eps`). Zero exactly when the true degree drops
    /// below `eps`.
    pub leading: Rational,
    pub delta: DeltaIndex,
    /// The parity factor `(-1)^((d0-1)*eps)` applied in front of the minors.
    pub sign: i64,
}

fn parity_sign(d0: usize, eps: usize) -> i64 {
    if ((d0.max(1) - 1) * eps).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn zero_delta_result(sys: &PolySystem, delta: &DeltaIndex) -> SubresultantResult {
    // Empty matrix case: S is F0 scaled by a^(delta0 - 1).
    let factor = rational_pow(sys.lead(), delta.delta0() - 1);
    let poly = sys.f0().scale(&factor);
    let leading = poly.top_coeff().clone();
    SubresultantResult {
        poly,
        leading,
        delta: delta.clone(),
        sign: parity_sign(sys.d0(), delta.eps()),
    }
}

/// `S_delta(F)` via the determinantal polynomial of the subresultant matrix,
/// in the Newton basis of the system.
pub fn sres(sys: &PolySystem, delta: &DeltaIndex) -> Result<SubresultantResult, SubresError> {
    check_delta(sys, delta)?;
    if delta.is_zero() {
        return Ok(zero_delta_result(sys, delta));
    }
    let n_mat = build_n(sys, delta)?;
    let dp = detp(&n_mat, sys.knots(), delta.eps())?;
    let sign = parity_sign(sys.d0(), delta.eps());
    let mut factor = rational_pow(sys.lead(), delta.delta0());
    if sign < 0 {
        factor = -factor;
    }
    let poly = dp.scale(&factor);
    let leading = poly.coeffs()[delta.eps()].clone();
    Ok(SubresultantResult {
        poly,
        leading,
        delta: delta.clone(),
        sign,
    })
}

/// `S_delta(F)` as `a^delta0` times the single determinant of the
/// subresultant matrix stacked over the bidiagonal block. Agrees exactly
/// with [`sres`].
pub fn sres_single_det(
    sys: &PolySystem,
    delta: &DeltaIndex,
) -> Result<SubresultantResult, SubresError> {
    check_delta(sys, delta)?;
    if delta.is_zero() {
        return Ok(zero_delta_result(sys, delta));
    }
    let n_mat = build_n(sys, delta)?;
    let x_block = build_x_newton(sys.knots(), delta.eps(), sys.d0())?;
    let d0 = sys.d0();
    let stacked = PolyMatrix::from_fn(d0, d0, |i, j| {
        if i < n_mat.rows() {
            PowerPoly::constant(n_mat.at(i, j).clone())
        } else {
            x_block.at(i - n_mat.rows(), j).clone()
        }
    });
    let det = det_polymatrix(&stacked, delta.eps()).expect("square stack");
    let power = det.scale(&rational_pow(sys.lead(), delta.delta0()));
    let poly = power
        .to_newton(&sys.knots().prefix(delta.eps()))
        .expect("degree bounded by eps");
    let leading = poly.coeffs()[delta.eps()].clone();
    Ok(SubresultantResult {
        poly,
        leading,
        delta: delta.clone(),
        sign: parity_sign(sys.d0(), delta.eps()),
    })
}

/// The principal coefficient `s_delta` alone: one minor instead of the full
/// determinantal polynomial.
pub fn leading_coeff_sres(sys: &PolySystem, delta: &DeltaIndex) -> Result<Rational, SubresError> {
    check_delta(sys, delta)?;
    if delta.is_zero() {
        return Ok(sys.lead() * rational_pow(sys.lead(), delta.delta0() - 1));
    }
    let n_mat = build_n(sys, delta)?;
    let cols: Vec<usize> = (delta.eps()..sys.d0()).collect();
    let minor = det_exact(&n_mat.select_columns(&cols)).expect("square minor");
    let mut factor = rational_pow(sys.lead(), delta.delta0());
    if parity_sign(sys.d0(), delta.eps()) < 0 {
        factor = -factor;
    }
    Ok(minor * factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::poly::newton_basis;

    fn worked_system() -> PolySystem {
        // F0 = (x-1)(x-2) over knots (1, 2); F1 = x - 1
        let knots = KnotVector::new(vec![rat(1), rat(2)]);
        PolySystem::from_power(
            PowerPoly::from_ints(&[2, -3, 1]),
            vec![PowerPoly::from_ints(&[-1, 1])],
            knots,
        )
        .unwrap()
    }

    #[test]
    fn delta_params_examples() {
        let d = delta_params(&[4, 3, 2], &[2, 1]).unwrap();
        assert_eq!((d.delta0(), d.eps()), (1, 1));
        let d = delta_params(&[2, 1], &[1]).unwrap();
        assert_eq!((d.delta0(), d.eps()), (0, 1));
        let d = delta_params(&[4, 3, 2], &[0, 0]).unwrap();
        assert_eq!((d.delta0(), d.eps()), (1, 4));
        assert_eq!(
            delta_params(&[2, 1], &[3]),
            Err(SubresError::IndexOutOfRange { total: 3, d0: 2 })
        );
    }

    #[test]
    fn build_n_worked_example() {
        let sys = worked_system();
        let delta = sys.delta(&[1]).unwrap();
        let n = build_n(&sys, &delta).unwrap();
        assert_eq!((n.rows(), n.cols()), (1, 2));
        assert_eq!(n.row(0), &[rat(0), rat(1)]);
    }

    #[test]
    fn build_n_identity_case() {
        // t = 1, delta_1 = d0, F1 = 1: F1 evaluates to the identity.
        let knots = KnotVector::new(vec![rat(3), rat(-2)]);
        let sys = PolySystem::from_power(
            PowerPoly::from_ints(&[6, -1, 1]),
            vec![PowerPoly::one()],
            knots,
        )
        .unwrap();
        let delta = sys.delta(&[2]).unwrap();
        assert_eq!(build_n(&sys, &delta).unwrap(), ScalarMatrix::identity(2));
    }

    #[test]
    fn build_n_rejects_zero_delta() {
        let sys = worked_system();
        let delta = sys.delta(&[0]).unwrap();
        assert_eq!(build_n(&sys, &delta), Err(SubresError::NullDelta));
    }

    #[test]
    fn detp_examples() {
        let knots = KnotVector::new(vec![rat(1), rat(2)]);
        let m = ScalarMatrix::from_rows(vec![vec![rat(0), rat(1)]]);
        let p = detp(&m, &knots, 1).unwrap();
        assert_eq!(p.to_power(), PowerPoly::from_ints(&[-1, 1]));

        // k = 0: plain determinant times B_0
        let sq = ScalarMatrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]]);
        let p = detp(&sq, &knots, 0).unwrap();
        assert_eq!(p.to_power(), PowerPoly::one());
    }

    #[test]
    fn build_x_examples() {
        let knots = KnotVector::new(vec![rat(1), rat(2)]);
        let x = build_x_newton(&knots, 1, 2).unwrap();
        assert_eq!(x.at(0, 0), &PowerPoly::from_ints(&[-1, 1]));
        assert_eq!(x.at(0, 1), &PowerPoly::from_ints(&[-1]));

        let empty = build_x_newton(&knots, 0, 4).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 4));

        // power family x^i: constant ratio x on the diagonal
        let fam: Vec<PowerPoly> = (0..=2).map(|i| PowerPoly::monomial(rat(1), i)).collect();
        let xf = build_x_family(&fam, 4).unwrap();
        assert_eq!(xf.at(0, 0), &PowerPoly::x());
        assert_eq!(xf.at(1, 1), &PowerPoly::x());
        assert_eq!(xf.at(1, 2), &PowerPoly::from_ints(&[-1]));
        assert_eq!(xf.at(0, 3), &PowerPoly::zero());
    }

    #[test]
    fn detp_rejects_bad_shapes() {
        let knots = KnotVector::new(vec![rat(1), rat(2)]);
        let wide = ScalarMatrix::from_rows(vec![vec![rat(1), rat(2), rat(3)]]);
        // 1x3 needs k = 2, not k = 1
        assert!(matches!(
            detp(&wide, &knots, 1),
            Err(SubresError::Dimension(_))
        ));
        // basis shorter than k
        let short = KnotVector::new(vec![rat(1)]);
        assert!(matches!(
            detp(&wide, &short, 2),
            Err(SubresError::Dimension(_))
        ));
    }

    #[test]
    fn build_x_rejects_non_multiplicative_family() {
        let fam = vec![PowerPoly::from_ints(&[0, 1]), PowerPoly::from_ints(&[1, 1])];
        assert_eq!(
            build_x_family(&fam, 3),
            Err(SubresError::InvalidBasis { index: 1 })
        );
    }

    #[test]
    fn sres_worked_example() {
        let sys = worked_system();
        let delta = sys.delta(&[1]).unwrap();
        let s = sres(&sys, &delta).unwrap();
        assert_eq!(s.sign, -1);
        assert_eq!(s.leading, rat(-1));
        assert_eq!(s.poly.to_power(), PowerPoly::from_ints(&[1, -1])); // -(x-1)
        assert_eq!(s.poly.coeffs(), &[rat(0), rat(-1)]);
    }

    #[test]
    fn sres_zero_delta_is_f0() {
        let sys = worked_system();
        let delta = sys.delta(&[0]).unwrap();
        let s = sres(&sys, &delta).unwrap();
        assert_eq!(s.poly, sys.f0().clone());
        assert_eq!(s.leading, rat(1));
        assert_eq!(s.sign, 1);
    }

    #[test]
    fn single_det_matches_minor_route() {
        let sys = worked_system();
        for d in [[0usize], [1], [2]] {
            let delta = sys.delta(&d).unwrap();
            assert_eq!(
                sres(&sys, &delta).unwrap(),
                sres_single_det(&sys, &delta).unwrap()
            );
        }
    }

    #[test]
    fn leading_coeff_examples() {
        let sys = worked_system();
        assert_eq!(
            leading_coeff_sres(&sys, &sys.delta(&[1]).unwrap()).unwrap(),
            rat(-1)
        );
        // shared root: the full resultant vanishes
        assert_eq!(
            leading_coeff_sres(&sys, &sys.delta(&[2]).unwrap()).unwrap(),
            rat(0)
        );
        // zero delta: leading coefficient of F0 itself
        assert_eq!(
            leading_coeff_sres(&sys, &sys.delta(&[0]).unwrap()).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn leading_coeff_agrees_with_full_result() {
        let knots = KnotVector::new(vec![rat(0), rat(1), rat(-1), rat(2)]);
        let sys = PolySystem::from_power(
            PowerPoly::from_ints(&[3, -1, 2, 0, 1]),
            vec![
                PowerPoly::from_ints(&[1, 4, 1]),
                PowerPoly::from_ints(&[-2, 1]),
            ],
            knots,
        )
        .unwrap();
        for d in [[1usize, 0], [0, 1], [2, 1], [3, 1], [1, 1], [2, 0]] {
            let delta = sys.delta(&d).unwrap();
            assert_eq!(
                leading_coeff_sres(&sys, &delta).unwrap(),
                sres(&sys, &delta).unwrap().leading,
                "delta = {:?}",
                d
            );
        }
    }

    #[test]
    fn detp_coefficients_are_minors() {
        // The B_j coefficient of the scaled result equals the minor on
        // column j, trailing columns appended.
        let sys = worked_system();
        let delta = sys.delta(&[1]).unwrap();
        let n = build_n(&sys, &delta).unwrap();
        let s = sres(&sys, &delta).unwrap();
        let basis = newton_basis(sys.knots(), delta.eps()).unwrap();
        assert_eq!(basis.len(), delta.eps() + 1);
        for j in 0..=delta.eps() {
            let mut cols = vec![j];
            cols.extend(delta.eps() + 1..sys.d0());
            let minor = det_exact(&n.select_columns(&cols)).unwrap();
            let scaled = minor * rational_pow(sys.lead(), delta.delta0()) * rat(s.sign);
            assert_eq!(s.poly.coeffs()[j], scaled);
        }
    }

    #[test]
    fn degree_bound_holds() {
        let sys = worked_system();
        for d in [[0usize], [1], [2]] {
            let delta = sys.delta(&d).unwrap();
            let s = sres(&sys, &delta).unwrap();
            if let Some(deg) = s.poly.to_power().degree() {
                assert!(deg <= delta.eps());
            }
        }
    }

    #[test]
    fn system_validation() {
        // F0 degree must dominate
        let knots = KnotVector::new(vec![rat(0)]);
        let err = PolySystem::from_power(
            PowerPoly::from_ints(&[1, 1]),
            vec![PowerPoly::from_ints(&[1, 0, 1])],
            knots,
        );
        assert!(matches!(err, Err(SubresError::System(_))));

        let err = PolySystem::from_power(
            PowerPoly::from_ints(&[1, 1]),
            vec![PowerPoly::zero()],
            KnotVector::new(vec![rat(0)]),
        );
        assert!(matches!(err, Err(SubresError::System(_))));
    }
}
