//! Root-based reference computations and planted test instances.
//!
//! When `F0` splits with pairwise distinct roots, `S_delta(F)` has a direct
//! formula: a block determinant over the roots divided by a Vandermonde-type
//! determinant. That route never touches companion matrices or minors, so it
//! serves as ground truth for the production path. Planted systems
//! `F_i = G * C_i` with a known common factor and known roots drive the
//! gcd-recovery checks.

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{
    det_exact, det_polymatrix, rat, ratio, rational_pow, PolyMatrix, Rational, ScalarMatrix,
};
use crate::gcdsolve::{gcd_via_sres, glex_enumerate, icdeg_direct};
use crate::poly::{newton_basis, KnotVector, NewtonPoly, PowerPoly};
use crate::subres::{sres, sres_single_det, DeltaIndex, PolySystem, SubresError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("roots must be pairwise distinct for the root-based formulas")]
    RepeatedRoots,
    #[error("roots do not reproduce F0")]
    RootMismatch,
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    System(#[from] SubresError),
}

fn param(msg: impl Into<String>) -> OracleError {
    OracleError::Parameter(msg.into())
}

/// A system whose `F0` is certified to split as `lead * prod (x - root_i)`
/// with pairwise distinct rational roots.
#[derive(Debug, Clone)]
pub struct RootedSystem {
    system: PolySystem,
    roots: Vec<Rational>,
    lead: Rational,
}

impl RootedSystem {
    pub fn new(system: PolySystem, roots: Vec<Rational>) -> Result<Self, OracleError> {
        if roots.len() != system.d0() {
            return Err(param(format!(
                "expected {} roots, got {}",
                system.d0(),
                roots.len()
            )));
        }
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[i] == roots[j] {
                    return Err(OracleError::RepeatedRoots);
                }
            }
        }
        let lead = system.lead().clone();
        if PowerPoly::from_roots(&lead, &roots) != system.f0().to_power() {
            return Err(OracleError::RootMismatch);
        }
        Ok(RootedSystem {
            system,
            roots,
            lead,
        })
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn lead(&self) -> &Rational {
        &self.lead
    }
}

/// `prod_{i<j} (roots[j] - roots[i])` by the closed-form product; zero when
/// roots repeat.
pub fn vandermonde_det(roots: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 1..roots.len() {
        for i in 0..j {
            acc *= &roots[j] - &roots[i];
        }
    }
    acc
}

/// Powers-of-roots block determinant for `S_delta`, in the power basis:
/// `delta_i` rows `alpha^j * F_i(alpha)` per trailing polynomial, then
/// `eps` rows `alpha^j * (x - alpha)`, divided by the Vandermonde
/// determinant and scaled by `lead^{delta0}`.
pub fn sres_roots_power(
    rooted: &RootedSystem,
    delta: &DeltaIndex,
) -> Result<PowerPoly, OracleError> {
    let weights = |c: usize, j: usize, powers: &[Vec<Rational>]| powers[c][j].clone();
    let det = roots_block_det(rooted, delta, weights)?;
    let denom = vandermonde_det(&rooted.roots);
    debug_assert!(!denom.is_zero());
    Ok(det.scale(&(rational_pow(&rooted.lead, delta.delta0()) / denom)))
}

/// Same block determinant with Newton basis values `B_j(alpha)` as row
/// weights, divided by the determinant of the basis-value matrix. Returns
/// the result over the first `eps` knots; equal to [`sres_roots_power`]
/// after expansion, for every knot vector.
pub fn sres_roots_newton(
    rooted: &RootedSystem,
    delta: &DeltaIndex,
    knots: &KnotVector,
) -> Result<NewtonPoly, OracleError> {
    let d0 = rooted.system.d0();
    if knots.len() != d0 {
        return Err(param(format!(
            "expected a knot vector of length {}, got {}",
            d0,
            knots.len()
        )));
    }
    // basis_values[c][j] = B_j(roots[c])
    let basis = newton_basis(knots, d0.saturating_sub(1)).expect("enough knots");
    let basis_values: Vec<Vec<Rational>> = rooted
        .roots
        .iter()
        .map(|r| basis.iter().map(|b| b.eval(r)).collect())
        .collect();
    let weights = |c: usize, j: usize, _powers: &[Vec<Rational>]| basis_values[c][j].clone();
    let det = roots_block_det(rooted, delta, weights)?;
    let denom_matrix = ScalarMatrix::from_fn(d0, d0, |j, c| basis_values[c][j].clone());
    let denom = det_exact(&denom_matrix).expect("square");
    debug_assert!(!denom.is_zero());
    let power = det.scale(&(rational_pow(&rooted.lead, delta.delta0()) / denom));
    Ok(power
        .to_newton(&knots.prefix(delta.eps()))
        .expect("degree bounded by eps"))
}

/// Shared block-determinant builder; `weight(c, j, powers)` supplies the
/// basis value attached to root `c` in block row `j`.
fn roots_block_det(
    rooted: &RootedSystem,
    delta: &DeltaIndex,
    weight: impl Fn(usize, usize, &[Vec<Rational>]) -> Rational,
) -> Result<PowerPoly, OracleError> {
    let sys = &rooted.system;
    if delta.delta().len() != sys.arity() {
        return Err(param("delta length does not match the system"));
    }
    if delta.total() > sys.d0() {
        return Err(param("|delta| exceeds d0"));
    }
    let d0 = sys.d0();
    let eps = delta.eps();
    // powers[c][j] = roots[c]^j, up to the largest exponent any row needs.
    let max_pow = delta.delta().iter().copied().max().unwrap_or(0).max(eps) + 1;
    let powers: Vec<Vec<Rational>> = rooted
        .roots
        .iter()
        .map(|r| {
            let mut row = Vec::with_capacity(max_pow + 1);
            let mut acc = Rational::one();
            for _ in 0..=max_pow {
                row.push(acc.clone());
                acc *= r;
            }
            row
        })
        .collect();
    let mut rows: Vec<Vec<PowerPoly>> = Vec::with_capacity(d0);
    for (fi, &di) in sys.others().iter().zip(delta.delta()) {
        let values: Vec<Rational> = rooted.roots.iter().map(|r| fi.eval(r)).collect();
        for j in 0..di {
            rows.push(
                (0..rooted.roots.len())
                    .map(|c| PowerPoly::constant(weight(c, j, &powers) * &values[c]))
                    .collect(),
            );
        }
    }
    for j in 0..eps {
        rows.push(
            (0..rooted.roots.len())
                .map(|c| {
                    let w = weight(c, j, &powers);
                    PowerPoly::new(vec![-(&w * &rooted.roots[c]), w])
                })
                .collect(),
        );
    }
    let matrix = if rows.is_empty() {
        PolyMatrix::new(0, 0, Vec::new())
    } else {
        PolyMatrix::from_rows(rows)
    };
    Ok(det_polymatrix(&matrix, eps).expect("square block matrix"))
}

/// How the planted generator treats the roots of `F0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMode {
    /// All roots of `F0` pairwise distinct (root-based oracle available).
    Distinct,
    /// Force a repeated root in `F0` (divisibility checks only).
    Repeated,
}

/// A generated system `F_i = G * C_i` with everything on record.
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub f0: PowerPoly,
    pub others: Vec<PowerPoly>,
    /// Roots of `F0`, with multiplicity.
    pub roots: Vec<Rational>,
    /// Leading coefficient of `F0`.
    pub lead: Rational,
    /// The planted common factor, monic.
    pub gcd: PowerPoly,
    pub cofactors: Vec<PowerPoly>,
}

impl PlantedInstance {
    pub fn d0(&self) -> usize {
        self.roots.len()
    }

    pub fn system(&self, knots: KnotVector) -> Result<PolySystem, SubresError> {
        PolySystem::from_power(self.f0.clone(), self.others.clone(), knots)
    }

    pub fn rooted(&self, knots: KnotVector) -> Result<RootedSystem, OracleError> {
        RootedSystem::new(self.system(knots)?, self.roots.clone())
    }
}

/// Deterministically generate `F_i = G * C_i` for `i = 0..=t` with
/// `deg G = deg_gcd`, `deg C_i = cofactor_degrees[i]`, and pairwise coprime
/// cofactors (disjoint root sets drawn from a growing integer pool). The
/// roots of `F0` land in `[-9, 9]`; `Distinct` keeps them pairwise distinct.
pub fn make_planted_instance(
    seed: u64,
    t: usize,
    deg_gcd: usize,
    cofactor_degrees: &[usize],
    mode: RootMode,
) -> Result<PlantedInstance, OracleError> {
    if t == 0 {
        return Err(param("need t >= 1"));
    }
    if cofactor_degrees.len() != t + 1 {
        return Err(param(format!(
            "expected {} cofactor degrees, got {}",
            t + 1,
            cofactor_degrees.len()
        )));
    }
    let c0 = cofactor_degrees[0];
    let d0 = deg_gcd + c0;
    if cofactor_degrees[1..].iter().any(|&c| c > c0) {
        return Err(param("no cofactor degree may exceed cofactor_degrees[0]"));
    }
    if d0 > 19 {
        return Err(param("d0 exceeds the distinct integer root pool [-9, 9]"));
    }
    if mode == RootMode::Repeated && d0 < 2 {
        return Err(param("a repeated root needs d0 >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<i64> = (-9..=9).collect();
    pool.shuffle(&mut rng);
    let mut g_roots: Vec<i64> = pool[..deg_gcd].to_vec();
    let mut c0_roots: Vec<i64> = pool[deg_gcd..d0].to_vec();
    if mode == RootMode::Repeated {
        if deg_gcd >= 2 {
            g_roots[1] = g_roots[0];
        } else if c0 >= 2 {
            c0_roots[1] = c0_roots[0];
        } else {
            // deg_gcd and c0 are both 1: let the cofactor reuse the gcd root.
            c0_roots[0] = g_roots[0];
        }
    }
    // Far-out values keep the remaining cofactors coprime to everything.
    let mut next_far = 10i64;
    let mut take_far = |count: usize| -> Vec<i64> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(next_far);
            next_far = if next_far > 0 {
                -next_far
            } else {
                -next_far + 1
            };
        }
        out
    };
    let to_rat = |v: &[i64]| -> Vec<Rational> { v.iter().map(|&x| rat(x)).collect() };
    let gcd = PowerPoly::from_roots(&Rational::one(), &to_rat(&g_roots));
    let nonzero_lead = |rng: &mut ChaCha8Rng| -> Rational {
        loop {
            let l = rng.random_range(-4i64..=4);
            if l != 0 {
                return rat(l);
            }
        }
    };
    let mut cofactors = Vec::with_capacity(t + 1);
    cofactors.push(PowerPoly::from_roots(
        &nonzero_lead(&mut rng),
        &to_rat(&c0_roots),
    ));
    for &ci in &cofactor_degrees[1..] {
        let roots = take_far(ci);
        cofactors.push(PowerPoly::from_roots(
            &nonzero_lead(&mut rng),
            &to_rat(&roots),
        ));
    }
    let f0 = &gcd * &cofactors[0];
    let others: Vec<PowerPoly> = cofactors[1..].iter().map(|c| &gcd * c).collect();
    let mut roots = to_rat(&g_roots);
    roots.extend(to_rat(&c0_roots));
    let lead = f0.leading().expect("F0 nonzero").clone();
    Ok(PlantedInstance {
        f0,
        others,
        roots,
        lead,
        gcd,
        cofactors,
    })
}

/// `a` and `b` agree up to a nonzero scalar factor (both zero counts).
pub fn proportional(a: &PowerPoly, b: &PowerPoly) -> bool {
    match (a.leading(), b.leading()) {
        (None, None) => true,
        (Some(la), Some(lb)) => a.degree() == b.degree() && a.scale(lb) == b.scale(la),
        _ => false,
    }
}

/// Textbook coefficient-matrix subresultant of order `order` for a pair of
/// power-basis polynomials with `deg a >= deg b >= order`: the determinant
/// polynomial of the stacked shift rows of `a` and `b`. Independent of the
/// companion-matrix route.
pub fn sylvester_subresultant(
    a: &PowerPoly,
    b: &PowerPoly,
    order: usize,
) -> Result<PowerPoly, OracleError> {
    let m = a.degree().ok_or_else(|| param("a must be nonzero"))?;
    let n = b.degree().ok_or_else(|| param("b must be nonzero"))?;
    if m < n {
        return Err(param("need deg a >= deg b"));
    }
    if order > n {
        return Err(param("order exceeds deg b"));
    }
    let nrows = m + n - 2 * order;
    if nrows == 0 {
        return Err(param("no matrix rows at this order"));
    }
    let cols = m + n - order;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(nrows);
    let shifted_row = |p: &PowerPoly, s: usize| -> Vec<Rational> {
        (0..cols)
            .map(|c| {
                let deg = cols - 1 - c;
                if deg >= s {
                    p.coeff(deg - s)
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    for s in (0..n - order).rev() {
        rows.push(shifted_row(a, s));
    }
    for s in (0..m - order).rev() {
        rows.push(shifted_row(b, s));
    }
    let matrix = ScalarMatrix::from_rows(rows);
    let mut acc = PowerPoly::zero();
    for i in 0..=order {
        let mut sel: Vec<usize> = (0..nrows - 1).collect();
        sel.push(cols - 1 - i);
        let minor = det_exact(&matrix.select_columns(&sel)).expect("square minor");
        acc = &acc + &PowerPoly::monomial(minor, i);
    }
    Ok(acc)
}

/// Counters from [`equivalence_suite`].
#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn check(&mut self, ok: bool, label: impl Fn() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(label());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Seeded end-to-end agreement suite: for every generated instance and every
/// admissible `delta`, the minor route, the single-determinant route, and
/// both root-based formulas must produce the identical subresultant, and the
/// scan must recover the planted gcd.
pub fn equivalence_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for idx in 0..instances {
        let t = rng.random_range(1usize..=3);
        let deg_gcd = rng.random_range(0usize..=2);
        let c0_min = if deg_gcd == 0 { 1 } else { 0 };
        let c0 = rng.random_range(c0_min..=(5 - deg_gcd));
        let mut cofs = vec![c0];
        for _ in 0..t {
            cofs.push(rng.random_range(0..=c0));
        }
        let inst =
            make_planted_instance(rng.random::<u64>(), t, deg_gcd, &cofs, RootMode::Distinct)
                .expect("valid parameters");
        let d0 = inst.d0();
        let knots = KnotVector::new(
            (0..d0)
                .map(|_| {
                    let den = rng.random_range(1i64..=3);
                    ratio(rng.random_range(-5 * den..=5 * den), den)
                })
                .collect(),
        );
        let rooted = inst.rooted(knots.clone()).expect("distinct roots");
        let sys = rooted.system();
        for gamma in glex_enumerate(t, d0) {
            let delta = sys.delta(&gamma).expect("|gamma| <= d0");
            let s = sres(sys, &delta).expect("valid index");
            let s_det = sres_single_det(sys, &delta).expect("valid index");
            let from_roots_nb = sres_roots_newton(&rooted, &delta, &knots).expect("distinct");
            let from_roots_pw = sres_roots_power(&rooted, &delta).expect("distinct");
            report.check(s.poly == from_roots_nb, || {
                format!("instance {idx}: minor route != root formula at {gamma:?}")
            });
            report.check(s == s_det, || {
                format!("instance {idx}: single determinant differs at {gamma:?}")
            });
            report.check(from_roots_nb.to_power() == from_roots_pw, || {
                format!("instance {idx}: the two root formulas differ at {gamma:?}")
            });
        }
        let g_report = gcd_via_sres(sys);
        report.check(g_report.icdeg == icdeg_direct(sys), || {
            format!("instance {idx}: icdeg mismatch")
        });
        let g = g_report.gcd_poly.to_power();
        report.check(proportional(&g, &inst.gcd), || {
            format!("instance {idx}: recovered gcd is not a multiple of the planted one")
        });
        report.check(
            inst.f0.is_divisible_by(&g) && inst.others.iter().all(|f| f.is_divisible_by(&g)),
            || format!("instance {idx}: recovered gcd does not divide the system"),
        );
    }
    report
}
