//! Gcd and incremental cofactor degrees from the subresultant family.
//!
//! Scanning the multi-indices in descending graded-lexicographic order, the
//! first `gamma` whose principal subresultant coefficient is nonzero is both
//! the incremental cofactor degree tuple of the system and the index whose
//! subresultant is (a constant multiple of) the gcd.

use num::Zero;

use crate::algebra::Rational;
use crate::poly::NewtonPoly;
use crate::subres::{delta_params, leading_coeff_sres, sres, DeltaIndex, PolySystem};

/// Outcome of the scan. `icdeg` equals the tuple of `delta_star`; the scan
/// log keeps every examined index with its principal coefficient.
#[derive(Debug, Clone)]
pub struct GcdReport {
    pub delta_star: DeltaIndex,
    pub gcd_poly: NewtonPoly,
    pub icdeg: Vec<usize>,
    pub scan_log: Vec<(Vec<usize>, Rational)>,
}

/// All tuples in `N^t` with total at most `bound`, in strictly descending
/// graded-lexicographic order: larger total first, ties broken
/// lexicographically with the leftmost coordinate most significant.
pub fn glex_enumerate(t: usize, bound: usize) -> Vec<Vec<usize>> {
    assert!(t >= 1, "need at least one coordinate");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(t);
    for total in (0..=bound).rev() {
        push_compositions(total, t, &mut prefix, &mut out);
    }
    out
}

fn push_compositions(
    total: usize,
    parts: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        push_compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Recover the gcd of the system by the descending scan. Always terminates:
/// the all-zero tuple has principal coefficient `a^{delta0} != 0`.
pub fn gcd_via_sres(sys: &PolySystem) -> GcdReport {
    let mut scan_log = Vec::new();
    for gamma in glex_enumerate(sys.arity(), sys.d0()) {
        let delta = delta_params(sys.degrees(), &gamma).expect("|gamma| <= d0");
        let s = leading_coeff_sres(sys, &delta).expect("valid index");
        scan_log.push((gamma.clone(), s.clone()));
        if !s.is_zero() {
            let result = sres(sys, &delta).expect("valid index");
            return GcdReport {
                delta_star: delta,
                gcd_poly: result.poly,
                icdeg: gamma,
                scan_log,
            };
        }
    }
    unreachable!("the all-zero index has a nonzero principal coefficient")
}

/// Independent route: incremental cofactor degrees from successive
/// Euclidean gcds over the rationals,
/// `theta_i = deg gcd(F0..F_{i-1}) - deg gcd(F0..F_i)`.
pub fn icdeg_direct(sys: &PolySystem) -> Vec<usize> {
    let mut g = sys.f0().to_power();
    let mut prev = g.degree().expect("F0 is nonzero");
    let mut thetas = Vec::with_capacity(sys.arity());
    for fi in sys.others() {
        g = g.gcd(fi);
        let d = g.degree().expect("gcd of nonzero polynomials is nonzero");
        thetas.push(prev - d);
        prev = d;
    }
    thetas
}
