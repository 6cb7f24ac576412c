//! Exact computation of subresultants for several univariate polynomials
//! expressed in a Newton basis.
//!
//! The library works over arbitrary-precision rationals throughout. Given a
//! system `F = (F0, F1, ..., Ft)` with `deg F0` maximal and a knot vector
//! `lambda` fixing a Newton basis, it computes the multi-index subresultants
//! `S_delta(F)` in that same basis via companion-matrix minors, recovers
//! `gcd(F)` and the incremental cofactor degrees from the family, and
//! cross-checks every formula against an independent root-based oracle.
//!
//! Modules:
//! - [`algebra`]: exact rationals, dense matrices, fraction-free determinants,
//!   determinants of polynomial matrices, polynomial evaluation at a matrix.
//! - [`poly`]: power-basis and Newton-basis polynomials and conversions.
//! - [`companion`]: the generalized companion matrix of a Newton polynomial
//!   and its multiplication-map identities.
//! - [`subres`]: subresultant matrices, determinantal polynomials, and the
//!   two equivalent subresultant routes (minor expansion and single
//!   determinant).
//! - [`gcdsolve`]: gcd and incremental-cofactor-degree recovery by scanning
//!   principal subresultant coefficients in graded-lexicographic order.
//! - [`oracle`]: root-based reference formulas and planted-instance
//!   generation used to validate the production path.
//! - [`cli`]: the `newton-subres` command-line front end.

pub mod algebra;
pub mod cli;
pub mod companion;
pub mod gcdsolve;
pub mod oracle;
pub mod poly;
pub mod subres;

pub use algebra::{det_exact, det_polymatrix, mat_poly_eval, PolyMatrix, Rational, ScalarMatrix};
pub use companion::{companion_matrix, modular_defect, mult_defect, CompanionMatrix};
pub use gcdsolve::{gcd_via_sres, glex_enumerate, icdeg_direct, GcdReport};
pub use oracle::{
    make_planted_instance, sres_roots_newton, sres_roots_power, vandermonde_det, PlantedInstance,
    RootMode, RootedSystem,
};
pub use poly::{KnotVector, NewtonPoly, PowerPoly};
pub use subres::{
    build_n, build_x_family, build_x_newton, delta_params, detp, detp_family, leading_coeff_sres,
    sres, sres_single_det, DeltaIndex, PolySystem, SubresultantResult,
};
