//! Exact arithmetic: integer and rational polynomials, bivariate
//! polynomials in (t, mu), the rational function field Q(mu), matrices,
//! fraction-free determinants, polynomial gcds, and Smith normal forms.

pub mod bipoly;
pub mod det;
pub mod gcd;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod ratfunc;
pub mod snf;
pub mod tpoly;

pub use bipoly::BiPoly;
pub use det::{
    char_poly_hessenberg, char_poly_rational, det_bipoly, det_integer, det_rational, det_tpoly,
    inverse_rational, newton_interpolate, nullspace_rational, rank_rational,
};
pub use gcd::{gcd_bipoly, gcd_bipoly_t};
pub use matrix::{mat_add, mat_mul, mat_scale, mat_sub, IntMat, Mat, RatMat};
pub use mpoly::{det_mpoly, nonvanishing_point, MPoly};
pub use poly::{format_poly, Poly, QPoly, ZPoly};
pub use ratfunc::RatFunc;
pub use snf::{determinant_divisor, snf, SnfResult};
pub use tpoly::{
    bipoly_to_tpoly, format_tpoly, tpoly_clear_denominators, tpoly_monic, tpoly_primitive_bipoly,
    TPoly,
};
