//! Exact arithmetic: scalars, sparse polynomials, matrices and flat limits in `t`.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod tlimit;

pub use matrix::{det_fraction_free, det_scalar, echelon_pivots, rank, rref, span_reduce, PolyMatrix};
pub use poly::{MultiPoly, Var};
pub use scalar::{Characteristic, Scalar};
pub use tlimit::{t_limit_basis, t_limit_basis_scalar};
