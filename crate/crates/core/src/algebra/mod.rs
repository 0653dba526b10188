//! Exact rational arithmetic, polynomials, rational functions and the
//! determinant kernels everything else is built on.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use matrix::{schur_det_check, ExactMatrix, SchurBlock};
pub use poly::{interpolate, Poly};
pub use rat::{parse_rat, rat, rat_int, rat_is_integer, rat_sqrt_exact, rat_to_f64, rat_to_string, Rat};
pub use ratfunc::RatFunc;
