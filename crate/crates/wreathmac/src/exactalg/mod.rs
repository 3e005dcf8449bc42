//! Exact arithmetic: Laurent polynomials and rational functions in two
//! variables over arbitrary-precision rationals, the cyclic character ring
//! `Z[q^±1, t^±1][chi] / (chi^r - 1)` and small matrices over rational functions.

mod cycpoly;
mod laurent;
mod matrix;
mod modular;
mod parse;
mod ratfn;

pub use cycpoly::CycPoly;
pub use laurent::{to_i64, Exp, LaurentPoly2, Vars};
pub use matrix::{bareiss_gauss_jordan, nullspace_vector, Echelon, MatRF};
pub use modular::kernel_candidate;
pub use parse::{parse_poly, parse_ratfn};
pub use ratfn::RatFn2;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot mix ({0:?})-tagged and ({1:?})-tagged values without an explicit conversion")]
    VarMismatch(Vars, Vars),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Convert a `(q,t)` rational function to `(s,u)` via `q = s^2 u^2`, `t = s^2 u^-2`.
pub fn to_su(f: &RatFn2) -> RatFn2 {
    f.to_su()
}

/// Replace each variable `v` by `v^k`.
pub fn power_substitute(f: &RatFn2, k: i32) -> RatFn2 {
    f.power_substitute(k)
}

/// Inverse of a square matrix of rational functions.
pub fn mat_inverse(m: &MatRF) -> Result<MatRF, ExactError> {
    m.inverse()
}
