//! Wreath Macdonald polynomials `H~^w_mu` and everything built from them.

mod checks;
mod factor;
mod solver;

use thiserror::Error;

use crate::exactalg::ExactError;
use crate::multisym::MultiSymError;
use crate::partcomb::PartError;

pub use checks::{
    at_t_inverse_q, brute_multitableaux, check_conjectures, check_down_nabla_down, check_norm, check_orthogonality,
    check_p_orthogonality, check_symmetries, down, inversion_scalar_is_nabla, is_laurent_monomial, j_and_p, kostka,
    multitableaux_count, nabla_eigenvalues, norm_b, norm_formula, p_is_triangular, proportionality, ConjectureCheck, HBasis,
    IdentityCheck, KostkaTable, NormCheck, JP,
};
pub use factor::{antidominant_translation, check_factorization, factor_generic, m_minus};
pub use solver::{solve, solve_block, solve_h, DiskCache, Solved, Variant, WreathKey};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("solver degenerate: {0}")]
    Degenerate(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    MultiSym(#[from] MultiSymError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Part(#[from] PartError),
}

#[cfg(test)]
mod tests;
