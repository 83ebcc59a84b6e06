//! Exact arithmetic shared by the rest of the crate.

mod field;
mod fm;
mod lattice;
mod matrix;

use thiserror::Error;

pub use field::{is_prime, parse_rational, prime_factors, Field, FieldKind, PrimeField, Rationals};
pub use fm::{has_positive_kernel_vector, MAX_FM_COLUMNS};
pub use lattice::{hnf_triangular, integer_kernel, TriangularBasis};
pub use matrix::{determinant, identity, inverse, mat_mul, mat_vec, nullspace, rank, rref, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("{0} is not an odd prime below 2^32")]
    NotOddPrime(u64),
    #[error("lattice generators do not have full rank")]
    RankDeficient,
    #[error("rows do not have triangular shape")]
    NotTriangular,
    #[error("integer overflow in lattice reduction")]
    Overflow,
    #[error("{cols} columns exceeds the elimination limit of {max}")]
    DimensionTooLarge { cols: usize, max: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
