//! Exact integer and rational linear algebra.
//!
//! Dense matrices over [`BigInt`](num_bigint::BigInt) and
//! [`BigRational`](num_rational::BigRational), the Smith normal form with
//! its unimodular transforms, brute-force minor gcds, and integer linear
//! system solving.

mod json;
mod matrix;
mod minors;
mod snf;
mod solve;

use thiserror::Error;

pub use json::{matrix_from_json, matrix_to_json};
pub use matrix::{mat_pow, IntMatrix, Matrix, RatMatrix, Scalar};
pub use minors::minor_gcds;
pub use snf::{snf, SnfResult};
pub use solve::{solve_integer_system, Inconsistency, SystemSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is empty")]
    Empty,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("malformed matrix file: {0}")]
    Format(String),
}
