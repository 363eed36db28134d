//! Gc-groups `G(c)` computed inside `Q^s ⋊ Z`.
//!
//! `a` maps to the stable letter acting on row vectors by the companion
//! matrix of `c`, and `b` maps to the first basis vector. The map is
//! injective, so equality of images decides the word problem.

mod action;
mod element;
mod group;
mod signature;
mod subgroups;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use action::{companion_action, finite_order_exponent, CompanionAction};
pub use element::GcElement;
pub use group::{Abelianization, GcGroup};
pub use signature::{band_matrix, Signature};
pub use subgroups::{IntervalSubgroupReport, Membership, PowerIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("element lives in Q^{found}, group acts on Q^{expected}")]
    SignatureMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
