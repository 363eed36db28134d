//! Exact computation in two-generator soluble groups.
//!
//! * [`linalg`]: big-integer and rational matrices, Smith normal form,
//!   minor gcds and integer system solving.
//! * [`gc`]: the groups `G(c)` presented by commuting conjugates `b^(a^i)`
//!   and one relation `b^c0 (b^a)^c1 ... (b^(a^s))^cs`, computed inside
//!   `Q^s ⋊ Z`.
//! * [`wreath`]: the wreath products `Z ≀ Z` and `C_n ≀ Z`.
//! * [`word`]: words in the generators `a`, `b` and their text grammar.
//! * [`verify`]: a seeded harness re-checking the structural facts these
//!   groups rest on.

pub mod decimal;
pub mod gc;
pub mod linalg;
pub mod verify;
pub mod word;
pub mod wreath;

pub use gc::{GcElement, GcGroup, Signature};
pub use linalg::{IntMatrix, RatMatrix};
pub use word::{Generator, GeneratorWord};
pub use wreath::WreathElement;
