//! Braid and knot computations for building petal diagrams of torus knots.
//!
//! Conventions used throughout the crate:
//!
//! * Permutations act on `1..=n` and compose right-to-left:
//!   `a.compose(&b)` maps `i` to `a(b(i))`.
//! * Braid products follow the same rule. In the word `σ₁σ₂` the rightmost
//!   letter acts first, and the underlying permutation of `ab` is
//!   `perm(a) ∘ perm(b)`.
//! * A positive letter `σᵢ` is a positive crossing.

pub mod braid;
pub mod error;
pub mod invariants;
pub mod perm;
pub mod petal;
pub mod torus;

pub use braid::{BraidWord, NormalForm};
pub use error::{Error, Result};
pub use invariants::LaurentPolynomial;
pub use perm::{InversionSet, Permutation};
pub use petal::{PDCode, PetalPermutation, StarSpec};
pub use torus::{PetalNumberStatus, PipelineTrace, TorusPair};
