//! Exact knot invariants used to certify that constructions keep the knot type.

mod alexander;
mod jones;
mod laurent;
mod matrix;

pub use alexander::{alexander_from_braid, alexander_from_pd, reduced_burau, torus_alexander};
pub use jones::{default_crossing_cap, jones_polynomial, kauffman_bracket, CAP_ENV_VAR, DEFAULT_CROSSING_CAP};
pub use laurent::LaurentPolynomial;
pub use matrix::PolyMatrix;

pub(crate) use alexander::gcd;
