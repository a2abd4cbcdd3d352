use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("generator {index} is out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("({r}, {s}) is not coprime")]
    NotCoprime { r: u32, s: u32 },

    #[error("invalid torus parameters ({r}, {s}): {reason}")]
    InvalidTorusPair { r: u32, s: u32, reason: &'static str },

    #[error("cannot destabilize strand {strand}: {reason}")]
    Destabilize { strand: usize, reason: String },

    #[error("a star diagram needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    #[error("invalid petal permutation: {0}")]
    InvalidPetal(String),

    #[error("{crossings} crossings exceeds the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("coefficient overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("certificate failed at {label}: {detail}")]
    Certificate { label: String, detail: String },
}
