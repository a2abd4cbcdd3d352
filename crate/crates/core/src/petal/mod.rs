//! Petal diagrams, star braids, and the conversion of petal permutations to
//! planar diagrams.

mod geometry;
mod pd;
mod star;
mod svg;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use geometry::petal_to_pd;
pub(crate) use pd::Visit;
pub use pd::PDCode;
pub use star::{is_star_representable, petal_from_pair, star_braid, StarSpec};
pub use svg::{render_svg, SvgStyle};

/// Heights of the passes through the single multi-crossing, in traversal
/// order. Height `1` is the lowest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPetal", into = "RawPetal")]
pub struct PetalPermutation {
    heights: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPetal {
    heights: Vec<u32>,
}

impl TryFrom<RawPetal> for PetalPermutation {
    type Error = Error;

    fn try_from(raw: RawPetal) -> Result<Self> {
        Self::new(raw.heights)
    }
}

impl From<PetalPermutation> for RawPetal {
    fn from(p: PetalPermutation) -> Self {
        RawPetal { heights: p.heights }
    }
}

impl PetalPermutation {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        let l = heights.len();
        if l < 3 || l.is_multiple_of(2) {
            return Err(Error::InvalidPetal(format!("length {l} must be odd and at least 3")));
        }
        let mut seen = vec![false; l + 1];
        for &h in &heights {
            let h = h as usize;
            if h == 0 || h > l || std::mem::replace(&mut seen[h], true) {
                return Err(Error::InvalidPetal(format!("heights are not a permutation of 1..={l}")));
            }
        }
        Ok(Self { heights })
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    /// Number of petals.
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The same diagram read from a different starting pass.
    pub fn rotated(&self, k: usize) -> Self {
        let mut heights = self.heights.clone();
        let len = heights.len();
        heights.rotate_left(k % len);
        Self { heights }
    }

    /// Mirror image: every height flipped.
    pub fn mirror(&self) -> Self {
        let top = self.heights.len() as u32 + 1;
        Self { heights: self.heights.iter().map(|&h| top - h).collect() }
    }
}

impl fmt::Display for PetalPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, h) in self.heights.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for PetalPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let body = trimmed
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse { position: 0, message: "expected '(' ... ')'".into() })?;
        let mut heights = Vec::new();
        let base = s.len() - s.trim_start().len() + 1;
        let mut offset = 0;
        for token in body.split(' ') {
            if !token.is_empty() {
                let h = token.parse::<u32>().map_err(|_| Error::Parse {
                    position: base + offset,
                    message: format!("invalid height '{token}'"),
                })?;
                heights.push(h);
            }
            offset += token.len() + 1;
        }
        Self::new(heights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PetalPermutation::new(vec![1, 3, 5, 2, 4]).is_ok());
        assert!(PetalPermutation::new(vec![1]).is_err());
        assert!(PetalPermutation::new(vec![1, 2]).is_err());
        assert!(PetalPermutation::new(vec![1, 2, 4]).is_err());
        assert!(PetalPermutation::new(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = PetalPermutation::new(vec![1, 3, 5, 2, 4]).unwrap();
        assert_eq!(p.to_string(), "(1 3 5 2 4)");
        assert_eq!("(1 3 5 2 4)".parse::<PetalPermutation>().unwrap(), p);
        assert_eq!(" ( 1 3  5 2 4 ) ".parse::<PetalPermutation>().unwrap(), p);
        match "(1 x 3)".parse::<PetalPermutation>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!("1 2 3".parse::<PetalPermutation>().is_err());
    }

    #[test]
    fn json_shape() {
        let p = PetalPermutation::new(vec![2, 3, 1]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"heights":[2,3,1]}"#);
        assert_eq!(serde_json::from_str::<PetalPermutation>(&json).unwrap(), p);
        assert!(serde_json::from_str::<PetalPermutation>(r#"{"heights":[1,2]}"#).is_err());
    }
}
