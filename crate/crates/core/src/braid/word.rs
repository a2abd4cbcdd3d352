use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

/// A word in the Artin generators `σ₁..σₙ₋₁` and their inverses.
///
/// Letter `i > 0` is `σᵢ`, letter `-i` is `σᵢ⁻¹`. Letters are stored in
/// written order; the rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(strands)?;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::GeneratorOutOfRange { index: bad, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(Self { strands, letters: Vec::new() })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"1 2 -1 3"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        check_strands(strands)?;
        let mut letters = Vec::new();
        let mut rest = text;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let token_len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            let token = &rest[start..start + token_len];
            let position = offset + start;
            let value: i32 = token.parse().map_err(|_| Error::Parse {
                position,
                message: format!("invalid generator {token:?}"),
            })?;
            if value == 0 || value.unsigned_abs() as usize >= strands {
                return Err(Error::Parse {
                    position,
                    message: format!("generator {value} out of range for {strands} strands"),
                });
            }
            letters.push(value);
            offset += start + token_len;
            rest = &rest[start + token_len..];
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image under the strand-tracking map to `Sₙ`. Letter signs are ignored.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands).expect("valid strand count");
        for &l in &self.letters {
            p.swap_positions(l.unsigned_abs() as usize - 1);
        }
        p
    }

    /// `self · other`: `other` acts first.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Product of several words, left to right as written.
    pub fn product_all<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<Self> {
        let mut acc = Self::empty(strands)?;
        for w in words {
            acc = acc.product(w)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate(&self, c: &Self) -> Result<Self> {
        c.product(self)?.product(&c.inverse())
    }

    /// Cancels adjacent `σᵢσᵢ⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { strands: self.strands, letters: out }
    }

    /// Same letters viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: strands });
        }
        check_strands(strands)?;
        Ok(Self { strands, letters: self.letters.clone() })
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }
}

fn check_strands(strands: usize) -> Result<()> {
    match strands {
        0 => Err(Error::ZeroDegree),
        n if n > MAX_DEGREE => Err(Error::DegreeTooLarge(n)),
        _ => Ok(()),
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({}; {})", self.strands, self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The positive permutation braid `br(π)`: every pair of strands crosses at
/// most once and the strands are permuted by `π`.
///
/// Emits the bubble-sort reduced word, so the length is `|Inv(π)|` and only
/// generators below the largest moved point appear.
pub fn simple_braid(pi: &Permutation) -> BraidWord {
    let mut rest = pi.clone();
    let mut found = Vec::with_capacity(pi.inversion_count());
    let n = pi.degree();
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if rest.has_right_descent(i) {
                rest.swap_positions(i);
                found.push(i as i32 + 1);
                continue 'outer;
            }
        }
        break;
    }
    found.reverse();
    BraidWord::from_letters_unchecked(n, found)
}

/// The positive half-twist `Δₙ`.
pub fn half_twist(n: usize) -> Result<BraidWord> {
    Ok(simple_braid(&Permutation::reversal(n)?))
}

/// `δₙ = σ₁σ₂…σₙ₋₁`, the simple braid of the cycle `i ↦ i+1`.
pub fn cycle_braid(n: usize) -> Result<BraidWord> {
    Ok(simple_braid(&Permutation::cycle(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let w = BraidWord::parse(4, "1 2 -1 3").unwrap();
        assert_eq!(w.letters(), &[1, 2, -1, 3]);
        assert_eq!(w.to_string(), "1 2 -1 3");
        assert_eq!(BraidWord::parse(4, "  ").unwrap().to_string(), "");
        let err = BraidWord::parse(3, "1  x 2").unwrap_err();
        assert_eq!(err, Error::Parse { position: 3, message: "invalid generator \"x\"".into() });
        assert!(matches!(BraidWord::parse(3, "1 3"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(BraidWord::parse(3, "0"), Err(Error::Parse { position: 0, .. })));
    }

    #[test]
    fn new_validates_generators() {
        assert!(BraidWord::new(3, vec![1, -2]).is_ok());
        assert_eq!(
            BraidWord::new(3, vec![3]),
            Err(Error::GeneratorOutOfRange { index: 3, strands: 3 })
        );
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn simple_braid_examples() {
        assert!(simple_braid(&Permutation::identity(4).unwrap()).is_empty());
        let delta3 = half_twist(3).unwrap();
        assert_eq!(delta3.len(), 3);
        assert!(delta3.is_positive());
        assert!(delta3.underlying_permutation().is_reversal());
        let d4 = cycle_braid(4).unwrap();
        assert_eq!(d4.letters(), &[1, 2, 3]);
        assert_eq!(d4.underlying_permutation(), Permutation::cycle(4).unwrap());
    }

    #[test]
    fn simple_braid_round_trip_s4() {
        for pi in Permutation::all(4).unwrap() {
            let w = simple_braid(&pi);
            assert_eq!(w.underlying_permutation(), pi);
            assert_eq!(w.len(), pi.inversion_count());
            assert_eq!(w.exponent_sum(), pi.inversion_count() as i64);
        }
    }

    #[test]
    fn perm_of_letters() {
        // σ₁σ₂ on 3 strands: σ₂ acts first, so 2 ↦ 3 and then 3 is untouched.
        let w = BraidWord::parse(3, "1 2").unwrap();
        assert_eq!(w.underlying_permutation(), Permutation::new(vec![2, 3, 1]).unwrap());
        assert_eq!(BraidWord::empty(5).unwrap().underlying_permutation(), Permutation::identity(5).unwrap());
    }

    #[test]
    fn product_and_inverse() {
        let a = BraidWord::parse(3, "1 -2").unwrap();
        let e = BraidWord::empty(3).unwrap();
        assert_eq!(e.product(&a).unwrap(), a);
        assert_eq!(a.inverse().to_string(), "2 -1");
        assert!(a.product(&a.inverse()).unwrap().free_reduce().is_empty());
        assert!(a.product(&BraidWord::empty(4).unwrap()).is_err());
        assert_eq!(BraidWord::parse(3, "2").unwrap().inverse().letters(), &[-2]);
        assert!(e.inverse().is_empty());
    }

    #[test]
    fn conjugate_keeps_exponent_sum() {
        let w = BraidWord::parse(4, "1 2 2 -3").unwrap();
        let c = BraidWord::parse(4, "3 3 -1 2").unwrap();
        assert_eq!(w.conjugate(&BraidWord::empty(4).unwrap()).unwrap(), w);
        assert_eq!(w.conjugate(&c).unwrap().exponent_sum(), w.exponent_sum());
    }
}
