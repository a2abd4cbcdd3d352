//! Permutations of `{1..n}` and their inversion sets.
//!
//! Composition is right-to-left: `(a ∘ b)(i) = a(b(i))`. This is the only
//! order under which the torus-family identities below hold with the tables
//! as written (for instance `π₃ ∘ π₄ = π₄ʳ ∘ π₃`), and it matches the braid
//! product convention where the right factor acts first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::torus::TorusPair;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 64;

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its 1-based image list.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("{image:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { image: image.into_iter().map(|v| (v - 1) as u8).collect() })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::check_degree(n)?;
        Ok(Self { image: (0..n as u8).collect() })
    }

    /// The order-reversing permutation `i ↦ n+1-i` (underlying `Δₙ`).
    pub fn reversal(n: usize) -> Result<Self> {
        Self::check_degree(n)?;
        Ok(Self { image: (0..n as u8).rev().collect() })
    }

    /// The cycle `i ↦ i+1 (mod n)` (underlying `δₙ`).
    pub fn cycle(n: usize) -> Result<Self> {
        Self::check_degree(n)?;
        Ok(Self { image: (0..n).map(|i| ((i + 1) % n) as u8).collect() })
    }

    /// The adjacent transposition `(i, i+1)`, with `i` 1-based.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        Self::check_degree(n)?;
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i as i32, strands: n });
        }
        let mut p = Self::identity(n)?;
        p.image.swap(i - 1, i);
        Ok(p)
    }

    fn check_degree(n: usize) -> Result<()> {
        match n {
            0 => Err(Error::ZeroDegree),
            n if n > MAX_DEGREE => Err(Error::DegreeTooLarge(n)),
            _ => Ok(()),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn image(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn is_reversal(&self) -> bool {
        let n = self.degree();
        self.image.iter().enumerate().all(|(i, &v)| v as usize == n - 1 - i)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self { image: other.image.iter().map(|&j| self.image[j as usize]).collect() }
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self { image: inv }
    }

    /// `self^k`; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self { image: (0..self.degree() as u8).collect() };
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    pub fn inversion_set(&self) -> InversionSet {
        let n = self.degree();
        let mut pairs = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    pairs.insert((i + 1, j + 1));
                }
            }
        }
        InversionSet { degree: n, pairs }
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn inversion_count(&self) -> usize {
        let n = self.degree();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.image[i] > self.image[j]).count())
            .sum()
    }

    /// True iff `Inv(self) ⊇ Inv(inner)`.
    pub fn contains_inversions(&self, inner: &Self) -> Result<bool> {
        self.check_same_degree(inner)?;
        let n = self.degree();
        for i in 0..n {
            for j in i + 1..n {
                if inner.image[i] > inner.image[j] && self.image[i] < self.image[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Right multiplication by the adjacent transposition at 0-based `i`:
    /// swaps the images at positions `i` and `i+1`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.image.swap(i, i + 1);
    }

    /// Left multiplication by the adjacent transposition at 0-based `i`:
    /// swaps the values `i` and `i+1`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        let a = i as u8;
        for v in self.image.iter_mut() {
            if *v == a {
                *v = a + 1;
            } else if *v == a + 1 {
                *v = a;
            }
        }
    }

    /// `σᵢ` (0-based `i`) is a right factor: `π(i) > π(i+1)`.
    pub(crate) fn has_right_descent(&self, i: usize) -> bool {
        self.image[i] > self.image[i + 1]
    }

    /// `σᵢ` (0-based `i`) is a left factor: `π⁻¹(i) > π⁻¹(i+1)`.
    pub(crate) fn has_left_descent(&self, i: usize) -> bool {
        let a = self.image.iter().position(|&v| v as usize == i).unwrap();
        let b = self.image.iter().position(|&v| v as usize == i + 1).unwrap();
        a > b
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    /// Restriction to `{1..m}`, provided `m+1..n` are all fixed.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        if m == 0 || m > self.degree() {
            return None;
        }
        if (m..self.degree()).any(|i| self.image[i] as usize != i) {
            return None;
        }
        Some(Self { image: self.image[..m].to_vec() })
    }

    /// Extension to `{1..n}` fixing the new points.
    pub fn extend(&self, n: usize) -> Result<Self> {
        if n < self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: n });
        }
        Self::check_degree(n)?;
        let mut image = self.image.clone();
        image.extend(self.degree() as u8..n as u8);
        Ok(Self { image })
    }

    /// Every permutation of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        Self::check_degree(n)?;
        let mut current: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Self { image: current.clone() }];
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                return Ok(out);
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
            out.push(Self { image: current.clone() });
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[3,1,4,2]`
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { position: 0, message: "expected [..]".into() })?;
        let mut image = Vec::new();
        let mut offset = s.find('[').unwrap_or(0) + 1;
        for part in inner.split(',') {
            let token = part.trim();
            let value = token.parse::<usize>().map_err(|_| Error::Parse {
                position: offset,
                message: format!("invalid entry {token:?}"),
            })?;
            image.push(value);
            offset += part.len() + 1;
        }
        Self::new(image)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Self::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image()
    }
}

/// The set of pairs `i < j` with `π(i) > π(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionSet {
    degree: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.contains(&pair)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        self.pairs.is_superset(&other.pairs)
    }
}

/// The permutations used to rewrite the torus braid of `T(r,s)` into a
/// petal-ready form. Field names describe each permutation; the comments
/// give the conventional symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusFamily {
    pub pair: TorusPair,
    /// π₁: reverses `1..r`, fixes `r+1..s`.
    pub head_reversal: Permutation,
    /// π₂: `i ↦ r+i` for `i ≤ s-r`, then `i ↦ s+1-i`.
    pub shifted_reversal: Permutation,
    /// π₃: `i ↦ r·i mod s`, representatives in `1..s`.
    pub multiply: Permutation,
    /// π₄: the cycle `i ↦ i+1`.
    pub cycle: Permutation,
    /// π₅: its inverse fixes `1..r` and rank-normalizes π₃⁻¹ on `r+1..s`.
    pub tail_rank: Permutation,
    /// π₆: its inverse rank-normalizes π₃⁻¹ on `1..r` (reversed) and fixes
    /// `r+1..s`.
    pub head_rank: Permutation,
    /// π₀: the restriction of `π₆⁻¹π₁⁻¹π₅⁻¹π₃` to `1..m`, `m = s - ⌊s/r⌋`.
    pub reduced: Permutation,
}

impl TorusFamily {
    pub fn new(pair: TorusPair) -> Self {
        let (r, s) = (pair.r() as usize, pair.s() as usize);
        let build = |f: &dyn Fn(usize) -> usize| {
            Permutation::new((1..=s).map(f).collect()).expect("torus family permutation")
        };

        let head_reversal = build(&|i| if i <= r { r + 1 - i } else { i });
        let shifted_reversal = build(&|i| if i <= s - r { r + i } else { s + 1 - i });
        let multiply = build(&|i| (r * i - 1) % s + 1);
        let cycle = Permutation::cycle(s).expect("degree");
        let multiply_inv = multiply.inverse();
        let rank_key = |i: usize| multiply_inv.apply(i);

        let tail_rank_inv = build(&|i| {
            if i <= r {
                i
            } else {
                (r + 1..=s).filter(|&j| rank_key(j) <= rank_key(i)).count() + r
            }
        });
        let head_rank_inv = build(&|i| {
            if i <= r {
                (1..=r).filter(|&j| rank_key(j) >= rank_key(r + 1 - i)).count()
            } else {
                i
            }
        });

        let full = head_rank_inv
            .compose_unchecked(&head_reversal.inverse())
            .compose_unchecked(&tail_rank_inv)
            .compose_unchecked(&multiply);
        let reduced = full.restrict(pair.reduced_strands()).expect("suffix of the reduced permutation is fixed");

        Self {
            pair,
            head_reversal,
            shifted_reversal,
            multiply,
            cycle,
            tail_rank: tail_rank_inv.inverse(),
            head_rank: head_rank_inv.inverse(),
            reduced,
        }
    }

    /// `π₆⁻¹π₁⁻¹π₅⁻¹π₃` on all `s` points.
    pub fn reduced_full(&self) -> Permutation {
        self.head_rank
            .inverse()
            .compose_unchecked(&self.head_reversal.inverse())
            .compose_unchecked(&self.tail_rank.inverse())
            .compose_unchecked(&self.multiply)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn family(r: u32, s: u32) -> TorusFamily {
        TorusFamily::new(TorusPair::new(r, s).unwrap())
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Permutation::identity(3).unwrap().image(), vec![1, 2, 3]);
        assert_eq!(Permutation::identity(1).unwrap().image(), vec![1]);
        assert!(Permutation::identity(5).unwrap().inversion_set().is_empty());
        assert_eq!(Permutation::identity(0), Err(Error::ZeroDegree));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
        assert!(Permutation::new((1..=65).collect()).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = family(3, 7);
        let pi4_cubed = f.cycle.power(3);
        assert_eq!(f.head_reversal.compose(&pi4_cubed).unwrap(), p(&[4, 5, 6, 7, 3, 2, 1]));

        let any = p(&[2, 4, 1, 3]);
        assert_eq!(Permutation::identity(4).unwrap().compose(&any).unwrap(), any);

        // Elementwise brute-force check of both sides.
        let lhs: Vec<usize> = (1..=7).map(|i| f.multiply.apply(f.cycle.apply(i))).collect();
        let rhs: Vec<usize> = (1..=7)
            .map(|i| {
                let mut x = f.multiply.apply(i);
                for _ in 0..3 {
                    x = f.cycle.apply(x);
                }
                x
            })
            .collect();
        assert_eq!(lhs, rhs);
        assert_eq!(f.multiply.compose(&f.cycle).unwrap().image(), lhs);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3).unwrap();
        let b = Permutation::identity(4).unwrap();
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch { left: 3, right: 4 }));
        assert!(a.contains_inversions(&b).is_err());
    }

    #[test]
    fn inverse_examples() {
        let pi1 = p(&[3, 2, 1, 4, 5, 6, 7]);
        assert_eq!(pi1.inverse(), pi1);
        let id = Permutation::identity(4).unwrap();
        assert_eq!(id.inverse(), id);
        assert_eq!(p(&[3, 6, 2, 5, 1, 4, 7]).inverse(), p(&[5, 3, 1, 6, 4, 2, 7]));
    }

    #[test]
    fn inversion_set_examples() {
        let inv = p(&[3, 1, 4, 2]).inversion_set();
        let expected: BTreeSet<_> = [(1, 2), (1, 4), (3, 4)].into_iter().collect();
        assert_eq!(inv.pairs(), &expected);
        assert_eq!(Permutation::reversal(4).unwrap().inversion_set().len(), 6);
    }

    #[test]
    fn contains_inversions_examples() {
        let w0 = Permutation::reversal(4).unwrap();
        for q in Permutation::all(4).unwrap() {
            assert!(w0.contains_inversions(&q).unwrap());
        }
        assert!(!Permutation::identity(2).unwrap().contains_inversions(&p(&[2, 1])).unwrap());
        let f = family(3, 7);
        assert!(f.multiply.inverse().contains_inversions(&f.tail_rank.inverse()).unwrap());
        assert!(f
            .multiply
            .inverse()
            .inversion_set()
            .is_superset(&f.tail_rank.inverse().inversion_set()));
    }

    #[test]
    fn torus_family_three_seven() {
        let f = family(3, 7);
        assert_eq!(f.head_reversal, p(&[3, 2, 1, 4, 5, 6, 7]));
        assert_eq!(f.shifted_reversal, p(&[4, 5, 6, 7, 3, 2, 1]));
        assert_eq!(f.multiply, p(&[3, 6, 2, 5, 1, 4, 7]));
        assert_eq!(f.cycle, p(&[2, 3, 4, 5, 6, 7, 1]));
        assert_eq!(f.tail_rank.inverse(), p(&[1, 2, 3, 6, 5, 4, 7]));
        assert_eq!(f.head_rank.inverse(), p(&[3, 2, 1, 4, 5, 6, 7]));
        assert_eq!(f.reduced, p(&[3, 4, 2, 5, 1]));
        assert_eq!(f.reduced.inversion_count(), 6);
    }

    #[test]
    fn torus_family_identities() {
        for (r, s) in TorusPair::sweep(12) {
            let f = family(r, s);
            let (ru, su) = (r as usize, s as usize);
            let pi4r = f.cycle.power(r as i64);
            assert_eq!(f.multiply.compose(&f.cycle).unwrap(), pi4r.compose(&f.multiply).unwrap());
            assert_eq!(f.shifted_reversal, f.head_reversal.compose(&pi4r).unwrap());
            assert_eq!(
                f.head_reversal.compose(&f.tail_rank).unwrap(),
                f.tail_rank.compose(&f.head_reversal).unwrap()
            );
            assert_eq!(f.multiply.apply(su), su);

            let m = su - su / ru;
            assert!(m >= ru);
            let full = f.reduced_full();
            let tail_inv = f.tail_rank.inverse();
            for i in m + 1..=su {
                assert_eq!(full.apply(i), i);
                assert_eq!(tail_inv.apply(su - ru * (su - i)), i);
            }
        }
    }

    #[test]
    fn inversion_count_matches_inverse_over_s5() {
        for q in Permutation::all(5).unwrap() {
            assert_eq!(q.inversion_set().len(), q.inverse().inversion_set().len());
            assert_eq!(q.inversion_count(), q.inversion_set().len());
            assert_eq!(q.inverse().compose(&q).unwrap(), Permutation::identity(5).unwrap());
        }
        assert_eq!(Permutation::all(5).unwrap().len(), 120);
    }

    #[test]
    fn text_format_round_trip() {
        let q: Permutation = "[3,1,4,2]".parse().unwrap();
        assert_eq!(q, p(&[3, 1, 4, 2]));
        assert_eq!(q.to_string(), "[3,1,4,2]");
        assert!(matches!("[3,x]".parse::<Permutation>(), Err(Error::Parse { position: 3, .. })));
        assert!("3,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn descents_and_swaps() {
        let mut q = p(&[2, 1, 3]);
        assert!(q.has_right_descent(0));
        assert!(!q.has_right_descent(1));
        assert!(q.has_left_descent(0));
        q.swap_positions(0);
        assert!(q.is_identity());
        q.swap_values(1);
        assert_eq!(q, p(&[1, 3, 2]));
    }

    #[test]
    fn cycles_and_restriction() {
        assert_eq!(Permutation::cycle(5).unwrap().cycle_type(), vec![5]);
        assert_eq!(p(&[2, 1, 3]).cycle_type(), vec![2, 1]);
        assert_eq!(p(&[2, 1, 3]).restrict(2), Some(p(&[2, 1])));
        assert_eq!(p(&[3, 1, 2]).restrict(2), None);
        assert_eq!(p(&[2, 1]).extend(4).unwrap(), p(&[2, 1, 3, 4]));
    }
}
