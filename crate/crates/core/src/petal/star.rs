//! Star braids and the two-star petal construction.

use serde::{Deserialize, Serialize};

use super::PetalPermutation;
use crate::braid::{braids_equal, half_twist, normal_form, simple_braid, BraidWord};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A star diagram on `n` strands whose midpoints are stacked by `pi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarSpec {
    pub n: usize,
    pub pi: Permutation,
}

impl StarSpec {
    pub fn new(pi: Permutation) -> Self {
        Self { n: pi.degree(), pi }
    }

    /// `π₀ = π∘w₀`, the permutation with `π₀⁻¹π = w₀` and
    /// `br(π⁻¹)·br(π₀) = Δ`.
    pub fn mate(&self) -> Permutation {
        let w0 = Permutation::reversal(self.n).expect("degree checked at construction");
        self.pi.compose_unchecked(&w0)
    }
}

/// `Δₙ⁻¹ · br(π⁻¹) · br(π)`.
pub fn star_braid(spec: &StarSpec) -> Result<BraidWord> {
    if spec.n < 2 {
        return Err(Error::TooFewStrands(spec.n));
    }
    if spec.pi.degree() != spec.n {
        return Err(Error::DegreeMismatch { left: spec.n, right: spec.pi.degree() });
    }
    let delta = half_twist(spec.n)?;
    BraidWord::product_all(
        spec.n,
        [&delta.inverse(), &simple_braid(&spec.pi.inverse()), &simple_braid(&spec.pi)],
    )
}

/// Finds `π` with `w = star_braid(π)`, if one exists.
///
/// `w` is a star braid exactly when `Δ·w` has Garside length at most two and
/// trivial permutation; `π` is then read off the last simple factor.
pub fn is_star_representable(w: &BraidWord) -> Option<StarSpec> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let delta = half_twist(n).ok()?;
    let shifted = delta.product(w).ok()?;
    if !shifted.underlying_permutation().is_identity() {
        return None;
    }
    let nf = normal_form(&shifted);
    if nf.delta_power < 0 || nf.supremum() > 2 {
        return None;
    }
    let pi = match nf.factors.last() {
        Some(last) => last.clone(),
        None if nf.delta_power == 0 => Permutation::identity(n).ok()?,
        None => Permutation::reversal(n).ok()?,
    };
    let spec = StarSpec { n, pi };
    let candidate = star_braid(&spec).ok()?;
    braids_equal(&candidate, w).ok()?.then_some(spec)
}

/// Heights for the rose built from two stars.
///
/// Passes in traversal order are the middle strand followed by alternating
/// second-star and first-star strands. The first star sits below the middle
/// strand and the second above it; `lower[k]` and `upper[k]` rank the `k`-th
/// strand of each star within its own block.
pub(crate) fn rose_heights(lower: &[usize], upper: &[usize]) -> Result<PetalPermutation> {
    let n = lower.len();
    if upper.len() != n {
        return Err(Error::DegreeMismatch { left: n, right: upper.len() });
    }
    let mut heights = Vec::with_capacity(2 * n + 1);
    heights.push(n as u32 + 1);
    for k in 0..n {
        heights.push((n + 1 + upper[k]) as u32);
        heights.push(lower[k] as u32);
    }
    PetalPermutation::new(heights)
}

/// Petal permutation whose knot is the closure of
/// `δₙ · br(π₁)⁻¹ · br(π₁⁻¹)⁻¹ · br(π₂⁻¹) · br(π₂)`.
pub fn petal_from_pair(first: &Permutation, second: &Permutation) -> Result<PetalPermutation> {
    let n = first.degree();
    if second.degree() != n {
        return Err(Error::DegreeMismatch { left: n, right: second.degree() });
    }
    let lower: Vec<usize> = (1..=n).map(|k| n + 1 - first.apply(k)).collect();
    let upper: Vec<usize> = (1..=n).map(|k| second.apply(k)).collect();
    rose_heights(&lower, &upper)
}


#[cfg(test)]
mod closure_tests {
    use super::*;
    use crate::braid::cycle_braid;
    use crate::invariants::{alexander_from_braid, alexander_from_pd, jones_polynomial};
    use crate::petal::{petal_to_pd, PDCode};

    /// `δₙ · br(π₁)⁻¹ · br(π₁⁻¹)⁻¹ · br(π₂⁻¹) · br(π₂)`.
    fn two_star_braid(a: &Permutation, b: &Permutation) -> BraidWord {
        let n = a.degree();
        BraidWord::product_all(
            n,
            [
                &cycle_braid(n).unwrap(),
                &simple_braid(a).inverse(),
                &simple_braid(&a.inverse()).inverse(),
                &simple_braid(&b.inverse()),
                &simple_braid(b),
            ],
        )
        .unwrap()
    }

    #[test]
    fn one_strand_gives_unknot() {
        let id = Permutation::identity(1).unwrap();
        let petal = petal_from_pair(&id, &id).unwrap();
        assert_eq!(petal.len(), 3);
        assert!(alexander_from_pd(&petal_to_pd(&petal)).unwrap().is_one());
    }

    #[test]
    fn degree_mismatch() {
        let a = Permutation::identity(2).unwrap();
        let b = Permutation::identity(3).unwrap();
        assert_eq!(petal_from_pair(&a, &b), Err(Error::DegreeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn middle_strand_separates_the_stars() {
        let perms = Permutation::all(3).unwrap();
        for a in &perms {
            for b in &perms {
                let h = petal_from_pair(a, b).unwrap();
                let h = h.heights();
                assert_eq!(h[0], 4);
                assert!(h[1..].iter().step_by(2).all(|&x| x > 4));
                assert!(h[2..].iter().step_by(2).all(|&x| x < 4));
            }
        }
    }

    #[test]
    fn matches_braid_closure_on_s3() {
        let perms = Permutation::all(3).unwrap();
        for a in &perms {
            for b in &perms {
                let pd = petal_to_pd(&petal_from_pair(a, b).unwrap());
                let w = two_star_braid(a, b);
                let alex = alexander_from_pd(&pd).unwrap();
                assert!(alex.equal_up_to_units(&alexander_from_braid(&w).unwrap()), "{a} {b}");
                let jones = jones_polynomial(&pd, 22).unwrap();
                let expected = jones_polynomial(&PDCode::from_braid_closure(&w).unwrap(), 22).unwrap();
                assert_eq!(jones, expected, "{a} {b}");
            }
        }
    }
}
