//! Left-greedy Garside normal form over the permutation-braid alphabet.
//!
//! Every braid is written uniquely as `Δᵏ · x₁ ⋯ xₗ` where each `xᵢ` is a
//! simple braid other than `1` and `Δ`, and each adjacent pair is
//! left-weighted: the starting set of `xᵢ₊₁` is contained in the finishing set
//! of `xᵢ`. Factors are stored as permutations.

use serde::{Deserialize, Serialize};

use super::word::{simple_braid, BraidWord};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    /// Rebuilds a braid word: `Δᵏ` followed by the simple factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = simple_braid(&Permutation::reversal(n).expect("strand count"));
        let delta = if self.delta_power < 0 { delta.inverse() } else { delta };
        let mut letters = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            letters.extend_from_slice(delta.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(simple_braid(f).letters());
        }
        BraidWord::from_letters_unchecked(n, letters)
    }

    /// `inf`: the power of `Δ`.
    pub fn infimum(&self) -> i64 {
        self.delta_power
    }

    /// `sup`: the power of `Δ` plus the number of simple factors.
    pub fn supremum(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Checks the structural invariants: no trivial or `Δ` factors, and
    /// every adjacent pair left-weighted.
    pub fn is_canonical(&self) -> bool {
        self.factors.iter().all(|f| f.degree() == self.strands && !f.is_identity() && !f.is_reversal())
            && self.factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

/// `S(b) ⊆ F(a)`.
fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    (0..a.degree().saturating_sub(1)).all(|i| !b.has_left_descent(i) || a.has_right_descent(i))
}

/// Rewrites `a·b` as `(a·t)·(t⁻¹·b)` with `t` maximal, so that the pair
/// becomes left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut moved = false;
    loop {
        let Some(i) = (0..n - 1).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i)) else {
            return moved;
        };
        a.swap_positions(i);
        b.swap_values(i);
        moved = true;
    }
}

/// `τ(x) = Δ x Δ⁻¹`, on permutations `w₀ x w₀`.
fn flip(x: &Permutation, w0: &Permutation) -> Permutation {
    w0.compose_unchecked(x).compose_unchecked(w0)
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    if n == 1 {
        return NormalForm { strands: 1, delta_power: 0, factors: Vec::new() };
    }
    let w0 = Permutation::reversal(n).expect("strand count");

    // σᵢ⁻¹ = Δ⁻¹ · br(w₀ sᵢ). Pulling every Δ⁻¹ to the front applies τ to each
    // positive factor once per Δ⁻¹ standing to its right.
    let total_inverse = w.letters().iter().filter(|&&l| l < 0).count();
    let mut seen_inverse = 0usize;
    let mut positive = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let factor = if l > 0 {
            let mut s = Permutation::identity(n).expect("strand count");
            s.swap_positions(i);
            s
        } else {
            seen_inverse += 1;
            let mut c = w0.clone();
            c.swap_positions(i);
            c
        };
        if (total_inverse - seen_inverse) % 2 == 1 {
            positive.push(flip(&factor, &w0));
        } else {
            positive.push(factor);
        }
    }

    let mut factors: Vec<Permutation> = Vec::with_capacity(positive.len());
    for x in positive {
        factors.push(x);
        let mut j = factors.len() - 1;
        while j >= 1 {
            let (left, right) = factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
    }

    let mut delta_power = -(total_inverse as i64);
    let leading = factors.iter().take_while(|f| f.is_reversal()).count();
    delta_power += leading as i64;
    factors.drain(..leading);
    while factors.last().is_some_and(Permutation::is_identity) {
        factors.pop();
    }
    NormalForm { strands: n, delta_power, factors }
}

/// Equality in the braid group, decided by comparing normal forms.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    Ok(normal_form(a) == normal_form(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::half_twist;

    fn word(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn empty_word() {
        let nf = normal_form(&BraidWord::empty(4).unwrap());
        assert!(nf.is_identity());
    }

    #[test]
    fn simple_braid_is_single_factor() {
        for pi in Permutation::all(4).unwrap() {
            if pi.is_identity() || pi.is_reversal() {
                continue;
            }
            let nf = normal_form(&simple_braid(&pi));
            assert_eq!(nf.delta_power, 0);
            assert_eq!(nf.factors, vec![pi]);
        }
    }

    #[test]
    fn braid_relation() {
        assert!(braids_equal(&word(3, "1 2 1"), &word(3, "2 1 2")).unwrap());
        assert!(!braids_equal(&word(3, "1"), &word(3, "2")).unwrap());
        assert!(braids_equal(&word(4, "1 3"), &word(4, "3 1")).unwrap());
        assert!(!braids_equal(&word(4, "1 2"), &word(4, "2 1")).unwrap());
        assert!(braids_equal(&word(3, "1"), &word(4, "1")).is_err());
    }

    #[test]
    fn delta_powers() {
        let d = half_twist(4).unwrap();
        let nf = normal_form(&d);
        assert_eq!((nf.delta_power, nf.factors.len()), (1, 0));
        let nf = normal_form(&d.inverse());
        assert_eq!((nf.delta_power, nf.factors.len()), (-1, 0));
        let single_inverse = normal_form(&word(3, "-1"));
        assert_eq!(single_inverse.delta_power, -1);
        assert_eq!(single_inverse.factors.len(), 1);
        assert_eq!(single_inverse.to_word().exponent_sum(), -1);
    }

    #[test]
    fn full_twist_is_central() {
        let d = half_twist(4).unwrap();
        let full = d.product(&d).unwrap();
        for g in ["1", "2", "3", "-2"] {
            let x = word(4, g);
            assert!(braids_equal(&full.product(&x).unwrap(), &x.product(&full).unwrap()).unwrap());
        }
    }

    #[test]
    fn normal_form_round_trips_through_words() {
        let w = word(5, "1 -2 3 3 -4 1 2 -1 -3 4 2");
        let nf = normal_form(&w);
        assert!(nf.is_canonical());
        assert_eq!(normal_form(&nf.to_word()), nf);
        assert_eq!(nf.to_word().exponent_sum(), w.exponent_sum());
        assert_eq!(nf.to_word().underlying_permutation(), w.underlying_permutation());
    }

    #[test]
    fn one_strand() {
        let nf = normal_form(&BraidWord::empty(1).unwrap());
        assert!(nf.is_identity());
        assert!(nf.to_word().is_empty());
    }
}
