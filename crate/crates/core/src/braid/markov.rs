use super::garside::normal_form;
use super::word::BraidWord;
use crate::error::{Error, Result};

/// Removes the top strand `k` times by positive Markov destabilization.
///
/// Each step needs the highest generator `σₙ₋₁` to occur exactly once, with a
/// positive sign. The word is freely reduced first, and rewritten through its
/// normal form if that alone does not expose a single occurrence.
pub fn destabilize(w: &BraidWord, k: usize) -> Result<BraidWord> {
    let mut current = w.clone();
    for _ in 0..k {
        current = destabilize_once(&current)?;
    }
    Ok(current)
}

fn destabilize_once(w: &BraidWord) -> Result<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return Err(Error::Destabilize { strand: n, reason: "no strand left to remove".into() });
    }
    let reduced = w.free_reduce();
    match remove_top(&reduced) {
        Ok(out) => Ok(out),
        Err(first) => {
            let rewritten = normal_form(&reduced).to_word().free_reduce();
            remove_top(&rewritten).map_err(|_| first)
        }
    }
}

fn remove_top(w: &BraidWord) -> Result<BraidWord> {
    let n = w.strands();
    let top = (n - 1) as i32;
    let hits: Vec<usize> = (0..w.len()).filter(|&i| w.letters()[i].abs() == top).collect();
    match hits.as_slice() {
        [at] if w.letters()[*at] > 0 => {
            let mut letters = w.letters().to_vec();
            letters.remove(*at);
            Ok(BraidWord::from_letters_unchecked(n - 1, letters))
        }
        [_] => Err(Error::Destabilize {
            strand: n,
            reason: format!("generator {top} occurs once but with a negative sign"),
        }),
        _ => Err(Error::Destabilize {
            strand: n,
            reason: format!("generator {top} occurs {} times", hits.len()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside::braids_equal;

    #[test]
    fn zero_moves_is_identity() {
        let w = BraidWord::parse(3, "1 2 -1").unwrap();
        assert_eq!(destabilize(&w, 0).unwrap(), w);
    }

    #[test]
    fn removes_single_top_letter() {
        let w = BraidWord::parse(4, "1 2 3 1 -2").unwrap();
        let out = destabilize(&w, 1).unwrap();
        assert_eq!(out.strands(), 3);
        assert_eq!(out.letters(), &[1, 2, 1, -2]);
        assert_eq!(out.exponent_sum(), w.exponent_sum() - 1);
    }

    #[test]
    fn free_reduction_exposes_single_occurrence() {
        let w = BraidWord::parse(3, "1 2 2 -2").unwrap();
        let out = destabilize(&w, 1).unwrap();
        assert_eq!(out.letters(), &[1]);
    }

    #[test]
    fn failure_names_the_strand() {
        let w = BraidWord::parse(3, "2 2 1").unwrap();
        let err = destabilize(&w, 1).unwrap_err();
        assert!(matches!(err, Error::Destabilize { strand: 3, .. }));
        let neg = BraidWord::parse(3, "1 -2").unwrap();
        assert!(matches!(destabilize(&neg, 1), Err(Error::Destabilize { strand: 3, .. })));
    }

    #[test]
    fn chained_moves() {
        let w = BraidWord::parse(4, "1 2 3 1 1").unwrap();
        let out = destabilize(&w, 2).unwrap();
        assert_eq!(out.strands(), 2);
        assert!(braids_equal(&out, &BraidWord::parse(2, "1 1 1").unwrap()).unwrap());
    }
}
