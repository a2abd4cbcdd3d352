//! Kauffman bracket by a frontier state sum.
//!
//! Crossings are absorbed one at a time; states are the pairings of the
//! currently open edge ends, so diagrams whose smoothings share a
//! connectivity pattern are summed together.

use std::collections::{BTreeMap, HashMap};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::petal::PDCode;

/// Largest diagram accepted by the bracket routes unless overridden.
pub const DEFAULT_CROSSING_CAP: usize = 22;

/// Environment override for [`DEFAULT_CROSSING_CAP`].
pub const CAP_ENV_VAR: &str = "PETALFORGE_CAP";

pub fn default_crossing_cap() -> usize {
    std::env::var(CAP_ENV_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CROSSING_CAP)
}

/// Greedy order keeping the frontier small.
fn crossing_order(pd: &PDCode) -> Vec<usize> {
    let n = pd.crossing_count();
    let mut done = vec![false; n];
    let mut open_count = vec![0u8; pd.edge_count() + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = pd.crossings()[c].iter().filter(|&&e| open_count[e as usize] == 1).count();
                (shared, std::cmp::Reverse(c))
            })
            .unwrap();
        done[next] = true;
        for &e in &pd.crossings()[next] {
            open_count[e as usize] += 1;
        }
        order.push(next);
    }
    order
}

/// Joins `p` and `q`; returns the number of loops closed.
fn join(ends: &mut BTreeMap<u32, u32>, p: u32, q: u32) -> u32 {
    if p == q {
        return 1;
    }
    let pp = ends.remove(&p);
    let qp = ends.remove(&q);
    match (pp, qp) {
        (None, None) => {
            ends.insert(p, q);
            ends.insert(q, p);
            0
        }
        (Some(x), None) => {
            ends.insert(x, q);
            ends.insert(q, x);
            0
        }
        (None, Some(y)) => {
            ends.insert(y, p);
            ends.insert(p, y);
            0
        }
        (Some(x), Some(y)) => {
            if x == q {
                1
            } else {
                ends.insert(x, y);
                ends.insert(y, x);
                0
            }
        }
    }
}

/// `⟨D⟩` in the variable `A`, normalized so the crossingless circle is 1.
pub fn kauffman_bracket(pd: &PDCode, cap: usize) -> Result<LaurentPolynomial> {
    let n = pd.crossing_count();
    if n > cap {
        return Err(Error::CrossingCap { crossings: n, cap });
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let loop_value = LaurentPolynomial::from_terms([(-2, -1), (2, -1)]);

    let mut states: HashMap<Vec<(u32, u32)>, LaurentPolynomial> = HashMap::new();
    states.insert(Vec::new(), LaurentPolynomial::one());
    for c in crossing_order(pd) {
        let [a, b, cc, d] = pd.crossings()[c];
        let mut next: HashMap<Vec<(u32, u32)>, LaurentPolynomial> = HashMap::new();
        for (key, weight) in &states {
            for (arcs, exponent) in [([(a, b), (cc, d)], 1), ([(a, d), (b, cc)], -1)] {
                let mut ends: BTreeMap<u32, u32> = key.iter().flat_map(|&(x, y)| [(x, y), (y, x)]).collect();
                let loops: u32 = arcs.iter().map(|&(p, q)| join(&mut ends, p, q)).sum();
                let mut w = weight * &LaurentPolynomial::monomial(1, exponent);
                for _ in 0..loops {
                    w = &w * &loop_value;
                }
                let new_key: Vec<(u32, u32)> = ends.into_iter().filter(|&(x, y)| x < y).collect();
                let slot = next.entry(new_key).or_insert_with(LaurentPolynomial::zero);
                *slot += &w;
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(LaurentPolynomial::zero);
    total.div_exact(&loop_value)
}

/// Jones polynomial `V(t) = (-A³)^{-w} ⟨D⟩` at `A = t^{-1/4}`.
///
/// With this convention the tabulated trefoil `X[1,4,2,5] X[3,6,4,1]
/// X[5,2,6,3]` (all crossings negative) has `V = -t⁻⁴ + t⁻³ + t⁻¹`, and the
/// closure of `σ₁³` has `V = t + t³ - t⁴`.
pub fn jones_polynomial(pd: &PDCode, cap: usize) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket(pd, cap)?;
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = &bracket * &LaurentPolynomial::monomial(sign, (-3 * w) as i32);
    let mut terms = Vec::new();
    for (e, c) in normalized.terms() {
        if e % 4 != 0 {
            return Err(Error::MalformedPd(format!("bracket exponent {e} is not a multiple of 4")));
        }
        terms.push((-e / 4, c));
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_diagrams() {
        assert_eq!(jones_polynomial(&PDCode::unknot(), 22).unwrap(), poly("1"));
        let twisted = PDCode::from_braid_closure(&BraidWord::parse(3, "1 -2").unwrap()).unwrap();
        assert_eq!(jones_polynomial(&twisted, 22).unwrap(), poly("1"));
    }

    #[test]
    fn trefoils() {
        let tabulated = PDCode::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_eq!(jones_polynomial(&tabulated, 22).unwrap(), poly("-t^-4 + t^-3 + t^-1"));
        let positive = PDCode::from_braid_closure(&BraidWord::parse(2, "1 1 1").unwrap()).unwrap();
        assert_eq!(jones_polynomial(&positive, 22).unwrap(), poly("t + t^3 - t^4"));
    }

    #[test]
    fn torus_two_five() {
        // Classical closed form for T(2,5): t² + t⁴ - t⁵ + t⁶ - t⁷.
        let pd = PDCode::from_braid_closure(&BraidWord::parse(2, "1 1 1 1 1").unwrap()).unwrap();
        assert_eq!(jones_polynomial(&pd, 22).unwrap(), poly("t^2 + t^4 - t^5 + t^6 - t^7"));
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let pd = PDCode::from_braid_closure(&BraidWord::parse(3, "1 -2 1 -2").unwrap()).unwrap();
        let v = jones_polynomial(&pd, 22).unwrap();
        assert_eq!(v, poly("t^-2 - t^-1 + 1 - t + t^2"));
        assert_eq!(v, v.invert_variable());
    }

    #[test]
    fn cap_is_enforced() {
        let letters = vec![1; 23];
        let pd = PDCode::from_braid_closure(&BraidWord::new(2, letters).unwrap()).unwrap();
        assert_eq!(jones_polynomial(&pd, 22), Err(Error::CrossingCap { crossings: 23, cap: 22 }));
        assert!(jones_polynomial(&pd, 23).is_ok());
    }
}
