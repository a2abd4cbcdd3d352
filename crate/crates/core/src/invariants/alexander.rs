use super::laurent::LaurentPolynomial;
use super::matrix::PolyMatrix;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::petal::PDCode;

/// Block of the reduced Burau matrix of `σᵢ^{±1}` on `n` strands, as
/// `(first index, rows)` where rows is a small square block placed on the
/// diagonal starting at that index.
fn burau_block(n: usize, letter: i32) -> (usize, Vec<Vec<LaurentPolynomial>>) {
    let i = letter.unsigned_abs() as usize;
    let t = LaurentPolynomial::t();
    let t_inv = LaurentPolynomial::monomial(1, -1);
    let one = LaurentPolynomial::one();
    let zero = LaurentPolynomial::zero();
    let (corner, diag) = if letter > 0 { (t.clone(), -&t) } else { (one.clone(), -&t_inv) };
    let lower = if letter > 0 { one.clone() } else { t_inv.clone() };

    if n == 2 {
        return (0, vec![vec![diag]]);
    }
    if i == 1 {
        return (0, vec![vec![diag, zero], vec![lower, one]]);
    }
    if i == n - 1 {
        return (n - 3, vec![vec![one, corner], vec![zero, diag]]);
    }
    (
        i - 2,
        vec![
            vec![one.clone(), corner, zero.clone()],
            vec![zero.clone(), diag, zero.clone()],
            vec![zero, lower, one],
        ],
    )
}

/// Reduced Burau image of a braid word.
pub fn reduced_burau(w: &BraidWord) -> PolyMatrix {
    let n = w.strands();
    let size = n.saturating_sub(1);
    let mut m = PolyMatrix::identity(size);
    for &l in w.letters() {
        let (start, block) = burau_block(n, l);
        let k = block.len();
        for r in 0..size {
            let old: Vec<LaurentPolynomial> = (0..k).map(|a| m.get(r, start + a).clone()).collect();
            for b in 0..k {
                let mut acc = LaurentPolynomial::zero();
                for (x, row) in old.iter().zip(&block) {
                    if !x.is_zero() && !row[b].is_zero() {
                        acc += &(x * &row[b]);
                    }
                }
                m.set(r, start + b, acc);
            }
        }
    }
    m
}

/// Alexander polynomial of a braid closure from
/// `det(I - ψ(β)) · (1 - t) / (1 - tⁿ)`.
pub fn alexander_from_braid(w: &BraidWord) -> Result<LaurentPolynomial> {
    let components = w.underlying_permutation().cycle_count();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = w.strands();
    if n == 1 {
        return Ok(LaurentPolynomial::one());
    }
    let m = reduced_burau(w);
    let det = PolyMatrix::identity(n - 1).sub(&m)?.determinant()?;
    let numerator = &det * &LaurentPolynomial::from_terms([(0, 1), (1, -1)]);
    let denominator = LaurentPolynomial::from_terms([(0, 1), (n as i32, -1)]);
    Ok(numerator.div_exact(&denominator)?.normalized())
}

/// Alexander polynomial from the Wirtinger presentation of a PD code: one
/// Fox-derivative row per crossing, with the last row and column removed.
pub fn alexander_from_pd(pd: &PDCode) -> Result<LaurentPolynomial> {
    let components = pd.component_count();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = pd.crossing_count();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let edges = pd.edge_count();

    // Arcs run between consecutive under-crossings; a new one starts at
    // every outgoing under-edge.
    let mut starts = vec![false; edges + 1];
    for x in pd.crossings() {
        starts[x[2] as usize] = true;
    }
    let mut arc_of = vec![0usize; edges + 1];
    let mut arc = 0usize;
    for e in 1..=edges {
        if starts[e] {
            arc += 1;
        }
        arc_of[e] = arc;
    }
    for slot in arc_of.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = arc;
        }
        *slot -= 1;
    }

    let t = LaurentPolynomial::t();
    let one = LaurentPolynomial::one();
    let one_minus_t = &one - &t;
    let mut m = PolyMatrix::zeros(n, n);
    for (row, x) in pd.crossings().iter().enumerate() {
        let (a, c, over) = (arc_of[x[0] as usize], arc_of[x[2] as usize], arc_of[x[1] as usize]);
        let (ca, cc) = if pd.sign(row) > 0 { (t.clone(), -&one) } else { (-&one, t.clone()) };
        m.add_to(row, a, &ca);
        m.add_to(row, c, &cc);
        m.add_to(row, over, &one_minus_t);
    }
    Ok(m.minor(n - 1, n - 1).determinant()?.normalized())
}

/// `(t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1))`
pub fn torus_alexander(r: u32, s: u32) -> Result<LaurentPolynomial> {
    if r < 2 || s < 2 {
        return Err(Error::InvalidTorusPair { r, s, reason: "both parameters must be at least 2" });
    }
    if gcd(r, s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    let minus_one_plus = |k: u32| LaurentPolynomial::from_terms([(0, -1), (k as i32, 1)]);
    let numerator = &minus_one_plus(r * s) * &minus_one_plus(1);
    let denominator = &minus_one_plus(r) * &minus_one_plus(s);
    Ok(numerator.div_exact(&denominator)?.normalized())
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braids_equal;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    fn word(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn burau_respects_braid_relations() {
        let pairs = [("1 2 1", "2 1 2"), ("2 3 2", "3 2 3"), ("1 3", "3 1"), ("1 -1", ""), ("-2 4 2", "4")];
        for (a, b) in pairs {
            let (wa, wb) = (word(5, a), word(5, b));
            assert!(braids_equal(&wa, &wb).unwrap());
            assert_eq!(reduced_burau(&wa), reduced_burau(&wb), "{a} vs {b}");
        }
    }

    #[test]
    fn braid_route_small_knots() {
        assert_eq!(alexander_from_braid(&word(2, "1")).unwrap(), poly("1"));
        assert_eq!(alexander_from_braid(&BraidWord::empty(1).unwrap()).unwrap(), poly("1"));
        assert_eq!(alexander_from_braid(&word(2, "1 1 1")).unwrap(), poly("1 - t + t^2"));
        assert_eq!(alexander_from_braid(&word(3, "1 2 1 2")).unwrap(), poly("1 - t + t^2"));
        // Figure eight.
        assert_eq!(alexander_from_braid(&word(3, "1 -2 1 -2")).unwrap(), poly("1 - 3*t + t^2"));
        assert_eq!(alexander_from_braid(&word(2, "1 1")), Err(Error::NotAKnot(2)));
    }

    #[test]
    fn torus_closed_form() {
        assert_eq!(torus_alexander(2, 3).unwrap(), poly("1 - t + t^2"));
        assert_eq!(torus_alexander(2, 5).unwrap(), poly("1 - t + t^2 - t^3 + t^4"));
        let t34 = torus_alexander(3, 4).unwrap();
        assert_eq!(t34.span(), 6);
        assert!(t34.is_palindromic());
        assert_eq!(t34, poly("1 - t + t^3 - t^5 + t^6"));
        assert_eq!(torus_alexander(2, 4), Err(Error::NotCoprime { r: 2, s: 4 }));
        assert!(torus_alexander(1, 4).is_err());
    }

    #[test]
    fn pd_route_tabulated_trefoil() {
        let pd = PDCode::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_eq!(alexander_from_pd(&pd).unwrap(), poly("1 - t + t^2"));
        assert_eq!(alexander_from_pd(&PDCode::unknot()).unwrap(), poly("1"));
    }

    #[test]
    fn routes_agree_on_braid_closures() {
        for (n, w) in [(2, "1 1 1 1 1"), (3, "1 -2 1 -2"), (3, "1 1 2 -1 2 2"), (4, "1 2 3 1 2 3 1 2 3"), (4, "1 -2 3 -1 2 -3 2")] {
            let b = word(n, w);
            if b.underlying_permutation().cycle_count() != 1 {
                continue;
            }
            let pd = PDCode::from_braid_closure(&b).unwrap();
            assert!(alexander_from_pd(&pd).unwrap().equal_up_to_units(&alexander_from_braid(&b).unwrap()), "{w}");
        }
    }

    #[test]
    fn torus_braids_match_closed_form() {
        // (σ₁⋯σᵣ₋₁)^s closes to T(r,s).
        for (r, s) in [(2u32, 3u32), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5)] {
            let base: Vec<i32> = (1..r as i32).collect();
            let letters: Vec<i32> = base.iter().copied().cycle().take(base.len() * s as usize).collect();
            let b = BraidWord::new(r as usize, letters).unwrap();
            let expected = torus_alexander(r, s).unwrap();
            assert_eq!(alexander_from_braid(&b).unwrap(), expected);
            assert_eq!(expected.span() as u32, (r - 1) * (s - 1));
            let pd = PDCode::from_braid_closure(&b).unwrap();
            assert_eq!(alexander_from_pd(&pd).unwrap(), expected);
        }
    }
}
