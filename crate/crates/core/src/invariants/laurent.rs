use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer Laurent polynomial in `t`.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<(i32, i64)>", into = "Vec<(i32, i64)>")]
pub struct LaurentPolynomial {
    low: i32,
    coeffs: Vec<i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("Laurent polynomial coefficient overflow")
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·tᵉ`
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::from_dense(e, vec![c])
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Coefficients starting at exponent `low`.
    pub fn from_dense(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Sums duplicate exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let terms: Vec<(i32, i64)> = terms.into_iter().filter(|&(_, c)| c != 0).collect();
        let Some(low) = terms.iter().map(|&(e, _)| e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|&(e, _)| e).max().unwrap();
        let mut coeffs = vec![0i64; (high - low) as usize + 1];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = checked(slot.checked_add(c));
        }
        Self::from_dense(low, coeffs)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// `±tᵏ`
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs() == 1
    }

    pub fn coefficient(&self, e: i32) -> i64 {
        if self.is_zero() || e < self.low {
            return 0;
        }
        self.coeffs.get((e - self.low) as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn dense(&self) -> (i32, &[i64]) {
        (self.low, &self.coeffs)
    }

    /// Multiplies by `tᵏ`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// `p(t⁻¹)`
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.max_exponent().unwrap();
        Self { low: -high, coeffs: self.coeffs.iter().rev().copied().collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at an integer; only exact when every negative power divides,
    /// so the evaluation point must be `±1`.
    pub fn eval_unit(&self, x: i64) -> i128 {
        assert!(x == 1 || x == -1, "eval_unit takes ±1");
        self.terms()
            .map(|(e, c)| if x == -1 && e.rem_euclid(2) == 1 { -(c as i128) } else { c as i128 })
            .sum()
    }

    /// Lowest exponent 0 and positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = *self.coeffs.last().unwrap();
        let sign = if lead < 0 { -1 } else { 1 };
        Self { low: 0, coeffs: self.coeffs.iter().map(|&c| sign * c).collect() }
    }

    /// True iff `self = ±tᵏ·other` for some integer `k`.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `p(t) ≐ p(t⁻¹)`
    pub fn is_symmetric(&self) -> bool {
        self.equal_up_to_units(&self.invert_variable())
    }

    /// Coefficient list reads the same both ways, with no sign flip.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exact division; both operands are treated as `tᵏ` times an ordinary
    /// polynomial and the quotient must have integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d = &divisor.coeffs;
        let lead = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return Err(Error::InexactDivision);
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1];
            if top % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            q[k] = c;
            if c != 0 {
                for (j, &dj) in d.iter().enumerate() {
                    rem[k + j] = checked(rem[k + j].checked_sub(checked(c.checked_mul(dj))));
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_dense(self.low - divisor.low, q))
    }

    /// `[[exp, coeff], ...]`
    pub fn to_pairs(&self) -> Vec<(i32, i64)> {
        self.terms().collect()
    }
}

impl From<Vec<(i32, i64)>> for LaurentPolynomial {
    fn from(pairs: Vec<(i32, i64)>) -> Self {
        Self::from_terms(pairs)
    }
}

impl From<LaurentPolynomial> for Vec<(i32, i64)> {
    fn from(p: LaurentPolynomial) -> Self {
        p.to_pairs()
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
        let mut coeffs = vec![0i64; (high - low) as usize + 1];
        for p in [self, rhs] {
            let off = (p.low - low) as usize;
            for (k, &c) in p.coeffs.iter().enumerate() {
                coeffs[off + k] = checked(coeffs[off + k].checked_add(c));
            }
        }
        LaurentPolynomial::from_dense(low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { low: self.low, coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = checked(coeffs[i + j].checked_add(checked(a.checked_mul(b))));
            }
        }
        LaurentPolynomial::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = &*self - rhs;
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ascending order, e.g. `1 - t + t^2` or `-t^-4 + t^-3 + t^-1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse { position, message: message.into() };
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_int = |pos: &mut usize| -> Option<i64> {
            let start = *pos;
            if *pos < bytes.len() && bytes[*pos] == b'-' {
                *pos += 1;
            }
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos].parse().ok()
        };

        let mut terms = Vec::new();
        let mut first = true;
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(0, "empty polynomial"));
        }
        while pos < bytes.len() {
            let mut sign = 1i64;
            if !first {
                match bytes[pos] {
                    b'+' => {}
                    b'-' => sign = -1,
                    _ => return Err(err(pos, "expected '+' or '-'")),
                }
                pos += 1;
                skip_ws(&mut pos);
            } else if bytes[pos] == b'-' {
                sign = -1;
                pos += 1;
            }
            first = false;

            let term_start = pos;
            let mut coeff = 1i64;
            let mut have_coeff = false;
            if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                coeff = read_int(&mut pos).ok_or_else(|| err(term_start, "bad coefficient"))?;
                have_coeff = true;
            }
            let mut exp = 0i32;
            if have_coeff && pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b't' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let e_start = pos;
                    exp = read_int(&mut pos).ok_or_else(|| err(e_start, "bad exponent"))? as i32;
                }
            } else if !have_coeff {
                return Err(err(term_start, "expected a term"));
            }
            terms.push((exp, sign * coeff));
            skip_ws(&mut pos);
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let p = LaurentPolynomial::from_terms([(0, 1), (1, -1), (2, 1)]);
        assert_eq!(p.to_string(), "1 - t + t^2");
        assert_eq!(poly("1 - t + t^2"), p);
        let j = poly("-t^-4 + t^-3 + t^-1");
        assert_eq!(j.to_pairs(), vec![(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(j.to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(poly("3 + 2*t - 5*t^3").to_string(), "3 + 2*t - 5*t^3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(poly("0"), LaurentPolynomial::zero());
        assert!(matches!("1 + ".parse::<LaurentPolynomial>(), Err(Error::Parse { .. })));
        assert!("1 t".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn units() {
        let p = poly("1 - t + t^2");
        assert!(p.equal_up_to_units(&p));
        assert!(p.equal_up_to_units(&(&LaurentPolynomial::monomial(-1, 3) * &p)));
        assert!(!p.equal_up_to_units(&poly("1 + t + t^2")));
        assert!(LaurentPolynomial::monomial(-1, 5).is_unit());
    }

    #[test]
    fn exact_division() {
        let a = poly("1 - t^6");
        let b = poly("1 - t^2");
        assert_eq!(a.div_exact(&b).unwrap(), poly("1 + t^2 + t^4"));
        assert_eq!(poly("t + t^2").div_exact(&poly("1 + t")).unwrap(), poly("t"));
        assert_eq!(poly("1 + t^2").div_exact(&poly("1 + t")), Err(Error::InexactDivision));
        assert_eq!(poly("2 + 2*t").div_exact(&poly("2")).unwrap(), poly("1 + t"));
    }

    #[test]
    fn evaluation_and_symmetry() {
        let trefoil = poly("1 - t + t^2");
        assert_eq!(trefoil.eval_unit(-1), 3);
        assert!(trefoil.is_symmetric());
        assert!(trefoil.is_palindromic());
        assert!(!poly("1 + 2*t").is_symmetric());
        assert_eq!(poly("t^-1 + 3").invert_variable(), poly("t + 3"));
    }

    #[test]
    fn json_shape() {
        let p = poly("-t^-4 + t^-3 + t^-1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[-4,-1],[-3,1],[-1,1]]");
        let back: LaurentPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn small_poly() -> impl Strategy<Value = LaurentPolynomial> {
        (-3i32..3, proptest::collection::vec(-4i64..5, 0..5))
            .prop_map(|(low, coeffs)| LaurentPolynomial::from_dense(low, coeffs))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a);
        }

        #[test]
        fn brute_force_multiplication(a in small_poly(), b in small_poly()) {
            let product = &a * &b;
            for e in -10..14 {
                let expected: i64 = (-5..8).map(|i| a.coefficient(i) * b.coefficient(e - i)).sum();
                prop_assert_eq!(product.coefficient(e), expected);
            }
        }
    }
}
