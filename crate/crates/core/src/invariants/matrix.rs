//! Matrices over the Laurent polynomial ring and exact determinants.

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![LaurentPolynomial::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPolynomial::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPolynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DegreeMismatch { left: c, right: bad.len() });
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPolynomial) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &LaurentPolynomial) {
        let slot = &mut self.entries[i * self.cols + j];
        *slot = &*slot + value;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch { left: self.cols, right: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DegreeMismatch { left: self.rows, right: other.rows });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    /// Drops one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != row) {
            for j in (0..self.cols).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::DegreeMismatch { left: self.rows, right: self.cols });
        }
        Ok(())
    }

    /// Laplace expansion along the first row. Exponential; for small
    /// matrices and cross-checks only.
    pub fn determinant_cofactor(&self) -> Result<LaurentPolynomial> {
        self.check_square()?;
        Ok(self.cofactor_rec())
    }

    fn cofactor_rec(&self) -> LaurentPolynomial {
        match self.rows {
            0 => LaurentPolynomial::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = LaurentPolynomial::zero();
                for j in 0..self.cols {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &self.minor(0, j).cofactor_rec();
                    if j % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    /// Fraction-free elimination over `ℤ[t]`. Each row is first multiplied by
    /// a power of `t` to clear negative exponents, and the shift is undone at
    /// the end.
    pub fn determinant_bareiss(&self) -> Result<LaurentPolynomial> {
        self.check_square()?;
        let n = self.rows;
        let mut shift = 0i32;
        let mut work: Vec<Vec<DensePoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<&LaurentPolynomial> = (0..n).map(|j| self.get(i, j)).collect();
            let low = row.iter().filter_map(|p| p.min_exponent()).min().unwrap_or(0);
            shift += low;
            work.push(row.into_iter().map(|p| DensePoly::from_laurent(p, low)).collect());
        }
        let det = bareiss(work)?;
        Ok(det.to_laurent(shift))
    }

    /// Eliminates on unit pivots (`±tᵏ`) first, choosing the sparsest pivot
    /// each time, then hands the remaining block to
    /// [`determinant_bareiss`](Self::determinant_bareiss).
    pub fn determinant(&self) -> Result<LaurentPolynomial> {
        self.check_square()?;
        let mut m = self.clone();
        let mut rows: Vec<usize> = (0..m.rows).collect();
        let mut cols: Vec<usize> = (0..m.cols).collect();
        let mut scale = LaurentPolynomial::one();

        loop {
            let row_nnz: Vec<usize> =
                rows.iter().map(|&i| cols.iter().filter(|&&j| !m.get(i, j).is_zero()).count()).collect();
            let col_nnz: Vec<usize> =
                cols.iter().map(|&j| rows.iter().filter(|&&i| !m.get(i, j).is_zero()).count()).collect();
            let mut best: Option<(usize, usize, usize)> = None;
            for (ri, &i) in rows.iter().enumerate() {
                for (ci, &j) in cols.iter().enumerate() {
                    if m.get(i, j).is_unit() {
                        let cost = (row_nnz[ri] - 1) * (col_nnz[ci] - 1);
                        if best.is_none_or(|(_, _, c)| cost < c) {
                            best = Some((ri, ci, cost));
                        }
                    }
                }
            }
            let Some((ri, ci, _)) = best else { break };
            let (pr, pc) = (rows[ri], cols[ci]);
            let pivot = m.get(pr, pc).clone();
            let (pivot_low, pivot_coeffs) = pivot.dense();
            let pivot_inv = LaurentPolynomial::monomial(pivot_coeffs[0], -pivot_low);

            for &i in rows.iter().filter(|&&i| i != pr) {
                let lead = m.get(i, pc);
                if lead.is_zero() {
                    continue;
                }
                let factor = lead * &pivot_inv;
                for &j in &cols {
                    let pj = m.get(pr, j);
                    if !pj.is_zero() {
                        let updated = m.get(i, j) - &(&factor * pj);
                        m.set(i, j, updated);
                    }
                }
            }
            scale = &scale * &pivot;
            if (ri + ci) % 2 == 1 {
                scale = -scale;
            }
            rows.remove(ri);
            cols.remove(ci);
        }

        if rows.is_empty() {
            return Ok(scale);
        }
        let mut rest = PolyMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                rest.set(a, b, m.get(i, j).clone());
            }
        }
        Ok(&scale * &rest.determinant_bareiss()?)
    }
}

/// Ordinary polynomial with `i128` coefficients and checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DensePoly(Vec<i128>);

impl DensePoly {
    fn from_laurent(p: &LaurentPolynomial, low: i32) -> Self {
        let Some(min) = p.min_exponent() else {
            return Self(Vec::new());
        };
        let (_, coeffs) = p.dense();
        let mut out = vec![0i128; (min - low) as usize];
        out.extend(coeffs.iter().map(|&c| c as i128));
        Self(out)
    }

    fn to_laurent(&self, shift: i32) -> LaurentPolynomial {
        let coeffs = self.0.iter().map(|&c| i64::try_from(c).expect("determinant coefficient fits i64")).collect();
        LaurentPolynomial::from_dense(shift, coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self(Vec::new()));
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow("determinant"))?;
                out[i + j] = out[i + j].checked_add(prod).ok_or(Error::Overflow("determinant"))?;
            }
        }
        Ok(Self(out).trim())
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.0.clone();
        out.resize(self.0.len().max(other.0.len()), 0);
        for (k, &b) in other.0.iter().enumerate() {
            out[k] = out[k].checked_sub(b).ok_or(Error::Overflow("determinant"))?;
        }
        Ok(Self(out).trim())
    }

    fn div_exact(&self, d: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self(Vec::new()));
        }
        let lead = *d.0.last().ok_or(Error::InexactDivision)?;
        if self.0.len() < d.0.len() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.0.clone();
        let qlen = rem.len() - d.0.len() + 1;
        let mut q = vec![0i128; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.0.len() - 1];
            if top % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            q[k] = c;
            if c != 0 {
                for (j, &dj) in d.0.iter().enumerate() {
                    let prod = c.checked_mul(dj).ok_or(Error::Overflow("determinant"))?;
                    rem[k + j] = rem[k + j].checked_sub(prod).ok_or(Error::Overflow("determinant"))?;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Self(q).trim())
    }
}

fn bareiss(mut m: Vec<Vec<DensePoly>>) -> Result<DensePoly> {
    let n = m.len();
    if n == 0 {
        return Ok(DensePoly(vec![1]));
    }
    let mut negate = false;
    let mut prev = DensePoly(vec![1]);
    for k in 0..n {
        // Lowest-degree nonzero pivot keeps intermediate entries short.
        let Some(p) = (k..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].0.len()) else {
            return Ok(DensePoly(Vec::new()));
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = m[k][k].mul(&m[i][j])?;
                let rhs = m[i][k].mul(&m[k][j])?;
                m[i][j] = lhs.sub(&rhs)?.div_exact(&prev)?;
            }
            m[i][k] = DensePoly(Vec::new());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { DensePoly(det.0.iter().map(|c| -c).collect()) } else { det })
}
