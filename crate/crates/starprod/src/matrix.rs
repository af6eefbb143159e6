//! Dense matrices over arbitrary-precision integers.
//!
//! Everything on the verification path is fraction-free: determinants use
//! Bareiss elimination and characteristic polynomials use the
//! Faddeev-LeVerrier recurrence, both of which divide exactly over the
//! integers at every step.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Row-major dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "non-exact division in fraction-free step");
    q
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::from(1); rows * cols],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Sum of all entries (the quadratic form 1^T M 1).
    pub fn entry_sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn scale(&self, s: &BigInt) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Kronecker product: block (i, j) of the result is `self[i][j] * other`.
    pub fn kronecker(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Assembles `[[a, b], [c, d]]`; block dimensions must be consistent.
    pub fn from_blocks(
        a: &ExactMatrix,
        b: &ExactMatrix,
        c: &ExactMatrix,
        d: &ExactMatrix,
    ) -> Result<ExactMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(format!(
                "block shapes {}x{}, {}x{}, {}x{}, {}x{}",
                a.rows, a.cols, b.rows, b.cols, c.rows, c.cols, d.rows, d.cols
            )));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Ok(ExactMatrix::from_fn(rows, cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - a.cols)].clone(),
                (false, true) => c[(i - a.rows, j)].clone(),
                (false, false) => d[(i - a.rows, j - a.cols)].clone(),
            }
        }))
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor_matrix(&self, r: usize, c: usize) -> ExactMatrix {
        assert!(r < self.rows && c < self.cols);
        ExactMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            let tmp = m[(k, j)].clone();
                            m[(k, j)] = m[(r, j)].clone();
                            m[(r, j)] = tmp;
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = exact_div(&num, &prev);
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Characteristic polynomial det(xI - M), monic with integer coefficients.
    pub fn char_poly(&self) -> Result<Polynomial> {
        Ok(self.faddeev_leverrier()?.0)
    }

    /// Matrices B_0..B_{n-1} with adj(xI - M) = sum B_k x^k.
    pub fn adjugate_series(&self) -> Result<Vec<ExactMatrix>> {
        Ok(self.faddeev_leverrier()?.1)
    }

    /// Faddeev-LeVerrier recurrence: char poly and adjugate series in one pass.
    /// Every trace division is exact over the integers.
    pub fn faddeev_leverrier(&self) -> Result<(Polynomial, Vec<ExactMatrix>)> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok((Polynomial::one(), Vec::new()));
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        // series[k] holds N_k with adj(xI - M) = sum_k N_k x^{n-1-k}.
        let mut series = Vec::with_capacity(n);
        let mut nk = ExactMatrix::identity(n);
        for k in 1..=n {
            series.push(nk.clone());
            let ak = self * &nk;
            let ck = -exact_div(&ak.trace(), &BigInt::from(k as i64));
            coeffs[n - k] = ck.clone();
            if k < n {
                let mut next = ak;
                for i in 0..n {
                    next[(i, i)] += &ck;
                }
                nk = next;
            } else {
                // Cayley-Hamilton residual: M*N_{n-1} + c_0 I must vanish.
                debug_assert!({
                    let mut residual = ak;
                    for i in 0..n {
                        residual[(i, i)] += &ck;
                    }
                    residual.entries.iter().all(Zero::is_zero)
                });
            }
        }
        series.reverse(); // ascending powers of x
        Ok((Polynomial::from_bigint_coeffs(coeffs), series))
    }

    /// Entries converted to f64 (row-major). Lossy for huge entries; callers
    /// only use this on small graph matrices.
    pub fn to_f64_grid(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| e.to_f64().expect("BigInt to f64"))
            .collect()
    }

    pub fn frobenius_norm_f64(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| {
                let v = e.to_f64().expect("BigInt to f64");
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Row-major decimal strings, the crate's on-disk matrix format.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.entries.iter().map(BigInt::to_string).collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn det_i64(m: &ExactMatrix) -> i64 {
        m.determinant().unwrap().to_i64().unwrap()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(det_i64(&ExactMatrix::identity(3)), 1);
        assert_eq!(det_i64(&ExactMatrix::ones(3, 3)), 0);
        let m = ExactMatrix::from_rows(vec![vec![2, 1], vec![7, 4]]);
        assert_eq!(det_i64(&m), 1);
        let m = ExactMatrix::from_rows(vec![vec![0, 2], vec![3, 0]]);
        assert_eq!(det_i64(&m), -6);
    }

    #[test]
    fn determinant_rejects_rectangular() {
        let m = ExactMatrix::zeros(2, 3);
        assert!(matches!(m.determinant(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn char_poly_matches_determinant_evaluations() {
        let m = ExactMatrix::from_rows(vec![vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]);
        let p = m.char_poly().unwrap();
        for t in [-1i64, 0, 1, 2] {
            let shifted = &ExactMatrix::identity(3).scale(&BigInt::from(t)) - &m;
            assert_eq!(
                p.eval_bigint(&BigInt::from(t)),
                num_rational::BigRational::from(shifted.determinant().unwrap())
            );
        }
    }

    #[test]
    fn adjugate_identity_holds() {
        // (xI - M) * adj(xI - M) = charpoly(M) * I as polynomial matrices.
        let m = ExactMatrix::from_rows(vec![vec![2, 1, 0], vec![1, 0, 3], vec![0, 3, 1]]);
        let (p, series) = m.faddeev_leverrier().unwrap();
        let n = 3;
        // Multiply (xI - M) by the series and compare coefficients.
        // Product coefficient of x^k: series[k-1] - M * series[k].
        let mut product: Vec<ExactMatrix> = Vec::new();
        for k in 0..=n {
            let mut term = ExactMatrix::zeros(n, n);
            if k > 0 {
                term = &term + &series[k - 1];
            }
            if k < n {
                term = &term - &(&m * &series[k]);
            }
            product.push(term);
        }
        for (k, term) in product.iter().enumerate() {
            let expected = ExactMatrix::identity(n).scale(p.coeff(k).numer());
            assert_eq!(term, &expected, "coefficient of x^{k}");
        }
    }

    #[test]
    fn adjugate_series_one_by_one() {
        let m = ExactMatrix::zeros(1, 1);
        let series = m.adjugate_series().unwrap();
        assert_eq!(series.len(), 1);
        assert!(series[0][(0, 0)].is_one());
    }

    #[test]
    fn kronecker_block_structure() {
        let i2 = ExactMatrix::identity(2);
        let j2 = ExactMatrix::ones(2, 2);
        let k = i2.kronecker(&j2);
        assert_eq!(k.rows(), 4);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i / 2 == j / 2 { 1 } else { 0 };
                assert_eq!(k[(i, j)], BigInt::from(expected));
            }
        }
    }

    #[test]
    fn kronecker_determinant_property() {
        // det(A (x) B) = det(A)^q det(B)^p for p x p and q x q operands.
        let a = ExactMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]]);
        let b = ExactMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        let lhs = a.kronecker(&b).determinant().unwrap();
        let det_a = a.determinant().unwrap();
        let det_b = b.determinant().unwrap();
        assert_eq!(lhs, det_a.pow(2) * det_b.pow(2));
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = ExactMatrix::from_rows(vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(det_i64(&m), 4);
    }
}
