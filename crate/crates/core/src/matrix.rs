//! Dense matrices over a [`FieldContext`] with exact elimination.
//!
//! Shape mismatches in products and sums are programming errors and panic.
//! Everything is small here (dimension at most a few dozen), so the routines
//! favour plain Gauss-Jordan elimination over anything clever; products skip
//! zero entries because most matrices in play are bidiagonal or triangular.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::field::{FieldContext, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: FieldContext,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ragged rows: expected {expected} columns, row {row} has {found}")]
pub struct RaggedRows {
    pub expected: usize,
    pub row: usize,
    pub found: usize,
}

impl Matrix {
    pub fn zeros(ctx: &FieldContext, rows: usize, cols: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &FieldContext, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn diagonal(ctx: &FieldContext, entries: &[FieldElement]) -> Self {
        let mut m = Self::zeros(ctx, entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_fn(
        ctx: &FieldContext,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(ctx: &FieldContext, rows: Vec<Vec<FieldElement>>) -> Result<Self, RaggedRows> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(RaggedRows {
                    expected: cols,
                    row: i,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            ctx: ctx.clone(),
            rows: n,
            cols,
            data,
        })
    }

    /// Integer entries, for tests and fixed examples.
    pub fn from_i64_rows(ctx: &FieldContext, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| ctx.from_i64(x)).collect())
            .collect();
        Self::from_rows(ctx, rows).expect("rectangular literal")
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
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

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> FieldElement {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(self.ctx.zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Self {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self - s I`.
    pub fn shift(&self, s: &FieldElement) -> Self {
        assert!(self.is_square(), "shift of a non-square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i) - s;
            out.set(i, i, v);
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.rows, "vector length");
        (0..self.cols)
            .map(|c| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(self.ctx.zero(), |acc, (r, x)| acc + x * self.get(r, c))
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(self.ctx.zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact row rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.ctx.zero(); self.cols];
                v[f] = self.ctx.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Basis of the left null space `{x : x M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<FieldElement>> {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Self::from_fn(&self.ctx, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                self.ctx.one()
            } else {
                self.ctx.zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(&self.ctx, n, n, |r, c| red.get(r, c + n).clone()))
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> FieldElement {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.ctx.one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return self.ctx.zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..m.rows {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Rank of a family of matrices viewed as vectors (each flattened row-major).
    pub fn span_rank(ctx: &FieldContext, family: &[&Matrix]) -> usize {
        if family.is_empty() {
            return 0;
        }
        let len = family[0].data.len();
        let stacked = Self::from_fn(ctx, family.len(), len, |r, c| family[r].data[c].clone());
        stacked.rank()
    }

    fn assert_same_shape(&self, other: &Matrix, what: &str) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{what}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "product shape mismatch");
        let mut out = Matrix::zeros(&self.ctx, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.assert_same_shape(rhs, "sum");
        Matrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.assert_same_shape(rhs, "difference");
        Matrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_element;

    fn q() -> FieldContext {
        FieldContext::rationals()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(Matrix::identity(&q(), 4).rank(), 4);
        assert_eq!(Matrix::zeros(&q(), 3, 5).rank(), 0);
    }

    #[test]
    fn rank_with_dependent_rows() {
        // Third row is 3*first - second.
        let m = Matrix::from_i64_rows(
            &q(),
            &[&[1, 1, 1, 1], &[0, 1, 2, 3], &[3, 2, 1, 0], &[0, 2, 2, 0]],
        );
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = Matrix::from_i64_rows(
            &q(),
            &[&[1, 1, 1, 1], &[0, 1, 2, 3], &[3, 2, 1, 0], &[0, 2, 2, 0]],
        );
        let ker = m.left_kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.left_apply(&ker[0]).iter().all(FieldElement::is_zero));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64_rows(&q(), &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(&q(), 3));
        // 2(12-1) - 1(4-0) = 18
        assert_eq!(m.determinant(), q().from_i64(18));
        let singular = Matrix::from_i64_rows(&q(), &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.determinant().is_zero());
    }

    #[test]
    fn determinant_of_row_swap_is_negated() {
        let m = Matrix::from_i64_rows(&q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), q().from_i64(-1));
    }

    #[test]
    fn over_finite_field() {
        let gf2 = FieldContext::prime(2).unwrap();
        // Rows sum to zero mod 2.
        let m = Matrix::from_i64_rows(&gf2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let qm = Matrix::from_i64_rows(&q(), &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(qm.rank(), 3);
    }

    #[test]
    fn display_is_row_major() {
        let m = Matrix::from_rows(
            &q(),
            vec![
                vec![parse_element("1/2", &q()).unwrap(), q().zero()],
                vec![q().one(), q().from_i64(-3)],
            ],
        )
        .unwrap();
        assert_eq!(m.to_string(), "[[1/2, 0], [1, -3]]");
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::from_rows(&q(), vec![vec![q().one()], vec![]]).unwrap_err();
        assert_eq!(err.row, 1);
    }
}
