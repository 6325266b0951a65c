//! Dense exact matrices over `Q(ζ_r)`.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{CycScalar, CyclotomicField};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Arc<CyclotomicField>,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(field: &Arc<CyclotomicField>, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![CycScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = CycScalar::one(field);
        }
        m
    }

    pub fn scalar(field: &Arc<CyclotomicField>, n: usize, c: &CycScalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(
        field: &Arc<CyclotomicField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: CycScalar) {
        self.data[i * self.cols + j] = c;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Mat::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::SizeMismatch {
                expected: self.rows * self.cols,
                got: rhs.rows * rhs.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn add_scaled_assign(&mut self, rhs: &Mat, c: &CycScalar) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero(&self.field);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    /// `Some(c)` when the matrix equals `c · I`.
    pub fn as_scalar(&self) -> Option<CycScalar> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        (*self == Mat::scalar(&self.field, self.rows, &c)).then_some(c)
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        Mat::from_fn(&self.field, rows, cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<CycScalar> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(CycScalar::one(&self.field));
        }
        let mut a: Vec<Vec<CycScalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = CycScalar::one(&self.field);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return Ok(CycScalar::zero(&self.field)),
                }
            }
            let prev_inv = prev.inverse()?;
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num * &prev_inv;
                }
                a[i][k] = CycScalar::zero(&self.field);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<CycScalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][col].inverse().expect("pivot is nonzero");
            let (top, below) = a.split_at_mut(rank + 1);
            let pivot = &top[rank];
            for row in below.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &inv;
                for (x, p) in row.iter_mut().zip(pivot).skip(col) {
                    *x -= &(&factor * p);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<CycScalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<CycScalar>> = (0..n)
            .map(|i| Mat::identity(&self.field, n).row(i).to_vec())
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .ok_or_else(|| Error::Singular(format!("{n}x{n} matrix has rank < {n}")))?;
            a.swap(col, p);
            inv.swap(col, p);
            let piv = a[col][col].inverse()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &piv;
                inv[col][j] = &inv[col][j] * &piv;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].clone();
                for j in 0..n {
                    let t = &factor * &a[col][j];
                    a[i][j] -= &t;
                    let t = &factor * &inv[col][j];
                    inv[i][j] -= &t;
                }
            }
        }
        Ok(Mat::from_fn(&self.field, n, n, |i, j| inv[i][j].clone()))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[CycScalar]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}
