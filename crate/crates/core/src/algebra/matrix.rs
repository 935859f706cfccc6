use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{display_rational, lcm_big, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix literal");
        Self::from_fn(r, c, |i, j| super::rat(rows[i][j]))
    }

    /// Column vector of ones on the listed rows.
    pub fn indicator(n: usize, rows: &[usize]) -> Self {
        let mut m = Self::zeros(n, 1);
        for &r in rows {
            m.data[r] = Rational::one();
        }
        m
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::one(); rows * cols] }
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn checked_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[QMatrix]) -> QMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = QMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> QMatrix {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Simultaneous permutation of rows and columns: entry (i, j) of the
    /// result is entry (perm[i], perm[j]) of `self`.
    pub fn permuted(&self, perm: &[usize]) -> QMatrix {
        Self::from_fn(perm.len(), perm.len(), |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Common denominator D and the integer matrix D·self.
    pub fn integer_scaled(&self) -> (BigInt, Vec<Vec<BigInt>>) {
        let d = self.data.iter().fold(BigInt::one(), |acc, x| lcm_big(&acc, x.denom()));
        let dq = Rational::from_integer(d.clone());
        let rows = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| (self.get(i, j) * &dq).to_integer()).collect())
            .collect();
        (d, rows)
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        // Scale each row to integers separately to keep entries small.
        let mut scale = Rational::one();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let d = (0..n).fold(BigInt::one(), |acc, j| lcm_big(&acc, self.get(i, j).denom()));
            let dq = Rational::from_integer(d.clone());
            rows.push((0..n).map(|j| (self.get(i, j) * &dq).to_integer()).collect::<Vec<_>>());
            scale /= dq;
        }
        Ok(Rational::from_integer(bareiss_det(rows)) * scale)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Bareiss fraction-free determinant of a square integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                row[j] *= &pivot_row[k];
                row[j] -= &lead * &pivot_row[j];
                row[j] /= &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(display_rational).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}
