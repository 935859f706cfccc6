use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{lcm_big, Polynomial, QMatrix, Rational};
use crate::error::{Error, Result};

/// Dense matrix with polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    /// λI − M.
    pub fn lambda_minus(m: &QMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| {
            let c = Polynomial::constant(-m.get(i, j).clone());
            if i == j {
                &c + &Polynomial::x()
            } else {
                c
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Polynomial::zero(), |acc, k| &acc + &(self.get(i, k) * rhs.get(k, j)))
        })
    }

    pub fn eval(&self, x: &Rational) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(x))
    }

    /// Upper bound on the degree of the determinant.
    pub fn det_degree_bound(&self) -> usize {
        let deg = |p: &Polynomial| p.degree().unwrap_or(0);
        let by_rows: usize = (0..self.rows).map(|i| (0..self.cols).map(|j| deg(self.get(i, j))).max().unwrap_or(0)).sum();
        let by_cols: usize = (0..self.cols).map(|j| (0..self.rows).map(|i| deg(self.get(i, j))).max().unwrap_or(0)).sum();
        by_rows.min(by_cols)
    }
}

/// Exact determinant of a square polynomial matrix: Bareiss determinants at
/// the integer points 0..=bound followed by Newton interpolation.
pub fn polymatrix_det(m: &PolyMatrix) -> Result<Polynomial> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!("determinant of {}x{} polynomial matrix", m.rows, m.cols)));
    }
    if m.rows == 0 {
        return Ok(Polynomial::one());
    }
    let bound = m.det_degree_bound();
    let values: Vec<Rational> = (0..=bound)
        .into_par_iter()
        .map(|x| m.eval(&super::rat(x as i64)).det().expect("square by construction"))
        .collect();
    Ok(interpolate_consecutive(&values))
}

/// Unique polynomial of degree < len taking `values[x]` at x = 0, 1, 2, ….
/// Forward differences and Newton's binomial form run over the integers
/// after clearing denominators; only the final coefficients are divided.
pub fn interpolate_consecutive(values: &[Rational]) -> Polynomial {
    let n = values.len();
    if n == 0 {
        return Polynomial::zero();
    }
    let den = values.iter().fold(BigInt::one(), |acc, v| lcm_big(&acc, v.denom()));
    let mut diffs: Vec<BigInt> = values.iter().map(|v| v.numer() * (&den / v.denom())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }
    // S_k = Δ^k·(d!/k!) + (x − k)·S_{k+1} with d = n − 1, so f = S_0 / d!.
    let d = n - 1;
    let mut scale = BigInt::one(); // d!/k!, starting at k = d
    let mut acc: Vec<BigInt> = vec![diffs[d].clone()];
    for k in (0..d).rev() {
        scale *= BigInt::from(k + 1);
        // acc ← acc·(x − k) + Δ^k·scale
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigInt::from(k);
        }
        next[0] += &diffs[k] * &scale;
        acc = next;
    }
    let total = scale * den; // d! · den
    Polynomial::from_coeffs(acc.into_iter().map(|c| Rational::new(c, total.clone())).collect())
}

/// Unique polynomial of degree < len through the given points (distinct x).
pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form.
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Polynomial::linear(xs[i])) + &Polynomial::constant(dd[i].clone());
    }
    acc
}
