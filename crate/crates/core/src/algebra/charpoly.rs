use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, PolyMatrix, QMatrix, Rational};
use crate::error::{Error, Result};

/// Characteristic polynomial det(λI − M) together with the adjugate
/// adj(λI − M) = Σ_k λ^k · `adjugate[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharpolyAdjugate {
    pub charpoly: Polynomial,
    pub adjugate: Vec<QMatrix>,
}

impl CharpolyAdjugate {
    pub fn adjugate_matrix(&self) -> PolyMatrix {
        let n = self.adjugate.first().map_or(0, QMatrix::rows);
        PolyMatrix::from_fn(n, n, |i, j| {
            Polynomial::from_coeffs(self.adjugate.iter().map(|b| b.get(i, j).clone()).collect())
        })
    }
}

fn require_square(m: &QMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("characteristic polynomial of {}x{} matrix", m.rows(), m.cols())))
    }
}

fn integer_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Rescales coefficients c'_j of det(λI − D·M) to those of det(λI − M).
fn unscale(coeffs_int: Vec<BigInt>, d: &BigInt) -> Polynomial {
    let n = coeffs_int.len() - 1;
    let dq = Rational::from_integer(d.clone());
    let mut out = Vec::with_capacity(n + 1);
    // coefficient of λ^j is c'_j · D^(j−n)
    let mut factor = Rational::one();
    let mut factors = vec![Rational::one(); n + 1];
    for j in (0..n).rev() {
        factor /= &dq;
        factors[j] = factor.clone();
    }
    for (j, c) in coeffs_int.into_iter().enumerate() {
        out.push(Rational::from_integer(c) * &factors[j]);
    }
    Polynomial::from_coeffs(out)
}

/// Faddeev–LeVerrier on the integer-scaled matrix, yielding the
/// characteristic polynomial and the adjugate of λI − M.
pub fn charpoly_with_adjugate(m: &QMatrix) -> Result<CharpolyAdjugate> {
    require_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(CharpolyAdjugate { charpoly: Polynomial::one(), adjugate: Vec::new() });
    }
    let (d, a) = m.integer_scaled();
    // N_k = A N_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A N_k)/k
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut n_prev: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    let mut ns = Vec::with_capacity(n);
    for k in 1..=n {
        let mut nk = integer_matmul(&a, &n_prev);
        for (i, row) in nk.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let an = integer_matmul(&a, &nk);
        let tr: BigInt = (0..n).map(|i| &an[i][i]).sum();
        let kb = BigInt::from(k);
        debug_assert!((&tr % &kb).is_zero());
        coeffs[n - k] = -(tr / kb);
        ns.push(nk.clone());
        n_prev = nk;
    }
    // adj(λI − M) = Σ_k N_k D^(1−k) λ^(n−k)
    let dq = Rational::from_integer(d.clone());
    let mut adjugate = vec![QMatrix::zeros(n, n); n];
    let mut scale = dq.clone();
    for (idx, nk) in ns.into_iter().enumerate() {
        let k = idx + 1;
        scale /= &dq;
        adjugate[n - k] = QMatrix::from_fn(n, n, |i, j| Rational::from_integer(nk[i][j].clone()) * &scale);
    }
    Ok(CharpolyAdjugate { charpoly: unscale(coeffs, &d), adjugate })
}

/// Berkowitz division-free characteristic polynomial on the integer-scaled
/// matrix. Independent of the Faddeev–LeVerrier route.
pub fn charpoly_berkowitz(m: &QMatrix) -> Result<Polynomial> {
    require_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let (d, a) = m.integer_scaled();
    // v holds coefficients highest degree first for the trailing principal submatrix.
    let mut v: Vec<BigInt> = vec![BigInt::one(), -a[n - 1][n - 1].clone()];
    for r in (0..n - 1).rev() {
        let s = n - r - 1;
        let mut col: Vec<BigInt> = Vec::with_capacity(s + 2);
        col.push(BigInt::one());
        col.push(-a[r][r].clone());
        let mut w: Vec<BigInt> = (r + 1..n).map(|i| a[i][r].clone()).collect();
        for step in 0..s {
            let rw: BigInt = (0..s).map(|j| &a[r][r + 1 + j] * &w[j]).sum();
            col.push(-rw);
            if step + 1 < s {
                w = (0..s)
                    .map(|i| (0..s).map(|j| &a[r + 1 + i][r + 1 + j] * &w[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); s + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j && !vj.is_zero() {
                    *slot += &col[i - j] * vj;
                }
            }
        }
        v = next;
    }
    v.reverse();
    Ok(unscale(v, &d))
}

/// det(λI − M).
pub fn charpoly(m: &QMatrix) -> Result<Polynomial> {
    charpoly_berkowitz(m)
}
