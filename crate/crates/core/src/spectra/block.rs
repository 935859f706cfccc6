use rayon::prelude::*;

use super::gamma::MainFunction;
use crate::algebra::{charpoly_with_adjugate, polymatrix_det, PolyMatrix, Polynomial, QMatrix};
use crate::error::{Error, Result};

/// Block matrix with square diagonal blocks M_i and low-rank off-diagonal
/// blocks U_i·C_ij·V_jᵗ, where every U_i, V_i has the same width p.
///
/// An H_m-join has M_i = A(G_i), U_i = V_i = E_i and C_ij = ρ_ij·I_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub blocks: Vec<QMatrix>,
    pub left: Vec<QMatrix>,
    pub right: Vec<QMatrix>,
    /// `coupling[i][j]` for i ≠ j; `None` means a zero block.
    pub coupling: Vec<Vec<Option<QMatrix>>>,
}

/// Result of the block determinant identity
/// φ_M(λ)·Π g_i^p = Π φ_{M_i}(λ) · Φ(λ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFactorization {
    pub factor_charpolys: Vec<Polynomial>,
    pub main_functions: Vec<MainFunction>,
    /// Diagonal blocks g_i·I_p, off-diagonal blocks −f_i·C_ij.
    pub phi_matrix: PolyMatrix,
    pub phi: Polynomial,
    pub charpoly: Polynomial,
    pub side_width: usize,
}

impl BlockSystem {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn side_width(&self) -> usize {
        self.left.first().map_or(0, QMatrix::cols)
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(QMatrix::rows).sum()
    }

    fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::InvalidParameters("block system without blocks".into()));
        }
        if self.left.len() != k || self.right.len() != k || self.coupling.len() != k {
            return Err(Error::SizeMismatch("side matrices and coupling must match the block count".into()));
        }
        let p = self.side_width();
        for i in 0..k {
            let n = self.blocks[i].rows();
            if !self.blocks[i].is_square() {
                return Err(Error::DimensionMismatch(format!("block {} is not square", i + 1)));
            }
            for (name, s) in [("left", &self.left[i]), ("right", &self.right[i])] {
                if s.rows() != n || s.cols() != p {
                    return Err(Error::DimensionMismatch(format!(
                        "{name} side matrix {} is {}x{}, expected {n}x{p}",
                        i + 1,
                        s.rows(),
                        s.cols()
                    )));
                }
            }
            if self.coupling[i].len() != k {
                return Err(Error::SizeMismatch(format!("coupling row {} has wrong length", i + 1)));
            }
            for c in self.coupling[i].iter().flatten() {
                if c.rows() != p || c.cols() != p {
                    return Err(Error::DimensionMismatch(format!("coupling block is {}x{}, expected {p}x{p}", c.rows(), c.cols())));
                }
            }
            if self.coupling[i][i].is_some() {
                return Err(Error::InvalidParameters("diagonal coupling blocks must be absent".into()));
            }
        }
        Ok(())
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = acc;
                acc += b.rows();
                o
            })
            .collect()
    }

    /// The full matrix, assembled entrywise.
    pub fn assemble(&self) -> Result<QMatrix> {
        self.validate()?;
        let offsets = self.offsets();
        let n = self.order();
        let mut out = QMatrix::zeros(n, n);
        for i in 0..self.k() {
            out.set_block(offsets[i], offsets[i], &self.blocks[i]);
            for j in 0..self.k() {
                if let Some(c) = &self.coupling[i][j] {
                    let block = &(&self.left[i] * c) * &self.right[j].transpose();
                    out.set_block(offsets[i], offsets[j], &block);
                }
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial through the per-block main functions and
    /// the polynomial matrix Φ, checked by exact division.
    pub fn factorize(&self) -> Result<BlockFactorization> {
        self.validate()?;
        let k = self.k();
        let p = self.side_width();
        let per_block: Vec<(Polynomial, MainFunction)> = (0..k)
            .into_par_iter()
            .map(|i| {
                let ca = charpoly_with_adjugate(&self.blocks[i])?;
                let mf = MainFunction::from_adjugate(&ca, &self.left[i], &self.right[i])?;
                Ok((ca.charpoly, mf))
            })
            .collect::<Result<Vec<_>>>()?;
        let (factor_charpolys, main_functions): (Vec<_>, Vec<_>) = per_block.into_iter().unzip();

        let mut phi_matrix = PolyMatrix::zeros(k * p, k * p);
        for i in 0..k {
            let g = &main_functions[i].reduced_denominator;
            let f = &main_functions[i].numerator_matrix;
            for a in 0..p {
                phi_matrix.set(i * p + a, i * p + a, g.clone());
            }
            for j in 0..k {
                let Some(c) = &self.coupling[i][j] else { continue };
                // block (i, j) = −f_i · C_ij
                for a in 0..p {
                    for b in 0..p {
                        let mut acc = Polynomial::zero();
                        for t in 0..p {
                            let ctb = c.get(t, b);
                            if !num_traits::Zero::is_zero(ctb) {
                                acc = &acc + &f.get(a, t).scale(ctb);
                            }
                        }
                        phi_matrix.set(i * p + a, j * p + b, -&acc);
                    }
                }
            }
        }
        let phi = polymatrix_det(&phi_matrix)?;
        let numerator: Polynomial = factor_charpolys.iter().cloned().product::<Polynomial>() * &phi;
        let denominator: Polynomial = main_functions.iter().map(|mf| mf.reduced_denominator.pow(p)).product();
        let charpoly = numerator.div_exact(&denominator).map_err(|e| match e {
            Error::InexactDivision(msg) => Error::InexactDivision(format!("Π g_i^p does not divide Π φ_i · Φ: {msg}")),
            other => other,
        })?;
        Ok(BlockFactorization { factor_charpolys, main_functions, phi_matrix, phi, charpoly, side_width: p })
    }
}
