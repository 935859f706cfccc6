use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::algebra::QMatrix;
use crate::error::{Error, Result};

/// Eigenvalue cluster from a floating-point eigensolve; diagnostics only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Numeric eigenvalue with its projection test against a side matrix E.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericEigenClass {
    pub value: f64,
    pub multiplicity: usize,
    pub e_main: bool,
    pub projection_norm: f64,
}

const CLUSTER_TOL: f64 = 1e-8;

fn to_dmatrix(m: &QMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), &m.to_f64())
}

fn eigen(m: &QMatrix) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    if !m.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    Ok(SymmetricEigen::new(to_dmatrix(m)))
}

/// Index groups of sorted eigenvalues closer than the clustering tolerance.
fn clusters(values: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match out.last_mut() {
            Some(group) if (values[idx] - values[*group.last().unwrap()]).abs() <= CLUSTER_TOL * scale => group.push(idx),
            _ => out.push(vec![idx]),
        }
    }
    out
}

/// Ascending eigenvalues of a symmetric matrix, clustered.
pub fn numeric_spectrum(m: &QMatrix) -> Result<Vec<NumericEigenvalue>> {
    let eig = eigen(m)?;
    let values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    Ok(clusters(&values)
        .into_iter()
        .map(|g| NumericEigenvalue { value: g.iter().map(|&i| values[i]).sum::<f64>() / g.len() as f64, multiplicity: g.len() })
        .collect())
}

/// Numeric E-main test: θ is flagged when ‖Qᵗ E‖ > `tol` for an orthonormal
/// basis Q of its eigenspace. Cross-check oracle for the exact classifier.
pub fn classify_e_main_numeric(m: &QMatrix, e: &QMatrix, tol: f64) -> Result<Vec<NumericEigenClass>> {
    if e.rows() != m.rows() {
        return Err(Error::DimensionMismatch(format!("E has {} rows for a {}x{} matrix", e.rows(), m.rows(), m.cols())));
    }
    let eig = eigen(m)?;
    let values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    let ed = to_dmatrix(e);
    Ok(clusters(&values)
        .into_iter()
        .map(|g| {
            let q = DMatrix::from_columns(&g.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>());
            let norm = (q.transpose() * &ed).norm();
            NumericEigenClass {
                value: g.iter().map(|&i| values[i]).sum::<f64>() / g.len() as f64,
                multiplicity: g.len(),
                e_main: norm > tol,
                projection_norm: norm,
            }
        })
        .collect())
}
