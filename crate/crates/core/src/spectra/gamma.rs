use crate::algebra::{charpoly_with_adjugate, CharpolyAdjugate, PolyMatrix, Polynomial, QMatrix, RatFunMatrix, RationalFunction};
use crate::error::{Error, Result};

/// Γ = Vᵗ(λI − M)⁻¹U in reduced form, with Γ = f / g for the monic lcm g of
/// the entry denominators and a polynomial matrix f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainFunction {
    pub matrix: RatFunMatrix,
    pub reduced_denominator: Polynomial,
    pub numerator_matrix: PolyMatrix,
}

impl MainFunction {
    pub(crate) fn from_adjugate(ca: &CharpolyAdjugate, u: &QMatrix, v: &QMatrix) -> Result<Self> {
        let vt = v.transpose();
        // Vᵗ B_k U for each coefficient matrix of the adjugate.
        let coeffs: Vec<QMatrix> = ca.adjugate.iter().map(|b| &(&vt * b) * u).collect();
        let (rows, cols) = (v.cols(), u.cols());
        let mut entries = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                let num = Polynomial::from_coeffs(coeffs.iter().map(|c| c.get(a, b).clone()).collect());
                entries.push(RationalFunction::new(num, ca.charpoly.clone())?);
            }
        }
        let matrix = RatFunMatrix::from_fn(rows, cols, |a, b| entries[a * cols + b].clone());
        let g = matrix.common_denominator();
        let mut f = PolyMatrix::zeros(rows, cols);
        for a in 0..rows {
            for b in 0..cols {
                let e = matrix.get(a, b);
                let cofactor = g.div_exact(e.denominator())?;
                f.set(a, b, e.numerator() * &cofactor);
            }
        }
        Ok(MainFunction { matrix, reduced_denominator: g, numerator_matrix: f })
    }

    /// Matrix size of Γ.
    pub fn size(&self) -> (usize, usize) {
        (self.matrix.rows(), self.matrix.cols())
    }
}

fn check_sides(m: &QMatrix, u: &QMatrix, v: &QMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("block is {}x{}", m.rows(), m.cols())));
    }
    if u.rows() != m.rows() || v.rows() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "side matrices have {} and {} rows for a {}x{} block",
            u.rows(),
            v.rows(),
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Γ_M(E) = Eᵗ(λI − M)⁻¹E for a symmetric M.
pub fn gamma(m: &QMatrix, e: &QMatrix) -> Result<MainFunction> {
    if !m.is_symmetric() {
        return Err(if m.is_square() { Error::NonSymmetric } else { Error::DimensionMismatch(format!("block is {}x{}", m.rows(), m.cols())) });
    }
    main_function(m, e, e)
}

/// Vᵗ(λI − M)⁻¹U with its reduced denominator and numerator matrix.
pub fn main_function(m: &QMatrix, u: &QMatrix, v: &QMatrix) -> Result<MainFunction> {
    check_sides(m, u, v)?;
    let ca = charpoly_with_adjugate(m)?;
    MainFunction::from_adjugate(&ca, u, v)
}

/// Vᵗ(λI − M)⁻¹U, reduced entrywise.
pub fn gamma_bilinear(m: &QMatrix, u: &QMatrix, v: &QMatrix) -> Result<RatFunMatrix> {
    Ok(main_function(m, u, v)?.matrix)
}
