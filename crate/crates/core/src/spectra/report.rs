use serde_json::{json, Value};

use super::block::{BlockFactorization, BlockSystem};
use super::classify::{classify_by_denominator, EigenClass, EigenClassJson};
use super::gamma::gamma;
use super::ledger::{carry_forward_rows, LedgerRow};
use super::numeric::{numeric_spectrum, NumericEigenvalue};
use crate::algebra::{charpoly_berkowitz, display_rational, QMatrix, Polynomial};
use crate::error::{Error, Result};
use crate::graph::{UniversalParams};
use crate::join::{degree_corrections, JoinSpec};

/// Everything the block route knows about a join's spectrum, checked against
/// the characteristic polynomial of the assembled matrix.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub order: usize,
    pub side_width: usize,
    pub charpoly_direct: Polynomial,
    pub charpoly_block: Polynomial,
    pub factor_charpolys: Vec<Polynomial>,
    pub reduced_denominators: Vec<Polynomial>,
    pub phi: Polynomial,
    pub phi_degree: usize,
    /// Per factor, classified against its right side matrix.
    pub classes: Vec<Vec<EigenClass>>,
    pub carry_forward: Vec<LedgerRow>,
    pub numeric_spectrum: Vec<NumericEigenvalue>,
    pub factorization: BlockFactorization,
}

impl SpectralReport {
    /// Analyzes a block system: block route, direct charpoly, classification,
    /// ledger and numeric spectrum. Fails if any checked identity breaks.
    pub fn analyze(system: &BlockSystem) -> Result<Self> {
        let matrix = system.assemble()?;
        let factorization = system.factorize()?;
        let charpoly_direct = charpoly_berkowitz(&matrix)?;
        let p = factorization.side_width;
        let classes = system
            .blocks
            .iter()
            .zip(&system.right)
            .zip(&factorization.factor_charpolys)
            .zip(&factorization.main_functions)
            .map(|(((m, v), phi), mf)| {
                if system.left == system.right {
                    Ok(classify_by_denominator(phi, &mf.reduced_denominator))
                } else {
                    Ok(classify_by_denominator(phi, &gamma(m, v)?.reduced_denominator))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let carry_forward = carry_forward_rows(&classes, p, &charpoly_direct);
        let numeric = if matrix.is_symmetric() { numeric_spectrum(&matrix)? } else { Vec::new() };
        let report = SpectralReport {
            order: matrix.rows(),
            side_width: p,
            charpoly_block: factorization.charpoly.clone(),
            factor_charpolys: factorization.factor_charpolys.clone(),
            reduced_denominators: factorization.main_functions.iter().map(|mf| mf.reduced_denominator.clone()).collect(),
            phi_degree: factorization.phi.degree().unwrap_or(0),
            phi: factorization.phi.clone(),
            charpoly_direct,
            classes,
            carry_forward,
            numeric_spectrum: numeric,
            factorization,
        };
        report.verify()?;
        Ok(report)
    }

    /// Re-checks the block identity, the degree of Φ and every ledger row.
    pub fn verify(&self) -> Result<()> {
        if self.charpoly_direct != self.charpoly_block {
            return Err(Error::IdentityViolated(format!(
                "block factorization: direct charpoly {} differs from block charpoly {}",
                self.charpoly_direct, self.charpoly_block
            )));
        }
        let expected: usize = self.reduced_denominators.iter().map(|g| self.side_width * g.degree().unwrap_or(0)).sum();
        if self.phi_degree != expected || !self.phi.is_monic() {
            return Err(Error::IdentityViolated(format!(
                "Φ should be monic of degree {expected}, got {}",
                self.phi
            )));
        }
        if let Some(row) = self.carry_forward.iter().find(|r| !r.holds()) {
            return Err(Error::IdentityViolated(format!(
                "carry-forward: class {} keeps multiplicity {} below its guaranteed {}",
                row.class, row.observed, row.bound
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|cs| {
                Value::Array(
                    cs.iter()
                        .map(|c| {
                            let j = EigenClassJson::from(c);
                            json!({
                                "class_poly": j.polynomial,
                                "eigenvalue": j.eigenvalue,
                                "multiplicity": j.multiplicity,
                                "flag": j.e_main,
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        let ledger: Vec<Value> = self.carry_forward.iter().map(ledger_row_json).collect();
        json!({
            "order": self.order,
            "side_width": self.side_width,
            "charpoly_direct": self.charpoly_direct,
            "charpoly_block": self.charpoly_block,
            "factored": self.charpoly_direct.factored(),
            "factor_charpolys": self.factor_charpolys,
            "reduced_denominators": self.reduced_denominators,
            "phi_polynomial": self.phi,
            "phi_degree": self.phi_degree,
            "e_main_flags": classes,
            "ledger": ledger,
            "numeric_spectrum": self.numeric_spectrum,
        })
    }
}

pub(crate) fn ledger_row_json(r: &LedgerRow) -> Value {
    json!({
        "factor": r.factor.map(|i| i + 1),
        "class": r.class,
        "eigenvalue": r.root.as_ref().map(display_rational),
        "factor_multiplicity": r.factor_multiplicity,
        "e_main": r.e_main,
        "bound": r.bound,
        "observed": r.observed,
    })
}

/// Block system of a join's adjacency matrix.
pub fn adjacency_system(spec: &JoinSpec) -> BlockSystem {
    let es = spec.indexing_matrices();
    let k = spec.k();
    let ident = QMatrix::identity(spec.m());
    BlockSystem {
        blocks: spec.factors().iter().map(|g| g.adjacency_matrix()).collect(),
        left: es.clone(),
        right: es,
        coupling: (0..k)
            .map(|i| (0..k).map(|j| (i != j && spec.rho(i, j)).then(|| ident.clone())).collect())
            .collect(),
    }
}

/// Characteristic polynomial of an H_m-join through the block route, checked
/// against the direct characteristic polynomial of its adjacency matrix.
pub fn block_charpoly(spec: &JoinSpec) -> Result<SpectralReport> {
    SpectralReport::analyze(&adjacency_system(spec))
}

/// Carry-forward ledger of an H_m-join.
pub fn carry_forward_report(spec: &JoinSpec) -> Result<Vec<LedgerRow>> {
    Ok(block_charpoly(spec)?.carry_forward)
}

/// Block system of U(G) for γ = 0: blocks αA_i + βI + δ(D_i + 𝒟_i),
/// coupling α·ρ_ij·I_m.
pub fn universal_system(spec: &JoinSpec, params: &UniversalParams) -> Result<BlockSystem> {
    if !num_traits::Zero::is_zero(&params.gamma) {
        return Err(Error::GammaNonzero(display_rational(&params.gamma)));
    }
    let dc = degree_corrections(spec);
    let es = spec.indexing_matrices();
    let k = spec.k();
    let blocks = spec
        .factors()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let base = crate::graph::universal_matrix(g, params);
            &base + &dc.diagonal_matrix(i).scale(&params.delta)
        })
        .collect();
    let coupling_block = QMatrix::scalar(spec.m(), &params.alpha);
    Ok(BlockSystem {
        blocks,
        left: es.clone(),
        right: es,
        coupling: (0..k)
            .map(|i| (0..k).map(|j| (i != j && spec.rho(i, j)).then(|| coupling_block.clone())).collect())
            .collect(),
    })
}

/// Universal characteristic polynomial of an H_m-join (γ must be 0).
pub fn universal_block_charpoly(spec: &JoinSpec, params: &UniversalParams) -> Result<SpectralReport> {
    SpectralReport::analyze(&universal_system(spec, params)?)
}
