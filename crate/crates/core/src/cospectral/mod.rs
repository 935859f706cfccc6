//! Universal spectra of generalized joins, closed-form main functions of
//! regular factors, and exactly certified cospectral join pairs.

mod iso;
mod search;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use iso::{isomorphism_test, isomorphism_verdict, IsoVerdict, MAX_ISO_VERTICES};
pub use search::{search_pairs, search_pairs_universal, shipped_catalog};

use crate::algebra::{charpoly_berkowitz, rat, Polynomial, QMatrix, RatFunMatrix, RationalFunction};
use crate::error::{Error, Result};
use crate::graph::{universal_matrix, Graph, UniversalParams};
use crate::join::{generalized_join, generalized_to_hm, JoinSpec};
use crate::spectra::{gamma_bilinear, main_function, BlockSystem};

/// An H-generalized join: only the vertices of S_i ⊆ V(G_i) receive cross
/// edges, fully joined to S_j whenever i ~ j in H.
///
/// Subsets are stored sorted and deduplicated. Internally every factor is
/// relabeled so its S_i vertices come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedJoinSpec {
    host: Graph,
    factors: Vec<Graph>,
    subsets: Vec<Vec<usize>>,
    params: UniversalParams,
}

impl GeneralizedJoinSpec {
    pub fn new(host: Graph, factors: Vec<Graph>, subsets: Vec<Vec<usize>>, params: UniversalParams) -> Result<Self> {
        if params.alpha.is_zero() {
            return Err(Error::InvalidParameters("alpha must be nonzero".into()));
        }
        if host.n() != factors.len() {
            return Err(Error::SizeMismatch(format!("host has {} vertices but {} factors", host.n(), factors.len())));
        }
        // Validates ranges and normalizes the subsets.
        let spec = generalized_to_hm(&host, &factors, &subsets)?;
        let subsets = spec
            .indexing()
            .iter()
            .map(|map| (0..map.len()).filter(|&v| map.label(v) == Some(1)).collect())
            .collect();
        Ok(GeneralizedJoinSpec { host, factors, subsets, params })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn params(&self) -> &UniversalParams {
        &self.params
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// Same join with other coefficients.
    pub fn with_params(&self, params: UniversalParams) -> Self {
        GeneralizedJoinSpec { params, ..self.clone() }
    }

    /// The equivalent H_{k+1}-join in the original vertex order.
    pub fn to_join_spec(&self) -> Result<JoinSpec> {
        generalized_to_hm(&self.host, &self.factors, &self.subsets)
    }

    /// The join graph, built from the definition.
    pub fn graph(&self) -> Result<Graph> {
        generalized_join(&self.host, &self.factors, &self.subsets)
    }

    /// Working order of factor i: S_i ascending, then the rest ascending.
    pub fn working_order(&self, i: usize) -> Vec<usize> {
        let s = &self.subsets[i];
        let rest = (0..self.factors[i].n()).filter(|v| s.binary_search(v).is_err());
        s.iter().copied().chain(rest).collect()
    }

    /// Factor i relabeled into its working order, so S_i = {0, .., |S_i|−1}.
    pub fn working_factor(&self, i: usize) -> Graph {
        let order = self.working_order(i);
        let mut perm = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.factors[i].relabeled(&perm).expect("working order is a permutation")
    }

    /// w_i = Σ_{j ~ i} |S_j|, the cross degree of every S_i vertex.
    pub fn cross_degree(&self, i: usize) -> usize {
        self.host.neighbors(i).into_iter().map(|j| self.subsets[j].len()).sum()
    }

    /// Diagonal block U(G_i) + δ·w_i·diag(1_{S_i}) in working order.
    pub fn degree_corrected_block(&self, i: usize) -> QMatrix {
        let g = self.working_factor(i);
        let mut block = universal_matrix(&g, &self.params);
        let shift = &self.params.delta * rat(self.cross_degree(i) as i64);
        for v in 0..self.subsets[i].len() {
            let d = block.get(v, v) + &shift;
            block.set(v, v, d);
        }
        block
    }

    /// Side matrices of factor i in working order.
    pub fn side_matrices(&self, i: usize) -> AugmentedSideMatrices {
        AugmentedSideMatrices::new(self.factors[i].n(), self.subsets[i].len(), &self.params.gamma)
    }
}

/// Side matrices U_i = (γ·1, 1_{S_i}) and V_i = (1, 1_{S_i}) with S_i placed
/// first, so that U_i·V_jᵗ = γJ + 1_{S_i}1_{S_j}ᵗ exactly for any rational γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedSideMatrices {
    pub left: QMatrix,
    pub right: QMatrix,
}

impl AugmentedSideMatrices {
    pub fn new(n: usize, subset_len: usize, gamma: &crate::algebra::Rational) -> Self {
        let in_s = |v: usize| if v < subset_len { rat(1) } else { rat(0) };
        AugmentedSideMatrices {
            left: QMatrix::from_fn(n, 2, |v, c| if c == 0 { gamma.clone() } else { in_s(v) }),
            right: QMatrix::from_fn(n, 2, |v, c| if c == 0 { rat(1) } else { in_s(v) }),
        }
    }
}

/// Block system of U(G) for a generalized join: blocks
/// U(G_i) + δ·w_i·diag(1_{S_i}), sides from [`AugmentedSideMatrices`] and
/// coupling diag(1, α·ρ_ij) between every pair of distinct factors.
pub fn generalized_system(spec: &GeneralizedJoinSpec) -> BlockSystem {
    let k = spec.k();
    let sides: Vec<_> = (0..k).map(|i| spec.side_matrices(i)).collect();
    let p = &spec.params;
    BlockSystem {
        blocks: (0..k).map(|i| spec.degree_corrected_block(i)).collect(),
        left: sides.iter().map(|s| s.left.clone()).collect(),
        right: sides.iter().map(|s| s.right.clone()).collect(),
        coupling: (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (i != j).then(|| {
                            let a = if spec.host.has_edge(i, j) { p.alpha.clone() } else { rat(0) };
                            QMatrix::diagonal(&[rat(1), a])
                        })
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Exact characteristic polynomial of U(G) for a generalized join via the
/// 2×2 main-function blocks, checked against the direct characteristic
/// polynomial of the assembled U(G).
pub fn generalized_universal_charpoly(spec: &GeneralizedJoinSpec) -> Result<Polynomial> {
    let block = generalized_system(spec).factorize()?.charpoly;
    let direct = charpoly_berkowitz(&universal_matrix(&spec.graph()?, &spec.params))?;
    if block != direct {
        return Err(Error::IdentityViolated(format!(
            "generalized join: block charpoly {block} differs from direct charpoly {direct}"
        )));
    }
    Ok(block)
}

/// Which closed form applied in [`regular_gamma_closed_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormCase {
    /// G r-regular and δ = 0: |S| / (λ − (αr + β + γn)).
    RegularNoDegreeTerm,
    /// α = −δ, so U(G)·1 = (β + γn)·1: |S| / (λ − (β + γn)).
    DegreeCancelling,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: ClosedFormCase,
    pub value: RationalFunction,
}

/// Closed form of 1_Sᵗ(λI − U(G))⁻¹1 when 1 is an eigenvector of U(G),
/// checked in both orientations against the first-principles main function.
pub fn regular_gamma_closed_form(g: &Graph, s: &[usize], p: &UniversalParams) -> Result<ClosedForm> {
    let n = g.n();
    if let Some(&bad) = s.iter().find(|&&v| v >= n) {
        return Err(Error::SubsetOutOfRange(format!("vertex {bad} in a subset of a graph with {n} vertices")));
    }
    let size = s.iter().copied().collect::<std::collections::BTreeSet<_>>().len();
    let gamma_n = &p.gamma * rat(n as i64);
    let (case, theta) = match g.regular_degree() {
        Some(r) if p.delta.is_zero() => {
            (ClosedFormCase::RegularNoDegreeTerm, &p.alpha * rat(r as i64) + &p.beta + &gamma_n)
        }
        _ if p.alpha == -p.delta.clone() => (ClosedFormCase::DegreeCancelling, &p.beta + &gamma_n),
        _ => {
            return Err(Error::HypothesisNotMet(
                "closed form needs a regular graph with δ = 0, or α = −δ".into(),
            ))
        }
    };
    let value = RationalFunction::new(Polynomial::constant(rat(size as i64)), Polynomial::linear(&theta))?;

    let m = universal_matrix(g, p);
    let ones = QMatrix::ones(n, 1);
    let ind = QMatrix::indicator(n, s);
    for (u, v) in [(&ones, &ind), (&ind, &ones)] {
        let direct = gamma_bilinear(&m, u, v)?;
        if direct.get(0, 0) != &value {
            return Err(Error::IdentityViolated(format!(
                "closed form {value} differs from the main function {}",
                direct.get(0, 0)
            )));
        }
    }
    Ok(ClosedForm { case, value })
}

/// Matrix whose spectra a cospectral certificate compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Seidel,
    Laplacian,
    /// U(G) with the coefficients carried by the specs.
    Universal,
}

impl MatrixKind {
    /// Preset coefficients; `None` for [`MatrixKind::Universal`].
    pub fn preset(self) -> Option<UniversalParams> {
        match self {
            MatrixKind::Adjacency => Some(UniversalParams::adjacency()),
            MatrixKind::Seidel => Some(UniversalParams::seidel()),
            MatrixKind::Laplacian => Some(UniversalParams::laplacian()),
            MatrixKind::Universal => None,
        }
    }

    /// Adjacency and Seidel certificates require regular factors.
    pub fn needs_regular(self) -> bool {
        matches!(self, MatrixKind::Adjacency | MatrixKind::Seidel)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Seidel => "S",
            MatrixKind::Laplacian => "L",
            MatrixKind::Universal => "U",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "adjacency" => Ok(MatrixKind::Adjacency),
            "S" | "seidel" => Ok(MatrixKind::Seidel),
            "L" | "laplacian" => Ok(MatrixKind::Laplacian),
            "U" | "universal" => Ok(MatrixKind::Universal),
            _ => Err(Error::InvalidParameters(format!("unknown matrix kind {s:?}"))),
        }
    }
}

/// Matched main functions of one factor position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaWitness {
    /// 1_Sᵗ(λI − X(G_i))⁻¹1_S for the designated matrix X.
    pub subset: RationalFunction,
    /// V_iᵗ(λI − M_i)⁻¹U_i of the degree-corrected block, 1×1 when γ = 0.
    pub block: RatFunMatrix,
}

/// Exact evidence that two generalized joins are cospectral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospectralCertificate {
    pub pair: (GeneralizedJoinSpec, GeneralizedJoinSpec),
    pub kind: MatrixKind,
    pub charpolys: (Polynomial, Polynomial),
    pub isomorphic: IsoVerdict,
    pub gamma_witness: Vec<GammaWitness>,
}

impl CospectralCertificate {
    /// Recomputes both characteristic polynomials from the assembled
    /// matrices and compares them.
    pub fn reverify(&self) -> Result<bool> {
        let params = self.pair.0.params.clone();
        let a = charpoly_berkowitz(&universal_matrix(&self.pair.0.graph()?, &params))?;
        let b = charpoly_berkowitz(&universal_matrix(&self.pair.1.graph()?, &params))?;
        Ok(a == b && a == self.charpolys.0 && b == self.charpolys.1)
    }

    pub fn to_json(&self) -> Value {
        let witness: Vec<Value> = self
            .gamma_witness
            .iter()
            .map(|w| {
                json!({
                    "subset": crate::io::ratfun_json(&w.subset),
                    "block": (0..w.block.rows())
                        .map(|a| (0..w.block.cols()).map(|b| crate::io::ratfun_json(w.block.get(a, b))).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "kind": self.kind.symbol(),
            "specs": [crate::io::generalized_spec_to_json(&self.pair.0), crate::io::generalized_spec_to_json(&self.pair.1)],
            "charpoly": self.charpolys.0,
            "factored": self.charpolys.0.factored(),
            "cospectral": self.charpolys.0 == self.charpolys.1,
            "isomorphic": self.isomorphic,
            "gamma_witness": witness,
        })
    }
}

fn hypothesis(msg: String) -> Error {
    Error::HypothesisFailed(msg)
}

/// The designated matrix coefficients for a kind, taken from the specs for
/// [`MatrixKind::Universal`].
pub fn kind_params(a: &GeneralizedJoinSpec, b: &GeneralizedJoinSpec, kind: MatrixKind) -> Result<UniversalParams> {
    match kind.preset() {
        Some(p) => Ok(p),
        None if a.params == b.params => Ok(a.params.clone()),
        None => Err(Error::InvalidParameters(format!(
            "universal certificate needs equal coefficients, got {} and {}",
            a.params, b.params
        ))),
    }
}

/// The per-factor quantities compared by [`check_cospectral_conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct FactorWitness {
    pub regular: Option<usize>,
    pub charpoly: Polynomial,
    pub subset_gamma: RationalFunction,
    pub block_charpoly: Polynomial,
    pub block_gamma: Vec<RationalFunction>,
}

pub(crate) fn factor_witness(spec: &GeneralizedJoinSpec, i: usize) -> Result<FactorWitness> {
    let g = &spec.factors[i];
    let x = universal_matrix(g, &spec.params);
    let ind = QMatrix::indicator(g.n(), &spec.subsets[i]);
    let subset_gamma = main_function(&x, &ind, &ind)?.matrix.get(0, 0).clone();
    let sides = spec.side_matrices(i);
    let block = spec.degree_corrected_block(i);
    let mf = main_function(&block, &sides.left, &sides.right)?;
    // With γ = 0 the first column of U_i vanishes and only the S-S entry
    // reaches the determinant.
    let block_gamma = if spec.params.gamma.is_zero() { vec![mf.matrix.get(1, 1).clone()] } else { mf.matrix.entries().to_vec() };
    Ok(FactorWitness {
        regular: g.regular_degree(),
        charpoly: charpoly_berkowitz(&x)?,
        subset_gamma,
        block_charpoly: charpoly_berkowitz(&block)?,
        block_gamma,
    })
}

/// Checks the hypotheses that make two generalized joins X-cospectral,
/// then certifies exact equality of the characteristic polynomials of the
/// assembled matrices and records an isomorphism verdict.
///
/// Stated hypotheses, per factor position: regularity (A and S), equal
/// X-characteristic polynomials and equal 1_Sᵗ(λI − X)⁻¹1_S. Block-level
/// hypotheses: equal characteristic polynomials of the degree-corrected
/// blocks and equal main functions V_iᵗ(λI − M_i)⁻¹U_i (only the S-S entry
/// when γ = 0).
pub fn check_cospectral_conditions(
    a: &GeneralizedJoinSpec,
    b: &GeneralizedJoinSpec,
    kind: MatrixKind,
) -> Result<CospectralCertificate> {
    let params = kind_params(a, b, kind)?;
    if a.host != b.host {
        return Err(Error::InvalidParameters("specs must share the host graph".into()));
    }
    for i in 0..a.k() {
        if a.factors[i].n() != b.factors[i].n() || a.subsets[i].len() != b.subsets[i].len() {
            return Err(Error::InvalidParameters(format!(
                "factor {} differs in size or subset size between the specs",
                i + 1
            )));
        }
    }
    let (a, b) = (a.with_params(params.clone()), b.with_params(params.clone()));
    let mut gamma_witness = Vec::with_capacity(a.k());
    for i in 0..a.k() {
        let (wa, wb) = (factor_witness(&a, i)?, factor_witness(&b, i)?);
        let pos = i + 1;
        if kind.needs_regular() {
            if wa.regular.is_none() || wb.regular.is_none() {
                return Err(hypothesis(format!("factor {pos}: {kind}-cospectral certificate needs regular factors")));
            }
            if wa.regular != wb.regular {
                return Err(hypothesis(format!("factor {pos}: regularity degrees differ")));
            }
        }
        if wa.charpoly != wb.charpoly {
            return Err(hypothesis(format!(
                "factor {pos}: not {kind}-cospectral ({} vs {})",
                wa.charpoly, wb.charpoly
            )));
        }
        if wa.subset_gamma != wb.subset_gamma {
            return Err(hypothesis(format!(
                "factor {pos}: main functions of the subsets differ ({} vs {})",
                wa.subset_gamma, wb.subset_gamma
            )));
        }
        if wa.block_charpoly != wb.block_charpoly {
            return Err(hypothesis(format!("factor {pos}: degree-corrected blocks are not cospectral")));
        }
        if wa.block_gamma != wb.block_gamma {
            return Err(hypothesis(format!("factor {pos}: main functions of the degree-corrected blocks differ")));
        }
        let cols = if wa.block_gamma.len() == 1 { 1 } else { 2 };
        gamma_witness.push(GammaWitness {
            subset: wa.subset_gamma,
            block: RatFunMatrix::from_fn(cols, cols, |r, c| wa.block_gamma[r * cols + c].clone()),
        });
    }
    let (ga, gb) = (a.graph()?, b.graph()?);
    let ca = charpoly_berkowitz(&universal_matrix(&ga, &params))?;
    let cb = charpoly_berkowitz(&universal_matrix(&gb, &params))?;
    if ca != cb {
        return Err(Error::IdentityViolated(format!(
            "hypotheses hold but the {kind} characteristic polynomials differ: {ca} vs {cb}"
        )));
    }
    Ok(CospectralCertificate {
        pair: (a, b),
        kind,
        charpolys: (ca, cb),
        isomorphic: isomorphism_verdict(&ga, &gb),
        gamma_witness,
    })
}

/// Unit coefficients, the plain adjacency case.
pub fn unit_params() -> UniversalParams {
    UniversalParams::new(crate::algebra::Rational::one(), rat(0), rat(0), rat(0)).expect("alpha is nonzero")
}
