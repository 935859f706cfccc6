//! Indexing maps, H_m-join specifications and their adjacency matrices.
//!
//! Labels are 1-based (`1..=m`), vertices 0-based. A factor vertex with label
//! `None` belongs to a partial map and never receives cross edges.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{rat, QMatrix, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Labelling of one factor's vertices by `1..=m`, possibly partial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndexingMap {
    m: usize,
    labels: Vec<Option<usize>>,
}

impl IndexingMap {
    /// Total map; every label must lie in `1..=m`.
    pub fn new(m: usize, labels: Vec<usize>) -> Result<Self> {
        Self::partial(m, labels.into_iter().map(Some).collect())
    }

    pub fn partial(m: usize, labels: Vec<Option<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameters("label count m must be at least 1".into()));
        }
        if let Some(bad) = labels.iter().flatten().find(|&&c| c == 0 || c > m) {
            return Err(Error::InvalidParameters(format!("label {bad} outside 1..={m}")));
        }
        Ok(IndexingMap { m, labels })
    }

    pub fn constant(n: usize, m: usize, label: usize) -> Result<Self> {
        Self::new(m, vec![label; n])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Option<usize>] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<usize> {
        self.labels[v]
    }

    pub fn is_total(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Vertices carrying label `c`.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.labels.len()).filter(|&v| self.labels[v] == Some(c)).collect()
    }

    pub fn used_labels(&self) -> BTreeSet<usize> {
        self.labels.iter().flatten().copied().collect()
    }

    /// n × m 0/1 matrix with a 1 at (v, label(v) − 1).
    pub fn matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.labels.len(), self.m, |v, c| {
            if self.labels[v] == Some(c + 1) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }
}

/// Indexing matrix E of a factor, checking the map covers exactly its vertices.
pub fn indexing_matrix(g: &Graph, map: &IndexingMap) -> Result<QMatrix> {
    if g.n() != map.len() {
        return Err(Error::SizeMismatch(format!(
            "indexing map has {} labels for a graph on {} vertices",
            map.len(),
            g.n()
        )));
    }
    Ok(map.matrix())
}

/// Host graph H on k vertices, factors G_1..G_k and their indexing maps into `1..=m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinSpec {
    host: Graph,
    m: usize,
    factors: Vec<Graph>,
    indexing: Vec<IndexingMap>,
}

impl JoinSpec {
    pub fn new(host: Graph, m: usize, factors: Vec<Graph>, indexing: Vec<IndexingMap>) -> Result<Self> {
        if host.n() == 0 {
            return Err(Error::InvalidParameters("host graph has no vertices".into()));
        }
        if factors.len() != host.n() {
            return Err(Error::SizeMismatch(format!(
                "host has {} vertices but {} factors were given",
                host.n(),
                factors.len()
            )));
        }
        if indexing.len() != factors.len() {
            return Err(Error::SizeMismatch(format!(
                "{} factors but {} indexing maps",
                factors.len(),
                indexing.len()
            )));
        }
        if m == 0 {
            return Err(Error::InvalidParameters("label count m must be at least 1".into()));
        }
        for (i, (g, map)) in factors.iter().zip(&indexing).enumerate() {
            if g.n() == 0 {
                return Err(Error::InvalidParameters(format!("factor {} has no vertices", i + 1)));
            }
            if map.len() != g.n() {
                return Err(Error::SizeMismatch(format!(
                    "factor {} has {} vertices but its indexing map has {} labels",
                    i + 1,
                    g.n(),
                    map.len()
                )));
            }
            if map.m() != m {
                return Err(Error::InvalidParameters(format!(
                    "indexing map of factor {} targets 1..={} instead of 1..={m}",
                    i + 1,
                    map.m()
                )));
            }
        }
        Ok(JoinSpec { host, m, factors, indexing })
    }

    /// Convenience constructor from total label vectors.
    pub fn from_labels(host: Graph, m: usize, factors: Vec<Graph>, labels: Vec<Vec<usize>>) -> Result<Self> {
        let indexing = labels.into_iter().map(|l| IndexingMap::new(m, l)).collect::<Result<Vec<_>>>()?;
        Self::new(host, m, factors, indexing)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn indexing(&self) -> &[IndexingMap] {
        &self.indexing
    }

    pub fn rho(&self, i: usize, j: usize) -> bool {
        self.host.has_edge(i, j)
    }

    /// Start of each factor's vertex block in the join.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.factors
            .iter()
            .map(|g| {
                let o = acc;
                acc += g.n();
                o
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(Graph::n).sum()
    }

    pub fn indexing_matrices(&self) -> Vec<QMatrix> {
        self.indexing.iter().map(IndexingMap::matrix).collect()
    }
}

/// The H_m-join built straight from the edge rule.
pub fn hm_join(spec: &JoinSpec) -> Graph {
    let offsets = spec.offsets();
    let mut g = Graph::empty(spec.order());
    for (i, f) in spec.factors.iter().enumerate() {
        for (u, v) in f.edges() {
            g.connect(offsets[i] + u, offsets[i] + v);
        }
    }
    for (i, j) in spec.host.edges() {
        for (u, lu) in spec.indexing[i].labels.iter().enumerate() {
            for (v, lv) in spec.indexing[j].labels.iter().enumerate() {
                if lu.is_some() && lu == lv {
                    g.connect(offsets[i] + u, offsets[j] + v);
                }
            }
        }
    }
    g
}

/// Blockwise assembly: A(G_i) on the diagonal and ρ_ij·E_i E_jᵗ off it.
pub fn blockwise_adjacency(spec: &JoinSpec) -> QMatrix {
    let offsets = spec.offsets();
    let es = spec.indexing_matrices();
    let mut a = QMatrix::zeros(spec.order(), spec.order());
    for (i, f) in spec.factors.iter().enumerate() {
        a.set_block(offsets[i], offsets[i], &f.adjacency_matrix());
    }
    for (i, j) in spec.host.edges() {
        let block = &es[i] * &es[j].transpose();
        a.set_block(offsets[i], offsets[j], &block);
        a.set_block(offsets[j], offsets[i], &block.transpose());
    }
    a
}

fn validate_subsets(factors: &[Graph], subsets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if subsets.len() != factors.len() {
        return Err(Error::SizeMismatch(format!("{} factors but {} subsets", factors.len(), subsets.len())));
    }
    subsets
        .iter()
        .zip(factors)
        .enumerate()
        .map(|(i, (s, g))| {
            if let Some(bad) = s.iter().find(|&&v| v >= g.n()) {
                return Err(Error::SubsetOutOfRange(format!(
                    "vertex {bad} in subset of factor {} with {} vertices",
                    i + 1,
                    g.n()
                )));
            }
            let set: BTreeSet<usize> = s.iter().copied().collect();
            Ok(set.into_iter().collect())
        })
        .collect()
}

/// Rewrites an H-generalized join as an H_{k+1}-join: vertices of S_i get
/// label 1, the remaining vertices of G_i get the private label i + 2.
pub fn generalized_to_hm(host: &Graph, factors: &[Graph], subsets: &[Vec<usize>]) -> Result<JoinSpec> {
    let subsets = validate_subsets(factors, subsets)?;
    let m = factors.len() + 1;
    let labels = factors
        .iter()
        .zip(&subsets)
        .enumerate()
        .map(|(i, (g, s))| (0..g.n()).map(|v| if s.binary_search(&v).is_ok() { 1 } else { i + 2 }).collect())
        .collect();
    JoinSpec::from_labels(host.clone(), m, factors.to_vec(), labels)
}

/// The H-generalized join from its definition: S_i × S_j fully joined
/// whenever i ~ j in H.
pub fn generalized_join(host: &Graph, factors: &[Graph], subsets: &[Vec<usize>]) -> Result<Graph> {
    if host.n() != factors.len() {
        return Err(Error::SizeMismatch(format!("host has {} vertices but {} factors", host.n(), factors.len())));
    }
    let subsets = validate_subsets(factors, subsets)?;
    let mut offsets = Vec::with_capacity(factors.len());
    let mut acc = 0;
    for f in factors {
        offsets.push(acc);
        acc += f.n();
    }
    let mut g = crate::graph::disjoint_union(factors);
    for (i, j) in host.edges() {
        for &u in &subsets[i] {
            for &v in &subsets[j] {
                g.connect(offsets[i] + u, offsets[j] + v);
            }
        }
    }
    Ok(g)
}

/// Cross-degree data of a join: `diagonals[i][v]` counts the neighbours of
/// vertex v of G_i outside G_i; `shifts[i]` = Σ_{l ~ i} |label-1 class of G_l|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeCorrections {
    pub diagonals: Vec<Vec<usize>>,
    pub shifts: Vec<usize>,
}

impl DegreeCorrections {
    pub fn diagonal_matrix(&self, i: usize) -> QMatrix {
        QMatrix::diagonal(&self.diagonals[i].iter().map(|&d| rat(d as i64)).collect::<Vec<_>>())
    }
}

pub fn degree_corrections(spec: &JoinSpec) -> DegreeCorrections {
    let k = spec.k();
    let class_sizes: Vec<Vec<usize>> = spec
        .indexing
        .iter()
        .map(|map| {
            let mut sizes = vec![0; spec.m + 1];
            for c in map.labels.iter().flatten() {
                sizes[*c] += 1;
            }
            sizes
        })
        .collect();
    let diagonals = (0..k)
        .map(|i| {
            spec.indexing[i]
                .labels
                .iter()
                .map(|l| match l {
                    None => 0,
                    Some(c) => (0..k).filter(|&j| j != i && spec.rho(i, j)).map(|j| class_sizes[j][*c]).sum(),
                })
                .collect()
        })
        .collect();
    let shifts = (0..k).map(|i| (0..k).filter(|&l| l != i && spec.rho(i, l)).map(|l| class_sizes[l][1]).sum()).collect();
    DegreeCorrections { diagonals, shifts }
}

/// Which labels [`reduce_labels`] may delete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionMode {
    /// Labels carried by no vertex.
    Unused,
    /// Labels whose every carrier sees no equal label in any other factor.
    GlobalExclusive,
    /// Labels whose every carrier sees no equal label in any host-neighbouring factor.
    NeighborExclusive,
}

impl std::str::FromStr for ReductionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unused" => Ok(ReductionMode::Unused),
            "global-exclusive" | "global_exclusive" => Ok(ReductionMode::GlobalExclusive),
            "neighbor-exclusive" | "neighbor_exclusive" => Ok(ReductionMode::NeighborExclusive),
            _ => Err(Error::InvalidParameters(format!(
                "unknown reduction mode {s:?} (expected unused, global-exclusive or neighbor-exclusive)"
            ))),
        }
    }
}

/// Outcome of a label reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Spec over the surviving labels, renumbered `1..` in their original order.
    pub spec: JoinSpec,
    /// Deleted labels in the original numbering.
    pub deleted: Vec<usize>,
    /// Labels that survive (m minus the number deleted).
    pub remaining: usize,
}

impl Reduction {
    /// Size of the deletable label set.
    pub fn deleted_count(&self) -> usize {
        self.deleted.len()
    }
}

/// Deletes indexing columns that never produce a cross edge. Vertices whose
/// label is deleted become unlabeled, so the result may use partial maps.
/// When every label is deletable one column is kept (all zero) so that the
/// result is still a valid spec.
pub fn reduce_labels(spec: &JoinSpec, mode: ReductionMode) -> Reduction {
    let k = spec.k();
    let used: Vec<BTreeSet<usize>> = spec.indexing.iter().map(IndexingMap::used_labels).collect();
    // A vertex of G_i with label c is "isolated" when no relevant G_j carries c.
    let isolated = |i: usize, c: usize| -> bool {
        match mode {
            ReductionMode::Unused => false,
            ReductionMode::GlobalExclusive => (0..k).all(|j| j == i || !used[j].contains(&c)),
            ReductionMode::NeighborExclusive => (0..k).all(|j| j == i || !spec.rho(i, j) || !used[j].contains(&c)),
        }
    };
    let deletable: Vec<usize> = (1..=spec.m)
        .filter(|&c| (0..k).all(|i| !used[i].contains(&c) || isolated(i, c)))
        .collect();
    let keep: Vec<usize> = (1..=spec.m).filter(|c| !deletable.contains(c)).collect();
    let new_m = keep.len().max(1);
    let renumber = |c: usize| keep.iter().position(|&x| x == c).map(|p| p + 1);
    let indexing = spec
        .indexing
        .iter()
        .map(|map| {
            IndexingMap::partial(new_m, map.labels.iter().map(|l| l.and_then(renumber)).collect())
                .expect("renumbered labels stay in range")
        })
        .collect();
    let reduced = JoinSpec::new(spec.host.clone(), new_m, spec.factors.clone(), indexing).expect("shape preserved");
    Reduction { spec: reduced, remaining: spec.m - deletable.len(), deleted: deletable }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedKind};

    fn k(n: usize) -> Graph {
        make_named(NamedKind::Complete, &[n]).unwrap()
    }

    fn p(n: usize) -> Graph {
        make_named(NamedKind::Path, &[n]).unwrap()
    }

    /// K_2 host over P_3 (labels 1,1,2) and P_4 (labels 1,1,1,2).
    fn seven_vertex_example() -> JoinSpec {
        JoinSpec::from_labels(k(2), 2, vec![p(3), p(4)], vec![vec![1, 1, 2], vec![1, 1, 1, 2]]).unwrap()
    }

    #[test]
    fn seven_vertex_adjacency() {
        let spec = seven_vertex_example();
        let expected = QMatrix::from_i64(&[
            vec![0, 1, 0, 1, 1, 1, 0],
            vec![1, 0, 1, 1, 1, 1, 0],
            vec![0, 1, 0, 0, 0, 0, 1],
            vec![1, 1, 0, 0, 1, 0, 0],
            vec![1, 1, 0, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 0],
        ]);
        assert_eq!(blockwise_adjacency(&spec), expected);
        assert_eq!(hm_join(&spec).adjacency_matrix(), expected);
    }

    #[test]
    fn indexing_matrix_checks_size() {
        let map = IndexingMap::new(2, vec![1, 2]).unwrap();
        assert!(matches!(indexing_matrix(&p(3), &map), Err(Error::SizeMismatch(_))));
        assert!(IndexingMap::new(2, vec![3]).is_err());
        let e = indexing_matrix(&k(2), &IndexingMap::new(2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(e, QMatrix::from_i64(&[vec![1, 0], vec![1, 0]]));
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            JoinSpec::from_labels(k(2), 2, vec![p(3)], vec![vec![1, 1, 1]]),
            Err(Error::SizeMismatch(_))
        ));
        assert!(matches!(
            JoinSpec::from_labels(k(2), 2, vec![p(3), p(2)], vec![vec![1, 1], vec![1, 1]]),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn generalized_join_round_trip() {
        let host = p(3);
        let factors = vec![k(2), p(3), make_named(NamedKind::Cycle, &[4]).unwrap()];
        let subsets = vec![vec![0], vec![0, 2], vec![1, 3]];
        let spec = generalized_to_hm(&host, &factors, &subsets).unwrap();
        assert_eq!(spec.m(), 4);
        assert_eq!(hm_join(&spec), generalized_join(&host, &factors, &subsets).unwrap());
        assert!(matches!(
            generalized_to_hm(&host, &factors, &[vec![5], vec![], vec![]]),
            Err(Error::SubsetOutOfRange(_))
        ));
        let dc = degree_corrections(&spec);
        assert_eq!(dc.shifts, vec![2, 3, 2]);
        assert_eq!(dc.diagonals[1], vec![3, 0, 3]);
    }

    #[test]
    fn unused_label_is_deleted() {
        let spec = JoinSpec::from_labels(k(2), 3, vec![p(2), p(2)], vec![vec![1, 3], vec![3, 1]]).unwrap();
        let r = reduce_labels(&spec, ReductionMode::Unused);
        assert_eq!(r.deleted, vec![2]);
        assert_eq!(r.spec.m(), 2);
        assert_eq!(blockwise_adjacency(&r.spec), blockwise_adjacency(&spec));
    }

    #[test]
    fn lollipop_reduces_to_one_label() {
        let spec = JoinSpec::from_labels(k(2), 3, vec![k(4), p(3)], vec![vec![2, 1, 1, 1], vec![2, 3, 3]]).unwrap();
        let r = reduce_labels(&spec, ReductionMode::NeighborExclusive);
        assert_eq!(r.deleted, vec![1, 3]);
        assert_eq!(r.remaining, 1);
        assert_eq!(r.spec.indexing()[0].labels(), &[Some(1), None, None, None]);
        assert_eq!(r.spec.indexing()[1].labels(), &[Some(1), None, None]);
        assert_eq!(blockwise_adjacency(&r.spec), blockwise_adjacency(&spec));
    }
}
