//! Graph families with an H_m-join realization, each paired with an
//! independent direct construction.

use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, make_named, Graph, NamedKind};
use crate::join::{hm_join, JoinSpec};

/// A graph built twice: from its definition and as an H_m-join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRealization {
    pub direct: Graph,
    pub spec: JoinSpec,
    /// `alignment[s]` is the direct-graph vertex matching join vertex `s`.
    pub alignment: Vec<usize>,
}

impl FamilyRealization {
    /// The join, relabeled into the direct graph's vertex order.
    pub fn aligned_join(&self) -> Result<Graph> {
        hm_join(&self.spec).relabeled(&self.alignment)
    }

    /// Fails unless the aligned join and the direct graph coincide.
    pub fn check(&self) -> Result<()> {
        let joined = self.aligned_join()?;
        if joined != self.direct {
            return Err(Error::IdentityViolated(format!(
                "family realization: join edges {:?} differ from direct edges {:?}",
                joined.edges(),
                self.direct.edges()
            )));
        }
        Ok(())
    }
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Cartesian product a □ b. Vertex (u, v) is numbered u·|b| + v in both
/// constructions; the join has host a, |a| copies of b and labels v ↦ v + 1.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Result<FamilyRealization> {
    if a.n() == 0 || b.n() == 0 {
        return Err(Error::InvalidParameters("cartesian product of an empty graph".into()));
    }
    let (n1, n2) = (a.n(), b.n());
    let mut edges = Vec::new();
    for u in 0..n1 {
        for (v, w) in b.edges() {
            edges.push((u * n2 + v, u * n2 + w));
        }
    }
    for (u, x) in a.edges() {
        for v in 0..n2 {
            edges.push((u * n2 + v, x * n2 + v));
        }
    }
    let direct = Graph::from_edges(n1 * n2, &edges)?;
    let labels = vec![(1..=n2).collect::<Vec<_>>(); n1];
    let spec = JoinSpec::from_labels(a.clone(), n2, vec![b.clone(); n1], labels)?;
    Ok(FamilyRealization { direct, spec, alignment: identity(n1 * n2) })
}

/// Generalized Petersen graph P(n, k): outer vertices a_i = i, inner
/// vertices b_i = n + i. The inner factor is d·C_{n/d} (d = gcd(n, k)) in
/// its standard numbering, so the alignment is non-trivial when k > 1.
pub fn generalized_petersen(n: usize, k: usize) -> Result<FamilyRealization> {
    if n < 5 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameters(format!("P(n, k) needs n ≥ 5 and 1 ≤ k < n/2, got ({n}, {k})")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    let direct = Graph::from_edges(2 * n, &edges)?;

    let d = n.gcd(&k);
    let len = n / d;
    let cycle = make_named(NamedKind::Cycle, &[len])?;
    let inner = disjoint_union(&vec![cycle; d]);
    // Position p of cycle c is b_{c + p·k}.
    let inner_index: Vec<usize> = (0..n).map(|s| (s / len + (s % len) * k) % n).collect();
    let outer = make_named(NamedKind::Cycle, &[n])?;
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Complete, &[2])?,
        n,
        vec![outer, inner],
        vec![(1..=n).collect(), inner_index.iter().map(|i| i + 1).collect()],
    )?;
    let alignment = (0..n).chain(inner_index.iter().map(|i| n + i)).collect();
    Ok(FamilyRealization { direct, spec, alignment })
}

/// Generalized helm H_n^m: the wheel W_n (rim 0..n, hub n) with a path of m
/// new vertices hanging from every rim vertex; path j occupies
/// n + 1 + j·m .. n + 1 + (j+1)·m and its first vertex is bridged to rim j.
///
/// Labels: rim j and the first vertex of path j share label j + 1, the hub
/// gets n + 1 and every other path vertex n + 2.
pub fn generalized_helm(n: usize, m: usize) -> Result<FamilyRealization> {
    if n < 3 || m == 0 {
        return Err(Error::InvalidParameters(format!("H_n^m needs n ≥ 3 and m ≥ 1, got ({n}, {m})")));
    }
    let total = n + 1 + n * m;
    let mut edges = Vec::new();
    for j in 0..n {
        edges.push((j, (j + 1) % n));
        edges.push((j, n));
        let start = n + 1 + j * m;
        edges.push((j, start));
        for p in 1..m {
            edges.push((start + p - 1, start + p));
        }
    }
    let direct = Graph::from_edges(total, &edges)?;

    let wheel = make_named(NamedKind::Wheel, &[n])?;
    let paths = disjoint_union(&vec![make_named(NamedKind::Path, &[m])?; n]);
    let mut wheel_labels: Vec<usize> = (1..=n).collect();
    wheel_labels.push(n + 1);
    let path_labels = (0..n * m).map(|s| if s % m == 0 { s / m + 1 } else { n + 2 }).collect();
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Complete, &[2])?,
        n + 2,
        vec![wheel, paths],
        vec![wheel_labels, path_labels],
    )?;
    Ok(FamilyRealization { direct, spec, alignment: identity(total) })
}

/// Generalized web W(t, n): the wheel W_n, then t concentric n-cycles and a
/// final layer of n pendant vertices, position j of each layer adjacent to
/// position j of the next. Vertex order: rim, hub, cycle layers, pendants.
pub fn generalized_web(t: usize, n: usize) -> Result<FamilyRealization> {
    if t == 0 || n < 3 {
        return Err(Error::InvalidParameters(format!("W(t, n) needs t ≥ 1 and n ≥ 3, got ({t}, {n})")));
    }
    let layer = |l: usize, j: usize| if l == 0 { j } else { n + 1 + (l - 1) * n + j };
    let total = (t + 2) * n + 1;
    let mut edges = Vec::new();
    for j in 0..n {
        edges.push((j, n));
        for l in 0..=t {
            edges.push((layer(l, j), layer(l, (j + 1) % n)));
            edges.push((layer(l, j), layer(l + 1, j)));
        }
    }
    let direct = Graph::from_edges(total, &edges)?;

    let mut factors = vec![make_named(NamedKind::Wheel, &[n])?];
    let mut wheel_labels: Vec<usize> = (2..=n + 1).collect();
    wheel_labels.push(1);
    let mut labels = vec![wheel_labels];
    for _ in 0..t {
        factors.push(make_named(NamedKind::Cycle, &[n])?);
        labels.push((2..=n + 1).collect());
    }
    factors.push(make_named(NamedKind::Empty, &[n])?);
    labels.push((2..=n + 1).collect());
    let spec = JoinSpec::from_labels(make_named(NamedKind::Path, &[t + 2])?, n + 1, factors, labels)?;
    Ok(FamilyRealization { direct, spec, alignment: identity(total) })
}

fn stick(head: Graph, m: usize, n: usize) -> Result<FamilyRealization> {
    let mut edges = head.edges();
    for p in 1..n {
        edges.push((m + p - 1, m + p));
    }
    edges.push((0, m));
    let direct = Graph::from_edges(m + n, &edges)?;
    let head_labels = (0..m).map(|v| if v == 0 { 2 } else { 1 }).collect();
    let tail_labels = (0..n).map(|v| if v == 0 { 2 } else { 3 }).collect();
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Complete, &[2])?,
        3,
        vec![head, make_named(NamedKind::Path, &[n])?],
        vec![head_labels, tail_labels],
    )?;
    Ok(FamilyRealization { direct, spec, alignment: identity(m + n) })
}

/// Lollipop L(m, n): K_m on 0..m and the path m..m+n, with vertex 0 of K_m
/// adjacent to the path end m.
pub fn lollipop(m: usize, n: usize) -> Result<FamilyRealization> {
    if m < 3 || n == 0 {
        return Err(Error::InvalidParameters(format!("L(m, n) needs m ≥ 3 and n ≥ 1, got ({m}, {n})")));
    }
    stick(make_named(NamedKind::Complete, &[m])?, m, n)
}

/// Tadpole T(m, n): as the lollipop with C_m in place of K_m.
pub fn tadpole(m: usize, n: usize) -> Result<FamilyRealization> {
    if m < 3 || n == 0 {
        return Err(Error::InvalidParameters(format!("T(m, n) needs m ≥ 3 and n ≥ 1, got ({m}, {n})")));
    }
    stick(make_named(NamedKind::Cycle, &[m])?, m, n)
}

/// Family names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cartesian,
    Petersen,
    Helm,
    Web,
    Lollipop,
    Tadpole,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cartesian" => Family::Cartesian,
            "petersen" => Family::Petersen,
            "helm" => Family::Helm,
            "web" => Family::Web,
            "lollipop" => Family::Lollipop,
            "tadpole" => Family::Tadpole,
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "unknown family {s:?} (expected cartesian, petersen, helm, web, lollipop or tadpole)"
                )))
            }
        })
    }
}

/// Parses `kind:p1,p2` such as `cycle:5` or `complete_bipartite:2,3`.
pub fn parse_named_graph(s: &str) -> Result<Graph> {
    let (kind, params) = s.split_once(':').ok_or_else(|| Error::InvalidParameters(format!("expected kind:params, got {s:?}")))?;
    let params = params
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidParameters(format!("bad parameter {p:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    make_named(kind.parse()?, &params)
}

impl Family {
    /// Builds the family from textual arguments: two named graphs for
    /// `cartesian`, two integers otherwise.
    pub fn realize(self, args: &[String]) -> Result<FamilyRealization> {
        if self == Family::Cartesian {
            let [a, b] = args else {
                return Err(Error::InvalidParameters("cartesian expects two graphs such as path:3 cycle:4".into()));
            };
            return cartesian_product(&parse_named_graph(a)?, &parse_named_graph(b)?);
        }
        let nums = args
            .iter()
            .map(|a| a.parse::<usize>().map_err(|_| Error::InvalidParameters(format!("expected an integer, got {a:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let [x, y] = nums[..] else {
            return Err(Error::InvalidParameters(format!("{self:?} expects two integer parameters")));
        };
        match self {
            Family::Petersen => generalized_petersen(x, y),
            Family::Helm => generalized_helm(x, y),
            Family::Web => generalized_web(x, y),
            Family::Lollipop => lollipop(x, y),
            Family::Tadpole => tadpole(x, y),
            Family::Cartesian => unreachable!(),
        }
    }
}
