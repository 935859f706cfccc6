//! Simple undirected graphs, named constructions and the universal matrix
//! U(G) = αA + βI + γJ + δD.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{display_rational, parse_rational, rat, QMatrix, Rational};
use crate::error::{Error, Result};

/// Simple undirected graph on vertices 0..n with a dense adjacency table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    /// Builds from an edge list; rejects loops and out-of-range endpoints.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
            }
            g.connect(u, v);
        }
        Ok(g)
    }

    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges (u, v) with u < v in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Common degree when the graph is regular (and non-empty).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    pub fn adjacency_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.n, self.n, |i, j| if self.has_edge(i, j) { Rational::one() } else { Rational::zero() })
    }

    pub fn degree_matrix(&self) -> QMatrix {
        QMatrix::diagonal(&self.degrees().into_iter().map(|d| rat(d as i64)).collect::<Vec<_>>())
    }

    /// Relabels vertices: vertex v of `self` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch(format!("permutation of length {} for {} vertices", perm.len(), self.n)));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.connect(u, v);
                }
            }
        }
        g
    }

    /// Text form: the vertex count on the first line, then one `u v` line
    /// per edge in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (_, first) = lines.next().ok_or_else(|| Error::parse("line 1", "missing vertex count"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::parse("line 1", format!("expected a vertex count, found {:?}", first.trim())))?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                _ => None,
            };
            let (u, v) = parsed.ok_or_else(|| Error::parse(format!("line {}", idx + 1), format!("expected `u v`, found {:?}", line.trim())))?;
            if u >= n || v >= n || u == v {
                return Err(Error::parse(format!("line {}", idx + 1), format!("invalid edge {u} {v} for {n} vertices")));
            }
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph constructions accepted by [`make_named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedKind {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    Wheel,
    Empty,
}

impl FromStr for NamedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "complete" | "k" => NamedKind::Complete,
            "path" | "p" => NamedKind::Path,
            "cycle" | "c" => NamedKind::Cycle,
            "complete_bipartite" | "bipartite" => NamedKind::CompleteBipartite,
            "star" => NamedKind::Star,
            "wheel" => NamedKind::Wheel,
            "empty" => NamedKind::Empty,
            other => return Err(Error::InvalidParameters(format!("unknown graph kind {other:?}"))),
        })
    }
}

/// Builds a standard graph.
///
/// * `complete [n]`, `path [n]`, `empty [n]`: vertices 0..n in order.
/// * `cycle [n]` (n ≥ 3): edges i ~ i+1 and n−1 ~ 0.
/// * `complete_bipartite [a, b]`: the a-side first.
/// * `star [k]` or `star [1, k]`: K_{1,k} with the center first.
/// * `wheel [n]` (n ≥ 3): rim cycle 0..n, hub last.
pub fn make_named(kind: NamedKind, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::InvalidParameters(format!("{kind:?}: {msg}, got {params:?}")));
    match kind {
        NamedKind::Complete | NamedKind::Path | NamedKind::Empty | NamedKind::Cycle | NamedKind::Wheel => {
            let [n] = params else { return bad("expected one parameter") };
            let n = *n;
            let min = match kind {
                NamedKind::Empty => 0,
                NamedKind::Cycle | NamedKind::Wheel => 3,
                _ => 1,
            };
            if n < min {
                return bad(&format!("needs at least {min} vertices"));
            }
            let mut g = Graph::empty(if kind == NamedKind::Wheel { n + 1 } else { n });
            match kind {
                NamedKind::Complete => {
                    for u in 0..n {
                        for v in u + 1..n {
                            g.connect(u, v);
                        }
                    }
                }
                NamedKind::Path => {
                    for v in 1..n {
                        g.connect(v - 1, v);
                    }
                }
                NamedKind::Cycle | NamedKind::Wheel => {
                    for v in 0..n {
                        g.connect(v, (v + 1) % n);
                    }
                    if kind == NamedKind::Wheel {
                        for v in 0..n {
                            g.connect(v, n);
                        }
                    }
                }
                _ => {}
            }
            Ok(g)
        }
        NamedKind::CompleteBipartite => {
            let [a, b] = params else { return bad("expected two parameters") };
            if *a == 0 || *b == 0 {
                return bad("both sides must be non-empty");
            }
            let mut g = Graph::empty(a + b);
            for u in 0..*a {
                for v in *a..a + b {
                    g.connect(u, v);
                }
            }
            Ok(g)
        }
        NamedKind::Star => {
            let k = match params {
                [k] | [1, k] => *k,
                _ => return bad("expected [k] or [1, k]"),
            };
            if k == 0 {
                return bad("needs at least one leaf");
            }
            make_named(NamedKind::CompleteBipartite, &[1, k])
        }
    }
}

/// Disjoint union with vertices numbered block by block.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let n = graphs.iter().map(Graph::n).sum();
    let mut g = Graph::empty(n);
    let mut offset = 0;
    for h in graphs {
        for (u, v) in h.edges() {
            g.connect(offset + u, offset + v);
        }
        offset += h.n();
    }
    g
}

/// Coefficients (α, β, γ, δ) of U(G) = αA + βI + γJ + δD, with α ≠ 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniversalParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl UniversalParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameters("alpha must be nonzero".into()));
        }
        Ok(UniversalParams { alpha, beta, gamma, delta })
    }

    fn ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        UniversalParams { alpha: rat(a), beta: rat(b), gamma: rat(c), delta: rat(d) }
    }

    pub fn adjacency() -> Self {
        Self::ints(1, 0, 0, 0)
    }

    /// L = D − A.
    pub fn laplacian() -> Self {
        Self::ints(-1, 0, 0, 1)
    }

    /// Q = D + A.
    pub fn signless_laplacian() -> Self {
        Self::ints(1, 0, 0, 1)
    }

    /// S = J − I − 2A.
    pub fn seidel() -> Self {
        Self::ints(-2, -1, 1, 0)
    }

    /// A_r = rD + (1 − r)A, for r ≠ 1.
    pub fn a_alpha(r: Rational) -> Result<Self> {
        let one_minus = Rational::one() - &r;
        Self::new(one_minus, Rational::zero(), Rational::zero(), r)
    }
}

impl fmt::Display for UniversalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(α={}, β={}, γ={}, δ={})",
            display_rational(&self.alpha),
            display_rational(&self.beta),
            display_rational(&self.gamma),
            display_rational(&self.delta)
        )
    }
}

/// Parses a preset name: `A`, `L`, `Q`, `seidel`, `Aalpha:<r>`.
impl FromStr for UniversalParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(r) = s.strip_prefix("Aalpha:") {
            let r = parse_rational(r).ok_or_else(|| Error::InvalidParameters(format!("bad A_alpha parameter {r:?}")))?;
            return UniversalParams::a_alpha(r);
        }
        match s {
            "A" => Ok(Self::adjacency()),
            "L" => Ok(Self::laplacian()),
            "Q" => Ok(Self::signless_laplacian()),
            "S" | "seidel" => Ok(Self::seidel()),
            _ => Err(Error::InvalidParameters(format!("unknown preset {s:?}"))),
        }
    }
}

/// U(G) = αA + βI + γJ + δD.
pub fn universal_matrix(g: &Graph, p: &UniversalParams) -> QMatrix {
    let n = g.n();
    QMatrix::from_fn(n, n, |i, j| {
        let mut v = p.gamma.clone();
        if g.has_edge(i, j) {
            v += &p.alpha;
        }
        if i == j {
            v += &p.beta;
            v += &p.delta * rat(g.degree(i) as i64);
        }
        v
    })
}
