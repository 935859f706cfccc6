//! Seeded random specifications and oracles written independently of the
//! library's algebra.

#![allow(dead_code)]

use hmjoin::algebra::{Polynomial, QMatrix, Rational};
use hmjoin::graph::{Graph, UniversalParams};
use hmjoin::join::{IndexingMap, JoinSpec};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random join: k ≤ max_k factors of order ≤ max_n, m ≤ max_m labels, a
/// random host and random maps, about one vertex in ten unlabeled.
pub fn random_spec(rng: &mut ChaCha8Rng, max_k: usize, max_n: usize, max_m: usize) -> JoinSpec {
    let k = rng.gen_range(1..=max_k);
    let m = rng.gen_range(1..=max_m);
    let host = random_graph(rng, k, 0.6);
    let factors: Vec<Graph> = (0..k).map(|_| {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.0..1.0);
        random_graph(rng, n, p)
    }).collect();
    let partial = rng.gen_bool(0.3);
    let indexing = factors
        .iter()
        .map(|g| {
            let labels = (0..g.n())
                .map(|_| if partial && rng.gen_bool(0.1) { None } else { Some(rng.gen_range(1..=m)) })
                .collect();
            IndexingMap::partial(m, labels).unwrap()
        })
        .collect();
    JoinSpec::new(host, m, factors, indexing).unwrap()
}

pub fn random_subsets(rng: &mut ChaCha8Rng, factors: &[Graph]) -> Vec<Vec<usize>> {
    factors.iter().map(|g| (0..g.n()).filter(|_| rng.gen_bool(0.5)).collect()).collect()
}

/// Small random rational p/q with |p| ≤ 5 and 1 ≤ q ≤ 4.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into())
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_params(rng: &mut ChaCha8Rng, with_gamma: bool) -> UniversalParams {
    let gamma = if with_gamma { random_rational(rng) } else { Rational::zero() };
    UniversalParams::new(random_nonzero_rational(rng), random_rational(rng), gamma, random_rational(rng)).unwrap()
}

/// det by plain Gaussian elimination over the rationals.
pub fn gauss_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for j in c..n {
                let sub = &f * &a[c][j];
                a[r][j] -= sub;
            }
        }
    }
    det
}

/// Lagrange interpolation through (x_i, y_i), coefficients lowest first.
pub fn lagrange(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis numerator Π_{j≠i} (x − x_j), built lowest first
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (d, c) in basis.iter().enumerate() {
            out[d] += c * &scale;
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// det(xI − M) by evaluation at 0..=n and interpolation.
pub fn oracle_charpoly(m: &QMatrix) -> Polynomial {
    let n = m.rows();
    let points: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|x| {
            let x = Rational::from_integer(x.into());
            let a = (0..n)
                .map(|i| (0..n).map(|j| if i == j { &x - m.get(i, j) } else { -m.get(i, j).clone() }).collect())
                .collect();
            (x, gauss_det(a))
        })
        .collect();
    Polynomial::from_coeffs(lagrange(&points))
}

/// Solves A·x = b by Gauss-Jordan elimination; None when singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        b.swap(p, c);
        let pivot = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &pivot;
        }
        b[c] = &b[c] / &pivot;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let sub = &f * &a[c][j];
                    a[r][j] -= sub;
                }
                let sub = &f * &b[c];
                b[r] -= sub;
            }
        }
    }
    Some(b)
}

/// vᵗ(x0·I − M)⁻¹u at a rational point, None at eigenvalues.
pub fn resolvent_form(m: &QMatrix, u: &[Rational], v: &[Rational], x0: &Rational) -> Option<Rational> {
    let n = m.rows();
    let a = (0..n)
        .map(|i| (0..n).map(|j| if i == j { x0 - m.get(i, j) } else { -m.get(i, j).clone() }).collect())
        .collect();
    let x = solve(a, u.to_vec())?;
    Some(v.iter().zip(&x).map(|(a, b)| a * b).sum())
}

pub fn column(m: &QMatrix, c: usize) -> Vec<Rational> {
    (0..m.rows()).map(|r| m.get(r, c).clone()).collect()
}

/// The join's adjacency matrix from the edge rule, built here from scratch.
pub fn oracle_join_adjacency(spec: &JoinSpec) -> QMatrix {
    let offsets = spec.offsets();
    let n = spec.order();
    QMatrix::from_fn(n, n, |a, b| {
        let fa = offsets.iter().rposition(|&o| o <= a).unwrap();
        let fb = offsets.iter().rposition(|&o| o <= b).unwrap();
        let (u, v) = (a - offsets[fa], b - offsets[fb]);
        let edge = if fa == fb {
            spec.factors()[fa].has_edge(u, v)
        } else {
            let (lu, lv) = (spec.indexing()[fa].label(u), spec.indexing()[fb].label(v));
            spec.host().has_edge(fa, fb) && lu.is_some() && lu == lv
        };
        Rational::from_integer(i64::from(edge).into())
    })
}

/// U(G) = αA + βI + γJ + δD assembled from the adjacency matrix.
pub fn oracle_universal(adj: &QMatrix, p: &UniversalParams) -> QMatrix {
    let n = adj.rows();
    QMatrix::from_fn(n, n, |i, j| {
        let deg: Rational = (0..n).map(|k| adj.get(i, k).clone()).sum();
        let mut v = &p.alpha * adj.get(i, j) + &p.gamma;
        if i == j {
            v += &p.beta + &p.delta * deg;
        }
        v
    })
}

/// Isomorphism by trying every bijection; only for tiny graphs.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == a.n() {
            return true;
        }
        for v in 0..b.n() {
            if used[v] || (0..u).any(|w| a.has_edge(u, w) != b.has_edge(v, map[w])) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}
