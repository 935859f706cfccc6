use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by [`isomorphism_test`].
pub const MAX_ISO_VERTICES: usize = 32;

/// Outcome of an isomorphism check that may decline large inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoVerdict {
    Isomorphic,
    NonIsomorphic,
    Unknown,
}

struct Side {
    n: usize,
    adj: Vec<u32>,
}

impl Side {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).into_iter().fold(0u32, |acc, u| acc | (1 << u)))
            .collect();
        Side { n: g.n(), adj }
    }
}

/// Joint colour refinement of both graphs so colour ids are comparable.
/// Returns false if the colour histograms diverge.
fn refine(a: &Side, b: &Side, ca: &mut Vec<usize>, cb: &mut Vec<usize>) -> bool {
    loop {
        let before = ca.iter().chain(cb.iter()).collect::<std::collections::BTreeSet<_>>().len();
        let sig = |s: &Side, c: &[usize], v: usize| {
            let mut neigh: Vec<usize> = (0..s.n).filter(|&u| s.adj[v] >> u & 1 == 1).map(|u| c[u]).collect();
            neigh.sort_unstable();
            (c[v], neigh)
        };
        let sa: Vec<_> = (0..a.n).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..b.n).map(|v| sig(b, cb, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        *ca = sa.iter().map(|s| ids[s]).collect();
        *cb = sb.iter().map(|s| ids[s]).collect();
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return false;
        }
        if ids.len() == before {
            return true;
        }
    }
}

fn search(a: &Side, b: &Side, ca: Vec<usize>, cb: Vec<usize>) -> bool {
    let mut ca = ca;
    let mut cb = cb;
    if !refine(a, b, &mut ca, &mut cb) {
        return false;
    }
    // Smallest non-singleton cell of a.
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *counts.entry(c).or_insert(0) += 1;
    }
    let target = counts.iter().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k).map(|(&c, _)| c);
    let Some(color) = target else {
        // Discrete colouring: the unique colour-preserving bijection.
        let mut map = vec![0; a.n];
        for v in 0..a.n {
            map[v] = (0..b.n).find(|&u| cb[u] == ca[v]).unwrap();
        }
        return (0..a.n).all(|v| (0..a.n).all(|u| (a.adj[v] >> u & 1) == (b.adj[map[v]] >> map[u] & 1)));
    };
    let v = (0..a.n).find(|&v| ca[v] == color).unwrap();
    let fresh = ca.iter().chain(cb.iter()).max().unwrap() + 1;
    for u in (0..b.n).filter(|&u| cb[u] == color) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[u] = fresh;
        if search(a, b, na, nb) {
            return true;
        }
    }
    false
}

/// Exact isomorphism test by colour refinement and individualization.
pub fn isomorphism_test(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() > MAX_ISO_VERTICES || b.n() > MAX_ISO_VERTICES {
        return Err(Error::TooLarge(format!(
            "isomorphism test supports at most {MAX_ISO_VERTICES} vertices, got {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (sa, sb) = (Side::new(a), Side::new(b));
    Ok(search(&sa, &sb, vec![0; a.n()], vec![0; b.n()]))
}

/// [`isomorphism_test`] with `Unknown` beyond the size bound.
pub fn isomorphism_verdict(a: &Graph, b: &Graph) -> IsoVerdict {
    match isomorphism_test(a, b) {
        Ok(true) => IsoVerdict::Isomorphic,
        Ok(false) => IsoVerdict::NonIsomorphic,
        Err(_) => IsoVerdict::Unknown,
    }
}
