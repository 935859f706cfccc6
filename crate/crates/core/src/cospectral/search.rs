use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{check_cospectral_conditions, factor_witness, CospectralCertificate, FactorWitness, GeneralizedJoinSpec, IsoVerdict, MatrixKind};
use crate::families::{cartesian_product, generalized_petersen};
use crate::graph::{disjoint_union, make_named, Graph, NamedKind, UniversalParams};

/// Checks attempted per pair of catalog graphs within one witness group.
const MAX_CHECKS_PER_PAIR: usize = 8;

/// Small graphs for cospectral searches, with display names.
pub fn shipped_catalog() -> Vec<(String, Graph)> {
    let named = |kind, params: &[usize]| make_named(kind, params).expect("catalog parameters are valid");
    let k1 = named(NamedKind::Complete, &[1]);
    let c3 = named(NamedKind::Cycle, &[3]);
    let prism = cartesian_product(&c3, &named(NamedKind::Complete, &[2])).expect("prism").direct;
    let cube = cartesian_product(&named(NamedKind::Cycle, &[4]), &named(NamedKind::Complete, &[2])).expect("cube").direct;
    vec![
        ("K_{1,4}".into(), named(NamedKind::Star, &[4])),
        ("C_4+K_1".into(), disjoint_union(&[named(NamedKind::Cycle, &[4]), k1])),
        ("C_5".into(), named(NamedKind::Cycle, &[5])),
        ("C_6".into(), named(NamedKind::Cycle, &[6])),
        ("2C_3".into(), disjoint_union(&[c3.clone(), c3])),
        ("K_4".into(), named(NamedKind::Complete, &[4])),
        ("K_{3,3}".into(), named(NamedKind::CompleteBipartite, &[3, 3])),
        ("prism".into(), prism),
        ("Q_3".into(), cube),
        ("Petersen".into(), generalized_petersen(5, 2).expect("Petersen").direct),
        ("P_4".into(), named(NamedKind::Path, &[4])),
        ("C_4".into(), named(NamedKind::Cycle, &[4])),
    ]
}

/// Non-empty subsets of 0..n by size, then lexicographically, at most `budget`.
fn subsets(n: usize, budget: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=n {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            if out.len() == budget {
                return out;
            }
            out.push(comb.clone());
            let Some(i) = (0..size).rev().find(|&i| comb[i] < n - size + i) else { break };
            comb[i] += 1;
            for j in i + 1..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    out
}

struct Candidate {
    graph: usize,
    spec: GeneralizedJoinSpec,
}

/// Searches cospectral generalized joins K_2[G, K_1] that cone a catalog
/// graph G over a subset S. Candidates are grouped by the exact hypothesis
/// witnesses; within a group every pair of catalog graphs gets a capped
/// number of full checks, preferring a non-isomorphic certificate. Output is
/// deduplicated by (graph pair, characteristic polynomial) and sorted.
///
/// [`MatrixKind::Universal`] searches with the signless Laplacian; use
/// [`search_pairs_universal`] for other coefficients.
pub fn search_pairs(catalog: &[Graph], subset_budget: usize, kind: MatrixKind) -> Vec<CospectralCertificate> {
    let params = kind.preset().unwrap_or_else(UniversalParams::signless_laplacian);
    search(catalog, subset_budget, kind, params)
}

/// [`search_pairs`] for U(G) with the given coefficients.
pub fn search_pairs_universal(catalog: &[Graph], subset_budget: usize, params: UniversalParams) -> Vec<CospectralCertificate> {
    search(catalog, subset_budget, MatrixKind::Universal, params)
}

fn search(catalog: &[Graph], subset_budget: usize, kind: MatrixKind, params: UniversalParams) -> Vec<CospectralCertificate> {
    let host = make_named(NamedKind::Path, &[2]).expect("K_2");
    let k1 = make_named(NamedKind::Complete, &[1]).expect("K_1");
    let candidates: Vec<Candidate> = catalog
        .iter()
        .enumerate()
        .filter(|(_, g)| g.n() > 0 && (!kind.needs_regular() || g.regular_degree().is_some()))
        .flat_map(|(gi, g)| {
            subsets(g.n(), subset_budget).into_iter().map(move |s| (gi, g, s))
        })
        .filter_map(|(gi, g, s)| {
            let spec = GeneralizedJoinSpec::new(host.clone(), vec![g.clone(), k1.clone()], vec![s, vec![0]], params.clone()).ok()?;
            Some(Candidate { graph: gi, spec })
        })
        .collect();

    let witnesses: Vec<Option<FactorWitness>> = candidates.par_iter().map(|c| factor_witness(&c.spec, 0).ok()).collect();
    // Candidates sharing every witness satisfy all hypotheses pairwise.
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut ids: HashMap<(usize, usize, FactorWitness), usize> = HashMap::new();
    for (idx, w) in witnesses.into_iter().enumerate() {
        let Some(w) = w else { continue };
        let spec = &candidates[idx].spec;
        let next = ids.len();
        let id = *ids.entry((spec.factors()[0].n(), spec.subsets()[0].len(), w)).or_insert(next);
        groups.entry(id).or_default().push(idx);
    }

    // Candidate pairs to check, capped per (group, graph pair).
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for members in groups.values() {
        let mut per_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (x, &a) in members.iter().enumerate() {
            for &b in &members[x + 1..] {
                let pair = (candidates[a].graph, candidates[b].graph);
                let count = per_pair.entry(pair).or_insert(0);
                if *count < MAX_CHECKS_PER_PAIR {
                    *count += 1;
                    jobs.push((a, b));
                }
            }
        }
    }

    let checked: Vec<Option<(usize, usize, CospectralCertificate)>> = jobs
        .par_iter()
        .map(|&(a, b)| {
            let cert = check_cospectral_conditions(&candidates[a].spec, &candidates[b].spec, kind).ok()?;
            Some((candidates[a].graph, candidates[b].graph, cert))
        })
        .collect();

    let mut best: BTreeMap<(usize, usize, Vec<String>), CospectralCertificate> = BTreeMap::new();
    for (ga, gb, cert) in checked.into_iter().flatten() {
        let key = (ga, gb, cert.charpolys.0.coeffs().iter().map(crate::algebra::format_rational).collect());
        match best.get(&key) {
            Some(old) if old.isomorphic != IsoVerdict::Isomorphic || cert.isomorphic == IsoVerdict::Isomorphic => {}
            _ => {
                best.insert(key, cert);
            }
        }
    }
    best.into_values().collect()
}
