//! Acceptance harness: one PASS/FAIL line per criterion, non-zero exit on
//! any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use hmjoin::algebra::{charpoly_berkowitz, rat, Polynomial, QMatrix, Rational, RationalFunction};
use hmjoin::cospectral::{
    generalized_universal_charpoly, isomorphism_test, regular_gamma_closed_form, search_pairs, shipped_catalog, ClosedFormCase,
    GeneralizedJoinSpec, IsoVerdict, MatrixKind,
};
use hmjoin::families::{cartesian_product, generalized_helm, generalized_petersen, generalized_web, lollipop, tadpole, FamilyRealization};
use hmjoin::graph::{disjoint_union, make_named, universal_matrix, Graph, NamedKind, UniversalParams};
use hmjoin::io::parse_join_spec;
use hmjoin::join::{blockwise_adjacency, hm_join, reduce_labels, JoinSpec, ReductionMode};
use hmjoin::spectra::{block_charpoly, classify_e_main, gamma, gamma_bilinear, universal_block_charpoly};
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named(kind: NamedKind, params: &[usize]) -> Graph {
    make_named(kind, params).expect("valid named graph")
}

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64(c)
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(p(num), p(den)).expect("non-zero denominator")
}

fn two_complete_graphs() -> JoinSpec {
    JoinSpec::from_labels(
        named(NamedKind::Path, &[2]),
        2,
        vec![named(NamedKind::Complete, &[2]), named(NamedKind::Complete, &[5])],
        vec![vec![1, 1], vec![1, 1, 1, 2, 2]],
    )
    .expect("valid spec")
}

fn path_of_three_factors() -> JoinSpec {
    JoinSpec::from_labels(
        named(NamedKind::Path, &[3]),
        3,
        vec![named(NamedKind::Complete, &[2]), named(NamedKind::Path, &[3]), named(NamedKind::Star, &[3])],
        vec![vec![1, 2], vec![1, 2, 3], vec![1, 1, 3, 3]],
    )
    .expect("valid spec")
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn both_routes(spec: &JoinSpec, expected: &Polynomial) -> Result<(), String> {
    let report = block_charpoly(spec).map_err(|e| e.to_string())?;
    ensure(&report.charpoly_direct == expected, || format!("direct route gave {}", report.charpoly_direct))?;
    ensure(&report.charpoly_block == expected, || format!("block route gave {}", report.charpoly_block))?;
    let oracle = oracle_charpoly(&oracle_join_adjacency(spec));
    ensure(&oracle == expected, || format!("interpolation oracle gave {oracle}"))
}

fn two_complete_graphs_charpoly() -> Outcome {
    let start = Instant::now();
    let expected = p(&[2, 1]) * p(&[-5, 1]) * p(&[-1, 1]) * p(&[1, 1]).pow(4);
    both_routes(&two_complete_graphs(), &expected)?;
    within(Duration::from_secs(1), start)?;
    Ok(expected.factored())
}

fn path_of_three_factors_charpoly() -> Outcome {
    let start = Instant::now();
    let spec = path_of_three_factors();
    let expected = p(&[0, 2, -10, -34, 6, 39, -2, -12, 0, 1]);
    both_routes(&spec, &expected)?;

    let zero = RationalFunction::zero();
    let d1 = [-1, 0, 1];
    let d2 = [0, -2, 0, 1];
    let d3 = [0, -3, 0, 1];
    let printed = [
        [[rf(&[0, 1], &d1), rf(&[1], &d1), zero.clone()], [rf(&[1], &d1), rf(&[0, 1], &d1), zero.clone()], [zero.clone(), zero.clone(), zero.clone()]],
        [
            [rf(&[-1, 0, 1], &d2), rf(&[0, 1], &d2), rf(&[1], &d2)],
            [rf(&[0, 1], &d2), rf(&[0, 0, 1], &d2), rf(&[0, 1], &d2)],
            [rf(&[1], &d2), rf(&[0, 1], &d2), rf(&[-1, 0, 1], &d2)],
        ],
        [
            [rf(&[-2, 2, 2], &d3), zero.clone(), rf(&[2, 2], &d3)],
            [zero.clone(), zero.clone(), zero.clone()],
            [rf(&[2, 2], &d3), zero.clone(), rf(&[-2, 0, 2], &d3)],
        ],
    ];
    for (i, want) in printed.iter().enumerate() {
        let g = gamma(&spec.factors()[i].adjacency_matrix(), &spec.indexing()[i].matrix()).map_err(|e| e.to_string())?;
        for a in 0..3 {
            for b in 0..3 {
                ensure(g.matrix.get(a, b) == &want[a][b], || format!("Γ_{} entry ({a}, {b}) is {}", i + 1, g.matrix.get(a, b)))?;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{} and three main-function matrices", expected.factored()))
}

fn e_main_flags() -> Outcome {
    let flags = |g: &Graph, e: &QMatrix| -> Result<Vec<(Rational, bool)>, String> {
        let classes = classify_e_main(&g.adjacency_matrix(), e).map_err(|e| e.to_string())?;
        classes.iter().map(|c| c.root.clone().map(|r| (r, c.e_main)).ok_or_else(|| "irrational class".to_string())).collect()
    };
    let spec = two_complete_graphs();
    let k2 = flags(&spec.factors()[0], &spec.indexing()[0].matrix())?;
    ensure(k2 == vec![(rat(-1), false), (rat(1), true)], || format!("K_2 flags {k2:?}"))?;
    let k5 = flags(&spec.factors()[1], &spec.indexing()[1].matrix())?;
    ensure(k5 == vec![(rat(-1), true), (rat(4), true)], || format!("K_5 flags {k5:?}"))?;
    let spec = path_of_three_factors();
    for (i, (g, map)) in spec.factors().iter().zip(spec.indexing()).enumerate() {
        let classes = classify_e_main(&g.adjacency_matrix(), &map.matrix()).map_err(|e| e.to_string())?;
        ensure(classes.iter().all(|c| c.e_main), || format!("factor {} has a non-main class", i + 1))?;
    }
    Ok("K_2 {1 main, −1 non-main}, K_5 {4, −1 main}, three-factor join all main".into())
}

/// The shared 200-spec corpus for the identity and ledger criteria.
fn corpus() -> Vec<JoinSpec> {
    let mut r = rng(0x5eed_0004);
    (0..200).map(|_| random_spec(&mut r, 4, 6, 4)).collect()
}

fn factorization_identity(specs: &[JoinSpec]) -> Outcome {
    let start = Instant::now();
    for (idx, spec) in specs.iter().enumerate() {
        let report = block_charpoly(spec).map_err(|e| format!("spec {idx}: {e}"))?;
        let direct = charpoly_berkowitz(&oracle_join_adjacency(spec)).map_err(|e| e.to_string())?;
        ensure(report.charpoly_direct == direct, || format!("spec {idx}: direct charpoly mismatch"))?;
        let f = &report.factorization;
        let lhs = f.main_functions.iter().fold(direct, |acc, mf| acc * mf.reduced_denominator.pow(spec.m()));
        let rhs = f.factor_charpolys.iter().cloned().product::<Polynomial>() * &f.phi;
        ensure(lhs == rhs, || format!("spec {idx}: identity fails"))?;
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{} specs in {:.2?}", specs.len(), start.elapsed()))
}

fn carry_forward(specs: &[JoinSpec]) -> Outcome {
    let mut rows = 0;
    for (idx, spec) in specs.iter().enumerate() {
        let report = block_charpoly(spec).map_err(|e| format!("spec {idx}: {e}"))?;
        for row in &report.carry_forward {
            rows += 1;
            ensure(row.observed >= row.bound, || format!("spec {idx}: row {row:?}"))?;
        }
    }
    let report = block_charpoly(&two_complete_graphs()).map_err(|e| e.to_string())?;
    let combined = report
        .carry_forward
        .iter()
        .find(|r| r.root == Some(rat(-1)) && r.factor.is_none())
        .ok_or("no combined row for −1")?;
    ensure((combined.observed, combined.bound) == (4, 3), || format!("−1 row observed {} bound {}", combined.observed, combined.bound))?;
    Ok(format!("{rows} rows hold; −1 observed 4 ≥ bound 3"))
}

fn cross_edges(spec: &JoinSpec) -> usize {
    hm_join(spec).edge_count() - spec.factors().iter().map(Graph::edge_count).sum::<usize>()
}

fn reduction() -> Outcome {
    let mut r = rng(0x5eed_0006);
    for idx in 0..100 {
        let spec = random_spec(&mut r, 4, 6, 4);
        let original = blockwise_adjacency(&spec);
        ensure(original == oracle_join_adjacency(&spec), || format!("spec {idx}: blockwise adjacency differs from oracle"))?;
        for mode in [ReductionMode::Unused, ReductionMode::GlobalExclusive, ReductionMode::NeighborExclusive] {
            let reduced = reduce_labels(&spec, mode);
            ensure(blockwise_adjacency(&reduced.spec) == original, || format!("spec {idx}: {mode:?} changed the adjacency"))?;
        }
    }
    let fixture = parse_join_spec(include_str!("../examples/lollipop.json")).map_err(|e| e.to_string())?;
    for spec in [fixture, lollipop(4, 3).map_err(|e| e.to_string())?.spec] {
        let reduced = reduce_labels(&spec, ReductionMode::NeighborExclusive);
        ensure(reduced.spec.m() == 1, || format!("lollipop reduced to m = {}", reduced.spec.m()))?;
        ensure(reduced.deleted == vec![1, 3], || format!("deleted {:?}", reduced.deleted))?;
        let ones: Vec<usize> = reduced.spec.indexing().iter().map(|m| m.labels().iter().filter(|l| l.is_some()).count()).collect();
        ensure(ones == vec![1, 1], || format!("labelled vertices per factor {ones:?}"))?;
        ensure(cross_edges(&reduced.spec) == 1, || format!("{} cross edges", cross_edges(&reduced.spec)))?;
        ensure(blockwise_adjacency(&reduced.spec) == blockwise_adjacency(&spec), || "lollipop adjacency changed".into())?;
    }
    Ok("100 specs × 3 modes; lollipop keeps one column and one cross edge".into())
}

fn check_family(name: &str, real: FamilyRealization) -> Result<(), String> {
    let aligned = real.aligned_join().map_err(|e| format!("{name}: {e}"))?;
    ensure(aligned.adjacency_matrix() == real.direct.adjacency_matrix(), || format!("{name}: adjacency differs"))?;
    let report = block_charpoly(&real.spec).map_err(|e| format!("{name}: {e}"))?;
    let direct = charpoly_berkowitz(&real.direct.adjacency_matrix()).map_err(|e| e.to_string())?;
    ensure(report.charpoly_block == direct, || format!("{name}: block charpoly differs from the direct graph"))
}

fn families() -> Outcome {
    let mut members: Vec<(String, hmjoin::Result<FamilyRealization>)> = Vec::new();
    let mut bases = Vec::new();
    for n in 1..=6 {
        bases.push((format!("P{n}"), named(NamedKind::Path, &[n])));
    }
    for n in 3..=6 {
        bases.push((format!("C{n}"), named(NamedKind::Cycle, &[n])));
    }
    for s in 1..=5 {
        bases.push((format!("K1,{s}"), named(NamedKind::Star, &[s])));
    }
    for (na, a) in &bases {
        for (nb, b) in &bases {
            members.push((format!("{na}□{nb}"), cartesian_product(a, b)));
        }
    }
    for n in 5..=10 {
        for k in (1..n).filter(|k| 2 * k < n) {
            members.push((format!("P({n},{k})"), generalized_petersen(n, k)));
        }
    }
    for n in 3..=8 {
        for m in 1..=3 {
            members.push((format!("H_{n}^{m}"), generalized_helm(n, m)));
        }
    }
    for t in 1..=3 {
        for n in 3..=6 {
            members.push((format!("W({t},{n})"), generalized_web(t, n)));
        }
    }
    for m in 3..=8 {
        for n in 1..=6 {
            members.push((format!("L({m},{n})"), lollipop(m, n)));
            members.push((format!("T({m},{n})"), tadpole(m, n)));
        }
    }
    members
        .into_par_iter()
        .map(|(name, real)| check_family(&name, real.map_err(|e| format!("{name}: {e}"))?))
        .collect::<Result<Vec<()>, String>>()
        .map(|done| format!("{} family members", done.len()))
}

fn universal() -> Outcome {
    let mut r = rng(0x5eed_0008);
    for idx in 0..100 {
        let spec = random_spec(&mut r, 3, 5, 3);
        let params = random_params(&mut r, false);
        let report = universal_block_charpoly(&spec, &params).map_err(|e| format!("spec {idx}: {e}"))?;
        let oracle = oracle_charpoly(&oracle_universal(&oracle_join_adjacency(&spec), &params));
        ensure(report.charpoly_block == oracle, || format!("spec {idx}: universal block charpoly differs"))?;
    }
    for idx in 0..100 {
        let spec = random_spec(&mut r, 3, 5, 1);
        let subsets = random_subsets(&mut r, spec.factors());
        let params = random_params(&mut r, true);
        let g = GeneralizedJoinSpec::new(spec.host().clone(), spec.factors().to_vec(), subsets, params.clone())
            .map_err(|e| format!("generalized {idx}: {e}"))?;
        let direct = g.graph().map_err(|e| e.to_string())?;
        let got = generalized_universal_charpoly(&g).map_err(|e| format!("generalized {idx}: {e}"))?;
        let oracle = oracle_charpoly(&oracle_universal(&direct.adjacency_matrix(), &params));
        ensure(got == oracle, || format!("generalized {idx}: charpoly differs"))?;
    }
    Ok("100 joins with (α,β,0,δ), 100 generalized joins with (α,β,γ,δ)".into())
}

fn regular_graph(r: &mut impl Rng) -> Graph {
    match r.gen_range(0..6) {
        0 => named(NamedKind::Cycle, &[r.gen_range(3..=9)]),
        1 => named(NamedKind::Complete, &[r.gen_range(1..=7)]),
        2 => {
            let a = r.gen_range(1..=4);
            named(NamedKind::CompleteBipartite, &[a, a])
        }
        3 => generalized_petersen(r.gen_range(5..=8), 2).expect("valid").direct,
        4 => disjoint_union(&[named(NamedKind::Cycle, &[3]), named(NamedKind::Cycle, &[3])]),
        _ => cartesian_product(&named(NamedKind::Cycle, &[4]), &named(NamedKind::Complete, &[2])).expect("cube").direct,
    }
}

fn closed_forms() -> Outcome {
    let mut r = rng(0x5eed_0009);
    for case in [ClosedFormCase::RegularNoDegreeTerm, ClosedFormCase::DegreeCancelling] {
        for idx in 0..50 {
            let g = regular_graph(&mut r);
            let s: Vec<usize> = (0..g.n()).filter(|_| r.gen_bool(0.5)).collect();
            let alpha = random_nonzero_rational(&mut r);
            let delta = if case == ClosedFormCase::RegularNoDegreeTerm { Rational::zero() } else { -alpha.clone() };
            let params = UniversalParams::new(alpha, random_rational(&mut r), random_rational(&mut r), delta).map_err(|e| e.to_string())?;
            let cf = regular_gamma_closed_form(&g, &s, &params).map_err(|e| format!("{case:?} {idx}: {e}"))?;
            ensure(cf.case == case, || format!("{case:?} {idx}: classified as {:?}", cf.case))?;
            let m = universal_matrix(&g, &params);
            let ones = QMatrix::ones(g.n(), 1);
            let ind = QMatrix::indicator(g.n(), &s);
            for (u, v) in [(&ones, &ind), (&ind, &ones)] {
                let direct = gamma_bilinear(&m, u, v).map_err(|e| e.to_string())?;
                ensure(direct.get(0, 0) == &cf.value, || format!("{case:?} {idx}: main function {}", direct.get(0, 0)))?;
            }
            let x0 = rat(97) / rat(5);
            let want = resolvent_form(&m, &column(&ind, 0), &column(&ones, 0), &x0).ok_or("oracle hit an eigenvalue")?;
            ensure(cf.value.eval(&x0).ok_or("closed form has a pole")? == want, || format!("{case:?} {idx}: oracle disagrees"))?;
        }
    }
    Ok("50 instances per hypothesis case".into())
}

fn cospectral() -> Outcome {
    let star = named(NamedKind::Star, &[4]);
    let other = disjoint_union(&[named(NamedKind::Cycle, &[4]), named(NamedKind::Complete, &[1])]);
    ensure(oracle_charpoly(&star.adjacency_matrix()) == oracle_charpoly(&other.adjacency_matrix()), || "K_{1,4} and C_4+K_1 not cospectral".into())?;
    ensure(!brute_isomorphic(&star, &other), || "K_{1,4} and C_4+K_1 isomorphic by brute force".into())?;
    ensure(isomorphism_test(&star, &other) == Ok(false), || "library isomorphism test disagrees on K_{1,4}".into())?;

    let catalog: Vec<Graph> = shipped_catalog().into_iter().map(|(_, g)| g).collect();
    let mut summary = Vec::new();
    for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian] {
        let certs = search_pairs(&catalog, 256, kind);
        let mut non_iso = 0;
        for (idx, c) in certs.iter().enumerate() {
            ensure(c.reverify().map_err(|e| e.to_string())?, || format!("{kind} certificate {idx} fails re-verification"))?;
            let params = c.pair.0.params().clone();
            let a = oracle_charpoly(&oracle_universal(&c.pair.0.graph().map_err(|e| e.to_string())?.adjacency_matrix(), &params));
            let b = oracle_charpoly(&oracle_universal(&c.pair.1.graph().map_err(|e| e.to_string())?.adjacency_matrix(), &params));
            ensure(a == b && a == c.charpolys.0, || format!("{kind} certificate {idx}: oracle charpolys differ"))?;
            if c.isomorphic == IsoVerdict::NonIsomorphic {
                non_iso += 1;
            }
        }
        if kind == MatrixKind::Adjacency {
            ensure(non_iso > 0, || "no non-isomorphic adjacency certificate".into())?;
        }
        summary.push(format!("{kind}: {} certificates, {non_iso} non-isomorphic", certs.len()));
    }
    Ok(summary.join("; "))
}

fn main() -> ExitCode {
    let specs = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 two-complete-graphs charpoly", Box::new(two_complete_graphs_charpoly)),
        ("2 three-factor path join charpoly and main functions", Box::new(path_of_three_factors_charpoly)),
        ("3 E-main classification", Box::new(e_main_flags)),
        ("4 factorization identity", Box::new(|| factorization_identity(&specs))),
        ("5 carry-forward ledger", Box::new(|| carry_forward(&specs))),
        ("6 label reduction", Box::new(reduction)),
        ("7 graph families", Box::new(families)),
        ("8 universal matrices", Box::new(universal)),
        ("9 closed forms on regular graphs", Box::new(closed_forms)),
        ("10 cospectral certificates", Box::new(cospectral)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
