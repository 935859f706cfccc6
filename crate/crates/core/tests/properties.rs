mod common;

use common::*;
use hmjoin::algebra::{Polynomial, QMatrix, Rational};
use hmjoin::cospectral::{generalized_universal_charpoly, isomorphism_test, regular_gamma_closed_form, AugmentedSideMatrices, GeneralizedJoinSpec};
use hmjoin::graph::{make_named, universal_matrix, NamedKind, UniversalParams};
use hmjoin::io::{join_spec_to_json, parse_join_spec, to_pretty};
use hmjoin::join::{blockwise_adjacency, degree_corrections, generalized_join, generalized_to_hm, hm_join, reduce_labels, IndexingMap, JoinSpec, ReductionMode};
use hmjoin::spectra::{block_charpoly, classify_e_main, classify_e_main_numeric, gamma, universal_block_charpoly};
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn rat(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn join_constructions_agree(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 4, 6, 4);
        let oracle = oracle_join_adjacency(&spec);
        prop_assert_eq!(&hm_join(&spec).adjacency_matrix(), &oracle);
        prop_assert_eq!(&blockwise_adjacency(&spec), &oracle);
    }

    #[test]
    fn block_identity_against_interpolated_oracle(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 3, 5, 3);
        let report = block_charpoly(&spec).unwrap();
        let oracle = oracle_charpoly(&oracle_join_adjacency(&spec));
        prop_assert_eq!(&report.charpoly_direct, &oracle);
        prop_assert_eq!(&report.charpoly_block, &oracle);
        let f = &report.factorization;
        let lhs = f.main_functions.iter().fold(oracle.clone(), |acc, mf| acc * mf.reduced_denominator.pow(spec.m()));
        let rhs: Polynomial = f.factor_charpolys.iter().cloned().product::<Polynomial>() * &f.phi;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn main_function_invariants(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 3, 6, 4);
        for (g, map) in spec.factors().iter().zip(spec.indexing()) {
            let a = g.adjacency_matrix();
            let e = map.matrix();
            let mf = gamma(&a, &e).unwrap();
            let phi = oracle_charpoly(&a);
            prop_assert!(mf.reduced_denominator.divides(&phi));
            for entry in mf.matrix.entries() {
                prop_assert!(entry.denominator().divides(&mf.reduced_denominator));
                if !entry.is_zero() {
                    prop_assert!(entry.numerator().degree() < entry.denominator().degree());
                }
            }
            // Pointwise against a linear solve at points away from the spectrum.
            for x0 in [rat(7) / rat(3), rat(-11) / rat(2), rat(13)] {
                for c in 0..e.cols() {
                    for r in 0..e.cols() {
                        let want = resolvent_form(&a, &column(&e, c), &column(&e, r), &x0).unwrap();
                        prop_assert_eq!(mf.matrix.get(r, c).eval(&x0).unwrap(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn ledger_rows_hold(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 4, 5, 4);
        let report = block_charpoly(&spec).unwrap();
        for row in &report.carry_forward {
            prop_assert!(row.observed >= row.bound, "{:?}", row);
            prop_assert_eq!(row.observed, report.charpoly_direct.square_free_decomposition().iter()
                .filter(|(p, _)| row.class.divides(p)).map(|(_, e)| *e).max().unwrap_or(0));
        }
    }

    #[test]
    fn reduction_preserves_adjacency(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 4, 6, 4);
        let original = blockwise_adjacency(&spec);
        for mode in [ReductionMode::Unused, ReductionMode::GlobalExclusive, ReductionMode::NeighborExclusive] {
            let r = reduce_labels(&spec, mode);
            prop_assert_eq!(&blockwise_adjacency(&r.spec), &original);
            prop_assert_eq!(r.remaining.max(1), r.spec.m());
            prop_assert_eq!(r.remaining + r.deleted_count(), spec.m());
        }
    }

    #[test]
    fn degree_identity(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 4, 6, 4);
        let joined = hm_join(&spec);
        let dc = degree_corrections(&spec);
        let offsets = spec.offsets();
        for (i, g) in spec.factors().iter().enumerate() {
            for v in 0..g.n() {
                prop_assert_eq!(joined.degree(offsets[i] + v), g.degree(v) + dc.diagonals[i][v]);
            }
        }
    }

    #[test]
    fn universal_route_without_gamma(seed in any::<u64>()) {
        let mut r = rng(seed);
        let spec = random_spec(&mut r, 3, 5, 3);
        let params = random_params(&mut r, false);
        let report = universal_block_charpoly(&spec, &params).unwrap();
        let oracle = oracle_charpoly(&oracle_universal(&oracle_join_adjacency(&spec), &params));
        prop_assert_eq!(report.charpoly_direct, oracle);
    }

    #[test]
    fn generalized_universal_route(seed in any::<u64>()) {
        let mut r = rng(seed);
        let spec = random_spec(&mut r, 3, 5, 1);
        let subsets = random_subsets(&mut r, spec.factors());
        let params = random_params(&mut r, true);
        let g = GeneralizedJoinSpec::new(spec.host().clone(), spec.factors().to_vec(), subsets.clone(), params.clone()).unwrap();
        let direct = generalized_join(spec.host(), spec.factors(), &subsets).unwrap();
        prop_assert_eq!(&hm_join(&generalized_to_hm(spec.host(), spec.factors(), &subsets).unwrap()), &direct);
        let oracle = oracle_charpoly(&oracle_universal(&direct.adjacency_matrix(), &params));
        prop_assert_eq!(generalized_universal_charpoly(&g).unwrap(), oracle);
    }

    #[test]
    fn side_matrix_products(seed in any::<u64>(), gnum in -6i64..=6, gden in 1i64..=5) {
        let mut r = rng(seed);
        let gamma = Rational::new(gnum.into(), gden.into());
        let (n1, n2) = (r.gen_range(1..=6usize), r.gen_range(1..=6usize));
        let (s1, s2) = (r.gen_range(0..=n1), r.gen_range(0..=n2));
        let a = AugmentedSideMatrices::new(n1, s1, &gamma);
        let b = AugmentedSideMatrices::new(n2, s2, &gamma);
        let prod = &a.left * &b.right.transpose();
        for u in 0..n1 {
            for v in 0..n2 {
                let hit = if u < s1 && v < s2 { rat(1) } else { rat(0) };
                prop_assert_eq!(prod.get(u, v), &(hit + &gamma));
            }
        }
    }

    #[test]
    fn closed_forms_match_first_principles(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = match r.gen_range(0..3) {
            0 => make_named(NamedKind::Cycle, &[r.gen_range(3..=8)]).unwrap(),
            1 => make_named(NamedKind::Complete, &[r.gen_range(1..=6)]).unwrap(),
            _ => { let a = r.gen_range(1..=4); make_named(NamedKind::CompleteBipartite, &[a, a]).unwrap() }
        };
        let s: Vec<usize> = (0..g.n()).filter(|_| r.gen_bool(0.5)).collect();
        let regular = UniversalParams::new(random_nonzero_rational(&mut r), random_rational(&mut r), random_rational(&mut r), Rational::zero()).unwrap();
        let alpha = random_nonzero_rational(&mut r);
        let cancelling = UniversalParams::new(alpha.clone(), random_rational(&mut r), random_rational(&mut r), -alpha).unwrap();
        for p in [regular, cancelling] {
            let cf = regular_gamma_closed_form(&g, &s, &p).unwrap();
            let m = universal_matrix(&g, &p);
            let ones = vec![rat(1); g.n()];
            let ind: Vec<Rational> = (0..g.n()).map(|v| rat(i64::from(s.contains(&v)))).collect();
            let x0 = rat(101) / rat(7);
            prop_assert_eq!(cf.value.eval(&x0).unwrap(), resolvent_form(&m, &ones, &ind, &x0).unwrap());
        }
    }

    #[test]
    fn isomorphism_respects_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=12);
        let g = random_graph(&mut r, n, 0.4);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        prop_assert!(isomorphism_test(&g, &g.relabeled(&perm).unwrap()).unwrap());
        if n >= 2 {
            let mut edges = g.edges();
            if edges.is_empty() { edges.push((0, 1)); } else { edges.pop(); }
            let h = hmjoin::graph::Graph::from_edges(n, &edges).unwrap();
            prop_assert!(!isomorphism_test(&g, &h).unwrap());
        }
    }

    #[test]
    fn spec_documents_round_trip(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 4, 6, 4);
        let text = to_pretty(&join_spec_to_json(&spec));
        let back = parse_join_spec(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(to_pretty(&join_spec_to_json(&back)), text);
    }

    #[test]
    fn exact_and_numeric_classification_agree(seed in any::<u64>()) {
        let spec = random_spec(&mut rng(seed), 2, 7, 3);
        for (g, map) in spec.factors().iter().zip(spec.indexing()) {
            let a = g.adjacency_matrix();
            let e = map.matrix();
            let exact = classify_e_main(&a, &e).unwrap();
            let numeric = classify_e_main_numeric(&a, &e, 1e-9).unwrap();
            for c in numeric {
                let owner = exact.iter().find(|x| x.poly.eval_f64(c.value).abs() < 1e-6 * (1.0 + c.value.abs()).powi(x.degree() as i32));
                prop_assert!(owner.is_some_and(|x| x.e_main == c.e_main), "{:?}", c);
            }
        }
    }

    #[test]
    fn polynomial_arithmetic(a in prop::collection::vec(-6i64..=6, 1..6), b in prop::collection::vec(-6i64..=6, 1..5), roots in prop::collection::vec(-4i64..=4, 0..5)) {
        let (pa, pb) = (Polynomial::from_i64(&a), Polynomial::from_i64(&b));
        if !pb.is_zero() {
            let (q, r) = pa.div_rem(&pb);
            prop_assert_eq!(&(&q * &pb) + &r, pa.clone());
            prop_assert!(r.is_zero() || r.degree() < pb.degree());
        }
        let with_roots = &pa * &Polynomial::from_roots(&roots.iter().map(|&r| rat(r)).collect::<Vec<_>>());
        if !with_roots.is_zero() {
            let found = with_roots.rational_roots();
            for r in &roots {
                prop_assert!(found.contains(&rat(*r)));
            }
            for r in &found {
                prop_assert!(with_roots.eval(r).is_zero());
            }
            let rebuilt: Polynomial = with_roots.square_free_decomposition().iter().map(|(p, e)| p.pow(*e)).product();
            prop_assert_eq!(rebuilt, with_roots.monic());
            let g = Polynomial::gcd(&with_roots, &pb);
            prop_assert!(g.divides(&with_roots) && (pb.is_zero() || g.divides(&pb)));
        }
    }
}

#[test]
fn constant_maps_collapse_to_the_plain_join() {
    let mut r = rng(11);
    for _ in 0..20 {
        let k = r.gen_range(1..=4);
        let host = random_graph(&mut r, k, 0.6);
        let factors: Vec<_> = (0..k).map(|_| { let n = r.gen_range(1..=5); random_graph(&mut r, n, 0.5) }).collect();
        let maps = factors.iter().map(|g| IndexingMap::constant(g.n(), 2, 2).unwrap()).collect();
        let spec = JoinSpec::new(host.clone(), 2, factors.clone(), maps).unwrap();
        let full: Vec<Vec<usize>> = factors.iter().map(|g| (0..g.n()).collect()).collect();
        assert_eq!(hm_join(&spec), generalized_join(&host, &factors, &full).unwrap());
    }
}

#[test]
fn interpolated_oracle_sanity() {
    let a = QMatrix::from_i64(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    assert_eq!(oracle_charpoly(&a), Polynomial::from_i64(&[-2, -3, 0, 1]));
}
