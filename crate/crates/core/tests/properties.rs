use std::cmp::Ordering;

use nalgebra::DMatrix;
use proptest::prelude::*;

use zagreb_core::bounds::{
    best_bound, coindex_forms, evaluate, evaluate_all_specs, general_zagreb_lower_bound,
    lemma1_equality, lemma1_rhs, m2_lower_bound, named_bound, nordhaus_gaddum_forms, BoundId,
    BoundValue, Direction, Family, KernelSpec, Target,
};
use zagreb_core::graph::{encode_graph6, parse_edge_list, parse_graph6, Graph};
use zagreb_core::indices::{
    coindex_identity_rhs, first_zagreb, general_zagreb, general_zagreb_coindex, spectral_radius,
    SpectralSettings,
};
use zagreb_core::scalar::{int, rational_to_f64, Rational, Scalar};
use zagreb_core::verify::transcribe::transcribed;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn no_isolated(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("δ > 0", |g| g.min_degree() > 0)
}

fn values_and_pair() -> impl Strategy<Value = (Vec<i64>, usize, usize)> {
    (3usize..=9).prop_flat_map(|n| {
        (proptest::collection::vec(-12i64..=12, n), 1..=n, 1..=n)
            .prop_filter("distinct pair", |(_, j, k)| j != k)
    })
}

fn m1(g: &Graph) -> Rational {
    first_zagreb(g).value.as_exact().cloned().unwrap()
}

fn with_value(b: &BoundValue, v: Rational) -> BoundValue {
    BoundValue {
        value: Scalar::Exact(v),
        ..b.clone()
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn kernel_slack_is_spread_of_the_rest((xs, j, k) in values_and_pair()) {
        let xs: Vec<Rational> = xs.into_iter().map(int).collect();
        let sum_sq: Rational = xs.iter().map(|x| x * x).sum();
        let rest: Vec<&Rational> = xs
            .iter()
            .enumerate()
            .filter(|(i, _)| i + 1 != j && i + 1 != k)
            .map(|(_, x)| x)
            .collect();
        let mean = rest.iter().copied().sum::<Rational>() / int(rest.len() as i64);
        let spread: Rational = rest.iter().map(|&x| (x - &mean) * (x - &mean)).sum();
        let rhs = lemma1_rhs(&xs, j, k).unwrap();
        prop_assert_eq!(&sum_sq - &rhs, spread);
        prop_assert_eq!(sum_sq == rhs, lemma1_equality(&xs, j, k));
    }

    #[test]
    fn kernel_holds_for_reals(
        xs in proptest::collection::vec(0.01f64..50.0, 3..12),
        seed in any::<(usize, usize)>(),
    ) {
        let n = xs.len();
        let j = seed.0 % n + 1;
        let k = (j + seed.1 % (n - 1)) % n + 1;
        let sum_sq: f64 = xs.iter().map(|x| x * x).sum();
        let rhs = lemma1_rhs(&xs, j, k).unwrap();
        prop_assert!(rhs <= sum_sq * (1.0 + 1e-12) + 1e-9);
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(1, 9)) {
        let code = encode_graph6(&g);
        prop_assert_eq!(&parse_graph6(&code).unwrap(), &g);
        let mut text = format!("n {}\n", g.order());
        for (u, v) in g.edges() {
            text.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        prop_assert_eq!(&parse_edge_list(&text).unwrap(), &g);
        prop_assert_eq!(&g.complement().complement(), &g);
        prop_assert_eq!(g.degree_sequence().degree_sum(), 2 * g.size());
    }

    #[test]
    fn index_coindex_identity(g in graph(2, 9), k in 0i32..=3) {
        prop_assume!(k >= 1 || g.min_degree() > 0);
        let lhs = general_zagreb(&g, k as f64).unwrap().value.as_exact().cloned().unwrap()
            + general_zagreb_coindex(&g, k as f64).unwrap().value.as_exact().cloned().unwrap();
        prop_assert_eq!(lhs, coindex_identity_rhs(&g.degree_sequence(), k).unwrap());
    }

    #[test]
    fn complement_sums_match_affine_forms(g in graph(2, 9)) {
        let ds = g.degree_sequence();
        let x = m1(&g);
        for form in nordhaus_gaddum_forms(&ds).iter().chain(coindex_forms(&ds).iter()) {
            let actual = form.target.actual(&g).unwrap();
            prop_assert_eq!(actual.as_exact().cloned().unwrap(), form.at(&x), "{}", form.target);
        }
    }

    #[test]
    fn spectral_radius_matches_dense_eigensolver(g in graph(1, 9)) {
        let n = g.order();
        let a = DMatrix::from_fn(n, n, |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 });
        let expected: f64 = a.symmetric_eigen().eigenvalues.max();
        let got = spectral_radius(&g, &SpectralSettings::default()).unwrap().value.to_f64();
        prop_assert!((got - expected).abs() < 1e-6, "{} vs {}", got, expected);
        prop_assert!(got + 1e-9 >= (rational_to_f64(&m1(&g)) / n as f64).sqrt());
    }

    #[test]
    fn every_bound_is_valid(g in no_isolated(3, 9), alpha in prop::sample::select(vec![-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0])) {
        let ds = g.degree_sequence();
        for &id in BoundId::ALL {
            let Ok(rows) = evaluate(&ds, id, alpha) else { continue };
            for b in rows {
                if id.family() == Family::Application && b.target == Target::SpectralRadius {
                    continue;
                }
                let actual = b.target.actual(&g).unwrap();
                prop_assert!(b.holds(&actual), "{} = {} vs {}", b.label(), b.value, actual);
            }
        }
        for b in evaluate_all_specs(&ds, alpha).unwrap() {
            let actual = b.target.actual(&g).unwrap();
            prop_assert!(b.holds(&actual), "{} = {} vs {}", b.label(), b.value, actual);
        }
    }

    #[test]
    fn named_bounds_are_kernel_instances(g in no_isolated(5, 9)) {
        let ds = g.degree_sequence();
        let n = ds.len();
        for &id in BoundId::ALL.iter().filter(|id| id.family() == Family::Corollary) {
            let layout = id.layout().unwrap();
            let at = |p: zagreb_core::graph::RelPos| p.resolve(n).unwrap();
            let removed: Vec<usize> = layout.removed.iter().map(|&p| at(p)).collect();
            let spec = KernelSpec::new(layout.alpha, &removed, at(layout.pair.0), at(layout.pair.1));
            let named = named_bound(&ds, id).unwrap();
            let general = general_zagreb_lower_bound(&ds, &spec).unwrap();
            prop_assert_eq!(&named.value, &general.value);
            prop_assert_eq!(named.value.as_exact().cloned(), transcribed(&ds, id), "{}", id);
        }
    }

    #[test]
    fn best_is_an_upper_envelope(g in graph(3, 8), alpha in prop::sample::select(vec![-1.0, 1.0, 2.0])) {
        let ds = g.degree_sequence();
        prop_assume!(alpha > 0.0 || ds.min() > 0);
        let best = best_bound(&ds, alpha).unwrap();
        for b in evaluate_all_specs(&ds, alpha).unwrap() {
            prop_assert_ne!(b.value.compare(&best.value), Ordering::Greater);
        }
    }

    #[test]
    fn application_bounds_are_monotone_in_m1(g in no_isolated(3, 9), lo in 0i64..200, step in 0i64..200) {
        let ds = g.degree_sequence();
        let source = named_bound(&ds, BoundId::CorZte2).unwrap();
        let (a, b) = (with_value(&source, int(lo)), with_value(&source, int(lo + step)));
        let m2a = m2_lower_bound(&ds, &a).unwrap();
        let m2b = m2_lower_bound(&ds, &b).unwrap();
        prop_assert_ne!(m2a.value.compare(&m2b.value), Ordering::Greater);
        for form in nordhaus_gaddum_forms(&ds).iter().chain(coindex_forms(&ds).iter()) {
            let (fa, fb) = (form.substitute(BoundId::AppNg, &a).unwrap(), form.substitute(BoundId::AppNg, &b).unwrap());
            let expected = match form.direction() {
                Direction::Lower => Ordering::Greater,
                Direction::Upper => Ordering::Less,
            };
            prop_assert_ne!(fa.value.compare(&fb.value), expected);
        }
    }
}
