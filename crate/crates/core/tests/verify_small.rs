use zagreb_core::bounds::{named_bound, BoundId};
use zagreb_core::graph::{parse_edge_list, parse_graph6, CorpusSpec, DegreeSequence, Graph};
use zagreb_core::indices::{first_zagreb, general_zagreb_of};
use zagreb_core::scalar::{int, Scalar};
use zagreb_core::verify::{
    check_dominance, check_equality_iff, check_identities, check_validity, dominance_claims,
    find_incomparability_witnesses, run_property, Corpus, PropertyId, Status, Triage,
    DEFAULT_ALPHAS,
};

const LIMIT: usize = 8;

fn corpus(spec: CorpusSpec) -> Corpus {
    Corpus::single(spec)
}

#[test]
fn pair_bounds_valid_up_to_six() {
    let r = check_validity(
        &corpus(CorpusSpec::labeled(3, 6)),
        &[BoundId::Thm1],
        &[1.0],
        LIMIT,
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.checks > 0);
}

#[test]
fn two_removed_at_minus_one() {
    let r = check_validity(
        &corpus(CorpusSpec::labeled(5, 6)),
        &[BoundId::Thm3],
        &[-1.0],
        LIMIT,
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.skipped.is_empty());
}

#[test]
fn triangle_skips_large_layouts() {
    let r = check_validity(
        &corpus(CorpusSpec::labeled(3, 3)),
        &[BoundId::CorXu4],
        &DEFAULT_ALPHAS,
        LIMIT,
    )
    .unwrap();
    assert_eq!(r.checks, 0);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.skipped.values().sum::<usize>(), 2);
}

#[test]
fn star_attains_pair_bound_inside_stated_class() {
    let star = DegreeSequence::from_degrees(vec![3, 1, 1, 1]);
    let b = named_bound(&star, BoundId::CorZte2).unwrap();
    assert_eq!(b.value, Scalar::Exact(int(12)));
    assert_eq!(b.equality_predicted, Some(true));

    let g1 = DegreeSequence::from_degrees(vec![7, 6, 6, 5, 4, 4, 4, 2]);
    let b = named_bound(&g1, BoundId::CorZte2).unwrap();
    assert!(!b.tight(&general_zagreb_of(&g1, 2.0).unwrap()));
    assert_eq!(b.equality_predicted, Some(false));
}

#[test]
fn pair_characterization_holds_to_seven() {
    let r = check_equality_iff(
        &corpus(CorpusSpec::dedup(3, 7)),
        &[BoundId::CorZte2, BoundId::CorZr31],
        LIMIT,
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass, "{}", r.to_text());
}

#[test]
fn one_removed_modified_characterization_fails() {
    let r =
        check_equality_iff(&corpus(CorpusSpec::dedup(4, 6)), &[BoundId::Mm1One], LIMIT).unwrap();
    assert_eq!(r.status, Status::Finding);
    assert!(r
        .violations
        .iter()
        .all(|v| v.triage == Some(Triage::ClaimFalsified)));
    let g = parse_graph6("D@{").unwrap();
    let ds = g.degree_sequence();
    let b = named_bound(&ds, BoundId::Mm1One).unwrap();
    assert_eq!(b.equality_predicted, Some(true));
    assert!(!b.tight(&general_zagreb_of(&ds, -2.0).unwrap()));
    assert!(r.notes[0].contains("Gamma_{3,n-1}"));
}

#[test]
fn dominance_on_small_corpus() {
    let r = check_dominance(
        &corpus(CorpusSpec::labeled(3, 5)),
        &dominance_claims(),
        LIMIT,
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn identities_on_cycle_and_corpus() {
    let c5 = Graph::cycle(5).unwrap();
    let both = first_zagreb(&c5).value.as_exact().cloned().unwrap()
        + first_zagreb(&c5.complement())
            .value
            .as_exact()
            .cloned()
            .unwrap();
    assert_eq!(both, int(40));
    let r = check_identities(&corpus(CorpusSpec::all(1, 5)), LIMIT).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.skipped.keys().any(|k| k.contains("δ = 0")));
}

#[test]
fn regular_corpus_has_no_witnesses() {
    // only regular connected graphs at n = 3: the triangle
    let spec = CorpusSpec {
        n_min: 3,
        n_max: 3,
        connected_only: true,
        dedup_isomorphic: true,
        min_degree_positive: true,
    };
    let ids = [BoundId::CorZte2, BoundId::CorZ2te1, BoundId::CorZ2te2];
    let r = find_incomparability_witnesses(&corpus(spec), &ids, false, LIMIT).unwrap();
    // the path P3 is in the corpus too; the three pair bounds all coincide on n = 3
    assert!(r.witnesses.is_empty());
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.violations.len(), 6);
}

#[test]
fn examples_witness_every_direction() {
    let ids = [BoundId::CorZte2, BoundId::CorZ2te1];
    let r = find_incomparability_witnesses(&corpus(CorpusSpec::dedup(3, 3)), &ids, true, LIMIT)
        .unwrap();
    assert_eq!(r.status, Status::Pass);
    let g3 = parse_edge_list(zagreb_core::verify::examples::G3_EDGES).unwrap();
    assert!(r
        .witnesses
        .iter()
        .any(|w| w.graph6 == g3.to_graph6() && w.claim == "cor_z2te1 > cor_zte2"));
}

#[test]
fn reports_are_deterministic_and_serialize() {
    let c = corpus(CorpusSpec::labeled(3, 5));
    let a = run_property(PropertyId::P6AmhmChain, &c, LIMIT).unwrap();
    let b = run_property(PropertyId::P6AmhmChain, &c, LIMIT).unwrap();
    let ja = serde_json::to_string(&a).unwrap();
    assert_eq!(ja, serde_json::to_string(&b).unwrap());
    assert!(ja.contains("\"property\":\"P6_amhm_chain\""));
    assert!(a.to_text().contains("status           pass"));
}

#[test]
fn guard_refuses_large_orders() {
    assert!(run_property(
        PropertyId::P1Validity,
        &corpus(CorpusSpec::labeled(3, 9)),
        LIMIT
    )
    .is_err());
}
