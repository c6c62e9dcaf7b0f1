mod common;

use std::collections::HashSet;

use leapx::verify::{check_claim, find_counterexample, find_counterexample_in, registry, Restriction, Status, PROPERTIES};
use leapx::{parse_graph6, sweep, Error, Family, Graph, SweepConfig};

fn g(name: &str) -> Graph {
    Graph::named(name).unwrap()
}

#[test]
fn registry_ids_are_unique_and_well_formed() {
    let mut seen = HashSet::new();
    for c in registry() {
        assert!(seen.insert(c.id), "duplicate id {}", c.id);
        assert!((1..=3).contains(&c.arity));
    }
    for id in ["lem-2.1.i", "lem-2.3", "thm-2.5", "thm-2.18", "lem-3.2.i", "thm-3.13", "lem-4.3.ii", "cor-4.19"] {
        assert!(seen.contains(id), "missing {id}");
    }
}

#[test]
fn lemma_on_c4_is_strict() {
    let r = check_claim("lem-2.3", &[g("C4")]).unwrap();
    assert_eq!(r.status, Status::Strict);
    assert_eq!((r.lhs, r.upper), (Some(4), Some(8)));
    assert_eq!(r.instance, vec!["Cl".to_string()]);
}

#[test]
fn lemma_on_p4_is_tight() {
    let r = check_claim("lem-2.3", &[g("P4")]).unwrap();
    assert_eq!(r.status, Status::EqualityHolds);
    assert_eq!((r.lhs, r.upper), (Some(4), Some(4)));
}

#[test]
fn subdivision_bound_on_c4() {
    let r = check_claim("thm-2.5", &[g("C4")]).unwrap();
    assert_eq!(r.status, Status::BoundHolds);
    assert_eq!((r.lhs, r.lower, r.upper), (Some(64), Some(64), Some(80)));
}

#[test]
fn star_vertex_join_value() {
    let r = check_claim("thm-3.3", &[g("K1,2"), g("K2")]).unwrap();
    assert_eq!(r.status, Status::EqualityHolds);
    assert_eq!((r.lhs, r.lower, r.upper), (Some(42), Some(42), Some(42)));
}

#[test]
fn nonstar_vertex_edge_join_value() {
    let r = check_claim("thm-3.13", &[g("P4"), g("K1"), g("K1")]).unwrap();
    assert_eq!(r.status, Status::EqualityHolds);
    assert_eq!(r.lhs, Some(96));
}

#[test]
fn bad_requests_are_errors() {
    assert_eq!(check_claim("thm-9.9", &[g("K2")]), Err(Error::UnknownClaim("thm-9.9".into())));
    assert!(matches!(
        check_claim("thm-3.3", &[g("K1,2")]),
        Err(Error::ArityMismatch { expected: 2, got: 1, .. })
    ));
}

#[test]
fn inapplicable_instances_are_not_violations() {
    let cases: &[(&str, Vec<Graph>)] = &[
        ("thm-3.3", vec![g("P4"), g("K2")]),
        ("thm-3.9", vec![g("K1,3"), g("K2")]),
        ("thm-2.10", vec![g("C4")]),
        ("cor-2.6", vec![g("C5")]),
        ("lem-2.3", vec![Graph::empty(2)]),
        ("lem-2.3", vec![g("K1")]),
        ("thm-3.4", vec![g("P4"), Graph::empty(2)]),
    ];
    for (id, inst) in cases {
        let r = check_claim(id, inst).unwrap();
        assert_eq!(r.status, Status::NotApplicable, "{id}");
        assert!(r.reason.is_some());
        assert!(r.lhs.is_none());
    }
}

#[test]
fn violations_carry_evidence() {
    let r = check_claim("cor-3.5", &[parse_graph6("CL").unwrap(), g("K1")]).unwrap();
    assert_eq!(r.status, Status::Violation);
    assert_eq!((r.lhs, r.lower, r.upper), (Some(67), Some(63), Some(63)));
    let w = r.witness.unwrap();
    assert_eq!((w.actual, w.lower), (67, Some(63)));
}

#[test]
fn odd_cycle_meets_the_sandwich_but_not_the_doubling() {
    let r = check_claim("lem-2.1.i", &[g("C3")]).unwrap();
    assert_eq!(r.status, Status::BoundHolds);
    let r = check_claim("obs-2.1.bipartite", &[g("C3")]).unwrap();
    assert_eq!(r.status, Status::NotApplicable);
}

#[test]
fn structural_sweeps_are_clean() {
    let r = sweep(&SweepConfig::new(Family::AllConnected, 5).claims(["lem-2.2"])).unwrap();
    assert_eq!(r.total_violations(), 0);
    assert_eq!(r.base_graphs, 1 + 1 + 4 + 38 + 728);
    let r = sweep(&SweepConfig::new(Family::AllConnected, 6).claims(["lem-2.4"])).unwrap();
    assert_eq!(r.total_violations(), 0);
}

#[test]
fn tallies_sum_to_instances() {
    let cfg = SweepConfig::new(Family::Girth5, 8).samples(12).seed(3).claims(["thm-2.18", "lem-3.2.iii", "thm-4.4"]);
    let r = sweep(&cfg).unwrap();
    for t in &r.tallies {
        assert_eq!(t.equality_holds + t.bound_holds + t.strict + t.violation + t.not_applicable, t.instances);
    }
    assert_eq!(r.tally("thm-2.18").unwrap().instances, 12);
    assert_eq!(r.tally("lem-3.2.iii").unwrap().instances, 12 * 5);
    assert_eq!(r.tally("thm-4.4").unwrap().instances, 12 * 25);
    assert!(r.tally("thm-2.18").unwrap().note.is_some());
}

#[test]
fn sweep_errors() {
    assert!(matches!(sweep(&SweepConfig::new(Family::AllConnected, 8)), Err(Error::CapExceeded { .. })));
    assert!(matches!(
        sweep(&SweepConfig::new(Family::Trees, 5).claims(["nope"])),
        Err(Error::UnknownClaim(_))
    ));
    let mut cfg = SweepConfig::new(Family::AllConnected, 6);
    cfg.cap = 5;
    assert!(sweep(&cfg).is_err());
}

#[test]
fn triangle_refutes_the_doubling_property() {
    let c = find_counterexample(PROPERTIES[0], 3).unwrap().unwrap();
    assert_eq!((c.n, c.m), (3, 3));
    assert_eq!((c.ecc_g, c.ecc_s, c.expected), (1, 3, 2));
    let cycle = common::subdivide(3, &[(0, 1), (0, 2), (1, 2)]);
    assert_eq!(common::eccentricities(cycle.0, &cycle.1)[c.vertex], 3);

    assert_eq!(find_counterexample(PROPERTIES[0], 2).unwrap(), None);
    assert_eq!(find_counterexample_in(PROPERTIES[0], 6, Some(Restriction::Bipartite)).unwrap(), None);
    assert!(matches!(find_counterexample("other", 3), Err(Error::UnknownProperty(_))));
}
