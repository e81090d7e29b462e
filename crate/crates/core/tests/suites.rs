use multloop_core::report::Report;
use multloop_core::verify::{run_target, RunConfig};

fn run(target: &str) -> Vec<Report> {
    run_target(target, &RunConfig::default()).unwrap()
}

fn unmatched(r: &[Report]) -> Vec<String> {
    r.iter().filter(|r| !r.matched()).map(|r| format!("{}:{}", r.check, r.case)).collect()
}

#[test]
fn every_catalog_algebra_satisfies_the_axioms() {
    let r = run("algebra:all");
    assert!(r.iter().all(|r| r.max_residual == 0.0 || r.check == "invariant"));
    assert!(unmatched(&r).is_empty(), "{:?}", unmatched(&r));
    let invariants: Vec<&str> = r.iter().filter(|r| r.check == "invariant").map(|r| r.case.as_str()).collect();
    assert_eq!(invariants, ["l2", "F4", "mult2"]);
}

#[test]
fn every_group_law_is_a_group_with_the_linked_algebra() {
    let r = run("group:all");
    assert_eq!(r.len(), 32);
    assert!(unmatched(&r).is_empty(), "{:?}", unmatched(&r));
    assert!(r.iter().filter(|r| r.check == "group_axioms").all(|r| r.max_residual < 1e-9));
}

#[test]
fn normalizer_catalog_matches_its_polarity() {
    let r = run("niemenmaa:all");
    assert!(unmatched(&r).is_empty(), "{:?}", unmatched(&r));
    let cor = r.iter().find(|r| r.case == "cor4").unwrap();
    assert!(!cor.passed);
    assert_eq!(cor.witness("normalizer_dim").unwrap().values, vec![3.0]);
    assert_eq!(cor.witness("inn_plus_center_dim").unwrap().values, vec![2.0]);
}

#[test]
fn forced_identities_are_contradictory() {
    for name in ["OBS-NONCONST", "OBS-TRIG", "OBS-EXP-M", "OBS-VEW", "OBS-FUNCEQ-LINEAR", "OBS-4DIM-G1"] {
        let r = run(&format!("obstruction:{name}"));
        assert!(!r.is_empty());
        assert!(r.iter().all(|r| r.passed), "{name}");
    }
}

#[test]
fn transversal_and_normalizer_parts_hold_for_every_case() {
    for i in 1..=8 {
        let r = run(&format!("kepka:case{i}"));
        for rep in r.iter().filter(|r| r.check != "generation") {
            assert!(rep.passed, "case {i}: {}", rep.to_json());
        }
    }
}

#[test]
fn functional_lemma_reports() {
    let r = run("lemma:functional");
    assert!(unmatched(&r).is_empty(), "{:?}", unmatched(&r));
    let w = r.iter().find(|r| r.check == "collision_witness").unwrap();
    assert_eq!(w.witness("collision").unwrap().values, vec![1.0, 0.0, 0.0, 0.0, -1.0]);
}

#[test]
fn section_loop_of_case_one() {
    let r = run("loop:section:case1");
    let checks: Vec<&str> = r.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(checks, ["coset_invariance", "axioms", "associativity", "class_two"]);
    assert!(r.iter().all(|r| r.matched()), "{:?}", unmatched(&r));
}

#[test]
fn same_seed_same_reports() {
    let cfg = RunConfig { seed: 5, ..RunConfig::default() };
    assert_eq!(run_target("kepka:case3", &cfg).unwrap(), run_target("kepka:case3", &cfg).unwrap());
}
