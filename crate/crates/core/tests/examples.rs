macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(matroid_invariants, "matroid_invariants.rs");
example!(bipermutohedral_fan, "bipermutohedral_fan.rs");
example!(canonical_expansion, "canonical_expansion.rs");
example!(csm_cycles, "csm_cycles.rs");
example!(minkowski_weights, "minkowski_weights.rs");
example!(hodge_report, "hodge_report.rs");
example!(stellar_blowup, "stellar_blowup.rs");
example!(census_run, "census_run.rs");

#[test]
fn matroid_invariants_runs() {
    matroid_invariants::run_example().expect("example runs");
}

#[test]
fn bipermutohedral_fan_runs() {
    bipermutohedral_fan::run_example().expect("example runs");
}

#[test]
fn canonical_expansion_runs() {
    canonical_expansion::run_example().expect("example runs");
    let (sizes, distinct, bases) = canonical_expansion::expansion_summary().unwrap();
    assert_eq!(sizes, vec![1, 29, 352, 658, 383, 69, 3]);
    assert_eq!(distinct, vec![1, 29, 333, 621, 370, 68, 3]);
    assert_eq!(bases, vec!["0456", "0457", "0467"]);
}

#[test]
fn csm_cycles_runs() {
    csm_cycles::run_example().expect("example runs");
}

#[test]
fn minkowski_weights_runs() {
    minkowski_weights::run_example().expect("example runs");
}

#[test]
fn hodge_report_runs() {
    hodge_report::run_example().expect("example runs");
}

#[test]
fn stellar_blowup_runs() {
    stellar_blowup::run_example().expect("example runs");
    let (before, after, star) = stellar_blowup::blowup_betti().unwrap();
    assert_eq!((before, after, star), (vec![1, 2, 1], vec![1, 3, 1], vec![1]));
}

#[test]
fn census_run_runs() {
    census_run::run_example().expect("example runs");
    assert!(census_run::small_census().unwrap());
}
