//! Runs selected verification suites at sizes beyond the default sweep:
//! the modular-flat intersection lemma needs the projective plane, and the
//! guts counterexample needs the full eight-element Vámos matroid.

use matroids::verify::run_suite;

fn assert_suite(id: &str, max_size: usize) {
    let r = run_suite(id, max_size, 0).unwrap();
    assert!(
        r.passed(),
        "{id} at {max_size}: {} failures, first {:?}",
        r.failures,
        r.first_counterexample
    );
    assert!(r.instances > 0, "{id} ran no instances");
}

#[test]
fn modular_flat_intersections_include_pg_2_3() {
    assert_suite("modularfiniteinter", 13);
}

#[test]
fn vamos_guts_at_full_size() {
    assert_suite("vamos-guts", 8);
}

#[test]
fn guts_iteration_on_five_elements() {
    assert_suite("lambdadualeq", 5);
    assert_suite("lambdaminproj", 5);
}

#[test]
fn extension_census_on_five_elements() {
    assert_suite("modcutextension", 5);
    assert_suite("modcutinter", 5);
    assert_suite("modcutcon", 5);
    assert_suite("modcutlambda", 5);
}

#[test]
fn quotient_suites_on_five_elements() {
    assert_suite("quotientisproject", 5);
    assert_suite("tightquot", 5);
    assert_suite("disccontract", 5);
    assert_suite("commonbasis", 5);
}
