//! Engine residuals against the brute-force oracle, compared as rendered
//! strings, on the fixtures and on 100 seeded random inputs per identity.

use malcev_testkit::diff;

fn run(kind: &str, seed: u64) {
    diff::on_fixtures(kind).unwrap();
    diff::random(kind, seed, 100).unwrap();
}

#[test]
fn anticommutativity() {
    run("anticommutativity", 1);
}

#[test]
fn malcev() {
    run("malcev", 2);
}

#[test]
fn sagle() {
    run("sagle", 3);
}

#[test]
fn jacobi() {
    run("jacobi", 4);
}

#[test]
fn pre_malcev() {
    run("pre-malcev", 5);
}

#[test]
fn representation() {
    run("representation", 6);
}

#[test]
fn bimodule() {
    run("bimodule", 7);
}

#[test]
fn o_operator() {
    run("o-operator", 8);
}

#[test]
fn pm_o_operator() {
    run("pm-o-operator", 9);
}

#[test]
fn cybe() {
    run("cybe", 10);
}

#[test]
fn pm_cybe() {
    run("pm-cybe", 11);
}

#[test]
fn invariance() {
    run("invariance", 12);
}

#[test]
fn cyclic() {
    run("cyclic", 13);
}

#[test]
fn every_kind_is_covered() {
    assert_eq!(diff::KINDS.len(), 13);
}
