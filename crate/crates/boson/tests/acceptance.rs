//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every comparison is exact equality of canonical rational functions.

use std::time::Instant;

use boson::cartan::{a2, b2};
use boson::verify::*;

fn report(number: u32, name: &str, start: Instant, r: &CheckResult) {
    let status = if r.ok() { "PASS" } else { "FAIL" };
    println!(
        "criterion {:02} [{}] {} ({} checks, {} ms)",
        number,
        status,
        name,
        r.checks,
        start.elapsed().as_millis()
    );
    assert!(
        r.ok(),
        "criterion {} failed:\n{}",
        number,
        r.failures.join("\n")
    );
}

#[test]
fn criterion_01_worked_example_regression() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_worked_example(&cartan));
    }
    report(1, "worked-example regression", start, &r);
}

#[test]
fn criterion_02_dual_oracle_equivalence() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_dual_oracle(&cartan, &[-1, 0, 1, 2], 6));
    }
    report(2, "dual-oracle equivalence", start, &r);
}

#[test]
fn criterion_03_triple_oracle_single_level() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_triple_oracle(&cartan, 5));
    }
    report(3, "triple-oracle at single level", start, &r);
}

#[test]
fn criterion_04_form_axioms() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_form_axioms(&cartan, DEFAULT_SEED, 500));
        r.merge(check_graphical_axioms(&cartan, DEFAULT_SEED ^ 7, 500));
    }
    report(4, "form axioms", start, &r);
}

#[test]
fn criterion_05_serre_kernel_vanishing() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_serre_kernel(&cartan, 2, 6, &[0, 1]));
        r.merge(check_serre_rows_lusztig(&cartan));
    }
    report(5, "serre-kernel vanishing", start, &r);
}

#[test]
fn criterion_06_straightening_confluence() {
    let start = Instant::now();
    let r = check_confluence(&a2(), &[0, 1, 2], 6, 3, 1000, 8, DEFAULT_SEED);
    report(6, "straightening confluence", start, &r);
}

#[test]
fn criterion_07_decategorification_bridge() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_decat_bridge(&cartan, 4));
    }
    report(7, "decategorification bridge", start, &r);
}

#[test]
fn criterion_08_categorified_boson_relation() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_boson_identity(&cartan, 4, 2));
    }
    report(8, "categorified boson relation", start, &r);
}

#[test]
fn criterion_09_degree_well_definedness() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        let corpus = degree_corpus(&cartan, &[-1, 0, 1, 2], DEFAULT_SEED, 200);
        r.merge(check_degree_well_defined(&cartan, &corpus));
    }
    report(9, "degree well-definedness", start, &r);
}

#[test]
fn criterion_10_sz_basis_properties() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    r.merge(check_sz_product_formula(3));
    r.merge(check_sz_bar_formula(3));
    // positivity probe is a finite-window heuristic
    r.merge(check_sz_positivity(2, (-10, 10)));
    report(10, "sl2 divided-power basis properties", start, &r);
}

#[test]
fn criterion_11_gram_quotient_dimensions() {
    let start = Instant::now();
    let r = check_gram_quotients(3);
    report(11, "gram quotient dimensions", start, &r);
}

#[test]
fn criterion_12_klr_relation_suite() {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_klr_relations(&cartan, 3));
        r.merge(check_klr_associativity(&cartan, DEFAULT_SEED, 200));
    }
    // distant-crossing commutation needs four strands
    r.merge(check_klr_relations_length4(&a2()));
    report(12, "klr relation suite", start, &r);
}
