//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`) and enforcing its runtime
//! budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use monoreg::random::all_tournaments;
use monoreg::{
    integral_closure, parse_ideal_text, regularity, Field, WeightedOrientedGraph,
};
use monoreg_cli::golden::{golden_cycle, worked_exponent, worked_graph};
use monoreg_cli::suites::{run_suite, Suite, SuiteParams, VerificationRun};

const SEED: u64 = 1729;

fn params(n: usize, w_max: u32, count: usize) -> SuiteParams {
    SuiteParams {
        n,
        w_max,
        count,
        seed: SEED,
        field: Field::Rationals,
        exhaustive: false,
    }
}

fn assert_clean(criterion: &str, run: &VerificationRun) {
    assert!(
        run.passed,
        "{criterion} FAIL: {} failures, first: {:?}",
        run.failures.len(),
        run.failures.first()
    );
}

fn assert_budget(criterion: &str, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_1_golden_strictness_pair() {
    let start = Instant::now();
    let ideal = golden_cycle().edge_ideal();
    let reg = regularity(&ideal, Field::Rationals).unwrap().reg_ideal;
    let closure = integral_closure(&ideal).unwrap();
    let reg_closure = regularity(&closure, Field::Rationals).unwrap().reg_ideal;
    assert_eq!(reg, 12, "criterion 1 FAIL: reg of the cycle ideal");
    assert_eq!(reg_closure, 7, "criterion 1 FAIL: reg of its closure");
    let elapsed = start.elapsed();
    assert_budget("criterion 1", elapsed, Duration::from_secs(10));
    println!("criterion 1 PASS: reg(I) = 12 and reg(closure) = 7 in {elapsed:?}");
}

#[test]
fn criterion_2_worked_radical_identity_both_routes() {
    let start = Instant::now();
    let g = worked_graph();
    let ideal = g.edge_ideal();
    let a = worked_exponent();

    let extra = parse_ideal_text("x2, x3*x5, x3*x6, x4*x5, x4*x6, x5*x6", Some(10)).unwrap();
    let expected = ideal.radical().sum(&extra).unwrap();

    let closed_form = g.closure_radical_formula(&a).unwrap();
    assert_eq!(
        closed_form, expected,
        "criterion 2 FAIL: closed form differs from the stated antichain"
    );

    let direct = integral_closure(&ideal)
        .unwrap()
        .colon(&a)
        .unwrap()
        .radical();
    assert_eq!(
        direct, expected,
        "criterion 2 FAIL: direct pipeline differs from the stated antichain"
    );

    let elapsed = start.elapsed();
    assert_budget("criterion 2", elapsed, Duration::from_secs(60));
    println!("criterion 2 PASS: both routes reach the stated antichain in {elapsed:?}");
}

#[test]
fn criterion_3_main_inequality_sweep() {
    let start = Instant::now();
    let run = run_suite(Suite::MainInequality, &params(6, 4, 100));
    assert_eq!(run.instances, 100);
    assert_clean("criterion 3", &run);
    let elapsed = start.elapsed();
    assert_budget("criterion 3", elapsed, Duration::from_secs(600));
    println!(
        "criterion 3 PASS: closure regularity never exceeded ideal regularity on {} graphs in {elapsed:?}",
        run.instances
    );
}

#[test]
fn criterion_4_complete_graph_formulas() {
    let start = Instant::now();

    let mut exhaustive_k3 = params(3, 4, 0);
    exhaustive_k3.exhaustive = true;
    let k3 = run_suite(Suite::CompleteFormulas, &exhaustive_k3);
    assert_clean("criterion 4 (K3 exhaustive)", &k3);
    assert_eq!(
        k3.instances,
        all_tournaments(3).len() * 4,
        "criterion 4: every K3 orientation must be exercised"
    );

    let k4 = run_suite(Suite::CompleteFormulas, &params(4, 4, 50));
    assert_clean("criterion 4 (K4)", &k4);
    let k5 = run_suite(Suite::CompleteFormulas, &params(5, 4, 50));
    assert_clean("criterion 4 (K5)", &k5);

    let elapsed = start.elapsed();
    println!(
        "criterion 4 PASS: closed formulas matched the engine on {} complete-graph instances in {elapsed:?}",
        k3.instances + k4.instances + k5.instances
    );
}

#[test]
fn criterion_5_radical_closed_forms() {
    let start = Instant::now();
    // count = 100 colon-identity instances plus count/2 = 50 closure ones.
    let run = run_suite(Suite::RadicalFormulas, &params(6, 4, 100));
    assert_eq!(run.instances, 150);
    assert_clean("criterion 5", &run);
    let elapsed = start.elapsed();
    println!(
        "criterion 5 PASS: closed forms equal direct computation on {} instances in {elapsed:?}",
        run.instances
    );
}

#[test]
fn criterion_6_engine_oracle_crosscheck() {
    let start = Instant::now();
    let run = run_suite(Suite::OracleCrosscheck, &params(4, 4, 200));
    assert_eq!(run.instances, 200);
    assert_clean("criterion 6", &run);
    let elapsed = start.elapsed();
    println!(
        "criterion 6 PASS: degree-complex and Betti-number regularity agree over Q and GF(2) on {} ideals in {elapsed:?}",
        run.instances
    );
}

#[test]
fn criterion_7_integral_closure_soundness() {
    let start = Instant::now();
    let run = run_suite(Suite::ClosureIdempotence, &params(5, 5, 100));
    assert_eq!(run.instances, 100);
    assert_clean("criterion 7", &run);
    let elapsed = start.elapsed();
    println!(
        "criterion 7 PASS: containment, idempotence, squarefree fixed points, and exact certificates on {} ideals in {elapsed:?}",
        run.instances
    );
}

#[test]
fn criterion_8_acyclicity_suite() {
    let start = Instant::now();
    let run = run_suite(Suite::Acyclicity, &params(6, 4, 100));
    assert_eq!(run.instances, 100);
    assert_clean("criterion 8", &run);
    let elapsed = start.elapsed();
    println!(
        "criterion 8 PASS: every capacity-family complex was acyclic on {} instances in {elapsed:?}",
        run.instances
    );
}

#[test]
fn criterion_9_admissible_vertices() {
    let start = Instant::now();
    let mut checked = 0;
    for n in [4usize, 5] {
        for t in all_tournaments(n) {
            t.find_admissible_vertex().unwrap_or_else(|e| {
                panic!("criterion 9 FAIL: tournament {t:?} has no admissible vertex: {e}")
            });
            checked += 1;
        }
    }
    let triangle =
        WeightedOrientedGraph::new(3, vec![(1, 2), (2, 3), (3, 1)], BTreeMap::new()).unwrap();
    assert!(
        triangle.find_admissible_vertex().is_err(),
        "criterion 9 FAIL: the cyclic triangle must be a domain error"
    );
    let elapsed = start.elapsed();
    println!(
        "criterion 9 PASS: admissible vertex found on all {checked} tournaments; cyclic triangle rejected ({elapsed:?})"
    );
}
