//! Release gate: one test per acceptance criterion. Every comparison is
//! exact (rational equality, tolerance zero); each test prints a single
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).

use std::process::Command;
use std::time::{Duration, Instant};

use gkp_cli::render::TriangleDoc;
use gkp_cli::report::SuiteReport;
use gkp_cli::suites::{
    altsum_suite, b1_suite, bijection_suite, cross_suite, eulerian_suite, marked_suite,
    transition_suite, SuiteOptions,
};
use gkp_core::rational::rat;
use gkp_core::stirling::eulerian_triangle;

fn opts(trials: usize, n_max: usize) -> SuiteOptions {
    SuiteOptions {
        seed: 42,
        trials,
        n_max: Some(n_max),
        inject_sign_bug: false,
    }
}

fn assert_id(rep: &SuiteReport, id: &str, expect_total: Option<u64>) {
    let counts = rep.counts(id);
    assert_eq!(counts.failed, 0, "{id}: {:?}", rep.failures.first());
    if let Some(total) = expect_total {
        assert_eq!(counts.total(), total, "{id} ran an unexpected number of checks");
    } else {
        assert!(counts.total() > 0, "{id} never ran");
    }
}

fn finish(rep: &SuiteReport, line: &str, started: Instant, budget_secs: u64) {
    assert!(
        rep.all_pass(),
        "suite {} failed; first failure: {:?}",
        rep.suite,
        rep.failures.first()
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(budget_secs),
        "{line} exceeded its {budget_secs}s budget ({elapsed:.1?})"
    );
    println!("{line}: PASS [{elapsed:.1?}]");
}

#[test]
fn criterion_1_cross_method_equality() {
    let started = Instant::now();
    let rep = cross_suite(&opts(200, 7));
    // 200 specs x 36 cells for each of the three comparisons
    assert_id(&rep, "cross/recurrence-vs-paths", Some(7200));
    assert_id(&rep, "cross/recurrence-vs-path-sum", Some(7200));
    assert_id(&rep, "cross/recurrence-vs-general-form", Some(7200));
    finish(
        &rep,
        "acceptance 1: cross-method equality (recurrence = paths = path sum = general form; 200 specs, n <= 7)",
        started,
        120,
    );
}

#[test]
fn criterion_2_b1_ladder() {
    let started = Instant::now();
    let rep = b1_suite(&opts(100, 7));
    assert_id(&rep, "b1/recurrence-vs-east-sum", Some(3600));
    // a1 != 0, a2 != 0 sub-grid: present and clean, with exact division
    assert_id(&rep, "b1/recurrence-vs-alt-sum", None);
    assert_id(&rep, "b1/alt-sum-exact-division", None);
    finish(
        &rep,
        "acceptance 2: b=1 ladder (East sum everywhere; alternating sum with exact division on a1,a2 != 0)",
        started,
        60,
    );
}

#[test]
fn criterion_3_bk_ladder() {
    let started = Instant::now();
    let rep = altsum_suite(&opts(100, 7));
    assert_id(&rep, "altsum/recurrence-vs-scaled-alt-sum", Some(3600));
    finish(
        &rep,
        "acceptance 3: b=b0+b1k ladder (rising-factorial prefactor; 100 specs)",
        started,
        60,
    );
}

#[test]
fn criterion_4_a2zero_ladder() {
    let started = Instant::now();
    let rep = cross_suite(&opts(100, 7));
    assert_id(&rep, "cross/recurrence-vs-a2zero-form", Some(3600));
    assert_id(&rep, "cross/a2zero-vs-general-form", Some(3600));
    finish(
        &rep,
        "acceptance 4: a2=0 ladder (composition closed form; 100 specs)",
        started,
        60,
    );
}

#[test]
fn criterion_5_bijections() {
    let started = Instant::now();
    let rep = bijection_suite(&opts(50, 10));
    // sum over n <= 10 of 2^n paths / compositions
    assert_id(&rep, "bijection/path-rises-roundtrip", Some(2047));
    assert_id(&rep, "bijection/composition-roundtrip", Some(2047));
    // one count check per (n,k) cell
    assert_id(&rep, "bijection/path-count", Some(66));
    assert_id(&rep, "bijection/composition-count", Some(66));
    // 50 (a0,a1) pairs across every increasing sequence
    assert_id(&rep, "bijection/weight-transport", Some(50 * 2047));
    finish(
        &rep,
        "acceptance 5: bijections (roundtrips, cardinalities, weight transport; n <= 10, 50 pairs)",
        started,
        60,
    );
}

#[test]
fn criterion_6_transition_matrix() {
    let started = Instant::now();
    let rep = transition_suite(&opts(0, 8));
    // 125 coefficient triples x degrees 0..=8
    assert_id(&rep, "transition/basis-expansion", Some(1125));
    finish(
        &rep,
        "acceptance 6: transition matrix (full coefficient expansion, a in {-2..2}^3, n <= 8)",
        started,
        120,
    );
}

#[test]
fn criterion_7_r_eulerian() {
    let started = Instant::now();
    let rep = eulerian_suite(&opts(0, 10));
    assert_id(&rep, "eulerian/descent-histogram", None);
    assert_id(&rep, "eulerian/final-descent-shift", None);
    assert_id(&rep, "eulerian/row-count", None);
    assert_id(&rep, "eulerian/count-product", None);
    // r <= 4, rows 1..=10: 4 * 55 cells
    assert_id(&rep, "eulerian/two-routes", Some(220));
    // r <= 3, n <= 6, 1 <= k < n: 3 * 15 cells
    assert_id(&rep, "eulerian/explicit-vs-recurrence", Some(45));
    assert!(
        rep.notes.iter().any(|n| n.contains("k = 0") && n.contains("18/18")),
        "k = 0 column status missing from notes: {:?}",
        rep.notes
    );

    // pinned rows against the brute-force oracle values
    let b1 = eulerian_triangle(1, 4);
    assert_eq!(
        b1.row(4).unwrap(),
        &[rat(1), rat(11), rat(11), rat(1)][..]
    );
    let b2 = eulerian_triangle(2, 4);
    assert_eq!(b2.row(3).unwrap(), &[rat(1), rat(8), rat(6)][..]);
    assert_eq!(b2.row_sum(4).unwrap(), rat(105));

    finish(
        &rep,
        "acceptance 7: r-Eulerian (descent oracles, two routes, explicit sum, k=0 status noted)",
        started,
        120,
    );
}

#[test]
fn criterion_8_marked() {
    let started = Instant::now();
    let rep = marked_suite(&opts(0, 8));
    // r <= 4, interior cells 1 <= k < n <= 8: 4 * 28
    assert_id(&rep, "marked/recurrence-residual", Some(112));
    // r <= 3, n <= 6, 0 <= k <= n: 3 * 27
    assert_id(&rep, "marked/explicit-vs-product", Some(81));
    assert!(
        rep.notes.iter().any(|n| n.contains("boundary columns")),
        "boundary status missing from notes: {:?}",
        rep.notes
    );
    finish(
        &rep,
        "acceptance 8: marked r-Eulerian (residual zero on interior cells; explicit vs product)",
        started,
        60,
    );
}

#[test]
fn criterion_9_cli_contract() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_gkp");

    // a correct build passes the full suite
    let ok = Command::new(bin)
        .args(["verify", "--suite", "all", "--seed", "42"])
        .output()
        .expect("spawn gkp");
    assert_eq!(
        ok.status.code(),
        Some(0),
        "verify --suite all --seed 42 should exit 0\n{}",
        String::from_utf8_lossy(&ok.stdout)
    );

    // a single flipped sign in a closed form must flip the exit code
    let bad = Command::new(bin)
        .args(["verify", "--suite", "all", "--seed", "42", "--inject-sign-bug"])
        .output()
        .expect("spawn gkp");
    assert_eq!(
        bad.status.code(),
        Some(1),
        "the sign mutation must be caught"
    );
    let text = String::from_utf8_lossy(&bad.stdout);
    assert!(text.contains("FAIL cross/recurrence-vs-general-form"));

    // JSON round-trip is byte-identical, fractions included
    let table = Command::new(bin)
        .args([
            "table", "--a", "1/2,-2,3", "--b", "0,1,-1/3", "--nmax", "6", "--format", "json",
        ])
        .output()
        .expect("spawn gkp");
    assert_eq!(table.status.code(), Some(0));
    let emitted = String::from_utf8(table.stdout).unwrap();
    let doc: TriangleDoc = serde_json::from_str(emitted.trim_end()).unwrap();
    let mut reserialized = serde_json::to_string(&doc).unwrap();
    reserialized.push('\n');
    assert_eq!(emitted, reserialized, "JSON round-trip must be byte-identical");

    // identical seeds give identical reports
    let run = |seed: &str| {
        Command::new(bin)
            .args([
                "verify", "--suite", "cross", "--trials", "20", "--seed", seed, "--format", "json",
            ])
            .output()
            .expect("spawn gkp")
            .stdout
    };
    assert_eq!(run("7"), run("7"), "same seed must reproduce the report");
    assert_ne!(run("7"), run("8"), "different seeds must differ");

    let elapsed = started.elapsed();
    println!("acceptance 9: CLI contract (exit codes, mutation caught, JSON round-trip, seeded determinism): PASS [{elapsed:.1?}]");
}
