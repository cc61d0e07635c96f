//! End-to-end tests of the `hyperseries` binary: output text, JSON
//! round-trips, determinism, and the exit-code contract (0 success/pass,
//! 1 verification failure, 2 usage error, 3 size limit).

use std::process::{Command, Output};

use hyperseries::closedforms::{
    hilbert_cycle_closed, poincare_cycle_graph, SeriesResult, Variant,
};
use hyperseries::oracle::{LedgerEntry, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperseries"))
        .args(args)
        .output()
        .expect("the binary launches")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("the binary exits normally")
}

#[test]
fn series_text_output_for_the_triangle() {
    let out = run(&["series", "--family", "cycle-graph", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with(
        "family: cycle-graph n=3 (d=2, alpha=1)\nHilbert series: (1 + 2t) / (1 - t)\n"
    ));
    assert!(text.contains("Poincare series: (1 + t) / (1 - 2t)"));
    assert!(text.contains("provenance: cycle-graph Poincare recursion"));
}

#[test]
fn series_json_round_trips_through_the_library_types() {
    let out = run(&["series", "--family", "cycle-graph", "--n", "3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["family"], "cycle-graph");
    assert_eq!(value["n"], 3);
    assert_eq!(value["variant"], "corrected");

    let hilbert: SeriesResult = serde_json::from_value(value["hilbert"].clone()).unwrap();
    assert_eq!(hilbert, hilbert_cycle_closed(3, Variant::Corrected).unwrap());
    let poincare: SeriesResult = serde_json::from_value(value["poincare"].clone()).unwrap();
    assert_eq!(poincare, poincare_cycle_graph(3, Variant::Corrected).unwrap());
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["series", "--family", "wheel", "--n", "5", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = run(&["series", "--family", "wheel"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn oversized_overlap_is_a_usage_error() {
    let out = run(&[
        "series", "--family", "hyperline", "--n", "3", "--d", "3", "--alpha", "2",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported parameters"));
}

#[test]
fn oversized_instance_is_a_size_limit_error() {
    let out = run(&["betti", "--family", "wheel", "--n", "25", "--method", "hochster"]);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size limit"));
}

#[test]
fn betti_both_agrees_on_the_four_wheel() {
    let out = run(&["betti", "--family", "wheel", "--n", "4", "--method", "both"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("beta(3, 4) = 9"));
    assert!(text.ends_with("tables agree\n"));
}

#[test]
fn printed_variant_disagreement_exits_one() {
    let out = run(&[
        "betti", "--family", "wheel", "--n", "5", "--method", "both", "--variant", "printed",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("tables DISAGREE"));
}

#[test]
fn expand_prints_coefficients_to_the_requested_order() {
    let out = run(&["expand", "--family", "cycle-graph", "--n", "3", "--order", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "family: cycle-graph n=3 (d=2, alpha=1)\n\
         hilbert: 1 3 3 3 3 3\n\
         poincare: 1 3 6 12 24 48\n"
    );
}

#[test]
fn expand_rejects_the_non_integral_printed_variant() {
    // The printed cycle Poincare denominator has constant term 2, so its
    // expansion is not an integer power series.
    let out = run(&[
        "expand", "--family", "cycle-graph", "--n", "3", "--order", "4", "--variant", "printed",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-integer"));
}

#[test]
fn verify_suites_pass_and_serialize() {
    let out = run(&["verify", "--suite", "koszul", "--n-max", "8", "--order", "12"]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["verify", "--suite", "sign", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].passed());
    assert_eq!(reports[0].checks.len(), 4);
}

#[test]
fn ledger_lists_every_adjudicated_discrepancy() {
    let out = run(&["ledger", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let entries: Vec<LedgerEntry> = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(entries.len(), 7);
    for id in [
        "cycle-hilbert-recursion-sign",
        "cycle-poincare-denominator",
        "cycle-hilbert-c5-exponent",
        "hyperstar-vertex-count",
        "hyperstar-denominator-sum-bounds",
        "wheel-strand-binomial",
        "wheel-top-cells-n-mod-3",
    ] {
        assert!(entries.iter().any(|e| e.id == id), "missing ledger entry {id}");
    }
}

#[test]
fn hyperstar_series_reports_no_closed_hilbert_form() {
    let out = run(&[
        "series", "--family", "hyperstar", "--n", "3", "--d", "3", "--alpha", "1",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("Hilbert series: no closed form"));
    assert!(text.contains("Poincare series: "));
}

#[test]
fn compose_method_is_wheel_only() {
    let out = run(&[
        "betti", "--family", "hyperstar", "--n", "3", "--method", "compose",
    ]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["betti", "--family", "wheel", "--n", "4", "--method", "compose"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("beta(3, 4) = 9"));
}
