//! End-to-end CLI tests: golden outputs, JSON round-trips, exit codes, and
//! determinism.

use std::path::Path;
use std::process::{Command, Output};

use oddsing_cli::commands::{roundtrip_document, SweepDocument};
use oddsing_cli::render::Document;

fn oddsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddsing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = oddsing(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

#[test]
fn golden_example_1_latex() {
    let out = stdout_of(&[
        "singular", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--lambda",
        "a2,a1,-a2-1", "--format", "latex",
    ]);
    assert_eq!(out, golden("example1.tex"));
}

#[test]
fn golden_example_2_latex() {
    let out = stdout_of(&[
        "singular", "--alg", "gl", "--ranks", "3,1", "--beta", "d3-e1", "--lambda",
        "a3,a2,a1,-a3-2", "--format", "latex",
    ]);
    assert_eq!(out, golden("example2.tex"));
}

#[test]
fn golden_example_3_latex() {
    let out = stdout_of(&[
        "singular", "--alg", "gl", "--ranks", "2,2", "--beta", "d2-e2", "--lambda",
        "a2,a1,b1,-a2", "--format", "latex",
    ]);
    assert_eq!(out, golden("example3.tex"));
}

#[test]
fn golden_shapovalov_gl22_latex() {
    let out = stdout_of(&[
        "shapovalov", "--alg", "gl", "--ranks", "2,2", "--beta", "d2-e2", "--format", "latex",
    ]);
    assert_eq!(out, golden("shapovalov_gl22.tex"));
}

#[test]
fn golden_osp62_coefficient_list_json() {
    let out = stdout_of(&[
        "singular", "--alg", "osp", "--family", "even", "--ranks", "3,1", "--beta", "d1+e1",
        "--lambda", "7,3,1,0", "--format", "json",
    ]);
    assert_eq!(out, golden("osp62.json"));
    let doc: Document = roundtrip_document(out.trim()).expect("parses");
    assert_eq!(doc.result.terms.as_ref().map(Vec::len), Some(15));
}

#[test]
fn single_term_plain_output() {
    let out = stdout_of(&[
        "singular", "--alg", "gl", "--ranks", "1,1", "--beta", "d1-e1", "--lambda", "3,-3",
    ]);
    assert_eq!(out.trim(), "E(1,1bar) v+");
}

#[test]
fn json_documents_round_trip() {
    for args in [
        vec![
            "singular", "--alg", "gl", "--ranks", "2,2", "--beta", "d2-e2", "--lambda",
            "2,0,3,-2", "--format", "json",
        ],
        vec![
            "singular", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--lambda",
            "a2,a1,-a2-1", "--format", "json",
        ],
        vec![
            "verify", "--alg", "gl", "--ranks", "2,2", "--beta", "d2-e2", "--lambda",
            "2,0,3,-2", "--kac", "--format", "json",
        ],
        vec![
            "shapovalov", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--format",
            "json",
        ],
    ] {
        let text = stdout_of(&args);
        let doc: Document = roundtrip_document(&text).expect("parses");
        let again = serde_json::to_string_pretty(&doc).expect("serializes");
        assert_eq!(text.trim(), again, "round trip for {args:?}");
        let doc2: Document = roundtrip_document(&again).expect("reparses");
        assert_eq!(doc, doc2);
    }
}

#[test]
fn verify_reports_dim_and_match() {
    let out = stdout_of(&[
        "verify", "--alg", "gl", "--ranks", "2,2", "--beta", "d2-e2", "--lambda", "2,0,3,-2",
        "--kac",
    ]);
    assert!(out.contains("dim=1, match=1"), "{out}");
    assert!(out.contains("kac: descends, unique (quotient dim=1)"), "{out}");
    assert!(out.contains("kac_reduction_scalar: -10"), "{out}");
}

#[test]
fn verify_non_atypical_reports_dim_zero() {
    let out = stdout_of(&[
        "verify", "--alg", "gl", "--ranks", "1,1", "--beta", "d1-e1", "--lambda", "1,1",
    ]);
    assert!(out.contains("dim=0"), "{out}");
}

#[test]
fn verify_osp62_instance_matches_example_vector() {
    let out = stdout_of(&[
        "verify", "--alg", "osp", "--family", "even", "--ranks", "3,1", "--beta", "d1+e1",
        "--lambda", "7,3,1,0",
    ]);
    assert!(out.contains("dim=1"), "{out}");
    assert!(!out.contains("match=none"), "{out}");
}

#[test]
fn kac_check_remark_case_maps_to_zero() {
    let out = stdout_of(&[
        "kac-check", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--lambda", "1,1,-2",
    ]);
    assert!(out.contains("kac_reduction_scalar: 0"), "{out}");
    assert!(out.contains("maps to zero in K(lambda)"), "{out}");
}

#[test]
fn exit_codes_follow_the_contract() {
    // Mathematical precondition violated: 1.
    let out = oddsing(&[
        "singular", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--lambda", "4,1,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a_2 + b_1 + 2 - 1 = 5 != 0"), "{err}");

    // osp plus case outside the shipped instance: 1, citing the open problem.
    let out = oddsing(&[
        "singular", "--alg", "osp", "--ranks", "2,1", "--beta", "d1+e1", "--lambda", "0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("open problem"));

    // Malformed flags: 2.
    let out = oddsing(&[
        "singular", "--alg", "gl", "--ranks", "2,1", "--beta", "x2-e1", "--lambda", "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = oddsing(&["singular", "--alg", "gl", "--ranks", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = oddsing(&["sweep", "--alg", "gl", "--max-ranks", "0,2"]);
    assert_eq!(out.status.code(), Some(2));

    // Symbolic lambda where numeric is required: 2.
    let out = oddsing(&[
        "verify", "--alg", "gl", "--ranks", "2,1", "--beta", "d2-e1", "--lambda", "a2,a1,-a2-1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic_and_all_pass() {
    let args = [
        "sweep", "--alg", "gl", "--max-ranks", "2,2", "--samples", "2", "--seed", "7",
        "--format", "json",
    ];
    let a = stdout_of(&args);
    let b = stdout_of(&args);
    assert_eq!(a, b, "identical flags and seed give byte-identical output");
    let doc: SweepDocument = serde_json::from_str(&a).expect("parses");
    assert!(doc.sweep.all_pass);
    assert_eq!(doc.sweep.instances.len(), 2 * (1 + 2 + 2 + 4));
}

#[test]
fn osp_sweep_minus_case_passes() {
    let out = stdout_of(&[
        "sweep", "--alg", "osp", "--family", "even", "--max-ranks", "2,1", "--samples", "2",
        "--seed", "11", "--format", "json",
    ]);
    let doc: SweepDocument = serde_json::from_str(&out).expect("parses");
    assert!(doc.sweep.all_pass);
}

#[test]
fn out_flag_writes_the_document() {
    let dir = std::env::temp_dir().join("oddsing-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("doc.json");
    let _ = std::fs::remove_file(&path);
    let args = [
        "singular", "--alg", "gl", "--ranks", "1,1", "--beta", "d1-e1", "--lambda", "3,-3",
        "--format", "json", "--out",
    ];
    let mut full: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    full.push(path_str);
    let out = oddsing(&full);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let _: Document = roundtrip_document(text.trim()).expect("parses");
    std::fs::remove_file(&path).unwrap();
}
