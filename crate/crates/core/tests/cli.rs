//! Shell-level contract of the binary: exit codes 0 affirmative /
//! 1 negative / 2 error, and the documented output lines.

use std::process::Command;

fn vbao(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vbao"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn decide_exit_codes() {
    let (code, _, _) = vbao(&["decide", "--logic", "id", "--formula", "top"]);
    assert_eq!(code, 0);
    let (code, _, _) = vbao(&["decide", "--logic", "id", "--formula", "[]<>top -> []bot"]);
    assert_eq!(code, 1);
    let (code, _, err) = vbao(&["decide", "--logic", "id", "--formula", "p0 & q"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"), "{err}");
}

#[test]
fn decide_witness_emits_conforming_json() {
    let (code, out, _) = vbao(&[
        "decide",
        "--logic",
        "ide",
        "--formula",
        "~([]<>top & ~[]bot)",
        "--witness",
    ]);
    assert_eq!(code, 1);
    let w: vbao::decision::SatWitness = serde_json::from_str(&out).expect("witness JSON");
    assert_eq!(w.witness_world, "inf+1");
}

#[test]
fn repro_lemma_target_prints_the_documented_line() {
    let (code, out, _) = vbao(&["repro", "lemma2"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("vB-axiom valid over VB: yes; Box Dia top -> Box bot valid: no"),
        "{out}"
    );
}

#[test]
fn all_repro_targets_pass() {
    for target in [
        "lemma2",
        "vinc-vb",
        "vbe-inconsistent",
        "glb-theorems",
        "tense-nonconservativity",
        "nominal-nonconservativity",
    ] {
        let start = std::time::Instant::now();
        let (code, out, err) = vbao(&["repro", target]);
        assert_eq!(code, 0, "target {target}: {out}{err}");
        assert!(!out.contains("FAIL"), "target {target}: {out}");
        assert!(
            start.elapsed().as_secs() < 10,
            "target {target} exceeded its time budget"
        );
    }
}

#[test]
fn prove_reports_rejection_line() {
    let dir = tempdir();
    let path = dir.join("script.txt");
    std::fs::write(&path, "1. top ; TAUT\n2. [][]top ; NEC(1, [])\n").unwrap();
    let (code, out, _) = vbao(&[
        "prove",
        "--calculus",
        "k",
        "--script",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("rejected at line 2"), "{out}");

    std::fs::write(&path, "1. top TAUT\n").unwrap();
    let (code, _, err) = vbao(&[
        "prove",
        "--calculus",
        "k",
        "--script",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("missing `;`"), "{err}");
}

#[test]
fn check_r_exit_codes_assert_the_failure_directly() {
    let a = r#"{"mode":"finite","support":["inf+1"]}"#;
    let top = r#"{"mode":"cofinite","support":[]}"#;
    let (code, _, _) = vbao(&["check-r", "--a", a, "--b", top]);
    assert_eq!(code, 1, "the condition fails at the witness pair");
    let zero = r#"{"mode":"finite","support":["n:0"]}"#;
    let (code, _, _) = vbao(&["check-r", "--a", zero, "--b", top]);
    assert_eq!(code, 0);
    let bad = r#"{"mode":"finite","support":["inf"]}"#;
    let (code, _, _) = vbao(&["check-r", "--a", bad, "--b", top]);
    assert_eq!(code, 2, "limit point in a support is an input error");
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("vbao-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
