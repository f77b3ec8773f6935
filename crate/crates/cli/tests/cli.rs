//! Black-box tests of the `trapset` binary: round trips, output formats,
//! and exit codes.

use std::process::{Command, Output};

fn trapset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trapset")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_then_classify_round_trips() {
    let dir = std::env::temp_dir().join(format!("trapset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("witness.txt");
    let out = trapset(&[
        "construct", "--class", "lets", "--dv", "3", "--g", "10", "--b", "0",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("(10,0) LETS dv=3 girth>=10"));
    let out = trapset(&["classify", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("a=10 b=0 LETS girth=10"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_reports_non_elementary_and_leafy_classes() {
    let dir = std::env::temp_dir().join(format!("trapset-cli-cls-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.txt");
    for (args, needle) in [
        (["nets", "3", "6", "0"], "a=8 b=0 NETS"),
        (["etsl", "3", "10", "2"], "a=12 b=2 ETSL"),
        (["lets", "3", "6", "1"], "a=5 b=1 LETS"),
    ] {
        let out = trapset(&[
            "construct", "--class", args[0], "--dv", args[1], "--g", args[2], "--b", args[3],
            "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{args:?}: {out:?}");
        let out = trapset(&["classify", path.to_str().unwrap()]);
        assert!(stdout(&out).contains(needle), "{args:?}: {}", stdout(&out));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_csv_matches_published_row() {
    let out = trapset(&["table", "--class", "lets", "--dv", "3", "--b", "0", "--g", "6:16", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("g,lower,improved_lower,upper,exact\n"));
    for line in ["6,4,--,4,4", "8,6,--,6,6", "10,10,--,10,10", "12,14,--,14,14", "14,22,--,24,24", "16,30,--,30,30"] {
        assert!(text.contains(line), "missing {line} in:\n{text}");
    }
}

#[test]
fn table_verify_reports_each_row() {
    let out = trapset(&["table", "--class", "nets", "--dv", "3", "--b", "0", "--g", "6:10", "--verify"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("g=6: PASS"));
    assert!(text.contains("g=8: PASS"));
}

#[test]
fn exit_codes_distinguish_failure_modes() {
    // unknown flag: usage error
    assert_eq!(trapset(&["cage", "--bogus"]).status.code(), Some(1));
    // bad girth range: usage error
    assert_eq!(
        trapset(&["table", "--class", "lets", "--dv", "3", "--g", "7:9"]).status.code(),
        Some(1)
    );
    // cage known only by order: data unavailable
    assert_eq!(trapset(&["cage", "--r", "4", "--g", "7"]).status.code(), Some(2));
    // parity-inadmissible class: precondition, reported as usage
    assert_eq!(
        trapset(&["construct", "--class", "lets", "--dv", "4", "--g", "6", "--b", "1"])
            .status
            .code(),
        Some(1)
    );
    // help is a success
    assert_eq!(trapset(&["--help"]).status.code(), Some(0));
}

#[test]
fn validate_passes_registry_graphs_and_rejects_wrong_claims() {
    let out = trapset(&["validate", "--r", "3", "--g", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("girth exactly 6 (got 6): PASS"));
    // the 3-regular girth-6 graph is not 4-regular
    let dir = std::env::temp_dir().join(format!("trapset-cli-val-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.txt");
    let cage = trapset(&["cage", "--r", "3", "--g", "6"]);
    std::fs::write(&path, &cage.stdout).unwrap();
    let out = trapset(&["validate", "--r", "4", "--g", "6", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_output_is_well_formed() {
    let out = trapset(&["cage", "--r", "3", "--g", "5", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph"));
    assert!(text.trim_end().ends_with('}'));
}
