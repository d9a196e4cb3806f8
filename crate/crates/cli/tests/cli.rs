//! End-to-end runs of the `qmds` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmds"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_grs_then_verify_and_derive() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("grs.cert");
    let o = qmds(&[
        "construct-grs",
        "--q",
        "3",
        "--k",
        "3",
        "--out",
        path(&cert),
    ]);
    assert!(o.status.success(), "{o:?}");
    let text = fs::read_to_string(&cert).unwrap();
    assert!(text.contains("kind: grs\n"));
    assert!(text.contains("quantum: [[10,4,4]]_3\n"));

    let o = qmds(&["verify", "--cert", path(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok:"));

    let o = qmds(&["derive-params", "--cert", path(&cert), "--r", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("derived: [[8,6,2]]_3"));
    let o = qmds(&["derive-params", "--cert", path(&cert), "--r", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn construct_grs_rejects_bad_parameters() {
    let o = qmds(&["construct-grs", "--q", "4", "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k != q-1"));
}

#[test]
fn non_monic_h_names_top_coefficient() {
    // e^1 times the default h for q=3, k=1
    let text = stdout(&qmds(&["construct-grs", "--q", "3", "--k", "1"]));
    let h = text
        .lines()
        .find_map(|l| l.strip_prefix("h: "))
        .unwrap()
        .to_string();
    let scaled: Vec<String> = h
        .split(',')
        .map(|c| match c.strip_prefix("e^") {
            Some(j) => format!("e^{}", (j.parse::<u32>().unwrap() + 1) % 8),
            None => c.to_string(),
        })
        .collect();
    let o = qmds(&[
        "construct-grs",
        "--q",
        "3",
        "--k",
        "1",
        "--h",
        &scaled.join(","),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("top_coefficient"));
}

#[test]
fn tampered_and_truncated_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("k5q3.cert");
    let o = qmds(&["check-example", "--name", "k5q3", "--out", path(&cert)]);
    assert!(o.status.success(), "{o:?}");
    let text = fs::read_to_string(&cert).unwrap();

    let tampered = dir.path().join("tampered.cert");
    fs::write(
        &tampered,
        text.replace("x: e^2,e^3,e^3,", "x: e^2,e^3,e^5,"),
    )
    .unwrap();
    let o = qmds(&["verify", "--cert", path(&tampered)]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(
        out.starts_with("divergence at h_") || out.starts_with("divergence at minors_"),
        "{out}"
    );

    let truncated = dir.path().join("truncated.cert");
    fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(
        qmds(&["verify", "--cert", path(&truncated)]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_circulant_pass_and_fail() {
    let o = qmds(&[
        "verify-circulant",
        "--q",
        "3",
        "--k",
        "5",
        "--x",
        "e^2,e^3,e^3,e^2,e^0",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("verdict: pass"));
    assert!(out.contains("quantum: [[10,0,6]]_3"));

    let o = qmds(&[
        "verify-circulant",
        "--q",
        "3",
        "--k",
        "5",
        "--x",
        "e^0,e^0,e^0,e^0,e^0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: fail (H_1(x) != 0)"));
}

#[test]
fn search_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmds(&[
        "search",
        "--q",
        "3",
        "--k",
        "5",
        "--workers",
        "2",
        "--out-dir",
        path(dir.path()),
    ]);
    assert!(o.status.success(), "{o:?}");
    let out = stdout(&o);
    assert!(out.contains("solutions: 4\n"));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 4);
    for f in files {
        let p = f.unwrap().path();
        assert_eq!(qmds(&["verify", "--cert", path(&p)]).status.code(), Some(0));
    }
}

#[test]
fn search_respects_budget_and_constraints() {
    let o = qmds(&["search", "--q", "4", "--k", "7", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qmds(&[
        "search", "--q", "4", "--k", "5", "--equal", "2=5", "--equal", "3=4",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("constraint: x_2 = x_5"));
}

#[test]
fn nogrs_scan_reports_empty() {
    let o = qmds(&["nogrs-scan", "--q", "3", "--k", "4", "--n", "8,9,10"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("result: empty\n"));
    let o = qmds(&["nogrs-scan", "--q", "3", "--k", "3", "--n", "10"]);
    assert!(stdout(&o).ends_with("result: found\n"));
}

#[test]
fn check_all_examples_and_field_override() {
    let o = qmds(&["check-example", "--name", "all"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("format-version: 1").count(), 7);
    assert_eq!(
        qmds(&["check-example", "--name", "nope"]).status.code(),
        Some(1)
    );

    let o = qmds(&[
        "construct-grs",
        "--q",
        "3",
        "--k",
        "3",
        "--field",
        "p=3 e=2 mod=2,2",
    ]);
    assert!(o.status.success());
    let o = qmds(&[
        "construct-grs",
        "--q",
        "5",
        "--k",
        "3",
        "--field",
        "p=3 e=2 mod=2,2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
