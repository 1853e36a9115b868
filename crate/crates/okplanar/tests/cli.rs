//! End-to-end tests of the `okp` binary: exit codes, file outputs, JSON
//! reports, batch determinism.

use std::path::Path;
use std::process::{Command, Output};

fn okp(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_okp"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.display().to_string()
}

const K4_CVX: &str = "p cvx 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

#[test]
fn check_pass_and_fail_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["check", &k4, "--k", "1", "--mode", "k"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = okp(&["check", &k4, "--k", "0", "--mode", "k"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_malformed_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.cvx", "p cvx 3 1\ne 1 99\n");
    let out = okp(&["check", &bad, "--k", "1"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_json_report_is_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["check", &k4, "--k", "1", "--json"], dir.path());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["command"], "check");
    assert_eq!(v["k_value"], 1);
    assert_eq!(v["min_k_value"], 1);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn decompose_writes_validating_td() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["decompose", &k4, "--k", "1", "-o", "k4.td"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = okp(&["validate", "k4.td", &k4], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("ok:"), "{stdout}");
}

#[test]
fn decompose_min_k_failure_exits_1_with_pair() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["decompose", &k4, "--k", "0"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("not outer min-0-planar"), "{stdout}");
}

#[test]
fn decompose_auto_k_uses_measured_value() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["decompose", &k4, "--auto-k", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["bound"], 4);
}

#[test]
fn separate_reports_oracle_on_tiny_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["separate", &k4, "--k", "1", "-o", "k4.sep"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("oracle min 2"), "{stdout}");
    let out = okp(&["validate", "k4.sep", &k4], dir.path());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_fk_then_full_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = okp(&["gen", "fk", "--k", "2", "-o", "f2.cvx"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["check", "f2.cvx", "--k", "3", "--mode", "k"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["decompose", "f2.cvx", "--k", "3", "-o", "f2.td", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert!(v["width"].as_u64().unwrap() <= 7);
    assert_eq!(v["bound"], 7);
    let out = okp(&["validate", "f2.td", "f2.cvx"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["separate", "f2.cvx", "--k", "3", "-o", "f2.sep", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert!(v["order"].as_u64().unwrap() <= 6);
}

#[test]
fn gen_gk_and_oracle_tw() {
    let dir = tempfile::tempdir().unwrap();
    let out = okp(&["gen", "gk", "--k", "1", "-o", "g1.gr"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["oracle", "tw", "g1.gr"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "treewidth 2");
}

#[test]
fn oracle_bramble_gk() {
    let dir = tempfile::tempdir().unwrap();
    let out = okp(&["oracle", "bramble", "--gk", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("order 3"), "{stdout}");
}

#[test]
fn oracle_sep_matches_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(
        dir.path(),
        "c6.cvx",
        "p cvx 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n",
    );
    let out = okp(&["oracle", "sep", &c6], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "min balanced separation order 2"
    );
}

#[test]
fn batch_jobs_are_deterministic_and_ordered() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..6 {
        let out = okp(
            &[
                "gen",
                "random",
                "--n",
                "14",
                "--k",
                "2",
                "--seed",
                &seed.to_string(),
                "-o",
                &format!("r{seed}.cvx"),
            ],
            dir.path(),
        );
        assert_eq!(out.status.code(), Some(0));
    }
    let inputs: Vec<String> = (0..6).map(|s| format!("r{s}.cvx")).collect();
    let mut args1 = vec!["decompose"];
    args1.extend(inputs.iter().map(|s| s.as_str()));
    args1.extend(["--k", "2", "--json"]);
    let serial = okp(&args1, dir.path());
    let mut args4 = args1.clone();
    args4.extend(["--jobs", "4"]);
    let parallel = okp(&args4, dir.path());
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(parallel.status.code(), Some(0));
    let strip_elapsed = |raw: &[u8]| -> Vec<serde_json::Value> {
        String::from_utf8_lossy(raw)
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect()
    };
    assert_eq!(strip_elapsed(&serial.stdout), strip_elapsed(&parallel.stdout));
    // Derived outputs re-validate.
    for seed in 0..6 {
        let out = okp(
            &["validate", &format!("r{seed}.td"), &format!("r{seed}.cvx")],
            dir.path(),
        );
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn decompose_output_is_identical_across_processes() {
    let dir = tempfile::tempdir().unwrap();
    let out = okp(&["gen", "random", "--n", "30", "--k", "4", "--seed", "9", "-o", "r.cvx"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let a = okp(&["decompose", "r.cvx", "--k", "4", "-o", "a.td"], dir.path());
    let b = okp(&["decompose", "r.cvx", "--k", "4", "-o", "b.td"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let ta = std::fs::read(dir.path().join("a.td")).unwrap();
    let tb = std::fs::read(dir.path().join("b.td")).unwrap();
    assert_eq!(ta, tb);
}

#[test]
fn planarize_debug_export() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    let out = okp(&["planarize", &k4], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("pl gc 5 8 5"), "{stdout}");
    assert!(stdout.contains("pl gs 6 9 5"), "{stdout}");
    assert_eq!(stdout.matches(" aux").count(), 1);
}

#[test]
fn validate_rejects_bad_td() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.cvx", K4_CVX);
    // Width-2 decomposition cannot cover K4.
    write(dir.path(), "bad.td", "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
    let out = okp(&["validate", "bad.td", &k4], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("violation"), "{stdout}");
}

#[test]
fn gen_prism_crossing_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = okp(&["gen", "prism", "--m", "6", "--n", "3", "-o", "y63.cvx"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["check", "y63.cvx", "--k", "4", "--mode", "min-k"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = okp(&["check", "y63.cvx", "--k", "3", "--mode", "min-k", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(v["min_k_value"], 4);
}
