use std::fs;
use std::process::{Command, Output};

fn classchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classchar"))
        .args(args)
        .env_remove("CLASSCHAR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let cases: &[(&[&str], &str)] = &[
        (
            &[
                "compute",
                "character",
                "--series",
                "C",
                "--rank",
                "1",
                "--lambda",
                "1",
            ],
            "t + 2",
        ),
        (
            &[
                "compute", "tstar", "--series", "D", "--rank", "1", "--mu", "1", "--lambda", "3",
            ],
            "9",
        ),
        (
            &[
                "compute",
                "dimension",
                "--series",
                "A",
                "--rank",
                "3",
                "--lambda",
                "1,0,0",
            ],
            "3",
        ),
        (
            &[
                "compute", "sstar", "--rank", "2", "--mu", "1", "--lambda", "2,1",
            ],
            "3",
        ),
        (
            &[
                "compute",
                "character",
                "--series",
                "A",
                "--rank",
                "2",
                "--lambda",
                "0,-1",
            ],
            "z2^-1 + z1^-1",
        ),
        (
            &["compute", "factorial-schur", "--mu", "1", "--points", "2,5"],
            "6",
        ),
        (
            &[
                "compute",
                "factorial-schur",
                "--mu",
                "1",
                "--points",
                "2,5",
                "--shift",
                "zero",
            ],
            "7",
        ),
        (
            &[
                "compute",
                "invariant",
                "--series",
                "C",
                "--rank",
                "1",
                "--mu",
                "1",
            ],
            "F[1,1]^2 + F[1,-1]*F[-1,1]",
        ),
        (
            &["compute", "branch", "--series", "A", "--lambda", "1,0"],
            "{(1): 1, (0): 1}",
        ),
    ];
    for (args, expected) in cases {
        let o = classchar(args);
        assert!(
            o.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert_eq!(stdout(&o).trim_end(), *expected, "{args:?}");
    }
}

#[test]
fn compute_json() {
    let o = classchar(&[
        "compute",
        "dimension",
        "--series",
        "B",
        "--rank",
        "1",
        "--lambda",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "dimension");
    assert_eq!(v["value"], "3");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "bogus"][..],
        &["compute", "character", "--rank", "1", "--lambda", "1"],
        &[
            "compute",
            "character",
            "--series",
            "C",
            "--rank",
            "1",
            "--lambda",
            "-1",
        ],
        &[
            "compute",
            "dimension",
            "--series",
            "A",
            "--rank",
            "1",
            "--lambda",
            "1,2",
        ],
        &[
            "compute", "tstar", "--series", "C", "--mu", "1,2", "--lambda", "1",
        ],
        &["verify", "--suite", "nope"],
        &["verify", "--format", "xml"],
        &["golden", "--dir", "/nonexistent/golden"],
    ] {
        let o = classchar(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_spec_examples() {
    for args in [
        &[
            "verify",
            "--suite",
            "binomial",
            "--series",
            "C,B,D",
            "--max-rank",
            "2",
            "--max-lambda",
            "4",
        ][..],
        &[
            "verify",
            "--suite",
            "vanishing",
            "--series",
            "A",
            "--max-rank",
            "3",
            "--max-mu",
            "4",
        ],
        &[
            "verify",
            "--suite",
            "torus",
            "--max-rank",
            "2",
            "--max-mu",
            "3",
        ],
    ] {
        let o = classchar(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let line = stdout(&o);
        assert!(
            line.starts_with("checked=") && line.trim_end().ends_with("failed=0"),
            "{line}"
        );
    }
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for (threads, format) in [("1", "json"), ("4", "json"), ("1", "csv"), ("3", "csv")] {
        let path = dir.path().join(format!("r{threads}.{format}"));
        let o = classchar(&[
            "verify",
            "--suite",
            "vanishing,coherence,prop46",
            "--max-rank",
            "1",
            "--max-lambda",
            "3",
            "--format",
            format,
            "--threads",
            threads,
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        reports.push(fs::read(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[2], reports[3]);
    let json: serde_json::Value = serde_json::from_slice(&reports[0]).unwrap();
    assert!(json
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass"));
}

#[test]
fn threads_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_classchar"))
        .args(["verify", "--suite", "torus", "--max-rank", "1"])
        .env("CLASSCHAR_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_classchar"))
        .args(["verify", "--suite", "torus", "--max-rank", "1"])
        .env("CLASSCHAR_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn golden_update_compare_and_drift() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().join("golden");
    let d = root.to_str().unwrap();
    assert!(classchar(&["golden", "--update", "--dir", d])
        .status
        .success());
    let o = classchar(&["golden", "--dir", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("files match"));

    let victim = root.join("shifted/D/n1_1.txt");
    let text = fs::read_to_string(&victim).unwrap();
    fs::write(&victim, text.replacen("(1): 1", "(1): 2", 1)).unwrap();
    let o = classchar(&["golden", "--dir", d]);
    assert_eq!(o.status.code(), Some(1));
    let listing = stdout(&o);
    assert!(listing.contains("changed shifted/D/n1_1.txt"), "{listing}");
    assert!(listing.contains("  - (1): 2\n  + (1): 1\n"), "{listing}");
}
