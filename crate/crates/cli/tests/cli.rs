//! End-to-end tests for the `metric-recognizer` binary: exit-code contract,
//! JSON schema, input formats, float mode, fixture generation and the
//! benchmark subfunction.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_metric-recognizer")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(binary())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not json ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

const UNIT_Q2: &str = "0 1 1 2\n1 0 2 1\n1 2 0 1\n2 1 1 0\n";
const UNIT_K3: &str = "0 1 1\n1 0 1\n1 1 0\n";

#[test]
fn accept_exits_zero_with_verdict_json() {
    let out = run_with_stdin(&["--family", "hypercube"], UNIT_Q2);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["family"], "hypercube-all-useful");
    assert_eq!(v["accepted"], true);
    assert_eq!(v["n"], 2);
    assert_eq!(v["r"], 4);
    assert_eq!(v["certificate"]["embedding"].as_array().unwrap().len(), 4);
}

#[test]
fn reject_exits_one() {
    let out = run_with_stdin(&["--family", "tree"], UNIT_Q2);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["accepted"], false);
    assert_eq!(v["rejection"]["condition"], "tree.fourpoint");
    assert_eq!(v["rejection"]["witness"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn wrong_order_exits_two() {
    let out = run_with_stdin(&["--family", "petersen"], UNIT_Q2);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("requires order 10"));
}

#[test]
fn triangle_violation_is_a_validation_error() {
    let out = run_with_stdin(&["--family", "tree"], "0 1 3\n1 0 1\n3 1 0\n");
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["condition"], "triangle");
    assert_eq!(v["error"]["witness"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["error"]["values"], serde_json::json!(["3", "1", "1"]));
}

#[test]
fn auto_mode_reports_all_families() {
    let out = run_with_stdin(&["--family", "auto"], UNIT_K3);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 4);
    assert_eq!(arr[0]["rejection"]["condition"], "order");
    assert_eq!(arr[3]["family"], "tree");
    assert_eq!(arr[3]["rejection"]["condition"], "tree.median");
}

#[test]
fn auto_mode_accepts_when_any_family_accepts() {
    let out = run_with_stdin(&["--family", "auto"], UNIT_Q2);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v[0]["accepted"], true); // hypercube
    assert_eq!(v[3]["accepted"], false); // tree
}

#[test]
fn csv_and_json_formats_parse() {
    let out = run_with_stdin(
        &["--family", "hypercube", "--format", "csv"],
        "0,1,1,2\n1,0,2,1\n1,2,0,1\n2,1,1,0\n",
    );
    assert_eq!(out.status.code(), Some(0));

    let out = run_with_stdin(
        &["--family", "hypercube", "--format", "json"],
        r#"[[0,"1","1",2],[1,0,2,1],[1,2,0,1],[2,1,1,0]]"#,
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_error_reports_position() {
    let out = run_with_stdin(&["--family", "tree"], "0 1\n1 zebra\n");
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    let message = v["error"]["message"].as_str().unwrap();
    assert!(message.contains("line 2"), "got: {message}");
    assert!(message.contains("token 2"), "got: {message}");
}

#[test]
fn float_mode_tolerates_small_violations() {
    // 2.000000001 > 1 + 1 fails exactly but passes with the default 1e-9.
    let matrix = "0 1 2.000000001\n1 0 1\n2.000000001 1 0\n";
    let exact = run_with_stdin(&["--family", "tree"], matrix);
    assert_eq!(exact.status.code(), Some(2));
    let float = run_with_stdin(&["--family", "tree", "--mode", "float"], matrix);
    assert_eq!(float.status.code(), Some(0), "{:?}", float);
    // An explicit tighter tolerance rejects again.
    let tight = run_with_stdin(
        &["--family", "tree", "--mode", "float", "--eps", "1/10000000000"],
        matrix,
    );
    assert_eq!(tight.status.code(), Some(2));
    // --eps without float mode is a usage error.
    let misuse = run_with_stdin(&["--family", "tree", "--eps", "1/2"], matrix);
    assert_eq!(misuse.status.code(), Some(2));
}

#[test]
fn human_output_prints_condition_trail() {
    let out = run_with_stdin(&["--family", "hypercube", "--output", "human"], UNIT_Q2);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[pass] cubici0.a"));
    assert!(text.contains("[pass] cubici0.b"));
    assert!(text.contains("ACCEPTED n=2 r=4"));
}

#[test]
fn exit_code_contract_over_golden_fixtures() {
    for entry in std::fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let Some(stem) = name.strip_suffix(".matrix.txt") else {
            continue;
        };
        let family = if stem.starts_with("hypercube") {
            "hypercube"
        } else if stem.starts_with("petersen") {
            "petersen"
        } else if stem.starts_with("tree") {
            "tree"
        } else {
            "q3"
        };
        let out = Command::new(binary())
            .args([path.to_str().unwrap(), "--family", family])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "fixture {stem}");
        let expected: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(fixture_dir().join(format!("{stem}.expected.json")))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(stdout_json(&out), expected, "fixture {stem}");
    }
}

#[test]
fn gen_writes_fixture_pair() {
    let dir = std::env::temp_dir().join(format!("mr-gen-test-{}", std::process::id()));
    let out = Command::new(binary())
        .args([
            "--gen",
            "petersen",
            "--seed",
            "5",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let matrix_path = dir.join("petersen-s5.matrix.txt");
    let expected_path = dir.join("petersen-s5.expected.json");
    assert!(matrix_path.exists() && expected_path.exists());

    // The generated pair must be self-consistent through the CLI.
    let out = Command::new(binary())
        .args([matrix_path.to_str().unwrap(), "--family", "petersen"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let expected: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&expected_path).unwrap()).unwrap();
    assert_eq!(stdout_json(&out), expected);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bench_reports_sizes_and_slope() {
    let out = Command::new(binary())
        .args(["--bench", "--sizes", "4", "8", "--reps", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["sizes"].as_array().unwrap().len(), 2);
    assert_eq!(v["sizes"][0]["m"], 4);
    assert_eq!(v["sizes"][0]["accepted"], true);
    assert!(v["slope"].is_number());

    let bad = Command::new(binary())
        .args(["--bench", "--sizes", "100"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sequential_thread_env_matches_parallel_verdict() {
    let run = |threads: &str| {
        let mut child = Command::new(binary())
            .args(["--family", "hypercube"])
            .env("METRIC_RECOGNIZER_THREADS", threads)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .unwrap();
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(UNIT_Q2.as_bytes())
            .unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code(), stdout_json(&out))
    };
    let (seq_code, seq_json) = run("0");
    let (par_code, par_json) = run("2");
    assert_eq!(seq_code, Some(0));
    assert_eq!(seq_code, par_code);
    assert_eq!(seq_json, par_json);
}
