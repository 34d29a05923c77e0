use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbbw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn roots_of_the_23_system() {
    let v = json(&["roots", "-m", "2", "-n", "1", "-w", "1,3,2"]);
    assert_eq!(v["rho"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(v["kempf_bounds"][0]["index"], 1);
    assert_eq!(v["kempf_bounds"][0]["k"], 2);
    assert_eq!(v["standard"], false);
}

#[test]
fn roots_all_odd_simple() {
    let v = json(&["roots", "-m", "2", "-n", "2", "-w", "3,1,4,2"]);
    let simple = v["simple"].as_array().unwrap();
    assert_eq!(simple.len(), 3);
    assert!(simple.iter().all(|s| s["odd"] == true));
    assert_eq!(v["standard_even_part"], true);
}

#[test]
fn roots_gl11() {
    let v = json(&["roots", "-m", "1", "-n", "1", "-w", "1,2"]);
    assert_eq!(v["positive_odd"], serde_json::json!(["e1-e2"]));
    assert_eq!(v["positive_even"], serde_json::json!([]));
}

#[test]
fn chi_outputs() {
    let v = json(&["chi", "-m", "1", "-n", "1", "--lambda", "1,0"]);
    assert_eq!(v["character"].as_array().unwrap().len(), 2);
    assert_eq!(v["dimension"], "2");
    assert_eq!(v["verified"], true);

    let z = json(&[
        "chi", "-m", "2", "-n", "1", "-w", "1,3,2", "--lambda", "1,1,0",
    ]);
    assert_eq!(z["character"], serde_json::json!([]));

    let neg = json(&["chi", "-m", "1", "-n", "1", "--lambda", "-3,1"]);
    assert_eq!(neg["lambda"], serde_json::json!(["-3", "1"]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["chi", "-m", "1", "-n", "1", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["chi", "-m", "2", "-n", "1", "-w", "1,2", "--lambda", "1,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verdict", "-m", "1", "-n", "1", "--lambda", "1,0", "--char", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["roots", "-m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--only", "42"]).status.code(), Some(2));
}

#[test]
fn verdict_concentrated_in_degree_zero() {
    let v = json(&[
        "verdict", "-m", "2", "-n", "1", "-w", "1,3,2", "--lambda", "1,0,5", "--char", "0",
    ]);
    assert_eq!(v["verdict"]["tag"], "ConcentratedAt");
    assert_eq!(v["verdict"]["degree"], 0);
    assert_eq!(v["verdict"]["provenance"], "bbw-penkov");
    assert_eq!(v["golden"]["h0"]["tag"], "Nonzero");
    assert_eq!(v["golden"]["h1"]["tag"], "Zero");
}

#[test]
fn verdict_atypical_reports_golden_and_generic() {
    let v = json(&[
        "verdict", "-m", "2", "-n", "1", "-w", "1,3,2", "--lambda", "1,1,-1",
    ]);
    assert_eq!(v["verdict"]["tag"], "Undetermined");
    assert_eq!(v["golden"]["h0"]["tag"], "OneDim");
    assert_eq!(v["golden"]["h1"]["tag"], "OneDim");
    assert_eq!(v["contradictions"], serde_json::json!([]));
}

#[test]
fn verdict_132_both_zero() {
    let v = json(&[
        "verdict", "-m", "2", "-n", "1", "-w", "3,1,2", "--lambda", "0,1,4",
    ]);
    assert_eq!(v["golden"]["h0"]["tag"], "Zero");
    assert_eq!(v["golden"]["h1"]["tag"], "Zero");
}

#[test]
fn verdict_json_schema() {
    let v = json(&[
        "verdict", "-m", "2", "-n", "1", "-w", "1,3,2", "--lambda", "-1,0,4",
    ]);
    let verdict = v["verdict"].as_object().unwrap();
    for key in verdict.keys() {
        assert!([
            "tag",
            "degree",
            "provenance",
            "reason",
            "description",
            "character"
        ]
        .contains(&key.as_str()));
    }
    assert_eq!(verdict["degree"], 1);
    let d = verdict["description"].as_object().unwrap();
    assert!(
        d.contains_key("w_prime") && d.contains_key("lambda_prime") && d.contains_key("parity")
    );
    let labels = [
        "bbw",
        "bbw-penkov",
        "kempf-bounds",
        "kempf-typical",
        "gl21-w23",
        "gl21-w132",
    ];
    for g in v["generic"].as_array().unwrap() {
        assert!(labels.contains(&g["provenance"].as_str().unwrap()));
    }
}

#[test]
fn scan_counts_rows_in_order() {
    let out = run(&[
        "scan", "-m", "2", "-n", "1", "-w", "1,3,2", "-w", "3,1,2", "--box", "0:4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "m",
            "n",
            "w",
            "char",
            "lambda",
            "chamber",
            "typical",
            "tag",
            "degree",
            "provenance",
            "reason",
            "conjecture",
            "golden",
            "check"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 250);
    assert_eq!(&rows[0][4], "0,0,0");
    assert_eq!(&rows[1][4], "0,0,1");
    assert_eq!(&rows[125][2], "3,1,2");
    let again = run(&[
        "scan", "-m", "2", "-n", "1", "-w", "1,3,2", "-w", "3,1,2", "--box", "0:4",
    ]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn scan_row_for_kempf_weight() {
    let out = run(&[
        "scan", "-m", "2", "-n", "1", "-w", "1,3,2", "--box", "2:2", "--box", "0:0", "--box", "0:0",
    ]);
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains("VanishAbovePositive"), "{row}");
}

#[test]
fn scan_verify_reports_no_failures() {
    let out = run(&[
        "scan", "-m", "2", "-n", "1", "-w", "1,3,2", "--box", "-2:2", "--char", "0", "--char", "3",
        "--verify",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("failures=0"));
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",ok")));
}

#[test]
fn scan_refuses_oversized_boxes() {
    let out = run(&["scan", "-m", "3", "-n", "3", "--box", "-50:50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1061520150601"));
}

#[test]
fn scan_json_output() {
    let v = json(&[
        "scan", "-m", "1", "-n", "1", "--box", "0:1", "--out", "json",
    ]);
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[0]["tag"], "ConcentratedAt");
}

#[test]
fn selftest_single_criterion() {
    let out = run(&["selftest", "--only", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("criterion 1 golden root data: PASS"));
}
