use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use zagreb_core::verify::examples::{G1_EDGES, G2_EDGES, G3_EDGES};

fn zagreb(args: &[&str], stdin: &str) -> Output {
    zagreb_env(args, stdin, &[])
}

fn zagreb_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zagreb"));
    cmd.args(args)
        .env_remove("ZB_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn compute_g1_reports_m1() {
    let o = zagreb(&["compute", "--alpha", "2", "--out", "json"], G1_EDGES);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["m1"]["value"]["exact"], "198/1");
    assert_eq!(v["general"][0]["alpha"], 2.0);
    assert_eq!(v["general"][0]["value"]["exact"], "198/1");
    assert_eq!(v["n"], 8);
}

#[test]
fn compute_k4_from_graph6() {
    let o = zagreb(&["compute", "--format", "graph6", "--out", "json"], "C~\n");
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["m1"]["value"]["exact"], "36/1");
    assert_eq!(v["m2"]["value"]["exact"], "54/1");
    let lambda = v["spectral_radius"]["value"]["approx"].as_f64().unwrap();
    assert!((lambda - 3.0).abs() < 1e-9);
}

#[test]
fn compute_reads_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.txt");
    std::fs::write(&path, G3_EDGES).unwrap();
    let o = zagreb(
        &["compute", "--input", path.to_str().unwrap(), "--out", "csv"],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "m1,,138/1,138"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&zagreb(&["compute"], "1 2\n2 2\n")), 2);
    assert_eq!(
        code(&zagreb(&["compute", "--format", "graph6"], "C~~\n")),
        2
    );
    assert_eq!(
        code(&zagreb(&["compute", "--input", "/no/such/file"], "")),
        2
    );
    assert_eq!(code(&zagreb(&["compute", "--alpha", "x"], "1 2\n")), 2);
    assert_eq!(code(&zagreb(&["bounds", "--bounds", "nope"], "1 2\n")), 2);
    assert_eq!(code(&zagreb(&["frobnicate"], "")), 2);
}

#[test]
fn isolated_vertex_with_negative_alpha_exits_3() {
    let o = zagreb(&["compute", "--alpha", "-1"], "n 3\n1 2\n");
    assert_eq!(code(&o), 3);
    let o = zagreb(&["bounds", "--alpha", "-1"], "n 3\n1 2\n");
    assert_eq!(code(&o), 3);
}

#[test]
fn bounds_g3_named_columns() {
    let o = zagreb(
        &[
            "bounds",
            "--bounds",
            "cor_zte2,cor_z2te1,cor_z2te2",
            "--out",
            "json",
        ],
        G3_EDGES,
    );
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["id"], "cor_zte2");
    assert_eq!(rows[0]["value"]["exact"], "799/6");
    assert_eq!(rows[0]["value"]["decimal"], "133.166667");
    assert_eq!(rows[0]["actual"]["exact"], "138/1");
}

#[test]
fn bounds_regular_all_pairs_are_tight() {
    let o = zagreb(
        &["bounds", "--bounds", "all-pairs", "--out", "json"],
        "1 2\n2 3\n3 4\n4 1\n",
    );
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["slack"], 0.0, "{r}");
        assert_eq!(r["tight"], true);
        assert_eq!(r["equality_predicted"], true);
    }
}

#[test]
fn bounds_best_on_g2() {
    let o = zagreb(&["bounds", "--bounds", "best", "--out", "json"], G2_EDGES);
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let best = rows[0]["value"]["approx"].as_f64().unwrap();
    assert!(best >= 121.1667 - 5e-5, "{best}");
    assert!(rows[0]["label"].as_str().unwrap().starts_with("thm"));
}

#[test]
fn bounds_skip_rows_outside_hypothesis() {
    let o = zagreb(&["bounds", "--out", "json"], "1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let thm3 = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "thm3")
        .unwrap();
    assert!(thm3["skipped"].as_str().unwrap().contains("n >= 5"));
}

#[test]
fn verify_small_corpus_passes() {
    let o = zagreb(&["verify", "--nmin", "3", "--nmax", "5", "P1,P3,P4"], "");
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_equality_finding_exits_1() {
    let o = zagreb(
        &[
            "verify", "--nmin", "3", "--nmax", "6", "--dedup", "P2", "--out", "json",
        ],
        "",
    );
    assert_eq!(code(&o), 1);
    let reports = json(&o);
    assert_eq!(reports[0]["status"], "finding");
    for v in reports[0]["violations"].as_array().unwrap() {
        assert_eq!(v["bound"], "mm1_one");
        assert_eq!(v["triage"], "claim_falsified");
    }
}

#[test]
fn verify_capacity_guard() {
    assert_eq!(code(&zagreb(&["verify", "--nmax", "12"], "")), 4);
    assert_eq!(code(&zagreb(&["enumerate", "--nmax", "12"], "")), 4);
    let o = zagreb_env(&["enumerate", "--nmax", "10"], "", &[("ZB_MAX_N", "20")]);
    assert_eq!(code(&o), 4);
    let o = zagreb_env(&["verify", "P7"], "", &[("ZB_MAX_N", "many")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_rejects_unknown_property() {
    assert_eq!(code(&zagreb(&["verify", "P9"], "")), 2);
}

#[test]
fn reproduce_table_is_explained() {
    let o = zagreb(&["reproduce-table1", "--out", "json"], "");
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let rows = v["table"]["rows"].as_array().unwrap();
    let m1: Vec<&str> = rows
        .iter()
        .map(|r| r["computed_m1"].as_str().unwrap())
        .collect();
    assert_eq!(m1, ["198/1", "124/1", "138/1"]);
    for r in rows {
        let printed = r["printed"][0].as_f64().unwrap();
        let computed = r["computed_decimal"][0].as_f64().unwrap();
        assert!((printed - computed).abs() <= 5e-5);
    }
    assert!(v["notes"][0].as_str().unwrap().contains("transposed"));
}

#[test]
fn enumerate_counts() {
    let lines = |args: &[&str]| stdout(&zagreb(args, "")).lines().count();
    assert_eq!(
        lines(&[
            "enumerate",
            "--nmin",
            "4",
            "--nmax",
            "4",
            "--connected",
            "--dedup"
        ]),
        6
    );
    assert_eq!(lines(&["enumerate", "--nmin", "1", "--nmax", "1"]), 1);
    assert_eq!(
        lines(&["enumerate", "--nmin", "3", "--nmax", "3", "--connected"]),
        4
    );
    assert_eq!(
        lines(&["enumerate", "--nmin", "4", "--nmax", "4", "--dedup"]),
        11
    );
}

#[test]
fn enumerate_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n3.g6");
    let o = zagreb(
        &[
            "enumerate",
            "--nmin",
            "3",
            "--nmax",
            "3",
            "--output",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 8);
    let bad = dir.path().join("missing").join("out.g6");
    let o = zagreb(&["enumerate", "--output", bad.to_str().unwrap()], "");
    assert_eq!(code(&o), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["bounds", "--out", "json"][..],
        &["bounds", "--out", "csv"][..],
        &["compute", "--alpha", "0.5", "--out", "json"][..],
    ] {
        let a = zagreb(args, G1_EDGES);
        let b = zagreb(args, G1_EDGES);
        assert_eq!(a.stdout, b.stdout);
    }
    let run = || {
        zagreb(
            &["verify", "--nmin", "3", "--nmax", "5", "P5", "--out", "csv"],
            "",
        )
        .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn csv_and_json_agree() {
    let j = json(&zagreb(
        &["bounds", "--bounds", "all-pairs", "--out", "json"],
        G2_EDGES,
    ));
    let csv = stdout(&zagreb(
        &["bounds", "--bounds", "all-pairs", "--out", "csv"],
        G2_EDGES,
    ));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let rows = j.as_array().unwrap();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        assert_eq!(&rec[0], row["label"].as_str().unwrap());
        assert_eq!(&rec[3], row["value"]["exact"].as_str().unwrap());
        assert_eq!(
            rec[4].parse::<f64>().unwrap(),
            row["value"]["approx"].as_f64().unwrap()
        );
        assert_eq!(
            rec[6].parse::<f64>().unwrap(),
            row["slack"].as_f64().unwrap()
        );
    }
}

#[test]
fn output_flag_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = zagreb(
        &[
            "reproduce-table1",
            "--out",
            "json",
            "--output",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["property"], "P7_table1");
}
