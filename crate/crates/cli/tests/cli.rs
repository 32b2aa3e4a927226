use std::process::{Command, Output};

use serde_json::Value;

fn ec(args: &[&str]) -> Output {
    ec_env(args, &[])
}

fn ec_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ec"));
    cmd.args(args).env_remove("EC_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn compute_prints_canonical_form() {
    let o = ec(&["compute", "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-1*q^1 + 1*t^1*z1^1\n");

    let o = ec(&["compute", "--n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["n"], 2);
    let ec2 = ec_core::ecpoly::ec_poly(2).unwrap().to_string();
    assert_eq!(v["ec"], ec2);
}

#[test]
fn compute_with_basis_uses_expansion_schema() {
    let o = ec(&["compute", "--n", "2", "--basis", "m", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["basis"], "monomial");
    let e = v["entries"].as_array().unwrap();
    assert!(e
        .iter()
        .any(|x| x["partition"] == serde_json::json!([2]) && x["coeff"] == "-1*t^1*r^1"));
}

#[test]
fn expand_json_schema() {
    let o = ec(&["expand", "--n", "3", "--basis", "schur", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
    for k in ["n", "basis", "entries", "verdict"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["verdict"]["coherent"], true);
    assert_eq!(v["verdict"]["parity_map"]["odd"], "nonneg");
    let top = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["partition"] == serde_json::json!([1, 1, 1]))
        .unwrap();
    assert_eq!(top["coeff"], "6*t^3 + 24*t^2*r^1 + 20*t^1*r^2");
    assert_eq!(top["sign"], "nonneg");
}

#[test]
fn expand_csv_has_header() {
    let o = ec(&["expand", "--n", "2", "--basis", "e", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("partition,coeff,sign"));
    assert!(out.contains("\n2,2*t^2 + 4*t^1*r^1,nonneg\n"), "{out}");
}

#[test]
fn verify_symmetry_table() {
    let o = ec(&["verify-symmetry", "--max-n", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains("PASS")).count(), 5);
    assert!(out.ends_with("verify-symmetry: 5 pass, 0 fail, 0 observation\n"));
}

#[test]
fn verify_integrality_passes() {
    let o = ec(&["verify-integrality", "--max-n", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["summary"]["pass"], 5);
}

#[test]
fn coherency_failure_exits_one_with_witness() {
    let o = ec(&[
        "verify-coherency",
        "--max-n",
        "2",
        "--basis",
        "elementary",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    let fail = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["status"] == "fail")
        .expect("a failing record");
    assert_eq!(fail["inputs"]["n"], 2);
    assert_eq!(fail["witness"]["partition"], serde_json::json!([2]));

    let o = ec(&["verify-coherency", "--max-n", "4", "--basis", "m,h,p"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn cross_check_json() {
    let o = ec(&[
        "cluster",
        "cross-check",
        "--c",
        "2",
        "--max-n",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for r in reports {
        assert!(r["cells"].as_array().unwrap().iter().all(|c| c["agree"] == true));
    }
    let n4 = &reports[1];
    assert_eq!(n4["n"], 4);
    assert_eq!(n4["dim_vector"], serde_json::json!([2, 1]));
    // keys in schema order, routes in route order
    let c = text.find("\"c\"").unwrap();
    let n = text.find("\"n\"").unwrap();
    let d = text.find("\"dim_vector\"").unwrap();
    let cells = text.find("\"cells\"").unwrap();
    assert!(c < n && n < d && d < cells);
    let rec = text.find("\"recurrence\"").unwrap();
    let clo = text.find("\"closed\"").unwrap();
    assert!(rec < clo);
}

#[test]
fn chi_grid_and_single_cell() {
    let o = ec(&["cluster", "chi", "--n", "4", "--c", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("e2\\e1 0 1 2\n    0 1 . .\n    1 1 2 1\n"), "{out}");

    let o = ec(&[
        "cluster",
        "chi",
        "--n",
        "6",
        "--c",
        "3",
        "--e1",
        "2",
        "--e2",
        "3",
        "--route",
        "closed,bridge",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    let routes = cells[0]["routes"].as_object().unwrap();
    assert_eq!(routes.len(), 2);
    assert_eq!(routes["closed"], routes["bridge"]);
}

#[test]
fn xvar_routes_agree() {
    let rec = ec(&["cluster", "xvar", "--n", "6", "--c", "3"]);
    let closed = ec(&["cluster", "xvar", "--n", "6", "--c", "3", "--route", "closed"]);
    assert_eq!(code(&rec), 0);
    assert_eq!(stdout(&rec), stdout(&closed));
    let o = ec(&["cluster", "xvar", "--n", "4", "--c", "2"]);
    assert_eq!(
        stdout(&o),
        "1*x1^-2*x2^-1 + 1*x2^-1 + 2*x1^-2*x2^1 + 1*x1^-2*x2^3\n"
    );
}

#[test]
fn nonnegativity_records_open_region() {
    let o = ec(&[
        "cluster",
        "nonnegativity",
        "--c",
        "3",
        "--max-n",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["observation"], 1);
}

#[test]
fn identity_sweep_is_deterministic() {
    let a = ec(&["verify-identities", "--seed", "7", "--format", "json"]);
    let b = ec(&["verify-identities", "--seed", "7", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["config"]["seed"], 7);
    let c = ec(&[
        "verify-identities",
        "--seed",
        "8",
        "--binomial-samples",
        "50",
        "--series-samples",
        "20",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&c), 0);
    assert!(stdout(&c).starts_with("id,status,inputs,witness\n"));
}

#[test]
fn reports_are_byte_stable_across_job_counts() {
    let a = ec(&[
        "cluster",
        "cross-check",
        "--c",
        "3",
        "--max-n",
        "6",
        "--format",
        "csv",
        "--jobs",
        "1",
    ]);
    let b = ec(&[
        "cluster",
        "cross-check",
        "--c",
        "3",
        "--max-n",
        "6",
        "--format",
        "csv",
        "--jobs",
        "2",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timings_are_opt_in() {
    let o = ec(&["verify-symmetry", "--max-n", "3", "--format", "json"]);
    assert!(!stdout(&o).contains("wall_ms"));
    let o = ec(&["verify-symmetry", "--max-n", "3", "--format", "json", "--timings"]);
    assert!(json(&o)["checks"][0]["wall_ms"].is_number());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--n", "9"][..],
        &["compute", "--n", "0"],
        &["compute"],
        &["compute", "--n", "2", "--basis", "q"],
        &["verify-symmetry", "--min-n", "4", "--max-n", "3"],
        &["cluster", "chi", "--n", "2", "--c", "2"],
        &["cluster", "chi", "--n", "5", "--c", "1"],
        &["cluster", "cross-check", "--c", "2,1"],
        &["cluster", "nonnegativity", "--c", "2"],
        &[
            "cluster", "xvar", "--n", "4", "--c", "2", "--b", "3", "--route", "closed",
        ],
        &["cluster", "xvar", "--n", "4", "--c", "0"],
        &["compute", "--n", "2", "--jobs", "0"],
        &["frobnicate"],
    ] {
        let o = ec(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
    let o = ec(&["compute", "--n", "9"]);
    assert!(stderr(&o).contains("--force"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&ec(&["--help"])), 0);
    assert_eq!(code(&ec(&["--version"])), 0);
    let o = ec(&["cluster", "chi", "--help"]);
    assert!(stdout(&o).contains("--route"));
}

#[test]
fn output_file_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ec3.txt");
    let o = ec(&["compute", "--n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written.trim_end(),
        ec_core::ecpoly::ec_poly(3).unwrap().to_string()
    );

    let bad = dir.path().join("missing").join("out.txt");
    let o = ec(&["compute", "--n", "1", "--output", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("missing"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("ec.conf");
    std::fs::write(&cfg, "# defaults\nformat = json\nseed = 11\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let o = ec(&[
        "verify-identities",
        "--config",
        cfg,
        "--binomial-samples",
        "5",
        "--series-samples",
        "5",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["config"]["seed"], 11);

    // flags win over the file
    let o = ec(&["compute", "--n", "1", "--config", cfg, "--format", "text"]);
    assert_eq!(stdout(&o), "-1*q^1 + 1*t^1*z1^1\n");

    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "colour = red\n").unwrap();
    let o = ec(&["compute", "--n", "1", "--config", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = ec(&[
        "compute",
        "--n",
        "1",
        "--config",
        dir.path().join("nope").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn jobs_from_environment() {
    let o = ec_env(&["compute", "--n", "3"], &[("EC_JOBS", "1")]);
    assert_eq!(code(&o), 0);
    let o = ec_env(&["compute", "--n", "3"], &[("EC_JOBS", "many")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn progress_goes_to_stderr_only() {
    let o = ec(&[
        "verify-symmetry",
        "--min-n",
        "7",
        "--max-n",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("877/877"), "{}", stderr(&o));
    json(&o);
    let o = ec(&["verify-symmetry", "--min-n", "7", "--max-n", "7", "--quiet"]);
    assert!(o.stderr.is_empty());
}

#[test]
fn in_process_run_matches_binary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sym.json");
    let argv = [
        "ec",
        "verify-symmetry",
        "--max-n",
        "4",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ];
    assert_eq!(ec_cli::run(argv), 0);
    let from_lib = std::fs::read(&path).unwrap();
    let o = ec(&["verify-symmetry", "--max-n", "4", "--format", "json"]);
    assert_eq!(from_lib, o.stdout);
    assert_eq!(ec_cli::run(["ec", "compute", "--n", "99"]), 2);
}
