use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mirror-hg"));
    c.env_remove(mirror_hg::cli::DEFAULT_ORDER_ENV);
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("spawn mirror-hg");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn periodicity_passes() {
    let (code, out, _) = run(&["verify", "--suite", "periodicity", "--n", "3", "--x-order", "12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS periodicity"), "{out}");
}

#[test]
fn table_for_n4_passes() {
    assert_eq!(run(&["verify", "--suite", "table3", "--n", "4"]).0, 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "periodicity", "--n", "0"][..],
        &["verify", "--suite", "table3", "--n", "7"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--n-range", "5..3"],
        &["compute", "nothing"],
        &["compute", "phi"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn perturbation_exits_1() {
    let (code, out, _) = run(&["verify", "--suite", "identities", "--n", "3", "--x-order", "8", "--perturb", "4"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL I-identities"), "{out}");
}

#[test]
fn phi_json_has_phi1_term() {
    let (code, out, _) = run(&["compute", "phi", "--n", "5", "--smax", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#"{"L":1,"coeff":"3/20"}"#), "{out}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    let objs = doc["objects"].as_array().unwrap();
    assert_eq!(objs.len(), 4);
    assert_eq!(objs[1]["terms"][1], serde_json::json!({"L": 5, "coeff": "-3/20"}));
}

#[test]
fn ip_first_coefficient() {
    let (code, out, _) = run(&["compute", "Ip", "--n", "3", "--x-order", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    // (3d)!/(d!)^3 at d = 1
    assert!(out.lines().any(|l| l == "Ip,0,1,6"), "{out}");
}

#[test]
fn ek_coefficients() {
    let (code, out, _) = run(&["compute", "ek", "--k", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["objects"][0]["coeffs"], serde_json::json!(["0", "-1", "1"]));
}

#[test]
fn verify_json_shape() {
    let (code, out, _) = run(&["verify", "--suite", "descent", "--n-range", "3..4", "--x-order", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(doc["version"].is_string());
    assert_eq!(doc["config"]["suite"], "descent");
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for (r, n) in reports.iter().zip([3, 4]) {
        assert_eq!(r["n"], n);
        assert_eq!(r["status"], "pass");
        assert_eq!(r["order"], 6);
        assert!(r.get("first-failure").is_none());
    }
}

#[test]
fn csv_failure_row() {
    let (code, out, _) = run(&["verify", "--suite", "periodicity", "--n", "2", "--x-order", "6", "--perturb", "3", "--format", "csv"]);
    assert_eq!(code, 1);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("suite,check,n,order,status,degree,location,expected,actual"));
    let row: Vec<&str> = lines.next().unwrap().splitn(8, ',').collect();
    assert_eq!(&row[..6], &["periodicity", "periodicity", "2", "6", "fail", "3"]);
}

#[test]
fn output_independent_of_jobs() {
    let base = ["verify", "--suite", "all", "--n-range", "3..4", "--x-order", "6", "--format", "json"];
    let one = run(&[&base[..], &["--jobs", "1"]].concat());
    let four = run(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one.0, 0, "{}", one.1);
    assert_eq!(one, four);
}

#[test]
fn all_suites_filter_by_n() {
    let (code, out, _) = run(&["verify", "--n", "2", "--x-order", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("descent"));
    assert!(out.contains("periodicity"));
}

#[test]
fn env_sets_default_order() {
    let out = bin()
        .env(mirror_hg::cli::DEFAULT_ORDER_ENV, "5")
        .args(["verify", "--suite", "periodicity", "--n", "3", "--format", "json"])
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"][0]["order"], 5);

    let out = bin()
        .env(mirror_hg::cli::DEFAULT_ORDER_ENV, "5")
        .args(["verify", "--suite", "periodicity", "--n", "3", "--x-order", "7", "--format", "json"])
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"][0]["order"], 7);

    let bad = bin()
        .env(mirror_hg::cli::DEFAULT_ORDER_ENV, "many")
        .args(["verify", "--suite", "periodicity", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("mirror-hg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ek.csv");
    let args = ["compute", "ek", "--kmax", "4", "--format", "csv"];
    let (_, stdout, _) = run(&args);
    let (code, to_file, _) = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    assert!(to_file.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["mirror-hg", "compute", "Lk", "--n", "4", "--kmax", "2"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = mirror_hg::cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), run(&args[1..]).1);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify") && out.contains("compute"));
}
