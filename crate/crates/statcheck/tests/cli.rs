use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn statcheck(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_statcheck"))
        .args(args)
        .env("STATCHECK_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn audit_gentile_row() {
    let tmp = tempfile::tempdir().unwrap();
    let o = statcheck(&["audit", "--family", "gentile", "--n", "4", "--q", "2"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Gentile | QM ✗ | SM ✓ | QS ✗ | gentile q=2 N=4 | NEGATIVE_C"), "{}", stdout(&o));
}

#[test]
fn audit_json_and_csv() {
    let tmp = tempfile::tempdir().unwrap();
    let o = statcheck(&["audit", "--coefficients", "1/3,-1/6,0", "--n", "3", "--output", "json"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["c"], serde_json::json!(["1/3", "-1/6", "0"]));
    assert_eq!(v[0]["qm_ok"], serde_json::json!(false));

    let o = statcheck(&["audit", "--family", "boson", "--n", "3", "--output", "csv"], tmp.path());
    let text = stdout(&o);
    assert!(text.starts_with("title,label,n,input_side"), "{text}");
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn audit_input_errors() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(statcheck(&["audit", "--family", "gentile", "--n", "4"], tmp.path()).status.code(), Some(2));
    assert_eq!(statcheck(&["audit", "--coefficients", "1,0", "--n", "3"], tmp.path()).status.code(), Some(2));
    assert_eq!(statcheck(&["frobnicate"], tmp.path()).status.code(), Some(2));
    assert_eq!(statcheck(&["--help"], tmp.path()).status.code(), Some(0));
}

#[test]
fn config_diagnostics_name_the_field() {
    let tmp = tempfile::tempdir().unwrap();
    let bad_value = tmp.path().join("a.json");
    fs::write(&bad_value, r#"{"specs": [{"label": "a", "n": 3, "side": "schur", "coefficients": ["1", "x", "0"]}]}"#).unwrap();
    let o = statcheck(&["audit", "--config", bad_value.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("specs[0].coefficients[1]"), "{}", stderr(&o));

    let unknown = tmp.path().join("b.json");
    fs::write(&unknown, "{\"specs\": [\n{\"label\": \"a\", \"n\": 3,\n \"bogus\": 1}]}").unwrap();
    let o = statcheck(&["audit", "--config", unknown.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert!(stderr(&o).contains("bogus"), "{}", stderr(&o));
}

#[test]
fn config_runs_several_specs_in_order() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("c.json");
    fs::write(
        &path,
        r#"{"output": "text", "specs": [
            {"label": "b", "family": "fermion", "params": {"n": 4}},
            {"label": "g", "family": "gentile", "params": {"n": 4, "q": 3}},
            {"label": "x", "n": 2, "side": "monomial", "coefficients": ["1", "2"]}
        ]}"#,
    )
    .unwrap();
    let o = statcheck(&["audit", "--config", path.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows: Vec<String> = stdout(&o).lines().filter(|l| !l.starts_with(' ')).map(String::from).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("Fermion"));
    assert!(rows[1].starts_with("Gentile"));
}

#[test]
fn kostka_uses_the_cache() {
    let tmp = tempfile::tempdir().unwrap();
    let first = statcheck(&["kostka", "4"], tmp.path());
    assert_eq!(first.status.code(), Some(0));
    assert!(stderr(&first).contains("computed"));
    assert!(tmp.path().join("kostka_N4.csv").exists());
    let second = statcheck(&["kostka", "4"], tmp.path());
    assert!(stderr(&second).contains("cache hit"));
    assert_eq!(stdout(&first), stdout(&second));

    fs::write(tmp.path().join("kostka_N4.csv"), "garbage").unwrap();
    let third = statcheck(&["kostka", "4"], tmp.path());
    assert!(stderr(&third).contains("recomputed"));
    assert_eq!(stdout(&first), stdout(&third));
}

#[test]
fn microstates_series_agrees() {
    let tmp = tempfile::tempdir().unwrap();
    let o = statcheck(&["microstates", "--n", "4", "--e", "10", "--columns", "paraboson:2,parafermion:3", "--series"], tmp.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("series check: direct and series counts agree"), "{text}");
    let total = text.lines().find(|l| l.starts_with("total")).unwrap();
    let cells: Vec<&str> = total.split_whitespace().collect();
    assert_eq!(&cells[cells.len() - 2..], ["30", "28"]);
}

#[test]
fn fock_descriptor_reports_json() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("gentile.json");
    fs::write(&path, r#"{"kind": "gentile-cos", "q": 2, "sites": 3, "N": 2, "hamiltonian": {"hopping": [[1, 2, 1.0], [2, 3, 1.4]]}}"#)
        .unwrap();
    let o = statcheck(&["fock", path.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["freeness"]["free"], serde_json::json!(false));
    assert_eq!(v["dimension"], serde_json::json!(6));

    let missing = statcheck(&["fock", tmp.path().join("nope.json").to_str().unwrap()], tmp.path());
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn tensor_lab_all_pass() {
    let tmp = tempfile::tempdir().unwrap();
    let o = statcheck(&["tensor-lab", "--all"], tmp.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    assert_eq!(statcheck(&["tensor-lab", "--experiment", "nope"], tmp.path()).status.code(), Some(2));
}

#[test]
fn reproduce_clean_and_tampered() {
    let tmp = tempfile::tempdir().unwrap();
    let o = statcheck(&["reproduce", "tbl-gentile"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tbl-gentile: ok"));

    let golden = tmp.path().join("golden");
    fs::create_dir(&golden).unwrap();
    let original = statcheck::golden::embedded("tbl-gentile").unwrap();
    fs::write(golden.join("tbl-gentile.txt"), original.replacen("| 9 | 1 | 6 |", "| 9 | 1 | 7 |", 1)).unwrap();
    let o = statcheck(&["reproduce", "tbl-gentile", "--golden-dir", golden.to_str().unwrap()], tmp.path());
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("MISMATCH"));
    assert!(text.contains("- total"), "{text}");
    assert!(text.contains("+ total"), "{text}");

    assert_eq!(statcheck(&["reproduce", "table-9"], tmp.path()).status.code(), Some(2));
}
