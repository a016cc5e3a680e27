use std::process::{Command, Output};

use serde_json::Value;

fn multispin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multispin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn non_lightlike_momentum_is_bad_input() {
    let o = multispin(&["verify", "--k", "0,0,1", "--k0", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("momentum is not lightlike"));
}

#[test]
fn zero_frequency_has_its_own_message() {
    let o = multispin(&["solve", "--k", "0,0,0", "--k0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("zero frequency"));
}

#[test]
fn zero_kappa_is_bad_input() {
    let o = multispin(&["verify", "--kappa", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("kappa must be nonzero"));
}

#[test]
fn floats_are_rejected() {
    let o = multispin(&["states", "--k", "0.6,0.8,0", "--k0", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_lists_every_check() {
    let o = multispin(&["verify", "--sweep", "2", "--format", "json"]);
    let v = json(&o);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["meta", "checks", "solutions"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "alpha_algebra" && c["status"] == "pass"));
    let failing = checks.iter().filter(|c| c["status"] == "fail").count();
    // Exit status reflects whether every emitted check passed.
    assert_eq!(o.status.code(), Some(if failing == 0 { 0 } else { 1 }));
    assert_eq!(v["meta"]["momenta"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_byte_deterministic() {
    let a = multispin(&["verify", "--sweep", "1", "--kappa", "2", "--format", "json"]);
    let b = multispin(&["verify", "--sweep", "1", "--kappa", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_emits_normalized_helicity_dyads() {
    let o = multispin(&["solve", "--k", "3,4,0", "--k0", "5", "--format", "json"]);
    let v = json(&o);
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 3);
    for s in sols.iter().filter(|s| s["label"] != "spin-0") {
        assert_eq!(s["psi_bar_psi"]["re"], "1");
        assert_eq!(s["psi_bar_psi"]["im"], "0");
    }
}

#[test]
fn solve_accepts_negative_frequency() {
    let o = multispin(&["solve", "--k", "0,0,1", "--k0", "-1", "--format", "text"]);
    assert_ne!(o.status.code(), Some(2), "{}", stderr(&o));
    let text = stdout(&o);
    for name in ["Pi_plus ", "Pi_minus "] {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap();
        assert_eq!(line.split_whitespace().nth(1), Some("1"), "{line}");
    }
}

#[test]
fn emitted_projectors_round_trip() {
    let o = multispin(&[
        "solve", "--k", "1,2,2", "--k0", "3", "--kappa", "1/3", "--format", "json",
    ]);
    let v = json(&o);
    for m in v["matrices"].as_array().unwrap() {
        if ["gamma", "Pi_plus", "Pi_minus"].contains(&m["name"].as_str().unwrap()) {
            let p: multispin::RepMatrix = serde_json::from_value(m["matrix"].clone()).unwrap();
            assert_eq!(&p * &p, p, "{}", m["name"]);
        }
    }
}

#[test]
fn states_marks_maxwell_limit() {
    let o = multispin(&["states", "--k", "0,0,1", "--k0", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("maxwell-limit: pass").count(), 2);
    assert!(text.contains("maxwell-limit: fail (scalar present)"));
}

#[test]
fn states_json_has_field_layout() {
    let o = multispin(&["states", "--k", "0,0,1", "--k0", "1", "--format", "json"]);
    let v = json(&o);
    let plus = v["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["label"] == "helicity+1")
        .unwrap();
    assert_eq!(plus["psi0"]["re"], "0");
    assert_eq!(plus["psi"].as_array().unwrap().len(), 4);
    assert_eq!(plus["E"].as_array().unwrap().len(), 3);
    for key in ["12", "13", "14", "23", "24", "34"] {
        assert!(plus["F"].get(key).is_some());
    }
}

#[test]
fn dump_by_positional_and_flag() {
    let a = multispin(&["dump", "eta"]);
    let b = multispin(&["dump", "--dump", "eta"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = multispin(&[
        "solve", "--k", "3,4,0", "--k0", "5", "--dump", "gamma", "--format", "json",
    ]);
    assert_eq!(json(&c)["matrix"]["name"], "gamma");
    let d = multispin(&["dump", "nope"]);
    assert_eq!(d.status.code(), Some(2));
    let e = multispin(&["dump", "gamma"]);
    assert_eq!(e.status.code(), Some(2));
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = multispin(&[
        "dump",
        "P",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["matrix"]["value"]["dim"], 11);
}
