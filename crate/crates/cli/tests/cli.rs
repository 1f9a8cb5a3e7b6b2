use std::process::{Command, Output};
use std::str::FromStr;

use serde_json::Value;
use vcg_core::linalg::FinAb;

fn vcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

const METACYCLIC: &[&str] = &[
    "compute", "--family", "zazbz", "-a", "7", "-b", "3", "-r", "2", "--ca", "2", "--cb", "1",
    "--c", "0", "-N", "7",
];

#[test]
fn compute_metacyclic_text() {
    let o = vcg(METACYCLIC);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let groups: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("H^"))
        .map(|l| l.split_once(" = ").unwrap().1.split("    ").next().unwrap())
        .collect();
    assert_eq!(
        groups,
        ["Z", "Z", "Z_3", "Z_3", "Z_3", "Z_3", "Z_21", "Z_21"]
    );
    assert!(text.contains("H^6 = Z_21    (Z_7 ⊕ Z_3 = Z_{A_3} ⊕ Z_{B_3})"));
    assert!(text.contains("period 6, class φ_a^3 + φ_b^3"));
}

#[test]
fn output_is_deterministic() {
    let a = vcg(METACYCLIC);
    let b = vcg(METACYCLIC);
    assert_eq!(a.stdout, b.stdout);
    let v = ["verify", "--only", "cup", "--samples", "5", "--json"];
    assert_eq!(vcg(&v).stdout, vcg(&v).stdout);
}

#[test]
fn json_and_text_agree() {
    let mut args = METACYCLIC.to_vec();
    let text = stdout(&vcg(&args));
    args.push("--json");
    let o = vcg(&args);
    assert_eq!(o.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["period"], 6);
    assert_eq!(json["period_class"], "φ_a^3 + φ_b^3");
    assert_eq!(json["group"]["family"], "zazbz");
    let rows = json["cohomology"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    for (row, line) in rows.iter().zip(text.lines().filter(|l| l.starts_with("H^"))) {
        let rendered = line.split_once(" = ").unwrap().1.split("    ").next().unwrap();
        let parsed = FinAb::from_str(rendered).unwrap();
        let torsion: Vec<u64> = row["torsion"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t.as_u64().unwrap())
            .collect();
        let from_json = FinAb::from_cyclic_orders(row["free_rank"].as_u64().unwrap() as usize, torsion);
        assert_eq!(parsed, from_json, "{line}");
        assert_eq!(row["group"], rendered);
    }
}

#[test]
fn quaternion_groups() {
    let o = vcg(&["compute", "--family", "q", "-i", "3", "-N", "4", "--json"]);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let groups: Vec<&str> = json["cohomology"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    assert_eq!(groups, ["Z", "0", "Z_2 ⊕ Z_2", "0", "Z_8"]);
    assert!(json["period"].is_null());
}

#[test]
fn validation_errors_exit_one() {
    let o = vcg(&["compute", "--family", "metacyclic", "-a", "6", "-b", "4", "-r", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd(a,b)=1 violated"));
    assert_eq!(vcg(&["compute", "--family", "zazbz", "-a", "7"]).status.code(), Some(1));
    assert_eq!(vcg(&["period", "--family", "q", "-i", "3"]).status.code(), Some(1));
    assert_eq!(vcg(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(vcg(&["verify", "--max-order", "100000"]).status.code(), Some(1));
    assert_eq!(vcg(&["verify", "--only", "bogus"]).status.code(), Some(1));
    assert_eq!(vcg(&["snf", "[[1,2],[3]]"]).status.code(), Some(1));
    assert_eq!(vcg(&["--help"]).status.code(), Some(0));
}

#[test]
fn period_reports_verified_range() {
    let o = vcg(&[
        "period", "--family", "zazbqz", "-a", "5", "-b", "3", "-i", "4", "--ry", "4", "-k", "3",
        "-l", "2", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["period"], 8);
    assert_eq!(json["verified"], true);
    assert_eq!(json["verified_range"], serde_json::json!([2, 18]));
}

#[test]
fn ring_lists_generators_and_products() {
    let o = vcg(&[
        "ring", "--family", "zazbz", "-a", "7", "-b", "3", "-r", "2", "--ca", "2", "-N", "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("η ⌣ φ_b^1 = ψ_b^1"));
    assert!(text.contains("φ_b^1 ⌣ φ_b^2 = φ_b^3"));
}

#[test]
fn verify_cup_count() {
    let o = vcg(&["verify", "--only", "cup", "--family", "zazbz", "--samples", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["summary"]["total"], 280);
    assert_eq!(json["summary"]["matched"], 280);
}

#[test]
fn perturbation_is_reported() {
    let o = vcg(&["verify", "--only", "fz", "--perturb"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn snf_of_small_matrix() {
    let o = vcg(&["snf", "[[2,4],[0,4]]", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["d"], serde_json::json!([[2, 0], [0, 4]]));
    assert_eq!(json["invariant_factors"], serde_json::json!([2, 4]));
    assert_eq!(json["cokernel"]["torsion"], serde_json::json!([2, 4]));
}
