//! Text and JSON rendering.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};
use vcg_core::closed_form::CohomologyGroup;
use vcg_core::group::{CheckedSpec, QuaternionTwist};
use vcg_core::linalg::{FinAb, IntMatrix};
use vcg_core::verify::{Check, Verdict, VerifyReport};

use crate::args::FamilyArg;

pub fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

/// An integer as a JSON number when it fits, else as a decimal string.
pub fn int_json(x: &BigInt) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_json).collect()))
            .collect(),
    )
}

pub fn finab_json(g: &FinAb) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(int_json).collect::<Vec<_>>(),
    })
}

pub fn group_json(family: FamilyArg, spec: &CheckedSpec) -> Value {
    let mut value = serde_json::to_value(spec.spec).expect("specs serialize");
    let map = value.as_object_mut().expect("specs serialize to objects");
    map.insert("family".into(), family.name().into());
    map.insert(
        "theta".into(),
        spec.theta
            .map(|t| serde_json::to_value(t).expect("twists serialize"))
            .unwrap_or(Value::Null),
    );
    value
}

pub fn cohomology_json(h: &CohomologyGroup) -> Value {
    let mut value = finab_json(&h.group);
    let map = value.as_object_mut().expect("object");
    map.insert("n".into(), h.n.into());
    map.insert("group".into(), h.group.to_string().into());
    map.insert(
        "summands".into(),
        serde_json::to_value(&h.summands).expect("summands serialize"),
    );
    value
}

pub fn group_line(family: FamilyArg, spec: &CheckedSpec) -> String {
    let base = spec.spec.to_string();
    let Some(t) = spec.theta else {
        return base;
    };
    let twist = match t.twist {
        QuaternionTwist::Standard { k, ell } => format!("k={k} ℓ={ell}"),
        QuaternionTwist::General { x_image, y_image } => format!(
            "x↦x^{}y^{} y↦x^{}y^{}",
            x_image.0, x_image.1, y_image.0, y_image.1
        ),
    };
    let q = matches!(family, FamilyArg::Zazbqz);
    let mut parts = vec![format!("c={}", t.c), format!("c_a={}", t.c_a), format!("c_b={}", t.c_b)];
    if q {
        parts.push(format!("c_x={}", t.c_x));
        parts.push(format!("c_y={}", t.c_y));
        parts.push(twist);
    }
    format!("({base}) ⋊ Z  [θ: {}]", parts.join(" "))
}

/// `H^n = <canonical>` followed by the named decomposition when it adds
/// information.
pub fn cohomology_line(h: &CohomologyGroup) -> String {
    let d = h.decomposition();
    if d.is_empty() {
        format!("H^{} = {}", h.n, h.group)
    } else {
        format!("H^{} = {}    ({d})", h.n, h.group)
    }
}

fn check_row(c: &Check) -> String {
    match c.verdict {
        Verdict::Skipped => format!(
            "  {:<8} {:<9} {} | {} | {}",
            c.kind.name(),
            c.verdict.to_string(),
            c.spec,
            c.item,
            c.note.as_deref().unwrap_or("")
        ),
        _ => format!(
            "  {:<8} {:<9} {} | {} | formula {} | oracle {}",
            c.kind.name(),
            c.verdict.to_string(),
            c.spec,
            c.item,
            c.formula,
            c.oracle
        ),
    }
}

pub fn print_report(report: &VerifyReport, all: bool) {
    let mut per_kind: BTreeMap<_, [usize; 3]> = BTreeMap::new();
    for c in &report.checks {
        let slot = match c.verdict {
            Verdict::Match => 0,
            Verdict::Mismatch => 1,
            Verdict::Skipped => 2,
        };
        per_kind.entry(c.kind).or_default()[slot] += 1;
    }
    println!("{:<8} {:>7} {:>10} {:>7}", "kind", "match", "mismatch", "skipped");
    for (kind, [m, x, s]) in &per_kind {
        println!("{:<8} {m:>7} {x:>10} {s:>7}", kind.name());
    }
    if all {
        println!("checks:");
        report.checks.iter().for_each(|c| println!("{}", check_row(c)));
    } else {
        if report.mismatches().next().is_some() {
            println!("mismatches:");
            report.mismatches().for_each(|c| println!("{}", check_row(c)));
        }
        if report.skipped().next().is_some() {
            println!("skipped:");
            report.skipped().for_each(|c| println!("{}", check_row(c)));
        }
    }
    let s = report.summary;
    println!(
        "{} checks: {} match, {} mismatch, {} skipped",
        s.total, s.matched, s.mismatched, s.skipped
    );
}
