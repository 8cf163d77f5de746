use serde_json::{json, Value};
use solvrep_core::lie::format_linear;
use solvrep_core::{AffineSubspace, Rational, Subspace};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{n}*")).collect()
}

pub fn span(names: &[String], s: &Subspace) -> String {
    let parts: Vec<String> = s.basis_vectors().map(|v| format_linear(names, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn subspace(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().map(vector).collect())
}

/// `point (..), direction span{..}`, the direction written in dual names.
pub fn affine(names: &[String], a: &AffineSubspace) -> String {
    format!("point {}, direction {}", tuple(a.point()), span(&dual_names(names), a.direction()))
}

pub fn affine_json(a: &AffineSubspace) -> Value {
    json!({
        "point": vector(a.point()),
        "direction": subspace(a.direction()),
        "dim": a.dim(),
    })
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAILED"
    }
}
