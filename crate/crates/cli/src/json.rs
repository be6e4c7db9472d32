//! Canonical JSON: sorted keys (the default `serde_json` map), exact
//! integers, two-space indentation.

use amalgam_core::amalgam::{AmalgamSpec, AmalgamWord, Element, GroupRep, NormalForm};
use amalgam_core::witness::{
    Certificate, Detail, GroupDescription, HomEntry, NotSeparated, WitnessResult,
};
use amalgam_core::IntMatrix;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

pub fn int(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

pub fn element(g: &GroupRep, x: &Element) -> Value {
    match x {
        Element::Index(i) => json!({ "index": i, "label": g.label(x) }),
        Element::Vector(v) => object(vec![("vector", ints(v)), ("label", Value::from(g.label(x)))]),
    }
}

pub fn indexed(index: usize, label: &str) -> Value {
    json!({ "index": index, "label": label })
}

pub fn syllables(spec: &AmalgamSpec, names: &[String], s: &[(usize, Element)]) -> Value {
    Value::Array(
        s.iter()
            .map(|(i, x)| {
                json!({
                    "factor": i,
                    "factor_name": names[*i],
                    "element": element(spec.factor(*i), x),
                })
            })
            .collect(),
    )
}

pub fn word(spec: &AmalgamSpec, names: &[String], w: &AmalgamWord) -> Value {
    syllables(spec, names, &w.syllables)
}

pub fn normal_form(spec: &AmalgamSpec, names: &[String], nf: &NormalForm) -> Value {
    json!({
        "head": element(spec.amalgam(), &nf.head),
        "tail": syllables(spec, names, &nf.tail),
        "length": nf.length(),
        "is_identity": nf.is_identity(spec),
    })
}

pub fn description(d: &GroupDescription) -> Value {
    let mut v = json!({
        "order": d.order,
        "abelian_invariants": d.abelian_invariants,
        "derived_length": d.derived_length,
    });
    if let Some(n) = &d.name {
        v["name"] = Value::from(n.clone());
    }
    v
}

fn hom(spec: &AmalgamSpec, entries: &[HomEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|h| {
                json!({
                    "factor": h.factor,
                    "element": element(spec.factor(h.factor), &h.element),
                    "image": indexed(h.image, &h.image_label),
                })
            })
            .collect(),
    )
}

fn detail(d: &Detail) -> Value {
    match d {
        Detail::Bool(b) => Value::Bool(*b),
        Detail::Int(x) => int(x),
        Detail::Ints(xs) => ints(xs),
        Detail::Vectors(vs) => Value::Array(vs.iter().map(|v| ints(v)).collect()),
        Detail::Text(s) => Value::from(s.clone()),
        Detail::Texts(ss) => Value::from(ss.clone()),
    }
}

pub fn certificate(spec: &AmalgamSpec, c: &Certificate) -> Value {
    let checks: Vec<Value> = c
        .checks
        .iter()
        .map(|k| json!({ "name": k.name, "passed": k.passed, "evidence": k.evidence }))
        .collect();
    let details: Map<String, Value> = c.details.iter().map(|(k, v)| (k.clone(), detail(v))).collect();
    json!({
        "kind": c.kind.as_str(),
        "quotient": description(&c.quotient),
        "hom": hom(spec, &c.hom),
        "checks": checks,
        "failed_checks": c.failed_checks(),
        "claims": c.claims,
        "flags": c.flags,
        "details": details,
        "passed": c.passed(),
    })
}

pub fn witness_result(spec: &AmalgamSpec, names: &[String], r: &WitnessResult) -> Value {
    json!({
        "word": word(spec, names, &r.word),
        "engine": r.engine.as_str(),
        "target": description(&r.target),
        "hom": hom(spec, &r.hom),
        "image": indexed(r.image, &r.image_label),
        "separated": r.separated,
        "target_derived_length": r.target_derived_length,
    })
}

pub fn not_separated(spec: &AmalgamSpec, names: &[String], n: &NotSeparated) -> Value {
    let attempts: Vec<Value> = n
        .attempts
        .iter()
        .map(|a| json!({ "engine": a.engine.as_str(), "outcome": a.outcome }))
        .collect();
    let certs: Vec<Value> = n.certificates.iter().map(|c| certificate(spec, c)).collect();
    json!({
        "word": word(spec, names, &n.word),
        "attempts": attempts,
        "certificates": certs,
    })
}

/// Pretty-printed text with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_exact() {
        let x: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(render(&int(&x)), "123456789012345678901234567890\n");
    }

    #[test]
    fn keys_are_sorted() {
        let v = object(vec![("zeta", Value::from(1)), ("alpha", Value::from(2))]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"alpha":2,"zeta":1}"#);
    }
}
