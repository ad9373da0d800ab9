//! The JSON reports emitted by `certify` must match the schema shipped in
//! `schema/report.schema.json`.  The checker below covers the subset of JSON
//! Schema the file actually uses (type / const / enum / required / properties
//! / additionalProperties / items / oneOf / $ref into #/definitions), so a
//! drift in either the structs or the schema file fails this suite.

use kinkspec::conditions::{MollifiedDiagnostics, Provenance};
use kinkspec::{certify, to_json};
use serde_json::Value;

fn shipped_schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json");
    let text = std::fs::read_to_string(path).expect("schema file readable");
    serde_json::from_str(&text).expect("schema file is valid JSON")
}

fn type_matches(name: &str, doc: &Value) -> bool {
    match name {
        "object" => doc.is_object(),
        "array" => doc.is_array(),
        "string" => doc.is_string(),
        "boolean" => doc.is_boolean(),
        "null" => doc.is_null(),
        "number" => doc.is_number(),
        "integer" => doc.as_i64().is_some() || doc.as_u64().is_some(),
        other => panic!("schema uses unsupported type {other:?}"),
    }
}

/// Validate `doc` against `schema`, appending human-readable complaints to
/// `errs`.  `root` is the whole schema document, for `$ref` resolution.
fn validate(schema: &Value, doc: &Value, root: &Value, at: &str, errs: &mut Vec<String>) {
    if let Some(Value::String(target)) = schema.get("$ref") {
        let path = target
            .strip_prefix("#/")
            .unwrap_or_else(|| panic!("only local $ref supported, got {target}"));
        let mut resolved = root;
        for seg in path.split('/') {
            resolved = resolved
                .get(seg)
                .unwrap_or_else(|| panic!("dangling $ref {target}"));
        }
        validate(resolved, doc, root, at, errs);
        return;
    }
    if let Some(Value::Array(branches)) = schema.get("oneOf") {
        let mut hits = 0;
        for branch in branches {
            let mut scratch = Vec::new();
            validate(branch, doc, root, at, &mut scratch);
            if scratch.is_empty() {
                hits += 1;
            }
        }
        if hits != 1 {
            errs.push(format!("{at}: matched {hits} of {} oneOf branches", branches.len()));
        }
        return;
    }
    if let Some(expected) = schema.get("const") {
        if doc != expected {
            errs.push(format!("{at}: expected const {expected}, got {doc}"));
        }
        return;
    }
    if let Some(Value::Array(options)) = schema.get("enum") {
        if !options.contains(doc) {
            errs.push(format!("{at}: {doc} not in enum {options:?}"));
        }
        return;
    }
    if let Some(Value::String(ty)) = schema.get("type") {
        if !type_matches(ty, doc) {
            errs.push(format!("{at}: expected type {ty}, got {doc}"));
            return;
        }
    }
    if let Some(obj) = doc.as_object() {
        if let Some(Value::Array(required)) = schema.get("required") {
            for key in required {
                let key = key.as_str().expect("required entries are strings");
                if !obj.contains_key(key) {
                    errs.push(format!("{at}: missing required field {key:?}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(props) = props {
            for (key, sub) in props {
                if let Some(child) = obj.get(key) {
                    validate(sub, child, root, &format!("{at}.{key}"), errs);
                }
            }
        }
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in obj.keys() {
                if !props.is_some_and(|p| p.contains_key(key)) {
                    errs.push(format!("{at}: unexpected field {key:?}"));
                }
            }
        }
    }
    if let Some(items) = doc.as_array() {
        if let Some(sub) = schema.get("items") {
            for (i, child) in items.iter().enumerate() {
                validate(sub, child, root, &format!("{at}[{i}]"), errs);
            }
        }
    }
}

fn assert_valid(doc: &Value) {
    let schema = shipped_schema();
    let mut errs = Vec::new();
    validate(&schema, doc, &schema, "$", &mut errs);
    assert!(errs.is_empty(), "report does not match schema:\n{}", errs.join("\n"));
}

fn count_errors(doc: &Value) -> usize {
    let schema = shipped_schema();
    let mut errs = Vec::new();
    validate(&schema, doc, &schema, "$", &mut errs);
    errs.len()
}

#[test]
fn exact_report_validates() {
    // one gamma inside the two-eigenvalue window (u3/u4 populated), one
    // outside (u3/u4 null); both validated through the emitter text, so the
    // 17-digit float formatting is covered too
    for gamma in [0.75, 0.5] {
        let report = certify(gamma, 1e-4).expect("certify");
        let text = to_json(&report).expect("serialize");
        let doc: Value = serde_json::from_str(&text).expect("emitted JSON parses");
        assert_valid(&doc);
    }
}

#[test]
fn mollified_report_validates() {
    let mut report = certify(0.75, 1e-4).expect("certify");
    report.provenance = Provenance::Mollified {
        epsilon: 0.04,
        diagnostics: MollifiedDiagnostics {
            lambda1_eps: 3.273055,
            delta: 0.088193,
            w_norm: 0.695022,
        },
    };
    let text = to_json(&report).expect("serialize");
    let doc: Value = serde_json::from_str(&text).expect("emitted JSON parses");
    assert_valid(&doc);
}

#[test]
fn checker_rejects_malformed_reports() {
    let report = certify(0.75, 1e-4).expect("certify");
    let good: Value = serde_json::to_value(&report).expect("to_value");
    assert_eq!(count_errors(&good), 0, "baseline report must be clean");

    // dropped required field
    let mut doc = good.clone();
    doc.as_object_mut().unwrap().remove("gamma");
    assert!(count_errors(&doc) > 0, "missing gamma must be flagged");

    // unknown provenance kind breaks the oneOf
    let mut doc = good.clone();
    doc["provenance"]["kind"] = Value::from("guessed");
    assert!(count_errors(&doc) > 0, "bad provenance kind must be flagged");

    // stray field rejected by additionalProperties: false
    let mut doc = good.clone();
    doc.as_object_mut()
        .unwrap()
        .insert("comment".into(), Value::from("hi"));
    assert!(count_errors(&doc) > 0, "stray top-level field must be flagged");

    // non-integer where the schema demands one
    let mut doc = good.clone();
    doc["u2"]["nearest_k"] = Value::from(1.5);
    assert!(count_errors(&doc) > 0, "fractional nearest_k must be flagged");

    // wrong schema tag breaks the const
    let mut doc = good;
    doc["schema"] = Value::from("kinkspec/spectral-report/v2");
    assert!(count_errors(&doc) > 0, "wrong schema tag must be flagged");
}
