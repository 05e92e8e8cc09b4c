//! Single-line JSON run reports.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Everything a run emits. Keys serialize in sorted order because
/// `serde_json` maps are ordered, and floats use the shortest
/// round-trip representation, so reports differ only in `timing`.
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub results: Value,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn to_line(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("inputs_digest".into(), json!(self.inputs_digest));
        top.insert("results".into(), self.results.clone());
        top.insert("timing".into(), json!({ "elapsed_ms": self.elapsed_ms }));
        top.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        canonical(Value::Object(top)).to_string()
    }
}

/// Rewrites `-0.0` as `0.0` so equal results print identically.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => json!(0.0),
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, canonical(v))).collect()),
        other => other,
    }
}

/// SHA-256 over the command echo and the spec document, hex encoded.
pub fn digest(command: &[String], spec_text: &str) -> String {
    let mut h = Sha256::new();
    for arg in command {
        h.update(arg.as_bytes());
        h.update([0u8]);
    }
    h.update(spec_text.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}
