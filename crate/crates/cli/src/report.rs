use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// What a command did, in a form that survives a JSON round trip unchanged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Arguments after the program name.
    pub command: Vec<String>,
    /// SHA-256 of each input file, keyed by role.
    pub inputs: BTreeMap<String, String>,
    pub status: String,
    pub exit_code: i32,
    pub outcome: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    /// Wall-clock milliseconds; only present with `--timing`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            command,
            inputs: BTreeMap::new(),
            status: String::new(),
            exit_code: 0,
            outcome: Value::Null,
            seed: None,
            budget: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Short human-readable form.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} (exit {})\n", self.status, self.exit_code);
        if let Value::Object(map) = &self.outcome {
            for (k, v) in map {
                out.push_str(&format!("  {k}: {}\n", compact(v)));
            }
        } else if !self.outcome.is_null() {
            out.push_str(&format!("  {}\n", compact(&self.outcome)));
        }
        if let Some(seed) = self.seed {
            out.push_str(&format!("  seed: {seed}\n"));
        }
        if let Some(budget) = self.budget {
            out.push_str(&format!("  budget: {budget}\n"));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("  timing_ms: {ms}\n"));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let mut r = Report::new(vec!["demo".into(), "frobenius".into()]);
        r.status = "ok".into();
        r.outcome = json!({ "x": ["1/2", "-3"], "n": 4, "ok": true });
        r.inputs.insert("file".into(), sha256_hex(b"abc"));
        r.seed = Some(7);
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert!(!text.contains("timing_ms"));
        r.timing_ms = Some(12);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
