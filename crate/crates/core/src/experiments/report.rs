use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not run, with the reason in the assertion note.
    Skipped,
    /// Recorded observation with no pass/fail meaning.
    Evidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub id: String,
    pub expected: Value,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Outcome of one experiment. Everything except `timings` is a pure
/// function of the inputs and budgets.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub version: u32,
    pub preset: String,
    pub params: BTreeMap<String, Value>,
    /// sha256 of the preset name and parameters.
    pub input_hash: String,
    pub assertions: Vec<Assertion>,
    pub artifacts: BTreeMap<String, Value>,
    pub cache_hits: u64,
    pub timings: BTreeMap<String, f64>,
}

#[derive(Serialize)]
struct Hashed<'a> {
    version: u32,
    preset: &'a str,
    params: &'a BTreeMap<String, Value>,
    input_hash: &'a str,
    assertions: &'a [Assertion],
    artifacts: &'a BTreeMap<String, Value>,
    cache_hits: u64,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl ExperimentReport {
    pub fn new(preset: &str, params: BTreeMap<String, Value>) -> ExperimentReport {
        let input = serde_json::to_vec(&(preset, &params)).expect("json");
        ExperimentReport {
            version: REPORT_VERSION,
            preset: preset.to_string(),
            input_hash: sha_hex(&input),
            params,
            assertions: Vec::new(),
            artifacts: BTreeMap::new(),
            cache_hits: 0,
            timings: BTreeMap::new(),
        }
    }

    pub fn assert(&mut self, id: &str, expected: impl Serialize, computed: impl Serialize, pass: bool) -> bool {
        self.push(id, expected, computed, if pass { Verdict::Pass } else { Verdict::Fail }, None);
        pass
    }

    pub fn push(
        &mut self,
        id: &str,
        expected: impl Serialize,
        computed: impl Serialize,
        verdict: Verdict,
        note: Option<String>,
    ) {
        self.assertions.push(Assertion {
            id: id.to_string(),
            expected: serde_json::to_value(expected).expect("json"),
            computed: serde_json::to_value(computed).expect("json"),
            verdict,
            note,
        });
    }

    pub fn skip(&mut self, id: &str, expected: impl Serialize, reason: &str) {
        self.push(id, expected, Value::Null, Verdict::Skipped, Some(reason.to_string()));
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        self.artifacts.insert(key.to_string(), serde_json::to_value(value).expect("json"));
    }

    /// Runs `f` and records its wall time under `key`.
    pub fn timed<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.insert(key.to_string(), start.elapsed().as_secs_f64());
        out
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> Vec<&Assertion> {
        self.assertions.iter().filter(|a| a.verdict == Verdict::Fail).collect()
    }

    pub fn assertion(&self, id: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.id == id)
    }

    /// sha256 of the report without its timings.
    pub fn content_hash(&self) -> String {
        let h = Hashed {
            version: self.version,
            preset: &self.preset,
            params: &self.params,
            input_hash: &self.input_hash,
            assertions: &self.assertions,
            artifacts: &self.artifacts,
            cache_hits: self.cache_hits,
        };
        sha_hex(&serde_json::to_vec(&h).expect("json"))
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("json");
        v["content_hash"] = Value::String(self.content_hash());
        serde_json::to_string_pretty(&v).expect("json")
    }

    /// One line per assertion.
    pub fn render_text(&self) -> String {
        let mut out = format!("{} {}\n", self.preset, serde_json::to_string(&self.params).expect("json"));
        for a in &self.assertions {
            let tag = match a.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
                Verdict::Evidence => "INFO",
            };
            out.push_str(&format!("  [{tag}] {}: expected {}, computed {}", a.id, a.expected, a.computed));
            if let Some(n) = &a.note {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
        }
        out
    }
}
