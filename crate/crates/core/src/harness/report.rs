//! Machine-readable campaign reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct ItemResult {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
    pub micros: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub total_ms: u64,
    pub max_item_ms: u64,
    pub mean_item_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub corpus: String,
    pub items: Vec<ItemResult>,
    pub passed: bool,
    pub failures: usize,
    pub timing: Timing,
    pub version: String,
}

impl VerifyReport {
    pub fn new(
        command: impl Into<String>,
        corpus: impl Into<String>,
        items: Vec<ItemResult>,
        started: Instant,
    ) -> Self {
        let failures = items.iter().filter(|i| !i.passed).count();
        let max = items.iter().map(|i| i.micros).max().unwrap_or(0);
        let mean = if items.is_empty() {
            0.0
        } else {
            items.iter().map(|i| i.micros as f64).sum::<f64>() / items.len() as f64
        };
        VerifyReport {
            command: command.into(),
            corpus: corpus.into(),
            passed: !items.is_empty() && failures == 0,
            failures,
            items,
            timing: Timing {
                total_ms: started.elapsed().as_millis() as u64,
                max_item_ms: max / 1000,
                mean_item_ms: mean / 1000.0,
            },
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Run `f`, timing it; errors become failed items.
pub fn timed_item(name: String, f: impl FnOnce() -> crate::Result<(bool, Value)>) -> ItemResult {
    let t = Instant::now();
    let (passed, detail) = match f() {
        Ok(x) => x,
        Err(e) => (false, Value::String(format!("error: {e}"))),
    };
    ItemResult {
        name,
        passed,
        detail,
        micros: t.elapsed().as_micros() as u64,
    }
}
