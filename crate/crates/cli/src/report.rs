use std::fmt::Write as _;
use std::time::Instant;

use anyhow::Context;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::Common;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// What a command did, self-contained enough to rerun it.
#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states_explored: Option<usize>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: u8,
    /// Artifact body printed to stdout when no output path is given.
    #[serde(skip)]
    pub body: Option<String>,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        RunReport {
            command,
            seed,
            decision: None,
            witness: None,
            artifact: None,
            oracle_agrees: None,
            millis: 0,
            states_explored: None,
            details: Map::new(),
            error: None,
            exit_code: 0,
            body: None,
            started: Some(Instant::now()),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => {
                let mut s = String::new();
                if let Some(d) = &self.decision {
                    let _ = writeln!(s, "decision: {d}");
                }
                if let Some(a) = &self.artifact {
                    let _ = writeln!(s, "artifact: {a}");
                }
                if let Some(o) = self.oracle_agrees {
                    let _ = writeln!(s, "oracle agrees: {o}");
                }
                if let Some(n) = self.states_explored {
                    let _ = writeln!(s, "states explored: {n}");
                }
                for (k, v) in &self.details {
                    let _ = writeln!(s, "{k}: {v}");
                }
                if let Some(w) = &self.witness {
                    let _ = writeln!(s, "witness: {w}");
                }
                if let Some(e) = &self.error {
                    let _ = writeln!(s, "error: {e}");
                }
                let _ = writeln!(s, "seed: {}  time: {} ms  exit: {}", self.seed, self.millis, self.exit_code);
                s
            }
        }
    }

    /// Writes the artifact (if any) and the report. An artifact without an
    /// output path goes to stdout and pushes the report to stderr.
    pub fn emit(mut self, c: &Common) -> anyhow::Result<()> {
        self.millis = self.started.map_or(0, |t| t.elapsed().as_millis());
        if let (Some(_), Some(path)) = (&self.body, &c.output) {
            self.artifact = Some(path.display().to_string());
        }
        let text = self.render(c.format);
        match (self.body.take(), &c.output) {
            (Some(body), Some(path)) => {
                std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
                print!("{text}");
            }
            (Some(body), None) => {
                println!("{body}");
                eprint!("{text}");
            }
            (None, Some(path)) => {
                std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                print!("{text}");
            }
            (None, None) => print!("{text}"),
        }
        Ok(())
    }
}
