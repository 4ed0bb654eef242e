use serde::Serialize;
use serde_json::{json, Value};

/// What a subcommand produced: text lines, a structured result and notes.
#[derive(Debug)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub result: Value,
    pub diagnostics: Vec<String>,
    /// False when a verification suite found a failing case.
    pub passed: bool,
}

impl Outcome {
    pub fn new(result: impl Serialize) -> anyhow::Result<Self> {
        Ok(Outcome {
            lines: Vec::new(),
            result: serde_json::to_value(result)?,
            diagnostics: Vec::new(),
            passed: true,
        })
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.diagnostics.push(s.into());
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for d in &self.diagnostics {
            out.push_str("note: ");
            out.push_str(d);
            out.push('\n');
        }
        out
    }

    pub fn json(&self, request_echo: Value) -> anyhow::Result<String> {
        let doc = json!({
            "request_echo": request_echo,
            "result": self.result,
            "diagnostics": self.diagnostics,
        });
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }
}
