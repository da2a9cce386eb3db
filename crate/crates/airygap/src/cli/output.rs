//! Serialization helpers: provenance headers, 17-significant-digit CSV,
//! and the stdout-or-file writer.

use std::io::Write;

use crate::error::{Error, Result};

use super::{Format, OutputArgs};

/// Deterministic parameter record reproduced in every output file; no
/// timestamps, so identical flags give byte-identical files.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub params: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance {
            tool: "airygap".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            params: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn csv_header(&self) -> String {
        let mut h = format!("# {} {} {}\n", self.tool, self.version, self.command);
        for (k, v) in &self.params {
            h.push_str(&format!("# {k} = {v}\n"));
        }
        h
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// A CSV table: header row plus rows of preformatted cells.
pub fn csv_table(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = columns.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn emit(
    output: &OutputArgs,
    provenance: &Provenance,
    payload: serde_json::Value,
    csv_body: String,
) -> Result<()> {
    let text = match output.format {
        Format::Json => {
            let doc = serde_json::json!({ "provenance": provenance, "payload": payload });
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Numerical(format!("serialization failed: {e}")))?;
            s.push('\n');
            s
        }
        Format::Csv => format!("{}{csv_body}", provenance.csv_header()),
    };
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Numerical(format!("stdout write failed: {e}"))),
    }
}
