//! Run records and output files.
//!
//! Every command produces one [`RunRecord`]. Its JSON form has sorted keys, no
//! timestamps and no paths, so two runs with the same flags give identical bytes.
//! Probabilities and energies are dimensionless; angles are radians.

use std::fs::OpenOptions;
use std::io::{ErrorKind, Write as _};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::graph_file::GraphIdentity;
use crate::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixerRecord {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsRecord {
    /// `paper`, `explicit` or `optimized`.
    pub source: &'static str,
    /// Angles passed to the simulator.
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    /// Published angles before the sign convention, for `paper`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_betas: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub graph: GraphIdentity,
    pub problem: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mixer: Option<MixerRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shots: Option<u64>,
    pub result: Value,
}

impl RunRecord {
    pub fn new(command: &'static str, graph: GraphIdentity, problem: &'static str, result: Value) -> Self {
        Self {
            tool: "gqaoa",
            version: TOOL_VERSION,
            command,
            graph,
            problem,
            mixer: None,
            p: None,
            params: None,
            seed: None,
            shots: None,
            result,
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        // round-tripping through Value sorts object keys
        let value = serde_json::to_value(self).expect("records serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }
}

/// A tidy table: one observation per row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Cells are identifiers and numbers, so no quoting is needed.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `path`, or `stem.1.ext`, `stem.2.ext`, … for the first name not yet taken.
/// The file is created exclusively, so an existing file is never replaced.
pub fn write_versioned(path: &Path, contents: &str) -> Result<PathBuf, CliError> {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = path.extension().map(|e| e.to_string_lossy().into_owned());
    for version in 0u32.. {
        let candidate = if version == 0 {
            path.to_path_buf()
        } else {
            let name = match &ext {
                Some(ext) => format!("{stem}.{version}.{ext}"),
                None => format!("{stem}.{version}"),
            };
            path.with_file_name(name)
        };
        match OpenOptions::new().write(true).create_new(true).open(&candidate) {
            Ok(mut f) => {
                f.write_all(contents.as_bytes()).map_err(|source| CliError::Io { path: candidate.clone(), source })?;
                return Ok(candidate);
            }
            Err(e) if e.kind() == ErrorKind::AlreadyExists => continue,
            Err(source) => return Err(CliError::Io { path: candidate, source }),
        }
    }
    unreachable!("version space exhausted")
}
