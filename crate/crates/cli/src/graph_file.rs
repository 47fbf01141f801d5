//! Graph files.
//!
//! ```text
//! # paw with a pendant edge
//! vertices a b c d
//! edge a b
//! edge b c
//! edge a c
//! edge c d
//! q 0.7
//! ```
//!
//! The format is line-oriented UTF-8. Lines are trimmed. Empty lines and lines
//! starting with `#` are ignored. Tokens are separated by ASCII whitespace.
//!
//! - `vertices <label>...` appears exactly once, before any `edge` line. Its order
//!   is the vertex order.
//! - `edge <u> <v>` names two declared labels. Edge order is file order, and edge
//!   `i` becomes qubit `i` of edge-encoded problems.
//! - `q <real>` is optional and may appear at most once, with `0 < q < 1`.
//!
//! Labels match `[A-Za-z0-9_.-]+`. [`serialize_graph`] writes the canonical form:
//! the vertices line, one edge per line, and a `q` line written with Rust's
//! shortest round-trip float formatting.

use std::fmt::Write as _;
use std::path::Path;

use gqaoa_core::graphs::{Graph, Preset};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("graph file line {line}: {message}")]
pub struct GraphFileError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError { line, message: message.into() }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

pub fn load_graph(text: &str) -> Result<Graph, GraphFileError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    let mut q: Option<f64> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_ascii_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        let args: Vec<&str> = tokens.collect();
        match keyword {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line, "`vertices` declared twice"));
                }
                if args.is_empty() {
                    return Err(err(line, "`vertices` needs at least one label"));
                }
                if let Some(bad) = args.iter().find(|a| !valid_label(a)) {
                    return Err(err(line, format!("invalid vertex label `{bad}`")));
                }
                vertices = Some(args.iter().map(|s| s.to_string()).collect());
            }
            "edge" => {
                let Some(vs) = &vertices else {
                    return Err(err(line, "`edge` before `vertices`"));
                };
                let [u, v] = args[..] else {
                    return Err(err(line, format!("`edge` takes two labels, got {}", args.len())));
                };
                let find = |label: &str| {
                    vs.iter().position(|x| x == label).ok_or_else(|| err(line, format!("undeclared vertex `{label}`")))
                };
                let (i, j) = (find(u)?, find(v)?);
                if i == j {
                    return Err(err(line, format!("self-loop on vertex `{u}`")));
                }
                edges.push((i, j));
                // validate incrementally so duplicate edges report their own line
                Graph::new(vs.clone(), edges.clone(), None).map_err(|e| err(line, e.to_string()))?;
            }
            "q" => {
                if q.is_some() {
                    return Err(err(line, "`q` declared twice"));
                }
                let [value] = args[..] else {
                    return Err(err(line, "`q` takes one value"));
                };
                let value: f64 = value.parse().map_err(|_| err(line, format!("`{value}` is not a number")))?;
                if !(value > 0.0 && value < 1.0) {
                    return Err(err(line, format!("q = {value} is outside the open interval (0, 1)")));
                }
                q = Some(value);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| err(last_line.max(1), "missing `vertices` line"))?;
    Graph::new(vertices, edges, q).map_err(|e| err(last_line.max(1), e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::from("vertices");
    for v in g.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for &(i, j) in g.edges() {
        writeln!(out, "edge {} {}", g.vertices()[i], g.vertices()[j]).unwrap();
    }
    if let Some(q) = g.weight_q() {
        writeln!(out, "q {q}").unwrap();
    }
    out
}

/// Where a graph came from; recorded in every run record.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum GraphIdentity {
    Preset { name: String },
    File { sha256: String },
}

impl GraphIdentity {
    pub fn preset(&self) -> Option<Preset> {
        match self {
            GraphIdentity::Preset { name } => name.parse().ok(),
            GraphIdentity::File { .. } => None,
        }
    }

    /// Short key for CSV rows: the preset name or the first 12 hex digits.
    pub fn key(&self) -> String {
        match self {
            GraphIdentity::Preset { name } => name.clone(),
            GraphIdentity::File { sha256 } => format!("file-{}", &sha256[..12]),
        }
    }
}

/// `--graph` argument: a preset name, or else a path to a graph file.
pub fn resolve_graph(arg: &str) -> Result<(Graph, GraphIdentity), CliError> {
    if let Ok(preset) = arg.parse::<Preset>() {
        return Ok((preset.graph(), GraphIdentity::Preset { name: preset.name().to_string() }));
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "`{arg}` is neither a preset (triangle, square, paw) nor an existing graph file"
        )));
    }
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Usage(format!("{arg}: not UTF-8 text")))?;
    let graph = load_graph(&text)?;
    let digest = Sha256::digest(&bytes);
    let sha256 = digest.iter().fold(String::with_capacity(64), |mut s, b| {
        write!(s, "{b:02x}").unwrap();
        s
    });
    Ok((graph, GraphIdentity::File { sha256 }))
}
