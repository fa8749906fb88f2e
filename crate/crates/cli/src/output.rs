//! Rendering of count tables in the four output formats.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use anyhow::Context;
use clap::ValueEnum;
use dcp_core::counts::{emit_bfile, Sequence};
use num_bigint::BigUint;
use serde_json::{Map, Number, Value};

use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

/// Rows of exact counts under a composite key, sorted by key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub key_names: Vec<&'static str>,
    pub rows: Vec<(Vec<String>, BigUint)>,
}

impl Counts {
    pub fn from_sequence(seq: &Sequence) -> Self {
        Counts {
            key_names: vec!["perimeter"],
            rows: seq
                .iter()
                .map(|(n, c)| (vec![n.to_string()], c.clone()))
                .collect(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, UsageError> {
        Ok(match format {
            Format::Bfile => {
                if self.key_names.len() != 1 {
                    return Err(UsageError(
                        "bfile output needs a plain sequence; use --by perimeter without --classify"
                            .into(),
                    ));
                }
                let seq: Sequence = self
                    .rows
                    .iter()
                    .map(|(k, c)| (k[0].parse().expect("integer key"), c.clone()))
                    .collect();
                emit_bfile(&seq)
            }
            Format::Csv => {
                let mut out = String::from("key,count\n");
                for (k, c) in &self.rows {
                    writeln!(out, "{},{c}", k.join(":")).unwrap();
                }
                out
            }
            Format::Json => {
                let mut root = Map::new();
                for (k, c) in &self.rows {
                    let mut node = &mut root;
                    for part in &k[..k.len() - 1] {
                        node = node
                            .entry(part.clone())
                            .or_insert_with(|| Value::Object(Map::new()))
                            .as_object_mut()
                            .expect("keys have uniform depth");
                    }
                    node.insert(k[k.len() - 1].clone(), big_number(c));
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(root)).unwrap();
                s.push('\n');
                s
            }
            Format::Table => {
                let mut header: Vec<String> =
                    self.key_names.iter().map(|s| s.to_string()).collect();
                header.push("count".into());
                let body: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|(k, c)| k.iter().cloned().chain([c.to_string()]).collect())
                    .collect();
                aligned(&header, &body)
            }
        })
    }
}

pub fn big_number(c: &BigUint) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("decimal integer"))
}

/// Right-aligned columns under a header line.
pub fn aligned(header: &[String], body: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(body.iter().map(|r| r.as_slice())) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Writes to stdout, or to `path` through a temporary file in the same
/// directory so a failed run never leaves a partial file behind.
pub fn emit(text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    let Some(path) = path else {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        return Ok(stdout.flush()?);
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
