//! Checked-in golden tables and the diff used by `reproduce`.
//!
//! The files under `golden/v1/` are compiled into the binary. A directory can
//! be supplied instead; nothing here ever writes to it.

use std::fs;
use std::path::Path;

use crate::tables::{generate, TABLE_IDS};

macro_rules! golden {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1/", $id, ".txt")))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = golden!(
    "kostka-3",
    "kostka-4",
    "kostka-5",
    "tbl-gentile",
    "paracount",
    "hilbert-decomp",
    "table-1",
    "gentile-expansions",
    "para-expansions",
    "quon-n3",
    "jack-immanon",
    "semion-n5",
    "wang-n2",
    "hilbert-space-examples",
);

pub fn embedded(id: &str) -> Option<&'static str> {
    EMBEDDED.iter().find(|(k, _)| *k == id).map(|(_, v)| *v)
}

/// Drops `#` comments, blank lines and trailing whitespace.
pub fn canonical_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffLine {
    Same(String),
    /// Present in the golden file only.
    Missing(String),
    /// Present in the regenerated table only.
    Extra(String),
}

/// Line diff via longest common subsequence; tables are a few dozen lines.
pub fn diff(golden: &[String], actual: &[String]) -> Vec<DiffLine> {
    let (n, m) = (golden.len(), actual.len());
    let mut lcs = vec![vec![0usize; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            lcs[i][j] = if golden[i] == actual[j] { lcs[i + 1][j + 1] + 1 } else { lcs[i + 1][j].max(lcs[i][j + 1]) };
        }
    }
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < n || j < m {
        if i < n && j < m && golden[i] == actual[j] {
            out.push(DiffLine::Same(golden[i].clone()));
            i += 1;
            j += 1;
        } else if j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j]) {
            out.push(DiffLine::Extra(actual[j].clone()));
            j += 1;
        } else {
            out.push(DiffLine::Missing(golden[i].clone()));
            i += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reproduction {
    pub id: String,
    pub lines: Vec<String>,
    pub diff: Vec<DiffLine>,
}

impl Reproduction {
    pub fn clean(&self) -> bool {
        self.diff.iter().all(|d| matches!(d, DiffLine::Same(_)))
    }

    pub fn render_diff(&self) -> String {
        let mut out = String::new();
        for d in &self.diff {
            match d {
                DiffLine::Same(_) => {}
                DiffLine::Missing(l) => out.push_str(&format!("- {l}\n")),
                DiffLine::Extra(l) => out.push_str(&format!("+ {l}\n")),
            }
        }
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("unknown table id {0:?}")]
    UnknownId(String),
    #[error("cannot read golden file {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub fn load_golden(id: &str, dir: Option<&Path>) -> Result<String, GoldenError> {
    match dir {
        Some(dir) => {
            let path = dir.join(format!("{id}.txt"));
            fs::read_to_string(&path).map_err(|source| GoldenError::Io { path: path.display().to_string(), source })
        }
        None => embedded(id).map(String::from).ok_or_else(|| GoldenError::UnknownId(id.to_string())),
    }
}

pub fn reproduce(id: &str, dir: Option<&Path>) -> Result<Reproduction, GoldenError> {
    let lines = generate(id).ok_or_else(|| GoldenError::UnknownId(id.to_string()))?;
    let golden = canonical_lines(&load_golden(id, dir)?);
    let diff = diff(&golden, &lines);
    Ok(Reproduction { id: id.to_string(), lines, diff })
}

pub fn all_ids() -> &'static [&'static str] {
    &TABLE_IDS
}
