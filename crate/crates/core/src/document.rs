//! JSON file formats.
//!
//! A quiver document looks like
//!
//! ```json
//! {"m":2,"vertices":3,"arrows":[[0,1,0,1],[1,0,2,1],[1,2,0,1],[2,1,2,1]]}
//! ```
//!
//! where each arrow entry is `[from, to, colour, mult]`. Unknown keys (such
//! as a `"source"` comment) are ignored on input. [`emit_quiver`] writes the
//! keys in the order above with arrows sorted by `(from, to, colour)`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{EnumerationResult, Status};
use crate::multigraph::DirectedMultigraph;
use crate::quiver::{validate, ColouredQuiver, Violation};

// Largest accepted multiplicity table, in entries.
const MAX_TABLE: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDocument {
    pub m: u64,
    pub vertices: u64,
    pub arrows: Vec<(u64, u64, u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GabrielDocument {
    pub vertices: u64,
    pub arrows: Vec<(u64, u64, u64)>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error("invalid coloured quiver: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

impl ParseError {
    fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Schema { field: field.into(), message: message.into() }
    }
}

impl QuiverDocument {
    pub fn from_quiver(q: &ColouredQuiver) -> Self {
        QuiverDocument {
            m: q.m() as u64,
            vertices: q.n() as u64,
            arrows: q.arrows().map(|a| (a.source as u64, a.target as u64, a.colour as u64, a.mult)).collect(),
        }
    }

    /// Checks the schema and builds the quiver, without checking the three
    /// structural properties.
    pub fn to_quiver(&self) -> Result<ColouredQuiver, ParseError> {
        if self.vertices == 0 {
            return Err(ParseError::schema("vertices", "must be at least 1"));
        }
        let n = usize::try_from(self.vertices).map_err(|_| ParseError::schema("vertices", "too large"))?;
        let m = usize::try_from(self.m).map_err(|_| ParseError::schema("m", "too large"))?;
        let cells = n.checked_mul(n).and_then(|x| x.checked_mul(m.checked_add(1)?));
        if cells.is_none_or(|x| x > MAX_TABLE) {
            return Err(ParseError::schema("vertices", "quiver too large"));
        }
        let mut q = ColouredQuiver::new(n, m);
        for (idx, &(from, to, colour, mult)) in self.arrows.iter().enumerate() {
            let field = |k: usize| format!("arrows[{idx}][{k}]");
            if from >= self.vertices {
                return Err(ParseError::schema(field(0), format!("vertex {from} out of range (vertices = {n})")));
            }
            if to >= self.vertices {
                return Err(ParseError::schema(field(1), format!("vertex {to} out of range (vertices = {n})")));
            }
            if colour > self.m {
                return Err(ParseError::schema(field(2), format!("colour {colour} exceeds m = {m}")));
            }
            if mult == 0 {
                return Err(ParseError::schema(field(3), "multiplicity must be at least 1"));
            }
            let (i, j, c) = (from as usize, to as usize, colour as usize);
            if q.mult(i, j, c) > 0 {
                return Err(ParseError::schema(
                    format!("arrows[{idx}]"),
                    format!("duplicate entry for ({from}, {to}, {colour})"),
                ));
            }
            q.set_mult(i, j, c, mult);
        }
        Ok(q)
    }
}

/// Parses and validates a quiver document.
pub fn parse_quiver(text: &[u8]) -> Result<ColouredQuiver, ParseError> {
    let q = parse_quiver_permissive(text)?;
    let violations = validate(&q);
    if violations.is_empty() {
        Ok(q)
    } else {
        Err(ParseError::Invalid(violations))
    }
}

/// Parses a quiver document, skipping the structural checks.
pub fn parse_quiver_permissive(text: &[u8]) -> Result<ColouredQuiver, ParseError> {
    let doc: QuiverDocument = serde_json::from_slice(text)?;
    doc.to_quiver()
}

/// Canonical compact JSON, without a trailing newline.
pub fn emit_quiver(q: &ColouredQuiver) -> String {
    serde_json::to_string(&QuiverDocument::from_quiver(q)).expect("document serializes")
}

pub fn gabriel_document(g: &DirectedMultigraph) -> GabrielDocument {
    GabrielDocument { vertices: g.n() as u64, arrows: g.arrows().map(|(i, j, r)| (i as u64, j as u64, r)).collect() }
}

pub fn emit_gabriel(g: &DirectedMultigraph) -> String {
    serde_json::to_string(&gabriel_document(g)).expect("document serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchiveEntry {
    pub canonical: String,
    pub quiver: QuiverDocument,
}

/// An enumeration result on disk, representatives sorted by canonical bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Archive {
    pub status: Status,
    pub size: usize,
    pub depth_reached: usize,
    pub representatives: Vec<ArchiveEntry>,
}

#[derive(Debug, Error)]
pub enum ArchiveError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("{path}: stored canonical form does not match the quiver")]
    Mismatch { path: String },
}

impl Archive {
    pub fn from_result(res: &EnumerationResult) -> Self {
        Archive {
            status: res.status,
            size: res.size(),
            depth_reached: res.depth_reached,
            representatives: res
                .sorted()
                .into_iter()
                .map(|r| ArchiveEntry { canonical: r.form.to_hex(), quiver: QuiverDocument::from_quiver(&r.quiver) })
                .collect(),
        }
    }

    /// The canonical forms, recomputed from the stored quivers.
    pub fn forms(&self) -> Result<Vec<CanonicalForm>, ParseError> {
        self.representatives.iter().map(|e| e.quiver.to_quiver().map(|q| canonical_form(&q))).collect()
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ArchiveError + '_ {
    move |source| ArchiveError::Io { path: path.display().to_string(), source }
}

/// Writes an archive. A path ending in `.json` becomes a single file;
/// anything else a directory holding `summary.json` and one numbered
/// quiver document per representative.
pub fn write_archive(path: &Path, res: &EnumerationResult) -> Result<(), ArchiveError> {
    let archive = Archive::from_result(res);
    if path.extension().is_some_and(|e| e == "json") {
        let mut text = serde_json::to_string_pretty(&archive).expect("archive serializes");
        text.push('\n');
        return fs::write(path, text).map_err(io_err(path));
    }
    fs::create_dir_all(path).map_err(io_err(path))?;
    let summary = serde_json::json!({
        "status": archive.status,
        "size": archive.size,
        "depth_reached": archive.depth_reached,
    });
    let summary_path = path.join("summary.json");
    fs::write(&summary_path, format!("{summary}\n")).map_err(io_err(&summary_path))?;
    for (idx, entry) in archive.representatives.iter().enumerate() {
        let file = path.join(format!("{idx:06}.json"));
        let mut text = serde_json::to_string(&serde_json::json!({
            "m": entry.quiver.m,
            "vertices": entry.quiver.vertices,
            "arrows": entry.quiver.arrows,
            "canonical": entry.canonical,
        }))
        .expect("entry serializes");
        text.push('\n');
        fs::write(&file, text).map_err(io_err(&file))?;
    }
    Ok(())
}

/// Loads an archive written by [`write_archive`], checking every stored
/// canonical form against its quiver.
pub fn load_archive(path: &Path) -> Result<Archive, ArchiveError> {
    let parse_err = |p: &Path, e: ParseError| ArchiveError::Parse { path: p.display().to_string(), source: e };
    let archive = if path.is_file() {
        let text = fs::read(path).map_err(io_err(path))?;
        serde_json::from_slice::<Archive>(&text).map_err(|e| parse_err(path, e.into()))?
    } else {
        #[derive(Deserialize)]
        struct Summary {
            status: Status,
            size: usize,
            depth_reached: usize,
        }
        #[derive(Deserialize)]
        struct Entry {
            #[serde(flatten)]
            quiver: QuiverDocument,
            canonical: String,
        }
        let summary_path = path.join("summary.json");
        let text = fs::read(&summary_path).map_err(io_err(&summary_path))?;
        let summary: Summary = serde_json::from_slice(&text).map_err(|e| parse_err(&summary_path, e.into()))?;
        let mut representatives = Vec::with_capacity(summary.size);
        for idx in 0..summary.size {
            let file = path.join(format!("{idx:06}.json"));
            let text = fs::read(&file).map_err(io_err(&file))?;
            let entry: Entry = serde_json::from_slice(&text).map_err(|e| parse_err(&file, e.into()))?;
            representatives.push(ArchiveEntry { canonical: entry.canonical, quiver: entry.quiver });
        }
        Archive { status: summary.status, size: summary.size, depth_reached: summary.depth_reached, representatives }
    };
    for entry in &archive.representatives {
        let q = entry.quiver.to_quiver().map_err(|e| parse_err(path, e))?;
        if canonical_form(&q).to_hex() != entry.canonical {
            return Err(ArchiveError::Mismatch { path: path.display().to_string() });
        }
    }
    Ok(archive)
}
