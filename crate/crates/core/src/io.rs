//! Evidence documents (`.evj`) and tabular result output.
//!
//! An evidence document is UTF-8 JSON:
//!
//! ```json
//! {
//!   "frame": ["a", "b", "c"],
//!   "bodies": [
//!     {"id": "m1", "masses": [{"focal": ["a"], "mass": 0.6}, {"focal": [], "mass": 0.4}]}
//!   ]
//! }
//! ```
//!
//! `"focal": []` is ∅. An optional top-level `"renormalize": true` rescales
//! every body to unit mass instead of rejecting an off-unit total.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::EvidenceError;
use crate::frame::Frame;
use crate::gbpa::Gbpa;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("frame: {0}")]
    Frame(#[source] EvidenceError),
    #[error("duplicate body id `{0}`")]
    DuplicateBodyId(String),
    #[error("body `{id}`, {field}: {source}")]
    Body {
        id: String,
        field: String,
        #[source]
        source: EvidenceError,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    frame: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    renormalize: bool,
    bodies: Vec<RawBody>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBody {
    id: String,
    masses: Vec<RawMass>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMass {
    focal: Vec<String>,
    mass: f64,
}

/// A frame and an ordered list of named bodies of evidence over it.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceDocument {
    pub frame: Frame,
    pub bodies: Vec<(String, Gbpa)>,
}

impl EvidenceDocument {
    pub fn new(frame: Frame) -> Self {
        EvidenceDocument {
            frame,
            bodies: Vec::new(),
        }
    }

    pub fn push(&mut self, id: impl Into<String>, body: Gbpa) -> Result<(), DocumentError> {
        let id = id.into();
        if self.body(&id).is_some() {
            return Err(DocumentError::DuplicateBodyId(id));
        }
        if body.frame() != &self.frame {
            return Err(DocumentError::Body {
                id,
                field: "frame".into(),
                source: EvidenceError::FrameMismatch,
            });
        }
        self.bodies.push((id, body));
        Ok(())
    }

    pub fn body(&self, id: &str) -> Option<&Gbpa> {
        self.bodies
            .iter()
            .find(|(name, _)| name == id)
            .map(|(_, m)| m)
    }

    pub fn parse(text: &[u8]) -> Result<Self, DocumentError> {
        parse_evidence_document(text)
    }

    /// Serializes with masses rounded to 12 significant digits.
    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            frame: self.frame.labels().to_vec(),
            renormalize: false,
            bodies: self
                .bodies
                .iter()
                .map(|(id, m)| RawBody {
                    id: id.clone(),
                    masses: m
                        .focal_elements()
                        .map(|(s, v)| RawMass {
                            focal: s
                                .indices()
                                .map(|i| self.frame.labels()[i].clone())
                                .collect(),
                            mass: round_significant(v),
                        })
                        .collect(),
                })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("document serializes");
        out.push('\n');
        out
    }
}

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn parse_evidence_document(text: &[u8]) -> Result<EvidenceDocument, DocumentError> {
    parse_evidence_document_with(text, false)
}

/// Parses a document; `force_renormalize` acts as if the document set `"renormalize": true`.
pub fn parse_evidence_document_with(
    text: &[u8],
    force_renormalize: bool,
) -> Result<EvidenceDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_slice(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let frame = Frame::new(raw.frame).map_err(DocumentError::Frame)?;
    let mut doc = EvidenceDocument::new(frame.clone());
    let mut ids = HashSet::new();
    for body in raw.bodies {
        if !ids.insert(body.id.clone()) {
            return Err(DocumentError::DuplicateBodyId(body.id));
        }
        let at = |field: String| {
            let id = body.id.clone();
            move |source| DocumentError::Body { id, field, source }
        };
        let mut pairs = Vec::with_capacity(body.masses.len());
        for (i, entry) in body.masses.iter().enumerate() {
            let subset = frame
                .subset(&entry.focal)
                .map_err(at(format!("masses[{i}].focal")))?;
            pairs.push((subset, entry.mass));
        }
        let gbpa = if raw.renormalize || force_renormalize {
            Gbpa::renormalized(frame.clone(), pairs)
        } else {
            Gbpa::new(frame.clone(), pairs)
        }
        .map_err(at("masses".to_string()))?;
        doc.bodies.push((body.id, gbpa));
    }
    Ok(doc)
}

/// A table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Real(f64),
}

/// A row type with a fixed column order.
pub trait Record {
    fn columns() -> &'static [&'static str];
    fn cells(&self) -> Vec<Cell>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

/// Renders rows as CSV (header row, LF endings, reals with 6 decimals) or as
/// a JSON array of objects whose keys follow the column order.
pub fn emit_table<R: Record>(rows: &[R], format: TableFormat) -> Vec<u8> {
    match format {
        TableFormat::Csv => emit_csv(rows),
        TableFormat::Json => emit_json(rows),
    }
}

fn emit_csv<R: Record>(rows: &[R]) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(R::columns()).expect("write to memory");
    for row in rows {
        let fields: Vec<String> = row
            .cells()
            .into_iter()
            .map(|c| match c {
                Cell::Text(s) => s,
                Cell::Real(x) => format!("{x:.6}"),
            })
            .collect();
        w.write_record(&fields).expect("write to memory");
    }
    w.into_inner().expect("flush to memory")
}

fn emit_json<R: Record>(rows: &[R]) -> Vec<u8> {
    let array: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let object: serde_json::Map<String, serde_json::Value> = R::columns()
                .iter()
                .zip(row.cells())
                .map(|(k, c)| {
                    let v = match c {
                        Cell::Text(s) => serde_json::Value::String(s),
                        Cell::Real(x) => serde_json::Number::from_f64(x)
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null),
                    };
                    (k.to_string(), v)
                })
                .collect();
            serde_json::Value::Object(object)
        })
        .collect();
    let mut out = serde_json::to_vec_pretty(&array).expect("json serializes");
    out.push(b'\n');
    out
}

/// One focal element of a mass function, for tabular output.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalRow {
    pub focal: String,
    pub mass: f64,
}

impl Record for FocalRow {
    fn columns() -> &'static [&'static str] {
        &["focal", "mass"]
    }
    fn cells(&self) -> Vec<Cell> {
        vec![Cell::Text(self.focal.clone()), Cell::Real(self.mass)]
    }
}

impl FocalRow {
    /// Focal sets rendered as space-free comma lists; ∅ is the empty string.
    pub fn from_gbpa(m: &Gbpa) -> Vec<FocalRow> {
        m.focal_elements()
            .map(|(s, v)| FocalRow {
                focal: s
                    .indices()
                    .map(|i| m.frame().labels()[i].as_str())
                    .collect::<Vec<_>>()
                    .join(","),
                mass: v,
            })
            .collect()
    }
}
