//! On-disk basis format.
//!
//! The canonical form is a line-oriented text matrix with exact rational
//! cells, hand-editable:
//!
//! ```text
//! l1basis v1
//! n 3
//! labels x1 x2 x3
//! 1/3 1 1
//! 1/3 1 0
//! 1/3 0 1
//! ```
//!
//! Column j is the j-th basis vector. Cells may be `p/q`, integers, or
//! decimal literals; decimals are parsed as the exact rational they denote.
//! Blank lines and `#` comments are ignored. The same document also exists
//! as JSON (cells as strings) for machine consumption; parsing sniffs the
//! leading `{`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::basis::Basis;
use crate::error::Error as LibError;
use crate::matrix::Matrix;
use crate::scalar::{ParseScalarError, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFile {
    pub version: u32,
    pub dimension: usize,
    pub labels: Option<Vec<String>>,
    /// row-major entries; column j is basis vector j
    pub rows: Vec<Vec<Scalar>>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `l1basis v{FORMAT_VERSION}`")]
    Header { line: usize },
    #[error("unsupported format version {found} (this build reads v{FORMAT_VERSION})")]
    Version { found: String },
    #[error("line {line}: expected `n <dimension>`")]
    Dimension { line: usize },
    #[error("line {line}: expected {expected} labels, found {found}")]
    Labels {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, cell {column}: {source}")]
    Cell {
        line: usize,
        column: usize,
        source: ParseScalarError,
    },
    #[error("line {line}: expected {expected} cells, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} data rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("invalid JSON basis document: {0}")]
    Json(String),
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    format: String,
    version: u32,
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    entries: Vec<Vec<String>>,
}

impl BasisFile {
    pub fn from_matrix(matrix: &Matrix, labels: Option<Vec<String>>) -> BasisFile {
        let n = matrix.dimension();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| matrix.at(i, j).clone()).collect())
            .collect();
        BasisFile {
            version: FORMAT_VERSION,
            dimension: n,
            labels,
            rows,
        }
    }

    pub fn from_basis(basis: &Basis) -> BasisFile {
        BasisFile::from_matrix(basis.matrix(), None)
    }

    pub fn to_matrix(&self) -> Result<Matrix, LibError> {
        Matrix::from_rows(self.rows.clone())
    }

    /// Parses either the text format or the JSON document form.
    pub fn parse(input: &str) -> Result<BasisFile, ParseError> {
        if input.trim_start().starts_with('{') {
            return Self::parse_json(input);
        }
        Self::parse_text(input)
    }

    pub fn parse_text(input: &str) -> Result<BasisFile, ParseError> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines.next().ok_or(ParseError::Header { line: 1 })?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("l1basis") {
            return Err(ParseError::Header { line: line_no });
        }
        let version = match parts.next() {
            Some("v1") => 1,
            Some(other) => {
                return Err(ParseError::Version {
                    found: other.to_string(),
                })
            }
            None => return Err(ParseError::Header { line: line_no }),
        };

        let (line_no, dim_line) = lines.next().ok_or(ParseError::Dimension { line: 0 })?;
        let dimension = dim_line
            .strip_prefix("n ")
            .or_else(|| dim_line.strip_prefix("n\t"))
            .and_then(|d| d.trim().parse::<usize>().ok())
            .filter(|&d| d > 0)
            .ok_or(ParseError::Dimension { line: line_no })?;

        let mut labels = None;
        let mut data_lines: Vec<(usize, &str)> = Vec::new();
        for (no, line) in lines {
            if line.starts_with("labels") && labels.is_none() && data_lines.is_empty() {
                let names: Vec<String> = line
                    .split_whitespace()
                    .skip(1)
                    .map(str::to_string)
                    .collect();
                if names.len() != dimension {
                    return Err(ParseError::Labels {
                        line: no,
                        expected: dimension,
                        found: names.len(),
                    });
                }
                labels = Some(names);
            } else {
                data_lines.push((no, line));
            }
        }
        if data_lines.len() != dimension {
            return Err(ParseError::RowCount {
                expected: dimension,
                found: data_lines.len(),
            });
        }

        let mut rows = Vec::with_capacity(dimension);
        for (no, line) in data_lines {
            let cells: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            if cells.len() != dimension {
                return Err(ParseError::RowLength {
                    line: no,
                    expected: dimension,
                    found: cells.len(),
                });
            }
            let mut row = Vec::with_capacity(dimension);
            for (col, cell) in cells.iter().enumerate() {
                let value: Scalar = cell.parse().map_err(|source| ParseError::Cell {
                    line: no,
                    column: col + 1,
                    source,
                })?;
                row.push(value);
            }
            rows.push(row);
        }

        Ok(BasisFile {
            version,
            dimension,
            labels,
            rows,
        })
    }

    fn parse_json(input: &str) -> Result<BasisFile, ParseError> {
        let doc: JsonDoc =
            serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
        if doc.format != "l1basis" {
            return Err(ParseError::Json(format!(
                "unexpected format tag {:?}",
                doc.format
            )));
        }
        if doc.version != FORMAT_VERSION {
            return Err(ParseError::Version {
                found: doc.version.to_string(),
            });
        }
        if doc.dimension == 0 || doc.entries.len() != doc.dimension {
            return Err(ParseError::RowCount {
                expected: doc.dimension,
                found: doc.entries.len(),
            });
        }
        if let Some(labels) = &doc.labels {
            if labels.len() != doc.dimension {
                return Err(ParseError::Labels {
                    line: 0,
                    expected: doc.dimension,
                    found: labels.len(),
                });
            }
        }
        let mut rows = Vec::with_capacity(doc.dimension);
        for (i, row) in doc.entries.iter().enumerate() {
            if row.len() != doc.dimension {
                return Err(ParseError::RowLength {
                    line: i + 1,
                    expected: doc.dimension,
                    found: row.len(),
                });
            }
            let mut out = Vec::with_capacity(doc.dimension);
            for (j, cell) in row.iter().enumerate() {
                out.push(cell.parse().map_err(|source| ParseError::Cell {
                    line: i + 1,
                    column: j + 1,
                    source,
                })?);
            }
            rows.push(out);
        }
        Ok(BasisFile {
            version: doc.version,
            dimension: doc.dimension,
            labels: doc.labels,
            rows,
        })
    }

    /// Canonical text serialization: reparsing yields the identical value,
    /// and serializing a parsed canonical file reproduces it byte for byte.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("l1basis v{}\n", self.version));
        out.push_str(&format!("n {}\n", self.dimension));
        if let Some(labels) = &self.labels {
            out.push_str(&format!("labels {}\n", labels.join(" ")));
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDoc {
            format: "l1basis".to_string(),
            version: self.version,
            dimension: self.dimension,
            labels: self.labels.clone(),
            entries: self
                .rows
                .iter()
                .map(|r| r.iter().map(Scalar::to_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("basis document serializes")
    }

    /// SHA-256 of the canonical text serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.serialize().as_bytes()))
    }
}
