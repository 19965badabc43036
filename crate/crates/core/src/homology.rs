//! The graded homology action: the family of integer matrices by which a map
//! acts on rational homology, validation of the main theorem's hypothesis
//! shape, and the JSON document format consumed by the CLI.

use crate::matrix::IntMatrix;
use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("document is not a JSON object")]
    NotAnObject,
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("field `{field}`: expected {expected}")]
    InvalidField {
        field: String,
        expected: &'static str,
    },
    #[error("field `h`: degree key `{0}` is not a non-negative integer")]
    InvalidDegreeKey(String),
    #[error("field `h.{degree}`: matrix is not square (row {row} has length {len})")]
    NonSquareMatrix { degree: usize, row: usize, len: usize },
    #[error("field `h.{degree}`: entry at row {row}, column {col} is not an integer")]
    NonIntegerEntry { degree: usize, row: usize, col: usize },
    #[error("field `h.0`: the degree-0 action on a connected manifold must be the 1x1 identity")]
    BadDegreeZero,
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Induced action on rational homology: one integer matrix per degree.
/// Degree 0 is always the 1x1 identity (connected manifold); degrees that
/// carry zero homology are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHomologyAction {
    degree_matrices: BTreeMap<usize, IntMatrix>,
}

impl GradedHomologyAction {
    /// Matrices by degree, degree 0 included. Absent degrees are zero
    /// homology groups (0x0 matrix, trace 0).
    pub fn degree_matrices(&self) -> &BTreeMap<usize, IntMatrix> {
        &self.degree_matrices
    }

    /// Dimension of the homology group in the given degree.
    pub fn dim(&self, degree: usize) -> usize {
        self.degree_matrices.get(&degree).map_or(0, IntMatrix::dim)
    }

    /// The matrix acting in the given degree (a 0x0 matrix when absent).
    pub fn matrix(&self, degree: usize) -> IntMatrix {
        self.degree_matrices
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(0))
    }

    /// The degree-1 action, the object of the classification theorem.
    pub fn degree_one(&self) -> IntMatrix {
        self.matrix(1)
    }

    /// Highest degree with a nonzero homology group.
    pub fn top_degree(&self) -> usize {
        *self.degree_matrices.keys().last().unwrap_or(&0)
    }

    /// The action induced by the e-th iterate: every matrix replaced by its
    /// e-th power.
    pub fn power(&self, e: u64) -> Self {
        Self {
            degree_matrices: self
                .degree_matrices
                .iter()
                .map(|(&k, m)| (k, m.pow(e)))
                .collect(),
        }
    }

    /// Convenience constructor for a single degree-1 matrix (the theorem's
    /// hypothesis shape).
    pub fn from_degree_one(m: IntMatrix) -> Self {
        let mut raw = BTreeMap::new();
        raw.insert(1usize, m.rows());
        validate_action(raw).expect("a bare degree-1 matrix is always a valid action")
    }
}

/// Report of the hypothesis check for the classification theorem: degree 0
/// acts by (1), degree 1 is n x n, everything above vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub satisfies_theorem_hypotheses: bool,
    pub h1_rank: usize,
    pub violations: Vec<String>,
}

/// Validate a degree-indexed family of integer matrices into an action.
/// Degree 0 defaults to (1) when absent and is rejected otherwise unless it
/// is exactly the 1x1 identity.
pub fn validate_action(
    raw: BTreeMap<usize, Vec<Vec<BigInt>>>,
) -> Result<GradedHomologyAction, HomologyError> {
    let mut degree_matrices = BTreeMap::new();
    for (degree, rows) in raw {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(HomologyError::NonSquareMatrix {
                    degree,
                    row: i,
                    len: row.len(),
                });
            }
        }
        let matrix = IntMatrix::new(n, rows.into_iter().flatten().collect());
        if degree == 0 && !matrix.is_identity() {
            return Err(HomologyError::BadDegreeZero);
        }
        if degree == 0 && n != 1 {
            return Err(HomologyError::BadDegreeZero);
        }
        if n > 0 {
            degree_matrices.insert(degree, matrix);
        }
    }
    degree_matrices
        .entry(0)
        .or_insert_with(|| IntMatrix::identity(1));
    Ok(GradedHomologyAction { degree_matrices })
}

/// Check the action against the hypotheses of the classification theorem.
pub fn hypothesis_shape(action: &GradedHomologyAction) -> ShapeReport {
    let mut violations = Vec::new();
    for (&degree, m) in action.degree_matrices() {
        if degree > 1 && m.dim() > 0 {
            violations.push(format!("H_{degree} nonzero (dimension {})", m.dim()));
        }
    }
    ShapeReport {
        satisfies_theorem_hypotheses: violations.is_empty(),
        h1_rank: action.dim(1),
        violations,
    }
}

/// A parsed input document: an optional name plus the validated action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDocument {
    pub name: Option<String>,
    pub action: GradedHomologyAction,
}

fn entry_from_value(v: &Value, degree: usize, row: usize, col: usize) -> Result<BigInt, HomologyError> {
    let err = || HomologyError::NonIntegerEntry { degree, row, col };
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(err())
            }
        }
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| err()),
        _ => Err(err()),
    }
}

/// Parse the external JSON document format:
/// `{ "name": string?, "h": { "<degree>": [[int, ...], ...], ... } }`.
/// Matrix entries are JSON numbers or decimal strings (required above the
/// 53-bit range).
pub fn parse_document(text: &str) -> Result<HomologyDocument, HomologyError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| HomologyError::Json(e.to_string()))?;
    document_from_value(&value)
}

/// Same as [`parse_document`], starting from an already-parsed JSON value.
pub fn document_from_value(value: &Value) -> Result<HomologyDocument, HomologyError> {
    let obj = value.as_object().ok_or(HomologyError::NotAnObject)?;
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => {
            return Err(HomologyError::InvalidField {
                field: "name".into(),
                expected: "a string",
            })
        }
    };
    let h = obj
        .get("h")
        .ok_or(HomologyError::MissingField("h"))?
        .as_object()
        .ok_or(HomologyError::InvalidField {
            field: "h".into(),
            expected: "an object mapping degrees to matrices",
        })?;
    let mut raw = BTreeMap::new();
    for (key, matrix_value) in h {
        let degree: usize = key
            .parse()
            .map_err(|_| HomologyError::InvalidDegreeKey(key.clone()))?;
        let rows_value = matrix_value
            .as_array()
            .ok_or(HomologyError::InvalidField {
                field: format!("h.{degree}"),
                expected: "an array of matrix rows",
            })?;
        let mut rows = Vec::with_capacity(rows_value.len());
        for (i, row_value) in rows_value.iter().enumerate() {
            let row_array = row_value.as_array().ok_or(HomologyError::InvalidField {
                field: format!("h.{degree}[{i}]"),
                expected: "an array of integers",
            })?;
            let mut row = Vec::with_capacity(row_array.len());
            for (j, entry) in row_array.iter().enumerate() {
                row.push(entry_from_value(entry, degree, i, j)?);
            }
            rows.push(row);
        }
        raw.insert(degree, rows);
    }
    let action = validate_action(raw)?;
    Ok(HomologyDocument { name, action })
}

/// Serialize an action (and optional name) back to the document format.
pub fn document_to_value(name: Option<&str>, action: &GradedHomologyAction) -> Value {
    let mut h = Map::new();
    for (degree, m) in action.degree_matrices() {
        let rows: Vec<Value> = m
            .rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(crate::report::bigint_to_json).collect()))
            .collect();
        h.insert(degree.to_string(), Value::Array(rows));
    }
    let mut doc = Map::new();
    if let Some(name) = name {
        doc.insert("name".into(), Value::String(name.into()));
    }
    doc.insert("h".into(), Value::Object(h));
    Value::Object(doc)
}
