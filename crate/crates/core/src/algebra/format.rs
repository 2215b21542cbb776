//! JSON algebra files.
//!
//! ```json
//! {"name":"Q","dim":1,"basis":["1"],"unit":["1"],"mult":[[["1"]]]}
//! ```
//!
//! Rationals are strings `-?digits(/digits)?` in lowest terms with a
//! positive denominator; other spellings are rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Algebra, ShapeError};
use crate::rational::{parse_canonical, Rational, RationalParseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{location}: {source}")]
    Rational {
        location: String,
        source: RationalParseError,
    },
    #[error("shape mismatch: {0}")]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        let render = |v: &[Rational]| v.iter().map(ToString::to_string).collect();
        AlgebraFile {
            name: a.name.clone(),
            dim: a.dim(),
            basis: a.basis.clone(),
            unit: render(&a.unit),
            mult: a
                .table
                .iter()
                .map(|row| row.iter().map(|v| render(v)).collect())
                .collect(),
        }
    }

    /// Parses the rationals and checks the shape; the algebra axioms are left
    /// to [`Algebra::validate`].
    pub fn to_algebra(&self) -> Result<Algebra, FormatError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(ShapeError::Length {
                what: "basis".into(),
                expected: n,
                found: self.basis.len(),
            }
            .into());
        }
        let parse = |location: String, s: &str| {
            parse_canonical(s).map_err(|source| FormatError::Rational { location, source })
        };
        let unit = self
            .unit
            .iter()
            .enumerate()
            .map(|(k, s)| parse(format!("unit[{k}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = Vec::with_capacity(self.mult.len());
        for (i, row) in self.mult.iter().enumerate() {
            let mut out_row = Vec::with_capacity(row.len());
            for (j, v) in row.iter().enumerate() {
                out_row.push(
                    v.iter()
                        .enumerate()
                        .map(|(k, s)| parse(format!("mult[{i}][{j}][{k}]"), s))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            table.push(out_row);
        }
        Ok(Algebra::new(
            self.name.clone(),
            self.basis.clone(),
            unit,
            table,
        )?)
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Compact JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

impl Algebra {
    pub fn to_json(&self) -> String {
        AlgebraFile::from_algebra(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Algebra, FormatError> {
        AlgebraFile::from_json(text)?.to_algebra()
    }
}
