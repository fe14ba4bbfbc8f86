//! The JSON algebra document.
//!
//! ```json
//! {"name": "h3", "dim": 3, "basis": ["x", "y", "z"],
//!  "brackets": {"x,y": {"z": "1"}}}
//! ```
//!
//! Only one orientation of each bracket is stored; the other follows by
//! skew-symmetry. Coefficients are rational strings such as `"-3/2"`;
//! bare JSON numbers are rejected.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{format_rational, parse_rational, Rational};

/// Errors raised while reading an algebra document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("dim is {dim} but {labels} basis labels are listed")]
    DimMismatch { dim: usize, labels: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {label:?} in bracket {key:?}")]
    UnknownLabel { key: String, label: String },
    #[error("bracket key {0:?} must have the form \"a,b\"")]
    BadKey(String),
    #[error("bracket {0:?} of a label with itself")]
    SelfBracket(String),
    #[error("duplicate bracket key {0:?}")]
    DuplicateKey(String),
    #[error("bracket key {key:?} mirrors {existing:?}; list one orientation only")]
    MirroredKey { key: String, existing: String },
    #[error("duplicate component {label:?} in bracket {key:?}")]
    DuplicateComponent { key: String, label: String },
    #[error("coefficient of {label:?} in bracket {key:?}: {message}")]
    BadCoefficient {
        key: String,
        label: String,
        message: String,
    },
    #[error("structure constants violate the Lie axioms: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Bracket entries in file order, duplicates preserved so they can be
/// diagnosed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketMap(pub Vec<(String, Vec<(String, Value)>)>);

struct EntriesVisitor;

impl<'de> Visitor<'de> for EntriesVisitor {
    type Value = Vec<(String, Value)>;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an object")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
        let mut out = Vec::new();
        while let Some((k, v)) = map.next_entry::<String, Value>()? {
            out.push((k, v));
        }
        Ok(out)
    }
}

/// Inner component map, keeping duplicates.
struct Components(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for Components {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(EntriesVisitor).map(Components)
    }
}

struct BracketVisitor;

impl<'de> Visitor<'de> for BracketVisitor {
    type Value = BracketMap;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an object mapping \"a,b\" to component objects")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<BracketMap, A::Error> {
        let mut out = Vec::new();
        while let Some((k, v)) = map.next_entry::<String, Components>()? {
            out.push((k, v.0));
        }
        Ok(BracketMap(out))
    }
}

impl<'de> Deserialize<'de> for BracketMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(BracketVisitor)
    }
}

struct Ordered<'a>(&'a [(String, Value)]);

impl Serialize for Ordered<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for BracketMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, &Ordered(v))?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: BracketMap,
}

fn coefficient(key: &str, label: &str, v: &Value) -> Result<Rational, DocumentError> {
    let bad = |message: String| DocumentError::BadCoefficient {
        key: key.to_string(),
        label: label.to_string(),
        message,
    };
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| bad(e.to_string())),
        Value::Number(n) => Err(bad(format!(
            "bare number {n}; write rationals as strings like \"3/2\""
        ))),
        other => Err(bad(format!("expected a rational string, found {other}"))),
    }
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Builds and validates the algebra.
    pub fn to_algebra(&self) -> Result<LieAlgebra, DocumentError> {
        if self.basis.len() != self.dim {
            return Err(DocumentError::DimMismatch {
                dim: self.dim,
                labels: self.basis.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in &self.basis {
            if !seen.insert(l.as_str()) {
                return Err(DocumentError::DuplicateLabel(l.clone()));
            }
        }
        let index = |key: &str, label: &str| {
            self.basis
                .iter()
                .position(|b| b == label)
                .ok_or_else(|| DocumentError::UnknownLabel {
                    key: key.to_string(),
                    label: label.to_string(),
                })
        };
        let n = self.dim;
        let mut pairs: Vec<((usize, usize), &str)> = Vec::new();
        let mut brackets = Vec::new();
        for (key, comps) in &self.brackets.0 {
            let parts: Vec<&str> = key.split(',').map(str::trim).collect();
            let [a, b] = parts.as_slice() else {
                return Err(DocumentError::BadKey(key.clone()));
            };
            let (i, j) = (index(key, a)?, index(key, b)?);
            if i == j {
                return Err(DocumentError::SelfBracket(key.clone()));
            }
            if pairs.iter().any(|(p, _)| *p == (i, j)) {
                return Err(DocumentError::DuplicateKey(key.clone()));
            }
            if let Some((_, existing)) = pairs.iter().find(|(p, _)| *p == (j, i)) {
                return Err(DocumentError::MirroredKey {
                    key: key.clone(),
                    existing: existing.to_string(),
                });
            }
            pairs.push(((i, j), key));
            let mut v = vec![Rational::from_integer(0.into()); n];
            let mut used = HashSet::new();
            for (label, value) in comps {
                let k = index(key, label)?;
                if !used.insert(k) {
                    return Err(DocumentError::DuplicateComponent {
                        key: key.clone(),
                        label: label.clone(),
                    });
                }
                v[k] = coefficient(key, label, value)?;
            }
            brackets.push((i, j, v));
        }
        let g = LieAlgebra::from_brackets(self.basis.clone(), &brackets)?;
        g.validate().map_err(|vs| {
            DocumentError::Invalid(vs.iter().map(|v| v.describe(g.labels())).collect())
        })?;
        Ok(g)
    }

    /// Document listing the nonzero brackets `[xᵢ, xⱼ]`, `i < j`.
    pub fn from_algebra(name: &str, g: &LieAlgebra) -> Self {
        let labels = g.labels();
        let brackets = g
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| {
                let comps = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                    .map(|(k, x)| (labels[k].clone(), Value::String(format_rational(x))))
                    .collect();
                (format!("{},{}", labels[i], labels[j]), comps)
            })
            .collect();
        Self {
            name: name.to_string(),
            dim: g.dim(),
            basis: labels.to_vec(),
            brackets: BracketMap(brackets),
        }
    }
}

/// Reads, parses and validates a document; returns its name and algebra.
pub fn parse_algebra_file(path: &Path) -> Result<(String, LieAlgebra), DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|e| DocumentError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_algebra_str(&text)
}

pub fn parse_algebra_str(text: &str) -> Result<(String, LieAlgebra), DocumentError> {
    let doc = AlgebraDocument::from_json(text)?;
    let g = doc.to_algebra()?;
    Ok((doc.name, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog::s5_45;

    #[test]
    fn round_trip() {
        let g = s5_45();
        let doc = AlgebraDocument::from_algebra("s5_45", &g);
        let (name, back) = parse_algebra_str(&doc.to_json()).unwrap();
        assert_eq!(name, "s5_45");
        assert_eq!(back, g);
        assert_eq!(doc.brackets.0.len(), 6);
    }

    #[test]
    fn rejects_bad_documents() {
        let base = |brackets: &str| {
            format!(r#"{{"name":"t","dim":3,"basis":["x","y","z"],"brackets":{brackets}}}"#)
        };
        let err = |b: &str| parse_algebra_str(&base(b)).unwrap_err();
        assert!(matches!(
            err(r#"{"x,y":{"z":"1"},"y,x":{"z":"-1"}}"#),
            DocumentError::MirroredKey { .. }
        ));
        assert!(matches!(
            err(r#"{"x,y":{"z":"1"},"x,y":{"z":"1"}}"#),
            DocumentError::DuplicateKey(_)
        ));
        assert!(matches!(
            err(r#"{"x,w":{"z":"1"}}"#),
            DocumentError::UnknownLabel { .. }
        ));
        assert!(matches!(
            err(r#"{"x,x":{"z":"1"}}"#),
            DocumentError::SelfBracket(_)
        ));
        assert!(matches!(
            err(r#"{"x,y":{"z":"1.5"}}"#),
            DocumentError::BadCoefficient { .. }
        ));
        assert!(matches!(
            err(r#"{"x,y":{"z":0.5}}"#),
            DocumentError::BadCoefficient { .. }
        ));
        assert!(matches!(
            err(r#"{"x,y":{"z":1}}"#),
            DocumentError::BadCoefficient { .. }
        ));
        assert!(matches!(
            err(r#"{"x":{"z":"1"}}"#),
            DocumentError::BadKey(_)
        ));
        let jacobi = err(r#"{"x,y":{"z":"1"},"y,z":{"x":"1"},"z,x":{"z":"-1"}}"#);
        match jacobi {
            DocumentError::Invalid(v) => assert!(v[0].contains("(x, y, z)")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_algebra_str("{"),
            Err(DocumentError::Json(_))
        ));
        assert!(matches!(
            parse_algebra_str(r#"{"name":"t","dim":2,"basis":["x"]}"#),
            Err(DocumentError::DimMismatch { .. })
        ));
    }
}
