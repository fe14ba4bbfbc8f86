//! Lie algebras given by rational structure constants.

mod algebra;
pub mod catalog;

pub use algebra::{LieAlgebra, Violation};

use thiserror::Error;

use crate::linalg::{LinalgError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("vector of length {found} in a {expected}-dimensional algebra")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not an ideal: [{basis}, w{member}] leaves it")]
    NotIdeal { basis: usize, member: usize },
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("representation matrix {index} is {rows}x{cols}, expected {m}x{m}")]
    BadRepresentation {
        index: usize,
        rows: usize,
        cols: usize,
        m: usize,
    },
    #[error("change-of-basis matrix is singular or has the wrong size")]
    SingularBasis,
    #[error("unknown catalog algebra {0:?}")]
    UnknownCatalog(String),
    #[error("bad catalog parameter: {0}")]
    BadParams(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Linear functional `F = Σ fᵢ xᵢ*` on an algebra, by its coordinates in the
/// dual basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualFunctional(pub Vec<Rational>);

impl DualFunctional {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `F(v)`.
    pub fn apply(&self, v: &[Rational]) -> Rational {
        crate::linalg::dot(&self.0, v)
    }
}

impl std::fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
