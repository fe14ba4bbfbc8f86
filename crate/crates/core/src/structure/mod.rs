//! Structure theory of MD-algebras as executable checks: necessary
//! conditions, trivial central factors, ad-span invariants, semidirect
//! decompositions and the codimension-one classification.

mod classify;
mod semidirect;

pub use classify::{classify_codim1, darboux_basis, ClassLabel, Classification, Darboux};
pub use semidirect::{
    nonsingular_combination, regular_element, semidirect_decomposition, span_invertibility,
    sum_of_images, Combination, RegularElement, SemidirectDecomposition, SpanInvertibility,
    SpanWitness,
};

use std::fmt;

use thiserror::Error;

use crate::kirillov::{generic_orbit_dim, md_check_with, MdOptions, MdVerdict};
use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{rank, unit_vector, Matrix, Rational, Subspace};
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the first derived ideal is not abelian")]
    DerivedNotAbelian,
    #[error("no element acts invertibly on the first derived ideal")]
    NoRegularElement,
    #[error("complement vectors {0} and {1} still bracket nontrivially after correction")]
    ComplementNotAbelian(usize, usize),
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("matrix family is empty or not square")]
    BadFamily,
    #[error("MD verification required, got {0}")]
    NotVerified(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Failure of the necessary conditions for the MD property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    NotSolvable,
    /// `[G², G²] ≠ 0`.
    SecondDerivedNotAbelian,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSolvable => f.write_str("not solvable"),
            Self::SecondDerivedNotAbelian => f.write_str("second derived ideal is not abelian"),
        }
    }
}

pub fn md_necessary(g: &LieAlgebra) -> Result<(), Obstruction> {
    if !g.is_solvable() {
        return Err(Obstruction::NotSolvable);
    }
    let g2 = g.derived(2);
    if !g.bracket_span(&g2, &g2).is_zero() {
        return Err(Obstruction::SecondDerivedNotAbelian);
    }
    Ok(())
}

/// `G ≅ core ⊕ ℝʳ` with `Z(core) ⊆ core¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedCenter {
    pub core: LieAlgebra,
    /// Number `r` of central directions removed.
    pub removed: usize,
    /// Canonical basis of the core inside `G`.
    pub core_span: Subspace,
    /// The removed central directions.
    pub central: Subspace,
}

/// Splits off a maximal central subspace meeting `G¹` trivially.
pub fn strip_trivial_center(g: &LieAlgebra) -> StrippedCenter {
    let n = g.dim();
    let g1 = g.derived(1);
    let z = g.center();
    let z1 = z.intersect(&g1).expect("same ambient space");
    // central directions outside G¹, greedily in canonical-basis order
    let mut acc = z1;
    let mut central = Vec::new();
    for v in z.basis_vectors() {
        if !acc.contains_vector(&v) {
            central.push(v.clone());
            acc = acc.sum(&Subspace::span(n, &[v])).unwrap();
        }
    }
    let central = Subspace::span(n, &central);
    // complement of the central part that contains G¹; any such subspace is
    // an ideal commuting with the central part
    let mut filled = g1.sum(&central).unwrap();
    let mut core_vectors = g1.basis_vectors();
    for i in 0..n {
        let e = unit_vector(n, i);
        if !filled.contains_vector(&e) {
            filled = filled
                .sum(&Subspace::span(n, std::slice::from_ref(&e)))
                .unwrap();
            core_vectors.push(e);
        }
    }
    let core_span = Subspace::span(n, &core_vectors);
    let labels = core_span
        .pivots()
        .iter()
        .map(|&p| g.labels()[p].clone())
        .collect();
    let core = g
        .restrict(&core_span, labels)
        .expect("same ambient space")
        .expect("subspace containing G¹ is a subalgebra");
    StrippedCenter {
        core,
        removed: central.dim(),
        core_span,
        central,
    }
}

/// Solvability step: the least `i` with `Gⁱ` abelian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Commutative,
    One,
    Two,
    Higher(usize),
    NotSolvable,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Commutative => f.write_str("0"),
            Self::One => f.write_str("1"),
            Self::Two => f.write_str("2"),
            Self::Higher(i) => write!(f, "{i}"),
            Self::NotSolvable => f.write_str("not solvable"),
        }
    }
}

pub fn solvability_step(g: &LieAlgebra) -> Step {
    if !g.is_solvable() {
        return Step::NotSolvable;
    }
    let series = g.derived_series();
    let i = series
        .iter()
        .position(|w| g.bracket_span(w, w).is_zero())
        .expect("solvable series ends at zero");
    match i {
        0 => Step::Commutative,
        1 => Step::One,
        2 => Step::Two,
        i => Step::Higher(i),
    }
}

/// Matrices `ad¹_{xᵢ}` on `G¹` in its canonical basis, one per basis vector.
pub fn restricted_adjoints(g: &LieAlgebra) -> Vec<Matrix> {
    let g1 = g.derived(1);
    (0..g.dim())
        .map(|i| {
            g.ad_restricted(&unit_vector(g.dim(), i), &g1)
                .expect("G¹ is an ideal")
        })
        .collect()
}

/// `dim span{ad¹_x : x ∈ G}`.
pub fn ad_span_rank(g: &LieAlgebra) -> usize {
    let mats = restricted_adjoints(g);
    let m = g.derived(1).dim();
    if m == 0 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = mats.iter().map(|a| a.entries().to_vec()).collect();
    rank(&Matrix::from_rows(m * m, rows))
}

/// Whether `dim G¹ > n − k`, the hypothesis under which a 1-step MD-algebra
/// has `Σ im ad¹ = G¹`, a regular element and a semidirect splitting.
pub fn regular_hypothesis(g: &LieAlgebra, k: usize) -> bool {
    g.derived(1).dim() + k > g.dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub n: usize,
    /// `dim G¹`.
    pub m: usize,
    /// `dim G²`.
    pub p: usize,
    /// Generic orbit dimension.
    pub k: usize,
    /// `dim span{ad¹_x}`.
    pub r: usize,
    pub center_dim: usize,
    /// `Z(G) ⊄ G¹`, i.e. a trivial central factor splits off.
    pub decomposable: bool,
    pub step: Step,
    /// `k ≤ 2r ≤ 2(n − m)`, evaluated for 1-step algebras with a verified
    /// MD property.
    pub rank_bounds: Option<bool>,
}

impl StructureReport {
    /// The inequality chain as text, e.g. `4 ≤ 4 ≤ 4`.
    pub fn inequality_chain(&self) -> String {
        format!("{} ≤ {} ≤ {}", self.k, 2 * self.r, 2 * (self.n - self.m))
    }
}

/// Structure invariants; `verdict` enables the rank-bound check.
pub fn structure_report(g: &LieAlgebra, verdict: Option<&MdVerdict>) -> StructureReport {
    let n = g.dim();
    let g1 = g.derived(1);
    let (m, p) = (g1.dim(), g.derived(2).dim());
    let k = generic_orbit_dim(g).k;
    let r = ad_span_rank(g);
    let z = g.center();
    let step = solvability_step(g);
    let rank_bounds = match (step, verdict) {
        (Step::One, Some(v)) if v.is_verified() => Some(k <= 2 * r && r <= n - m),
        _ => None,
    };
    StructureReport {
        n,
        m,
        p,
        k,
        r,
        center_dim: z.dim(),
        decomposable: !g1.contains(&z).expect("same ambient space"),
        step,
        rank_bounds,
    }
}

/// `dim G² ≤ n − k` and the MD check of `G/G²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCheck {
    pub p: usize,
    pub n: usize,
    pub k: usize,
    pub bound_ok: bool,
    pub quotient: LieAlgebra,
    pub quotient_verdict: MdVerdict,
}

pub fn theorem3_check(g: &LieAlgebra, opts: &MdOptions) -> Result<QuotientCheck, StructureError> {
    let verdict = md_check_with(g, opts);
    let MdVerdict::Verified { k, .. } = verdict else {
        return Err(StructureError::NotVerified(verdict.summary()));
    };
    let g2 = g.derived(2);
    let (quotient, _) = g.quotient(&g2)?;
    let quotient_verdict = md_check_with(&quotient, opts);
    let (n, p) = (g.dim(), g2.dim());
    Ok(QuotientCheck {
        p,
        n,
        k,
        bound_ok: p + k <= n,
        quotient,
        quotient_verdict,
    })
}
