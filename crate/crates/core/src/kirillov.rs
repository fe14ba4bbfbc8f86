//! Kirillov forms, coadjoint-orbit dimensions and the MD decision.
//!
//! The orbit through `F` has dimension `rank B_F`, where `B_F(x, y) =
//! F([x, y])`. An algebra is MD when every nonzero rank is the same. The
//! decision here is three-valued: verification goes through the real zero
//! set of the principal Pfaffians, refutation through an explicit functional
//! of intermediate rank, and anything else is reported as undecided.

use crate::grid::{to_rationals, IntegerGrid};
use crate::lie::{DualFunctional, LieAlgebra};
use crate::linalg::{rank, unit_vector, Matrix, Rational, Subspace};
use crate::poly::{
    default_var_names, generic_rank, normal_form, pfaffian, radical_member, real_locus_refine,
    GroebnerBudget, MultiPoly, PolyError, PolyIdeal, PolyMatrix, RefinementRound,
};

/// Default sup-norm bound of the refutation grid.
pub const DEFAULT_GRID_BOUND: u64 = 3;

/// Refuse to enumerate more principal minors than this.
const MAX_PFAFFIANS: usize = 5_000;

/// Symbolic `n × n` matrix with entry `(i, j) = Σₖ c_{ij}^k fₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirillovMatrix(PolyMatrix);

impl KirillovMatrix {
    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn evaluate(&self, f: &DualFunctional) -> Matrix {
        self.0.evaluate(f.coords())
    }
}

pub fn kirillov_symbolic(g: &LieAlgebra) -> KirillovMatrix {
    let n = g.dim();
    let mut m = PolyMatrix::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = g.bracket_basis(i, j);
            if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                m.set(i, j, MultiPoly::linear(&v));
            }
        }
    }
    KirillovMatrix(m)
}

/// Numeric `B_F` with entries `F([xᵢ, xⱼ])`.
pub fn kirillov_numeric(g: &LieAlgebra, f: &DualFunctional) -> Matrix {
    let n = g.dim();
    assert_eq!(
        f.len(),
        n,
        "functional length must equal the algebra dimension"
    );
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = f.apply(&g.bracket_basis(i, j));
            b[(j, i)] = -x.clone();
            b[(i, j)] = x;
        }
    }
    b
}

/// `dim Ω_F = rank B_F`. Panics if `f` has the wrong length.
pub fn orbit_dim(g: &LieAlgebra, f: &DualFunctional) -> usize {
    rank(&kirillov_numeric(g, f))
}

/// Coordinates `k` with `c_{ij}^k ≠ 0` for some pair; `B_F` only depends on
/// these entries of `F`.
pub fn active_coordinates(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut active = vec![false; n];
    for (_, _, v) in g.nonzero_brackets() {
        for (k, x) in v.iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                active[k] = true;
            }
        }
    }
    (0..n).filter(|&k| active[k]).collect()
}

/// Grid functionals supported on the active coordinates, in search order.
/// Skipping inactive coordinates keeps the order-minimal point: zeroing an
/// inactive entry never changes the rank and never moves a point later.
fn functionals(g: &LieAlgebra, bound: Option<u64>) -> impl Iterator<Item = DualFunctional> + '_ {
    let active = active_coordinates(g);
    let n = g.dim();
    IntegerGrid::new(active.len(), bound).map(move |p| {
        let mut coords = vec![Rational::from_integer(0.into()); n];
        for (&k, x) in active.iter().zip(to_rationals(&p)) {
            coords[k] = x;
        }
        DualFunctional(coords)
    })
}

/// Generic orbit dimension with a functional attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericOrbit {
    pub k: usize,
    pub certificate: DualFunctional,
}

/// Symbolic rank of `B_F` in as few variables as possible. Rank does not
/// depend on the basis, and in the adapted basis only the dual coordinates
/// on `G¹` can occur.
fn symbolic_rank(g: &LieAlgebra) -> usize {
    let h = g
        .change_of_basis(&adapted_basis(g))
        .expect("adapted basis is invertible");
    let active = active_coordinates(&h);
    let mut map = vec![None; h.dim()];
    for (new, &old) in active.iter().enumerate() {
        map[old] = Some(new);
    }
    let b = kirillov_symbolic(&h)
        .matrix()
        .map(active.len(), |p| p.remap(active.len(), &map));
    generic_rank(&b)
}

/// Rank of the symbolic Kirillov matrix over the rational function field,
/// certified by the first grid functional of that rank.
pub fn generic_orbit_dim(g: &LieAlgebra) -> GenericOrbit {
    let k = symbolic_rank(g);
    // a nonzero k-minor misses some grid point, so this terminates
    let certificate = functionals(g, None)
        .find(|f| orbit_dim(g, f) == k)
        .expect("unbounded grid reaches the generic rank");
    GenericOrbit { k, certificate }
}

/// First grid functional with `0 < rank < k`.
pub fn witness_search(
    g: &LieAlgebra,
    k: usize,
    grid_bound: u64,
) -> Option<(DualFunctional, usize)> {
    if k <= 2 {
        return None;
    }
    functionals(g, Some(grid_bound))
        .map(|f| {
            let r = orbit_dim(g, &f);
            (f, r)
        })
        .find(|&(_, r)| r > 0 && r < k)
}

/// How a dual coordinate was shown to vanish on the refined real locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Member of the refined ideal.
    Ideal,
    /// Member of its radical, decided by the Rabinowitsch trick.
    Radical,
}

/// Why `Verified(k)` holds: every real common zero of the principal
/// `k`-Pfaffians vanishes on `G¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfaffianCertificate {
    /// Columns are the adapted basis: a complement of `G¹`, then `G¹`.
    pub adapted_basis: Matrix,
    /// Names of the dual coordinates on the `G¹` part.
    pub variables: Vec<String>,
    /// Principal `k`-Pfaffians in index-subset order, in those variables.
    pub pfaffians: Vec<MultiPoly>,
    pub rounds: Vec<RefinementRound>,
    /// Reduced basis of the refined ideal.
    pub refined: Vec<MultiPoly>,
    pub membership: Vec<Membership>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `[G², G²] ≠ 0`, impossible for an MD-algebra.
    DerivedObstruction,
    /// Two functionals with distinct positive orbit dimensions.
    Witness {
        low: DualFunctional,
        low_rank: usize,
        high: DualFunctional,
        high_rank: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MdVerdict {
    /// `G¹ = 0`: every orbit is a point.
    Commutative,
    Verified {
        k: usize,
        certificate: Box<PfaffianCertificate>,
    },
    Refuted(Refutation),
    NotSolvable,
    Undecided {
        k: Option<usize>,
        reason: String,
    },
}

impl MdVerdict {
    /// The generic orbit dimension when the verdict records it.
    pub fn k(&self) -> Option<usize> {
        match self {
            Self::Commutative => Some(0),
            Self::Verified { k, .. } => Some(*k),
            Self::Refuted(Refutation::Witness { high_rank, .. }) => Some(*high_rank),
            Self::Undecided { k, .. } => *k,
            _ => None,
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Self::Verified { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Self::Undecided { .. })
    }

    /// Short form such as `Verified k=4`, comparable across bases.
    pub fn summary(&self) -> String {
        match self {
            Self::Commutative => "Commutative".into(),
            Self::Verified { k, .. } => format!("Verified k={k}"),
            Self::Refuted(Refutation::DerivedObstruction) => {
                "Refuted (non-abelian second derived ideal)".into()
            }
            Self::Refuted(Refutation::Witness {
                low_rank,
                high_rank,
                ..
            }) => {
                format!("Refuted (orbit dimensions {low_rank} and {high_rank})")
            }
            Self::NotSolvable => "NotSolvable".into(),
            Self::Undecided { reason, .. } => format!("Undecided ({reason})"),
        }
    }

    /// Verdict kind and `k`, ignoring certificates and witnesses.
    pub fn kind(&self) -> (&'static str, Option<usize>) {
        let name = match self {
            Self::Commutative => "commutative",
            Self::Verified { .. } => "verified",
            Self::Refuted(_) => "refuted",
            Self::NotSolvable => "not_solvable",
            Self::Undecided { .. } => "undecided",
        };
        (name, self.k())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MdOptions {
    pub grid_bound: u64,
    pub budget: GroebnerBudget,
}

impl Default for MdOptions {
    fn default() -> Self {
        Self {
            grid_bound: DEFAULT_GRID_BOUND,
            budget: GroebnerBudget::default(),
        }
    }
}

/// Basis matrix (as columns) with a complement of `G¹` first and the
/// canonical basis of `G¹` last.
pub fn adapted_basis(g: &LieAlgebra) -> Matrix {
    let g1 = g.derived(1);
    let mut cols: Vec<Vec<Rational>> = g1
        .free_indices()
        .into_iter()
        .map(|i| unit_vector(g.dim(), i))
        .collect();
    cols.extend(g1.basis_vectors());
    Matrix::from_columns(g.dim(), &cols)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

enum CertifyOutcome {
    Certified(Box<PfaffianCertificate>),
    Failed(String),
}

fn budget_reason(e: PolyError) -> String {
    match e {
        PolyError::Budget(s) => format!("Gröbner budget exceeded: {s}"),
        other => other.to_string(),
    }
}

fn certify(g: &LieAlgebra, k: usize, budget: &GroebnerBudget) -> Result<CertifyOutcome, PolyError> {
    let n = g.dim();
    let m = g.derived(1).dim();
    let basis = adapted_basis(g);
    let adapted = g
        .change_of_basis(&basis)
        .expect("adapted basis is nonsingular");
    if binomial(n, k) > MAX_PFAFFIANS {
        return Ok(CertifyOutcome::Failed(format!(
            "{} principal Pfaffians exceed the limit of {MAX_PFAFFIANS}",
            binomial(n, k)
        )));
    }
    // brackets land in the trailing G¹ block, so only the last m dual
    // coordinates occur
    let map: Vec<Option<usize>> = (0..n).map(|i| i.checked_sub(n - m)).collect();
    let sym = kirillov_symbolic(&adapted)
        .matrix()
        .map(m, |p| p.remap(m, &map));
    let names = default_var_names(n)[n - m..].to_vec();
    let pfaffians: Vec<MultiPoly> = combinations(n, k)
        .iter()
        .map(|idx| pfaffian(&sym.principal_submatrix(idx)).expect("principal blocks are skew"))
        .collect();
    let ideal = PolyIdeal::new(m, pfaffians.clone());
    let refinement = real_locus_refine(&ideal, budget)?;
    let refined = refinement.output.generators().to_vec();
    let mut membership = Vec::with_capacity(m);
    for v in 0..m {
        let x = MultiPoly::var(m, v);
        if normal_form(&x, &refined).is_zero() {
            membership.push(Membership::Ideal);
        } else if radical_member(&x, &refinement.output, budget)? {
            membership.push(Membership::Radical);
        } else {
            return Ok(CertifyOutcome::Failed(format!(
                "refined Pfaffian ideal does not force {} = 0 on the real locus",
                names[v]
            )));
        }
    }
    Ok(CertifyOutcome::Certified(Box::new(PfaffianCertificate {
        adapted_basis: basis,
        variables: names,
        pfaffians,
        rounds: refinement.rounds,
        refined,
        membership,
    })))
}

/// The MD decision with the default grid bound and budget.
pub fn md_check(g: &LieAlgebra) -> MdVerdict {
    md_check_with(g, &MdOptions::default())
}

pub fn md_check_with(g: &LieAlgebra, opts: &MdOptions) -> MdVerdict {
    if !g.is_solvable() {
        return MdVerdict::NotSolvable;
    }
    let g1 = g.derived(1);
    if g1.is_zero() {
        return MdVerdict::Commutative;
    }
    let g2 = g.derived(2);
    if !g.bracket_span(&g2, &g2).is_zero() {
        return MdVerdict::Refuted(Refutation::DerivedObstruction);
    }
    let GenericOrbit {
        k,
        certificate: high,
    } = generic_orbit_dim(g);
    let failure = match certify(g, k, &opts.budget) {
        Ok(CertifyOutcome::Certified(certificate)) => {
            return MdVerdict::Verified { k, certificate }
        }
        Ok(CertifyOutcome::Failed(reason)) => reason,
        Err(e) => budget_reason(e),
    };
    if let Some((low, low_rank)) = witness_search(g, k, opts.grid_bound) {
        return MdVerdict::Refuted(Refutation::Witness {
            low,
            low_rank,
            high,
            high_rank: k,
        });
    }
    MdVerdict::Undecided {
        k: Some(k),
        reason: format!(
            "{failure}; no intermediate-rank functional with entries bounded by {}",
            opts.grid_bound
        ),
    }
}

/// Whether `f` vanishes on `G¹`.
pub fn annihilates_derived(g: &LieAlgebra, f: &DualFunctional) -> bool {
    let g1: Subspace = g.derived(1);
    g1.basis_vectors()
        .iter()
        .all(|v| num_traits::Zero::is_zero(&f.apply(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog::{abelian, aff_c, aff_r, heisenberg, s5_45};
    use crate::linalg::rat;

    fn functional(v: &[i64]) -> DualFunctional {
        DualFunctional(v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn symbolic_entries() {
        let g = s5_45();
        let b = kirillov_symbolic(&g);
        let e = MultiPoly::var(5, 4);
        assert_eq!(b.matrix().get(0, 4), &e.scale(&rat(2)));
        assert_eq!(b.matrix().get(2, 3), &e);
        assert!(b.matrix().is_skew());
        assert!(kirillov_symbolic(&abelian(3))
            .matrix()
            .entries()
            .iter()
            .all(MultiPoly::is_zero));
    }

    #[test]
    fn orbit_dimensions() {
        let g = s5_45();
        assert_eq!(orbit_dim(&g, &functional(&[0, 0, 0, 0, 1])), 4);
        assert_eq!(orbit_dim(&g, &functional(&[1, 0, 0, 0, 0])), 0);
        let h5 = heisenberg(2).unwrap();
        assert_eq!(orbit_dim(&h5, &functional(&[0, 0, 0, 0, 1])), 4);
        assert_eq!(generic_orbit_dim(&g).k, 4);
        assert_eq!(generic_orbit_dim(&abelian(4)).k, 0);
    }

    #[test]
    fn verdicts() {
        let v = md_check(&s5_45());
        assert_eq!(v.kind(), ("verified", Some(4)));
        if let MdVerdict::Verified { certificate, .. } = &v {
            assert_eq!(certificate.variables, vec!["c", "d", "e"]);
            assert_eq!(certificate.pfaffians.len(), 5);
        }
        assert_eq!(md_check(&abelian(4)), MdVerdict::Commutative);
        assert_eq!(
            md_check(&heisenberg(2).unwrap()).kind(),
            ("verified", Some(4))
        );
        assert_eq!(md_check(&aff_c()).kind(), ("verified", Some(4)));
        assert_eq!(md_check(&aff_r()).kind(), ("verified", Some(2)));
    }

    #[test]
    fn refutes_product_of_affine_lines() {
        let g = LieAlgebra::direct_sum(&aff_r(), &aff_r());
        match md_check(&g) {
            MdVerdict::Refuted(Refutation::Witness {
                low,
                low_rank,
                high,
                high_rank,
            }) => {
                assert_eq!((low_rank, high_rank), (2, 4));
                assert_eq!(low, functional(&[0, 1, 0, 0]));
                assert_eq!(high, functional(&[0, 1, 0, 1]));
                assert_eq!(orbit_dim(&g, &low), 2);
                assert_eq!(orbit_dim(&g, &high), 4);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 4).len(), 5);
        assert_eq!(combinations(6, 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(10, 6), 210);
    }
}
