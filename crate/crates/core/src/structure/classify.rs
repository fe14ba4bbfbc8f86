use std::fmt;

use num_traits::Zero;

use super::{span_invertibility, strip_trivial_center, structure_report, Step};
use crate::kirillov::{md_check_with, MdOptions, MdVerdict};
use crate::lie::catalog::heisenberg;
use crate::lie::LieAlgebra;
use crate::linalg::{dot, LinalgError, Matrix, Rational};

/// `Pᵀ B P` in canonical form: `rank / 2` blocks `[[0, 1], [-1, 0]]`, then
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Darboux {
    pub p: Matrix,
    pub rank: usize,
}

/// Symplectic Gram–Schmidt on a skew form.
pub fn darboux_basis(b: &Matrix) -> Result<Darboux, LinalgError> {
    if !b.is_square() {
        return Err(LinalgError::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    let n = b.rows();
    for i in 0..n {
        for j in 0..=i {
            if b[(i, j)] != -b[(j, i)].clone() {
                return Err(LinalgError::NotSkew { row: i, col: j });
            }
        }
    }
    let omega = |u: &[Rational], v: &[Rational]| dot(u, &b.mul_vec(v));
    let mut pool: Vec<Vec<Rational>> = (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    loop {
        let pair = (0..pool.len())
            .flat_map(|i| (i + 1..pool.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !omega(&pool[i], &pool[j]).is_zero());
        let Some((i, j)) = pair else { break };
        let w = omega(&pool[i], &pool[j]);
        let e = pool[i].clone();
        let f: Vec<Rational> = pool[j].iter().map(|x| x / &w).collect();
        pool.remove(j);
        pool.remove(i);
        for v in pool.iter_mut() {
            // v - ω(v, f) e + ω(v, e) f annihilates both e and f
            let (a, c) = (omega(v, &f), omega(v, &e));
            for (k, x) in v.iter_mut().enumerate() {
                *x += &c * &f[k] - &a * &e[k];
            }
        }
        cols.push(e);
        cols.push(f);
    }
    let rank = cols.len();
    cols.extend(pool);
    Ok(Darboux {
        p: Matrix::from_columns(n, &cols),
        rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    Heisenberg(usize),
    S545,
    AffRPlusR,
    AffCPlusR,
    NotInClass(String),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Heisenberg(m) => write!(f, "heisenberg({m})"),
            Self::S545 => f.write_str("s5_45"),
            Self::AffRPlusR => f.write_str("aff_r_plus_r"),
            Self::AffCPlusR => f.write_str("aff_c_plus_r"),
            Self::NotInClass(reason) => write!(f, "not_in_class({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: ClassLabel,
    /// Columns form a basis in which `G` has the catalog table exactly.
    pub isomorphism: Option<Matrix>,
}

impl Classification {
    fn bare(label: ClassLabel) -> Self {
        Self {
            label,
            isomorphism: None,
        }
    }

    fn not_in_class(reason: impl Into<String>) -> Self {
        Self::bare(ClassLabel::NotInClass(reason.into()))
    }
}

/// Basis `x₁…x_m, y₁…y_m, z` realizing `[xᵢ, yᵢ] = z` when `G¹` is a
/// central line.
fn heisenberg_isomorphism(g: &LieAlgebra) -> Option<(usize, Matrix)> {
    let n = g.dim();
    let g1 = g.derived(1);
    let z = g1.basis_vectors().pop()?;
    if g1.dim() != 1 || !g.center().contains_vector(&z) || n.is_multiple_of(2) {
        return None;
    }
    let free = g1.free_indices();
    let q = free.len();
    // ω(uₐ, u_b) is the G¹-coordinate of [uₐ, u_b]
    let mut form = Matrix::zeros(q, q);
    for a in 0..q {
        for b in 0..q {
            form[(a, b)] = g1.coordinates(&g.bracket_basis(free[a], free[b]))?[0].clone();
        }
    }
    let d = darboux_basis(&form).ok()?;
    if d.rank != q {
        return None;
    }
    let m = q / 2;
    let lift = |col: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        for (a, &i) in free.iter().enumerate() {
            v[i] = d.p[(a, col)].clone();
        }
        v
    };
    let mut cols: Vec<Vec<Rational>> = (0..m).map(|i| lift(2 * i)).collect();
    cols.extend((0..m).map(|i| lift(2 * i + 1)));
    cols.push(z);
    let p = Matrix::from_columns(n, &cols);
    let target = heisenberg(m).ok()?;
    let transported = g.change_of_basis(&p).ok()?;
    (transported.constants() == target.constants()).then_some((m, p))
}

/// Places an algebra whose nontrivial orbits have codimension one.
pub fn classify_codim1(g: &LieAlgebra, opts: &MdOptions) -> Classification {
    let n = g.dim();
    let verdict = md_check_with(g, opts);
    let k = match &verdict {
        MdVerdict::Verified { k, .. } => *k,
        other => return Classification::not_in_class(format!("md verdict {}", other.summary())),
    };
    if k + 1 != n {
        return Classification::not_in_class(format!("orbit codimension {} ≠ 1", n - k));
    }
    let stripped = strip_trivial_center(g);
    if stripped.removed > 0 {
        let core = &stripped.core;
        let core_verdict = md_check_with(core, opts);
        if core_verdict.k() != Some(core.dim()) || !core_verdict.is_verified() {
            return Classification::not_in_class("core is not an SMD-algebra");
        }
        return match core.dim() {
            2 => Classification::bare(ClassLabel::AffRPlusR),
            4 => {
                let rep = structure_report(core, Some(&core_verdict));
                let span_ok = span_invertibility(core).is_ok_and(|s| s.is_verified());
                if rep.step == Step::One
                    && rep.m == 2
                    && rep.center_dim == 0
                    && rep.r == 2
                    && span_ok
                {
                    Classification::bare(ClassLabel::AffCPlusR)
                } else {
                    Classification::not_in_class("core fingerprint differs from aff(C)")
                }
            }
            d => Classification::not_in_class(format!("core of dimension {d}")),
        };
    }
    let rep = structure_report(g, Some(&verdict));
    if rep.m == 1 {
        return match heisenberg_isomorphism(g) {
            Some((m, p)) => Classification {
                label: ClassLabel::Heisenberg(m),
                isomorphism: Some(p),
            },
            None => {
                Classification::not_in_class("one-dimensional G¹ without Heisenberg normal form")
            }
        };
    }
    match rep.step {
        Step::One => Classification::not_in_class("case2_excluded"),
        _ if n == 5 && rep.m == 3 && rep.p == 1 && rep.center_dim == 0 && rep.k == 4 => {
            Classification::bare(ClassLabel::S545)
        }
        _ => Classification::not_in_class("fingerprint matches no catalog entry"),
    }
}
