use num_traits::{One, Zero};

use super::{restricted_adjoints, StructureError};
use crate::grid::{to_rationals, IntegerGrid};
use crate::lie::LieAlgebra;
use crate::linalg::{
    det_bareiss, is_zero_vec, rat, solve_linear, unit_vector, Matrix, Rational, Subspace,
};
use crate::poly::{
    isolate_real_roots, poly_det, sturm_real_roots, MultiPoly, PolyError, PolyMatrix,
};

fn require_one_step(g: &LieAlgebra) -> Result<Subspace, StructureError> {
    let g1 = g.derived(1);
    if !g.bracket_span(&g1, &g1).is_zero() {
        return Err(StructureError::DerivedNotAbelian);
    }
    Ok(g1)
}

/// `Σᵢ [xᵢ, G¹]`, a subspace of `G¹`.
pub fn sum_of_images(g: &LieAlgebra) -> Result<Subspace, StructureError> {
    let g1 = require_one_step(g)?;
    let full = Subspace::full(g.dim());
    Ok(g.bracket_span(&full, &g1))
}

/// Coefficients `α` with `det(Σ αᵢ Aᵢ) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    pub coeffs: Vec<Rational>,
    pub det: Rational,
    /// `D(ζ) = det(Σ ζᵢ Aᵢ)`.
    pub det_poly: MultiPoly,
}

fn check_family(mats: &[Matrix]) -> Result<usize, StructureError> {
    let first = mats.first().ok_or(StructureError::BadFamily)?;
    let m = first.rows();
    if mats.iter().any(|a| a.rows() != m || a.cols() != m) {
        return Err(StructureError::BadFamily);
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutator(&mats[j]).is_zero() {
                return Err(StructureError::NonCommuting(i, j));
            }
        }
    }
    Ok(m)
}

fn combine(mats: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let m = mats[0].rows();
    mats.iter()
        .zip(coeffs)
        .fold(Matrix::zeros(m, m), |acc, (a, c)| &acc + &a.scale(c))
}

/// First grid point (in the crate's search order) where the determinant of
/// the combination is nonzero; `None` exactly when that determinant vanishes
/// identically.
pub fn nonsingular_combination(mats: &[Matrix]) -> Result<Option<Combination>, StructureError> {
    check_family(mats)?;
    let det_poly = poly_det(&PolyMatrix::linear_combination(mats))?;
    if det_poly.is_zero() {
        return Ok(None);
    }
    // a nonzero polynomial does not vanish on the whole grid, so this ends
    let (coeffs, det) = IntegerGrid::unbounded(mats.len())
        .map(|p| to_rationals(&p))
        .map(|c| {
            let d = det_poly.evaluate(&c);
            (c, d)
        })
        .find(|(_, d)| !d.is_zero())
        .expect("nonzero polynomial has a non-root on the grid");
    debug_assert_eq!(det_bareiss(&combine(mats, &coeffs)), det);
    Ok(Some(Combination {
        coeffs,
        det,
        det_poly,
    }))
}

/// Element of a complement of `G¹` whose adjoint is invertible on `G¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularElement {
    pub x: Vec<Rational>,
    /// Combination of the complement basis `e_j`, `j` the free indices of `G¹`.
    pub combination: Combination,
}

pub fn regular_element(g: &LieAlgebra) -> Result<Option<RegularElement>, StructureError> {
    let g1 = require_one_step(g)?;
    if g1.is_zero() {
        return Ok(None);
    }
    let free = g1.free_indices();
    if free.is_empty() {
        return Ok(None);
    }
    let ads = restricted_adjoints(g);
    let family: Vec<Matrix> = free.iter().map(|&i| ads[i].clone()).collect();
    let Some(combination) = nonsingular_combination(&family)? else {
        return Ok(None);
    };
    let mut x = vec![Rational::zero(); g.dim()];
    for (&i, c) in free.iter().zip(&combination.coeffs) {
        x[i] = c.clone();
    }
    let ad = g.ad_restricted(&x, &g1)?;
    assert!(
        !det_bareiss(&ad).is_zero(),
        "regular element must act invertibly"
    );
    Ok(Some(RegularElement { x, combination }))
}

/// `G = L ⊕_ρ G¹` with `L` abelian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectDecomposition {
    /// Basis of the abelian complement `L`, regular element first.
    pub complement: Vec<Vec<Rational>>,
    /// Canonical basis of `G¹`.
    pub ideal: Vec<Vec<Rational>>,
    /// `ad¹` of each complement vector in the ideal basis.
    pub rho: Vec<Matrix>,
}

impl SemidirectDecomposition {
    /// Columns: complement vectors, then the ideal basis.
    pub fn basis(&self) -> Matrix {
        let n = self
            .complement
            .first()
            .or(self.ideal.first())
            .map_or(0, Vec::len);
        let cols: Vec<Vec<Rational>> = self.complement.iter().chain(&self.ideal).cloned().collect();
        Matrix::from_columns(n, &cols)
    }

    /// The semidirect sum built from `rho`.
    pub fn reconstruct(&self) -> LieAlgebra {
        LieAlgebra::semidirect_sum(self.complement.len(), self.ideal.len(), &self.rho)
            .expect("rho commutes by construction")
    }
}

pub fn semidirect_decomposition(g: &LieAlgebra) -> Result<SemidirectDecomposition, StructureError> {
    let g1 = require_one_step(g)?;
    let n = g.dim();
    let reg = regular_element(g)?.ok_or(StructureError::NoRegularElement)?;
    let free = g1.free_indices();
    let ad_x = g.ad_restricted(&reg.x, &g1)?;
    // the regular element replaces the first complement vector it involves
    let pivot = free
        .iter()
        .position(|&i| !reg.x[i].is_zero())
        .expect("regular element lies outside G¹");
    let mut complement = vec![reg.x.clone()];
    for (pos, &i) in free.iter().enumerate() {
        if pos == pivot {
            continue;
        }
        let u = unit_vector(n, i);
        let target: Vec<Rational> = g1
            .coordinates(&g.bracket(&reg.x, &u))
            .expect("brackets lie in G¹")
            .into_iter()
            .map(|c| -c)
            .collect();
        let v = solve_linear(&ad_x, &target)
            .expect("sizes agree")
            .expect("ad¹ of the regular element is invertible");
        let shift = g1.combine(&v);
        complement.push(u.iter().zip(&shift).map(|(a, b)| a + b).collect());
    }
    for i in 0..complement.len() {
        for j in i + 1..complement.len() {
            if !is_zero_vec(&g.bracket(&complement[i], &complement[j])) {
                return Err(StructureError::ComplementNotAbelian(i, j));
            }
        }
    }
    let rho = complement
        .iter()
        .map(|u| g.ad_restricted(u, &g1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SemidirectDecomposition {
        complement,
        ideal: g1.basis_vectors(),
        rho,
    })
}

/// Combination of the ad-span basis that fails to be invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanWitness {
    Point(Vec<Rational>),
    /// `(1, t)` is singular for one irrational `t ∈ (lo, hi]`.
    Interval {
        lo: Rational,
        hi: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanInvertibility {
    Verified {
        r: usize,
        det_poly: Option<MultiPoly>,
        /// Real roots of `D(1, t)` when `r = 2`.
        real_roots: Option<usize>,
    },
    Refuted {
        r: usize,
        /// Span basis: indices of basis elements whose `ad¹` were used.
        span_basis: Vec<usize>,
        witness: SpanWitness,
    },
    Undecided {
        r: usize,
        reason: String,
    },
}

impl SpanInvertibility {
    pub fn is_verified(&self) -> bool {
        matches!(self, Self::Verified { .. })
    }
}

/// Basis elements whose `ad¹` form a basis of the span, by greedy rank.
fn span_basis(mats: &[Matrix]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, a) in mats.iter().enumerate() {
        let mut trial = rows.clone();
        trial.push(a.entries().to_vec());
        let width = a.entries().len();
        if crate::linalg::rank(&Matrix::from_rows(width, trial.clone())) > rows.len() {
            rows = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Whether every nonzero element of `span{ad¹_x}` is invertible on `G¹`.
pub fn span_invertibility(g: &LieAlgebra) -> Result<SpanInvertibility, StructureError> {
    let g1 = require_one_step(g)?;
    if g1.is_zero() {
        return Ok(SpanInvertibility::Verified {
            r: 0,
            det_poly: None,
            real_roots: None,
        });
    }
    let ads = restricted_adjoints(g);
    let basis = span_basis(&ads);
    let family: Vec<Matrix> = basis.iter().map(|&i| ads[i].clone()).collect();
    let r = family.len();
    let refuted = |witness| SpanInvertibility::Refuted {
        r,
        span_basis: basis.clone(),
        witness,
    };
    if r == 0 {
        return Ok(SpanInvertibility::Verified {
            r,
            det_poly: None,
            real_roots: None,
        });
    }
    let det_poly = match poly_det(&PolyMatrix::linear_combination(&family)) {
        Ok(d) => d,
        Err(PolyError::SizeCap { size, cap }) => {
            return Ok(SpanInvertibility::Undecided {
                r,
                reason: format!("determinant of size {size} exceeds the cap {cap}"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    match r {
        1 => {
            if det_poly.is_zero() {
                Ok(refuted(SpanWitness::Point(vec![rat(1)])))
            } else {
                Ok(SpanInvertibility::Verified {
                    r,
                    det_poly: Some(det_poly),
                    real_roots: None,
                })
            }
        }
        2 => {
            // D(1, t) in a one-variable ring
            let t = MultiPoly::var(1, 0);
            let dehom = det_poly.compose(&[MultiPoly::one(1), t]);
            if dehom.is_zero() {
                return Ok(refuted(SpanWitness::Point(vec![rat(1), rat(0)])));
            }
            let roots = sturm_real_roots(&dehom)?;
            if roots > 0 {
                let iv = isolate_real_roots(&dehom)?
                    .into_iter()
                    .next()
                    .expect("counted root");
                let witness = match iv.exact {
                    Some(t0) => SpanWitness::Point(vec![Rational::one(), t0]),
                    None => SpanWitness::Interval {
                        lo: iv.lo,
                        hi: iv.hi,
                    },
                };
                return Ok(refuted(witness));
            }
            if det_poly.evaluate(&[rat(0), rat(1)]).is_zero() {
                return Ok(refuted(SpanWitness::Point(vec![rat(0), rat(1)])));
            }
            Ok(SpanInvertibility::Verified {
                r,
                det_poly: Some(det_poly),
                real_roots: Some(0),
            })
        }
        _ => {
            let hit = IntegerGrid::bounded(r, 3)
                .skip(1)
                .map(|p| to_rationals(&p))
                .find(|p| det_poly.evaluate(p).is_zero());
            match hit {
                Some(p) => Ok(refuted(SpanWitness::Point(p))),
                None => Ok(SpanInvertibility::Undecided {
                    r,
                    reason: "no singular combination with entries bounded by 3".into(),
                }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog::{abelian, aff_c, aff_r, heisenberg};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn images() {
        let g = aff_c();
        assert_eq!(sum_of_images(&g).unwrap(), g.derived(1));
        assert!(sum_of_images(&abelian(3)).unwrap().is_zero());
        let g = LieAlgebra::semidirect_sum(1, 2, &[m(&[&[1, 0], &[0, 0]])]).unwrap();
        assert_eq!(sum_of_images(&g).unwrap(), g.derived(1));
        assert_eq!(g.derived(1).dim(), 1);
    }

    #[test]
    fn combinations() {
        let c = nonsingular_combination(&[m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])])
            .unwrap()
            .unwrap();
        assert_eq!((c.coeffs, c.det), (vec![rat(1), rat(1)], rat(1)));
        let c = nonsingular_combination(&[m(&[&[0, 1], &[0, 0]]), Matrix::identity(2)])
            .unwrap()
            .unwrap();
        assert_eq!(c.coeffs, vec![rat(0), rat(1)]);
        assert_eq!(
            nonsingular_combination(&[m(&[&[0, 1], &[0, 0]])]).unwrap(),
            None
        );
        assert_eq!(
            nonsingular_combination(&[m(&[&[1, 0], &[0, 0]]), m(&[&[0, 1], &[0, 0]])]),
            Err(StructureError::NonCommuting(0, 1))
        );
    }

    #[test]
    fn regular_elements() {
        let x = regular_element(&aff_c()).unwrap().unwrap().x;
        assert_eq!(x, unit_vector(4, 0));
        assert_eq!(
            regular_element(&aff_r()).unwrap().unwrap().x,
            unit_vector(2, 0)
        );
        assert_eq!(regular_element(&heisenberg(1).unwrap()).unwrap(), None);
    }

    #[test]
    fn decomposition_of_sheared_aff_c() {
        let p = m(&[&[1, 0, 0, 0], &[2, 1, 0, 0], &[-1, 3, 1, 0], &[1, 1, 2, 1]]);
        let g = aff_c().change_of_basis(&p).unwrap();
        let d = semidirect_decomposition(&g).unwrap();
        let basis = d.basis();
        let transported = g.change_of_basis(&basis).unwrap();
        assert_eq!(transported.constants(), d.reconstruct().constants());
        assert!(d.rho[0].commutator(&d.rho[1]).is_zero());
        assert!(matches!(
            semidirect_decomposition(&heisenberg(1).unwrap()),
            Err(StructureError::NoRegularElement)
        ));
    }

    #[test]
    fn span_checks() {
        match span_invertibility(&aff_c()).unwrap() {
            SpanInvertibility::Verified {
                r,
                real_roots,
                det_poly,
            } => {
                assert_eq!((r, real_roots), (2, Some(0)));
                let t = MultiPoly::var(1, 0);
                let dehom = det_poly.unwrap().compose(&[MultiPoly::one(1), t.clone()]);
                assert_eq!(dehom, &(&t * &t) + &MultiPoly::one(1));
            }
            other => panic!("{other:?}"),
        }
        let g = LieAlgebra::semidirect_sum(2, 2, &[m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])])
            .unwrap();
        match span_invertibility(&g).unwrap() {
            SpanInvertibility::Refuted { witness, .. } => {
                assert_eq!(witness, SpanWitness::Point(vec![rat(1), rat(0)]))
            }
            other => panic!("{other:?}"),
        }
        assert!(span_invertibility(&aff_r()).unwrap().is_verified());
    }
}
