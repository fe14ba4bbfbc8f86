use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{groebner, normal_form, GroebnerBudget, MultiPoly, PolyError, PolyIdeal};
use crate::linalg::{congruence_diagonalize, inverse, Matrix, Rational};

/// Decomposition `q = sign · Σ weights[i] · forms[i]²` with positive weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsdSplit {
    pub sign: i8,
    pub weights: Vec<Rational>,
    pub forms: Vec<MultiPoly>,
}

impl PsdSplit {
    pub fn reconstruct(&self) -> MultiPoly {
        let n = self.forms.first().map_or(0, MultiPoly::nvars);
        let mut acc = MultiPoly::zero(n);
        for (w, l) in self.weights.iter().zip(&self.forms) {
            acc = &acc + &(l * l).scale(w);
        }
        if self.sign < 0 {
            -&acc
        } else {
            acc
        }
    }
}

/// Splits a semidefinite quadratic form into a weighted sum of squares of
/// linear forms. Every real zero of `q` is then a common zero of the forms.
/// Returns `None` for indefinite forms.
pub fn psd_split(q: &MultiPoly) -> Result<Option<PsdSplit>, PolyError> {
    if q.is_zero() || !q.is_homogeneous() || q.total_degree() != Some(2) {
        return Err(PolyError::NotQuadratic);
    }
    let n = q.nvars();
    let mut gram = Matrix::zeros(n, n);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for (m, c) in q.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| m.exponents()[i] > 0).collect();
        match idx.as_slice() {
            [i] => gram[(*i, *i)] = c.clone(),
            [i, j] => {
                gram[(*i, *j)] = c * &half;
                gram[(*j, *i)] = c * &half;
            }
            _ => unreachable!("degree-2 monomial"),
        }
    }
    let (p, d) = congruence_diagonalize(&gram).expect("Gram matrix is symmetric");
    let diag: Vec<Rational> = (0..n).map(|i| d[(i, i)].clone()).collect();
    let positive = diag.iter().any(Signed::is_positive);
    let negative = diag.iter().any(Signed::is_negative);
    if positive && negative {
        return Ok(None);
    }
    let sign: i8 = if negative { -1 } else { 1 };
    // x = P y, so y = P⁻¹ x gives the linear forms
    let p_inv = inverse(&p).expect("congruence transform is nonsingular");
    let mut weights = Vec::new();
    let mut forms = Vec::new();
    for (i, w) in diag.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        weights.push(w.abs());
        forms.push(MultiPoly::linear(p_inv.row(i)));
    }
    Ok(Some(PsdSplit {
        sign,
        weights,
        forms,
    }))
}

fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let (n, d) = (c.numer(), c.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Exact square root with positive leading coefficient, if `p` is a square.
fn exact_sqrt(p: &MultiPoly) -> Option<MultiPoly> {
    let (lm, lc) = p.leading_term()?;
    let m0 = lm.sqrt()?;
    let c0 = rational_sqrt(lc)?;
    let two_c0 = &c0 * Rational::from_integer(BigInt::from(2));
    let mut root = MultiPoly::term(m0.clone(), c0);
    let mut rem = p - &(&root * &root);
    // every new term is strictly below m0, so the loop is finite; the cap
    // only guards against pathological input sizes
    for _ in 0..10_000 {
        let Some((m, c)) = rem.leading_term() else {
            return Some(root);
        };
        let t = m.checked_div(&m0)?;
        if t >= m0 {
            return None;
        }
        let term = MultiPoly::term(t, c / &two_c0);
        let correction =
            &(&root * &term).scale(&Rational::from_integer(BigInt::from(2))) + &(&term * &term);
        rem = &rem - &correction;
        root = &root + &term;
    }
    None
}

/// Returns `q` with `p = q^(2t)` for the largest such `t ≥ 1`, or `None` if
/// `p` is not a perfect square.
pub fn even_power_root(p: &MultiPoly) -> Option<MultiPoly> {
    if p.is_zero() {
        return None;
    }
    let mut root = exact_sqrt(p)?;
    while let Some(next) = exact_sqrt(&root) {
        if next.is_constant() && root.is_constant() && next == root {
            break;
        }
        root = next;
    }
    Some(root)
}

/// One pass of the refinement loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementRound {
    /// Reduced basis at the start of the round.
    pub basis: Vec<MultiPoly>,
    /// Polynomials adjoined in this round.
    pub extracted: Vec<MultiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub input: Vec<MultiPoly>,
    pub rounds: Vec<RefinementRound>,
    /// Reduced basis of the refined ideal.
    pub output: PolyIdeal,
}

const MAX_ROUNDS: usize = 32;

/// Enlarges `ideal` without shrinking its real zero set: semidefinite
/// quadratic forms are replaced by their square-root linear forms and even
/// powers by their roots, until nothing new appears.
pub fn real_locus_refine(
    ideal: &PolyIdeal,
    budget: &GroebnerBudget,
) -> Result<Refinement, PolyError> {
    let n = ideal.nvars();
    let input: Vec<MultiPoly> = ideal.generators().to_vec();
    let mut current = groebner(ideal, budget)?;
    let mut rounds = Vec::new();
    for _ in 0..MAX_ROUNDS {
        if current.is_unit() {
            break;
        }
        let linear: Vec<MultiPoly> = current
            .generators()
            .iter()
            .filter(|g| g.total_degree() == Some(1))
            .cloned()
            .collect();
        let mut candidates: Vec<MultiPoly> = current.generators().to_vec();
        for h in &input {
            let r = normal_form(h, &linear);
            if !r.is_zero() && !candidates.contains(&r.monic()) {
                candidates.push(r.monic());
            }
        }
        let mut extracted: Vec<MultiPoly> = Vec::new();
        let adjoin = |p: MultiPoly, extracted: &mut Vec<MultiPoly>| {
            let p = p.monic();
            if !normal_form(&p, current.generators()).is_zero() && !extracted.contains(&p) {
                extracted.push(p);
            }
        };
        for cand in &candidates {
            if cand.is_constant() {
                continue;
            }
            if cand.total_degree() == Some(2) && cand.is_homogeneous() {
                if let Some(split) = psd_split(cand)? {
                    for l in split.forms {
                        adjoin(l, &mut extracted);
                    }
                }
            }
            if let Some(root) = even_power_root(&cand.monic()) {
                adjoin(root, &mut extracted);
            }
        }
        if extracted.is_empty() {
            break;
        }
        rounds.push(RefinementRound {
            basis: current.generators().to_vec(),
            extracted: extracted.clone(),
        });
        let mut gens = current.generators().to_vec();
        gens.extend(extracted);
        current = groebner(&PolyIdeal::new(n, gens), budget)?;
    }
    Ok(Refinement {
        input,
        rounds,
        output: current,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::poly::ideal_member;

    fn v(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn psd_examples() {
        let (c, d) = (v(2, 0), v(2, 1));
        let q = &(&c * &c) + &(&d * &d);
        let split = psd_split(&q).unwrap().unwrap();
        assert_eq!(split.forms, vec![c.clone(), d.clone()]);
        assert_eq!(split.reconstruct(), q);

        assert_eq!(psd_split(&(&(&c * &c) - &(&d * &d))).unwrap(), None);

        let e = v(1, 0);
        let split = psd_split(&(&e * &e)).unwrap().unwrap();
        assert_eq!(split.forms, vec![e.clone()]);

        let neg = -&(&(&c + &d) * &(&c + &d));
        let split = psd_split(&neg).unwrap().unwrap();
        assert_eq!(split.sign, -1);
        assert_eq!(split.reconstruct(), neg);

        assert_eq!(psd_split(&c), Err(PolyError::NotQuadratic));
        assert_eq!(psd_split(&(&c * &c).pow(2)), Err(PolyError::NotQuadratic));
    }

    #[test]
    fn even_power_root_examples() {
        let e = v(1, 0);
        assert_eq!(even_power_root(&(&e * &e)), Some(e.clone()));

        let (c, d) = (v(2, 0), v(2, 1));
        let s = &c + &d;
        assert_eq!(even_power_root(&s.pow(4)), Some(s.clone()));
        assert_eq!(even_power_root(&(&c * &d)), None);
        // e^3 is not an even power
        assert_eq!(even_power_root(&e.pow(3)), None);
        let t = &(&c * &c) - &d;
        assert_eq!(even_power_root(&t.pow(2)), Some(t.clone()));
        assert_eq!(even_power_root(&(&e * &e).scale(&rat(2))), None);
    }

    #[test]
    fn refine_s545_pfaffian_ideal() {
        // variables c, d, e (dual coordinates on y1, y2, z)
        let (c, d, e) = (v(3, 0), v(3, 1), v(3, 2));
        let ideal = PolyIdeal::new(
            3,
            [
                &(&c * &c) + &(&d * &d),
                &c * &e,
                &d * &e,
                &e * &e,
                MultiPoly::zero(3),
            ],
        );
        let budget = GroebnerBudget::default();
        let r = real_locus_refine(&ideal, &budget).unwrap();
        for x in [&c, &d, &e] {
            assert!(ideal_member(x, &r.output, &budget).unwrap());
        }
        for g in ideal.generators() {
            assert!(ideal_member(g, &r.output, &budget).unwrap());
        }
    }

    #[test]
    fn refine_trivial_cases() {
        let budget = GroebnerBudget::default();
        let e = v(1, 0);
        let r = real_locus_refine(&PolyIdeal::new(1, [&e * &e]), &budget).unwrap();
        assert_eq!(r.output.generators(), std::slice::from_ref(&e));

        let (c, d) = (v(2, 0), v(2, 1));
        let q = &(&c * &c) - &(&d * &d);
        let r = real_locus_refine(&PolyIdeal::new(2, [q.clone()]), &budget).unwrap();
        assert_eq!(r.output.generators(), &[q]);
        assert!(r.rounds.is_empty());
    }

    #[test]
    fn refine_uses_substituted_remainders() {
        // c^2 + d^2 - e^2 is indefinite, but modulo e it is positive definite
        let (c, d, e) = (v(3, 0), v(3, 1), v(3, 2));
        let q = &(&(&c * &c) + &(&d * &d)) - &(&e * &e);
        let budget = GroebnerBudget::default();
        let r = real_locus_refine(&PolyIdeal::new(3, [q, e.clone()]), &budget).unwrap();
        assert!(ideal_member(&c, &r.output, &budget).unwrap());
        assert!(ideal_member(&d, &r.output, &budget).unwrap());
    }
}
