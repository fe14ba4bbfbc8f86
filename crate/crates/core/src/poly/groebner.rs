use std::collections::BTreeSet;

use super::{MultiPoly, PolyError};

/// Resource limits for Buchberger's algorithm. Exceeding any of them yields
/// [`PolyError::Budget`], never a wrong answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_vars: usize,
    pub max_degree: u32,
    /// Cap on S-polynomial reductions.
    pub max_reductions: usize,
    /// Cap on the size of the intermediate basis.
    pub max_basis: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        Self {
            max_vars: 6,
            max_degree: 6,
            max_reductions: 20_000,
            max_basis: 400,
        }
    }
}

impl GroebnerBudget {
    /// Budget for an ideal with one adjoined variable.
    fn widened(self) -> Self {
        Self {
            max_vars: self.max_vars + 1,
            max_degree: self.max_degree + 1,
            ..self
        }
    }
}

/// Ideal of `ℚ[x₀, …]` given by nonzero generators, always under grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal {
    nvars: usize,
    generators: Vec<MultiPoly>,
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = MultiPoly>) -> Self {
        let generators = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator variable count"))
            .filter(|g| !g.is_zero())
            .collect();
        Self { nvars, generators }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators
            .iter()
            .any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn groebner(&self, budget: &GroebnerBudget) -> Result<PolyIdeal, PolyError> {
        groebner(self, budget)
    }
}

/// Full normal form of `f` modulo `basis` (every term reduced).
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        let reducer = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            m.checked_div(lm).map(|q| (g, q, &c / lc))
        });
        match reducer {
            Some((g, q, k)) => p = &p - &g.mul_term(&q, &k),
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.checked_div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&l.checked_div(gm).unwrap(), &gc.recip());
    &a - &b
}

fn check_budget(ideal: &PolyIdeal, budget: &GroebnerBudget) -> Result<(), PolyError> {
    if ideal.nvars > budget.max_vars {
        return Err(PolyError::Budget(format!(
            "{} variables exceed the limit of {}",
            ideal.nvars, budget.max_vars
        )));
    }
    if let Some(d) = ideal
        .generators
        .iter()
        .filter_map(MultiPoly::total_degree)
        .max()
    {
        if d > budget.max_degree {
            return Err(PolyError::Budget(format!(
                "generator degree {d} exceeds the limit of {}",
                budget.max_degree
            )));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis under grevlex (Buchberger, with the coprime and
/// chain criteria for discarding pairs). Generators come back monic and
/// sorted by ascending leading monomial.
pub fn groebner(ideal: &PolyIdeal, budget: &GroebnerBudget) -> Result<PolyIdeal, PolyError> {
    check_budget(ideal, budget)?;
    let n = ideal.nvars;
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in &ideal.generators {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.iter().any(MultiPoly::is_constant) {
        return Ok(PolyIdeal::new(n, [MultiPoly::one(n)]));
    }
    let lm = |b: &[MultiPoly], i: usize| b[i].leading_monomial().unwrap().clone();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut reductions = 0;
    while !pending.is_empty() {
        // normal strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                lm(&basis, a.0)
                    .lcm(&lm(&basis, a.1))
                    .cmp(&lm(&basis, b.0).lcm(&lm(&basis, b.1)))
                    .then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (mi, mj) = (lm(&basis, i), lm(&basis, j));
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > budget.max_reductions {
            return Err(PolyError::Budget(format!(
                "more than {} S-polynomial reductions",
                budget.max_reductions
            )));
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(PolyIdeal::new(n, [MultiPoly::one(n)]));
        }
        if basis.len() >= budget.max_basis {
            return Err(PolyError::Budget(format!(
                "basis grew beyond {} elements",
                budget.max_basis
            )));
        }
        let new = basis.len();
        basis.push(r.monic());
        for k in 0..new {
            pending.insert((k, new));
        }
    }
    Ok(PolyIdeal {
        nvars: n,
        generators: reduce_basis(basis),
    })
}

fn reduce_basis(basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != idx && hm.divides(m) && (hm != m || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let g = &minimal[idx];
        let (m, c) = g.leading_term().unwrap();
        let mut tail = g.clone();
        tail.add_term(m.clone(), -c.clone());
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let mut r = normal_form(&tail, &others);
        r.add_term(m.clone(), c.clone());
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// `f ∈ I`, decided by a zero normal form modulo the reduced basis.
pub fn ideal_member(
    f: &MultiPoly,
    ideal: &PolyIdeal,
    budget: &GroebnerBudget,
) -> Result<bool, PolyError> {
    let gb = groebner(ideal, budget)?;
    Ok(normal_form(f, &gb.generators).is_zero())
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 − t·f)` with a fresh variable `t`.
pub fn radical_member(
    f: &MultiPoly,
    ideal: &PolyIdeal,
    budget: &GroebnerBudget,
) -> Result<bool, PolyError> {
    let n = ideal.nvars;
    if f.is_zero() {
        return Ok(true);
    }
    let t = MultiPoly::var(n + 1, n);
    let one = MultiPoly::one(n + 1);
    let mut gens: Vec<MultiPoly> = ideal
        .generators
        .iter()
        .map(|g| g.with_nvars(n + 1))
        .collect();
    gens.push(&one - &(&t * &f.with_nvars(n + 1)));
    let extended = PolyIdeal::new(n + 1, gens);
    Ok(groebner(&extended, &budget.widened())?.is_unit())
}
