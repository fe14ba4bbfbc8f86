use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use super::LieError;
use crate::linalg::{
    add_scaled, inverse, is_zero_vec, rank_kernel_image, unit_vector, Matrix, Rational, Subspace,
};

/// A failed structural identity, with the indices involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c_{ij}^k + c_{ji}^k ≠ 0`.
    Skew {
        i: usize,
        j: usize,
        k: usize,
        defect: Rational,
    },
    /// Component `l` of the cyclic sum `[xᵢ,[xⱼ,xₖ]] + [xⱼ,[xₖ,xᵢ]] + [xₖ,[xᵢ,xⱼ]]`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        defect: Rational,
    },
}

impl Violation {
    /// Renders with basis labels instead of indices.
    pub fn describe(&self, labels: &[String]) -> String {
        match self {
            Self::Skew { i, j, k, defect } => format!(
                "skew-symmetry violation at ({}, {}) component {}: c_ij + c_ji = {defect}",
                labels[*i], labels[*j], labels[*k]
            ),
            Self::Jacobi { i, j, k, l, defect } => format!(
                "Jacobi violation at ({}, {}, {}) component {}: defect {defect}",
                labels[*i], labels[*j], labels[*k], labels[*l]
            ),
        }
    }
}

/// Structure constants `[xᵢ, xⱼ] = Σₖ c_{ij}^k xₖ`, stored densely with
/// both orientations of every pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rational>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LieAlgebra({}; {})",
            self.labels.join(", "),
            self.bracket_table()
        )
    }
}

fn check_labels(labels: &[String], expected: usize) -> Result<(), LieError> {
    if labels.len() != expected {
        return Err(LieError::LabelCount {
            expected,
            found: labels.len(),
        });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(LieError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl LieAlgebra {
    /// Dense tensor indexed `(i·n + j)·n + k`. Nothing is validated beyond
    /// sizes; call [`LieAlgebra::validate`].
    pub fn from_dense(labels: Vec<String>, c: Vec<Rational>) -> Result<Self, LieError> {
        let dim = labels.len();
        check_labels(&labels, dim)?;
        if c.len() != dim * dim * dim {
            return Err(LieError::DimensionMismatch {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        Ok(Self { dim, labels, c })
    }

    /// Builds the skew completion of the listed brackets `(i, j, [xᵢ, xⱼ])`;
    /// unlisted pairs bracket to zero.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut g = Self::from_dense(labels, vec![Rational::zero(); n * n * n])?;
        for (i, j, v) in brackets {
            if *i >= n || *j >= n || v.len() != n {
                return Err(LieError::DimensionMismatch {
                    expected: n,
                    found: v.len().max(i + 1).max(j + 1),
                });
            }
            for (k, x) in v.iter().enumerate() {
                let a = g.idx(*i, *j, k);
                let b = g.idx(*j, *i, k);
                g.c[a] = x.clone();
                g.c[b] = -x.clone();
            }
        }
        Ok(g)
    }

    /// Same as [`LieAlgebra::from_brackets`] with labelled integer entries,
    /// e.g. `("x", "y", &[("z", 1)])`.
    pub fn from_table(
        labels: &[&str],
        table: &[(&str, &str, &[(&str, i64)])],
    ) -> Result<Self, LieError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let find = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| LieError::UnknownLabel(s.to_string()))
        };
        let n = labels.len();
        let mut brackets = Vec::new();
        for (a, b, terms) in table {
            let mut v = vec![Rational::zero(); n];
            for (t, coeff) in terms.iter() {
                v[find(t)?] += Rational::from_integer((*coeff).into());
            }
            brackets.push((find(a)?, find(b)?, v));
        }
        Self::from_brackets(labels, &brackets)
    }

    /// Abelian algebra on the given labels.
    pub fn abelian_on(labels: Vec<String>) -> Result<Self, LieError> {
        Self::from_brackets(labels, &[])
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LieError> {
        check_labels(&labels, self.dim)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    /// `[xᵢ, xⱼ]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = self.idx(i, j, 0);
        self.c[start..start + self.dim].to_vec()
    }

    /// `[u, v]` for arbitrary coordinate vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let start = self.idx(i, j, 0);
                add_scaled(&mut out, &(a * b), &self.c[start..start + self.dim]);
            }
        }
        out
    }

    /// Nonzero brackets `[xᵢ, xⱼ]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_basis(i, j);
                if !is_zero_vec(&v) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Human-readable bracket list such as `[x, y] = z, [x, z] = 2*y`.
    pub fn bracket_table(&self) -> String {
        let parts: Vec<String> = self
            .nonzero_brackets()
            .iter()
            .map(|(i, j, v)| {
                format!(
                    "[{}, {}] = {}",
                    self.labels[*i],
                    self.labels[*j],
                    self.format_vector(v)
                )
            })
            .collect();
        if parts.is_empty() {
            "abelian".to_string()
        } else {
            parts.join(", ")
        }
    }

    /// Linear combination of basis labels, e.g. `y1 - 1/2*z`.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        let mut out = String::new();
        for (k, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let neg = x < &Rational::zero();
            let mag = if neg { -x.clone() } else { x.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != num_traits::One::one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.labels[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// All skew-symmetry and Jacobi defects; empty exactly when the table
    /// defines a Lie algebra.
    pub fn violations(&self) -> Vec<Violation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let defect = &self.c[self.idx(i, j, k)] + &self.c[self.idx(j, i, k)];
                    if !defect.is_zero() {
                        out.push(Violation::Skew { i, j, k, defect });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
                    let mut sum = self.bracket(&ei, &self.bracket_basis(j, k));
                    let t2 = self.bracket(&ej, &self.bracket_basis(k, i));
                    let t3 = self.bracket(&ek, &self.bracket_basis(i, j));
                    for l in 0..n {
                        sum[l] += &t2[l] + &t3[l];
                    }
                    for (l, defect) in sum.into_iter().enumerate() {
                        if !defect.is_zero() {
                            out.push(Violation::Jacobi { i, j, k, l, defect });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Matrix of `ad_x` in the standard basis: column j is `[x, xⱼ]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| self.bracket(x, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// `ad_{xᵢ}` for each basis vector.
    pub fn ad_basis(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.ad_matrix(&unit_vector(self.dim, i)))
            .collect()
    }

    fn check_vector(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, w: &Subspace) -> Result<(), LieError> {
        if w.ambient_dim() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: w.ambient_dim(),
            });
        }
        Ok(())
    }

    /// First `(basis index, member index)` with `[xᵢ, wⱼ] ∉ W`.
    fn ideal_failure(&self, w: &Subspace) -> Option<(usize, usize)> {
        let ws = w.basis_vectors();
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            for (j, v) in ws.iter().enumerate() {
                if !w.contains_vector(&self.bracket(&e, v)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, w: &Subspace) -> bool {
        w.ambient_dim() == self.dim && self.ideal_failure(w).is_none()
    }

    /// Matrix of `ad_x` restricted to the ideal `W`, in `W`'s canonical basis.
    pub fn ad_restricted(&self, x: &[Rational], w: &Subspace) -> Result<Matrix, LieError> {
        self.check_vector(x)?;
        self.check_subspace(w)?;
        if let Some((basis, member)) = self.ideal_failure(w) {
            return Err(LieError::NotIdeal { basis, member });
        }
        let cols: Vec<Vec<Rational>> = w
            .basis_vectors()
            .iter()
            .map(|v| w.coordinates(&self.bracket(x, v)).expect("W is an ideal"))
            .collect();
        Ok(Matrix::from_columns(w.dim(), &cols))
    }

    /// `[U, V]`, the span of brackets of basis pairs.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let (us, vs) = (u.basis_vectors(), v.basis_vectors());
        let mut out = Vec::new();
        for a in &us {
            for b in &vs {
                let br = self.bracket(a, b);
                if !is_zero_vec(&br) {
                    out.push(br);
                }
            }
        }
        Subspace::span(self.dim, &out)
    }

    /// `[G⁰ = G, G¹, G², …]`, stopping at `{0}` or when a term repeats.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        // strictly decreasing until it stabilizes, so dim + 1 terms suffice
        for _ in 0..self.dim {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `Gⁱ`, which is `{0}` past the end of a terminating series.
    pub fn derived(&self, i: usize) -> Subspace {
        let s = self.derived_series();
        match s.get(i) {
            Some(w) => w.clone(),
            None if s.last().unwrap().is_zero() => Subspace::zero(self.dim),
            None => s.last().unwrap().clone(),
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // v is central iff Σᵢ vᵢ c_{ij}^k = 0 for all (j, k)
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.c[self.idx(i, j, k)].clone()).collect());
            }
        }
        if n == 0 {
            return Subspace::zero(0);
        }
        rank_kernel_image(&Matrix::from_rows(n, rows)).1
    }

    /// `G/W` in the complement basis given by the standard vectors at the
    /// non-pivot coordinates of `W`, with the projection matrix.
    pub fn quotient(&self, w: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        self.check_subspace(w)?;
        if let Some((basis, member)) = self.ideal_failure(w) {
            return Err(LieError::NotIdeal { basis, member });
        }
        let free = w.free_indices();
        let q = free.len();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = w.reduce(v);
            free.iter().map(|&i| r[i].clone()).collect()
        };
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| project(&unit_vector(self.dim, j)))
            .collect();
        let projection = Matrix::from_columns(q, &cols);
        let mut brackets = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let v = project(&self.bracket_basis(free[a], free[b]));
                if !is_zero_vec(&v) {
                    brackets.push((a, b, v));
                }
            }
        }
        let labels = free.iter().map(|&i| self.labels[i].clone()).collect();
        Ok((LieAlgebra::from_brackets(labels, &brackets)?, projection))
    }

    /// `A ⊕ B` with zero cross brackets. Clashing labels of `B` get primes.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let (na, nb) = (a.dim, b.dim);
        let n = na + nb;
        let mut labels = a.labels.clone();
        for l in &b.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let mut c = vec![Rational::zero(); n * n * n];
        let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for i in 0..na {
            for j in 0..na {
                for k in 0..na {
                    c[at(i, j, k)] = a.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                for k in 0..nb {
                    c[at(na + i, na + j, na + k)] = b.structure_constant(i, j, k).clone();
                }
            }
        }
        LieAlgebra::from_dense(labels, c).expect("labels made unique")
    }

    /// `ℝʳ ⊕_ρ ℝᵐ` with `[xᵢ, wⱼ] = ρ(xᵢ)·wⱼ`, both summands abelian.
    /// Labels are `x, y` for single generators, else `x1…`, `y1…`.
    pub fn semidirect_sum(r: usize, m: usize, rho: &[Matrix]) -> Result<LieAlgebra, LieError> {
        if rho.len() != r {
            return Err(LieError::LabelCount {
                expected: r,
                found: rho.len(),
            });
        }
        for (index, a) in rho.iter().enumerate() {
            if a.rows() != m || a.cols() != m {
                return Err(LieError::BadRepresentation {
                    index,
                    rows: a.rows(),
                    cols: a.cols(),
                    m,
                });
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                if !rho[i].commutator(&rho[j]).is_zero() {
                    return Err(LieError::NonCommuting(i, j));
                }
            }
        }
        let names = |p: &str, count: usize| -> Vec<String> {
            if count == 1 {
                vec![p.to_string()]
            } else {
                (1..=count).map(|i| format!("{p}{i}")).collect()
            }
        };
        let mut labels = names("x", r);
        labels.extend(names("y", m));
        let n = r + m;
        let mut brackets = Vec::new();
        for (i, a) in rho.iter().enumerate() {
            for j in 0..m {
                let mut v = vec![Rational::zero(); n];
                for (k, x) in a.column(j).into_iter().enumerate() {
                    v[r + k] = x;
                }
                if !is_zero_vec(&v) {
                    brackets.push((i, r + j, v));
                }
            }
        }
        LieAlgebra::from_brackets(labels, &brackets)
    }

    /// Structure constants in the basis formed by the columns of `p`:
    /// `[bₐ, b_b]` expressed through `p⁻¹`. Labels are kept.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(LieError::SingularBasis);
        }
        let p_inv = inverse(p).map_err(|_| LieError::SingularBasis)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut brackets = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let v = p_inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                if !is_zero_vec(&v) {
                    brackets.push((a, b, v));
                }
            }
        }
        LieAlgebra::from_brackets(self.labels.clone(), &brackets)
    }

    /// Subalgebra structure on a subspace closed under brackets, in its
    /// canonical basis. `None` if the subspace is not closed.
    pub fn restrict(
        &self,
        w: &Subspace,
        labels: Vec<String>,
    ) -> Result<Option<LieAlgebra>, LieError> {
        self.check_subspace(w)?;
        let ws = w.basis_vectors();
        let mut brackets = Vec::new();
        for a in 0..ws.len() {
            for b in a + 1..ws.len() {
                let Some(v) = w.coordinates(&self.bracket(&ws[a], &ws[b])) else {
                    return Ok(None);
                };
                if !is_zero_vec(&v) {
                    brackets.push((a, b, v));
                }
            }
        }
        LieAlgebra::from_brackets(labels, &brackets).map(Some)
    }
}
