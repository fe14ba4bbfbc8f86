use num_traits::Zero;

use super::{
    add_scaled, is_zero_vec, rank_kernel_image, rref, unit_vector, LinalgError, Matrix, Rational,
};

/// A linear subspace of ℚⁿ stored canonically: the basis rows are the
/// nonzero rows of a reduced row-echelon matrix, so two subspaces are equal
/// exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of an arbitrary list of vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = Matrix::from_rows(ambient, vectors.to_vec());
        let (r, pivots) = rref(&m);
        let basis = Matrix::from_rows(ambient, (0..pivots.len()).map(|i| r.row_vec(i)).collect());
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, ascending. The matching standard
    /// vectors span a complement of `self`.
    pub fn free_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its component along the canonical basis; zero exactly when
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = -r[p].clone();
            add_scaled(&mut r, &c, self.basis.row(row));
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` is in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        self.basis.vec_mul(coords)
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other
            .basis
            .row_vectors()
            .iter()
            .all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Self::span(self.ambient, &vs))
    }

    /// Vectors `w` with `⟨u, w⟩ = 0` for every `u` in the subspace.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        rank_kernel_image(&self.basis).1
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Indices of the standard vectors chosen greedily (by index) to extend
    /// the basis of `self` to the whole ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut chosen = Vec::new();
        for i in 0..self.ambient {
            if current.is_full() {
                break;
            }
            let e = unit_vector(self.ambient, i);
            if !current.contains_vector(&e) {
                let mut vs = current.basis_vectors();
                vs.push(e);
                current = Self::span(self.ambient, &vs);
                chosen.push(i);
            }
        }
        chosen
    }

    /// Complement spanned by the greedily chosen standard vectors.
    pub fn complement(&self) -> Self {
        let vs: Vec<_> = self
            .complement_indices()
            .into_iter()
            .map(|i| unit_vector(self.ambient, i))
            .collect();
        Self::span(self.ambient, &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i)
    }

    #[test]
    fn sum_and_intersection() {
        let u = Subspace::span(3, &[e(3, 0)]);
        let v = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(u.sum(&v).unwrap(), Subspace::span(3, &[e(3, 0), e(3, 1)]));

        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(3, &[e(3, 1)]));
        assert!(a.contains(&Subspace::span(3, &[e(3, 1)])).unwrap());
        assert!(!a.contains(&b).unwrap());
        assert!(a.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn greedy_complement() {
        let u = Subspace::span(2, &[vec![rat(1), rat(1)]]);
        assert_eq!(u.complement_indices(), vec![0]);
        assert_eq!(u.free_indices(), vec![1]);
        let c = u.complement();
        assert!(u.intersect(&c).unwrap().is_zero());
        assert!(u.sum(&c).unwrap().is_full());
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let u = Subspace::span(
            3,
            &[vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(0), rat(1)]],
        );
        let v = vec![rat(3), rat(6), rat(-1)];
        let c = u.coordinates(&v).unwrap();
        assert_eq!(u.combine(&c), v);
        assert_eq!(u.coordinates(&e(3, 1)), None);
    }
}
