use std::collections::HashMap;

use num_traits::Zero;

use super::{MultiPoly, PolyError};
use crate::linalg::{Matrix, Rational};

/// Largest matrix accepted by [`poly_det`].
pub const MAX_DET_SIZE: usize = 8;

/// Dense matrix of polynomials sharing one variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self {
            rows,
            cols,
            nvars,
            entries: vec![MultiPoly::zero(nvars); rows * cols],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, nvars: usize, entries: Vec<MultiPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        assert!(entries.iter().all(|p| p.nvars() == nvars));
        Self {
            rows,
            cols,
            nvars,
            entries,
        }
    }

    /// Constant matrix viewed as polynomials in `nvars` variables.
    pub fn from_matrix(m: &Matrix, nvars: usize) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            nvars,
            entries: m
                .entries()
                .iter()
                .map(|c| MultiPoly::constant(nvars, c.clone()))
                .collect(),
        }
    }

    /// `Σ ζᵢ Aᵢ` with one variable `ζᵢ` per matrix.
    pub fn linear_combination(mats: &[Matrix]) -> Self {
        let s = mats.len();
        let (rows, cols) = mats.first().map_or((0, 0), |m| (m.rows(), m.cols()));
        let mut out = Self::zeros(rows, cols, s);
        for (v, m) in mats.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (rows, cols));
            let zeta = MultiPoly::var(s, v);
            for i in 0..rows {
                for j in 0..cols {
                    let c = &m[(i, j)];
                    if !c.is_zero() {
                        let e = &out.entries[i * cols + j] + &zeta.scale(c);
                        out.entries[i * cols + j] = e;
                    }
                }
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn evaluate(&self, point: &[Rational]) -> Matrix {
        Matrix::from_vec(
            self.rows,
            self.cols,
            self.entries.iter().map(|p| p.evaluate(point)).collect(),
        )
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        Self::from_entries(k, k, self.nvars, entries)
    }

    /// First position violating skew-symmetry, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in 0..=i {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew(&self) -> bool {
        self.skew_violation().is_none()
    }

    /// Applies `f` to every entry.
    pub fn map(&self, nvars: usize, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Self::from_entries(
            self.rows,
            self.cols,
            nvars,
            self.entries.iter().map(f).collect(),
        )
    }
}

/// Exact determinant by Laplace expansion memoized over column subsets.
pub fn poly_det(m: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    if m.rows != m.cols {
        return Err(PolyError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n > MAX_DET_SIZE {
        return Err(PolyError::SizeCap {
            size: n,
            cap: MAX_DET_SIZE,
        });
    }
    // partial[mask]: signed sum over injections of the first |mask| rows onto mask
    let mut partial: Vec<MultiPoly> = vec![MultiPoly::zero(m.nvars); 1 << n];
    partial[0] = MultiPoly::one(m.nvars);
    for mask in 0usize..(1 << n) {
        if partial[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let a = m.get(row, c);
            if a.is_zero() {
                continue;
            }
            let inversions = (mask >> (c + 1)).count_ones();
            let mut t = &partial[mask] * a;
            if inversions % 2 == 1 {
                t = -&t;
            }
            let next = mask | (1 << c);
            partial[next] = &partial[next] + &t;
        }
    }
    Ok(partial.pop().expect("table is never empty"))
}

/// Pfaffian of a skew-symmetric matrix, with `pf([[0, a], [-a, 0]]) = a`.
pub fn pfaffian(b: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    if b.rows != b.cols {
        return Err(PolyError::NotSquare {
            rows: b.rows,
            cols: b.cols,
        });
    }
    if !b.rows.is_multiple_of(2) {
        return Err(PolyError::OddSize(b.rows));
    }
    if let Some((row, col)) = b.skew_violation() {
        return Err(PolyError::NotSkew { row, col });
    }
    assert!(b.rows <= 64, "Pfaffian size limited to 64");
    let full: u64 = if b.rows == 64 {
        u64::MAX
    } else {
        (1u64 << b.rows) - 1
    };
    let mut memo = HashMap::new();
    Ok(pfaffian_rec(b, full, &mut memo))
}

fn pfaffian_rec(b: &PolyMatrix, set: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
    if set == 0 {
        return MultiPoly::one(b.nvars);
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = MultiPoly::zero(b.nvars);
    let mut pos = 0;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        pos += 1;
        let a = b.get(i, j);
        if a.is_zero() {
            continue;
        }
        let sub = pfaffian_rec(b, rest & !(1u64 << j), memo);
        if sub.is_zero() {
            continue;
        }
        let t = a * &sub;
        acc = if pos % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    memo.insert(set, acc.clone());
    acc
}

/// Rank over the rational function field, by fraction-free elimination with
/// full pivoting.
pub fn generic_rank(m: &PolyMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<MultiPoly>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut prev = MultiPoly::one(m.nvars);
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        // sparsest nonzero pivot keeps the intermediate minors small
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| (a[i][j].num_terms(), a[i][j].total_degree()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .checked_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[i][k] = MultiPoly::zero(m.nvars);
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    rank
}
