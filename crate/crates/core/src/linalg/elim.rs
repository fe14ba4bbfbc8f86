use num_traits::{One, Zero};

use super::{LinalgError, Matrix, Rational, Subspace};

/// Reduced row-echelon form together with the ascending pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Rational>> = m.row_vectors();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        if !inv.is_one() {
            for x in a[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_rows(cols, a), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Rank, kernel (right null space) and image (column span) of `m`.
pub fn rank_kernel_image(m: &Matrix) -> (usize, Subspace, Subspace) {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    let kernel = Subspace::span(cols, &kernel);
    let image = Subspace::span(m.rows(), &m.transpose().row_vectors());
    (pivots.len(), kernel, image)
}

/// Some solution of `a * x = b`, with free variables set to zero, or `None`
/// when the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let cols = a.cols();
    let augmented = Matrix::from_rows(
        cols + 1,
        (0..a.rows())
            .map(|i| {
                let mut row = a.row_vec(i);
                row.push(b[i].clone());
                row
            })
            .collect(),
    );
    let (r, pivots) = rref(&augmented);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, cols)].clone();
    }
    Ok(Some(x))
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so integral inputs stay
/// integral throughout. Panics on non-square input.
pub fn det_bareiss(m: &Matrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut a = m.row_vectors();
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub fn inverse(m: &Matrix) -> Result<Matrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let augmented = Matrix::from_rows(
        2 * n,
        (0..n)
            .map(|i| {
                let mut row = m.row_vec(i);
                row.extend(super::unit_vector(n, i));
                row
            })
            .collect(),
    );
    let (r, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(LinalgError::Singular);
    }
    Ok(Matrix::from_rows(
        n,
        (0..n).map(|i| r.row(i)[n..].to_vec()).collect(),
    ))
}

/// Symmetric Gaussian elimination: returns `(P, D)` with `Pᵀ S P = D`
/// diagonal and `P` nonsingular.
pub fn congruence_diagonalize(s: &Matrix) -> Result<(Matrix, Matrix), LinalgError> {
    if !s.is_square() {
        return Err(LinalgError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let n = s.rows();
    for i in 0..n {
        for j in 0..i {
            if s[(i, j)] != s[(j, i)] {
                return Err(LinalgError::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a = s.clone();
    let mut p = Matrix::identity(n);

    // column `dst += c * column src` on P, and the matching congruence on A
    let add_multiple = |a: &mut Matrix, p: &mut Matrix, src: usize, dst: usize, c: &Rational| {
        for i in 0..n {
            let v = &a[(i, src)] * c;
            a[(i, dst)] += v;
        }
        for j in 0..n {
            let v = &a[(src, j)] * c;
            a[(dst, j)] += v;
        }
        for i in 0..n {
            let v = &p[(i, src)] * c;
            p[(i, dst)] += v;
        }
    };

    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                for i in 0..n {
                    let (x, y) = (a[(i, k)].clone(), a[(i, j)].clone());
                    a[(i, k)] = y;
                    a[(i, j)] = x;
                }
                for i in 0..n {
                    let (x, y) = (a[(k, i)].clone(), a[(j, i)].clone());
                    a[(k, i)] = y;
                    a[(j, i)] = x;
                }
                for i in 0..n {
                    let (x, y) = (p[(i, k)].clone(), p[(i, j)].clone());
                    p[(i, k)] = y;
                    p[(i, j)] = x;
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a_jj = 0 here, so the new a_kk is 2 a_kj
                add_multiple(&mut a, &mut p, j, k, &Rational::one());
            } else {
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let c = -(&a[(i, k)] / &pivot);
            add_multiple(&mut a, &mut p, k, i, &c);
        }
    }
    Ok((p, a))
}
