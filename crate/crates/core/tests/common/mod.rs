#![allow(dead_code)]

use lamd::linalg::{det_bareiss, rat, ratio, Matrix, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-3..=3`, denominator in `1..=3`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn small_int(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

pub fn upper_triangular(rng: &mut impl Rng, n: usize) -> Matrix {
    let nilpotent = rng.gen_bool(0.25);
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if i == j && nilpotent {
                continue;
            }
            a[(i, j)] = small_rational(rng);
        }
    }
    a
}

/// `c₀ I + c₁ A + c₂ A²`; the constant term is often zero so that
/// singular families occur.
pub fn poly_of(rng: &mut impl Rng, a: &Matrix) -> Matrix {
    let n = a.rows();
    let c0 = if rng.gen_bool(0.5) {
        rat(0)
    } else {
        small_int(rng, 2)
    };
    let c1 = small_int(rng, 2);
    let c2 = small_int(rng, 2);
    let sq = a.pow(2);
    &(&Matrix::identity(n).scale(&c0) + &a.scale(&c1)) + &sq.scale(&c2)
}

/// `{p(A), q(A)}` for a random upper-triangular `A`.
pub fn commuting_pair(rng: &mut impl Rng, n: usize) -> Vec<Matrix> {
    let a = upper_triangular(rng, n);
    vec![poly_of(rng, &a), poly_of(rng, &a)]
}

pub fn commuting_family(rng: &mut impl Rng, n: usize, size: usize) -> Vec<Matrix> {
    let a = upper_triangular(rng, n);
    (0..size).map(|_| poly_of(rng, &a)).collect()
}

pub fn nonsingular(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let entries = (0..n * n).map(|_| small_int(rng, 2)).collect();
        let p = Matrix::from_vec(n, n, entries);
        if det_bareiss(&p) != rat(0) {
            return p;
        }
    }
}

pub fn skew(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = small_rational(rng);
            b[(j, i)] = -x.clone();
            b[(i, j)] = x;
        }
    }
    b
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}
