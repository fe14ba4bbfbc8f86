//! Exact rational scalars, dense matrices and canonical subspaces.
//!
//! Everything downstream (adjoint matrices, evaluated Kirillov matrices,
//! derived ideals) is built from the types in this module. There is no
//! floating point anywhere: rank decisions are algebraic equalities.

mod elim;
mod matrix;
mod subspace;

pub use elim::{
    congruence_diagonalize, det_bareiss, inverse, rank, rank_kernel_image, rref, solve_linear,
};
pub use matrix::Matrix;
pub use subspace::Subspace;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always normalized: positive denominator, reduced.
pub type Rational = BigRational;

/// Errors raised by linear-algebra operations on malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not skew-symmetric (entry ({row}, {col}))")]
    NotSkew { row: usize, col: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Error for the textual rational format `[+-]int[/posint]`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the textual rational form: optional sign, integer, optional `/`
/// followed by a positive integer (`"-3/2"`, `"7"`, `"+4/6"`).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| -> Result<BigUint, ParseRationalError> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.parse::<BigUint>().map_err(|_| err())
    };
    let mut numerator = BigInt::from(digits(num)?);
    if negative {
        numerator = -numerator;
    }
    let denominator = match den {
        Some(d) => {
            let d = digits(d)?;
            if d.is_zero() {
                return Err(err());
            }
            BigInt::from(d)
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numerator, denominator))
}

/// Canonical text form, the inverse of [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Vector helpers on plain rational slices.
pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub(crate) fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += scale * b;
        }
    }
}

pub(crate) fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}
