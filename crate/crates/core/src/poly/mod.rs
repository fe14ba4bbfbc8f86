//! Multivariate polynomials over ℚ.
//!
//! Determinant and Pfaffian polynomials of symbolic matrices, Gröbner bases
//! under grevlex, and the real-locus refinement used by the MD decision
//! procedure all live here.

mod groebner;
mod matrix;
mod real;
mod sturm;

pub use groebner::{
    groebner, ideal_member, normal_form, radical_member, GroebnerBudget, PolyIdeal,
};
pub use matrix::{generic_rank, pfaffian, poly_det, PolyMatrix, MAX_DET_SIZE};
pub use real::{
    even_power_root, psd_split, real_locus_refine, PsdSplit, Refinement, RefinementRound,
};
pub use sturm::{isolate_real_roots, rational_roots, sturm_real_roots, RootInterval};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("matrix of size {size} exceeds the determinant size cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Pfaffian needs an even size, got {0}")]
    OddSize(usize),
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("polynomial is not a homogeneous quadratic form")]
    NotQuadratic,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("Gröbner budget exceeded: {0}")]
    Budget(String),
}

/// Exponent vector. Ordered by graded reverse lexicographic order with
/// variable 0 the largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exact square root, if every exponent is even.
    pub fn sqrt(&self) -> Option<Self> {
        if self.0.iter().any(|e| e % 2 != 0) {
            return None;
        }
        Some(Self(self.0.iter().map(|e| e / 2).collect()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in a fixed number of variables. No zero coefficients
/// are ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ cᵢ xᵢ`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Indices of variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; all images share one
    /// target variable count.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Same polynomial viewed in `nvars` variables, keeping variable indices;
    /// variables `self.nvars()..nvars` are new. Panics if `nvars` is smaller
    /// and a dropped variable occurs.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            if nvars < e.len() {
                assert!(
                    e[nvars..].iter().all(|&x| x == 0),
                    "dropping a used variable"
                );
            }
            e.resize(nvars, 0);
            (Monomial(e), c.clone())
        });
        Self::from_terms(nvars, terms)
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring with
    /// `nvars` variables. Variables mapped to `None` must not occur.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    let j = map[i].expect("remapped polynomial uses a dropped variable");
                    e[j] += x;
                }
            }
            (Monomial(e), c.clone())
        });
        Self::from_terms(nvars, terms)
    }

    /// Dense coefficient list (constant term first) of a polynomial in at
    /// most the single variable `var`.
    pub fn univariate_coeffs(&self, var: usize) -> Result<Vec<Rational>, PolyError> {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (m, x) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(PolyError::NotUnivariate);
            }
            c[m.0[var] as usize] = x.clone();
        }
        Ok(c)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn checked_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let t = m.checked_div(lm)?;
            let k = c / lc;
            rem = &rem - &divisor.mul_term(&t, &k);
            quot.add_term(t, k);
        }
        Some(quot)
    }

    /// Renders with the given variable names, terms in descending order.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{}", names[i], e)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Default variable names: `a, b, c, …` for up to 26 variables, else
/// `f1, f2, …`.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 26 {
        (0..nvars)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (1..=nvars).map(|i| format!("f{i}")).collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_var_names(self.nvars)))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn vars(n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(n, i)).collect()
    }

    #[test]
    fn grevlex_order() {
        let n = 3;
        let x = Monomial::var(n, 0);
        let y = Monomial::var(n, 1);
        let z = Monomial::var(n, 2);
        assert!(x > y && y > z);
        // x*z < y^2 under grevlex
        assert!(x.mul(&z) < y.mul(&y));
        assert!(Monomial::one(n) < z);
    }

    #[test]
    fn display_form() {
        let v = vars(5);
        let (c, d, e) = (&v[2], &v[3], &v[4]);
        assert_eq!((&(c * c) + &(d * d)).to_string(), "c^2 + d^2");
        assert_eq!((e * e).scale(&rat(2)).to_string(), "2*e^2");
        assert_eq!((&(c * c) - &(d * d)).to_string(), "c^2 - d^2");
        assert_eq!(
            (&c.scale(&ratio(-1, 2)) + &MultiPoly::one(5)).to_string(),
            "-1/2*c + 1"
        );
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let v = vars(2);
        let p = &(&v[0] + &v[1]).pow(2) - &(&v[0] * &v[1]).scale(&rat(2));
        assert_eq!(p, &(&v[0] * &v[0]) + &(&v[1] * &v[1]));
        assert_eq!(p.evaluate(&[rat(3), rat(4)]), rat(25));
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn compose_dehomogenizes() {
        let v = vars(2);
        let p = &(&v[0] * &v[0]) + &(&v[1] * &v[1]);
        let t = MultiPoly::var(1, 0);
        let q = p.compose(&[MultiPoly::one(1), t.clone()]);
        assert_eq!(q, &(&t * &t) + &MultiPoly::one(1));
        assert_eq!(
            q.univariate_coeffs(0).unwrap(),
            vec![rat(1), rat(0), rat(1)]
        );
        assert!(p.univariate_coeffs(0).is_err());
    }
}
