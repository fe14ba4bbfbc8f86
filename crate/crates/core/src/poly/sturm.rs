use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{MultiPoly, PolyError};
use crate::linalg::Rational;

/// Dense univariate coefficients, constant term first, no trailing zeros.
type Dense = Vec<Rational>;

/// Open-closed interval `(lo, hi]` holding exactly one real root. `exact`
/// is set when that root is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &Dense) -> Dense {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let k = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &k * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn eval(p: &Dense, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn sturm_chain(p: &Dense) -> Vec<Dense> {
    let mut chain = vec![p.clone(), derivative(p)];
    while !chain.last().unwrap().is_empty() {
        let n = chain.len();
        let r: Dense = rem(&chain[n - 2], &chain[n - 1])
            .into_iter()
            .map(|c| -c)
            .collect();
        chain.push(r);
    }
    chain.pop();
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations_at(chain: &[Dense], x: &Rational) -> usize {
    sign_changes(chain.iter().map(|p| sign(&eval(p, x))))
}

fn variations_at_infinity(chain: &[Dense], positive: bool) -> usize {
    sign_changes(chain.iter().map(|p| {
        let s = sign(p.last().unwrap());
        if !positive && (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn to_dense(p: &MultiPoly) -> Result<Dense, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = p.variables();
    match vars.as_slice() {
        [] => Ok(vec![p.leading_coeff().unwrap().clone()]),
        [v] => Ok(trim(p.univariate_coeffs(*v)?)),
        _ => Err(PolyError::NotUnivariate),
    }
}

/// Number of distinct real roots.
pub fn sturm_real_roots(p: &MultiPoly) -> Result<usize, PolyError> {
    let d = to_dense(p)?;
    if d.len() == 1 {
        return Ok(0);
    }
    let chain = sturm_chain(&d);
    Ok(variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true))
}

/// Cauchy bound: every root has absolute value below it.
fn root_bound(p: &Dense) -> Rational {
    let lead = p.last().unwrap().abs();
    let max = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Disjoint isolating intervals for every real root, in increasing order.
pub fn isolate_real_roots(p: &MultiPoly) -> Result<Vec<RootInterval>, PolyError> {
    let d = to_dense(p)?;
    if d.len() == 1 {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&d);
    let b = root_bound(&d);
    let rational = rational_roots(p)?;
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations_at(&chain, &lo) - variations_at(&chain, &hi);
        match count {
            0 => {}
            1 => {
                let exact = rational.iter().find(|r| **r > lo && **r <= hi).cloned();
                out.push(RootInterval { lo, hi, exact });
            }
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
                // upper half first so the pop order is increasing
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    Ok(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Rational roots by the rational root theorem, ascending. Coefficients too
/// large to factor by trial division yield only the root `0`, if present.
pub fn rational_roots(p: &MultiPoly) -> Result<Vec<Rational>, PolyError> {
    let d = to_dense(p)?;
    let lcm = d.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = d
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    let core = &ints[zeros..];
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Rational::zero());
    }
    if core.len() > 1 {
        if let (Some(ps), Some(qs)) = (divisors(&core[0]), divisors(core.last().unwrap())) {
            for num in &ps {
                for den in &qs {
                    for s in [num.clone(), -num.clone()] {
                        let r = Rational::new(s, den.clone());
                        if !roots.contains(&r) && eval(&d, &r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
