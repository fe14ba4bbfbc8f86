//! Deterministic enumeration of integer points.
//!
//! Points come in shells of increasing sup-norm. Inside a shell the order is
//! lexicographic read from the last coordinate (the first coordinate varies
//! fastest), with values compared in the sequence `0, 1, -1, 2, -2, …`.
//! Every search in the crate (witness functionals, nonsingular
//! combinations, rank certificates) walks this order, so reported points
//! are reproducible and small.

use crate::linalg::{rat, Rational};

/// Position of `v` in the sequence `0, 1, -1, 2, -2, …`.
fn symbol_rank(v: i64) -> u64 {
    if v > 0 {
        2 * v as u64 - 1
    } else {
        2 * v.unsigned_abs()
    }
}

fn symbol(rank: u64) -> i64 {
    if rank % 2 == 1 {
        rank.div_ceil(2) as i64
    } else {
        -((rank / 2) as i64)
    }
}

/// Iterator over `ℤᵈ` points with sup-norm at most `bound` (unbounded if
/// `None`), in the order described above.
#[derive(Clone, Debug)]
pub struct IntegerGrid {
    dim: usize,
    bound: Option<u64>,
    shell: u64,
    // symbol ranks of the next point within the current shell
    state: Option<Vec<u64>>,
    done: bool,
}

impl IntegerGrid {
    pub fn new(dim: usize, bound: Option<u64>) -> Self {
        Self {
            dim,
            bound,
            shell: 0,
            state: Some(vec![0; dim]),
            done: false,
        }
    }

    pub fn bounded(dim: usize, bound: u64) -> Self {
        Self::new(dim, Some(bound))
    }

    pub fn unbounded(dim: usize) -> Self {
        Self::new(dim, None)
    }

    /// Advances the odometer over ranks `0..=2·shell`; `false` on wrap.
    fn step(state: &mut [u64], max_rank: u64) -> bool {
        for r in state.iter_mut() {
            if *r < max_rank {
                *r += 1;
                return true;
            }
            *r = 0;
        }
        false
    }

    fn in_shell(state: &[u64], shell: u64) -> bool {
        state
            .iter()
            .map(|&r| symbol(r).unsigned_abs())
            .max()
            .unwrap_or(0)
            == shell
    }
}

impl Iterator for IntegerGrid {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        loop {
            if let Some(state) = self.state.as_mut() {
                if Self::in_shell(state, self.shell) {
                    let point = state.iter().map(|&r| symbol(r)).collect();
                    if !Self::step(state, 2 * self.shell) {
                        self.state = None;
                    }
                    return Some(point);
                }
                if !Self::step(state, 2 * self.shell) {
                    self.state = None;
                }
                continue;
            }
            // shell exhausted
            if self.dim == 0 || self.bound.is_some_and(|b| self.shell >= b) {
                self.done = true;
                return None;
            }
            self.shell += 1;
            self.state = Some(vec![0; self.dim]);
        }
    }
}

/// The point as rationals.
pub fn to_rationals(p: &[i64]) -> Vec<Rational> {
    p.iter().map(|&x| rat(x)).collect()
}

/// Comparison key realizing the enumeration order.
pub fn order_key(p: &[i64]) -> (u64, Vec<u64>) {
    let shell = p.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    (shell, p.iter().rev().map(|&x| symbol_rank(x)).collect())
}
