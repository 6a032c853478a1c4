//! The 0/1 index tensor `W` and its multilinear contraction.
//!
//! A tuple `(a_{L-1}, .., a_0)` (written left to right) has `W = 1` exactly when
//! its entries sum to its length and every maximal run of `z` zeros directly
//! follows an entry equal to `z + 1`. Such tuples are concatenations of blocks
//! `(z+1, 0, .., 0)`, i.e. compositions of `L`; contracting `W` against
//! `X^0 = 1`, `X^z = μ(z, ·)` therefore reproduces the composition sum for `w_L`.

use super::CoefficientRule;
use crate::error::{Error, Result};
use crate::Complex;

/// Largest order accepted by [`contract_multilinear`].
pub const TENSOR_MAX_ORDER: usize = 12;

/// Index tuple `a_{L-1} .. a_0`, stored left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WIndexTuple(pub Vec<usize>);

impl WIndexTuple {
    pub fn is_admissible(&self) -> bool {
        let t = &self.0;
        if t.iter().sum::<usize>() != t.len() {
            return false;
        }
        if t.first() == Some(&0) {
            return false;
        }
        let mut i = 0;
        while i < t.len() {
            if t[i] == 0 {
                let start = i;
                while i < t.len() && t[i] == 0 {
                    i += 1;
                }
                let run = i - start;
                if t[start - 1] != run + 1 {
                    return false;
                }
            } else {
                i += 1;
            }
        }
        true
    }

    /// Block values read left to right, or `None` if not admissible.
    pub fn blocks(&self) -> Option<Vec<usize>> {
        if !self.is_admissible() {
            return None;
        }
        Some(self.0.iter().copied().filter(|&a| a != 0).collect())
    }
}

pub fn w_tensor_component(tuple: &[usize]) -> u8 {
    WIndexTuple(tuple.to_vec()).is_admissible() as u8
}

/// Visit every tuple of `len` nonnegative entries summing to `total`.
///
/// Tuples off this simplex violate the sum condition and carry `W = 0`.
fn for_each_tuple(len: usize, total: usize, f: &mut impl FnMut(&[usize])) {
    fn go(buf: &mut Vec<usize>, len: usize, rest: usize, f: &mut impl FnMut(&[usize])) {
        if buf.len() + 1 == len {
            buf.push(rest);
            f(buf);
            buf.pop();
            return;
        }
        for a in 0..=rest {
            buf.push(a);
            go(buf, len, rest - a, f);
            buf.pop();
        }
    }
    if len == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    go(&mut Vec::with_capacity(len), len, total, f);
}

/// `Σ_a W_a Π_r X_r^{a_r}` over all index tuples of length `n`; equals `w_n / w_0`.
///
/// An entry `z ≠ 0` at tuple position `r` (from the left) contributes `μ(z, n - r)`;
/// zero entries contribute the step function value 1.
pub fn contract_multilinear(rule: &CoefficientRule, n: usize) -> Result<Complex> {
    if n > TENSOR_MAX_ORDER {
        return Err(Error::SizeLimit {
            requested: n,
            limit: TENSOR_MAX_ORDER,
        });
    }
    let mut total = Complex::new(0.0, 0.0);
    let mut err = None;
    for_each_tuple(n, n, &mut |t| {
        if err.is_some() || w_tensor_component(t) == 0 {
            return;
        }
        let mut term = Complex::new(1.0, 0.0);
        for (r, &z) in t.iter().enumerate() {
            if z != 0 {
                match rule.mu(z, n - r) {
                    Ok(m) => term *= m,
                    Err(e) => err = Some(e),
                }
            }
        }
        total += term;
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Number of admissible tuples of length `len` whose entries are all `≤ max_value`,
/// found by exhaustive enumeration.
pub fn count_admissible(len: usize, max_value: usize) -> u64 {
    let mut count = 0;
    for_each_tuple(len, len, &mut |t| {
        if t.iter().all(|&a| a <= max_value) && w_tensor_component(t) == 1 {
            count += 1;
        }
    });
    count
}
