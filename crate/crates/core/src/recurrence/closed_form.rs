//! Closed-form solutions of the recurrence.
//!
//! `w_N = B(N,0) w_0` and `v_N = B(N,0) v_0 + Σ_{p=1}^{N} B(N,p) Φ_p`, where the
//! transfer bracket
//!
//! ```text
//! B(N,p) = Σ_{(s_1..s_r) ⊨ N-p, s_i ≤ span} Π_i μ(s_i, P_i),   P_1 = N, P_{i+1} = P_i - s_i
//! ```
//!
//! sums over compositions of `N - p` with parts bounded by the span. The
//! number of compositions grows like the span-step Fibonacci numbers, so the
//! production path evaluates `B` by dynamic programming; the explicit sum is
//! kept for cross-checking.

use super::{CoefficientRule, CoefficientTable, InhomogeneityRule};
use crate::error::Result;
use crate::Complex;

/// All compositions of `n` into parts `1..=s`, in lexicographic order.
pub fn enumerate_compositions(n: usize, s: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, s: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=s.min(rest) {
            prefix.push(part);
            go(rest - part, s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s >= 1 || n == 0 {
        go(n, s.max(1), &mut Vec::new(), &mut out);
    }
    out
}

/// `w_0 · Σ_{compositions of n} Π μ(s_i, P_i)` summed term by term.
pub fn theorem1_by_compositions(rule: &CoefficientRule, w0: Complex, n: usize) -> Result<Complex> {
    let mut total = Complex::new(0.0, 0.0);
    for comp in enumerate_compositions(n, rule.span()) {
        let mut top = n;
        let mut term = Complex::new(1.0, 0.0);
        for part in comp {
            term *= rule.mu(part, top)?;
            top -= part;
        }
        total += term;
    }
    Ok(total * w0)
}

/// `B(n,p)` by forward accumulation over the intermediate index, `O((n-p)·span)`.
pub fn transfer_bracket(rule: &CoefficientRule, n: usize, p: usize) -> Result<Complex> {
    Ok(*transfer_column(rule, p, n)?.last().expect("non-empty column"))
}

/// `[B(p,p), B(p+1,p), .., B(n,p)]`.
pub fn transfer_column(rule: &CoefficientRule, p: usize, n: usize) -> Result<Vec<Complex>> {
    assert!(p <= n, "transfer bracket needs p <= n");
    let mut col = Vec::with_capacity(n - p + 1);
    col.push(Complex::new(1.0, 0.0));
    for t in p + 1..=n {
        let mut acc = Complex::new(0.0, 0.0);
        for j in 1..=rule.span().min(t - p) {
            acc += rule.mu(j, t)? * col[t - j - p];
        }
        col.push(acc);
    }
    Ok(col)
}

/// `[B(n,0), B(n,1), .., B(n,n)]`, accumulated downward from `B(n,n) = 1` by
/// peeling off the last part of each composition.
pub fn transfer_row(rule: &CoefficientRule, n: usize) -> Result<Vec<Complex>> {
    let mut row = vec![Complex::new(0.0, 0.0); n + 1];
    row[n] = Complex::new(1.0, 0.0);
    for p in (0..n).rev() {
        let mut acc = Complex::new(0.0, 0.0);
        for j in 1..=rule.span().min(n - p) {
            acc += rule.mu(j, p + j)? * row[p + j];
        }
        row[p] = acc;
    }
    Ok(row)
}

pub fn theorem1_closed_form(rule: &CoefficientRule, w0: Complex, n: usize) -> Result<Complex> {
    Ok(transfer_bracket(rule, n, 0)? * w0)
}

/// `w_0..w_n` from the homogeneous closed form.
pub fn theorem1_table(rule: &CoefficientRule, w0: Complex, n: usize) -> Result<CoefficientTable> {
    Ok(CoefficientTable {
        values: transfer_column(rule, 0, n)?.into_iter().map(|b| b * w0).collect(),
        start_exponent: rule.start_exponent(),
    })
}

pub fn theorem2_closed_form(
    rule: &CoefficientRule,
    phi: &InhomogeneityRule,
    v0: Complex,
    n: usize,
) -> Result<Complex> {
    let row = transfer_row(rule, n)?;
    let mut total = row[0] * v0;
    for (p, b) in row.iter().enumerate().skip(1) {
        total += b * phi.phi(p)?;
    }
    Ok(total)
}

/// `v_0..v_n` from the inhomogeneous closed form, one transfer row per index.
pub fn theorem2_table(
    rule: &CoefficientRule,
    phi: &InhomogeneityRule,
    v0: Complex,
    n: usize,
) -> Result<CoefficientTable> {
    let values = (0..=n)
        .map(|t| theorem2_closed_form(rule, phi, v0, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientTable {
        values,
        start_exponent: rule.start_exponent(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::recurrence::iterate_direct;

    fn mu(j: usize, k: usize) -> Complex {
        Complex::new((0.37 * (j * 7 + k) as f64).sin(), (0.11 * (j + 3 * k) as f64).cos())
    }

    #[test]
    fn composition_counts() {
        assert_eq!(enumerate_compositions(5, 2).len(), 8);
        assert_eq!(enumerate_compositions(4, 3).len(), 7);
        assert_eq!(enumerate_compositions(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(
            enumerate_compositions(3, 2),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1]]
        );
    }

    #[test]
    fn span_two_closed_form() {
        let rule = CoefficientRule::from_fn(2, mu);
        let w0 = Complex::new(0.5, -1.0);
        let expected = w0 * (mu(1, 2) * mu(1, 1) + mu(2, 2));
        assert!((theorem1_closed_form(&rule, w0, 2).unwrap() - expected).norm() < 1e-15);
        assert!((theorem1_by_compositions(&rule, w0, 2).unwrap() - expected).norm() < 1e-15);
        assert_eq!(theorem1_closed_form(&rule, w0, 0).unwrap(), w0);
    }

    #[test]
    fn bracket_edges() {
        let rule = CoefficientRule::from_fn(3, mu);
        assert_eq!(transfer_bracket(&rule, 7, 7).unwrap(), c(1.0));
        assert_eq!(transfer_bracket(&rule, 7, 6).unwrap(), mu(1, 7));
        let row = transfer_row(&rule, 9).unwrap();
        for p in 0..=9 {
            let top_down = transfer_bracket(&rule, 9, p).unwrap();
            assert!((row[p] - top_down).norm() < 1e-13 * (1.0 + top_down.norm()));
        }
        let direct = iterate_direct(&rule, c(1.0), 9).unwrap();
        assert!((row[0] - direct.values[9]).norm() < 1e-13);
    }

    #[test]
    fn theorem2_reductions() {
        let rule = CoefficientRule::from_fn(2, mu);
        let v0 = Complex::new(1.2, 0.3);
        for n in 0..8 {
            let a = theorem2_closed_form(&rule, &InhomogeneityRule::Zero, v0, n).unwrap();
            let b = theorem1_closed_form(&rule, v0, n).unwrap();
            assert!((a - b).norm() < 1e-13);
        }
        let zero = CoefficientRule::from_fn(2, |_, _| c(0.0));
        let phi = InhomogeneityRule::from_fn(|k| Complex::new(1.0 / k as f64, k as f64));
        for n in 1..8 {
            let v = theorem2_closed_form(&zero, &phi, v0, n).unwrap();
            assert_eq!(v, phi.phi(n).unwrap());
        }
    }
}
