use crate::error::{Error, Result};
use crate::Complex;

use super::FrobeniusSolution;

/// Truncated series value with a tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationResult {
    pub value: Complex,
    pub truncation_index: usize,
    /// Geometric-majorant estimate of the neglected terms.
    pub tail_bound: f64,
    pub in_domain: bool,
}

/// Estimate of `|Σ_{k>N} w_k t^k|` from a geometric majorant `K (1/radius)^k`
/// fitted to the last ten coefficients and inflated by a factor two.
pub(crate) fn geometric_tail(coeffs: &[Complex], t: f64, radius: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    if !(t < radius) {
        return f64::INFINITY;
    }
    let n = coeffs.len() - 1;
    let ln_r = radius.ln();
    let ln_k = coeffs[n.saturating_sub(9)..]
        .iter()
        .enumerate()
        .filter(|(_, w)| w.norm() > 0.0)
        .map(|(off, w)| w.norm().ln() + (n.saturating_sub(9) + off) as f64 * ln_r)
        .fold(f64::NEG_INFINITY, f64::max);
    if ln_k == f64::NEG_INFINITY {
        return 0.0;
    }
    let x = t / radius;
    (std::f64::consts::LN_2 + ln_k + (n + 1) as f64 * x.ln() - (1.0 - x).ln()).exp()
}

/// `η^e` on the principal branch, `η ≠ 0`.
fn cpow(eta: Complex, e: Complex) -> Complex {
    if e == Complex::new(0.0, 0.0) {
        Complex::new(1.0, 0.0)
    } else {
        (e * eta.ln()).exp()
    }
}

/// `(f, f', f'')` of `η^ρ Σ_k w_k η^k`.
fn frobenius_derivatives(coeffs: &[Complex], rho: Complex, eta: Complex) -> Result<[Complex; 3]> {
    let zero = Complex::new(0.0, 0.0);
    let r = rho.re.round();
    let integral = r >= 0.0 && (rho - r).norm() < 1e-12;
    if eta == zero {
        if integral {
            // ordinary power series with leading zeros
            let shift = r as usize;
            let at = |d: usize| if d >= shift { coeffs.get(d - shift).copied().unwrap_or(zero) } else { zero };
            return Ok([at(0), at(1), at(2) * 2.0]);
        }
        if rho.re > 0.0 {
            let d = |order: f64| if rho.re > order { zero } else { Complex::new(f64::INFINITY, 0.0) };
            return Ok([zero, d(1.0), d(2.0)]);
        }
        return Err(Error::BranchPointInput);
    }
    let (mut s, mut ds, mut dds) = (zero, zero, zero);
    for &w in coeffs.iter().rev() {
        dds = dds * eta + ds * 2.0;
        ds = ds * eta + s;
        s = s * eta + w;
    }
    if rho == zero {
        return Ok([s, ds, dds]);
    }
    let e = cpow(eta, rho);
    let inv = 1.0 / eta;
    Ok([
        e * s,
        e * (rho * s * inv + ds),
        e * (rho * (rho - 1.0) * s * inv * inv + rho * ds * inv * 2.0 + dds),
    ])
}

/// Value and first two derivatives of the solution at `ξ`.
pub fn evaluate_derivatives(sol: &FrobeniusSolution, xi: Complex) -> Result<[Complex; 3]> {
    let eta = xi - sol.point;
    let mut out = frobenius_derivatives(&sol.coeffs.values, sol.exponent, eta)?;
    if let Some(log) = &sol.log {
        if eta == Complex::new(0.0, 0.0) {
            return Err(Error::BranchPointInput);
        }
        let [g, dg, ddg] = frobenius_derivatives(&log.partner.values, log.partner.start_exponent, eta)?;
        let a = log.coefficient;
        let ln = eta.ln();
        let inv = 1.0 / eta;
        out[0] += a * ln * g;
        out[1] += a * (g * inv + ln * dg);
        out[2] += a * (-g * inv * inv + dg * inv * 2.0 + ln * ddg);
    }
    Ok(out)
}

pub fn evaluate(sol: &FrobeniusSolution, xi: Complex) -> Result<EvaluationResult> {
    let eta = xi - sol.point;
    let [value, _, _] = evaluate_derivatives(sol, xi)?;
    let t = eta.norm();
    let scale = |rho: Complex| if t == 0.0 { 0.0 } else { cpow(eta, rho).norm() };
    let mut tail = if t == 0.0 {
        0.0
    } else {
        scale(sol.exponent) * geometric_tail(&sol.coeffs.values, t, sol.radius)
    };
    if let Some(log) = &sol.log {
        tail += log.coefficient.norm()
            * eta.ln().norm()
            * scale(log.partner.start_exponent)
            * geometric_tail(&log.partner.values, t, sol.radius);
    }
    Ok(EvaluationResult {
        value,
        truncation_index: sol.order(),
        tail_bound: tail,
        in_domain: t < sol.radius,
    })
}

/// Relative ODE residual `|Pf''+Qf'+Rf| / (|Pf''|+|Qf'|+|Rf|)` at `ξ`.
pub fn residual(sol: &FrobeniusSolution, xi: Complex) -> Result<f64> {
    let [f, df, ddf] = evaluate_derivatives(sol, xi)?;
    let (p, q, r) = sol.equation.polynomial_form().eval(xi);
    let terms = [p * ddf, q * df, r * f];
    let num: Complex = terms.iter().sum();
    let den: f64 = terms.iter().map(|z| z.norm()).sum();
    Ok(num.norm() / (den + 1e-300))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::FuchsianEquation;
    use crate::poly::Polynomial;
    use crate::series::{first_solution, second_solution};
    use crate::c;

    #[test]
    fn value_at_expansion_point() {
        let eq = FuchsianEquation::hypergeometric(c(0.3), c(1.4), c(1.9)).unwrap();
        let sol = first_solution(&eq, 0, 40).unwrap();
        let r = evaluate(&sol, c(0.0)).unwrap();
        assert_eq!(r.value, c(1.0));
        assert_eq!(r.tail_bound, 0.0);
        assert!(r.in_domain);
    }

    #[test]
    fn log_two() {
        let eq = FuchsianEquation::hypergeometric(c(1.0), c(1.0), c(2.0)).unwrap();
        let sol = first_solution(&eq, 0, 80).unwrap();
        let r = evaluate(&sol, c(0.5)).unwrap();
        assert!((r.value - c(2.0 * std::f64::consts::LN_2)).norm() < 1e-14 + r.tail_bound);
        assert!(r.tail_bound < 1e-20);
        // the neglected terms are actually below the bound
        let short = first_solution(&eq, 0, 20).unwrap();
        let rs = evaluate(&short, c(0.5)).unwrap();
        assert!((rs.value - c(2.0 * std::f64::consts::LN_2)).norm() <= rs.tail_bound);
    }

    #[test]
    fn branch_point_rejected() {
        let eq = FuchsianEquation::hypergeometric(c(0.3), c(0.7), c(1.0)).unwrap();
        let sol = second_solution(&eq, 0, 10).unwrap();
        assert_eq!(evaluate(&sol, c(0.0)), Err(Error::BranchPointInput));
        let eq = FuchsianEquation::hypergeometric(c(0.3), c(0.7), c(2.5)).unwrap();
        let sol = second_solution(&eq, 0, 10).unwrap();
        assert!(sol.exponent.re < 0.0);
        assert_eq!(evaluate(&sol, c(0.0)), Err(Error::BranchPointInput));
    }

    #[test]
    fn constant_solution_has_zero_residual() {
        // V = 0: f ≡ 1 solves the equation exactly
        let eq = FuchsianEquation::new(
            vec![c(0.0), c(1.0), c(-2.0)],
            vec![c(0.5), c(-1.5), c(0.25)],
            Polynomial::zero(),
        )
        .unwrap();
        let sol = crate::series::solution_at_exponent(&eq, 0, c(0.0), 20, crate::series::Method::Closed).unwrap();
        assert!(sol.coeffs.values[1..].iter().all(|w| w.norm() == 0.0));
        assert_eq!(residual(&sol, Complex::new(0.2, 0.1)).unwrap(), 0.0);
    }

    #[test]
    fn out_of_domain_flagged() {
        let eq = FuchsianEquation::hypergeometric(c(0.3), c(0.7), c(1.5)).unwrap();
        let sol = first_solution(&eq, 0, 20).unwrap();
        let r = evaluate(&sol, c(1.5)).unwrap();
        assert!(!r.in_domain);
        assert!(r.tail_bound.is_infinite());
    }

    #[test]
    fn tail_finite_inside_ninety_percent() {
        let eq = FuchsianEquation::hypergeometric(c(2.3), c(1.7), c(0.4)).unwrap();
        let sol = first_solution(&eq, 0, 5).unwrap();
        let r = evaluate(&sol, Complex::from_polar(0.9, 2.0)).unwrap();
        assert!(r.tail_bound.is_finite());
    }
}
