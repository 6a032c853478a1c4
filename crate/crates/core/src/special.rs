//! Closed-form series for the Gauss hypergeometric function and the local Heun
//! function, computed independently of the generic recurrence engine.

use crate::error::{Error, Result};
use crate::series::{geometric_tail, EvaluationResult};
use crate::Complex;

const INTEGER_TOL: f64 = 1e-9;
const FUCHS_TOL: f64 = 1e-9;

/// Returns `n` when `z` lies within `INTEGER_TOL` of the non-positive integer `-n`.
fn nonpositive_integer(z: Complex) -> Option<i64> {
    let r = z.re.round();
    (r <= 0.0 && (z - r).norm() < INTEGER_TOL).then_some(-r as i64)
}

/// Rising factorial `(x)_k = x(x+1)…(x+k-1)`.
pub fn pochhammer(x: Complex, k: usize) -> Complex {
    (0..k).fold(Complex::new(1.0, 0.0), |acc, j| acc * (x + j as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
}

impl HypergeometricParams {
    pub fn new(a: Complex, b: Complex, c: Complex) -> Result<Self> {
        if !(crate::is_finite(a) && crate::is_finite(b) && crate::is_finite(c)) {
            return Err(Error::NonFinite("hypergeometric parameters"));
        }
        if nonpositive_integer(c).is_some() {
            return Err(Error::PoleInC(format!("{c}")));
        }
        Ok(Self { a, b, c })
    }

    fn ratio(&self, k: usize) -> Complex {
        let k = k as f64;
        (self.a + k) * (self.b + k) / ((k + 1.0) * (self.c + k))
    }
}

/// `(a)_k (b)_k / (k! (c)_k)`, accumulated as a product of consecutive ratios.
pub fn gauss_coefficient(params: &HypergeometricParams, k: usize) -> Result<Complex> {
    Ok(gauss_coefficients(params, k)?[k])
}

/// Coefficients `0..=n` of the Gauss series.
pub fn gauss_coefficients(params: &HypergeometricParams, n: usize) -> Result<Vec<Complex>> {
    if nonpositive_integer(params.c).is_some() {
        return Err(Error::PoleInC(format!("{}", params.c)));
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(Complex::new(1.0, 0.0));
    for k in 0..n {
        let next = out[k] * params.ratio(k);
        out.push(next);
    }
    Ok(out)
}

fn sum_series(coeffs: &[Complex], xi: Complex, radius: f64) -> EvaluationResult {
    let value = coeffs
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &w| acc * xi + w);
    EvaluationResult {
        value,
        truncation_index: coeffs.len() - 1,
        tail_bound: geometric_tail(coeffs, xi.norm(), radius),
        in_domain: true,
    }
}

/// `F(a,b;c;ξ)` truncated after the `ξ^N` term, `|ξ| < 1`.
pub fn gauss_2f1(params: &HypergeometricParams, xi: Complex, n: usize) -> Result<EvaluationResult> {
    if !(xi.norm() < 1.0) {
        return Err(Error::OutOfDisk {
            modulus: xi.norm(),
            radius: 1.0,
        });
    }
    Ok(sum_series(&gauss_coefficients(params, n)?, xi, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunParams {
    pub a: Complex,
    pub q: Complex,
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
    pub delta: Complex,
    pub epsilon: Complex,
}

impl HeunParams {
    pub fn new(
        a: Complex,
        q: Complex,
        alpha: Complex,
        beta: Complex,
        gamma: Complex,
        delta: Complex,
        epsilon: Complex,
    ) -> Result<Self> {
        let all = [a, q, alpha, beta, gamma, delta, epsilon];
        if !all.iter().all(|&z| crate::is_finite(z)) {
            return Err(Error::NonFinite("Heun parameters"));
        }
        if a.norm() < 1e-12 {
            return Err(Error::DuplicatePoints(0, 2));
        }
        if (a - 1.0).norm() < 1e-12 {
            return Err(Error::DuplicatePoints(1, 2));
        }
        let fuchs = alpha + beta - gamma - delta - epsilon + 1.0;
        if !(fuchs.norm() < FUCHS_TOL) {
            return Err(Error::FuchsRelationViolated(fuchs.norm()));
        }
        Ok(Self {
            a,
            q,
            alpha,
            beta,
            gamma,
            delta,
            epsilon,
        })
    }

    /// Parameters of the companion solution `ξ^{1-γ} Hℓ(a, q'; α+1-γ, β+1-γ, 2-γ, δ; ξ)`
    /// with `q' = (aδ+ε)(1-γ) + q`.
    pub fn second_branch(&self) -> Self {
        let s = 1.0 - self.gamma;
        Self {
            a: self.a,
            q: (self.a * self.delta + self.epsilon) * s + self.q,
            alpha: self.alpha + s,
            beta: self.beta + s,
            gamma: 2.0 - self.gamma,
            delta: self.delta,
            epsilon: self.epsilon,
        }
    }

    pub fn radius(&self) -> f64 {
        self.a.norm().min(1.0)
    }
}

/// Coefficients `0..=n` of `Hℓ` from the three-term recurrence
///
/// ```text
/// a(k+2)(k+γ+1) c_{k+2} = [(k+1)(k+γ)(1+a) + (k+1)(aδ+ε) + q] c_{k+1} - (k+α)(k+β) c_k
/// ```
///
/// seeded with `c_0 = 1`, `c_1 = q/(aγ)`.
pub fn heun_coefficients(params: &HeunParams, n: usize) -> Result<Vec<Complex>> {
    let HeunParams {
        a,
        q,
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
    } = *params;
    if nonpositive_integer(gamma).is_some() {
        return Err(Error::ResonantGamma(format!("{gamma}")));
    }
    let mut c = Vec::with_capacity(n + 1);
    c.push(Complex::new(1.0, 0.0));
    if n >= 1 {
        c.push(q / (a * gamma));
    }
    for k in 0..n.saturating_sub(1) {
        let kf = k as f64;
        let m1 = ((kf + 1.0) * (kf + gamma) * (1.0 + a) + (kf + 1.0) * (a * delta + epsilon) + q)
            / (a * (kf + 2.0) * (kf + gamma + 1.0));
        let m2 = -(kf + alpha) * (kf + beta) / (a * (kf + 2.0) * (kf + gamma + 1.0));
        let next = m1 * c[k + 1] + m2 * c[k];
        c.push(next);
    }
    Ok(c)
}

fn check_heun_disk(params: &HeunParams, xi: Complex) -> Result<()> {
    let radius = params.radius();
    if xi.norm() < radius {
        Ok(())
    } else {
        Err(Error::OutOfDisk {
            modulus: xi.norm(),
            radius,
        })
    }
}

/// Local Heun function `Hℓ(a,q;α,β,γ,δ;ξ)` truncated at `ξ^N`, `|ξ| < min(1,|a|)`.
pub fn heun_local(params: &HeunParams, xi: Complex, n: usize) -> Result<EvaluationResult> {
    check_heun_disk(params, xi)?;
    Ok(sum_series(&heun_coefficients(params, n)?, xi, params.radius()))
}

/// Second local solution `ξ^{1-γ} Hℓ(...)` on the principal branch.
pub fn heun_second_local(params: &HeunParams, xi: Complex, n: usize) -> Result<EvaluationResult> {
    let s = 1.0 - params.gamma;
    let r = s.re.round();
    if (s - r).norm() < INTEGER_TOL {
        return Err(Error::IntegerExponentDifference);
    }
    check_heun_disk(params, xi)?;
    if xi == Complex::new(0.0, 0.0) {
        return Err(Error::BranchPointInput);
    }
    let mut res = heun_local(&params.second_branch(), xi, n)?;
    let factor = (s * xi.ln()).exp();
    res.value *= factor;
    res.tail_bound *= factor.norm();
    Ok(res)
}
