//! The coefficient growth estimate behind the convergence of the Frobenius series.
//!
//! With `p(η) = Σ p_j η^j`, `q(η) = Σ q_j η^j` the local coefficients of
//! `η² f'' + η p f' + q f = 0`, pick `R₁` below the distance to the nearest other
//! singular point and `M` with `|p_j| + |q_j| ≤ M / R₁^j` for all `j ≥ 1`. Beyond
//! the index `N₀` where `|f₀(ρ+n)| > |ρ| + n`, induction gives `|w_n| ≤ P^n / R₁^n`
//! for any `P > 1 + M` that already covers `w_1..w_{N₀-1}`.

use crate::equation::LocalFrame;
use crate::error::{Error, Result};
use crate::recurrence::{derive_rule, iterate_direct};
use crate::Complex;

use super::FrobeniusSolution;

/// Number of local coefficients `p_j, q_j` inspected directly.
const INSPECTED: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthBound {
    pub m: f64,
    pub r1: f64,
    pub p: f64,
    pub n0: usize,
}

impl GrowthBound {
    /// `ln(P^k / R₁^k)`.
    pub fn ln_bound(&self, k: usize) -> f64 {
        k as f64 * (self.p.ln() - self.r1.ln())
    }

    /// Whether `|w_k| ≤ P^k / R₁^k` holds for every given coefficient (`w_0 = 1` normalisation).
    pub fn dominates(&self, coeffs: &[Complex]) -> bool {
        coeffs
            .iter()
            .enumerate()
            .all(|(k, w)| w.norm() == 0.0 || w.norm().ln() <= self.ln_bound(k))
    }

    /// Radius of the disk on which the majorant series converges.
    pub fn convergence_radius(&self) -> f64 {
        self.r1 / self.p
    }
}

pub fn growth_bound(frame: &LocalFrame, rho: Complex, r1: f64) -> Result<GrowthBound> {
    let radius = frame.radius();
    if !(r1 > 0.0 && r1 < radius) {
        return Err(Error::OutOfDisk { modulus: r1, radius });
    }
    let (p, q) = frame.pq_expansion(INSPECTED);

    // explicit coefficients: p_j = -Σ γ_l d_l^{-j}, q_j = -Σ c_l d_l^{1-j} (j ≥ 2),
    // so |p_j| + |q_j| ≤ Σ_{l≠i} (|γ_l| + |c_l||d_l|) R₁^{-j} beyond j = 1
    let residues = frame.van_vleck_residues();
    let tail_m: f64 = (0..frame.finite_count())
        .filter(|&l| l != frame.origin_index)
        .map(|l| frame.gammas[l].norm() + residues[l].norm() * frame.offsets[l].norm())
        .sum();
    let inspected_m = (1..=INSPECTED)
        .map(|j| (p[j].norm() + q[j].norm()) * r1.powi(j as i32))
        .fold(0.0, f64::max);
    let m = tail_m.max(inspected_m) * (1.0 + 1e-12);

    // f₀(x) = x(x-1) + p₀x + q₀ with q₀ = 0, bounded below by (n-A)(n-B)
    let a = rho.norm();
    let b = (rho - 1.0 + p[0]).norm();
    let mut n0 = [1.0, a.floor() + 1.0, b.floor() + 1.0, ((a + b + 1.0) / 2.0).ceil()]
        .into_iter()
        .fold(1.0, f64::max) as usize;
    while ((n0 as f64 - a) * (n0 as f64 - b)) <= n0 as f64 + a {
        n0 += 1;
    }

    let mut pp = 1.0 + m;
    if n0 > 1 {
        let rule = derive_rule(frame, rho)?;
        let w = iterate_direct(&rule, Complex::new(1.0, 0.0), n0 - 1)?;
        for (k, wk) in w.values.iter().enumerate().skip(1) {
            if wk.norm() > 0.0 {
                pp = pp.max((wk.norm().ln() / k as f64 + r1.ln()).exp());
            }
        }
    }
    Ok(GrowthBound {
        m,
        r1,
        p: pp * (1.0 + 1e-9),
        n0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEstimate {
    /// `1 / median |w_k|^{1/k}` over the top quartile of `k`; infinite for terminating series.
    pub empirical: f64,
    pub structural: f64,
}

pub fn empirical_radius(sol: &FrobeniusSolution) -> RadiusEstimate {
    let n = sol.order();
    let lo = (n - n / 4).max(1);
    let mut roots: Vec<f64> = (lo..=n)
        .map(|k| (k, sol.coeffs.values[k].norm()))
        .filter(|&(_, w)| w > 0.0)
        .map(|(k, w)| (w.ln() / k as f64).exp())
        .collect();
    let empirical = if roots.is_empty() {
        f64::INFINITY
    } else {
        roots.sort_by(f64::total_cmp);
        let mid = roots.len() / 2;
        let median = if roots.len() % 2 == 1 {
            roots[mid]
        } else {
            0.5 * (roots[mid - 1] + roots[mid])
        };
        1.0 / median
    };
    RadiusEstimate {
        empirical,
        structural: sol.radius,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::equation::FuchsianEquation;
    use crate::series::first_solution;

    #[test]
    fn geometric_series_bound() {
        let eq = FuchsianEquation::hypergeometric(c(1.0), c(1.0), c(1.0)).unwrap();
        let frame = eq.shift_to_point(0).unwrap();
        let gb = growth_bound(&frame, c(0.0), 0.5).unwrap();
        assert!(gb.p > 1.0 + gb.m);
        let sol = first_solution(&eq, 0, 200).unwrap();
        assert!(gb.dominates(&sol.coeffs.values));
    }

    #[test]
    fn rejects_radius_outside_disk() {
        let eq = FuchsianEquation::hypergeometric(c(1.0), c(1.0), c(1.0)).unwrap();
        let frame = eq.shift_to_point(0).unwrap();
        assert!(growth_bound(&frame, c(0.0), 1.0).is_err());
        assert!(growth_bound(&frame, c(0.0), 0.0).is_err());
    }

    #[test]
    fn terminating_series_has_infinite_radius() {
        // a = -3: polynomial of degree 3
        let eq = FuchsianEquation::hypergeometric(c(-3.0), c(0.5), c(1.5)).unwrap();
        let sol = first_solution(&eq, 0, 60).unwrap();
        assert_eq!(empirical_radius(&sol).empirical, f64::INFINITY);
    }

    #[test]
    fn heun_radius_estimate() {
        let (alpha, beta, gamma, delta) = (c(0.7), c(1.1), c(1.3), c(0.6));
        let eps = alpha + beta - gamma - delta + 1.0;
        let eq = FuchsianEquation::heun(c(3.0), c(0.3), alpha, beta, gamma, delta, eps).unwrap();
        let sol = first_solution(&eq, 0, 200).unwrap();
        let est = empirical_radius(&sol);
        assert_eq!(est.structural, 1.0);
        assert!((est.empirical - 1.0).abs() < 0.15);
    }
}
