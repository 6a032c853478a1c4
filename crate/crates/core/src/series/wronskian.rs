use crate::equation::FuchsianEquation;
use crate::error::{Error, Result};
use crate::Complex;

use super::{evaluate_derivatives, FrobeniusSolution};

/// `℧(ξ) = Π_j (ξ - ξ_j)^{-γ_j}` on principal branches; solves `℧' + Σ γ_j/(ξ-ξ_j) ℧ = 0`.
pub fn wronskian_factor(eq: &FuchsianEquation, xi: Complex) -> Result<Complex> {
    let mut log = Complex::new(0.0, 0.0);
    for (&z, &g) in eq.points().iter().zip(eq.gammas()) {
        let d = xi - z;
        if d == Complex::new(0.0, 0.0) {
            return Err(Error::SingularInput);
        }
        log -= g * d.ln();
    }
    Ok(log.exp())
}

/// `℧` up to a constant factor, on the branch that is analytic in the punctured
/// disk around `ξ_i` cut along `ξ_i + (-∞, 0]`:
/// `η^{-γ_i} Π_{j≠i} (1 - η/(ξ_j - ξ_i))^{-γ_j}`.
pub fn wronskian_factor_local(eq: &FuchsianEquation, i: usize, xi: Complex) -> Result<Complex> {
    eq.check_index(i)?;
    let origin = eq.points()[i];
    let eta = xi - origin;
    if eta == Complex::new(0.0, 0.0) {
        return Err(Error::SingularInput);
    }
    let mut log = -eq.gammas()[i] * eta.ln();
    for (j, (&z, &g)) in eq.points().iter().zip(eq.gammas()).enumerate() {
        if j == i {
            continue;
        }
        let u = 1.0 - eta / (z - origin);
        if u == Complex::new(0.0, 0.0) {
            return Err(Error::SingularInput);
        }
        log -= g * u.ln();
    }
    Ok(log.exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianReport {
    /// Max over samples of `|ratio - mean| / |mean|`; infinite for dependent pairs.
    pub deviation: f64,
    /// Mean of `(f₁f₂' - f₁'f₂)/℧` over the samples.
    pub mean_ratio: Complex,
    pub dependent: bool,
    pub samples_used: usize,
}

/// Constancy of the Wronskian divided by `℧` across sample points.
pub fn wronskian_check(
    f1: &FrobeniusSolution,
    f2: &FrobeniusSolution,
    samples: &[Complex],
) -> Result<WronskianReport> {
    if f1.point_index != f2.point_index || f1.equation != f2.equation {
        return Err(Error::DegenerateSamples);
    }
    let eq = &f1.equation;
    let mut ratios = Vec::new();
    let mut scale = 0.0;
    for &xi in samples {
        let eta = xi - f1.point;
        if eta.norm() == 0.0 || eta.norm() >= f1.radius {
            continue;
        }
        let [a, da, _] = evaluate_derivatives(f1, xi)?;
        let [b, db, _] = evaluate_derivatives(f2, xi)?;
        let omega = wronskian_factor_local(eq, f1.point_index, xi)?;
        ratios.push((a * db - da * b) / omega);
        scale += ((a * db).norm() + (da * b).norm()) / omega.norm();
    }
    if ratios.len() < 2 {
        return Err(Error::DegenerateSamples);
    }
    let count = ratios.len() as f64;
    let mean = ratios.iter().sum::<Complex>() / count;
    scale /= count;
    let dependent = !(mean.norm() > 1e-10 * scale);
    let deviation = if dependent {
        f64::INFINITY
    } else {
        ratios
            .iter()
            .map(|r| (r - mean).norm() / mean.norm())
            .fold(0.0, f64::max)
    };
    Ok(WronskianReport {
        deviation,
        mean_ratio: mean,
        dependent,
        samples_used: ratios.len(),
    })
}
