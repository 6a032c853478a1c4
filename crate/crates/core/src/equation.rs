//! Fuchsian equations in normal form, local frames at singular points and
//! indicial data.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::{is_finite, Complex};

/// Relative distance below which two singular points are considered equal.
pub const DISTINCT_TOL: f64 = 1e-12;
/// Exponent differences closer than this to an integer are treated as resonant.
pub const RESONANCE_TOL: f64 = 1e-9;
/// Bound on the residual of the indicial polynomial at its returned roots.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;
/// Tolerance of the Fuchs relation for the Heun preset.
pub const FUCHS_TOL: f64 = 1e-9;

/// `f'' + (Σ γ_i/(ξ-ξ_i)) f' + V(ξ)/Π(ξ-ξ_i) f = 0` with finite singular points
/// `ξ_1..ξ_F`; infinity is the `(F+1)`-th regular singular point.
#[derive(Debug, Clone, PartialEq)]
pub struct FuchsianEquation {
    points: Vec<Complex>,
    gammas: Vec<Complex>,
    van_vleck: Polynomial,
}

/// The equation multiplied through by `P = Π(ξ-ξ_i)`: `P f'' + Q f' + R f = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialForm {
    pub p: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
}

impl PolynomialForm {
    /// `(P(ξ), Q(ξ), R(ξ))`.
    pub fn eval(&self, x: Complex) -> (Complex, Complex, Complex) {
        (self.p.eval(x), self.q.eval(x), self.r.eval(x))
    }
}

impl FuchsianEquation {
    pub fn new(points: Vec<Complex>, gammas: Vec<Complex>, van_vleck: Polynomial) -> Result<Self> {
        if points.len() != gammas.len() {
            return Err(Error::LengthMismatch {
                points: points.len(),
                gammas: gammas.len(),
            });
        }
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if !points.iter().copied().all(is_finite) {
            return Err(Error::NonFinite("singular points"));
        }
        if !gammas.iter().copied().all(is_finite) {
            return Err(Error::NonFinite("gammas"));
        }
        if !van_vleck.is_finite() {
            return Err(Error::NonFinite("Van Vleck polynomial"));
        }
        let scale = points.iter().fold(1.0_f64, |m, z| m.max(z.norm()));
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if (points[i] - points[j]).norm() <= DISTINCT_TOL * scale {
                    return Err(Error::DuplicatePoints(i, j));
                }
            }
        }
        let max = points.len() - 2;
        if !van_vleck.is_zero() && van_vleck.degree() > max {
            return Err(Error::DegreeTooHigh {
                degree: van_vleck.degree(),
                max,
            });
        }
        Ok(Self {
            points,
            gammas,
            van_vleck,
        })
    }

    /// Gauss' equation `ξ(ξ-1)f'' + ((a+b+1)ξ - c)f' + ab f = 0`.
    pub fn hypergeometric(a: Complex, b: Complex, c: Complex) -> Result<Self> {
        Self::new(
            vec![Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)],
            vec![c, a + b - c + 1.0],
            Polynomial::constant(a * b),
        )
    }

    /// Heun's equation with singular points `0, 1, a`; requires the Fuchs relation
    /// `α + β - γ - δ - ε + 1 = 0`.
    #[allow(clippy::too_many_arguments)]
    pub fn heun(
        a: Complex,
        q: Complex,
        alpha: Complex,
        beta: Complex,
        gamma: Complex,
        delta: Complex,
        epsilon: Complex,
    ) -> Result<Self> {
        let fuchs = alpha + beta - gamma - delta - epsilon + 1.0;
        if !(fuchs.norm() < FUCHS_TOL) {
            return Err(Error::FuchsRelationViolated(fuchs.norm()));
        }
        Self::new(
            vec![Complex::new(0.0, 0.0), Complex::new(1.0, 0.0), a],
            vec![gamma, delta, epsilon],
            Polynomial::new(vec![-q, alpha * beta]),
        )
    }

    pub fn points(&self) -> &[Complex] {
        &self.points
    }

    pub fn gammas(&self) -> &[Complex] {
        &self.gammas
    }

    pub fn van_vleck(&self) -> &Polynomial {
        &self.van_vleck
    }

    /// Number of finite singular points.
    pub fn finite_count(&self) -> usize {
        self.points.len()
    }

    /// The same equation with every singular point moved by `t`.
    pub fn translated(&self, t: Complex) -> Self {
        Self {
            points: self.points.iter().map(|&z| z + t).collect(),
            gammas: self.gammas.clone(),
            van_vleck: self.van_vleck.taylor_shift(-t),
        }
    }

    pub fn polynomial_form(&self) -> PolynomialForm {
        let p = Polynomial::from_roots(&self.points);
        let mut q = Polynomial::zero();
        for (i, &g) in self.gammas.iter().enumerate() {
            let others: Vec<Complex> = self
                .points
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .map(|(_, &z)| z)
                .collect();
            q = &q + &Polynomial::from_roots(&others).scale(g);
        }
        PolynomialForm {
            p,
            q,
            r: self.van_vleck.clone(),
        }
    }

    /// `γ_i = Q(ξ_i) / Π_{l≠i}(ξ_i - ξ_l)`, recovered from the polynomial form.
    pub fn recovered_gamma(&self, i: usize) -> Complex {
        let form = self.polynomial_form();
        let z = self.points[i];
        let denom = self
            .points
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .fold(Complex::new(1.0, 0.0), |acc, (_, &w)| acc * (z - w));
        form.q.eval(z) / denom
    }

    /// Distance from `ξ_i` to the nearest other finite singular point.
    pub fn radius(&self, i: usize) -> f64 {
        let z = self.points[i];
        self.points
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .map(|(_, &w)| (w - z).norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.points.len(),
            });
        }
        Ok(())
    }

    /// Translate the equation so that `ξ_i` becomes the origin.
    ///
    /// `P` and `Q` are rebuilt from the translated roots so that `P(0) = 0`
    /// holds exactly; `V` is moved by a Taylor shift.
    pub fn shift_to_point(&self, i: usize) -> Result<LocalFrame> {
        self.check_index(i)?;
        let origin = self.points[i];
        let offsets: Vec<Complex> = self.points.iter().map(|&z| z - origin).collect();
        let mut offsets_exact = offsets.clone();
        offsets_exact[i] = Complex::new(0.0, 0.0);
        let shifted = FuchsianEquation {
            points: offsets_exact.clone(),
            gammas: self.gammas.clone(),
            van_vleck: self.van_vleck.taylor_shift(origin),
        };
        let form = shifted.polynomial_form();
        Ok(LocalFrame {
            origin_index: i,
            origin,
            offsets: offsets_exact,
            gammas: self.gammas.clone(),
            p: form.p,
            q: form.q,
            r: form.r,
        })
    }

    /// Exponents at infinity: `f ~ ξ^{-λ}` with `λ² + (1 - Σγ)λ + V_{F-2} = 0`.
    pub fn indicial_at_infinity(&self) -> Result<InfinityIndicial> {
        let f = self.points.len();
        let gamma_sum: Complex = self.gammas.iter().sum();
        let lead = self.van_vleck.coeff(f - 2);
        let data = IndicialData::from_quadratic([lead, 1.0 - gamma_sum, Complex::new(1.0, 0.0)])?;
        // ∞ is ordinary iff ξ²p(ξ) - 2ξ and ξ⁴r(ξ) stay bounded there.
        let sub_lead = if f >= 3 {
            self.van_vleck.coeff(f - 3)
        } else {
            Complex::new(0.0, 0.0)
        };
        let ordinary = (gamma_sum - 2.0).norm() < RESONANCE_TOL
            && lead.norm() < RESONANCE_TOL
            && sub_lead.norm() < RESONANCE_TOL;
        Ok(InfinityIndicial {
            data,
            singular: !ordinary,
        })
    }
}

/// The polynomial-form equation in the local coordinate `η = ξ - ξ_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalFrame {
    pub origin_index: usize,
    pub origin: Complex,
    /// `ξ_l - ξ_i` for every finite singular point (zero at `origin_index`).
    pub offsets: Vec<Complex>,
    pub gammas: Vec<Complex>,
    pub p: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
}

impl LocalFrame {
    pub fn finite_count(&self) -> usize {
        self.offsets.len()
    }

    pub fn radius(&self) -> f64 {
        self.offsets
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != self.origin_index)
            .map(|(_, d)| d.norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Coefficients `[c0, c1, c2]` of `g₀(x) = P₁ x(x-1) + Q₀ x`.
    pub fn g0_coeffs(&self) -> [Complex; 3] {
        let p1 = self.p.coeff(1);
        let q0 = self.q.coeff(0);
        [Complex::new(0.0, 0.0), q0 - p1, p1]
    }

    pub fn indicial(&self) -> Result<IndicialData> {
        let g0 = self.g0_coeffs();
        if g0[2] == Complex::new(0.0, 0.0) {
            return Err(Error::DegenerateIndicial);
        }
        IndicialData::from_quadratic(g0)
    }

    /// Taylor coefficients of `p(η) = ηQ/P` and `q(η) = η²R/P` up to `order`.
    pub fn pq_expansion(&self, order: usize) -> (Vec<Complex>, Vec<Complex>) {
        // P/η has a nonzero constant term
        let denom: Vec<Complex> = self.p.coeffs().iter().skip(1).copied().collect();
        let shifted_r: Vec<Complex> = std::iter::once(Complex::new(0.0, 0.0))
            .chain(self.r.coeffs().iter().copied())
            .collect();
        (
            series_divide(self.q.coeffs(), &denom, order),
            series_divide(&shifted_r, &denom, order),
        )
    }

    /// Partial-fraction residues `c_l = V(ξ_l) / Π_{m≠l}(ξ_l - ξ_m)`, so that
    /// `V/P = Σ_l c_l / (ξ - ξ_l)`.
    pub fn van_vleck_residues(&self) -> Vec<Complex> {
        let dp = self.p.derivative();
        self.offsets
            .iter()
            .map(|&d| self.r.eval(d) / dp.eval(d))
            .collect()
    }
}

/// Power-series quotient `num / den` truncated after `x^order`; `den[0] ≠ 0`.
fn series_divide(num: &[Complex], den: &[Complex], order: usize) -> Vec<Complex> {
    let mut out = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).copied().unwrap_or_default();
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= den[j] * out[k - j];
        }
        out.push(acc / den[0]);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentClass {
    Generic,
    /// `ρ₁ - ρ₂ = m` for a positive integer `m`.
    IntegerDifference(usize),
    Equal,
}

impl fmt::Display for ExponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentClass::Generic => write!(f, "generic"),
            ExponentClass::IntegerDifference(m) => write!(f, "integer_difference({m})"),
            ExponentClass::Equal => write!(f, "equal"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicialData {
    /// Root with the larger real part (ties: larger imaginary part).
    pub rho1: Complex,
    pub rho2: Complex,
    /// Ascending coefficients of the indicial quadratic.
    pub g0: [Complex; 3],
    pub class: ExponentClass,
}

impl IndicialData {
    /// Roots of `c0 + c1 x + c2 x²` with `c2 ≠ 0`, ordered and classified.
    pub fn from_quadratic(g0: [Complex; 3]) -> Result<Self> {
        let [c0, c1, c2] = g0;
        if c2 == Complex::new(0.0, 0.0) {
            return Err(Error::DegenerateIndicial);
        }
        let sqrt_disc = (c1 * c1 - c0 * c2 * 4.0).sqrt();
        // pick the sign that avoids cancellation
        let plus = c1 + sqrt_disc;
        let minus = c1 - sqrt_disc;
        let big = if plus.norm() >= minus.norm() { plus } else { minus };
        let (r1, r2) = if big == Complex::new(0.0, 0.0) {
            (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0))
        } else {
            let s = -big * 0.5;
            (s / c2, c0 / s)
        };
        let (rho1, rho2) = if (r1.re, r1.im) >= (r2.re, r2.im) {
            (r1, r2)
        } else {
            (r2, r1)
        };
        let diff = rho1 - rho2;
        let class = if diff.norm() < RESONANCE_TOL {
            ExponentClass::Equal
        } else {
            let m = diff.re.round();
            if m >= 1.0 && (diff - m).norm() < RESONANCE_TOL {
                ExponentClass::IntegerDifference(m as usize)
            } else {
                ExponentClass::Generic
            }
        };
        Ok(Self {
            rho1,
            rho2,
            g0,
            class,
        })
    }

    pub fn eval_g0(&self, x: Complex) -> Complex {
        self.g0[0] + x * (self.g0[1] + x * self.g0[2])
    }

    /// `|g₀(x)|` relative to the magnitude of its terms.
    pub fn relative_residual(&self, x: Complex) -> f64 {
        let scale = self.g0[0].norm() + self.g0[1].norm() * x.norm() + self.g0[2].norm() * x.norm_sqr();
        if scale == 0.0 {
            return 0.0;
        }
        self.eval_g0(x).norm() / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfinityIndicial {
    pub data: IndicialData,
    /// False when infinity is an ordinary point of the equation.
    pub singular: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    fn same_pair(data: &IndicialData, x: Complex, y: Complex) -> bool {
        (close(data.rho1, x, 1e-10) && close(data.rho2, y, 1e-10))
            || (close(data.rho1, y, 1e-10) && close(data.rho2, x, 1e-10))
    }

    #[test]
    fn build_rejects_invalid_input() {
        let pts = vec![c(0.0), c(1.0)];
        assert_eq!(
            FuchsianEquation::new(pts.clone(), vec![c(1.0)], Polynomial::zero()),
            Err(Error::LengthMismatch { points: 2, gammas: 1 })
        );
        assert_eq!(
            FuchsianEquation::new(vec![c(0.0), c(0.0)], vec![c(1.0); 2], Polynomial::zero()),
            Err(Error::DuplicatePoints(0, 1))
        );
        assert_eq!(
            FuchsianEquation::new(pts.clone(), vec![c(1.0); 2], Polynomial::from_real(&[1.0, 1.0])),
            Err(Error::DegreeTooHigh { degree: 1, max: 0 })
        );
        assert_eq!(
            FuchsianEquation::new(vec![c(0.0)], vec![c(1.0)], Polynomial::zero()),
            Err(Error::TooFewPoints(1))
        );
        assert!(FuchsianEquation::new(pts, vec![c(1.0); 2], Polynomial::zero()).is_ok());
    }

    #[test]
    fn hypergeometric_preset() {
        let eq = FuchsianEquation::hypergeometric(c(1.0), c(1.0), c(1.0)).unwrap();
        assert_eq!(eq.points(), &[c(0.0), c(1.0)]);
        assert_eq!(eq.gammas(), &[c(1.0), c(2.0)]);
        assert_eq!(eq.van_vleck().coeffs(), &[c(1.0)]);
        let eq = FuchsianEquation::hypergeometric(c(2.0), c(3.0), c(0.5)).unwrap();
        assert_eq!(eq.van_vleck().coeffs(), &[c(6.0)]);
        let eq = FuchsianEquation::hypergeometric(c(0.0), c(3.0), c(0.5)).unwrap();
        assert!(eq.van_vleck().is_zero());
    }

    #[test]
    fn heun_preset() {
        let eq = FuchsianEquation::heun(c(2.0), c(1.0), c(1.0), c(2.0), c(1.0), c(2.0), c(1.0));
        assert!(eq.is_ok());
        let dup = FuchsianEquation::heun(c(1.0), c(1.0), c(1.0), c(2.0), c(1.0), c(2.0), c(1.0));
        assert!(matches!(dup, Err(Error::DuplicatePoints(_, _))));
        let bad = FuchsianEquation::heun(c(2.0), c(1.0), c(1.0), c(2.0), c(1.0), c(2.0), c(2.0));
        assert!(matches!(bad, Err(Error::FuchsRelationViolated(_))));
        let eq = FuchsianEquation::heun(c(2.0), c(0.0), c(1.0), c(1.0), c(1.0), c(1.0), c(1.0)).unwrap();
        assert_eq!(eq.van_vleck().coeffs(), &[c(0.0), c(1.0)]);
    }

    #[test]
    fn polynomial_form_matches_gauss() {
        let (a, b, cc) = (Complex::new(0.3, 0.1), c(1.7), c(2.2));
        let form = FuchsianEquation::hypergeometric(a, b, cc).unwrap().polynomial_form();
        assert_eq!(form.p.coeffs(), &[c(0.0), c(-1.0), c(1.0)]);
        assert!(close(form.q.coeff(0), -cc, 1e-15));
        assert!(close(form.q.coeff(1), a + b + 1.0, 1e-15));
        assert!(close(form.r.coeff(0), a * b, 1e-15));

        let heun = FuchsianEquation::heun(c(3.0), c(1.0), c(1.0), c(2.0), c(1.0), c(2.0), c(1.0)).unwrap();
        assert_eq!(
            heun.polynomial_form().p.coeffs(),
            Polynomial::from_roots(&[c(0.0), c(1.0), c(3.0)]).coeffs()
        );

        let zero = FuchsianEquation::new(vec![c(0.0), c(1.0)], vec![c(0.0); 2], Polynomial::zero())
            .unwrap()
            .polynomial_form();
        assert!(zero.q.is_zero() && zero.r.is_zero());
    }

    #[test]
    fn shifted_frames() {
        let eq = FuchsianEquation::hypergeometric(c(0.5), c(0.25), c(1.5)).unwrap();
        let f0 = eq.shift_to_point(0).unwrap();
        assert_eq!(f0.p.coeffs(), &[c(0.0), c(-1.0), c(1.0)]);
        let f1 = eq.shift_to_point(1).unwrap();
        assert_eq!(f1.p.coeffs(), &[c(0.0), c(1.0), c(1.0)]);
        assert_eq!(eq.shift_to_point(2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));

        let heun = FuchsianEquation::heun(c(3.0), c(1.0), c(1.0), c(2.0), c(1.0), c(2.0), c(1.0)).unwrap();
        let f2 = heun.shift_to_point(2).unwrap();
        assert_eq!(f2.p.coeff(0), c(0.0));
        assert!(close(f2.p.coeff(1), c(6.0), 1e-14));
        assert_eq!(f2.p.degree(), 3);
        assert!(f2.q.degree() <= 2 && f2.r.degree() <= 1);
    }

    #[test]
    fn horner_shift_agrees_with_rebuilt_frame() {
        let heun = FuchsianEquation::heun(
            Complex::new(2.0, 1.0),
            c(0.4),
            c(1.5),
            c(0.5),
            c(0.7),
            c(0.9),
            c(1.4),
        )
        .unwrap();
        let form = heun.polynomial_form();
        for i in 0..3 {
            let frame = heun.shift_to_point(i).unwrap();
            let z = heun.points()[i];
            for (a, b) in [(&form.p, &frame.p), (&form.q, &frame.q), (&form.r, &frame.r)] {
                let shifted = a.taylor_shift(z);
                for d in 0..=3 {
                    assert!((shifted.coeff(d) - b.coeff(d)).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn indicial_examples() {
        let (a, b, cc) = (c(0.3), c(0.8), Complex::new(0.4, 0.2));
        let eq = FuchsianEquation::hypergeometric(a, b, cc).unwrap();
        let data = eq.shift_to_point(0).unwrap().indicial().unwrap();
        assert!(same_pair(&data, c(0.0), 1.0 - cc));

        let (gamma, delta) = (c(0.3), c(1.4));
        let (alpha, beta) = (c(0.5), c(1.5));
        let eps = alpha + beta - gamma - delta + 1.0;
        let heun = FuchsianEquation::heun(c(3.0), c(0.2), alpha, beta, gamma, delta, eps).unwrap();
        let d0 = heun.shift_to_point(0).unwrap().indicial().unwrap();
        assert!(same_pair(&d0, c(0.0), 1.0 - gamma));
        let d1 = heun.shift_to_point(1).unwrap().indicial().unwrap();
        assert!(same_pair(&d1, c(0.0), 1.0 - delta));
        let d2 = heun.shift_to_point(2).unwrap().indicial().unwrap();
        assert!(same_pair(&d2, c(0.0), 1.0 - eps));
        let inf = heun.indicial_at_infinity().unwrap();
        assert!(same_pair(&inf.data, alpha, beta));
        assert!(inf.singular);

        let gauss_inf = eq.indicial_at_infinity().unwrap();
        assert!(same_pair(&gauss_inf.data, a, b));

        let half = FuchsianEquation::new(vec![c(0.0), c(1.0)], vec![c(0.5); 2], Polynomial::zero()).unwrap();
        let d = half.indicial_at_infinity().unwrap();
        assert_eq!(d.data.class, ExponentClass::Equal);
        assert!(d.data.rho1.norm() < 1e-15 && d.data.rho2.norm() < 1e-15);
    }

    #[test]
    fn ordinary_infinity_flagged() {
        // f'' + (1/ξ + 1/(ξ-1)) f' = 0 has exponents {0, 1} at infinity and is regular there.
        let eq = FuchsianEquation::new(vec![c(0.0), c(1.0)], vec![c(1.0), c(1.0)], Polynomial::zero()).unwrap();
        let inf = eq.indicial_at_infinity().unwrap();
        assert!(!inf.singular);
        assert_eq!(inf.data.class, ExponentClass::IntegerDifference(1));
    }

    #[test]
    fn classification_and_ordering() {
        // roots 0 and 3
        let d = IndicialData::from_quadratic([c(0.0), c(-3.0), c(1.0)]).unwrap();
        assert_eq!(d.class, ExponentClass::IntegerDifference(3));
        assert_eq!(d.rho1, c(3.0));
        // roots ±i: equal real parts, ordered by imaginary part
        let d = IndicialData::from_quadratic([c(1.0), c(0.0), c(1.0)]).unwrap();
        assert!(d.rho1.im > 0.0 && d.class == ExponentClass::Generic);
        let d = IndicialData::from_quadratic([c(0.0), c(0.0), c(2.0)]).unwrap();
        assert_eq!(d.class, ExponentClass::Equal);
        assert_eq!(
            IndicialData::from_quadratic([c(1.0), c(1.0), c(0.0)]),
            Err(Error::DegenerateIndicial)
        );
    }

    #[test]
    fn pq_expansion_matches_indicial() {
        let (a, b, cc) = (c(0.3), c(0.8), c(1.7));
        let eq = FuchsianEquation::hypergeometric(a, b, cc).unwrap();
        let frame = eq.shift_to_point(0).unwrap();
        let (p, q) = frame.pq_expansion(6);
        assert!(close(p[0], cc, 1e-14));
        assert_eq!(q[0], c(0.0));
        // p(ξ) = (c - (a+b+1)ξ)/(1-ξ): p_j = c - (a+b+1) for j ≥ 1
        for pj in &p[1..] {
            assert!(close(*pj, cc - (a + b + 1.0), 1e-13));
        }
        // q(ξ) = abξ/(ξ-1) = -ab Σ_{j≥1} ξ^j
        for qj in &q[1..] {
            assert!(close(*qj, -a * b, 1e-13));
        }
        let g0 = frame.g0_coeffs();
        let ratio = g0[2];
        assert!(close(g0[1] / ratio, p[0] - 1.0, 1e-14));

        let heun = FuchsianEquation::heun(c(3.0), c(0.2), c(0.5), c(1.5), c(0.3), c(1.4), c(1.3)).unwrap();
        let (p, q) = heun.shift_to_point(0).unwrap().pq_expansion(0);
        assert!(close(p[0], c(0.3), 1e-14));
        assert_eq!(q[0], c(0.0));
    }

    #[test]
    fn gamma_recovery_and_shift_invariance() {
        let eq = FuchsianEquation::new(
            vec![c(0.0), c(1.0), Complex::new(-1.0, 2.0), c(4.0)],
            vec![c(0.3), Complex::new(0.7, -0.2), c(1.1), c(-0.4)],
            Polynomial::new(vec![c(0.5), Complex::new(0.1, 0.3), c(-0.2)]),
        )
        .unwrap();
        for i in 0..4 {
            assert!(close(eq.recovered_gamma(i), eq.gammas()[i], 1e-10));
        }
        let t = Complex::new(-3.5, 7.25);
        let moved = eq.translated(t);
        for i in 0..4 {
            let a = eq.shift_to_point(i).unwrap().indicial().unwrap();
            let b = moved.shift_to_point(i).unwrap().indicial().unwrap();
            assert!((a.rho1 - b.rho1).norm() < 1e-8 && (a.rho2 - b.rho2).norm() < 1e-8);
            assert_eq!(a.class, b.class);
        }
    }
}
