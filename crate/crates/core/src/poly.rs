//! Dense univariate polynomials over binary64 complex numbers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::Complex;

/// Polynomial with coefficients stored in ascending degree.
///
/// The highest stored coefficient is always nonzero; the zero polynomial has no
/// stored coefficients.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Complex>", into = "Vec<Complex>")]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl From<Vec<Complex>> for Polynomial {
    fn from(coeffs: Vec<Complex>) -> Self {
        Self::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Complex> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex) -> Self {
        Self::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    /// Monic product `Π (x - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Complex>) -> Self {
        let mut coeffs = vec![Complex::new(1.0, 0.0)];
        for &r in roots {
            coeffs.push(Complex::new(0.0, 0.0));
            for d in (1..coeffs.len()).rev() {
                let lower = coeffs[d - 1];
                coeffs[d] = lower - r * coeffs[d];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^d`; zero beyond the stored range.
    pub fn coeff(&self, d: usize) -> Complex {
        self.coeffs.get(d).copied().unwrap_or_default()
    }

    pub fn eval(&self, x: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Value together with first and second derivative.
    pub fn eval_with_derivatives(&self, x: Complex) -> (Complex, Complex, Complex) {
        let zero = Complex::new(0.0, 0.0);
        let (mut p, mut dp, mut ddp) = (zero, zero, zero);
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * x + dp * 2.0;
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp, ddp)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, &c)| c * d as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// `p(x + t)` by repeated synthetic division (Horner's scheme).
    pub fn taylor_shift(&self, t: Complex) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let hi = c[j + 1];
                c[j] += t * hi;
            }
        }
        Self::new(c)
    }

    /// Exact quotient by `(x - r)` via synthetic division, returning (quotient, remainder).
    pub fn divide_linear(&self, r: Complex) -> (Self, Complex) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Complex::new(0.0, 0.0));
        }
        let n = self.coeffs.len();
        let mut q = vec![Complex::new(0.0, 0.0); n - 1];
        let mut acc = Complex::new(0.0, 0.0);
        for d in (0..n).rev() {
            acc = acc * r + self.coeffs[d];
            if d > 0 {
                q[d - 1] = acc;
            }
        }
        (Self::new(q), acc)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|&c| crate::is_finite(c))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Complex::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Complex::new(0.0, 0.0))
            .map(|(d, c)| match d {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
