//! Local power-series (Frobenius) solutions of Fuchsian differential equations.
//!
//! A Fuchsian equation with finite regular singular points `ξ_1..ξ_F` (plus the
//! point at infinity) is written in normal form
//!
//! ```text
//! f'' + (Σ γ_i / (ξ - ξ_i)) f' + V(ξ) / Π (ξ - ξ_i) f = 0,   deg V ≤ F - 2
//! ```
//!
//! Around each finite singular point the Frobenius ansatz leads to an `(F-1)`-step
//! linear recurrence `w_k = Σ_j μ(j,k) w_{k-j}` (plus an inhomogeneous term for the
//! logarithmic second solution). The [`recurrence`] module solves such recurrences
//! by direct iteration and by the composition / multilinear-form closed forms; the
//! [`series`] module assembles complete local solution pairs and verifies them.

pub mod equation;
pub mod error;
pub mod io;
pub mod poly;
pub mod recurrence;
pub mod series;
pub mod special;

pub use num_complex::Complex64 as Complex;

pub use equation::{
    ExponentClass, FuchsianEquation, IndicialData, InfinityIndicial, LocalFrame, PolynomialForm,
};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use recurrence::{CoefficientRule, CoefficientTable, InhomogeneityRule, RuleSource};
pub use series::{EvaluationResult, FrobeniusSolution, GrowthBound, LogTerm, Method};

/// Shorthand for a purely real complex number.
#[inline]
pub fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

#[inline]
pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
