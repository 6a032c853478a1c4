//! Local solution pairs at a finite singular point.
//!
//! The first solution uses the exponent with the larger real part and is never
//! resonant. The second solution is a plain Frobenius series when the exponents
//! do not differ by an integer; otherwise it has the form
//!
//! ```text
//! f₂ = A ln(η) f₁(η) + Σ_k v_k η^{k+ρ₂},   η = ξ - ξ_i,
//! ```
//!
//! where `A` is fixed by the consistency condition at the resonant index `m`
//! (with gauge `v_m = 0`), or `A = 1, v_0 = 0` when the exponents coincide.
//! Substituting this form into `P f'' + Q f' + R f = 0` gives the inhomogeneous
//! recurrence `v_k = Σ_j μ(j,k) v_{k-j} + Φ_k` with
//! `Φ_k = -A T_k / g₀(ρ₂+k)` and `T_k = Σ_j w_{k-m-j} g_j'(ρ₁+k-m-j)`.

mod eval;
mod growth;
mod wronskian;

pub use eval::{evaluate, evaluate_derivatives, residual, EvaluationResult};
pub(crate) use eval::geometric_tail;
pub use growth::{empirical_radius, growth_bound, GrowthBound, RadiusEstimate};
pub use wronskian::{wronskian_check, wronskian_factor, wronskian_factor_local, WronskianReport};

use crate::equation::{ExponentClass, FuchsianEquation, LocalFrame};
use crate::error::Result;
use crate::recurrence::{
    derive_rule, derive_rule_unchecked, iterate_direct, iterate_direct_inhomogeneous,
    theorem1_table, theorem2_table, CoefficientRule, CoefficientTable, InhomogeneityRule, OdeRule,
};
use crate::Complex;

/// How recurrence coefficients are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Forward iteration of the recurrence.
    Direct,
    /// Transfer-bracket closed forms (homogeneous and inhomogeneous).
    #[default]
    Closed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogTerm {
    /// The constant `A` multiplying `ln(η) f₁`.
    pub coefficient: Complex,
    /// Coefficients of `f₁`; `start_exponent` is `ρ₁`.
    pub partner: CoefficientTable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusSolution {
    pub equation: FuchsianEquation,
    pub point_index: usize,
    pub point: Complex,
    pub exponent: Complex,
    pub coeffs: CoefficientTable,
    pub log: Option<LogTerm>,
    /// Distance to the nearest other finite singular point.
    pub radius: f64,
}

impl FrobeniusSolution {
    pub fn log_coefficient(&self) -> Complex {
        self.log
            .as_ref()
            .map_or(Complex::new(0.0, 0.0), |l| l.coefficient)
    }

    pub fn order(&self) -> usize {
        self.coeffs.order()
    }
}

fn table_for(rule: &CoefficientRule, w0: Complex, n: usize, method: Method) -> Result<CoefficientTable> {
    match method {
        Method::Direct => iterate_direct(rule, w0, n),
        Method::Closed => theorem1_table(rule, w0, n),
    }
}

fn inhomogeneous_table_for(
    rule: &CoefficientRule,
    phi: &InhomogeneityRule,
    v0: Complex,
    n: usize,
    method: Method,
) -> Result<CoefficientTable> {
    match method {
        Method::Direct => iterate_direct_inhomogeneous(rule, phi, v0, n),
        Method::Closed => theorem2_table(rule, phi, v0, n),
    }
}

fn assemble(
    eq: &FuchsianEquation,
    i: usize,
    exponent: Complex,
    coeffs: CoefficientTable,
    log: Option<LogTerm>,
) -> FrobeniusSolution {
    FrobeniusSolution {
        equation: eq.clone(),
        point_index: i,
        point: eq.points()[i],
        exponent,
        coeffs,
        log,
        radius: eq.radius(i),
    }
}

/// Plain Frobenius series `Σ w_k η^{k+ρ}` with `w_0 = 1` at a non-resonant exponent.
pub fn solution_at_exponent(
    eq: &FuchsianEquation,
    i: usize,
    rho: Complex,
    n: usize,
    method: Method,
) -> Result<FrobeniusSolution> {
    let frame = eq.shift_to_point(i)?;
    let rule = derive_rule(&frame, rho)?;
    let coeffs = table_for(&rule, Complex::new(1.0, 0.0), n, method)?;
    Ok(assemble(eq, i, rho, coeffs, None))
}

pub fn first_solution(eq: &FuchsianEquation, i: usize, n: usize) -> Result<FrobeniusSolution> {
    first_solution_with(eq, i, n, Method::Closed)
}

pub fn first_solution_with(
    eq: &FuchsianEquation,
    i: usize,
    n: usize,
    method: Method,
) -> Result<FrobeniusSolution> {
    let frame = eq.shift_to_point(i)?;
    let rho1 = frame.indicial()?.rho1;
    solution_at_exponent(eq, i, rho1, n, method)
}

pub fn second_solution(eq: &FuchsianEquation, i: usize, n: usize) -> Result<FrobeniusSolution> {
    second_solution_with(eq, i, n, Method::Closed)
}

pub fn second_solution_with(
    eq: &FuchsianEquation,
    i: usize,
    n: usize,
    method: Method,
) -> Result<FrobeniusSolution> {
    let frame = eq.shift_to_point(i)?;
    let indicial = frame.indicial()?;
    match indicial.class {
        ExponentClass::Generic => solution_at_exponent(eq, i, indicial.rho2, n, method),
        ExponentClass::IntegerDifference(m) => {
            let rho1 = indicial.rho1;
            let (exponent, coeffs, log) = logarithmic_branch(&frame, rho1, m, n, method)?;
            Ok(assemble(eq, i, exponent, coeffs, log.map(|(a, partner)| LogTerm { coefficient: a, partner })))
        }
        ExponentClass::Equal => {
            let rho = indicial.rho1;
            let (exponent, coeffs, log) = logarithmic_branch(&frame, rho, 0, n, method)?;
            Ok(assemble(eq, i, exponent, coeffs, log.map(|(a, partner)| LogTerm { coefficient: a, partner })))
        }
    }
}

type Branch = (Complex, CoefficientTable, Option<(Complex, CoefficientTable)>);

/// Second solution at exponent `ρ₂ = ρ₁ - m` (`m = 0` for equal exponents).
fn logarithmic_branch(frame: &LocalFrame, rho1: Complex, m: usize, n: usize, method: Method) -> Result<Branch> {
    let rho2 = rho1 - m as f64;
    let one = Complex::new(1.0, 0.0);
    let zero = Complex::new(0.0, 0.0);
    let n_eff = n.max(m);

    let rule1 = derive_rule(frame, rho1)?;
    let w = table_for(&rule1, one, n_eff, method)?;
    let rule2 = derive_rule_unchecked(frame, rho2)?;
    let ode: OdeRule = rule2.ode().expect("ODE-derived rule").clone();
    let span = rule2.span();

    // T_k for k ≥ m: cross terms produced by ln(η) acting on f₁
    let cross = |k: usize| -> Complex {
        let top = k - m;
        (0..=top.min(span))
            .map(|j| w.values[top - j] * ode.g_prime(j, rho1 + (top - j) as f64))
            .sum()
    };

    let (a, head) = if m == 0 {
        (one, vec![zero])
    } else {
        // v_0..v_{m-1} are homogeneous; index m fixes A
        let head = table_for(&rule2, one, m - 1, method)?.values;
        let s: Complex = (1..=span.min(m))
            .map(|j| head[m - j] * ode.g(j, rho2 + (m - j) as f64))
            .sum();
        let a = -s / ode.g_prime(0, rho1);
        let mut head = head;
        head.push(zero); // gauge v_m = 0
        (a, head)
    };

    // restart the recurrence at index m: u_t = v_{m+t}
    let tail_len = n_eff - m;
    let shifted = rule2.shifted(m);
    let mut phi = Vec::with_capacity(tail_len);
    for t in 1..=tail_len {
        let k = m + t;
        let mut value = -a * cross(k) / ode.g(0, rho2 + k as f64);
        for j in t + 1..=span.min(k) {
            value += rule2.mu(j, k)? * head[k - j];
        }
        phi.push(value);
    }
    let tail = inhomogeneous_table_for(&shifted, &InhomogeneityRule::Table(phi), head[m], tail_len, method)?;

    let mut values = head;
    values.extend_from_slice(&tail.values[1..]);
    values.truncate(n + 1);
    let coeffs = CoefficientTable {
        values,
        start_exponent: rho2,
    };
    let log = if a == zero {
        None
    } else {
        let mut partner = w;
        partner.values.truncate(n + 1);
        Some((a, partner))
    };
    Ok((rho2, coeffs, log))
}
