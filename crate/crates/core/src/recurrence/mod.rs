//! Linear recurrences `w_k = Σ_{j=1}^{s} μ(j,k) w_{k-j} (+ Φ_k)` and their
//! solutions.
//!
//! Every coefficient is evaluated at the *output* index `k`; terms that would
//! reference a negative index are dropped. Three evaluation routes exist:
//!
//! * [`iterate_direct`] / [`iterate_direct_inhomogeneous`]: plain forward iteration,
//! * [`closed_form`]: the transfer bracket `B(N,p)` (a sum over compositions of
//!   `N - p`) evaluated by dynamic programming, plus the explicit composition sum,
//! * [`tensor`]: the full contraction of the 0/1 index tensor `W` against the
//!   coefficient vectors `X`.

pub mod closed_form;
pub mod tensor;

use std::fmt;
use std::sync::Arc;

use crate::equation::{IndicialData, LocalFrame, RESONANCE_TOL};
use crate::error::{Error, Result};
use crate::Complex;

pub use closed_form::{
    enumerate_compositions, theorem1_by_compositions, theorem1_closed_form, theorem1_table,
    theorem2_closed_form, theorem2_table, transfer_bracket, transfer_column, transfer_row,
};
pub use tensor::{
    contract_multilinear, count_admissible, w_tensor_component, WIndexTuple, TENSOR_MAX_ORDER,
};

/// Relative residual accepted for `g₀(ρ) = 0` when deriving a rule.
pub const EXPONENT_TOL: f64 = 1e-8;

type MuFn = dyn Fn(usize, usize) -> Complex + Send + Sync;
type PhiFn = dyn Fn(usize) -> Complex + Send + Sync;

/// Recurrence data obtained from the Frobenius ansatz at a singular point.
///
/// With `g_j(x) = P_{j+1} x(x-1) + Q_j x + R_{j-1}` built from the shifted
/// polynomial form, `μ(j,k) = -g_j(ρ+k-j) / g₀(ρ+k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeRule {
    pub point_index: usize,
    pub rho: Complex,
    /// Quadratic coefficients `[c0, c1, c2]` of `g_0..g_s`.
    pub g: Vec<[Complex; 3]>,
    /// Output index at which `g₀(ρ+k)` vanishes, if any.
    pub resonance: Option<usize>,
}

impl OdeRule {
    pub fn g(&self, j: usize, x: Complex) -> Complex {
        match self.g.get(j) {
            Some([c0, c1, c2]) => c0 + x * (c1 + x * c2),
            None => Complex::new(0.0, 0.0),
        }
    }

    /// `d g_j / dx` (without the constant `R` term, which does not depend on `x`).
    pub fn g_prime(&self, j: usize, x: Complex) -> Complex {
        match self.g.get(j) {
            Some([_, c1, c2]) => c1 + x * c2 * 2.0,
            None => Complex::new(0.0, 0.0),
        }
    }
}

#[derive(Clone)]
pub enum RuleSource {
    Ode(OdeRule),
    /// `table[j-1][k-1] = μ(j,k)`.
    Table(Vec<Vec<Complex>>),
    Function(Arc<MuFn>),
}

impl fmt::Debug for RuleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSource::Ode(r) => f.debug_tuple("Ode").field(r).finish(),
            RuleSource::Table(t) => f.debug_tuple("Table").field(t).finish(),
            RuleSource::Function(_) => f.write_str("Function(..)"),
        }
    }
}

/// The coefficient functional `μ(j,k)` of a recurrence with span `s`.
#[derive(Debug, Clone)]
pub struct CoefficientRule {
    span: usize,
    /// Index shift: `mu(j,k)` reads the source at `k + offset`.
    offset: usize,
    source: RuleSource,
}

impl CoefficientRule {
    pub fn from_table(table: Vec<Vec<Complex>>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::MalformedTable("span must be at least 1".into()));
        }
        let k = table[0].len();
        if k == 0 {
            return Err(Error::MalformedTable("table needs at least one column".into()));
        }
        if let Some(j) = table.iter().position(|row| row.len() != k) {
            return Err(Error::MalformedTable(format!(
                "row {} has {} entries, expected {k}",
                j + 1,
                table[j].len()
            )));
        }
        if !table.iter().flatten().copied().all(crate::is_finite) {
            return Err(Error::NonFinite("rule table"));
        }
        Ok(Self {
            span: table.len(),
            offset: 0,
            source: RuleSource::Table(table),
        })
    }

    pub fn from_fn(span: usize, mu: impl Fn(usize, usize) -> Complex + Send + Sync + 'static) -> Self {
        assert!(span >= 1, "span must be at least 1");
        Self {
            span,
            offset: 0,
            source: RuleSource::Function(Arc::new(mu)),
        }
    }

    pub fn span(&self) -> usize {
        self.span
    }

    pub fn source(&self) -> &RuleSource {
        &self.source
    }

    pub fn ode(&self) -> Option<&OdeRule> {
        match &self.source {
            RuleSource::Ode(r) => Some(r),
            _ => None,
        }
    }

    /// Exponent carried as metadata into coefficient tables.
    pub fn start_exponent(&self) -> Complex {
        match &self.source {
            RuleSource::Ode(r) => r.rho + self.offset as f64,
            _ => Complex::new(0.0, 0.0),
        }
    }

    /// Number of output indices available (tables only).
    pub fn table_len(&self) -> Option<usize> {
        match &self.source {
            RuleSource::Table(t) => Some(t[0].len().saturating_sub(self.offset)),
            _ => None,
        }
    }

    /// The rule re-indexed so that output index `k` reads the original at `k + m`.
    pub fn shifted(&self, m: usize) -> Self {
        Self {
            span: self.span,
            offset: self.offset + m,
            source: self.source.clone(),
        }
    }

    /// `μ(j,k)`; zero for `j` outside `1..=span`.
    pub fn mu(&self, j: usize, k: usize) -> Result<Complex> {
        if j == 0 || j > self.span {
            return Ok(Complex::new(0.0, 0.0));
        }
        let k = k + self.offset;
        match &self.source {
            RuleSource::Ode(r) => {
                if r.resonance == Some(k) {
                    return Err(Error::Resonance(k));
                }
                let x = r.rho + k as f64;
                Ok(-r.g(j, x - j as f64) / r.g(0, x))
            }
            RuleSource::Table(t) => t[j - 1]
                .get(k.wrapping_sub(1))
                .copied()
                .ok_or(Error::TableTooShort {
                    requested: k,
                    available: t[j - 1].len(),
                }),
            RuleSource::Function(f) => Ok(f(j, k)),
        }
    }
}

/// Inhomogeneous term `Φ_k`, `k ≥ 1`.
#[derive(Clone)]
pub enum InhomogeneityRule {
    Zero,
    /// `table[k-1] = Φ_k`.
    Table(Vec<Complex>),
    Function(Arc<PhiFn>),
}

impl fmt::Debug for InhomogeneityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InhomogeneityRule::Zero => f.write_str("Zero"),
            InhomogeneityRule::Table(t) => f.debug_tuple("Table").field(t).finish(),
            InhomogeneityRule::Function(_) => f.write_str("Function(..)"),
        }
    }
}

impl InhomogeneityRule {
    pub fn from_fn(phi: impl Fn(usize) -> Complex + Send + Sync + 'static) -> Self {
        InhomogeneityRule::Function(Arc::new(phi))
    }

    pub fn phi(&self, k: usize) -> Result<Complex> {
        match self {
            InhomogeneityRule::Zero => Ok(Complex::new(0.0, 0.0)),
            InhomogeneityRule::Table(t) => {
                t.get(k.wrapping_sub(1)).copied().ok_or(Error::TableTooShort {
                    requested: k,
                    available: t.len(),
                })
            }
            InhomogeneityRule::Function(f) => Ok(f(k)),
        }
    }
}

/// Series coefficients `w_0..w_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pub values: Vec<Complex>,
    pub start_exponent: Complex,
}

impl CoefficientTable {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }
}

/// Recurrence rule of the Frobenius ansatz at `frame` with exponent `rho`.
///
/// Fails with [`Error::Resonance`] when `g₀(ρ+k)` vanishes for some positive `k`,
/// which is where the logarithmic second solution takes over.
pub fn derive_rule(frame: &LocalFrame, rho: Complex) -> Result<CoefficientRule> {
    let rule = derive_rule_unchecked(frame, rho)?;
    if let Some(k) = rule.ode().and_then(|r| r.resonance) {
        return Err(Error::Resonance(k));
    }
    Ok(rule)
}

/// As [`derive_rule`], but a resonant index only fails when `μ` is evaluated there.
pub(crate) fn derive_rule_unchecked(frame: &LocalFrame, rho: Complex) -> Result<CoefficientRule> {
    let indicial = frame.indicial()?;
    let residual = indicial.relative_residual(rho);
    if !(residual <= EXPONENT_TOL) {
        return Err(Error::NotAnExponent(residual));
    }
    let span = frame.finite_count() - 1;
    let g = (0..=span)
        .map(|j| {
            let p = frame.p.coeff(j + 1);
            let q = frame.q.coeff(j);
            let r = if j == 0 {
                Complex::new(0.0, 0.0)
            } else {
                frame.r.coeff(j - 1)
            };
            [r, q - p, p]
        })
        .collect();
    Ok(CoefficientRule {
        span,
        offset: 0,
        source: RuleSource::Ode(OdeRule {
            point_index: frame.origin_index,
            rho,
            g,
            resonance: resonant_index(&indicial, rho),
        }),
    })
}

/// Smallest `k ≥ 1` with `ρ + k` a root of the indicial polynomial.
pub(crate) fn resonant_index(indicial: &IndicialData, rho: Complex) -> Option<usize> {
    [indicial.rho1, indicial.rho2]
        .into_iter()
        .filter_map(|root| {
            let d = root - rho;
            let m = d.re.round();
            (m >= 1.0 && (d - m).norm() < RESONANCE_TOL).then_some(m as usize)
        })
        .min()
}

pub fn iterate_direct(rule: &CoefficientRule, w0: Complex, n: usize) -> Result<CoefficientTable> {
    iterate_direct_inhomogeneous(rule, &InhomogeneityRule::Zero, w0, n)
}

pub fn iterate_direct_inhomogeneous(
    rule: &CoefficientRule,
    phi: &InhomogeneityRule,
    v0: Complex,
    n: usize,
) -> Result<CoefficientTable> {
    let mut values = Vec::with_capacity(n + 1);
    values.push(v0);
    for k in 1..=n {
        let mut acc = phi.phi(k)?;
        for j in 1..=k.min(rule.span()) {
            acc += rule.mu(j, k)? * values[k - j];
        }
        values.push(acc);
    }
    Ok(CoefficientTable {
        values,
        start_exponent: rule.start_exponent(),
    })
}
