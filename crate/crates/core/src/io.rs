//! JSON file formats for equations and standalone recurrence rules.
//!
//! Complex numbers are written as `[re, im]`; on input a bare number is accepted
//! for a real value.
//!
//! ```json
//! {"kind": "fuchsian", "singular_points": [[0,0],[1,0],[3,0]],
//!  "gammas": [[1,0],[1,0],[1,0]], "van_vleck": [[-0.5,0],[2,0]]}
//! {"kind": "hypergeometric", "params": {"a": 1, "b": [1,0], "c": 2}}
//! {"kind": "heun", "params": {"a": 3, "q": 0.5, "alpha": 1, "beta": 1,
//!  "gamma": 1, "delta": 1, "epsilon": 1}}
//! {"span": 2, "mu": [[[1,0],[0.5,0]], [[0,0],[2,0]]], "phi": [[0,0],[1,0]], "w0": [1,0]}
//! ```

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::equation::FuchsianEquation;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::recurrence::{CoefficientRule, InhomogeneityRule};
use crate::special::{HeunParams, HypergeometricParams};
use crate::Complex;

/// A complex number in file form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scalar(pub Complex);

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Real(f64),
    Pair([f64; 2]),
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match ScalarRepr::deserialize(d)? {
            ScalarRepr::Real(x) => Scalar(Complex::new(x, 0.0)),
            ScalarRepr::Pair([re, im]) => Scalar(Complex::new(re, im)),
        })
    }
}

fn unwrap_all(v: &[Scalar]) -> Vec<Complex> {
    v.iter().map(|s| s.0).collect()
}

fn wrap_all(v: &[Complex]) -> Vec<Scalar> {
    v.iter().copied().map(Scalar).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussParamsFile {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeunParamsFile {
    pub a: Scalar,
    pub q: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub delta: Scalar,
    pub epsilon: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EquationFile {
    Fuchsian {
        singular_points: Vec<Scalar>,
        gammas: Vec<Scalar>,
        van_vleck: Vec<Scalar>,
    },
    Hypergeometric {
        params: GaussParamsFile,
    },
    Heun {
        params: HeunParamsFile,
    },
}

impl EquationFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("equation files always serialize")
    }

    pub fn from_equation(eq: &FuchsianEquation) -> Self {
        EquationFile::Fuchsian {
            singular_points: wrap_all(eq.points()),
            gammas: wrap_all(eq.gammas()),
            van_vleck: wrap_all(eq.van_vleck().coeffs()),
        }
    }

    pub fn hypergeometric_params(&self) -> Result<Option<HypergeometricParams>> {
        match self {
            EquationFile::Hypergeometric { params: p } => {
                HypergeometricParams::new(p.a.0, p.b.0, p.c.0).map(Some)
            }
            _ => Ok(None),
        }
    }

    pub fn heun_params(&self) -> Result<Option<HeunParams>> {
        match self {
            EquationFile::Heun { params: p } => HeunParams::new(
                p.a.0, p.q.0, p.alpha.0, p.beta.0, p.gamma.0, p.delta.0, p.epsilon.0,
            )
            .map(Some),
            _ => Ok(None),
        }
    }

    /// Builds and validates the equation.
    pub fn to_equation(&self) -> Result<FuchsianEquation> {
        match self {
            EquationFile::Fuchsian {
                singular_points,
                gammas,
                van_vleck,
            } => FuchsianEquation::new(
                unwrap_all(singular_points),
                unwrap_all(gammas),
                Polynomial::new(unwrap_all(van_vleck)),
            ),
            EquationFile::Hypergeometric { params: p } => {
                FuchsianEquation::hypergeometric(p.a.0, p.b.0, p.c.0)
            }
            EquationFile::Heun { params: p } => FuchsianEquation::heun(
                p.a.0, p.q.0, p.alpha.0, p.beta.0, p.gamma.0, p.delta.0, p.epsilon.0,
            ),
        }
    }
}

/// A standalone recurrence: `mu[j-1][k-1] = μ(j,k)`, optional `phi[k-1] = Φ_k`
/// and starting value `w0` (alias `v0`, default 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleFile {
    pub span: usize,
    pub mu: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Scalar>>,
    #[serde(default, alias = "v0", skip_serializing_if = "Option::is_none")]
    pub w0: Option<Scalar>,
}

impl RuleFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rule files always serialize")
    }

    fn validate(&self) -> Result<()> {
        if self.span != self.mu.len() {
            return Err(Error::MalformedTable(format!(
                "span is {} but mu has {} rows",
                self.span,
                self.mu.len()
            )));
        }
        self.rule().map(|_| ())
    }

    /// Number of tabulated output indices `K`.
    pub fn columns(&self) -> usize {
        self.mu.first().map_or(0, Vec::len)
    }

    pub fn rule(&self) -> Result<CoefficientRule> {
        CoefficientRule::from_table(self.mu.iter().map(|row| unwrap_all(row)).collect())
    }

    pub fn inhomogeneity(&self) -> Option<InhomogeneityRule> {
        self.phi
            .as_ref()
            .map(|phi| InhomogeneityRule::Table(unwrap_all(phi)))
    }

    pub fn start_value(&self) -> Complex {
        self.w0.map_or(Complex::new(1.0, 0.0), |s| s.0)
    }
}
