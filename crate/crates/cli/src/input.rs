use std::fs;

use fuchsian::io::{EquationFile, RuleFile};
use fuchsian::Complex;

use crate::output::Failure;

const DEFAULT_MAX_ORDER: usize = 4096;

pub enum Input {
    Equation(EquationFile),
    Rule(RuleFile),
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {path}: {e}")))
}

pub fn equation_file(path: &str) -> Result<EquationFile, Failure> {
    Ok(EquationFile::parse(&read(path)?)?)
}

pub fn rule_file(path: &str) -> Result<RuleFile, Failure> {
    Ok(RuleFile::parse(&read(path)?)?)
}

/// Equation files carry a `kind` tag; anything else is read as a rule file.
pub fn any_file(path: &str) -> Result<Input, Failure> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("parse error: {e}")))?;
    if value.get("kind").is_some() {
        Ok(Input::Equation(EquationFile::parse(&text)?))
    } else {
        Ok(Input::Rule(RuleFile::parse(&text)?))
    }
}

/// Rejects orders above `FROBENIUS_MAX_ORDER` (default 4096).
pub fn check_order(order: usize) -> Result<(), Failure> {
    let limit = match std::env::var("FROBENIUS_MAX_ORDER") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Invalid(format!("FROBENIUS_MAX_ORDER is not a valid order: {v:?}")))?,
        Err(_) => DEFAULT_MAX_ORDER,
    };
    if order > limit {
        return Err(Failure::Invalid(format!("order {order} exceeds the limit {limit}")));
    }
    Ok(())
}

/// Parses `"re,im"` or `"re"`.
pub fn parse_point(s: &str) -> Result<Complex, Failure> {
    let bad = || Failure::Invalid(format!("invalid point {s:?}, expected \"re,im\""));
    let mut parts = s.split(',').map(str::trim);
    let re: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let im: f64 = match parts.next() {
        Some(p) => p.parse().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() || !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(Complex::new(re, im))
}
