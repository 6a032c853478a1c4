//! Consistency checks scoped to one equation or rule file.

use std::fmt::Write;

use fuchsian::io::{EquationFile, RuleFile};
use fuchsian::recurrence::{
    contract_multilinear, derive_rule, iterate_direct, iterate_direct_inhomogeneous,
    theorem1_by_compositions, theorem1_table, theorem2_table, CoefficientRule, InhomogeneityRule,
    TENSOR_MAX_ORDER,
};
use fuchsian::series::{
    first_solution_with, growth_bound, residual, second_solution_with, wronskian_check,
    FrobeniusSolution,
};
use fuchsian::special::{gauss_coefficients, heun_coefficients};
use fuchsian::{Complex, FuchsianEquation, Method, Result};

use crate::input::{any_file, check_order, Input};
use crate::output::{num, Failure};

/// Largest order checked against the explicit composition sum.
const COMPOSITION_MAX_ORDER: usize = 14;
const AGREEMENT_TOL: f64 = 1e-10;
const RESIDUAL_TOL: f64 = 1e-8;
const LOG_RESIDUAL_TOL: f64 = 1e-6;
const WRONSKIAN_TOL: f64 = 1e-6;
const PRESET_TOL: f64 = 1e-12;
const SAMPLES: usize = 5;

struct Report {
    rows: Vec<(String, String, f64, f64, bool)>,
}

impl Report {
    /// Records `measure ≤ tol`; errors count as failures with an infinite measure.
    fn check(&mut self, name: &str, scope: &str, tol: f64, measure: Result<f64>) {
        let (value, ok) = match measure {
            Ok(v) => (v, v <= tol),
            Err(e) => {
                eprintln!("{name} [{scope}]: {e}");
                (f64::INFINITY, false)
            }
        };
        self.rows.push((name.into(), scope.into(), value, tol, ok));
    }

    fn finish(self) -> std::result::Result<String, Failure> {
        let mut out = String::from("check,scope,measure,tolerance,status\n");
        let mut failed = 0;
        for (name, scope, value, tol, ok) in &self.rows {
            if !ok {
                failed += 1;
            }
            let status = if *ok { "pass" } else { "fail" };
            let _ = writeln!(out, "{name},{scope},{},{},{status}", num(*value), num(*tol));
        }
        if failed == 0 {
            Ok(out)
        } else {
            Err(Failure::Checks { report: out, failed })
        }
    }
}

fn rel_diff(a: &[Complex], b: &[Complex]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm() / x.norm().max(y.norm()).max(1e-300))
        .fold(0.0, f64::max)
}

fn circle(center: Complex, r: f64, count: usize) -> Vec<Complex> {
    (0..count)
        .map(|k| center + Complex::from_polar(r, 0.4 + std::f64::consts::TAU * k as f64 / count as f64))
        .collect()
}

pub fn verify(path: &str, order: usize) -> std::result::Result<String, Failure> {
    check_order(order)?;
    let mut report = Report { rows: Vec::new() };
    match any_file(path)? {
        Input::Equation(file) => verify_equation(&file, order, &mut report)?,
        Input::Rule(file) => verify_rule_file(&file, order, &mut report),
    }
    report.finish()
}

fn verify_equation(file: &EquationFile, order: usize, report: &mut Report) -> std::result::Result<(), Failure> {
    let eq = file.to_equation()?;
    let order = order.max(1);
    for i in 0..eq.finite_count() {
        verify_point(&eq, i, order, report);
    }
    if let Some(params) = file.hypergeometric_params()? {
        report.check("gauss_closed_form", "0", PRESET_TOL, (|| {
            let rule = derive_rule(&eq.shift_to_point(0)?, Complex::new(0.0, 0.0))?;
            let engine = theorem1_table(&rule, Complex::new(1.0, 0.0), order)?;
            Ok(rel_diff(&engine.values, &gauss_coefficients(&params, order)?))
        })());
    }
    if let Some(params) = file.heun_params()? {
        report.check("heun_closed_form", "0", PRESET_TOL, (|| {
            let rule = derive_rule(&eq.shift_to_point(0)?, Complex::new(0.0, 0.0))?;
            let engine = theorem1_table(&rule, Complex::new(1.0, 0.0), order)?;
            Ok(rel_diff(&engine.values, &heun_coefficients(&params, order)?))
        })());
    }
    Ok(())
}

fn pair(eq: &FuchsianEquation, i: usize, order: usize, method: Method) -> Result<(FrobeniusSolution, FrobeniusSolution)> {
    Ok((
        first_solution_with(eq, i, order, method)?,
        second_solution_with(eq, i, order, method)?,
    ))
}

fn verify_point(eq: &FuchsianEquation, i: usize, order: usize, report: &mut Report) {
    let scope = i.to_string();
    let frame = match eq.shift_to_point(i).and_then(|f| f.indicial().map(|d| (f, d))) {
        Ok(x) => x,
        Err(e) => return report.check("indicial", &scope, 0.0, Err(e)),
    };
    let (frame, data) = frame;
    report.check("indicial_residual", &scope, 1e-10, Ok(data.relative_residual(data.rho1).max(data.relative_residual(data.rho2))));

    let closed = pair(eq, i, order, Method::Closed);
    let direct = pair(eq, i, order, Method::Direct);
    let (f1, f2) = match (closed, direct) {
        (Ok(c), Ok(d)) => {
            report.check("direct_vs_closed_first", &scope, AGREEMENT_TOL, Ok(rel_diff(&c.0.coeffs.values, &d.0.coeffs.values)));
            report.check("direct_vs_closed_second", &scope, AGREEMENT_TOL, Ok(rel_diff(&c.1.coeffs.values, &d.1.coeffs.values)));
            c
        }
        (Err(e), _) | (_, Err(e)) => return report.check("solution_pair", &scope, 0.0, Err(e)),
    };

    let samples = circle(f1.point, 0.3 * f1.radius, SAMPLES);
    let worst = |sol: &FrobeniusSolution| -> Result<f64> {
        samples.iter().try_fold(0.0, |acc: f64, &xi| Ok(acc.max(residual(sol, xi)?)))
    };
    report.check("residual_first", &scope, RESIDUAL_TOL, worst(&f1));
    let tol = if f2.log.is_some() { LOG_RESIDUAL_TOL } else { RESIDUAL_TOL };
    report.check("residual_second", &scope, tol, worst(&f2));
    report.check("wronskian", &scope, WRONSKIAN_TOL, wronskian_check(&f1, &f2, &samples).map(|r| r.deviation));

    let rule = derive_rule(&frame, data.rho1);
    report.check("growth_bound", &scope, 0.0, (|| {
        let gb = growth_bound(&frame, data.rho1, 0.9 * frame.radius())?;
        Ok(if gb.dominates(&f1.coeffs.values) { 0.0 } else { 1.0 })
    })());
    match rule {
        Ok(rule) => verify_rule(&rule, Complex::new(1.0, 0.0), order, &scope, report),
        Err(e) => report.check("rule", &scope, 0.0, Err(e)),
    }
}

/// Composition sum and tensor contraction against the dynamic-programming table.
fn verify_rule(rule: &CoefficientRule, w0: Complex, order: usize, scope: &str, report: &mut Report) {
    let table = match theorem1_table(rule, w0, order) {
        Ok(t) => t.values,
        Err(e) => return report.check("closed_form", scope, 0.0, Err(e)),
    };
    report.check("compositions_vs_closed", scope, AGREEMENT_TOL, (|| {
        let mut worst: f64 = 0.0;
        for n in 0..=order.min(COMPOSITION_MAX_ORDER) {
            let w = theorem1_by_compositions(rule, w0, n)?;
            worst = worst.max(rel_diff(&[w], &[table[n]]));
        }
        Ok(worst)
    })());
    report.check("tensor_vs_closed", scope, AGREEMENT_TOL, (|| {
        let mut worst: f64 = 0.0;
        for n in 0..=order.min(TENSOR_MAX_ORDER).min(10) {
            let w = contract_multilinear(rule, n)? * w0;
            worst = worst.max(rel_diff(&[w], &[table[n]]));
        }
        Ok(worst)
    })());
}

fn verify_rule_file(file: &RuleFile, order: usize, report: &mut Report) {
    let rule = match file.rule() {
        Ok(r) => r,
        Err(e) => return report.check("rule", "table", 0.0, Err(e)),
    };
    let order = order.min(file.columns());
    let w0 = file.start_value();
    report.check("direct_vs_closed", "table", AGREEMENT_TOL, (|| {
        let a = iterate_direct(&rule, w0, order)?;
        let b = theorem1_table(&rule, w0, order)?;
        Ok(rel_diff(&a.values, &b.values))
    })());
    verify_rule(&rule, w0, order, "table", report);
    if let Some(phi) = file.inhomogeneity() {
        let order = order.min(file.phi.as_ref().map_or(0, Vec::len));
        report.check("inhomogeneous_direct_vs_closed", "table", AGREEMENT_TOL, (|| {
            let a = iterate_direct_inhomogeneous(&rule, &phi, w0, order)?;
            let b = theorem2_table(&rule, &phi, w0, order)?;
            Ok(rel_diff(&a.values, &b.values))
        })());
        report.check("inhomogeneous_linearity", "table", AGREEMENT_TOL, (|| {
            // v(w0, Φ) = v(w0, 0) + v(0, Φ)
            let full = theorem2_table(&rule, &phi, w0, order)?;
            let hom = theorem2_table(&rule, &InhomogeneityRule::Zero, w0, order)?;
            let part = theorem2_table(&rule, &phi, Complex::new(0.0, 0.0), order)?;
            let sum: Vec<Complex> = hom.values.iter().zip(&part.values).map(|(a, b)| a + b).collect();
            Ok(rel_diff(&full.values, &sum))
        })());
    }
}
