use std::fmt::Write;

use rayon::prelude::*;

use fuchsian::recurrence::{
    contract_multilinear, iterate_direct, iterate_direct_inhomogeneous, theorem1_table,
    theorem2_table,
};
use fuchsian::series::{evaluate, first_solution_with, residual, second_solution_with};
use fuchsian::{Complex, Error, ExponentClass, FrobeniusSolution, FuchsianEquation, Method};

use crate::input::{check_order, equation_file, parse_point, rule_file};
use crate::output::{coefficient_csv, num, push_complex, Failure};
use crate::{Branch, RecurrenceMethod, SeriesMethod};

pub fn analyze(path: &str) -> Result<String, Failure> {
    let eq = equation_file(path)?.to_equation()?;
    let mut out = String::from("point_re,point_im,rho1_re,rho1_im,rho2_re,rho2_im,classification,radius\n");
    for (i, &z) in eq.points().iter().enumerate() {
        let data = eq.shift_to_point(i)?.indicial()?;
        push_complex(&mut out, z);
        out.push(',');
        push_complex(&mut out, data.rho1);
        out.push(',');
        push_complex(&mut out, data.rho2);
        let _ = writeln!(out, ",{},{}", data.class, num(eq.radius(i)));
    }
    let inf = eq.indicial_at_infinity()?;
    let reach = eq.points().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let class = if inf.singular {
        inf.data.class.to_string()
    } else {
        "ordinary".to_string()
    };
    out.push_str("inf,inf,");
    push_complex(&mut out, inf.data.rho1);
    out.push(',');
    push_complex(&mut out, inf.data.rho2);
    let _ = writeln!(out, ",{class},{}", num(1.0 / reach));
    Ok(out)
}

fn series_method(m: SeriesMethod) -> Method {
    match m {
        SeriesMethod::Direct => Method::Direct,
        SeriesMethod::Closed => Method::Closed,
    }
}

fn solution(
    eq: &FuchsianEquation,
    point: usize,
    branch: Branch,
    order: usize,
    method: Method,
    allow_log: bool,
) -> Result<FrobeniusSolution, Failure> {
    check_order(order)?;
    match branch {
        Branch::First => Ok(first_solution_with(eq, point, order, method)?),
        Branch::Second => {
            let class = eq.shift_to_point(point)?.indicial()?.class;
            if class != ExponentClass::Generic && !allow_log {
                return Err(Failure::Numeric(format!(
                    "exponents at point {point} are resonant ({class}); pass --allow-log for the logarithmic solution"
                )));
            }
            Ok(second_solution_with(eq, point, order, method)?)
        }
    }
}

pub fn coeffs(
    path: &str,
    point: usize,
    branch: Branch,
    order: usize,
    method: SeriesMethod,
    allow_log: bool,
) -> Result<String, Failure> {
    let eq = equation_file(path)?.to_equation()?;
    let sol = solution(&eq, point, branch, order, series_method(method), allow_log)?;
    if let Some(log) = &sol.log {
        eprintln!(
            "note: logarithmic solution, coefficient of ln(x - x0) * f1 is {},{}",
            num(log.coefficient.re),
            num(log.coefficient.im)
        );
    }
    Ok(coefficient_csv(&sol.coeffs.values))
}

pub fn eval(
    path: &str,
    point: usize,
    branch: Branch,
    order: usize,
    at: &[String],
    force: bool,
) -> Result<String, Failure> {
    let eq = equation_file(path)?.to_equation()?;
    let points = at.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?;
    // logarithmic branches are expected when evaluating
    let sol = solution(&eq, point, branch, order, Method::Closed, true)?;
    let rows: Vec<Result<String, Failure>> = points
        .par_iter()
        .map(|&xi| {
            let res = evaluate(&sol, xi)?;
            if !res.in_domain && !force {
                return Err(Error::OutOfDisk {
                    modulus: (xi - sol.point).norm(),
                    radius: sol.radius,
                }
                .into());
            }
            let r = residual(&sol, xi)?;
            let mut line = String::new();
            push_complex(&mut line, xi);
            line.push(',');
            push_complex(&mut line, res.value);
            let _ = writeln!(line, ",{},{}", num(res.tail_bound), num(r));
            Ok(line)
        })
        .collect();
    let mut out = String::from("xi_re,xi_im,f_re,f_im,tail_bound,residual\n");
    for row in rows {
        out.push_str(&row?);
    }
    Ok(out)
}

pub fn recurrence(path: &str, order: usize, method: RecurrenceMethod) -> Result<String, Failure> {
    check_order(order)?;
    let file = rule_file(path)?;
    let rule = file.rule()?;
    let w0 = file.start_value();
    let phi = file.inhomogeneity();
    let values: Vec<Complex> = match (method, &phi) {
        (RecurrenceMethod::Direct, None) => iterate_direct(&rule, w0, order)?.values,
        (RecurrenceMethod::Closed, None) => theorem1_table(&rule, w0, order)?.values,
        (RecurrenceMethod::Direct, Some(phi)) => iterate_direct_inhomogeneous(&rule, phi, w0, order)?.values,
        (RecurrenceMethod::Closed, Some(phi)) => theorem2_table(&rule, phi, w0, order)?.values,
        (RecurrenceMethod::Tensor, Some(_)) => {
            return Err(Failure::Invalid(
                "the tensor method handles homogeneous rules only (remove phi)".into(),
            ))
        }
        (RecurrenceMethod::Tensor, None) => {
            // check the table length up front so the error matches the other methods
            if order > 0 {
                rule.mu(1, order)?;
            }
            (0..=order)
                .map(|n| contract_multilinear(&rule, n).map(|x| x * w0))
                .collect::<Result<_, _>>()?
        }
    };
    Ok(coefficient_csv(&values))
}
