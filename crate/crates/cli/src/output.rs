use std::fmt::Write;

use fuchsian::{Complex, Error};

/// A failed command: exit code 1 for invalid input, 2 for numeric/domain problems.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Numeric(String),
    /// Verification ran but some checks failed; carries the report.
    Checks { report: String, failed: usize },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) | Failure::Checks { .. } => 1,
            Failure::Numeric(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Invalid(m) | Failure::Numeric(m) => m.clone(),
            Failure::Checks { failed, .. } => format!("{failed} check(s) failed"),
        }
    }

    pub fn stdout(&self) -> Option<&str> {
        match self {
            Failure::Checks { report, .. } => Some(report),
            _ => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numeric() {
            Failure::Numeric(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

/// Fixed 17-significant-digit form; negative zero prints as zero.
pub fn num(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

pub fn push_complex(line: &mut String, z: Complex) {
    let _ = write!(line, "{},{}", num(z.re), num(z.im));
}

/// `k,w_re,w_im` rows.
pub fn coefficient_csv(values: &[Complex]) -> String {
    let mut out = String::from("k,w_re,w_im\n");
    for (k, w) in values.iter().enumerate() {
        let _ = write!(out, "{k},");
        push_complex(&mut out, *w);
        out.push('\n');
    }
    out
}
