mod commands;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::Failure;

#[derive(Parser)]
#[command(name = "frobenius", version, about = "Local Frobenius solutions of Fuchsian equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesMethod {
    Direct,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecurrenceMethod {
    Direct,
    Closed,
    Tensor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    #[value(name = "1")]
    First,
    #[value(name = "2")]
    Second,
}

#[derive(Subcommand)]
enum Command {
    /// Exponents and classification at every singular point.
    Analyze { file: String },
    /// Series coefficients of a local solution.
    Coeffs {
        file: String,
        #[arg(long, default_value_t = 0)]
        point: usize,
        #[arg(long, value_enum, default_value = "1")]
        branch: Branch,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: SeriesMethod,
        /// Permit logarithmic second solutions.
        #[arg(long)]
        allow_log: bool,
    },
    /// Evaluate a local solution at the given points.
    Eval {
        file: String,
        #[arg(long, default_value_t = 0)]
        point: usize,
        #[arg(long, value_enum, default_value = "1")]
        branch: Branch,
        #[arg(long, default_value_t = 60)]
        order: usize,
        /// Evaluation point as "re,im" (or "re"); may be repeated.
        #[arg(long = "at", required = true, allow_hyphen_values = true)]
        at: Vec<String>,
        /// Evaluate outside the disk of convergence as well.
        #[arg(long)]
        force: bool,
    },
    /// Run the consistency checks on an equation or rule file.
    Verify {
        file: String,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Solve a standalone recurrence from a rule file.
    Recurrence {
        rulefile: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: RecurrenceMethod,
    },
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze { file } => commands::analyze(&file),
        Command::Coeffs {
            file,
            point,
            branch,
            order,
            method,
            allow_log,
        } => commands::coeffs(&file, point, branch, order, method, allow_log),
        Command::Eval {
            file,
            point,
            branch,
            order,
            at,
            force,
        } => commands::eval(&file, point, branch, order, &at, force),
        Command::Verify { file, order } => verify::verify(&file, order),
        Command::Recurrence {
            rulefile,
            order,
            method,
        } => commands::recurrence(&rulefile, order, method),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.stdout() {
                print!("{out}");
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
