use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lti_bounded::{
    decide, determinant, has_boundedness_property, minimal_polynomial, moebius_transform,
    IntPoly, Mode, RatMatrix,
};
use num_bigint::BigInt;

use lti_bounded_cli::{parse_matrix_file, trace};

/// Exact decisions on bounded trajectories of rational linear systems.
#[derive(Parser)]
#[command(name = "lti-bounded", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Continuous,
    Discrete,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Continuous => Mode::Continuous,
            ModeArg::Discrete => Mode::Discrete,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether sup ||e^(At)|| (continuous) or sup ||A^t|| (discrete) is finite.
    /// Prints YES or NO; exits 0 for YES and 1 for NO.
    Decide {
        #[arg(long, value_enum)]
        mode: ModeArg,
        file: PathBuf,
        /// Print the full decision report after the verdict.
        #[arg(long)]
        trace: bool,
        /// Include per-stage wall-clock timings in the trace.
        #[arg(long, requires = "trace")]
        timings: bool,
    },
    /// Print the minimal polynomial coefficients e0 .. ed of the numerator matrix.
    Minpoly { file: PathBuf },
    /// Run the boundedness test on c0 x^d + ... + cd. Exits 0 for YES and 1 for NO.
    CheckPoly {
        #[arg(required = true, allow_negative_numbers = true)]
        coeffs: Vec<BigInt>,
        /// Test roots against the unit circle instead of the imaginary axis.
        #[arg(long)]
        discrete: bool,
    },
    /// Print the exact determinant of the numerator matrix.
    Det { file: PathBuf },
}

const USAGE_ERROR: u8 = 2;

fn load(path: &Path) -> Result<RatMatrix, String> {
    let src = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_matrix_file(&src).map_err(|e| format!("{}:{e}", path.display()))
}

fn verdict_code(bounded: bool) -> ExitCode {
    println!("{}", if bounded { "YES" } else { "NO" });
    ExitCode::from(u8::from(!bounded))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Decide {
            mode,
            file,
            trace,
            timings,
        } => {
            let a = load(&file)?;
            let report = decide(&a, mode.into()).map_err(|e| e.to_string())?;
            let code = verdict_code(report.verdict.is_bounded());
            if trace {
                print!("{}", trace::render(&report, timings));
            }
            Ok(code)
        }
        Command::Minpoly { file } => {
            let a = load(&file)?;
            let p = minimal_polynomial(a.numerator()).map_err(|e| e.to_string())?;
            println!("{}", trace::coeff_list(&p.to_poly()));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckPoly { coeffs, discrete } => {
            let p = IntPoly::new(coeffs);
            if p.is_zero() {
                return Err("the zero polynomial has no verdict".into());
            }
            let input = if discrete && !p.is_constant() {
                moebius_transform(&p).map_err(|e| e.to_string())?.output
            } else {
                p
            };
            let verdict = has_boundedness_property(&input).map_err(|e| e.to_string())?;
            Ok(verdict_code(verdict.bounded))
        }
        Command::Det { file } => {
            let a = load(&file)?;
            let d = determinant(a.numerator()).map_err(|e| e.to_string())?;
            println!("{d}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
