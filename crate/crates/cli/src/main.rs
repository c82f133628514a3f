//! `darboux-osc`: CSV/JSON data for partner potentials and Painlevé IV solutions,
//! plus JSON verification reports.

mod commands;
mod table;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use darboux_osc::seeds::Parity;
use darboux_osc::susy::TransformCase;
use darboux_osc::Error;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use table::Sampling;

#[derive(Parser)]
#[command(name = "darboux-osc", version, about = "SUSY partners of the half-line oscillator and PIV solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a partner potential and its lowest normalized eigenfunctions.
    Potential {
        /// Odd1, Even1, OddOdd, EvenEven, OddEven or EvenOdd.
        #[arg(long, value_parser = parse_case)]
        case: TransformCase,
        #[arg(long, allow_hyphen_values = true)]
        eps1: f64,
        /// Required by the second-order cases.
        #[arg(long, allow_hyphen_values = true)]
        eps2: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate a closed-form PIV solution g with its pointwise residual.
    Piv {
        /// 1 or 2.
        #[arg(long)]
        order: u8,
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Permutation index 1, 2 or 3.
        #[arg(long)]
        index: u8,
        /// The factorization energy ε.
        #[arg(long, alias = "epsilon", allow_hyphen_values = true)]
        eps1: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Parameter file; defaults to the --out path with a .json extension.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Output sampling xᵢ = i·L/N on [0, L].
#[derive(Args)]
struct GridArgs {
    /// Number of intervals [potential: 1200, piv: 1000].
    #[arg(long = "grid-n")]
    grid_n: Option<usize>,
    /// Right end of the interval [potential: 12, piv: 5].
    #[arg(long = "grid-l")]
    grid_l: Option<f64>,
}

impl GridArgs {
    fn sampling(&self, l: f64, n: usize) -> Result<Sampling, Failure> {
        let (l, n) = (self.grid_l.unwrap_or(l), self.grid_n.unwrap_or(n));
        if !(l.is_finite() && l > 0.0) || n == 0 {
            return Err(Failure::Rejected(format!("grid L = {l}, N = {n}")));
        }
        Ok(Sampling { l, n })
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

fn parse_case(s: &str) -> Result<TransformCase, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub enum Failure {
    Rejected(String),
    Undetermined(String),
    Verification(usize),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Undetermined { reason } => Failure::Undetermined(reason),
            Error::ZeroState => Failure::Undetermined(e.to_string()),
            Error::Rejected(why) => Failure::Rejected(why),
            other => Failure::Rejected(other.to_string()),
        }
    }
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(p.to_owned(), e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io("<stdout>".into(), e)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Potential { case, eps1, eps2, grid, output } => {
            let t = commands::potential(case, eps1, eps2, grid.sampling(12.0, 1200)?)?;
            let text = if output.format == Format::Csv { t.to_csv() } else { t.to_json() };
            write_to(output.out.as_deref(), &text)
        }
        Command::Piv { order, parity, index, eps1, grid, output, sidecar } => {
            let parity = match parity {
                ParityArg::Odd => Parity::Odd,
                ParityArg::Even => Parity::Even,
            };
            let (mut t, meta) = commands::piv(order, parity, index, eps1, grid.sampling(5.0, 1000)?)?;
            let meta_text = serde_json::to_string_pretty(&meta).expect("plain struct") + "\n";
            let text = match output.format {
                Format::Csv => t.to_csv(),
                Format::Json => {
                    t.notes = vec![("parameters", commands::meta_json(&meta))];
                    t.to_json()
                }
            };
            write_to(output.out.as_deref(), &text)?;
            let sidecar = sidecar.or_else(|| {
                let out = output.out.as_ref()?;
                (output.format == Format::Csv).then(|| out.with_extension("json"))
            });
            match sidecar {
                Some(p) => write_to(Some(&p), &meta_text),
                None => Ok(()),
            }
        }
        Command::Verify { suite, out } => {
            let report = verify::run(suite);
            let text = serde_json::to_string_pretty(&report).expect("plain struct") + "\n";
            write_to(out.as_deref(), &text)?;
            match report.failed {
                0 => Ok(()),
                n => Err(Failure::Verification(n)),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = match &f {
                Failure::Rejected(why) => {
                    eprintln!("rejected: {why}");
                    2
                }
                Failure::Verification(n) => {
                    eprintln!("verification failed: {n} check(s)");
                    3
                }
                Failure::Undetermined(why) => {
                    eprintln!("undetermined: {why}");
                    4
                }
                Failure::Io(p, e) => {
                    eprintln!("cannot write {}: {e}", p.display());
                    1
                }
            };
            ExitCode::from(code)
        }
    }
}
