//! `kstep`: triangles, divisibility certificates and numeric checks for the
//! stride-k identities of k-step Fibonacci sequences.

mod commands;
mod render;

use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use kstep_core::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Markdown,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleKind {
    P,
    Q,
}

#[derive(Parser, Debug)]
#[command(name = "kstep", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print rows 0..=N of triangle P or Q.
    Triangle {
        #[arg(value_enum)]
        kind: TriangleKind,
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Certify that r_k divides p_k(X^k) and re-derive every column of M.
    Prove {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        /// Also print the long-hand product matrix M.
        #[arg(long)]
        show_matrix: bool,
        /// Label matrix cells with triangle entries instead of numbers.
        #[arg(long, requires = "show_matrix")]
        symbolic: bool,
    },
    /// Check the stride-k identity numerically on a range of indices.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long, allow_negative_numbers = true)]
        n_from: i64,
        #[arg(long, allow_negative_numbers = true)]
        n_to: i64,
        /// Draw initial values from this seed instead of the OEIS seeds.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Characteristic polynomial of a recurrence decimated by a stride.
    Decimate {
        /// Descending coefficients, leading 1 first, e.g. 1,-1,-1.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true, value_parser = parse_bigint)]
        charpoly: Vec<BigInt>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        stride: u64,
    },
    /// Run every check for each k in a range.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k_min: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k_max: u64,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|e| format!("`{s}` is not an integer: {e}"))
}

fn usage_error(kind: ErrorKind, msg: &str) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Triangle { kind, rows } => Ok(commands::triangle(kind, rows, format)),
        Command::Prove {
            k,
            show_matrix,
            symbolic,
        } => commands::prove(k as usize, show_matrix, symbolic, format),
        Command::Verify {
            k,
            n_from,
            n_to,
            seed,
        } => {
            if n_from > n_to {
                usage_error(ErrorKind::ValueValidation, "--n-from must not exceed --n-to");
            }
            commands::verify(k as usize, n_from, n_to, seed, format)
        }
        Command::Decimate { charpoly, stride } => {
            let poly = IntPoly::from_descending(&charpoly);
            if !poly.is_monic() || charpoly.first().map(|c| c != &BigInt::from(1)).unwrap_or(true) {
                usage_error(
                    ErrorKind::ValueValidation,
                    "--charpoly must be monic: descending coefficients starting with 1",
                );
            }
            if poly.degree() == Some(0) {
                usage_error(ErrorKind::ValueValidation, "--charpoly must have degree at least 1");
            }
            commands::decimate(&poly, stride as usize, format)
        }
        Command::Sweep { k_min, k_max } => {
            if k_min > k_max {
                usage_error(ErrorKind::ValueValidation, "--k-min must not exceed --k-max");
            }
            commands::sweep(k_min as usize, k_max as usize, format)
        }
    };
    match outcome {
        Ok(o) => {
            print!("{}", o.text);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
