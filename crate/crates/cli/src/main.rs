//! `trunctab`: count tableaux of truncated shapes, expand their generating
//! functions, run the cross-check suites, and apply the bijections.
//!
//! Exit codes: 0 success, 1 bad input, 2 verification failure,
//! 3 unsupported shape or method, 4 budget exceeded.

mod commands;
mod shape_spec;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trunctab_core::oracle::{DEFAULT_PP_BUDGET, DEFAULT_SYT_BUDGET};
use trunctab_core::verify::Limits;

use commands::{CliError, CliResult, CountMethod, GfMethod, Output, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "trunctab", version, about = "Standard tableaux and plane partitions of truncated shapes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count standard tableaux of a shape.
    Count {
        /// e.g. "shifted:delta(4)\delta(1)", "rect(3,3)\delta(1)", "straight:[3,2]\[1]"
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
        /// Cell budget for the oracle.
        #[arg(long, default_value_t = DEFAULT_SYT_BUDGET)]
        max_cells: usize,
    },
    /// Coefficients of the volume generating function through q^order.
    Gf {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: GfMethod,
        /// Cell budget for the oracle.
        #[arg(long, default_value_t = DEFAULT_PP_BUDGET)]
        max_cells: usize,
    },
    /// Run a cross-check suite: thm1, thm2, thm3, phi, rsk, hooks, gf,
    /// lemma7, section9, or all.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest n for shifted delta(n)\delta(1).
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Cell budget for the rectangle families.
        #[arg(long, default_value_t = 18)]
        max_cells: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Largest entry in exhaustive plane-partition sweeps.
        #[arg(long, default_value_t = 3)]
        max_entry: u64,
    },
    /// Map a plane partition to its tableau (pair), or back with --inverse.
    Phi {
        #[command(flatten)]
        io: Io,
    },
    /// RSK of a nonnegative integer matrix, or back with --inverse.
    Rsk {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(clap::Args)]
struct Io {
    /// Input JSON file; stdin when absent or "-".
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    inverse: bool,
    /// Also apply the inverse and report whether the input comes back.
    #[arg(long)]
    roundtrip: bool,
}

fn read_input(path: &Option<PathBuf>) -> CliResult<String> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = fs::read_to_string(p).map_err(|e| CliError::new(EXIT_INPUT, format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut s).map_err(|e| CliError::new(EXIT_INPUT, e.to_string()))?;
        }
    }
    Ok(s)
}

fn execute(cli: &Cli) -> CliResult<(Output, Option<PathBuf>)> {
    let out = match &cli.command {
        Command::Count { shape, method, max_cells } => commands::count(shape, *method, *max_cells)?,
        Command::Gf { shape, order, method, max_cells } => commands::gf(shape, *order, *method, *max_cells)?,
        Command::Verify { suite, max_n, max_cells, order, max_entry } => {
            let limits = Limits { max_n: *max_n, max_cells: *max_cells, order: *order, max_entry: *max_entry };
            commands::verify(suite, &limits)?
        }
        Command::Phi { io } => {
            return Ok((commands::phi(&read_input(&io.input)?, io.inverse, io.roundtrip)?, io.output.clone()));
        }
        Command::Rsk { io } => {
            return Ok((commands::rsk_cmd(&read_input(&io.input)?, io.inverse, io.roundtrip)?, io.output.clone()));
        }
    };
    Ok((out, None))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match execute(&cli) {
        Ok((out, path)) => {
            let body = if cli.json {
                serde_json::to_string(&out.json).expect("serializable")
            } else {
                out.text
            };
            let written = match path {
                Some(p) => fs::write(&p, format!("{body}\n")).map_err(|e| format!("{}: {e}", p.display())),
                None => match writeln!(io::stdout(), "{body}") {
                    // a closed pipe downstream is not our failure
                    Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                    r => r.map_err(|e| e.to_string()),
                },
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.message, "exit_code": e.code }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
