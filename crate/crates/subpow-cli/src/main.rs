//! `subpow`: cycle structure of subset powers of directed cycles.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input
//! error. Data goes to stdout (or `--out`); diagnostics go to stderr.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use subpow::{
    brute_force_spectrum, build_subset_power, count_cycles, make_cycle, spectrum, BigUint, Digraph,
    SubsetPowerGraph, DEFAULT_BUDGET,
};
use subpow_cli::{edge_list, export, report};

#[derive(Parser)]
#[command(
    name = "subpow",
    version,
    about = "Cycle structure of subset powers of directed cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cycle spectrum of the d-th subset power of the directed l-cycle
    Spectrum {
        /// Length of the base cycle
        #[arg(long)]
        l: usize,
        /// Subset size
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Table)]
        format: SpectrumFormat,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact number of k-cycles as a bare decimal
    Count {
        /// Length of the base cycle
        #[arg(long)]
        l: usize,
        /// Subset size
        #[arg(long)]
        d: usize,
        /// Cycle length to count
        #[arg(long)]
        k: usize,
    },
    /// Cross-check the closed-form spectrum against brute-force orbit enumeration
    Verify {
        /// Check every instance with 1 <= d <= l <= this bound
        #[arg(long)]
        l_max: usize,
        /// Cap on C(l, d) for the brute-force side
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Write the subset power of a directed cycle as DOT or JSON
    Build {
        /// Length of the base cycle
        #[arg(long)]
        l: usize,
        /// Subset size
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Cap on the number of subset vertices
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the subset power of an arbitrary digraph read from an edge-list file
    Power {
        /// Edge-list file: "n <vertex_count>", then "u v" lines; '#' comments
        #[arg(long)]
        input: PathBuf,
        /// Subset size
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Cap on the number of subset vertices
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

enum CliError {
    /// Invalid parameters or unreadable/unparsable input; exit 2.
    Input(String),
    /// Formula and oracle disagree; exit 1.
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Mismatch(msg) => f.write_str(msg),
        }
    }
}

impl From<subpow::Error> for CliError {
    fn from(e: subpow::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { l, d, format, out } => cmd_spectrum(l, d, format, out),
        Command::Count { l, d, k } => cmd_count(l, d, k),
        Command::Verify { l_max, budget } => cmd_verify(l_max, budget),
        Command::Build {
            l,
            d,
            format,
            budget,
            out,
        } => {
            let base = make_cycle(l)?;
            cmd_power_of(&base, d, format, budget, out)
        }
        Command::Power {
            input,
            d,
            format,
            budget,
            out,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", input.display())))?;
            let base = edge_list::parse_edge_list(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
            cmd_power_of(&base, d, format, budget, out)
        }
    }
}

/// Writes `data` to `out`, or to stdout when no path is given.
fn emit(out: Option<PathBuf>, data: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, data)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{data}");
            Ok(())
        }
    }
}

fn cmd_spectrum(
    l: usize,
    d: usize,
    format: SpectrumFormat,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let s = spectrum(l, d)?;
    let rendered = match format {
        SpectrumFormat::Table => export::spectrum_to_table(&s),
        SpectrumFormat::Json => export::spectrum_to_json(&s),
        SpectrumFormat::Csv => export::spectrum_to_csv(&s),
    };
    emit(out, &rendered)
}

fn cmd_count(l: usize, d: usize, k: usize) -> Result<(), CliError> {
    println!("{}", count_cycles(l, d, k)?);
    Ok(())
}

fn cmd_verify(l_max: usize, budget: u64) -> Result<(), CliError> {
    let mut instances = 0usize;
    let mut failures = 0usize;
    let mut first = None;
    for l in 1..=l_max {
        for d in 1..=l {
            instances += 1;
            let formula = spectrum(l, d)?;
            let oracle = brute_force_spectrum(l, d, budget)?;
            match report::first_mismatch(formula.counts(), oracle.counts()) {
                None => println!("l={l} d={d}: PASS"),
                Some(m) => {
                    println!("l={l} d={d}: FAIL");
                    failures += 1;
                    first.get_or_insert((l, d, m));
                }
            }
        }
    }
    if failures == 0 {
        println!("all {instances} instances PASS");
        Ok(())
    } else {
        println!("{failures} of {instances} instances FAIL");
        let (l, d, m) = first.expect("at least one failure was recorded");
        Err(CliError::Mismatch(format!(
            "first mismatch at l={l} d={d} k={}: formula counted {}, oracle counted {}",
            m.k, m.formula, m.oracle
        )))
    }
}

/// Shared tail of `build` and `power`: cap the vertex count, build the
/// subset power, render it.
fn cmd_power_of(
    base: &Digraph,
    d: usize,
    format: GraphFormat,
    budget: u64,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let n = base.vertex_count();
    let total = subpow::binomial(n, d);
    if total > BigUint::from(budget) {
        return Err(CliError::Input(format!(
            "instance too large: C({n}, {d}) = {total} subset vertices exceed budget {budget}"
        )));
    }
    let power: SubsetPowerGraph = build_subset_power(base, d)?;
    let rendered = match format {
        GraphFormat::Dot => export::graph_to_dot(&power),
        GraphFormat::Json => export::graph_to_json(&power),
    };
    emit(out, &rendered)
}
