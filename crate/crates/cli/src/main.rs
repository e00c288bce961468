use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

mod commands;
mod config;

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "tangle", version, about = "Exact tangle calculus for recombination tangle equations")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// TOML file with default bound, branch and parameter ranges.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchArg {
    Upper,
    Lower,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Direct,
    Inverted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchArg {
    Direct,
    Inverted,
    Montesinos,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerator closure N(T) of a tangle expression.
    Closure { expr: String },
    /// Continued fraction of a fraction, or the value of a twist vector like `[3,1,1,1]`.
    Cf { input: String },
    /// Solution families for a parental tangle P.
    Solve {
        system: SystemArg,
        p: String,
        #[arg(long, value_enum)]
        branch: Option<BranchArg>,
        /// Instantiate every family for t in [t-min, t-max].
        #[arg(long, allow_hyphen_values = true)]
        t_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        t_max: Option<i64>,
        /// Also emit the Montesinos family (P in {0, 1, -1}, inverted only).
        #[arg(long)]
        fourth: bool,
        /// Emit the positive-product refinement instead (P in {0, -1}).
        #[arg(long)]
        refine: bool,
    },
    /// Class descriptors with constraints and example families.
    Classes { system: SystemArg },
    /// Verify solutions read from a JSON file (`-` for stdin).
    Verify {
        file: PathBuf,
        /// Re-check every closure on diagrams.
        #[arg(long)]
        oracle: bool,
    },
    /// Diagram invariants of closures, 4-plats `b(p,q)` or PD codes; two inputs are compared.
    Oracle {
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<String>,
    },
    /// Bounded brute-force search.
    Search {
        kind: SearchArg,
        /// Parental tangle (rational searches only).
        p: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
        /// Single k; default is every k up to the configured maximum.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Xer system on P = (0) with products b(1,1) -> b(4,1).
    Xer {
        #[arg(long)]
        bound: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match commands::run(cli.command, &config) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // EPIPE from `head` and friends
            let _ = if cli.pretty {
                write!(stdout, "{}", out.text)
            } else {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("serializable"))
            };
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
