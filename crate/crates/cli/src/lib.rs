//! Command-line front end for `gutsbound`: reads problem documents, runs
//! bounds, hungry assembly and sweeps, and prints reports.

pub mod commands;
pub mod document;
pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gutsbound::BoundCase;

use commands::{Format, Output, Style, DEFAULT_SWEEP_CAP};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "gutsbound",
    version,
    about = "Guts-based volume lower bounds for 3-orbifolds"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Decimal places shown for numeric volumes.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=17))]
    pub v8_digits: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound for a splitting along S2(n1,n2,n3,n4) (or a mirrored disk).
    Bound {
        /// Problem document, or `-` for stdin.
        file: PathBuf,
    },
    /// Bound for a splitting along a mirrored disk D2*(n1,n2).
    Corollary { file: PathBuf },
    /// Assemble an empty-guts orbifold from two sides and a gluing word.
    Hungry { file: PathBuf },
    /// Smallest positive coefficient per case over all labels up to `--max`.
    Sweep {
        #[arg(long)]
        max: u32,
        /// Restrict to one case: 1-5 or C1, C2.
        #[arg(long)]
        case: Option<BoundCase>,
        /// Largest `--max` accepted.
        #[arg(long, env = "GUTSBOUND_MAX_LABEL", default_value_t = DEFAULT_SWEEP_CAP)]
        cap: u32,
    },
    /// Euler characteristic of `S2(...)` or `D2*(a,b)`.
    Euler { spec: String },
    /// Whether the turnover S2(p,q,r) is spherical, Euclidean or hyperbolic.
    Classify { p: i64, q: i64, r: i64 },
    /// Volume of the regular ideal octahedron.
    V8 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=17))]
        digits: Option<u8>,
    },
    /// Tangle word utilities.
    Tangle {
        #[command(subcommand)]
        action: TangleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum TangleCommand {
    /// Permutation of the four marked points induced by a word such as `s1 s2'`.
    Perm {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

pub fn run(cli: &Cli) -> Output {
    let style = Style {
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        digits: usize::from(cli.v8_digits),
    };
    let document = |path: &PathBuf, f: fn(&str, Style) -> Output| match read_input(path) {
        Ok(text) => f(&text, style),
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: cannot read {}: {e}\n", path.display()),
            code: commands::EXIT_INVALID,
        },
    };
    match &cli.command {
        Command::Bound { file } => document(file, commands::bound),
        Command::Corollary { file } => document(file, commands::corollary),
        Command::Hungry { file } => document(file, commands::hungry),
        Command::Sweep { max, case, cap } => commands::sweep(*max, *case, *cap, style),
        Command::Euler { spec } => commands::euler(spec, style),
        Command::Classify { p, q, r } => commands::classify(*p, *q, *r, style),
        Command::V8 { digits } => {
            commands::v8_value(digits.map_or(style.digits, usize::from), style)
        }
        Command::Tangle {
            action: TangleCommand::Perm { word },
        } => commands::tangle_perm(&word.join(" "), style),
    }
}
