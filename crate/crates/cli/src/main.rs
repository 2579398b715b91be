//! `deltaflip`: set systems, delta-matroids and interlace polynomials from the
//! command line. Exit status is 0 on success, 1 on a mathematical failure
//! (undefined pivot, improper system, failed identity) and 2 on bad input or
//! a size guard.

mod commands;
mod doc;
mod error;
mod word;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Ctx, Format, Generators, Method, Report};
use error::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "deltaflip",
    version,
    about = "Vertex flips, delta-matroids and interlace polynomials"
)]
struct Cli {
    /// Input document; `-` reads stdin
    #[arg(long, short, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Lift the size guards on exponential computations
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse the document and report its shape
    Validate,
    /// Apply an operation word such as `+u\u*{v,w}`
    Apply {
        #[arg(long)]
        word: String,
    },
    /// Print a polynomial as ascending coefficients (`Q` for the multivariate form)
    Poly {
        #[arg(long)]
        which: String,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Evaluate a polynomial at an integer, or split q1(p-2) against a modulus
    Eval {
        #[arg(long)]
        which: String,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        modular: Option<i64>,
    },
    /// Delta-matroid properties, divisibility and distance triples
    Check,
    /// Orbit under vertex flips
    Orbit {
        #[arg(long, value_enum, default_value_t = Generators::Full)]
        generators: Generators,
    },
    /// Recursion tree of a polynomial
    Tree {
        #[arg(long)]
        which: String,
    },
    /// Support set system of a graph
    FromGraph,
    /// Support set system of a matrix
    FromMatrix,
    /// Principal pivot transform of a matrix on a set
    Ppt {
        #[arg(long)]
        set: String,
    },
    /// Tutte polynomial as a coefficient grid, rows by x-degree
    Tutte {
        /// Evaluate at `x,y`
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        at: Option<(i64, i64)>,
    },
    /// Bicycle-space dimension of a binary matroid
    BicycleDim,
    /// Fundamental graph of a binary matroid for a basis
    FundamentalGraph {
        #[arg(long)]
        basis: String,
    },
    /// Cross-check independent computations on the input
    Verify,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected `x,y`")?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

fn read_input(path: &str) -> CliResult<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "stdin".into(),
                source,
            })?;
    } else {
        text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
    }
    Ok(text)
}

fn run(cli: &Cli) -> CliResult<Report> {
    let ctx = Ctx {
        format: cli.format,
        force: cli.force,
    };
    let d = doc::parse(&read_input(&cli.input)?)?;
    match &cli.command {
        Command::Validate => commands::validate(&ctx, &d),
        Command::Apply { word } => commands::apply(&ctx, &d, word),
        Command::Poly { which, method } => commands::poly(&ctx, &d, which, *method),
        Command::Eval { which, at, modular } => commands::eval(&ctx, &d, which, *at, *modular),
        Command::Check => commands::check(&ctx, &d),
        Command::Orbit { generators } => commands::orbit(&ctx, &d, *generators),
        Command::Tree { which } => commands::tree(&ctx, &d, which),
        Command::FromGraph => commands::from_graph(&ctx, &d),
        Command::FromMatrix => commands::from_matrix(&ctx, &d),
        Command::Ppt { set } => commands::ppt(&ctx, &d, set),
        Command::Tutte { at } => commands::tutte(&ctx, &d, *at),
        Command::BicycleDim => commands::bicycle_dim(&d),
        Command::FundamentalGraph { basis } => commands::fundamental_graph(&ctx, &d, basis),
        Command::Verify => commands::verify(&ctx, &d),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.body);
            ExitCode::from(report.status)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(e.exit_code())
        }
    }
}
