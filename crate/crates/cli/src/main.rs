mod batch;
mod commands;
mod complex;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "partheta",
    version,
    about = "Numerical checks of Mordell-type and Xi-integral transformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every member of one identity and compare them.
    Verify(VerifyArgs),
    /// Verify one identity over a parameter grid.
    Sweep(SweepArgs),
    /// Regenerate the table of the "nearly" approximation.
    Table(TableArgs),
    /// Compare an asymptotic expansion with its quadrature reference.
    Asympt(AsymptArgs),
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Report measured wall time instead of 0.
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct TolArgs {
    /// Relative residual tolerance.
    #[arg(long = "rel-tol", allow_negative_numbers = true)]
    rel_tol: Option<f64>,
    /// Absolute residual tolerance.
    #[arg(long = "abs-tol", allow_negative_numbers = true)]
    abs_tol: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    identity: String,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Complex z as a, bi, a+bi or a-bi.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    identity: String,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    alpha: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    z: Vec<String>,
    /// Comma-separated values or ranges such as 0..5.
    #[arg(long)]
    k: Option<String>,
    #[arg(long, value_delimiter = ',')]
    q: Vec<u32>,
    #[arg(long)]
    parallelism: Option<usize>,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    RamanujanNear,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "ramanujan-near")]
    table: TableKind,
    /// Comma-separated values or ranges such as 1..10.
    #[arg(long, default_value = "1..10")]
    k: String,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    alpha: Vec<f64>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Check every cell against the printed table.
    #[arg(long)]
    compare_paper: bool,
    #[arg(long)]
    parallelism: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    I,
    K,
    Theta,
    Oloa,
    #[value(name = "oloa-z0")]
    OloaZ0,
}

#[derive(Args, Debug)]
struct AsymptArgs {
    #[arg(long, value_enum)]
    series: SeriesKind,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, conflicts_with = "optimal")]
    terms: Option<usize>,
    #[arg(long)]
    optimal: bool,
    /// Run outside the regime where the expansion is meaningful.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let code = match cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Table(a) => commands::table(a),
        Command::Asympt(a) => commands::asympt(a),
    };
    ExitCode::from(code)
}
