//! `gstower`: bound tables of tower levels, single-index order-bound
//! queries, and grid verification of the closed forms against the
//! brute-force oracle.
//!
//! Exit codes are stable contract: 0 success (for `verify`: overall
//! pass), 1 verification mismatch, 2 usage error, 3 budget exhaustion or
//! arithmetic overflow (with a one-line diagnostic on standard error).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gs_tower::{
    build_recursive, conductor_formula, lambda_closed, nu_closed, order_bound_closed, TowerError,
    TowerParams, DEFAULT_MEMBER_BUDGET,
};
use gs_verify::{verify_grid, Mismatch};
use semigroup_core::BoundRow;

#[derive(Parser)]
#[command(
    name = "gstower",
    version,
    about = "Weierstrass semigroups and Feng-Rao order bounds of the second Garcia-Stichtenoth tower"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the (i, λ_i, ν_i, δ_i) table of one tower level.
    Table(TableArgs),
    /// Print the order bound δ_i at a single index.
    Bounds(BoundsArgs),
    /// Cross-validate the closed forms against the oracle over a grid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Base of the tower (the field has q² elements).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    q: u64,
    /// Level of the tower.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Number of rows, starting at index 0.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    rows: u64,
    /// Columns to print, in order (default: i,lambda,nu,delta).
    #[arg(long, value_delimiter = ',', value_enum)]
    columns: Option<Vec<Column>>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Where the values come from: the closed forms, or the semigroup
    /// materialized from the defining recursion. Byte-identical output.
    #[arg(long, value_enum, default_value = "closed")]
    source: Source,
}

#[derive(Args)]
struct BoundsArgs {
    /// Base of the tower (the field has q² elements).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    q: u64,
    /// Level of the tower.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Index into the enumeration.
    #[arg(long)]
    i: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated list of bases.
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(2..))]
    q: Vec<u64>,
    /// Verify levels 1..=m-max at every base (within the member budget).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m_max: u32,
    /// Extra indices beyond 2c − g swept by every range check.
    #[arg(long, default_value_t = gs_verify::DEFAULT_INDEX_MARGIN)]
    margin: u64,
    /// Also write the full JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Column {
    /// Row index.
    I,
    /// Enumerated member λ_i.
    Lambda,
    /// ν-sequence value ν_i.
    Nu,
    /// Order bound δ_i.
    Delta,
}

impl Column {
    const DEFAULT: [Column; 4] = [Column::I, Column::Lambda, Column::Nu, Column::Delta];

    fn name(self) -> &'static str {
        match self {
            Column::I => "i",
            Column::Lambda => "lambda",
            Column::Nu => "nu",
            Column::Delta => "delta",
        }
    }

    fn value(self, row: &BoundRow) -> u64 {
        match self {
            Column::I => row.index,
            Column::Lambda => row.lambda,
            Column::Nu => row.nu,
            Column::Delta => row.delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Closed,
    Oracle,
}

/// Failures after argument parsing, mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Tower(TowerError),
    Report(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Tower(TowerError::InvalidParameter(_)) => 2,
            Failure::Tower(_) => 3,
            Failure::Report(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Report(msg) => f.write_str(msg),
            Failure::Tower(err) => write!(f, "{err}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("gstower: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let budget = member_budget_from_env()?;
    match cli.command {
        Command::Table(args) => cmd_table(args, budget),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args, budget),
    }
}

/// `SEMIGROUP_BUDGET` overrides the default cap on materialized
/// semigroups; it must be a plain decimal integer.
fn member_budget_from_env() -> Result<u64, Failure> {
    match std::env::var("SEMIGROUP_BUDGET") {
        Ok(raw) => raw.parse().map_err(|_| {
            Failure::Usage(format!(
                "SEMIGROUP_BUDGET must be a decimal integer, got {raw:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MEMBER_BUDGET),
        Err(err) => Err(Failure::Usage(format!("SEMIGROUP_BUDGET unreadable: {err}"))),
    }
}

fn cmd_table(args: TableArgs, budget: u64) -> Result<u8, Failure> {
    let columns = match &args.columns {
        None => Column::DEFAULT.to_vec(),
        Some(columns) => {
            for (pos, column) in columns.iter().enumerate() {
                if columns[..pos].contains(column) {
                    return Err(Failure::Usage(format!(
                        "duplicate column {:?}",
                        column.name()
                    )));
                }
            }
            columns.clone()
        }
    };
    let p = TowerParams::new(args.q, args.m).map_err(Failure::Tower)?;
    let rows = match args.source {
        Source::Closed => closed_rows(p, args.rows),
        Source::Oracle => oracle_rows(p, args.rows, budget),
    }
    .map_err(Failure::Tower)?;
    print!("{}", render(&rows, &columns, args.format));
    Ok(0)
}

fn closed_rows(p: TowerParams, rows: u64) -> Result<Vec<BoundRow>, TowerError> {
    (0..rows)
        .map(|index| {
            Ok(BoundRow {
                index,
                lambda: lambda_closed(p, index)?,
                nu: nu_closed(p, index)?,
                delta: order_bound_closed(p, index)?,
            })
        })
        .collect()
}

fn oracle_rows(p: TowerParams, rows: u64, budget: u64) -> Result<Vec<BoundRow>, TowerError> {
    let level = build_recursive(p, budget)?;
    Ok(level.bound_table(rows)?.rows)
}

fn render(rows: &[BoundRow], columns: &[Column], format: Format) -> String {
    match format {
        Format::Csv => delimited(rows, columns, ','),
        Format::Tsv => delimited(rows, columns, '\t'),
        Format::Json => json_array(rows, columns),
    }
}

/// Header plus one line per row; every line newline-terminated, no
/// trailing separators or whitespace — the byte-exact golden-file format.
fn delimited(rows: &[BoundRow], columns: &[Column], sep: char) -> String {
    let mut out = String::new();
    for (pos, column) in columns.iter().enumerate() {
        if pos > 0 {
            out.push(sep);
        }
        out.push_str(column.name());
    }
    out.push('\n');
    for row in rows {
        for (pos, column) in columns.iter().enumerate() {
            if pos > 0 {
                out.push(sep);
            }
            out.push_str(&column.value(row).to_string());
        }
        out.push('\n');
    }
    out
}

/// One compact JSON array of objects, assembled by hand so the keys keep
/// the user-selected column order (a generic map would sort them).
fn json_array(rows: &[BoundRow], columns: &[Column]) -> String {
    let mut out = String::from("[");
    for (index, row) in rows.iter().enumerate() {
        if index > 0 {
            out.push(',');
        }
        out.push('{');
        for (pos, column) in columns.iter().enumerate() {
            if pos > 0 {
                out.push(',');
            }
            out.push('"');
            out.push_str(column.name());
            out.push_str("\":");
            out.push_str(&column.value(row).to_string());
        }
        out.push('}');
    }
    out.push_str("]\n");
    out
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8, Failure> {
    let p = TowerParams::new(args.q, args.m).map_err(Failure::Tower)?;
    let delta = order_bound_closed(p, args.i).map_err(Failure::Tower)?;
    println!("delta={delta}");
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, budget: u64) -> Result<u8, Failure> {
    let mut grid = Vec::new();
    for &q in &args.q {
        for m in 1..=args.m_max {
            // Deeper levels only grow, so the sweep for each base stops at
            // the first level that overflows or exceeds the budget.
            let Ok(p) = TowerParams::new(q, m) else { break };
            if conductor_formula(p) > budget {
                break;
            }
            grid.push(p);
        }
    }
    if grid.is_empty() {
        return Err(Failure::Usage(
            "no grid point fits within the member budget".into(),
        ));
    }

    let report = verify_grid(&grid, args.margin, budget);
    if let Some(path) = &args.report {
        let mut text = serde_json::to_string_pretty(&report)
            .map_err(|err| Failure::Report(format!("cannot serialize report: {err}")))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|err| {
            Failure::Report(format!("cannot write {}: {err}", path.display()))
        })?;
    }

    if report.overall_pass() {
        println!(
            "verified {} levels in {} ms: all checks passed",
            report.checks.len(),
            report.elapsed_ms
        );
        Ok(0)
    } else {
        let mismatch = report
            .first_mismatch
            .as_ref()
            .expect("failing report carries a mismatch");
        println!(
            "verified {} levels in {} ms: FAILED {} at q={} m={}{}",
            report.checks.len(),
            report.elapsed_ms,
            mismatch.check,
            mismatch.q,
            mismatch.m,
            mismatch_detail(mismatch)
        );
        Ok(1)
    }
}

fn mismatch_detail(mismatch: &Mismatch) -> String {
    let mut parts = Vec::new();
    if let Some(input) = mismatch.input {
        parts.push(format!("input {input}"));
    }
    if let (Some(oracle), Some(formula)) = (mismatch.oracle, mismatch.formula) {
        parts.push(format!("oracle {oracle} vs formula {formula}"));
    }
    if let Some(note) = &mismatch.note {
        parts.push(note.clone());
    }
    if parts.is_empty() {
        String::new()
    } else {
        format!(" ({})", parts.join(", "))
    }
}
