//! Command-line surface: exact weights, entropies, MaxProb sweeps, table
//! reproduction, and oracle cross-checks.
//!
//! Exit codes: 0 success, 2 usage error, 3 guard/limit exceeded,
//! 4 oracle mismatch.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use occupancy::decimal;
use occupancy::entropy::{
    entropy_asymptotic_degenerate, entropy_exact_di, entropy_exact_di_degenerate,
    entropy_from_weight, entropy_shannon, gamma_sharp, ProbabilityVector,
};
use occupancy::exact::{self, BigCount};
use occupancy::maxprob::{
    maxprob_di, maxprob_di_degenerate, maxprob_multinomial, MaxProbResult, SearchError,
    SearchLimits,
};
use occupancy::oracle;
use occupancy::realization::{OrderedOccupancy, Realization};
use occupancy::weights::{
    weight_di, weight_di_degenerate, weight_multinomial, DegenerateSpec, WeightError,
};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "occupancy",
    version,
    about = "Exact occupancy statistics: weights, entropies, and most-probable realizations"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Decimal places for probabilities and entropies
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
    /// Cap on the number of enumerated realizations
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_space: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stirling number of the second kind {n, k}, or a whole row
    Stirling {
        n: Option<u64>,
        k: Option<u64>,
        /// Print the full row {n, 1} ..= {n, n}
        #[arg(long, conflicts_with_all = ["n", "k"])]
        row: Option<u64>,
    },
    /// Incomplete Bell number B(n, s); s defaults to n (full Bell number)
    Bell { n: u64, s: Option<u64> },
    /// Exact statistical weight of one realization
    Weight {
        /// mult takes an ordered [..] realization, di/di-g a multiset {..}
        #[arg(long, value_enum)]
        statistic: Stat,
        /// Equal degeneracy for di-g
        #[arg(long, default_value_t = 1)]
        g: u64,
        realization: String,
    },
    /// Entropy of one realization (exact by default)
    Entropy {
        #[arg(long, value_enum)]
        statistic: Stat,
        #[arg(long, default_value_t = 1)]
        g: u64,
        /// Asymptotic form (Shannon, or its degenerate generalisation)
        #[arg(long)]
        asymptotic: bool,
        realization: String,
    },
    /// Most probable realization(s) for (N, s)
    Maxprob {
        n: u64,
        s: u64,
        #[arg(long, value_enum)]
        statistic: Stat,
        #[arg(long, default_value_t = 1)]
        g: u64,
    },
    /// Reproduce source table 1 (Stirling triangle), 2 (multinomial
    /// maxima), or 3 (D:I maxima)
    Table {
        #[arg(long = "paper-table", value_parser = clap::value_parser!(u8).range(1..=3))]
        paper_table: u8,
    },
    /// Cross-check closed-form weights against enumeration oracles
    OracleCheck {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    /// Multinomial: distinguishable states
    Mult,
    /// D:I statistic: indistinguishable states
    Di,
    /// Equally degenerate D:I statistic
    DiG,
}

impl Stat {
    fn name(self) -> &'static str {
        match self {
            Stat::Mult => "mult",
            Stat::Di => "di",
            Stat::DiG => "di-g",
        }
    }
}

enum CliError {
    Usage(String),
    Limit(String),
    OracleMismatch(usize),
    Io(String),
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::SearchSpaceTooLarge { .. } => CliError::Limit(e.to_string()),
            SearchError::EmptySystem => CliError::Usage(e.to_string()),
        }
    }
}

impl From<exact::ExactError> for CliError {
    fn from(e: exact::ExactError) -> Self {
        match e {
            exact::ExactError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            exact::ExactError::SumMismatch { .. } => CliError::Usage(e.to_string()),
        }
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        CliError::Limit(e.to_string())
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::OracleMismatch(count)) => {
            eprintln!("error: {count} oracle check(s) failed");
            ExitCode::from(4)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let limits = SearchLimits {
        max_realizations: cli.max_space,
    };
    match &cli.command {
        Command::Stirling { n, k, row } => cmd_stirling(cli, *n, *k, *row),
        Command::Bell { n, s } => cmd_bell(cli, *n, *s),
        Command::Weight {
            statistic,
            g,
            realization,
        } => cmd_weight(cli, *statistic, *g, realization),
        Command::Entropy {
            statistic,
            g,
            asymptotic,
            realization,
        } => cmd_entropy(cli, *statistic, *g, *asymptotic, realization),
        Command::Maxprob { n, s, statistic, g } => {
            cmd_maxprob(cli, *n, *s, *statistic, *g, &limits)
        }
        Command::Table { paper_table } => cmd_table(cli, *paper_table, &limits),
        Command::OracleCheck { max_n } => cmd_oracle_check(cli, *max_n),
    }
}

// ---------------------------------------------------------------- stirling

#[derive(Serialize)]
struct ValueRecord<'a> {
    schema_version: &'static str,
    command: &'a str,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u64>,
    value: String,
}

fn cmd_stirling(
    cli: &Cli,
    n: Option<u64>,
    k: Option<u64>,
    row: Option<u64>,
) -> Result<(), CliError> {
    if let Some(row_n) = row {
        if row_n < 1 {
            return Err(CliError::Usage("--row must be at least 1".into()));
        }
        exact::guard(row_n, exact::DEFAULT_MAX_N)?;
        let table = exact::StirlingTable::new(row_n)?;
        match cli.format {
            Format::Text => {
                let line: Vec<String> = table.row(row_n).iter().map(|v| v.to_string()).collect();
                println!("{}", line.join(" "));
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(std::io::stdout());
                w.write_record(["n", "k", "value"])?;
                for (idx, v) in table.row(row_n).iter().enumerate() {
                    w.write_record([row_n.to_string(), (idx + 1).to_string(), v.to_string()])?;
                }
                w.flush()?;
            }
            Format::JsonLines => {
                for (idx, v) in table.row(row_n).iter().enumerate() {
                    emit_json(&ValueRecord {
                        schema_version: SCHEMA_VERSION,
                        command: "stirling",
                        n: row_n,
                        k: Some(idx as u64 + 1),
                        s: None,
                        value: v.to_string(),
                    });
                }
            }
        }
        return Ok(());
    }
    let (n, k) = match (n, k) {
        (Some(n), Some(k)) => (n, k),
        _ => {
            return Err(CliError::Usage(
                "expected `stirling <N> <K>` or `stirling --row <N>`".into(),
            ))
        }
    };
    if k < 1 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    exact::guard(n, exact::DEFAULT_MAX_N)?;
    let value = exact::stirling2(n, k);
    emit_value(cli, "stirling", n, Some(k), None, &value)
}

fn cmd_bell(cli: &Cli, n: u64, s: Option<u64>) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    exact::guard(n, exact::DEFAULT_MAX_N)?;
    let s = s.unwrap_or(n);
    let value = exact::bell_incomplete(n, s);
    emit_value(cli, "bell", n, None, Some(s), &value)
}

fn emit_value(
    cli: &Cli,
    command: &str,
    n: u64,
    k: Option<u64>,
    s: Option<u64>,
    value: &BigCount,
) -> Result<(), CliError> {
    match cli.format {
        Format::Text => println!("{value}"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let mut header = vec!["n"];
            let mut fields = vec![n.to_string()];
            if let Some(k) = k {
                header.push("k");
                fields.push(k.to_string());
            }
            if let Some(s) = s {
                header.push("s");
                fields.push(s.to_string());
            }
            header.push("value");
            fields.push(value.to_string());
            w.write_record(&header)?;
            w.write_record(&fields)?;
            w.flush()?;
        }
        Format::JsonLines => emit_json(&ValueRecord {
            schema_version: SCHEMA_VERSION,
            command,
            n,
            k,
            s,
            value: value.to_string(),
        }),
    }
    Ok(())
}

// ------------------------------------------------------------------ weight

/// A parsed realization argument, bracket style checked per statistic.
enum ParsedRealization {
    Unordered(Realization),
    Ordered(OrderedOccupancy),
}

fn parse_realization(arg: &str, statistic: Stat) -> Result<ParsedRealization, CliError> {
    let trimmed = arg.trim();
    match statistic {
        Stat::Mult => {
            if !trimmed.starts_with('[') {
                return Err(CliError::Usage(format!(
                    "the multinomial statistic takes an ordered [..] realization, got {arg:?}"
                )));
            }
            let occ =
                OrderedOccupancy::from_str(trimmed).map_err(|e| CliError::Usage(e.to_string()))?;
            exact::guard(occ.n_total(), exact::DEFAULT_MAX_N)?;
            Ok(ParsedRealization::Ordered(occ))
        }
        Stat::Di | Stat::DiG => {
            if !trimmed.starts_with('{') {
                return Err(CliError::Usage(format!(
                    "the {} statistic takes a multiset {{..}} realization, got {arg:?}",
                    statistic.name()
                )));
            }
            let r = Realization::from_str(trimmed).map_err(|e| CliError::Usage(e.to_string()))?;
            exact::guard(r.n_total(), exact::DEFAULT_MAX_N)?;
            Ok(ParsedRealization::Unordered(r))
        }
    }
}

fn degenerate_spec(g: u64) -> Result<DegenerateSpec, CliError> {
    Ok(DegenerateSpec::new(g)?)
}

#[derive(Serialize)]
struct WeightRecord<'a> {
    schema_version: &'static str,
    command: &'static str,
    statistic: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u64>,
    realization: String,
    weight: String,
    weight_sci: String,
}

fn cmd_weight(cli: &Cli, statistic: Stat, g: u64, arg: &str) -> Result<(), CliError> {
    let parsed = parse_realization(arg, statistic)?;
    let (weight, shown) = match (&parsed, statistic) {
        (ParsedRealization::Ordered(occ), Stat::Mult) => (weight_multinomial(occ), occ.to_string()),
        (ParsedRealization::Unordered(r), Stat::Di) => (weight_di(r), r.to_string()),
        (ParsedRealization::Unordered(r), Stat::DiG) => {
            (weight_di_degenerate(r, degenerate_spec(g)?), r.to_string())
        }
        _ => unreachable!("bracket style already validated"),
    };
    let record = WeightRecord {
        schema_version: SCHEMA_VERSION,
        command: "weight",
        statistic: statistic.name(),
        g: (statistic == Stat::DiG).then_some(g),
        realization: shown,
        weight: weight.to_string(),
        weight_sci: decimal::sci(&weight, 3),
    };
    match cli.format {
        Format::Text => {
            if weight < BigCount::from(decimal::SCI_THRESHOLD) {
                println!("{}", record.weight);
            } else {
                println!("{} ({})", record.weight, record.weight_sci);
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["statistic", "g", "realization", "weight", "weight_sci"])?;
            w.write_record([
                record.statistic,
                &record.g.map_or_else(String::new, |g| g.to_string()),
                &record.realization,
                &record.weight,
                &record.weight_sci,
            ])?;
            w.flush()?;
        }
        Format::JsonLines => emit_json(&record),
    }
    Ok(())
}

// ----------------------------------------------------------------- entropy

#[derive(Serialize)]
struct EntropyRecord<'a> {
    schema_version: &'static str,
    command: &'static str,
    statistic: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u64>,
    asymptotic: bool,
    realization: String,
    entropy: f64,
}

fn cmd_entropy(
    cli: &Cli,
    statistic: Stat,
    g: u64,
    asymptotic: bool,
    arg: &str,
) -> Result<(), CliError> {
    let parsed = parse_realization(arg, statistic)?;
    let (nats, shown) = match (&parsed, statistic) {
        (ParsedRealization::Ordered(occ), Stat::Mult) => {
            let h = if asymptotic {
                let p = ProbabilityVector::from_counts(occ.slots())
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                entropy_shannon(&p)
            } else {
                entropy_from_weight(&weight_multinomial(occ), occ.n_total())
                    .map_err(|e| CliError::Usage(e.to_string()))?
            };
            (h.nats(), occ.to_string())
        }
        (ParsedRealization::Unordered(r), Stat::Di) => {
            let h = if asymptotic {
                entropy_shannon(&ProbabilityVector::from_realization(r))
            } else {
                entropy_exact_di(r)
            };
            (h.nats(), r.to_string())
        }
        (ParsedRealization::Unordered(r), Stat::DiG) => {
            let spec = degenerate_spec(g)?;
            let h = if asymptotic {
                let p = ProbabilityVector::from_realization(r);
                let gammas: Vec<u64> = r
                    .parts()
                    .iter()
                    .map(|&part| gamma_sharp(part, spec.g()))
                    .collect();
                entropy_asymptotic_degenerate(&p, &gammas)
                    .map_err(|e| CliError::Usage(e.to_string()))?
            } else {
                entropy_exact_di_degenerate(r, spec)
            };
            (h.nats(), r.to_string())
        }
        _ => unreachable!("bracket style already validated"),
    };
    let record = EntropyRecord {
        schema_version: SCHEMA_VERSION,
        command: "entropy",
        statistic: statistic.name(),
        g: (statistic == Stat::DiG).then_some(g),
        asymptotic,
        realization: shown,
        entropy: nats,
    };
    let rendered = format!("{:.*}", cli.precision, nats);
    match cli.format {
        Format::Text => println!("{rendered}"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["statistic", "g", "asymptotic", "realization", "entropy"])?;
            w.write_record([
                record.statistic,
                &record.g.map_or_else(String::new, |g| g.to_string()),
                &record.asymptotic.to_string(),
                &record.realization,
                &rendered,
            ])?;
            w.flush()?;
        }
        Format::JsonLines => emit_json(&record),
    }
    Ok(())
}

// ----------------------------------------------------------------- maxprob

#[derive(Serialize)]
struct MaxProbRecord<'a> {
    schema_version: &'static str,
    command: &'static str,
    statistic: &'a str,
    n: u64,
    s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u64>,
    realization: String,
    maxima: usize,
    weight: String,
    weight_sci: String,
    probability: String,
    entropy: f64,
    total_weight: String,
}

struct MaxRow {
    realization: String,
    weight: BigCount,
    entropy: f64,
}

struct MaxSummary {
    rows: Vec<MaxRow>,
    total: BigCount,
    g: Option<u64>,
}

fn summarize<R: std::fmt::Display>(result: &MaxProbResult<R>) -> MaxSummary {
    MaxSummary {
        rows: result
            .maxima
            .iter()
            .map(|m| MaxRow {
                realization: m.realization.to_string(),
                weight: m.weight.clone(),
                entropy: m.entropy_exact.nats(),
            })
            .collect(),
        total: result.total_weight.clone(),
        g: result.g,
    }
}

fn cmd_maxprob(
    cli: &Cli,
    n: u64,
    s: u64,
    statistic: Stat,
    g: u64,
    limits: &SearchLimits,
) -> Result<(), CliError> {
    exact::guard(n, exact::DEFAULT_MAX_N)?;
    let summary = match statistic {
        Stat::Mult => summarize(&maxprob_multinomial(n, s, limits)?),
        Stat::Di => summarize(&maxprob_di(n, s, limits)?),
        Stat::DiG => summarize(&maxprob_di_degenerate(n, s, degenerate_spec(g)?, limits)?),
    };
    let count = summary.rows.len();
    match cli.format {
        Format::Text => {
            for row in &summary.rows {
                println!(
                    "{}  {}  {}  {}",
                    row.realization,
                    count,
                    decimal::count_paper_style(&row.weight),
                    decimal::probability_paper_style(&row.weight, &summary.total, cli.precision),
                );
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record([
                "realization",
                "maxima",
                "weight",
                "weight_sci",
                "probability",
                "total_weight",
            ])?;
            for row in &summary.rows {
                w.write_record([
                    row.realization.clone(),
                    count.to_string(),
                    row.weight.to_string(),
                    decimal::sci(&row.weight, 3),
                    decimal::probability_paper_style(&row.weight, &summary.total, cli.precision),
                    summary.total.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::JsonLines => {
            for row in &summary.rows {
                emit_json(&MaxProbRecord {
                    schema_version: SCHEMA_VERSION,
                    command: "maxprob",
                    statistic: statistic.name(),
                    n,
                    s,
                    g: summary.g,
                    realization: row.realization.clone(),
                    maxima: count,
                    weight: row.weight.to_string(),
                    weight_sci: decimal::sci(&row.weight, 3),
                    probability: decimal::probability_paper_style(
                        &row.weight,
                        &summary.total,
                        cli.precision,
                    ),
                    entropy: row.entropy,
                    total_weight: summary.total.to_string(),
                });
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------------- table

/// The (N, s) rows tabulated by source tables 2 and 3.
const TABLE_ROWS: [(u64, u64); 20] = [
    (1, 1),
    (2, 2),
    (3, 3),
    (4, 4),
    (5, 5),
    (10, 10),
    (20, 20),
    (30, 30),
    (40, 40),
    (50, 50),
    (1, 3),
    (2, 3),
    (3, 3),
    (4, 3),
    (5, 3),
    (10, 3),
    (20, 3),
    (30, 3),
    (40, 3),
    (50, 3),
];

#[derive(Serialize)]
struct TableRowRecord {
    schema_version: &'static str,
    command: &'static str,
    table: u8,
    n: u64,
    s: u64,
    realizations: String,
    maxima: usize,
    weight: String,
    weight_sci: String,
    probability: String,
    total_weight: String,
}

fn cmd_table(cli: &Cli, which: u8, limits: &SearchLimits) -> Result<(), CliError> {
    match which {
        1 => cmd_table_stirling(cli),
        2 | 3 => cmd_table_maxprob(cli, which, limits),
        _ => unreachable!("validated by clap"),
    }
}

fn cmd_table_stirling(cli: &Cli) -> Result<(), CliError> {
    let table = exact::StirlingTable::new(7)?;
    match cli.format {
        Format::Text => {
            for n in 1..=7u64 {
                let line: Vec<String> = table.row(n).iter().map(|v| v.to_string()).collect();
                println!("{}", line.join(" "));
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["n", "k", "value"])?;
            for n in 1..=7u64 {
                for (idx, v) in table.row(n).iter().enumerate() {
                    w.write_record([n.to_string(), (idx + 1).to_string(), v.to_string()])?;
                }
            }
            w.flush()?;
        }
        Format::JsonLines => {
            for n in 1..=7u64 {
                for (idx, v) in table.row(n).iter().enumerate() {
                    emit_json(&ValueRecord {
                        schema_version: SCHEMA_VERSION,
                        command: "table",
                        n,
                        k: Some(idx as u64 + 1),
                        s: None,
                        value: v.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn cmd_table_maxprob(cli: &Cli, which: u8, limits: &SearchLimits) -> Result<(), CliError> {
    let mut csv_writer = match cli.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record([
                "n",
                "s",
                "realizations",
                "maxima",
                "weight",
                "weight_sci",
                "probability",
                "total_weight",
            ])?;
            Some(w)
        }
        _ => None,
    };
    for (n, s) in TABLE_ROWS {
        let summary = if which == 2 {
            summarize(&maxprob_multinomial(n, s, limits)?)
        } else {
            summarize(&maxprob_di(n, s, limits)?)
        };
        let count = summary.rows.len();
        let weight = &summary.rows[0].weight;
        let realizations = summary
            .rows
            .iter()
            .map(|r| r.realization.clone())
            .collect::<Vec<_>>()
            .join(", ");
        let probability = decimal::probability_paper_style(weight, &summary.total, cli.precision);
        match cli.format {
            Format::Text => {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    n,
                    s,
                    realizations,
                    count,
                    decimal::count_paper_style(weight),
                    probability,
                    decimal::count_paper_style(&summary.total),
                );
            }
            Format::Csv => {
                let w = csv_writer.as_mut().expect("csv writer initialized");
                w.write_record([
                    n.to_string(),
                    s.to_string(),
                    realizations,
                    count.to_string(),
                    weight.to_string(),
                    decimal::sci(weight, 3),
                    probability,
                    summary.total.to_string(),
                ])?;
            }
            Format::JsonLines => emit_json(&TableRowRecord {
                schema_version: SCHEMA_VERSION,
                command: "table",
                table: which,
                n,
                s,
                realizations,
                maxima: count,
                weight: weight.to_string(),
                weight_sci: decimal::sci(weight, 3),
                probability,
                total_weight: summary.total.to_string(),
            }),
        }
    }
    if let Some(mut w) = csv_writer {
        w.flush()?;
    }
    Ok(())
}

// ------------------------------------------------------------ oracle-check

#[derive(Serialize)]
struct OracleRecord {
    schema_version: &'static str,
    command: &'static str,
    check: &'static str,
    n: u64,
    s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u64>,
    status: &'static str,
}

fn cmd_oracle_check(cli: &Cli, max_n: u64) -> Result<(), CliError> {
    if max_n < 1 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    if max_n > oracle::MAX_SET_PARTITION_N {
        return Err(oracle::OracleError::OracleTooLarge {
            what: "--max-n",
            requested: max_n,
            cap: oracle::MAX_SET_PARTITION_N,
        }
        .into());
    }
    let mut results: Vec<OracleRecord> = Vec::new();

    for n in 1..=max_n {
        let mut slot_counts: Vec<u64> = vec![1, 2, 3, n];
        slot_counts.retain(|&s| (1..=n).contains(&s));
        slot_counts.sort_unstable();
        slot_counts.dedup();

        for &s in &slot_counts {
            let map = oracle::count_set_partitions_by_shape(n, s)?;
            let total: BigCount = map.values().cloned().sum();
            let mut ok = total == exact::bell_incomplete(n, s);
            for (shape, counted) in &map {
                ok &= *counted == weight_di(shape);
            }
            results.push(record("set-partitions", n, s, None, ok));
        }

        if n <= 8 {
            for s in 1..=4u64 {
                let map = oracle::count_functions_by_occupancy(n, s)?;
                let total: BigCount = map.values().cloned().sum();
                let mut ok = total == BigCount::from(s).pow(n as u32);
                for (occ, counted) in &map {
                    ok &= *counted == weight_multinomial(occ);
                }
                results.push(record("functions", n, s, None, ok));
            }
        }

        if n <= oracle::MAX_TWO_LEVEL_N {
            for s in 1..=3u64 {
                for g in 1..=3u64 {
                    let spec = DegenerateSpec::new(g).expect("g >= 1");
                    let map = oracle::count_two_level_by_shape(n, s, g)?;
                    let mut ok = true;
                    for (shape, counted) in &map {
                        ok &= *counted == weight_di_degenerate(shape, spec);
                    }
                    results.push(record("two-level", n, s, Some(g), ok));
                }
            }
        }
    }

    let failures = results.iter().filter(|r| r.status == "FAIL").count();
    match cli.format {
        Format::Text => {
            for r in &results {
                let mut line = String::new();
                write!(line, "{:<16} N={} s={}", r.check, r.n, r.s).unwrap();
                if let Some(g) = r.g {
                    write!(line, " g={g}").unwrap();
                }
                println!("{line}  {}", r.status);
            }
            println!("{} checks, {} failed", results.len(), failures);
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["check", "n", "s", "g", "status"])?;
            for r in &results {
                w.write_record([
                    r.check.to_string(),
                    r.n.to_string(),
                    r.s.to_string(),
                    r.g.map_or_else(String::new, |g| g.to_string()),
                    r.status.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::JsonLines => {
            for r in &results {
                emit_json(r);
            }
        }
    }
    if failures > 0 {
        return Err(CliError::OracleMismatch(failures));
    }
    Ok(())
}

fn record(check: &'static str, n: u64, s: u64, g: Option<u64>, ok: bool) -> OracleRecord {
    OracleRecord {
        schema_version: SCHEMA_VERSION,
        command: "oracle-check",
        check,
        n,
        s,
        g,
        status: if ok { "PASS" } else { "FAIL" },
    }
}

fn emit_json<T: Serialize>(record: &T) {
    println!(
        "{}",
        serde_json::to_string(record).expect("records serialize")
    );
}
