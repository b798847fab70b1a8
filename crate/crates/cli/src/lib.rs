//! Command-line front end: single evaluations, batch tables, the Pascal
//! triangle of the `(5, 3)` theory and the oracle self-test.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use hodge_core::enumerate::{multisets, tuples};
use hodge_core::oracles::sweep::{run_sweep, AlgebraBuilder, SweepConfig};
use hodge_core::{
    build_algebra, evaluate, validate, FrobeniusAlgebra, HodgeError, LaurentPoly, ModelError, ModelParams, SurfaceDatum,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const CSV_HEADER: [&str; 8] = [
    "r",
    "s",
    "genus",
    "colors",
    "weight",
    "dimension",
    "signature",
    "polynomial",
];

#[derive(Debug, Parser)]
#[command(name = "hodge", version, about = "Hodge polynomials of SU(2) conformal blocks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single datum.
    Compute {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Comma-separated input colors; "" for none.
        #[arg(long, default_value = "")]
        colors: String,
        #[arg(long)]
        output_color: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every closed datum up to the given genus and number of colors.
    Table {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        genus_max: u32,
        #[arg(long)]
        n_max: usize,
        /// Emit every ordering of the colors instead of one row per multiset.
        #[arg(long)]
        ordered: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Hodge numbers of (r, s) = (5, 3), genus 0, all colors 2.
    Triangle {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Cross-check the engine against the independent oracles.
    Selftest {
        #[arg(long, value_enum, default_value_t = Depth::Quick)]
        depth: Depth,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Depth {
    Quick,
    Full,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidInput(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        match err {
            ModelError::InvalidR(_) | ModelError::InvalidS { .. } => CliError::InvalidInput(err.to_string()),
            ModelError::Algebra(_) => CliError::Internal(err.to_string()),
        }
    }
}

impl From<HodgeError> for CliError {
    fn from(err: HodgeError) -> Self {
        match err {
            HodgeError::ColorOutOfRange { .. } => CliError::InvalidInput(err.to_string()),
            _ => CliError::Internal(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Internal(err.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Internal(err.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub p: i64,
    pub q: i64,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub r: u32,
    pub s: u32,
    pub genus: u32,
    pub colors: Vec<usize>,
    pub output_color: Option<usize>,
    pub weight: String,
    pub polynomial: String,
    pub terms: Vec<Term>,
    pub dimension: String,
    pub signature: Option<String>,
    pub type2_gap: bool,
    pub formal_value: bool,
}

impl ResultRecord {
    fn csv_row(&self) -> [String; 8] {
        let mut colors = join(&self.colors, " ");
        if let Some(mu) = self.output_color {
            let _ = write!(colors, " -> {mu}");
        }
        [
            self.r.to_string(),
            self.s.to_string(),
            self.genus.to_string(),
            colors,
            self.weight.clone(),
            self.dimension.clone(),
            self.signature.clone().unwrap_or_default(),
            self.polynomial.clone(),
        ]
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "r = {}, s = {}, genus = {}", self.r, self.s, self.genus);
        let _ = write!(out, "colors = ({})", join(&self.colors, ", "));
        if let Some(mu) = self.output_color {
            let _ = write!(out, ", output color = {mu}");
        }
        out.push('\n');
        let _ = writeln!(out, "e = {}", self.polynomial);
        let _ = writeln!(out, "weight = {}", self.weight);
        let _ = writeln!(out, "dimension = {}", self.dimension);
        match &self.signature {
            Some(sig) => {
                let _ = writeln!(out, "signature = {sig}");
            }
            None => out.push_str("signature = undefined (output color)\n"),
        }
        let _ = writeln!(out, "type-2 gap = {}", if self.type2_gap { "yes" } else { "no" });
        if self.formal_value {
            out.push_str("formal value: (g, n) is not tangent-stable\n");
        }
        out
    }

    fn text_line(&self) -> String {
        format!(
            "g={} colors=({}) weight={} dim={} sig={} e={}",
            self.genus,
            join(&self.colors, ","),
            self.weight,
            self.dimension,
            self.signature.as_deref().unwrap_or("-"),
            self.polynomial
        )
    }
}

fn join(items: &[usize], sep: &str) -> String {
    items.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep)
}

/// Parses `"2,2,2,2"`; the empty string is the empty list.
pub fn parse_colors(raw: &str) -> Result<Vec<usize>, CliError> {
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|c| {
            c.trim()
                .parse::<usize>()
                .map_err(|_| CliError::InvalidInput(format!("invalid color {c:?}: colors are non-negative integers")))
        })
        .collect()
}

pub fn compute_record(
    algebra: &FrobeniusAlgebra,
    params: &ModelParams,
    datum: &SurfaceDatum,
) -> Result<ResultRecord, CliError> {
    datum.validate(params.rank())?;
    let res = evaluate(algebra, params, datum)?;
    let polynomial = res.polynomial.to_string();
    match polynomial.parse::<LaurentPoly>() {
        Ok(back) if back == res.polynomial => {}
        _ => {
            return Err(CliError::Internal(format!(
                "polynomial text {polynomial:?} does not round-trip"
            )))
        }
    }
    Ok(ResultRecord {
        r: params.r(),
        s: params.s(),
        genus: datum.genus,
        colors: datum.colors.clone(),
        output_color: datum.output_color,
        weight: res.weight.to_string(),
        polynomial,
        terms: res
            .polynomial
            .terms()
            .map(|(e, c)| Term {
                p: e.p,
                q: e.q,
                c: c.to_string(),
            })
            .collect(),
        dimension: res.dimension.to_string(),
        signature: res.signature.map(|s| s.to_string()),
        type2_gap: res.gaps.has_type2_gap,
        formal_value: datum.is_formal(),
    })
}

fn setup(r: i64, s: i64) -> Result<(ModelParams, FrobeniusAlgebra), CliError> {
    let params = validate(r, s)?;
    let algebra = build_algebra(&params)?;
    Ok((params, algebra))
}

pub fn cmd_compute(
    r: i64,
    s: i64,
    genus: u32,
    colors: &str,
    output_color: Option<i64>,
    format: Format,
) -> Result<String, CliError> {
    let (params, algebra) = setup(r, s)?;
    let colors = parse_colors(colors)?;
    let datum = match output_color {
        None => SurfaceDatum::closed(genus, colors),
        Some(mu) => {
            let mu = usize::try_from(mu).map_err(|_| {
                CliError::InvalidInput(format!("invalid output color {mu}: colors are non-negative integers"))
            })?;
            SurfaceDatum::with_output(genus, colors, mu)
        }
    };
    let record = compute_record(&algebra, &params, &datum)?;
    render(&[record], format)
}

/// Closed data of the table in emission order: genus ascending, then
/// length, then colexicographic; odd color sums are skipped.
pub fn table_data(rank: usize, genus_max: u32, n_max: usize, ordered: bool) -> Vec<SurfaceDatum> {
    let lists = if ordered {
        tuples(rank, n_max)
    } else {
        multisets(rank, n_max)
    };
    (0..=genus_max)
        .flat_map(|g| {
            lists
                .iter()
                .filter(|c| c.iter().sum::<usize>() % 2 == 0)
                .map(move |c| SurfaceDatum::closed(g, c.clone()))
        })
        .collect()
}

pub fn table_records(
    r: i64,
    s: i64,
    genus_max: u32,
    n_max: usize,
    ordered: bool,
) -> Result<Vec<ResultRecord>, CliError> {
    let (params, algebra) = setup(r, s)?;
    // par_iter + collect keeps the enumeration order.
    table_data(params.rank(), genus_max, n_max, ordered)
        .par_iter()
        .map(|d| compute_record(&algebra, &params, d))
        .collect()
}

pub fn cmd_table(
    r: i64,
    s: i64,
    genus_max: u32,
    n_max: usize,
    ordered: bool,
    format: Format,
) -> Result<String, CliError> {
    render(&table_records(r, s, genus_max, n_max, ordered)?, format)
}

/// JSON is one record per line; CSV carries the fixed header.
pub fn render(records: &[ResultRecord], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut out = String::new();
            for rec in records {
                out.push_str(&serde_json::to_string(rec).map_err(|e| CliError::Internal(e.to_string()))?);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for rec in records {
                w.write_record(rec.csv_row())?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
        }
        Format::Text if records.len() == 1 => Ok(records[0].text()),
        Format::Text => Ok(records.iter().map(|r| r.text_line() + "\n").collect()),
    }
}

/// One row of the triangle: Hodge numbers in increasing `p`, their sum and
/// the signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: usize,
    pub hodge_numbers: Vec<String>,
    pub sum: String,
    pub signature: String,
}

pub fn triangle_rows(n_max: usize) -> Result<Vec<TriangleRow>, CliError> {
    if n_max < 2 {
        return Err(CliError::InvalidInput(format!(
            "the triangle needs n-max ≥ 2 (got {n_max})"
        )));
    }
    let (params, algebra) = setup(5, 3)?;
    (2..=n_max)
        .map(|n| {
            let rec = compute_record(&algebra, &params, &SurfaceDatum::closed(0, vec![2; n]))?;
            Ok(TriangleRow {
                n,
                hodge_numbers: rec.terms.iter().map(|t| t.c.clone()).collect(),
                sum: rec.dimension,
                signature: rec.signature.unwrap_or_default(),
            })
        })
        .collect()
}

pub fn cmd_triangle(n_max: usize) -> Result<String, CliError> {
    let rows = triangle_rows(n_max)?;
    let lines: Vec<String> = rows.iter().map(|r| r.hodge_numbers.join(" ")).collect();
    let width = lines.iter().map(|l| l.len()).max().unwrap_or(0);
    let n_width = n_max.to_string().len();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>n_width$}  {:^width$}  {:>8}  {:>8}",
        "n", "dim E^{p,q}", "sum", "alt"
    );
    for (row, line) in rows.iter().zip(&lines) {
        let _ = writeln!(
            out,
            "{:>n_width$}  {:^width$}  {:>8}  {:>8}",
            row.n, line, row.sum, row.signature
        );
    }
    Ok(out)
}

/// Runs the sweep against `build`; `Err` carries the full report when any
/// point fails.
pub fn selftest_with(depth: Depth, build: &AlgebraBuilder) -> Result<String, CliError> {
    let config = match depth {
        Depth::Quick => SweepConfig::quick(),
        Depth::Full => SweepConfig::full(),
    };
    let reports = run_sweep(&config, build);
    let mut out = String::new();
    for rep in &reports {
        match &rep.failure {
            None => {
                let _ = writeln!(out, "ok   (r, s) = ({}, {}): {} data", rep.r, rep.s, rep.data_checked);
            }
            Some(f) => {
                let _ = writeln!(out, "FAIL (r, s) = ({}, {}): {f}", rep.r, rep.s);
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        Err(CliError::Internal(format!("self-test failed\n{out}")))
    }
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Compute {
            r,
            s,
            genus,
            colors,
            output_color,
            format,
        } => cmd_compute(*r, *s, *genus, colors, *output_color, *format),
        Command::Table {
            r,
            s,
            genus_max,
            n_max,
            ordered,
            format,
        } => cmd_table(*r, *s, *genus_max, *n_max, *ordered, *format),
        Command::Triangle { n_max } => cmd_triangle(*n_max),
        Command::Selftest { depth } => selftest_with(*depth, &build_algebra),
    }
}

pub fn main_with_args<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(out) => match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
