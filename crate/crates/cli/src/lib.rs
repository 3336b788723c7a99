//! Subcommands of the `pindex` tool. Each command renders to a `String`; the
//! binary only decides where the text goes and which exit code to use.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pindex_core::basis::{envelope, sample_curves};
use pindex_core::ingest::{load_policy, read_records};
use pindex_core::metrics::{build_report, Comparison};
use pindex_core::partition::{make_psequence, psequence_at, shared_rank_groups, PartitionPolicy};
use pindex_core::{render, Error};

/// Tie tolerance used when reporting shared ranks.
pub const SHARED_RANK_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Parser)]
#[command(name = "pindex", version, about = "Contribution-weighted author citation metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute C, Q, P, C_false and H for one author's records.
    Compute(ComputeArgs),
    /// Print the p-sequence for an author count.
    Partition(PartitionArgs),
    /// Write sampled basis curves as CSV or SVG.
    Plot(PlotArgs),
    /// Partitioned versus conventional totals, with a credit histogram.
    Compare(ComputeArgs),
    /// Envelope bound on the largest share of a heavily coauthored article.
    Envelope(EnvelopeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    Svg,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Svg => "svg",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Args)]
pub struct PolicyArg {
    /// Partition policy (JSON). Defaults to the demonstration schedule.
    #[arg(long, env = "PINDEX_POLICY")]
    pub policy: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Citation records, CSV or JSON (by extension).
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub policy: PolicyArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub authors: usize,
    /// p-axis position; taken from the policy schedule when omitted.
    #[arg(long)]
    pub x: Option<f64>,
    /// Stretching parameter of the Bernstein-S basis.
    #[arg(long)]
    pub s: Option<f64>,
    #[command(flatten)]
    pub policy: PolicyArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long)]
    pub authors: usize,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    /// Add the envelope curve.
    #[arg(long)]
    pub envelope: bool,
    /// Mark a p-axis position on the SVG.
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
    /// csv or svg; inferred from the output extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[command(flatten)]
    pub policy: PolicyArg,
}

#[derive(Debug, Args)]
pub struct EnvelopeArgs {
    #[arg(long)]
    pub authors: usize,
    #[arg(long, default_value_t = 0.5)]
    pub x: f64,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    /// Citations of the article, to turn the bound into an earning.
    #[arg(long)]
    pub citations: Option<u64>,
}

/// Failure of a command, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input, arguments or I/O (exit 1).
    Input(String),
    /// The metric is undefined for this input (exit 2).
    Undefined(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Undefined(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Undefined(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_undefined_metric() {
            CliError::Undefined(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn with_path(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| match e {
        Error::Io(io) => CliError::Input(format!("{}: {io}", path.display())),
        other => other.into(),
    }
}

fn unsupported(command: &str, format: OutputFormat) -> CliError {
    CliError::Input(format!("format {format} is not available for {command}"))
}

fn policy(arg: &PolicyArg) -> Result<PartitionPolicy, CliError> {
    match &arg.policy {
        Some(p) => load_policy(Some(p)).map_err(with_path(p)),
        None => Ok(load_policy(None)?),
    }
}

/// Where a command's output should go.
pub struct Output {
    pub text: String,
    pub path: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Compute(args) => Ok(Output {
            text: compute(args)?,
            path: args.out.clone(),
        }),
        Command::Compare(args) => Ok(Output {
            text: compare(args)?,
            path: args.out.clone(),
        }),
        Command::Partition(args) => Ok(Output {
            text: partition(args)?,
            path: args.out.clone(),
        }),
        Command::Plot(args) => Ok(Output {
            text: plot(args)?,
            path: Some(args.out.clone()),
        }),
        Command::Envelope(args) => Ok(Output {
            text: envelope_bound(args)?,
            path: None,
        }),
    }
}

pub fn compute(args: &ComputeArgs) -> Result<String, CliError> {
    let records = read_records(&args.input).map_err(with_path(&args.input))?;
    let policy = policy(&args.policy)?;
    let report = build_report(&records, &policy)?;
    match args.format {
        OutputFormat::Table => Ok(render::report_table(&report)),
        OutputFormat::Json => Ok(render::report_json(&report)),
        OutputFormat::Csv => Ok(render::earnings_csv(&report)),
        f => Err(unsupported("compute", f)),
    }
}

pub fn compare(args: &ComputeArgs) -> Result<String, CliError> {
    let records = read_records(&args.input).map_err(with_path(&args.input))?;
    let policy = policy(&args.policy)?;
    let report = build_report(&records, &policy)?;
    let cmp = Comparison::from_report(&report);
    match args.format {
        OutputFormat::Table => Ok(render::comparison_table(&cmp)),
        OutputFormat::Json => Ok(render::comparison_json(&cmp)),
        f => Err(unsupported("compare", f)),
    }
}

pub fn partition(args: &PartitionArgs) -> Result<String, CliError> {
    let policy = policy(&args.policy)?;
    let seq = match (args.x, args.s) {
        (None, None) => make_psequence(args.authors, &policy)?,
        (x, s) => {
            let s = s.unwrap_or(policy.s);
            let x = match x {
                Some(x) => x,
                None if args.authors == 1 => 0.0,
                None => policy.resolve_x(args.authors)?,
            };
            psequence_at(args.authors, x, s)?
        }
    };
    let groups = shared_rank_groups(&seq, SHARED_RANK_TOLERANCE)?;
    match args.format {
        OutputFormat::Table => Ok(render::psequence_table(&seq, &groups)),
        OutputFormat::Json => Ok(render::psequence_json(&seq, &groups)),
        OutputFormat::Csv => Ok(render::psequence_csv(&seq, &groups)),
        f => Err(unsupported("partition", f)),
    }
}

pub fn plot(args: &PlotArgs) -> Result<String, CliError> {
    if args.authors == 0 {
        return Err(CliError::Input("--authors must be at least 1".into()));
    }
    let format = args.format.unwrap_or_else(|| {
        match args.out.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("svg") => OutputFormat::Svg,
            _ => OutputFormat::Csv,
        }
    });
    let curve = sample_curves(args.authors - 1, args.s, args.samples, args.envelope)?;
    match format {
        OutputFormat::Csv => Ok(render::curve_csv(&curve)),
        OutputFormat::Svg => {
            let marker = match args.x {
                Some(x) => Some(x),
                None if args.policy.policy.is_some() => {
                    Some(policy(&args.policy)?.resolve_x(args.authors)?)
                }
                None => None,
            };
            Ok(render::curve_svg(&curve, marker))
        }
        f => Err(unsupported("plot", f)),
    }
}

pub fn envelope_bound(args: &EnvelopeArgs) -> Result<String, CliError> {
    if args.authors < 2 {
        return Err(CliError::Input("the envelope needs at least 2 authors".into()));
    }
    let bound = envelope(args.authors - 1, args.x, args.s)?;
    let mut out = format!(
        "authors     {}\nx           {}\ns           {}\nenvelope    {:.6}\n",
        args.authors, args.x, args.s, bound
    );
    if let Some(c) = args.citations {
        out.push_str(&format!(
            "citations   {c}\nmax earning {:.2}\n",
            bound * c as f64
        ));
    }
    Ok(out)
}
