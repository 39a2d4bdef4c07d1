use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mcdm_core::{
    ahp, dataset, ranking, Method, RankingReport, ReviewMatrix, ScoreMode, ScoringOptions,
};

use crate::input::{load_reviews, parse_names_config, LoadConfig};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

type CommandFn = fn(&RunConfig, &mut dyn Write, &mut dyn Write) -> anyhow::Result<i32>;

#[derive(Debug, Parser)]
#[command(
    name = "mcdm",
    version,
    about = "Rank alternatives from review ratings with AHP and fuzzy AHP"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank alternatives and print the reports.
    Rank(RunArgs),
    /// Print consistency diagnostics for the AHP comparison matrix.
    Validate(RunArgs),
    /// Emit long-format CSV (method, alternative, weight, rank) for plotting.
    ExportPlotdata(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Ahp,
    FuzzyAhp,
    Manual,
    All,
}

impl MethodArg {
    fn methods(self) -> &'static [Method] {
        match self {
            MethodArg::Ahp => &[Method::Ahp],
            MethodArg::FuzzyAhp => &[Method::FuzzyAhp],
            MethodArg::Manual => &[Method::Manual],
            MethodArg::All => &Method::ALL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScoreModeArg {
    Weight,
    WeightTimesMean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Ratings file: header row, reviewer id column, one rating column per alternative.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    /// Field delimiter (single character).
    #[arg(long, default_value = ",")]
    pub delimiter: char,
    /// Use raw means instead of max-normalized means.
    #[arg(long)]
    pub no_normalize: bool,
    #[arg(long, value_enum, default_value = "weight")]
    pub score_mode: ScoreModeArg,
    /// Largest acceptable consistency ratio.
    #[arg(long, default_value_t = ahp::CR_THRESHOLD)]
    pub cr_threshold: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// Names config with `index=name` lines (1-based rating column index).
    #[arg(long)]
    pub names: Option<PathBuf>,
}

/// Validated run parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub method: MethodArg,
    pub delimiter: u8,
    pub normalize: bool,
    pub score_mode: ScoreMode,
    pub cr_threshold: f64,
    pub output_format: OutputFormat,
    pub names_config: Option<PathBuf>,
}

impl TryFrom<RunArgs> for RunConfig {
    type Error = anyhow::Error;

    fn try_from(a: RunArgs) -> anyhow::Result<Self> {
        if a.input.as_os_str().is_empty() {
            bail!("input path is empty");
        }
        if !(a.cr_threshold > 0.0 && a.cr_threshold.is_finite()) {
            bail!("--cr-threshold must be positive, got {}", a.cr_threshold);
        }
        if !a.delimiter.is_ascii() {
            bail!("delimiter must be a single ASCII character");
        }
        Ok(Self {
            input_path: a.input,
            method: a.method,
            delimiter: a.delimiter as u8,
            normalize: !a.no_normalize,
            score_mode: match a.score_mode {
                ScoreModeArg::Weight => ScoreMode::Weight,
                ScoreModeArg::WeightTimesMean => ScoreMode::WeightTimesMean,
            },
            cr_threshold: a.cr_threshold,
            output_format: a.format,
            names_config: a.names,
        })
    }
}

impl RunConfig {
    fn options(&self) -> ScoringOptions {
        ScoringOptions {
            normalize: self.normalize,
            score_mode: self.score_mode,
            cr_threshold: self.cr_threshold,
        }
    }
}

pub fn load(config: &RunConfig) -> anyhow::Result<ReviewMatrix> {
    let mut load_config = LoadConfig {
        delimiter: config.delimiter,
        ..LoadConfig::default()
    };
    if let Some(path) = &config.names_config {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read names config {}", path.display()))?;
        load_config.names = parse_names_config(&text)?;
    }
    let file = fs::File::open(&config.input_path)
        .with_context(|| format!("cannot open input {}", config.input_path.display()))?;
    let data = load_reviews(file, &load_config)
        .with_context(|| format!("invalid input {}", config.input_path.display()))?;
    Ok(data)
}

fn selected(c: &ranking::Comparison, method: MethodArg) -> Vec<&RankingReport> {
    method.methods().iter().map(|&m| c.report(m)).collect()
}

fn flag_failures(reports: &[&RankingReport], threshold: f64, err: &mut dyn Write) -> bool {
    let mut failed = false;
    for r in reports {
        if let Some(c) = r.consistency.as_ref().filter(|c| !c.consistent) {
            let _ = writeln!(
                err,
                "warning: {}: consistency ratio {:.4} exceeds {threshold}; report flagged",
                r.method, c.cr
            );
            failed = true;
        }
    }
    failed
}

pub fn cmd_rank(
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let data = load(config)?;
    let comparison = ranking::compare_methods(&data, &config.options())?;
    for w in &comparison.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let reports = selected(&comparison, config.method);
    let text = match config.output_format {
        OutputFormat::Table => report::reports_table(&reports),
        OutputFormat::Json => report::reports_json(&reports),
        OutputFormat::Csv => report::reports_csv(&reports),
    };
    out.write_all(text.as_bytes())?;
    Ok(if flag_failures(&reports, config.cr_threshold, err) {
        EXIT_INCONSISTENT
    } else {
        EXIT_OK
    })
}

pub fn cmd_validate(
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let data = load(config)?;
    let mut scores = dataset::category_means(&data);
    if config.normalize {
        let (normalized, warnings) = scores.normalized();
        for w in &warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        scores = normalized;
    }
    let (pairwise, warnings) = ahp::build_pairwise(&scores)?;
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let (_, consistency) = ahp::ahp_weights(&pairwise, config.cr_threshold)?;
    let text = match config.output_format {
        OutputFormat::Table => report::consistency_table(&consistency, config.cr_threshold),
        OutputFormat::Json => report::consistency_json(&consistency),
        OutputFormat::Csv => report::consistency_csv(&consistency),
    };
    out.write_all(text.as_bytes())?;
    Ok(if consistency.consistent {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    })
}

pub fn cmd_export_plotdata(
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let data = load(config)?;
    let comparison = ranking::compare_methods(&data, &config.options())?;
    for w in &comparison.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let reports = selected(&comparison, config.method);
    out.write_all(report::plotdata_csv(&reports).as_bytes())?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let (args, command): (RunArgs, CommandFn) = match cli.command {
        Command::Rank(a) => (a, cmd_rank),
        Command::Validate(a) => (a, cmd_validate),
        Command::ExportPlotdata(a) => (a, cmd_export_plotdata),
    };
    let result = RunConfig::try_from(args).and_then(|config| command(&config, out, err));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}
