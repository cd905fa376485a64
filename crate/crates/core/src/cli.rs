//! The `ugp` command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 domain error,
//! 4 negative degree of difficulty, 5 solver or quadrature non-convergence.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chance::{sweep, ChanceConfig, CriterionPlan, SweepRow};
use crate::error::Error;
use crate::problem_file::{BundledCase, ProblemFile, ProblemFileError};
use crate::twofold::ReductionCriterion;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_DIFFICULTY: i32 = 4;
pub const EXIT_CONVERGENCE: i32 = 5;

/// Geometric programming with two-fold uncertain coefficients.
#[derive(Debug, Parser)]
#[command(name = "ugp", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the reduced distribution of every coefficient as CSV.
    Reduce(ReduceArgs),
    /// Solve the chance-constrained program at one confidence level.
    Solve(SolveArgs),
    /// Solve over a grid of confidence levels.
    Sweep(SweepArgs),
    /// Run both bundled cases over 0.1..0.9 and write table1.csv and table2.csv.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionKind {
    Optimistic,
    Pessimistic,
    Expected,
}

#[derive(Debug, Args)]
pub struct CriterionArgs {
    #[arg(long, value_enum, default_value = "expected")]
    pub criterion: CriterionKind,
    /// Level for the optimistic and pessimistic criteria.
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub criterion: CriterionArgs,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub gamma: f64,
    #[command(flatten)]
    pub criterion: CriterionArgs,
    /// Round the deterministic coefficients before solving.
    #[arg(long)]
    pub decimals: Option<u32>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub file: PathBuf,
    /// `start:end:step` or a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    pub gammas: String,
    #[command(flatten)]
    pub criterion: CriterionArgs,
    #[arg(long)]
    pub decimals: Option<u32>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Solve with unrounded coefficients instead of 3-decimal ones.
    #[arg(long)]
    pub full_precision: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DegreeOfDifficultyNegative { .. } => EXIT_DIFFICULTY,
        Error::NonConvergence { .. } | Error::QuadratureNonConvergence { .. } => EXIT_CONVERGENCE,
        Error::AlphaOutOfRange(_)
        | Error::YOutOfRange(_)
        | Error::InvalidParameters(_)
        | Error::InfeasibleDual(_)
        | Error::UnboundedDual
        | Error::RankDeficient { .. } => EXIT_DOMAIN,
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        Self {
            code: exit_code(&err),
            message: err.to_string(),
        }
    }
}

impl From<ProblemFileError> for CliError {
    fn from(err: ProblemFileError) -> Self {
        let code = match err {
            ProblemFileError::Io { .. } => EXIT_IO,
            ProblemFileError::Parse(_) => EXIT_PARSE,
            ProblemFileError::Domain(_) => EXIT_DOMAIN,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational {
                EXIT_SUCCESS
            } else {
                EXIT_PARSE
            };
        }
    };
    let result = match cli.command {
        Command::Reduce(a) => cmd_reduce(&a, out),
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out, err),
        Command::Tables(a) => cmd_tables(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

impl CriterionArgs {
    pub fn to_criterion(&self) -> Result<ReductionCriterion, CliError> {
        let alpha = || {
            self.alpha.ok_or_else(|| {
                CliError::parse(format!(
                    "--alpha is required with --criterion {}",
                    self.criterion
                        .to_possible_value()
                        .expect("no skipped variants")
                        .get_name()
                ))
            })
        };
        Ok(match self.criterion {
            CriterionKind::Expected => ReductionCriterion::Expected,
            CriterionKind::Optimistic => ReductionCriterion::optimistic(alpha()?)?,
            CriterionKind::Pessimistic => ReductionCriterion::pessimistic(alpha()?)?,
        })
    }
}

/// `start:end:step` (inclusive of `end` up to rounding) or `g1,g2,...`.
/// An empty string is an empty grid.
pub fn parse_gammas(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let number = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("--gammas: `{}` is not a number", s.trim()))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, end, step] = parts[..] else {
            return Err("--gammas: a range needs the form start:end:step".into());
        };
        let (start, end, step) = (number(start)?, number(end)?, number(step)?);
        if step.is_nan() || step <= 0.0 || end < start {
            return Err("--gammas: a range needs step > 0 and end >= start".into());
        }
        let count = ((end - start) / step + 1e-9).floor() as usize + 1;
        Ok((0..count)
            .map(|i| crate::chance::round_to(start + i as f64 * step, 12))
            .collect())
    } else {
        spec.split(',').map(number).collect()
    }
}

/// Locale-independent decimal with 17 significant digits.
pub fn format_full(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    if (-5..16).contains(&magnitude) {
        format!("{:.*}", (16 - magnitude) as usize, v)
    } else {
        format!("{v:.16e}")
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Option<std::fs::File>, CliError> {
    path.as_ref()
        .map(|p| std::fs::File::create(p).map_err(|e| CliError::io(p, e)))
        .transpose()
}

fn csv_writer<W: Write>(sink: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink)
}

fn csv_error(e: csv::Error) -> CliError {
    CliError {
        code: EXIT_IO,
        message: e.to_string(),
    }
}

fn load(path: &Path) -> Result<(ProblemFile, crate::chance::UncertainGpProblem), CliError> {
    let file = ProblemFile::load(path)?;
    let problem = file.to_problem()?;
    Ok((file, problem))
}

pub fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let criterion = args.criterion.to_criterion()?;
    let (file, problem) = load(&args.file)?;
    let coefficients = problem
        .objective()
        .iter()
        .chain(problem.constraints().iter().flatten())
        .map(|t| t.coefficient);
    let curves = coefficients
        .map(|c| c.sample_curve(criterion, args.samples))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = file.coefficient_labels();

    let mut target = open_output(&args.output)?;
    let sink: &mut dyn Write = match target.as_mut() {
        Some(f) => f,
        None => out,
    };
    let mut w = csv_writer(sink);
    let header: Vec<String> = labels
        .iter()
        .flat_map(|l| [format!("{l}_x"), format!("{l}_phi")])
        .collect();
    w.write_record(&header).map_err(csv_error)?;
    for i in 0..args.samples {
        let row: Vec<String> = curves
            .iter()
            .flat_map(|c| [format_full(c[i].0), format_full(c[i].1)])
            .collect();
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()
        .map_err(|e| CliError::io(Path::new("output"), e))?;
    Ok(EXIT_SUCCESS)
}

fn sweep_header(variables: usize, terms: usize) -> Vec<String> {
    std::iter::once("gamma".to_string())
        .chain((1..=variables).map(|j| format!("x{j}")))
        .chain((1..=terms).map(|i| format!("delta{i}")))
        .chain(std::iter::once("objective".to_string()))
        .collect()
}

fn sweep_record(row: &SweepRow) -> Vec<String> {
    std::iter::once(row.gamma)
        .chain(row.x_star.iter().copied())
        .chain(row.delta_star.iter().copied())
        .chain(std::iter::once(row.expected_objective))
        .map(format_full)
        .collect()
}

pub fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let criterion = args.criterion.to_criterion()?;
    let (file, problem) = load(&args.file)?;
    let mut cfg = ChanceConfig::new(args.gamma, criterion)?;
    cfg.coefficient_decimals = args.decimals;
    let row = crate::chance::solve_chance(&problem, &cfg)?;

    let io = |e: std::io::Error| CliError::io(Path::new("stdout"), e);
    let labels = file.coefficient_labels();
    let coeffs: Vec<f64> = row
        .objective_coefficients
        .iter()
        .chain(row.constraint_coefficients.iter().flatten())
        .copied()
        .collect();
    writeln!(out, "gamma          {}", row.gamma).map_err(io)?;
    writeln!(out, "criterion      {}", criterion.name()).map_err(io)?;
    for (l, c) in labels.iter().zip(&coeffs) {
        writeln!(out, "{l:<14} {c:.6}").map_err(io)?;
    }
    for (name, x) in file.variables.iter().zip(&row.x_star) {
        writeln!(out, "{:<14} {x:.6}", format!("{name}*")).map_err(io)?;
    }
    for (i, d) in row.delta_star.iter().enumerate() {
        writeln!(out, "{:<14} {d:.6}", format!("delta{}*", i + 1)).map_err(io)?;
    }
    writeln!(out, "E[f0(x*)]      {:.6}", row.expected_objective).map_err(io)?;
    writeln!(out, "dual value     {:.6}", row.dual_value).map_err(io)?;
    writeln!(
        out,
        "duality gap    {:.3e}",
        row.diagnostics.duality_gap_rel
    )
    .map_err(io)?;
    for (k, r) in row.diagnostics.constraint_residuals().iter().enumerate() {
        writeln!(out, "{:<14} {r:.3e}", format!("f{}(x*) - 1", k + 1)).map_err(io)?;
    }

    let mut w = match open_output(&args.output)? {
        Some(f) => csv_writer(Box::new(f) as Box<dyn Write>),
        None => {
            writeln!(out).map_err(io)?;
            csv_writer(Box::new(&mut *out) as Box<dyn Write>)
        }
    };
    w.write_record(sweep_header(problem.variables(), problem.term_count()))
        .map_err(csv_error)?;
    w.write_record(sweep_record(&row)).map_err(csv_error)?;
    w.flush().map_err(io)?;
    Ok(EXIT_SUCCESS)
}

/// Writes the sweep CSV: one row per solved level, `# gamma=…: error` for
/// failed ones. Returns the first error if no level succeeded.
fn write_sweep_csv(
    sink: &mut dyn Write,
    variables: usize,
    terms: usize,
    rows: &[(f64, Result<SweepRow, Error>)],
) -> Result<Option<Error>, CliError> {
    let mut buf = csv_record(&sweep_header(variables, terms))?;
    for (gamma, row) in rows {
        match row {
            Ok(row) => buf.extend(csv_record(&sweep_record(row))?),
            Err(e) => {
                let tag = format!("{e:?}");
                let tag = tag.split(['(', ' ', '{']).next().unwrap_or("Error");
                buf.extend(format!("# gamma={gamma} error={tag}: {e}\n").into_bytes());
            }
        }
    }
    sink.write_all(&buf)
        .and_then(|_| sink.flush())
        .map_err(|e| CliError::io(Path::new("output"), e))?;
    let all_failed = !rows.is_empty() && rows.iter().all(|(_, r)| r.is_err());
    Ok(if all_failed {
        rows[0].1.clone().err()
    } else {
        None
    })
}

fn csv_record(fields: &[String]) -> Result<Vec<u8>, CliError> {
    let mut w = csv_writer(Vec::new());
    w.write_record(fields).map_err(csv_error)?;
    w.into_inner().map_err(|e| CliError {
        code: EXIT_IO,
        message: e.to_string(),
    })
}

/// Rows rounded to three decimals, one line per level.
pub fn table_view(
    rows: &[(f64, Result<SweepRow, Error>)],
    variables: usize,
    terms: usize,
) -> String {
    let mut s = String::new();
    let mut header = format!("{:>6}", "gamma");
    for j in 1..=variables {
        header += &format!(" {:>9}", format!("x{j}*"));
    }
    for i in 1..=terms {
        header += &format!(" {:>9}", format!("d{i}*"));
    }
    header += &format!(" {:>10}", "E[f0]");
    s += &header;
    s.push('\n');
    for (gamma, row) in rows {
        match row {
            Ok(r) => {
                s += &format!("{gamma:>6.3}");
                for v in r.x_star.iter().chain(&r.delta_star) {
                    s += &format!(" {v:>9.3}");
                }
                s += &format!(" {:>10.3}\n", r.expected_objective);
            }
            Err(e) => s += &format!("{gamma:>6.3}  failed: {e}\n"),
        }
    }
    s
}

pub fn cmd_sweep(
    args: &SweepArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let gammas = parse_gammas(&args.gammas).map_err(CliError::parse)?;
    let criterion = args.criterion.to_criterion()?;
    let (_, problem) = load(&args.file)?;
    let results = sweep(
        &problem,
        &gammas,
        &CriterionPlan::uniform(criterion),
        args.decimals,
    );
    let rows: Vec<(f64, Result<SweepRow, Error>)> = gammas.iter().copied().zip(results).collect();
    let (n, terms) = (problem.variables(), problem.term_count());

    let failure = match open_output(&args.output)? {
        Some(mut f) => {
            let failure = write_sweep_csv(&mut f, n, terms, &rows)?;
            write!(out, "{}", table_view(&rows, n, terms))
                .map_err(|e| CliError::io(Path::new("stdout"), e))?;
            failure
        }
        None => write_sweep_csv(out, n, terms, &rows)?,
    };
    for (gamma, row) in &rows {
        if let Err(e) = row {
            let _ = writeln!(err, "warning: gamma={gamma}: {e}");
        }
    }
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(EXIT_SUCCESS),
    }
}

/// The grid 0.1, 0.2, …, 0.9.
pub fn table_gammas() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

pub fn cmd_tables(args: &TablesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let decimals = (!args.full_precision).then_some(3);
    std::fs::create_dir_all(&args.out_dir).map_err(|e| CliError::io(&args.out_dir, e))?;
    let io = |e: std::io::Error| CliError::io(Path::new("stdout"), e);
    let cases = [
        (
            "table1.csv",
            "triangular two-fold coefficients",
            BundledCase::Triangular,
        ),
        (
            "table2.csv",
            "trapezoidal two-fold coefficients",
            BundledCase::Trapezoidal,
        ),
    ];
    let mut failure = None;
    for (name, title, case) in cases {
        let problem = case.problem();
        let gammas = table_gammas();
        let results = sweep(
            &problem,
            &gammas,
            &ReductionCriterion::Expected.into(),
            decimals,
        );
        let rows: Vec<_> = gammas.iter().copied().zip(results).collect();
        let (n, terms) = (problem.variables(), problem.term_count());
        let path = args.out_dir.join(name);
        let mut f = std::fs::File::create(&path).map_err(|e| CliError::io(&path, e))?;
        if let Some(e) = write_sweep_csv(&mut f, n, terms, &rows)? {
            failure.get_or_insert(e);
        }
        let reduced =
            crate::chance::reduce_problem(&problem, &ReductionCriterion::Expected.into())?;
        let beta = reduced.objective_coefficients()?;
        writeln!(out, "{title} ({})", path.display()).map_err(io)?;
        writeln!(
            out,
            "objective coefficients: {}",
            beta.iter()
                .map(|b| format!("{b:.3}"))
                .collect::<Vec<_>>()
                .join(", ")
        )
        .map_err(io)?;
        writeln!(out, "{}", table_view(&rows, n, terms)).map_err(io)?;
    }
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(EXIT_SUCCESS),
    }
}
