//! `concept-interference` command line: solve, classify, verify and render.
//!
//! Exit codes: 0 success, 1 usage / I/O / validation error, 2 the data admit
//! no verified model.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::complexlin::ProjectorLayout;
use crate::config::Thresholds;
use crate::dataset::{self, published, TypicalityTable, DEFAULT_SUM_TOLERANCE};
use crate::error::Error;
use crate::solver::{self, FeasibilityReport, InterferenceClass, InterferenceSolution};
use crate::wavefield::{self, PhaseField, Point, Resolution, Window, DEFAULT_RESOLUTION};

pub use self::report::{
    Amplitude, ColumnSums, DatasetSummary, ExemplarRow, ModelSummary, SolveReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "concept-interference",
    version,
    about = "Fit and render the two-concept interference model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the model and write a JSON report.
    Solve(SolveArgs),
    /// Render Gaussian interference landscapes as CSV and PGM rasters.
    Render(RenderArgs),
    /// List exemplars by interference effect.
    Classify(ClassifyArgs),
    /// Recompute the residuals of a saved report without re-solving.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Typicality CSV (`exemplar,mu_a,mu_b,mu_ab`).
    pub input: PathBuf,
    /// Allowed deviation of each column sum from 1 before renormalizing.
    #[arg(long, default_value_t = DEFAULT_SUM_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Report path; stdout when omitted.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Output directory.
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
    /// Source centres `x1,y1,x2,y2`.
    #[arg(long, value_parser = parse_list::<4>, default_value = "0,0,10,4")]
    pub centers: [f64; 4],
    /// Pixels per side.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub resolution: usize,
    /// World window `xmin,xmax,ymin,ymax`; defaults to the padded placement box.
    #[arg(long, value_parser = parse_list::<4>, allow_hyphen_values = true)]
    pub window: Option<[f64; 4]>,
    /// Use this phase (degrees) everywhere instead of interpolating.
    #[arg(long, allow_hyphen_values = true)]
    pub phase_constant: Option<f64>,
    /// Intensity display scale.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON report written by `solve`.
    pub report: PathBuf,
}

fn parse_list<const N: usize>(text: &str) -> Result<[f64; N], String> {
    let values: Vec<f64> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("{s:?} is not a number"))
        })
        .collect::<Result<_, _>>()?;
    if values.iter().any(|v| !v.is_finite()) {
        return Err("values must be finite".into());
    }
    values
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", v.len()))
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let thresholds = match Thresholds::from_env() {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: config: {e}");
            return EXIT_ERROR;
        }
    };
    run(cli, &thresholds, out, err)
}

pub fn run(cli: Cli, thresholds: &Thresholds, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Solve(args) => run_solve(&args, thresholds, out, err),
        Command::Render(args) => run_render(&args, out, err),
        Command::Classify(args) => run_classify(&args, out, err),
        Command::Verify(args) => run_verify(&args, thresholds, out, err),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.error);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            code: EXIT_ERROR,
            error,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Error::Io(error).into()
    }
}

/// Outcome of loading, normalizing and solving an input file.
struct Pipeline {
    raw: TypicalityTable<f64>,
    normalized: TypicalityTable<f64>,
    tolerance: f64,
    solved: Result<InterferenceSolution<f64>, Error>,
}

impl Pipeline {
    fn load(input: &InputArgs) -> Result<Self, Failure> {
        let raw: TypicalityTable<f64> = dataset::read_table(&input.input).map_err(|e| match e {
            Error::Io(io) => Error::Io(std::io::Error::new(
                io.kind(),
                format!("{}: {io}", input.input.display()),
            )),
            other => other,
        })?;
        let normalized = dataset::validate_and_normalize(raw.clone(), input.tolerance)?;
        let solved = solver::solve(&normalized);
        Ok(Pipeline {
            raw,
            normalized,
            tolerance: input.tolerance,
            solved,
        })
    }

    fn report(&self) -> SolveReport {
        let (solution, feasibility, diagnostic) = match &self.solved {
            Ok(s) => (Some(s), FeasibilityReport::default(), None),
            Err(Error::Infeasible(report)) => (None, (**report).clone(), None),
            Err(e) => (None, FeasibilityReport::default(), Some(e.to_string())),
        };
        SolveReport::new(
            &self.raw,
            &self.normalized,
            self.tolerance,
            solution,
            feasibility,
            diagnostic,
        )
    }

    /// The solution, or the exit failure for a model-stage error.
    fn solution(&self) -> Result<&InterferenceSolution<f64>, Failure> {
        self.solved.as_ref().map_err(|e| Failure {
            code: model_failure_code(e),
            error: clone_error(e),
        })
    }
}

fn model_failure_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_) | Error::Degenerate(_) => EXIT_INFEASIBLE,
        _ => EXIT_ERROR,
    }
}

fn clone_error(e: &Error) -> Error {
    match e {
        Error::Infeasible(r) => Error::Infeasible(r.clone()),
        Error::Degenerate(s) => Error::Degenerate(s.clone()),
        other => Error::Input(other.to_string()),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| {
        Failure::from(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn run_solve(
    args: &SolveArgs,
    thresholds: &Thresholds,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let pipeline = Pipeline::load(&args.input)?;
    let report = pipeline.report();
    let json = report.to_json();
    match &args.output {
        Some(path) => write_file(path, json.as_bytes())?,
        None => out.write_all(json.as_bytes())?,
    }
    match &pipeline.solved {
        Ok(solution) => {
            let r = &solution.residuals;
            if r.within(
                thresholds.orthogonality,
                thresholds.norm,
                thresholds.reconstruction,
            ) {
                if args.output.is_some() {
                    writeln!(
                        out,
                        "solved: n = {}, m = {} ({}), c_m = {:.4}, |<A|B>| = {:.1e}",
                        solution.rows.len(),
                        solution.m,
                        solution.rows[solution.m - 1].name,
                        solution.c_m,
                        r.orthogonality_modulus
                    )?;
                }
                Ok(EXIT_OK)
            } else {
                writeln!(err, "error: model residuals exceed thresholds: {r:?}")?;
                Ok(EXIT_INFEASIBLE)
            }
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(model_failure_code(e))
        }
    }
}

/// Rows sorted by interference strength relative to its maximum, |cos phi|,
/// strongest first.
fn strength_order(
    solution: &InterferenceSolution<f64>,
    normalized: &TypicalityTable<f64>,
) -> Vec<usize> {
    let strength: Vec<f64> = solution
        .rows
        .iter()
        .zip(normalized.records())
        .map(|(row, r)| (row.deviation / (row.c * (r.mu_a * r.mu_b).sqrt())).abs())
        .collect();
    let mut order: Vec<usize> = (0..strength.len()).collect();
    order.sort_by(|&i, &j| strength[j].total_cmp(&strength[i]).then(i.cmp(&j)));
    order
}

fn run_classify(
    args: &ClassifyArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<i32, Failure> {
    let pipeline = Pipeline::load(&args.input)?;
    let solution = pipeline.solution()?;
    let order = strength_order(solution, &pipeline.normalized);
    let check_published = published::is_fruits_vegetables(&pipeline.normalized);
    let mut notes = Vec::new();
    for class in [
        InterferenceClass::Weakening,
        InterferenceClass::Strengthening,
        InterferenceClass::Classical,
    ] {
        let rows: Vec<_> = order
            .iter()
            .map(|&i| &solution.rows[i])
            .filter(|r| InterferenceClass::from_deviation(r.deviation) == class)
            .collect();
        if rows.is_empty() && class == InterferenceClass::Classical {
            continue;
        }
        writeln!(out, "{} ({})", class.label(), rows.len())?;
        for r in rows {
            let mut marker = "";
            if check_published {
                let listed = published::WEAKENING.contains(&r.name.as_str())
                    || published::STRENGTHENING.contains(&r.name.as_str());
                if !listed {
                    marker = " [*]";
                    notes.push(format!(
                        "[*] {}: missing from both published weakening and strengthening lists; \
                         classified {} from its deviation {:+.4} (phi {:.4} deg)",
                        r.name,
                        class.label(),
                        r.deviation,
                        r.phi_deg
                    ));
                }
            }
            writeln!(
                out,
                "  {:>3}  {:<16} deviation {:+.4}  phi {:>9.4} deg{}",
                r.index, r.name, r.deviation, r.phi_deg, marker
            )?;
        }
    }
    for note in notes {
        writeln!(out, "{note}")?;
    }
    Ok(EXIT_OK)
}

fn run_verify(
    args: &VerifyArgs,
    thresholds: &Thresholds,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&args.report)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", args.report.display())))?;
    let report = SolveReport::from_json(&text)
        .map_err(|e| Error::Input(format!("{}: {e}", args.report.display())))?;
    let Some(model) = &report.model else {
        writeln!(
            err,
            "error: report contains no model: {}",
            report.feasibility
        )?;
        return Ok(EXIT_INFEASIBLE);
    };
    let layout = ProjectorLayout::new(report.exemplars.len(), model.m)?;
    let mu_ab: Vec<f64> = report.exemplars.iter().map(|r| r.mu_ab).collect();
    let recomputed = solver::verify_vectors(
        &report::state_vector(&model.vector_a),
        &report::state_vector(&model.vector_b),
        &layout,
        &mu_ab,
    )?;
    let stored = model.verification;
    let rows = [
        (
            "orthogonality_modulus",
            stored.orthogonality_modulus,
            recomputed.orthogonality_modulus,
        ),
        ("norm_a_error", stored.norm_a_error, recomputed.norm_a_error),
        ("norm_b_error", stored.norm_b_error, recomputed.norm_b_error),
        (
            "max_reconstruction_error",
            stored.max_reconstruction_error,
            recomputed.max_reconstruction_error,
        ),
    ];
    for (name, s, r) in rows {
        writeln!(out, "{name:<26} stored {s:.3e}  recomputed {r:.3e}")?;
    }
    if recomputed != stored {
        writeln!(
            err,
            "error: recomputed residuals differ from the stored ones"
        )?;
        return Ok(EXIT_ERROR);
    }
    if !recomputed.within(
        thresholds.orthogonality,
        thresholds.norm,
        thresholds.reconstruction,
    ) {
        writeln!(err, "error: residuals exceed thresholds")?;
        return Ok(EXIT_INFEASIBLE);
    }
    writeln!(out, "verified")?;
    Ok(EXIT_OK)
}

fn run_render(
    args: &RenderArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<i32, Failure> {
    if args.resolution < 2 {
        return Err(Error::Render(format!(
            "resolution must be at least 2, got {}",
            args.resolution
        ))
        .into());
    }
    let window = args
        .window
        .map(|[x0, x1, y0, y1]| Window::new(x0, x1, y0, y1))
        .transpose()?;
    let pipeline = Pipeline::load(&args.input)?;
    let solution = pipeline.solution()?;
    let [ax, ay, bx, by] = args.centers;
    let fields = wavefield::fit_gaussian_fields(
        &pipeline.normalized,
        Point::new(ax, ay),
        Point::new(bx, by),
        args.scale,
    )?;
    let placements = wavefield::place_exemplars(&pipeline.normalized, &fields);
    let phase = match args.phase_constant {
        Some(deg) => PhaseField::constant(deg),
        None => wavefield::interpolate_phase(&placements, &solution.phases_deg())?,
    };
    let window = window.unwrap_or_else(|| wavefield::default_window(&placements, &fields));
    let grids =
        wavefield::render_grids(&fields, &phase, window, Resolution::square(args.resolution))?;

    std::fs::create_dir_all(&args.output)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", args.output.display())))?;
    for (stem, grid) in grids.named() {
        write_file(
            &args.output.join(format!("{stem}.csv")),
            grid.to_csv().as_bytes(),
        )?;
        write_file(&args.output.join(format!("{stem}.pgm")), &grid.to_pgm())?;
    }
    write_file(
        &args.output.join("placements.csv"),
        placements.to_csv().as_bytes(),
    )?;

    writeln!(
        out,
        "rendered {}x{} over x [{:.3}, {:.3}], y [{:.3}, {:.3}]; sigma_a = {:.4}, sigma_b = {:.4}; phase {}",
        args.resolution,
        args.resolution,
        window.x_min,
        window.x_max,
        window.y_min,
        window.y_max,
        fields.a.sigma,
        fields.b.sigma,
        phase.rule_name()
    )?;
    for p in placements.placements.iter().filter(|p| p.residual > 0.0) {
        writeln!(
            out,
            "  {} ({}) placed off its level curves, residual {:.4}",
            p.index, p.name, p.residual
        )?;
    }
    Ok(EXIT_OK)
}
