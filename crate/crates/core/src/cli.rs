//! The `disc-analysis` command line: JSON in, one JSON report out.
//!
//! Exit codes: `0` pass or feasible, `1` a negative mathematical verdict,
//! `2` invalid input or usage, `3` numerical failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::carleson::{self, BlaschkeProduct, PushforwardMeasure};
use crate::error::{Error, Result};
use crate::geometry::{DiscMap, HolomorphicDisc, C64};
use crate::pick::{self, PickProblem, TargetDomain};
use crate::polynomial::BallPolynomial;
use crate::quadrature::{self, DiscGrid, SphereSampler};
use crate::sequences::{self, AnyDisc, DiscThroughS, PointSequence};

pub const DEFAULT_DELTA_GRID: [f64; 4] = [0.05, 0.1, 0.2, 0.4];
pub const DEFAULT_ZETA_SAMPLES: usize = 16;
pub const DEFAULT_SEQ_ZETA_SAMPLES: usize = 64;
pub const DEFAULT_MC_SAMPLES: usize = 20_000;
pub const DEFAULT_CANDIDATES: usize = 20_000;

#[derive(Debug, Parser)]
#[command(name = "disc-analysis", version, about = "Analytic discs in the unit ball: Pick interpolation, Carleson boxes, separated sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Group,
    #[command(flatten)]
    pub config: RunConfig,
}

/// Flags shared by every command. Unset grids fall back to module defaults.
#[derive(Debug, Clone, Args, Serialize)]
pub struct RunConfig {
    /// Main JSON input (problem, polynomial or sequence)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = pick::DEFAULT_PSD_TOLERANCE)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 2.0)]
    pub p: f64,
    /// Comma-separated box sizes
    #[arg(long, global = true, value_delimiter = ',')]
    pub delta_grid: Option<Vec<f64>>,
    #[arg(long, global = true)]
    pub zeta_samples: Option<usize>,
    #[arg(long, global = true)]
    pub grid_radial: Option<usize>,
    #[arg(long, global = true)]
    pub grid_angular: Option<usize>,
    #[arg(long, global = true)]
    pub mc_samples: Option<usize>,
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true)]
    pub delta: Option<f64>,
    #[arg(long, global = true)]
    pub radius: Option<f64>,
    /// Candidate count for nets
    #[arg(long, global = true)]
    pub candidates: Option<usize>,
    /// Polynomial disc JSON
    #[arg(long, global = true)]
    pub disc: Option<PathBuf>,
    /// Polynomial on the ball JSON
    #[arg(long, global = true)]
    pub f: Option<PathBuf>,
    /// Disc nodes JSON, a list of [re, im]
    #[arg(long, global = true)]
    pub sigma: Option<PathBuf>,
    /// Zeros of a Blaschke product JSON, a list of [re, im]
    #[arg(long, global = true)]
    pub blaschke: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// Pick matrices and scalar interpolation
    #[command(subcommand)]
    Pick(PickCommand),
    /// Pushforward measures of discs
    #[command(subcommand)]
    Carleson(CarlesonCommand),
    /// Point sequences in the ball
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Hardy norms on the sphere
    #[command(subcommand)]
    Hardy(HardyCommand),
}

#[derive(Debug, Subcommand)]
pub enum PickCommand {
    /// Feasibility of a Pick problem (--input)
    Check,
    /// Schur solution of a scalar problem (--input)
    SolveScalar,
}

#[derive(Debug, Subcommand)]
pub enum CarlesonCommand {
    /// Box masses of the pushforward of --disc over ζ samples and --delta-grid
    Scan,
    /// Ratio of the disc integral of |f∘φ|^p to ‖f‖^p for --disc and --f
    Subordination,
    /// Harmonic indicator, slice measure, Schwarz decay and inner moments
    Lemmas,
}

#[derive(Debug, Subcommand)]
pub enum SeqCommand {
    /// Greedy net with --delta, --radius, --candidates, --seed
    Net,
    /// Separation, admissible counts and weighted norms of --input
    Analyze,
    /// Trace residuals and necessary conditions for --disc, --sigma, --input
    DiscCheck,
}

#[derive(Debug, Subcommand)]
pub enum HardyCommand {
    /// ‖f‖ in H^p of the ball for --f
    Norm,
}

/// The single JSON document every command produces.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub passed: bool,
    pub verdict: String,
    pub scalars: BTreeMap<String, f64>,
    pub tables: BTreeMap<String, Value>,
    pub version: &'static str,
}

impl Report {
    fn new(command: &str, config: &RunConfig) -> Self {
        Self {
            command: command.to_string(),
            config: config.clone(),
            passed: true,
            verdict: String::new(),
            scalars: BTreeMap::new(),
            tables: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    fn scalar(&mut self, name: &str, v: f64) {
        self.scalars.insert(name.to_string(), v);
    }

    fn table<T: Serialize>(&mut self, name: &str, v: &T) -> Result<()> {
        self.tables.insert(name.to_string(), serde_json::to_value(v)?);
        Ok(())
    }

    fn verdict(&mut self, passed: bool, text: &str) {
        self.passed = passed;
        self.verdict = text.to_string();
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(report) => match emit(&report, cli.config.output.as_deref()) {
            Ok(()) => i32::from(!report.passed),
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(report: &Report, output: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs the parsed command without touching stdout.
pub fn execute(cli: &Cli) -> Result<Report> {
    let cfg = &cli.config;
    if !(cfg.tol > 0.0) {
        return Err(Error::Parameter(format!("--tol must be positive, got {}", cfg.tol)));
    }
    match &cli.command {
        Group::Pick(PickCommand::Check) => pick_check(cfg),
        Group::Pick(PickCommand::SolveScalar) => pick_solve(cfg),
        Group::Carleson(CarlesonCommand::Scan) => carleson_scan(cfg),
        Group::Carleson(CarlesonCommand::Subordination) => carleson_subordination(cfg),
        Group::Carleson(CarlesonCommand::Lemmas) => carleson_lemmas(cfg),
        Group::Seq(SeqCommand::Net) => seq_net(cfg),
        Group::Seq(SeqCommand::Analyze) => seq_analyze(cfg),
        Group::Seq(SeqCommand::DiscCheck) => seq_disc_check(cfg),
        Group::Hardy(HardyCommand::Norm) => hardy_norm(cfg),
    }
}

fn read_json<T: DeserializeOwned>(path: Option<&Path>, flag: &str) -> Result<T> {
    let path = path.ok_or_else(|| Error::Parameter(format!("{flag} is required")))?;
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn disc_grid(cfg: &RunConfig, radial: usize, angular: usize) -> Result<DiscGrid> {
    DiscGrid::new(cfg.grid_radial.unwrap_or(radial), cfg.grid_angular.unwrap_or(angular))
}

fn sphere_sampler(cfg: &RunConfig, dimension: usize) -> Result<SphereSampler> {
    if dimension == 2 && cfg.mc_samples.is_none() {
        SphereSampler::product_rule(
            cfg.grid_radial.unwrap_or(quadrature::DEFAULT_SPHERE_RADIAL),
            cfg.grid_angular.unwrap_or(quadrature::DEFAULT_SPHERE_ANGULAR),
        )
    } else {
        SphereSampler::monte_carlo(dimension, cfg.mc_samples.unwrap_or(DEFAULT_MC_SAMPLES), cfg.seed)
    }
}

fn pick_check(cfg: &RunConfig) -> Result<Report> {
    let problem: PickProblem = read_json(cfg.input.as_deref(), "--input")?;
    let mut report = Report::new("pick check", cfg);
    let verdicts = pick::check_feasibility(&problem, cfg.tol)?;
    let feasible = verdicts.iter().all(|v| v.feasible);
    let min_eig = verdicts.iter().map(|v| v.min_eigenvalue).fold(f64::INFINITY, f64::min);
    report.scalar("min_eigenvalue", min_eig);
    report.table("verdicts", &verdicts)?;
    if problem.target_domain() == TargetDomain::Ball {
        let pick_matrix = pick::build_pick_matrix(&problem)?;
        report.table("pick_matrix", &pick_matrix.rows())?;
        if problem.targets().iter().all(|v| v.norm() <= 1.0 + pick::TARGET_SLACK) {
            let norm = pick::representation_norm(problem.nodes(), problem.targets())?;
            report.scalar("representation_norm", norm);
        }
    }
    report.verdict(feasible, if feasible { "feasible" } else { "infeasible" });
    Ok(report)
}

fn pick_solve(cfg: &RunConfig) -> Result<Report> {
    let problem: PickProblem = read_json(cfg.input.as_deref(), "--input")?;
    let mut report = Report::new("pick solve-scalar", cfg);
    let f = match pick::scalar_np_solve(&problem) {
        Ok(f) => f,
        Err(Error::Infeasible { min_eigenvalue }) => {
            report.scalar("min_eigenvalue", min_eigenvalue);
            report.verdict(false, "infeasible");
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let check = pick::verify_interpolant(&f, &problem);
    report.scalar("degree", f.degree() as f64);
    report.scalar("max_residual", check.max_residual);
    report.scalar("boundary_sup", check.boundary_sup);
    report.table("stages", &f.stages())?;
    report.table("terminal", &f.terminal())?;
    report.table("residuals", &check.residuals)?;
    report.verdict(check.passed, if check.passed { "interpolant verified" } else { "interpolant check failed" });
    Ok(report)
}

fn carleson_scan(cfg: &RunConfig) -> Result<Report> {
    let phi: DiscMap = read_json(cfg.disc.as_deref(), "--disc")?;
    let grid = disc_grid(cfg, carleson::BOX_GRID_RADIAL, carleson::BOX_GRID_ANGULAR)?;
    let mu = PushforwardMeasure::new(phi, &grid)?;
    let zetas = quadrature::boundary_samples(
        mu.map().dimension(),
        cfg.zeta_samples.unwrap_or(DEFAULT_ZETA_SAMPLES),
        cfg.seed,
    )?;
    let deltas = cfg.delta_grid.clone().unwrap_or_else(|| DEFAULT_DELTA_GRID.to_vec());
    let scan = carleson::carleson_scan(&mu, &zetas, &deltas)?;
    let mut report = Report::new("carleson scan", cfg);
    report.scalar("sup_ratio_delta_n", scan.sup_ratio_delta_n);
    report.scalar("sup_ratio_delta_sq", scan.sup_ratio_delta_sq);
    report.scalar("predicted_bound_delta_n", scan.predicted_bound_delta_n);
    report.scalar("total_mass", scan.total_mass);
    report.scalar("annulus_violations", scan.annulus_violations as f64);
    let within = scan.sup_ratio_delta_n <= scan.predicted_bound_delta_n * 1.1;
    report.table("scan", &scan)?;
    if scan.origin_fixed {
        let ok = within && scan.annulus_violations == 0;
        report.verdict(ok, if ok { "box masses within the predicted bound" } else { "box mass exceeds the predicted bound" });
    } else {
        report.verdict(true, "φ(0) ≠ 0: masses reported without a predicted bound");
    }
    Ok(report)
}

fn carleson_subordination(cfg: &RunConfig) -> Result<Report> {
    let phi: DiscMap = read_json(cfg.disc.as_deref(), "--disc")?;
    let f: BallPolynomial = read_json(cfg.f.as_deref(), "--f")?;
    let grid = disc_grid(cfg, quadrature::DEFAULT_RADIAL, quadrature::DEFAULT_ANGULAR)?;
    let sampler = sphere_sampler(cfg, phi.dimension())?;
    let r = carleson::subordination_ratio(&f, &phi, cfg.p, &grid, &sampler)?;
    let mut report = Report::new("carleson subordination", cfg);
    report.scalar("ratio", r.ratio);
    report.scalar("disc_integral", r.disc_integral);
    report.scalar("hardy_norm", r.hardy_norm);
    let finite = r.ratio.is_finite();
    report.verdict(finite, if finite { "finite ratio" } else { "ratio is not finite" });
    Ok(report)
}

fn carleson_lemmas(cfg: &RunConfig) -> Result<Report> {
    let delta = cfg.delta.unwrap_or(0.1);
    let mut report = Report::new("carleson lemmas", cfg);
    let mut passed = true;

    let half = carleson::harmonic_indicator_halfplane(0.0, delta, delta)?;
    report.scalar("halfplane_indicator_at_height_delta", half);
    let centre = carleson::harmonic_indicator_disc(C64::new(0.0, 0.0), delta)?;
    let inner = carleson::harmonic_indicator_disc(C64::new(1.0 - delta, 0.0), delta)?;
    report.scalar("disc_indicator_at_center", centre);
    report.scalar("disc_indicator_at_1_minus_delta", inner);
    passed &= inner >= std::f64::consts::FRAC_PI_4 - 1e-12;

    if let Some(path) = cfg.disc.as_deref() {
        let phi: DiscMap = read_json(Some(path), "--disc")?;
        let first = phi.coordinate(0)?;
        if first.fixes_origin() {
            let slice = carleson::boundary_slice_measure(&first, 1.0 - delta / 2.0, delta)?;
            passed &= slice.within_bound;
            report.table("slice_measure", &slice)?;
        }
        if phi.fixes_origin() {
            let f = match cfg.f.as_deref() {
                Some(p) => read_json(Some(p), "--f")?,
                None => BallPolynomial::monomial(&unit_powers(phi.dimension())),
            };
            let grid = disc_grid(cfg, quadrature::DEFAULT_RADIAL, quadrature::DEFAULT_ANGULAR)?;
            let sampler = sphere_sampler(cfg, phi.dimension())?;
            let mut rows = Vec::new();
            for k in 1..=8 {
                let r = carleson::schwarz_decay_check(&f, &phi, k, cfg.p, &grid, &sampler, cfg.seed)?;
                passed &= r.schwarz_holds && r.decay_holds;
                rows.push(r);
            }
            report.table("schwarz_decay", &rows)?;
        }
    }

    if let Some(path) = cfg.blaschke.as_deref() {
        let zeros: Vec<C64> = read_json(Some(path), "--blaschke")?;
        let b = BlaschkeProduct::new(zeros)?;
        let moments = (0..=4)
            .map(|j| carleson::inner_pushforward_moments(&b, j))
            .collect::<Result<Vec<_>>>()?;
        passed &= (moments[0] - C64::new(1.0, 0.0)).norm() <= 1e-6;
        passed &= moments[1..].iter().all(|m| m.norm() <= 1e-3);
        report.table("inner_moments", &moments)?;
    }
    report.verdict(passed, if passed { "all lemma checks hold" } else { "a lemma check failed" });
    Ok(report)
}

fn unit_powers(n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[0] = 1;
    v
}

fn seq_net(cfg: &RunConfig) -> Result<Report> {
    let delta = cfg.delta.ok_or_else(|| Error::Parameter("--delta is required".into()))?;
    let radius = cfg.radius.ok_or_else(|| Error::Parameter("--radius is required".into()))?;
    let candidates = sequences::net_candidates(radius, cfg.candidates.unwrap_or(DEFAULT_CANDIDATES), cfg.seed)?;
    let net = sequences::greedy_select(&candidates, delta)?;
    let check = sequences::verify_net(&net, &candidates, delta)?;
    let mut report = Report::new("seq net", cfg);
    report.scalar("size", net.len() as f64);
    report.scalar("min_separation", check.min_separation);
    report.scalar("covering_radius", check.covering_radius);
    report.table("net", &net)?;
    let ok = check.separated && check.maximal;
    report.verdict(ok, if ok { "separated and maximal" } else { "net check failed" });
    Ok(report)
}

fn seq_analyze(cfg: &RunConfig) -> Result<Report> {
    let seq: PointSequence = read_json(cfg.input.as_deref(), "--input")?;
    let alpha = cfg.alpha.ok_or_else(|| Error::Parameter("--alpha is required".into()))?;
    let zetas = quadrature::boundary_samples(
        seq.dimension(),
        cfg.zeta_samples.unwrap_or(DEFAULT_SEQ_ZETA_SAMPLES),
        cfg.seed,
    )?;
    let counts = sequences::admissible_counts(&seq, &zetas, alpha)?;
    let ones = vec![C64::new(1.0, 0.0); seq.len()];
    let n = seq.dimension() as f64;
    let mut report = Report::new("seq analyze", cfg);
    report.scalar("size", seq.len() as f64);
    if seq.len() >= 2 {
        report.scalar("min_separation", sequences::min_separation(&seq)?);
    }
    report.scalar("hardy_weighted_norm_of_ones", sequences::weighted_seq_norm(&ones, seq.points(), cfg.p, n)?);
    report.scalar("min_admissible_count", counts.iter().copied().min().unwrap_or(0) as f64);
    report.table("admissible_counts", &counts)?;
    report.verdict(true, "measurements only");
    Ok(report)
}

fn seq_disc_check(cfg: &RunConfig) -> Result<Report> {
    let phi: DiscMap = read_json(cfg.disc.as_deref(), "--disc")?;
    let sigma: Vec<C64> = read_json(cfg.sigma.as_deref(), "--sigma")?;
    let seq: PointSequence = read_json(cfg.input.as_deref(), "--input")?;
    let mut report = Report::new("seq disc-check", cfg);
    let residuals = sequences::disc_trace_residuals(&phi, &sigma, &seq)?;
    report.scalar("max_residual", residuals.max_residual);
    report.table("residuals", &residuals.residuals)?;
    if !residuals.passed {
        report.verdict(false, "the disc does not pass through the sequence");
        return Ok(report);
    }
    let d = DiscThroughS::new(sigma, AnyDisc::Polynomial(phi), seq)?;
    let ones = vec![C64::new(1.0, 0.0); d.sigma().len()];
    let check = sequences::necessary_condition_check(&d, &ones, cfg.p)?;
    report.scalar("norm_gap", check.norm_gap);
    report.table("necessary_conditions", &check)?;
    report.verdict(check.passed, if check.passed { "necessary conditions hold" } else { "a necessary condition fails" });
    Ok(report)
}

fn hardy_norm(cfg: &RunConfig) -> Result<Report> {
    let f: BallPolynomial = read_json(cfg.f.as_deref().or(cfg.input.as_deref()), "--f")?;
    let sampler = sphere_sampler(cfg, f.dimension())?;
    let norm = quadrature::hardy_norm(&f, cfg.p, &sampler)?;
    let mut report = Report::new("hardy norm", cfg);
    report.scalar("norm", norm.value);
    report.table("radial_means", &norm.radial_means)?;
    report.table("sampler", &json!({ "dimension": sampler.dimension(), "mode": sampler.mode() }))?;
    report.verdict(norm.monotone_in_r, if norm.monotone_in_r { "means nondecreasing in r" } else { "means not monotone in r" });
    Ok(report)
}
