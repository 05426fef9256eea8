//! Command-line front end.

mod args;
pub mod reproduce;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::baseline::{brute_force_grid, fisher_scoring_logbinom, nelder_mead, BaselineResult, FisherOptions, NelderMeadOptions};
use crate::data::{load_result, persist_result, resolve, CsvSchema, Dataset, Persist};
use crate::diagnostics::{cdf_fit_distance, cdf_fit_distance_with, ecdf, profile_loglik_grid, FitDistance};
use crate::objectives::{
    check_model_name, Family, LogBinomObjective, Objective, PenalizedLogBinomObjective, RegressionData, UnivariateObjective,
};
use crate::par::Execution;
use crate::simstudy::{convergence_map, cross_validate_rho, run_comparison_study, SimDesign, BASELINE_INIT, CALIBRATED_N};
use crate::swarm::{recast_config, run_pso, BoundPolicy, FitResult, InitOverride, Interval, SwarmConfig};
use crate::{Error, Result};

use reproduce::{DataChoice, ReproduceOptions, TableOutcome};

#[derive(Debug, Parser)]
#[command(name = "swarmfit", version, about = "Maximum likelihood fitting with particle swarms")]
pub struct Cli {
    /// Run every swarm and grid on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a model with PSO.
    Fit(FitArgs),
    /// Re-run PSO initialised around a previous fit.
    Recast(RecastArgs),
    /// Evaluate the log-likelihood on a two-parameter grid.
    Profile(ProfileArgs),
    /// Log-binomial simulation study: baseline non-convergence and PSO refits.
    Simulate(SimulateArgs),
    /// Cross-validate the LASSO weight for penalised log-binomial regression.
    Cv(CvArgs),
    /// Rerun a published table and compare.
    Reproduce(ReproduceArgs),
    /// Compare a fitted CDF with the empirical CDF.
    EcdfFit(EcdfArgs),
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// `builtin:NAME` or a CSV file with a header row.
    #[arg(long)]
    pub data: String,
    /// Column holding the observations (univariate CSV; default: first column).
    #[arg(long)]
    pub column: Option<String>,
    /// Response column (regression CSV).
    #[arg(long)]
    pub response: Option<String>,
    /// Trials column for grouped binomial data.
    #[arg(long)]
    pub trials: Option<String>,
    /// Covariate columns, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub covariates: Vec<String>,
    #[arg(long)]
    pub no_intercept: bool,
}

#[derive(Debug, Args)]
pub struct SwarmArgs {
    #[arg(long)]
    pub swarm: Option<usize>,
    #[arg(long)]
    pub iters: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Initialisation interval for one coordinate: `j=lo:hi` (index or name). Repeatable.
    #[arg(long = "init-box")]
    pub init_box: Vec<String>,
    /// none | full | near-edge
    #[arg(long)]
    pub bound_policy: Option<String>,
    /// global | local:K
    #[arg(long)]
    pub topology: Option<String>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub swarm: SwarmArgs,
    /// LASSO weight (logbinom-lasso).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Also run a classical optimizer: nelder-mead | fisher | grid
    #[arg(long)]
    pub baseline: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecastArgs {
    /// Fit result (JSON) to start from.
    #[arg(long)]
    pub from: PathBuf,
    /// Model; defaults to the one recorded in the input.
    #[arg(long)]
    pub model: Option<String>,
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub swarm: SwarmArgs,
    /// Relative half-width of the initialisation neighbourhood.
    #[arg(long, default_value_t = reproduce::RECAST_WIDTH)]
    pub width: f64,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub data: DataArgs,
    /// Fixed parameter `name=value`. Repeatable.
    #[arg(long)]
    pub fix: Vec<String>,
    /// Grid axis `name=lo:hi:n[:log]`. Exactly two.
    #[arg(long)]
    pub grid: Vec<String>,
    #[arg(long)]
    pub rho: Option<f64>,
    /// `.csv` writes (axis1, axis2, loglik) rows; anything else writes JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Observations per simulated sample.
    #[arg(long, default_value_t = CALIBRATED_N)]
    pub n: usize,
    /// Number of non-convergent samples to harvest.
    #[arg(long, default_value_t = 200)]
    pub target: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_replicates: usize,
    #[arg(long, default_value_t = 200)]
    pub swarm: usize,
    #[arg(long, default_value_t = 1500)]
    pub iters: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the convergent-initial-value map of the first harvested sample (CSV).
    #[arg(long)]
    pub map: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CvArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[arg(long, default_value = "0,0.05,0.1,1,10,100")]
    pub rho_grid: String,
    #[arg(long, default_value_t = 5)]
    pub folds: usize,
    #[command(flatten)]
    pub swarm: SwarmArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// 1, 2, 3, 4 or 7
    #[arg(long)]
    pub table: u8,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Runs per row; the best is reported.
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    /// printed | reference | both (tables 1-4). Defaults to both for tables 1-2 and reference for 3-4.
    #[arg(long)]
    pub dataset: Option<String>,
    /// Directory for `table<N>.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EcdfArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub data: DataArgs,
    /// Parameters, comma separated.
    #[arg(long)]
    pub params: Option<String>,
    /// Take parameters from a fit result instead.
    #[arg(long)]
    pub from: Option<PathBuf>,
    /// Writes `x, ecdf, cdf` rows at the sorted data points.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Outcomes of one `reproduce` invocation.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ReproduceReport {
    pub table: u8,
    pub outcomes: Vec<TableOutcome>,
}

impl Persist for ReproduceReport {
    const KIND: &'static str = "reproduce_report";
}

/// Exit status for an error: 2 for bad input, 1 for failures while running.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownModel { .. } | Error::UnknownDataset { .. } | Error::Config(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command, writing the
/// human-readable report to `out`. Returns the process exit status.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<()> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Fit(a) => cmd_fit(a, exec, out),
        Command::Recast(a) => cmd_recast(a, exec, out),
        Command::Profile(a) => cmd_profile(a, exec, out),
        Command::Simulate(a) => cmd_simulate(a, exec, out),
        Command::Cv(a) => cmd_cv(a, exec, out),
        Command::Reproduce(a) => cmd_reproduce(a, exec, out),
        Command::EcdfFit(a) => cmd_ecdf(a, out),
    }
}

fn schema(d: &DataArgs, regression: bool) -> Result<CsvSchema> {
    if regression {
        let response = d
            .response
            .clone()
            .ok_or_else(|| Error::Config("regression models need --response".into()))?;
        if d.covariates.is_empty() && d.no_intercept {
            return Err(Error::Config("no covariates and no intercept".into()));
        }
        Ok(CsvSchema::Regression {
            response,
            trials: d.trials.clone(),
            covariates: d.covariates.clone(),
            intercept: !d.no_intercept,
        })
    } else {
        Ok(CsvSchema::Univariate { column: d.column.clone() })
    }
}

fn load(d: &DataArgs, regression: bool) -> Result<Dataset> {
    let schema = schema(d, regression)?;
    if !d.data.starts_with("builtin:") && !Path::new(&d.data).exists() {
        return Err(Error::Config(format!("data file `{}` not found", d.data)));
    }
    resolve(&d.data, &schema)
}

fn regression_data(d: &DataArgs) -> Result<RegressionData> {
    Ok(load(d, true)?.regression()?.clone())
}

fn build_objective(model: &str, d: &DataArgs, rho: Option<f64>) -> Result<Box<dyn Objective>> {
    check_model_name(model)?;
    if let Some(r) = rho {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::Config(format!("--rho must be nonnegative, got {r}")));
        }
    }
    Ok(match model {
        "logbinom" => Box::new(LogBinomObjective::new(regression_data(d)?)),
        "logbinom-lasso" => Box::new(PenalizedLogBinomObjective::new(regression_data(d)?, rho.unwrap_or(0.0))),
        name => {
            let family = Family::from_name(name).expect("checked above");
            let data = load(d, false)?;
            Box::new(UnivariateObjective::new(family, data.univariate()?.to_vec()))
        }
    })
}

/// Section defaults: classic PSO with positivity for lifetime models, the
/// `[-3, 3]` box for log-binomial fits, `c1 = 0.5, c2 = 0.3, w = 0.9` for LASSO.
fn default_config(model: &str, obj: &dyn Objective, a: &SwarmArgs) -> Result<SwarmConfig> {
    let init = obj.space().default_init_box.clone();
    let mut cfg = match model {
        "logbinom" => SwarmConfig::new(init, a.swarm.unwrap_or(200), a.iters.unwrap_or(1500), a.seed),
        "logbinom-lasso" => SwarmConfig::lasso(init, a.swarm.unwrap_or(100), a.iters.unwrap_or(300), a.seed),
        _ => SwarmConfig::positive(init, a.swarm.unwrap_or(100), a.iters.unwrap_or(200), a.seed),
    };
    for s in &a.init_box {
        let (j, iv) = args::init_box_entry(s, &obj.space().names)?;
        cfg.init_box[j] = iv;
    }
    apply_policy_and_topology(&mut cfg, a)?;
    cfg.validate()?;
    Ok(cfg)
}

fn apply_policy_and_topology(cfg: &mut SwarmConfig, a: &SwarmArgs) -> Result<()> {
    if let Some(p) = &a.bound_policy {
        let policy = args::bound_policy(p)?;
        if policy == BoundPolicy::RerandomizeFull {
            // full redraws need finite bounds: use the initialisation box
            cfg.bounds = cfg.init_box.iter().zip(&cfg.bounds).map(|(ib, b)| ib.intersect(b)).collect();
        }
        cfg.bound_policy = policy;
    }
    if let Some(t) = &a.topology {
        cfg.topology = args::topology(t)?;
    }
    Ok(())
}

fn print_fit<W: Write>(out: &mut W, fit: &FitResult) -> Result<()> {
    writeln!(out, "model: {}", fit.objective)?;
    for (n, v) in fit.param_names.iter().zip(&fit.best_params) {
        writeln!(out, "  {n:<10} {v:.10e}")?;
    }
    writeln!(out, "log-likelihood: {:.10}", fit.best_fitness)?;
    writeln!(
        out,
        "iterations: {}  evaluations: {}  non-finite: {}",
        fit.iterations_run(),
        fit.evaluations,
        fit.nonfinite_evaluations
    )?;
    Ok(())
}

fn run_baseline(kind: &str, model: &str, obj: &dyn Objective, d: &DataArgs, cfg: &SwarmConfig) -> Result<BaselineResult> {
    match kind {
        "nelder-mead" => {
            let x0: Vec<f64> = cfg.init_box.iter().map(|b| 0.5 * (b.lo + b.hi)).collect();
            Ok(nelder_mead(obj, &x0, &NelderMeadOptions::default()))
        }
        "grid" => brute_force_grid(obj, &cfg.init_box, 21),
        "fisher" => {
            if model != "logbinom" {
                return Err(Error::Config("--baseline fisher applies to the logbinom model only".into()));
            }
            let data = regression_data(d)?;
            let mut init = vec![0.0; data.ncols()];
            init[0] = BASELINE_INIT[0];
            fisher_scoring_logbinom(&data, &init, &FisherOptions::default())
        }
        other => Err(Error::Config(format!("--baseline expects nelder-mead, fisher or grid, got `{other}`"))),
    }
}

fn cmd_fit<W: Write>(a: &FitArgs, exec: Execution, out: &mut W) -> Result<()> {
    let obj = build_objective(&a.model, &a.data, a.rho)?;
    let cfg = default_config(&a.model, obj.as_ref(), &a.swarm)?.with_execution(exec);
    if let Some(b) = &a.baseline {
        if !["nelder-mead", "fisher", "grid"].contains(&b.as_str()) {
            return Err(Error::Config(format!("--baseline expects nelder-mead, fisher or grid, got `{b}`")));
        }
    }
    let fit = run_pso(obj.as_ref(), &cfg)?;
    print_fit(out, &fit)?;
    if let Some(kind) = &a.baseline {
        let r = run_baseline(kind, &a.model, obj.as_ref(), &a.data, &cfg)?;
        writeln!(
            out,
            "baseline {kind}: log-likelihood {:.10} at {:?} (converged: {}, iterations: {}{})",
            r.objective_value,
            r.params,
            r.converged,
            r.iterations,
            r.failure_reason.map_or(String::new(), |f| format!(", {f:?}"))
        )?;
    }
    if let Some(p) = &a.out {
        persist_result(&fit, p)?;
    }
    Ok(())
}

fn cmd_recast<W: Write>(a: &RecastArgs, exec: Execution, out: &mut W) -> Result<()> {
    let prev: FitResult = load_result(&a.from)?;
    let model = a.model.clone().unwrap_or_else(|| prev.objective.clone());
    let obj = build_objective(&model, &a.data, a.rho)?;
    if obj.dimension() != prev.best_params.len() {
        return Err(Error::Config(format!(
            "model `{model}` has {} parameters but the input fit has {}",
            obj.dimension(),
            prev.best_params.len()
        )));
    }
    let mut overrides = Vec::new();
    for s in &a.swarm.init_box {
        let (index, interval) = args::init_box_entry(s, &obj.space().names)?;
        overrides.push(InitOverride { index, interval });
    }
    let mut cfg = recast_config(&prev, a.width, &overrides)?.with_seed(a.swarm.seed).with_execution(exec);
    if let Some(s) = a.swarm.swarm {
        cfg.swarm_size = s;
    }
    if let Some(t) = a.swarm.iters {
        cfg.max_iterations = t;
    }
    apply_policy_and_topology(&mut cfg, &a.swarm)?;
    cfg.validate()?;
    let start = obj.evaluate(&prev.best_params);
    let fit = run_pso(obj.as_ref(), &cfg)?;
    print_fit(out, &fit)?;
    writeln!(out, "input log-likelihood: {start:.10}  change: {:+.3e}", fit.best_fitness - start)?;
    if let Some(p) = &a.out {
        persist_result(&fit, p)?;
    }
    Ok(())
}

fn cmd_profile<W: Write>(a: &ProfileArgs, exec: Execution, out: &mut W) -> Result<()> {
    let obj = build_objective(&a.model, &a.data, a.rho)?;
    let fixed: Vec<(String, f64)> = a.fix.iter().map(|s| args::fixed(s)).collect::<Result<_>>()?;
    if a.grid.len() != 2 {
        return Err(Error::Config(format!("--grid must be given exactly twice, got {}", a.grid.len())));
    }
    let g1 = args::grid_axis(&a.grid[0])?;
    let g2 = args::grid_axis(&a.grid[1])?;
    let grid = profile_loglik_grid(obj.as_ref(), &fixed, (&g1.0, &g1.1), (&g2.0, &g2.1), exec)?;
    let ridge = grid.ridge();
    let flagged = grid.flagged.iter().flatten().filter(|f| **f).count();
    writeln!(out, "grid {} x {} over ({}, {}); {flagged} non-finite cells", g1.1.len(), g2.1.len(), g1.0, g2.0)?;
    if let (Some(best), Some(worst)) = (
        ridge.iter().max_by(|a, b| a.loglik.total_cmp(&b.loglik)),
        ridge.iter().min_by(|a, b| a.loglik.total_cmp(&b.loglik)),
    ) {
        writeln!(
            out,
            "ridge: max {:.8} at ({}, {}), min {:.8}; span {:.3e}",
            best.loglik,
            best.axis1,
            best.axis2,
            worst.loglik,
            best.loglik - worst.loglik
        )?;
    }
    if let Some(p) = &a.out {
        if p.extension().is_some_and(|e| e == "csv") {
            grid.write_csv(std::fs::File::create(p)?)?;
        } else {
            persist_result(&grid, p)?;
        }
    }
    Ok(())
}

fn cmd_simulate<W: Write>(a: &SimulateArgs, exec: Execution, out: &mut W) -> Result<()> {
    let design = SimDesign {
        n_per_sample: a.n,
        replicates: a.max_replicates,
        seed: a.seed,
        ..SimDesign::default()
    };
    design.validate()?;
    let cfg = SwarmConfig::new(vec![Interval::new(-3.0, 3.0); 2], a.swarm, a.iters, a.seed);
    cfg.validate()?;
    let report = run_comparison_study(&design, a.target, &cfg, &FisherOptions::default(), exec)?;
    writeln!(
        out,
        "examined {} samples (n = {}); {} non-convergent ({:.1}%); mean baseline log-likelihood {:.3}{}",
        report.replicates_examined,
        a.n,
        report.nonconvergent_found,
        100.0 * report.nonconvergence_rate,
        report.mean_baseline_loglik,
        if report.incomplete { "; target NOT reached" } else { "" }
    )?;
    if let Some(s) = &report.summary {
        writeln!(
            out,
            "PSO - baseline log-likelihood: mean {:.4}, sd {:.4}, min {:.4}, max {:.4}; PSO >= baseline on {:.1}%",
            s.mean_delta,
            s.sd_delta,
            s.min_delta,
            s.max_delta,
            100.0 * s.dominance_fraction
        )?;
        writeln!(
            out,
            "relative bias (%): PSO ({:.2}, {:.2}), baseline ({:.2}, {:.2}); mean |gap| ({:.4}, {:.4})",
            s.pso_relative_bias[0],
            s.pso_relative_bias[1],
            s.baseline_relative_bias[0],
            s.baseline_relative_bias[1],
            s.mean_abs_gap[0],
            s.mean_abs_gap[1]
        )?;
    }
    if let (Some(path), Some(first)) = (&a.map, report.records.first()) {
        let data = crate::simstudy::generate_logbinom_sample(&design, first.replicate);
        let axis: Vec<f64> = (0..61).map(|i| -3.0 + 0.1 * i as f64).collect();
        let map = convergence_map(&data, &axis, &axis, &FisherOptions::default(), exec)?;
        map.write_csv(std::fs::File::create(path)?)?;
    }
    if let Some(p) = &a.out {
        persist_result(&report, p)?;
    }
    Ok(())
}

fn cmd_cv<W: Write>(a: &CvArgs, exec: Execution, out: &mut W) -> Result<()> {
    let data = regression_data(&a.data)?;
    let grid = args::number_list(&a.rho_grid, "--rho-grid")?;
    let obj = PenalizedLogBinomObjective::new(data.clone(), 0.0);
    let cfg = default_config("logbinom-lasso", &obj, &a.swarm)?.with_execution(exec);
    let report = cross_validate_rho(&data, &grid, a.folds, &cfg, a.swarm.seed)?;
    for (rho, loss) in report.rho_grid.iter().zip(&report.losses) {
        writeln!(out, "rho {rho:<8} held-out NLL {loss:.6}")?;
    }
    if !report.excluded_folds.is_empty() {
        writeln!(out, "excluded folds (single class): {:?}", report.excluded_folds)?;
    }
    writeln!(out, "selected rho: {}", report.best_rho)?;
    if let Some(p) = &a.out {
        persist_result(&report, p)?;
    }
    Ok(())
}

fn cmd_reproduce<W: Write>(a: &ReproduceArgs, exec: Execution, out: &mut W) -> Result<()> {
    if !reproduce::TABLES.contains(&a.table) {
        return Err(Error::Config(format!("unknown table {}; valid: 1, 2, 3, 4, 7", a.table)));
    }
    if a.runs == 0 {
        return Err(Error::Config("--runs must be at least 1".into()));
    }
    let default = if a.table <= 2 { "both" } else { "reference" };
    let choice = a.dataset.as_deref().unwrap_or(default);
    let data = DataChoice::parse(choice)
        .ok_or_else(|| Error::Config(format!("--dataset expects printed, reference or both, got `{choice}`")))?;
    let mut opts = ReproduceOptions::new(a.seed, a.runs);
    opts.execution = exec;
    let outcomes = reproduce::run_table(a.table, &data, &opts)?;
    for o in &outcomes {
        write!(out, "{}", o.render())?;
    }
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir)?;
        let report = ReproduceReport {
            table: a.table,
            outcomes,
        };
        persist_result(&report, dir.join(format!("table{}.json", a.table)))?;
    }
    Ok(())
}

fn cmd_ecdf<W: Write>(a: &EcdfArgs, out: &mut W) -> Result<()> {
    check_model_name(&a.model)?;
    let family = Family::from_name(&a.model)
        .ok_or_else(|| Error::Config(format!("ecdf-fit needs a lifetime model, got `{}`", a.model)))?;
    let params = match (&a.params, &a.from) {
        (Some(p), None) => args::number_list(p, "--params")?,
        (None, Some(f)) => load_result::<FitResult>(f)?.best_params,
        _ => return Err(Error::Config("give exactly one of --params or --from".into())),
    };
    if params.len() != family.space().dimension() {
        return Err(Error::Config(format!(
            "{} takes {} parameters, got {}",
            family,
            family.space().dimension(),
            params.len()
        )));
    }
    let data = load(&a.data, false)?;
    let x = data.univariate()?;
    family.cdf(&params, x[0])?;
    let cdf = |v: f64| family.cdf(&params, v).unwrap_or(f64::NAN);
    let ks = cdf_fit_distance(x, cdf)?;
    let cvm = cdf_fit_distance_with(FitDistance::CramerVonMises, x, cdf)?;
    writeln!(out, "{} on {} (n = {})", family, data.name, x.len())?;
    writeln!(out, "log-likelihood: {:.6}", family.loglik(&params, x)?)?;
    writeln!(out, "Kolmogorov-Smirnov distance: {ks:.6}")?;
    writeln!(out, "Cramer-von Mises statistic: {cvm:.6}")?;
    if let Some(p) = &a.out {
        let e = ecdf(x)?;
        let mut w = csv::Writer::from_path(p)?;
        w.write_record(["x", "ecdf", "cdf"])?;
        for (v, h) in e.steps() {
            w.write_record([v.to_string(), h.to_string(), cdf(v).to_string()])?;
        }
        w.flush()?;
    }
    Ok(())
}
