//! Scripted protocols that rerun the published fitting tables.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::baseline::{nelder_mead_multistart, NelderMeadOptions};
use crate::data::{parse_csv, reference, Builtin, CsvSchema};
use crate::diagnostics::{
    cdf_fit_distance, detect_divergence, DivergenceReport, RecastSequence, DEFAULT_FITNESS_FLAT_THRESHOLD,
    DEFAULT_REL_CHANGE_THRESHOLD,
};
use crate::objectives::{eeiw_cdf, Family, Objective, UnivariateObjective};
use crate::par::Execution;
use crate::swarm::{recast_config, run_pso, BoundPolicy, FitResult, InitOverride, Interval, SwarmConfig};
use crate::{Error, Result};

pub const TABLES: [u8; 5] = [1, 2, 3, 4, 7];

/// Width of the recast initialisation neighbourhood.
pub const RECAST_WIDTH: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct ReproduceOptions {
    /// Every row is run once per seed and the best fit kept.
    pub seeds: Vec<u64>,
    pub execution: Execution,
}

impl ReproduceOptions {
    pub fn new(base_seed: u64, runs: usize) -> Self {
        Self {
            seeds: (0..runs as u64).map(|r| base_seed.wrapping_add(r)).collect(),
            execution: Execution::default(),
        }
    }
}

/// Which glass-fibre / aluminium vector a protocol runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DataChoice {
    /// The vectors exactly as listed in the supplement.
    Printed,
    /// The full-length reference fixtures.
    Reference,
}

impl DataChoice {
    pub fn parse(s: &str) -> Option<Vec<DataChoice>> {
        match s {
            "printed" => Some(vec![DataChoice::Printed]),
            "reference" => Some(vec![DataChoice::Reference]),
            "both" => Some(vec![DataChoice::Printed, DataChoice::Reference]),
            _ => None,
        }
    }
}

pub fn glass_fibers(choice: DataChoice) -> (String, Vec<f64>) {
    match choice {
        DataChoice::Printed => ("glass_fibers (printed)".into(), Builtin::GlassFibers.values().to_vec()),
        DataChoice::Reference => ("glass_fibers_63 (reference)".into(), fixture(reference::GLASS_FIBERS_63_CSV)),
    }
}

pub fn aluminum_coupons(choice: DataChoice) -> (String, Vec<f64>) {
    match choice {
        DataChoice::Printed => ("aluminum_coupons (printed)".into(), Builtin::AluminumCoupons.values().to_vec()),
        DataChoice::Reference => ("aluminum_coupons_101 (reference)".into(), fixture(reference::ALUMINUM_COUPONS_101_CSV)),
    }
}

fn fixture(text: &str) -> Vec<f64> {
    parse_csv(text.as_bytes(), "fixture", &CsvSchema::univariate())
        .and_then(|d| d.univariate().map(<[f64]>::to_vec))
        .expect("bundled fixture parses")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub label: String,
    pub swarm: usize,
    pub iterations: usize,
    pub published_loglik: Option<f64>,
    pub params: Vec<f64>,
    pub loglik: f64,
    pub best_seed: u64,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOutcome {
    pub table: u8,
    pub model: String,
    pub dataset: String,
    pub n: usize,
    pub param_names: Vec<String>,
    pub rows: Vec<RowOutcome>,
    pub checks: Vec<Check>,
    pub divergence: Option<DivergenceReport>,
}

impl TableOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut s = format!("Table {} | {} | {} (n={})\n", self.table, self.model, self.dataset, self.n);
        s += &format!("  {:<22} {:>6} {:>6} {:>16} {:>16}  params ({})\n", "row", "swarm", "iters", "published LL", "obtained LL", self.param_names.join(", "));
        for r in &self.rows {
            let published_ll = r.published_loglik.map_or("-".to_string(), |v| format!("{v:.8}"));
            let params: Vec<String> = r.params.iter().map(|p| format!("{p:.6e}")).collect();
            s += &format!(
                "  {:<22} {:>6} {:>6} {:>16} {:>16.8}  [{}]  ({:.1}s)\n",
                r.label, r.swarm, r.iterations, published_ll, r.loglik, params.join(", "), r.seconds
            );
        }
        for c in &self.checks {
            s += &format!("  [{}] {}: {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        s
    }
}

/// Runs `config` once per seed and keeps the best fit.
pub fn best_of<O: Objective + ?Sized>(objective: &O, config: &SwarmConfig, opts: &ReproduceOptions) -> Result<(FitResult, u64, f64)> {
    let start = Instant::now();
    let mut best: Option<(FitResult, u64)> = None;
    for &seed in &opts.seeds {
        let cfg = config.clone().with_seed(seed).with_execution(opts.execution);
        let fit = run_pso(objective, &cfg)?;
        if best.as_ref().is_none_or(|(b, _)| fit.best_fitness > b.best_fitness) {
            best = Some((fit, seed));
        }
    }
    let (fit, seed) = best.ok_or_else(|| Error::Config("at least one seed is required".into()))?;
    Ok((fit, seed, start.elapsed().as_secs_f64()))
}

fn row(label: &str, published_ll: Option<f64>, fit: &FitResult, seed: u64, seconds: f64) -> RowOutcome {
    RowOutcome {
        label: label.to_string(),
        swarm: fit.config.swarm_size,
        iterations: fit.config.max_iterations,
        published_loglik: published_ll,
        params: fit.best_params.clone(),
        loglik: fit.best_fitness,
        best_seed: seed,
        seconds,
    }
}

/// Log-likelihood at published parameters: tells which data vector the
/// published numbers were computed on.
fn data_identity_check(family: Family, data: &[f64], params: &[f64], published_ll: f64) -> Check {
    let ll = family.loglik(params, data).unwrap_or(f64::NAN);
    Check::new(
        "data reproduces published fit",
        (ll - published_ll).abs() < 1e-2,
        format!("LL at published estimates {ll:.7} vs published {published_ll:.7}"),
    )
}

fn threshold_check(name: &str, got: f64, threshold: f64, published_ll: f64) -> Check {
    Check::new(name, got >= threshold, format!("{got:.8} >= {threshold} (published {published_ll})"))
}

/// Weibull-exponential rows with their published swarm sizes and iteration counts.
pub fn table1(choice: DataChoice, opts: &ReproduceOptions) -> Result<TableOutcome> {
    let (name, x) = glass_fibers(choice);
    let obj = UnivariateObjective::new(Family::We, x.clone());
    let rows_spec = [(100, 200, -14.4020744), (50, 200, -14.4020746), (100, 100, -14.4020771), (50, 150, -14.4020745)];
    let mut rows = Vec::new();
    let mut checks = vec![data_identity_check(Family::We, &x, &[0.014742, 2.87936, 1.01793], -14.4020744)];
    for (i, &(swarm, iters, published_ll)) in rows_spec.iter().enumerate() {
        let cfg = SwarmConfig::positive(Family::We.space().default_init_box, swarm, iters, 0);
        let (fit, seed, secs) = best_of(&obj, &cfg, opts)?;
        if i == 0 {
            checks.push(threshold_check("loglik (100 x 200)", fit.best_fitness, -14.4021, published_ll));
            let target = [0.0147, 2.879, 1.018];
            let worst = fit.best_params.iter().zip(&target).map(|(p, t)| ((p - t) / t).abs()).fold(0.0, f64::max);
            checks.push(Check::new(
                "parameters within 2%",
                worst <= 0.02,
                format!("max relative deviation from (0.0147, 2.879, 1.018): {:.3}%", 100.0 * worst),
            ));
            checks.push(Check::new("runtime < 10 s", secs < 10.0, format!("{secs:.2} s for {} runs", opts.seeds.len())));
        }
        rows.push(row(&format!("PSO {swarm}x{iters}"), Some(published_ll), &fit, seed, secs));
    }
    Ok(TableOutcome {
        table: 1,
        model: "we".into(),
        dataset: name,
        n: x.len(),
        param_names: obj.space().names.clone(),
        rows,
        checks,
        divergence: None,
    })
}

/// Exponentiated Weibull and exponentiated exponential, 1000 particles x 1500 iterations.
pub fn table2(choice: DataChoice, opts: &ReproduceOptions) -> Result<Vec<TableOutcome>> {
    let (name, x) = glass_fibers(choice);
    let specs = [
        (Family::Ew, -14.6755222, -14.6756, vec![0.671243, 7.28459, 0.58203]),
        (Family::Ee, -31.38347214, -31.3835, vec![31.3489, 2.61157]),
    ];
    let mut out = Vec::new();
    for (family, published_ll, threshold, published) in specs {
        let obj = UnivariateObjective::new(family, x.clone());
        let cfg = SwarmConfig::positive(family.space().default_init_box, 1000, 1500, 0);
        let (fit, seed, secs) = best_of(&obj, &cfg, opts)?;
        let checks = vec![
            data_identity_check(family, &x, &published, published_ll),
            threshold_check("loglik (1000 x 1500)", fit.best_fitness, threshold, published_ll),
            Check::new("runtime < 60 s", secs < 60.0, format!("{secs:.2} s for {} runs", opts.seeds.len())),
        ];
        out.push(TableOutcome {
            table: 2,
            model: family.as_str().into(),
            dataset: name.clone(),
            n: x.len(),
            param_names: obj.space().names.clone(),
            rows: vec![row("PSO 1000x1500", Some(published_ll), &fit, seed, secs)],
            checks,
            divergence: None,
        });
    }
    Ok(out)
}

/// Initial bounded run followed by recast runs. `last_overrides` (if any)
/// replace the initialisation of chosen coordinates in the final recast.
fn recast_protocol(
    family: Family,
    x: &[f64],
    first_box: Vec<Interval>,
    recasts: usize,
    last_overrides: &[InitOverride],
    published_rows: &[f64],
    opts: &ReproduceOptions,
) -> Result<(Vec<RowOutcome>, Vec<FitResult>)> {
    let obj = UnivariateObjective::new(family, x.to_vec());
    let first = SwarmConfig::positive(first_box.clone(), 1000, 2000, 0)
        .with_bounds(first_box, BoundPolicy::near_edge_default());
    let (mut fit, seed, secs) = best_of(&obj, &first, opts)?;
    let mut rows = vec![row("PSO 1000x2000", published_rows.first().copied(), &fit, seed, secs)];
    let mut fits = vec![fit.clone()];
    for r in 0..recasts {
        let overrides = if r + 1 == recasts { last_overrides } else { &[] };
        // Redrawing a stray coordinate into U[0, 0.5] throws small shape
        // estimates (k ~ 1e-3) far off the ridge; recasts rely on the penalty.
        let mut cfg = recast_config(&fit, RECAST_WIDTH, overrides)?;
        cfg.bound_policy = BoundPolicy::NoneWithPenalty;
        let (next, seed, secs) = best_of(&obj, &cfg, opts)?;
        let label = if overrides.is_empty() { "PSO (recast)" } else { "PSO (recast, skip-ahead)" };
        rows.push(row(label, published_rows.get(r + 1).copied(), &next, seed, secs));
        fits.push(next.clone());
        fit = next;
    }
    Ok((rows, fits))
}

fn burr_outcome(
    table: u8,
    family: Family,
    choice: DataChoice,
    first_box: Vec<Interval>,
    recasts: usize,
    overrides: &[InitOverride],
    published_rows: &[f64],
    published_final: &[f64],
    threshold: f64,
    expected_divergent: &[&str],
    opts: &ReproduceOptions,
) -> Result<TableOutcome> {
    let (name, x) = aluminum_coupons(choice);
    let final_ll = *published_rows.last().expect("published rows");
    let mut checks = vec![data_identity_check(family, &x, published_final, final_ll)];
    let (rows, fits) = recast_protocol(family, &x, first_box.clone(), recasts, overrides, published_rows, opts)?;
    let last = fits.last().expect("at least one run");
    checks.push(threshold_check("final loglik", last.best_fitness, threshold, final_ll));

    let seq = RecastSequence::from_fits(&fits)?;
    let report = detect_divergence(&seq, DEFAULT_REL_CHANGE_THRESHOLD, DEFAULT_FITNESS_FLAT_THRESHOLD)?;
    let mut found = report.divergent();
    found.sort_unstable();
    let mut want = expected_divergent.to_vec();
    want.sort_unstable();
    checks.push(Check::new(
        "divergent parameters",
        found == want,
        format!("found {{{}}}, expected {{{}}}", found.join(", "), want.join(", ")),
    ));

    let obj = UnivariateObjective::new(family, x.clone());
    let nm = nelder_mead_multistart(&obj, &first_box, 20, opts.seeds[0], &NelderMeadOptions::default());
    let nm_ll = nm.as_ref().map_or(f64::NEG_INFINITY, |r| r.objective_value);
    checks.push(Check::new(
        "PSO beats Nelder-Mead (best of 20 starts)",
        last.best_fitness > nm_ll,
        format!("PSO {:.8} vs Nelder-Mead {nm_ll:.8}", last.best_fitness),
    ));
    Ok(TableOutcome {
        table,
        model: family.as_str().into(),
        dataset: name,
        n: x.len(),
        param_names: obj.space().names.clone(),
        rows,
        checks,
        divergence: Some(report),
    })
}

/// Weibull-Burr XII: a bounded first run and three recasts.
pub fn table3(choice: DataChoice, opts: &ReproduceOptions) -> Result<TableOutcome> {
    burr_outcome(
        3,
        Family::Wbxii,
        choice,
        Family::Wbxii.space().default_init_box,
        3,
        &[],
        &[-455.09719, -455.09113, -455.09099, -455.09099],
        &[106321.7, 0.8653, 145.26, 2.98e-6, 10.455],
        -455.0911,
        &["alpha", "k"],
        opts,
    )
}

/// Beta-Burr XII: a first run over `[0, 400]^5`, four recasts, and a final
/// recast that restarts `beta` in `U[50, 100]` and `k` in `U[0, 0.05]`.
pub fn table4(choice: DataChoice, opts: &ReproduceOptions) -> Result<TableOutcome> {
    let overrides = [
        InitOverride { index: 1, interval: Interval::new(50.0, 100.0) },
        InitOverride { index: 3, interval: Interval::new(0.0, 0.05) },
    ];
    burr_outcome(
        4,
        Family::Bbxii,
        choice,
        vec![Interval::new(0.0, 400.0); 5],
        5,
        &overrides,
        &[-455.34831, -455.104862, -455.104859, -455.104858, -455.104858, -455.104857],
        &[0.9268, 88.661, 141.583, 0.01613, 9.887],
        -455.1049,
        &["beta", "k"],
        opts,
    )
}

/// Published PSO and "Reported" rows for the three lifetime datasets.
pub struct EeiwSpec {
    pub builtin: Builtin,
    pub published_loglik: f64,
    pub threshold: f64,
    pub published_params: [f64; 3],
    pub reported_params: [f64; 3],
}

pub const EEIW_SPECS: [EeiwSpec; 4] = [
    EeiwSpec { builtin: Builtin::Covid19, published_loglik: 95.371, threshold: 95.37, published_params: [1.232, 293.441, 0.271], reported_params: [1.573, 5.431, 0.040] },
    EeiwSpec { builtin: Builtin::CarbonFibers, published_loglik: -141.889, threshold: -141.89, published_params: [0.410, 657.059, 9.969], reported_params: [6.146, 0.108, 0.021] },
    EeiwSpec { builtin: Builtin::BallBearings, published_loglik: -113.461, threshold: -113.47, published_params: [0.694, 16.537, 57.825], reported_params: [3.951, 0.0641, 2.303] },
    EeiwSpec { builtin: Builtin::BallBearingsCorrected, published_loglik: -113.461, threshold: -113.47, published_params: [0.694, 16.537, 57.825], reported_params: [3.951, 0.0641, 2.303] },
];

/// EE-IW fits (1000 particles x 1000 iterations) with the ECDF comparison.
pub fn table7(opts: &ReproduceOptions) -> Result<Vec<TableOutcome>> {
    let mut out = Vec::new();
    for spec in &EEIW_SPECS {
        let x = spec.builtin.values().to_vec();
        let obj = UnivariateObjective::new(Family::Eeiw, x.clone());
        let cfg = SwarmConfig::positive(Family::Eeiw.space().default_init_box, 1000, 1000, 0);
        let (fit, seed, secs) = best_of(&obj, &cfg, opts)?;
        let ks = |p: &[f64]| cdf_fit_distance(&x, |v| eeiw_cdf(v, p[0], p[1], p[2]).unwrap_or(f64::NAN));
        let ks_pso = ks(&fit.best_params)?;
        let ks_rep = ks(&spec.reported_params)?;
        let checks = vec![
            threshold_check("loglik (1000 x 1000)", fit.best_fitness, spec.threshold, spec.published_loglik),
            Check::new(
                "within 0.01 of published optimum",
                (fit.best_fitness - spec.published_loglik).abs() < 0.01,
                format!("|{:.4} - ({})| < 0.01", fit.best_fitness, spec.published_loglik),
            ),
            Check::new("KS(PSO) < KS(reported)", ks_pso < ks_rep, format!("{ks_pso:.5} vs {ks_rep:.5}")),
        ];
        out.push(TableOutcome {
            table: 7,
            model: "eeiw".into(),
            dataset: spec.builtin.name().into(),
            n: x.len(),
            param_names: obj.space().names.clone(),
            rows: vec![row("PSO 1000x1000", Some(spec.published_loglik), &fit, seed, secs)],
            checks,
            divergence: None,
        });
    }
    Ok(out)
}

pub fn run_table(table: u8, data: &[DataChoice], opts: &ReproduceOptions) -> Result<Vec<TableOutcome>> {
    let mut out = Vec::new();
    match table {
        1 => {
            for &d in data {
                out.push(table1(d, opts)?);
            }
        }
        2 => {
            for &d in data {
                out.extend(table2(d, opts)?);
            }
        }
        3 => {
            for &d in data {
                out.push(table3(d, opts)?);
            }
        }
        4 => {
            for &d in data {
                out.push(table4(d, opts)?);
            }
        }
        7 => out.extend(table7(opts)?),
        _ => return Err(Error::Config(format!("unknown table {table}; valid: 1, 2, 3, 4, 7"))),
    }
    Ok(out)
}
