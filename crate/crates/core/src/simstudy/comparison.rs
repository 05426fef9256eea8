use serde::{Deserialize, Serialize};

use super::design::{generate_logbinom_sample, SimDesign};
use crate::baseline::{fisher_scoring_logbinom, BaselineResult, FailureReason, FisherOptions};
use crate::diagnostics::relative_bias;
use crate::objectives::LogBinomObjective;
use crate::par::{map_indices, Execution};
use crate::rng::{derive_seed, stream};
use crate::swarm::{run_pso, SwarmConfig};
use crate::{Error, Result};

pub const BASELINE_INIT: [f64; 2] = [-0.1, 0.0];

const BATCH: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicateRecord {
    pub replicate: u64,
    pub baseline_params: Vec<f64>,
    pub baseline_loglik: f64,
    pub pso_params: Vec<f64>,
    pub pso_loglik: f64,
    /// PSO minus baseline log-likelihood.
    pub delta: f64,
    /// `|β̂_pso - β̂_baseline|` per coefficient.
    pub gaps: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudySummary {
    pub mean_delta: f64,
    pub sd_delta: f64,
    pub min_delta: f64,
    pub max_delta: f64,
    /// Fraction of harvested replicates with `delta >= 0`.
    pub dominance_fraction: f64,
    pub mean_abs_gap: Vec<f64>,
    pub pso_relative_bias: Vec<f64>,
    pub baseline_relative_bias: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyReport {
    pub design: SimDesign,
    pub target_nonconvergent: usize,
    pub replicates_examined: usize,
    pub nonconvergent_found: usize,
    /// Replicates whose baseline stopped for a reason other than the
    /// iteration cap (not harvested).
    pub other_failures: usize,
    pub nonconvergence_rate: f64,
    /// Mean maximised baseline log-likelihood over every examined replicate.
    pub mean_baseline_loglik: f64,
    pub incomplete: bool,
    pub records: Vec<ReplicateRecord>,
    pub summary: Option<StudySummary>,
}

/// Generates replicates in index order, fits each with Fisher scoring from
/// [`BASELINE_INIT`], keeps those stopped by the iteration cap until
/// `target_nonconvergent` are found, and refits those with PSO.
///
/// The PSO seed for replicate `r` is derived from `(pso_config.seed, r)`.
pub fn run_comparison_study(
    design: &SimDesign,
    target_nonconvergent: usize,
    pso_config: &SwarmConfig,
    fisher: &FisherOptions,
    exec: Execution,
) -> Result<StudyReport> {
    design.validate()?;
    if pso_config.dimension() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: pso_config.dimension(),
        });
    }
    pso_config.validate()?;

    let mut harvested: Vec<(u64, BaselineResult)> = Vec::new();
    let mut examined = 0usize;
    let mut other_failures = 0usize;
    let mut ll_sum = 0.0;
    'outer: while examined < design.replicates && harvested.len() < target_nonconvergent {
        let start = examined;
        let len = BATCH.min(design.replicates - start);
        let fits = map_indices(exec, len, |k| {
            let r = (start + k) as u64;
            fisher_scoring_logbinom(&generate_logbinom_sample(design, r), &BASELINE_INIT, fisher)
        });
        for (k, fit) in fits.into_iter().enumerate() {
            let fit = fit?;
            examined = start + k + 1;
            ll_sum += fit.objective_value;
            match fit.failure_reason {
                None => {}
                Some(FailureReason::MaxIter) => harvested.push(((start + k) as u64, fit)),
                Some(_) => other_failures += 1,
            }
            if harvested.len() == target_nonconvergent {
                break 'outer;
            }
        }
    }

    // Replicates run concurrently; each swarm runs on its own thread.
    let inner = if exec.is_parallel() { Execution::Sequential } else { pso_config.execution };
    let records = map_indices(exec, harvested.len(), |h| -> Result<ReplicateRecord> {
        let (r, base) = &harvested[h];
        let data = generate_logbinom_sample(design, *r);
        let cfg = pso_config
            .clone()
            .with_seed(derive_seed(pso_config.seed, &[stream::REPLICATE_SEED, *r]))
            .with_execution(inner);
        let fit = run_pso(&LogBinomObjective::new(data), &cfg)?;
        Ok(ReplicateRecord {
            replicate: *r,
            gaps: fit.best_params.iter().zip(&base.params).map(|(a, b)| (a - b).abs()).collect(),
            delta: fit.best_fitness - base.objective_value,
            baseline_params: base.params.clone(),
            baseline_loglik: base.objective_value,
            pso_params: fit.best_params,
            pso_loglik: fit.best_fitness,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let summary = summarize(&records, design.beta_true)?;
    Ok(StudyReport {
        design: design.clone(),
        target_nonconvergent,
        replicates_examined: examined,
        nonconvergent_found: harvested.len(),
        other_failures,
        nonconvergence_rate: if examined == 0 { 0.0 } else { harvested.len() as f64 / examined as f64 },
        mean_baseline_loglik: if examined == 0 { 0.0 } else { ll_sum / examined as f64 },
        incomplete: harvested.len() < target_nonconvergent,
        records,
        summary,
    })
}

fn summarize(records: &[ReplicateRecord], truth: [f64; 2]) -> Result<Option<StudySummary>> {
    if records.is_empty() {
        return Ok(None);
    }
    let n = records.len() as f64;
    let deltas: Vec<f64> = records.iter().map(|r| r.delta).collect();
    let mean_delta = deltas.iter().sum::<f64>() / n;
    let sd_delta = if records.len() > 1 {
        (deltas.iter().map(|d| (d - mean_delta).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let column = |f: &dyn Fn(&ReplicateRecord) -> f64| records.iter().map(f).collect::<Vec<f64>>();
    let mut pso_bias = Vec::new();
    let mut base_bias = Vec::new();
    let mut gaps = Vec::new();
    for (j, &t) in truth.iter().enumerate() {
        pso_bias.push(relative_bias(&column(&|r| r.pso_params[j]), t)?);
        base_bias.push(relative_bias(&column(&|r| r.baseline_params[j]), t)?);
        gaps.push(column(&|r| r.gaps[j]).iter().sum::<f64>() / n);
    }
    Ok(Some(StudySummary {
        mean_delta,
        sd_delta,
        min_delta: deltas.iter().copied().fold(f64::INFINITY, f64::min),
        max_delta: deltas.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        dominance_fraction: deltas.iter().filter(|&&d| d >= 0.0).count() as f64 / n,
        mean_abs_gap: gaps,
        pso_relative_bias: pso_bias,
        baseline_relative_bias: base_bias,
    }))
}
