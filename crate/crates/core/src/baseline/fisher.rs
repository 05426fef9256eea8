use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::{BaselineResult, FailureReason};
use crate::objectives::{loglik_logbinom, RegressionData};
use crate::objectives::special::ln_choose;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceRule {
    /// `max_j |β_j(new) - β_j(old)| < tol`.
    ParameterChange,
    /// `|D(new) - D(old)| / (|D(new)| + 0.1) < tol`, with `D` the deviance.
    #[default]
    RelativeDeviance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FisherOptions {
    pub max_iter: usize,
    pub tol: f64,
    pub rule: ConvergenceRule,
    /// Cap on step halvings used to pull a step back inside `x'β < 0`.
    pub max_halvings: usize,
}

impl Default for FisherOptions {
    fn default() -> Self {
        Self {
            max_iter: 25,
            tol: 1e-8,
            rule: ConvergenceRule::RelativeDeviance,
            max_halvings: 32,
        }
    }
}

/// Fisher scoring for the log-binomial model with step-halving.
pub fn fisher_scoring_logbinom(
    data: &RegressionData,
    init: &[f64],
    opts: &FisherOptions,
) -> Result<BaselineResult> {
    fisher_scoring_logbinom_observed(data, init, opts, |_| {})
}

/// As [`fisher_scoring_logbinom`], calling `observe` on every accepted
/// iterate (the initial point included).
pub fn fisher_scoring_logbinom_observed(
    data: &RegressionData,
    init: &[f64],
    opts: &FisherOptions,
    mut observe: impl FnMut(&[f64]),
) -> Result<BaselineResult> {
    let p = data.ncols();
    if init.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            actual: init.len(),
        });
    }
    let mut beta = init.to_vec();
    if !strictly_admissible(data, &beta) {
        let ll = loglik_logbinom(&beta, data)?;
        return Ok(BaselineResult::failure(beta, ll, 0, FailureReason::InadmissibleStep));
    }
    observe(&beta);
    let sat = saturated_loglik(data);
    let mut ll = loglik_logbinom(&beta, data)?;
    let mut dev = 2.0 * (sat - ll);

    for iter in 1..=opts.max_iter {
        let (score, info) = score_and_information(data, &beta);
        let Some(step) = solve(info, score) else {
            return Ok(BaselineResult::failure(beta, ll, iter - 1, FailureReason::SingularInformation));
        };
        let mut scale = 1.0;
        let mut candidate: Vec<f64> = beta.iter().zip(step.iter()).map(|(b, s)| b + s).collect();
        let mut halvings = 0;
        while !strictly_admissible(data, &candidate) {
            if halvings == opts.max_halvings {
                return Ok(BaselineResult::failure(beta, ll, iter, FailureReason::InadmissibleStep));
            }
            halvings += 1;
            scale *= 0.5;
            candidate = beta.iter().zip(step.iter()).map(|(b, s)| b + scale * s).collect();
        }
        let new_ll = loglik_logbinom(&candidate, data)?;
        let new_dev = 2.0 * (sat - new_ll);
        let done = match opts.rule {
            ConvergenceRule::ParameterChange => {
                candidate.iter().zip(&beta).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max) < opts.tol
            }
            ConvergenceRule::RelativeDeviance => (new_dev - dev).abs() / (new_dev.abs() + 0.1) < opts.tol,
        };
        beta = candidate;
        ll = new_ll;
        dev = new_dev;
        observe(&beta);
        if done {
            return Ok(BaselineResult::success(beta, ll, iter));
        }
    }
    Ok(BaselineResult::failure(beta, ll, opts.max_iter, FailureReason::MaxIter))
}

fn strictly_admissible(data: &RegressionData, beta: &[f64]) -> bool {
    (0..data.nrows()).all(|i| data.eta(i, beta) < 0.0)
}

fn saturated_loglik(data: &RegressionData) -> f64 {
    let xlogx = |a: f64, b: f64| if a > 0.0 { a * (a / b).ln() } else { 0.0 };
    data.y()
        .iter()
        .zip(data.trials())
        .map(|(&y, &n)| ln_choose(n, y) + xlogx(y, n) + xlogx(n - y, n))
        .sum()
}

/// Score `Σ x_i (y_i - n_i μ_i) / (1 - μ_i)` and expected information
/// `Σ x_i x_i' n_i μ_i / (1 - μ_i)` with `μ_i = exp(x_i'β)`.
fn score_and_information(data: &RegressionData, beta: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
    let p = data.ncols();
    let mut score = DVector::zeros(p);
    let mut info = DMatrix::zeros(p, p);
    for i in 0..data.nrows() {
        let x = data.row(i);
        let mu = data.eta(i, beta).exp();
        let (y, n) = (data.y()[i], data.trials()[i]);
        let r = (y - n * mu) / (1.0 - mu);
        let w = n * mu / (1.0 - mu);
        for a in 0..p {
            score[a] += x[a] * r;
            for b in 0..=a {
                info[(a, b)] += w * x[a] * x[b];
            }
        }
    }
    for a in 0..p {
        for b in 0..a {
            info[(b, a)] = info[(a, b)];
        }
    }
    (score, info)
}

/// Reciprocal condition number below which the information is treated as singular.
// A 1e-11 rank tolerance on the square-root-weighted design, squared. Near the
// boundary a single huge weight makes the information badly conditioned
// without making it singular; iterating on is what glm-style solvers do.
const SINGULAR_RCOND: f64 = 1e-22;

fn solve(info: DMatrix<f64>, score: DVector<f64>) -> Option<DVector<f64>> {
    if info.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let eig = info.clone().symmetric_eigen().eigenvalues;
    let (lo, hi) = eig.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &v| (lo.min(v), hi.max(v.abs())));
    if !(lo > hi * SINGULAR_RCOND) {
        return None;
    }
    let step = info.cholesky()?.solve(&score);
    step.iter().all(|v| v.is_finite()).then_some(step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::{nelder_mead, NelderMeadOptions};
    use crate::objectives::LogBinomObjective;

    fn toy() -> RegressionData {
        let x = [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, -2.5, 0.5, 1.5];
        let y = [0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0];
        RegressionData::binary(y.to_vec(), x.iter().map(|&v| vec![1.0, v]).collect()).unwrap()
    }

    #[test]
    fn agrees_with_simplex_on_interior_optimum() {
        let data = toy();
        let r = fisher_scoring_logbinom(&data, &[-1.0, 0.0], &FisherOptions::default()).unwrap();
        assert!(r.converged, "{r:?}");
        let nm = nelder_mead(&LogBinomObjective::new(data), &[-1.0, 0.0], &NelderMeadOptions::default());
        assert!((r.objective_value - nm.objective_value).abs() < 1e-7, "{} vs {}", r.objective_value, nm.objective_value);
    }

    #[test]
    fn iterates_stay_admissible() {
        let data = toy();
        let mut path = Vec::new();
        fisher_scoring_logbinom_observed(&data, &[-0.1, 0.0], &FisherOptions::default(), |b| path.push(b.to_vec())).unwrap();
        assert!(!path.is_empty());
        for b in &path {
            assert!(strictly_admissible(&data, b), "{b:?}");
        }
    }

    #[test]
    fn inadmissible_start() {
        let r = fisher_scoring_logbinom(&toy(), &[0.5, 0.0], &FisherOptions::default()).unwrap();
        assert_eq!(r.failure_reason, Some(FailureReason::InadmissibleStep));
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn collinear_design_is_singular() {
        let rows = (0..6).map(|i| vec![1.0, -(i as f64), -2.0 * i as f64]).collect();
        let data = RegressionData::binary(vec![0.0, 1.0, 0.0, 1.0, 0.0, 0.0], rows).unwrap();
        let r = fisher_scoring_logbinom(&data, &[-1.0, 0.0, 0.0], &FisherOptions::default()).unwrap();
        assert_eq!(r.failure_reason, Some(FailureReason::SingularInformation));
    }

    #[test]
    fn saturated_vanishes_for_binary() {
        assert_eq!(saturated_loglik(&toy()), 0.0);
    }
}
