use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::objectives::{penalized_logbinom, PenalizedLogBinomObjective, RegressionData};
use crate::rng::{stream, substream};
use crate::swarm::{run_pso, SwarmConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvReport {
    pub rho_grid: Vec<f64>,
    /// Mean held-out negative log-likelihood per `ρ` over the usable folds.
    /// Infinite losses are reported as `f64::MAX`.
    pub losses: Vec<f64>,
    /// `fold_losses[k][f]`: loss of `rho_grid[k]` on usable fold `f`.
    pub fold_losses: Vec<Vec<f64>>,
    /// Folds whose held-out part contains a single response class.
    pub excluded_folds: Vec<usize>,
    pub best_rho: f64,
}

/// Fold label for each of `n` rows: a seeded shuffle dealt round-robin.
pub fn fold_assignment(n: usize, folds: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut substream(seed, &[stream::FOLDS]));
    let mut label = vec![0; n];
    for (pos, &row) in order.iter().enumerate() {
        label[row] = pos % folds;
    }
    label
}

/// K-fold cross-validation of the LASSO weight. Each training part is fitted
/// with PSO on the penalised objective and scored by the unpenalised negative
/// log-likelihood of its held-out part. Ties go to the larger `ρ`.
pub fn cross_validate_rho(
    data: &RegressionData,
    rho_grid: &[f64],
    folds: usize,
    pso_config: &SwarmConfig,
    seed: u64,
) -> Result<CvReport> {
    if folds < 2 || folds > data.nrows() {
        return Err(Error::Config(format!("folds must lie in [2, {}], got {folds}", data.nrows())));
    }
    if rho_grid.is_empty() || rho_grid.iter().any(|r| !(*r >= 0.0 && r.is_finite())) {
        return Err(Error::Config("rho grid must be nonempty, finite and nonnegative".into()));
    }
    let labels = fold_assignment(data.nrows(), folds, seed);
    let mut usable = Vec::new();
    let mut excluded_folds = Vec::new();
    for f in 0..folds {
        let test: Vec<usize> = (0..data.nrows()).filter(|&i| labels[i] == f).collect();
        let train: Vec<usize> = (0..data.nrows()).filter(|&i| labels[i] != f).collect();
        let test = data.subset(&test);
        let single_class = test.y().iter().all(|&y| y == 0.0) || test.y().iter().zip(test.trials()).all(|(y, n)| y == n);
        if single_class {
            log::warn!("fold {f} holds out a single response class; excluded");
            excluded_folds.push(f);
        } else {
            usable.push((data.subset(&train), test));
        }
    }
    if usable.is_empty() {
        return Err(Error::Domain("every fold holds out a single response class".into()));
    }

    let mut fold_losses = Vec::with_capacity(rho_grid.len());
    for &rho in rho_grid {
        let mut row = Vec::with_capacity(usable.len());
        for (train, test) in &usable {
            let fit = run_pso(&PenalizedLogBinomObjective::new(train.clone(), rho), pso_config)?;
            row.push(penalized_logbinom(&fit.best_params, test, 0.0)?);
        }
        fold_losses.push(row);
    }
    let losses: Vec<f64> = fold_losses
        .iter()
        .map(|row| {
            let m = row.iter().sum::<f64>() / row.len() as f64;
            if m.is_finite() {
                m
            } else {
                f64::MAX
            }
        })
        .collect();
    for row in &mut fold_losses {
        for v in row.iter_mut().filter(|v| !v.is_finite()) {
            *v = f64::MAX;
        }
    }
    let mut best = 0;
    for k in 1..rho_grid.len() {
        let better = losses[k] < losses[best] || (losses[k] == losses[best] && rho_grid[k] > rho_grid[best]);
        if better {
            best = k;
        }
    }
    Ok(CvReport {
        rho_grid: rho_grid.to_vec(),
        losses,
        fold_losses,
        excluded_folds,
        best_rho: rho_grid[best],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swarm::Interval;

    #[test]
    fn folds_partition_rows() {
        let labels = fold_assignment(23, 5, 9);
        let mut counts = [0; 5];
        for &l in &labels {
            counts[l] += 1;
        }
        assert_eq!(counts.iter().sum::<usize>(), 23);
        assert!(counts.iter().all(|&c| c == 4 || c == 5));
        assert_eq!(labels, fold_assignment(23, 5, 9));
    }

    fn toy() -> RegressionData {
        let rows: Vec<Vec<f64>> = (0..20).map(|i| vec![1.0, (i % 5) as f64 - 2.0]).collect();
        let y = (0..20).map(|i| if i % 3 == 0 { 1.0 } else { 0.0 }).collect();
        RegressionData::binary(y, rows).unwrap()
    }

    #[test]
    fn singleton_grid() {
        let cfg = SwarmConfig::lasso(vec![Interval::new(-1.0, 1.0); 2], 20, 30, 1);
        let r = cross_validate_rho(&toy(), &[0.0], 4, &cfg, 2).unwrap();
        assert_eq!(r.best_rho, 0.0);
        assert_eq!(r.losses.len(), 1);
    }

    #[test]
    fn bad_folds() {
        let cfg = SwarmConfig::lasso(vec![Interval::new(-1.0, 1.0); 2], 20, 30, 1);
        assert!(cross_validate_rho(&toy(), &[0.0], 1, &cfg, 2).is_err());
    }
}
