//! Classical optimizers: comparators for the swarm and oracles for tests.

mod fisher;
mod grid;
mod nelder_mead;

use serde::{Deserialize, Serialize};

pub use fisher::{
    fisher_scoring_logbinom, fisher_scoring_logbinom_observed, ConvergenceRule, FisherOptions,
};
pub use grid::{brute_force_grid, MAX_GRID_DIMENSION};
pub use nelder_mead::{minimize_nelder_mead, nelder_mead, nelder_mead_multistart, NelderMeadOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    MaxIter,
    InadmissibleStep,
    SingularInformation,
    NonfiniteObjective,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineResult {
    pub params: Vec<f64>,
    pub objective_value: f64,
    pub converged: bool,
    pub iterations: usize,
    pub failure_reason: Option<FailureReason>,
}

impl BaselineResult {
    pub(crate) fn success(params: Vec<f64>, objective_value: f64, iterations: usize) -> Self {
        Self {
            params,
            objective_value,
            converged: true,
            iterations,
            failure_reason: None,
        }
    }

    pub(crate) fn failure(params: Vec<f64>, objective_value: f64, iterations: usize, reason: FailureReason) -> Self {
        Self {
            params,
            objective_value,
            converged: false,
            iterations,
            failure_reason: Some(reason),
        }
    }
}
