use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::baseline::{fisher_scoring_logbinom, FailureReason, FisherOptions};
use crate::objectives::RegressionData;
use crate::par::{map_indices, Execution};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitState {
    Converged,
    NonConverged,
    /// Some fitted probability is at least one at the starting point.
    Inadmissible,
}

/// Outcome of Fisher scoring from each point of a `(β0, β1)` lattice;
/// `states[i][j]` belongs to `(beta0[i], beta1[j])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceMap {
    pub beta0: Vec<f64>,
    pub beta1: Vec<f64>,
    pub states: Vec<Vec<InitState>>,
}

pub fn convergence_map(
    data: &RegressionData,
    beta0: &[f64],
    beta1: &[f64],
    opts: &FisherOptions,
    exec: Execution,
) -> Result<ConvergenceMap> {
    let n1 = beta1.len();
    let flat = map_indices(exec, beta0.len() * n1, |k| {
        let init = [beta0[k / n1], beta1[k % n1]];
        let admissible = (0..data.nrows()).all(|i| data.eta(i, &init) < 0.0);
        if !admissible {
            return Ok(InitState::Inadmissible);
        }
        let r = fisher_scoring_logbinom(data, &init, opts)?;
        Ok(match (r.converged, r.failure_reason) {
            (true, _) => InitState::Converged,
            (false, Some(FailureReason::InadmissibleStep)) if r.iterations == 0 => InitState::Inadmissible,
            _ => InitState::NonConverged,
        })
    });
    let flat: Vec<InitState> = flat.into_iter().collect::<Result<_>>()?;
    Ok(ConvergenceMap {
        beta0: beta0.to_vec(),
        beta1: beta1.to_vec(),
        states: if n1 == 0 { Vec::new() } else { flat.chunks(n1).map(<[InitState]>::to_vec).collect() },
    })
}

impl ConvergenceMap {
    pub fn count(&self, state: InitState) -> usize {
        self.states.iter().flatten().filter(|&&s| s == state).count()
    }

    /// Writes `beta0,beta1,state` triples.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["beta0", "beta1", "state"])?;
        for (i, b0) in self.beta0.iter().enumerate() {
            for (j, b1) in self.beta1.iter().enumerate() {
                let s = match self.states[i][j] {
                    InitState::Converged => "converged",
                    InitState::NonConverged => "non_converged",
                    InitState::Inadmissible => "inadmissible",
                };
                out.write_record([b0.to_string(), b1.to_string(), s.to_string()])?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simstudy::{generate_logbinom_sample, SimDesign};

    #[test]
    fn states_respect_constraint_geometry() {
        let d = SimDesign { n_per_sample: 200, seed: 3, ..SimDesign::default() };
        let data = generate_logbinom_sample(&d, 0);
        let g0: Vec<f64> = (0..13).map(|i| -3.0 + 0.5 * i as f64).collect();
        let g1: Vec<f64> = (0..13).map(|i| -3.0 + 0.5 * i as f64).collect();
        let m = convergence_map(&data, &g0, &g1, &FisherOptions::default(), Execution::Sequential).unwrap();
        for (i, &b0) in g0.iter().enumerate() {
            for (j, &b1) in g1.iter().enumerate() {
                let admissible = (0..data.nrows()).all(|r| data.eta(r, &[b0, b1]) < 0.0);
                assert_eq!(m.states[i][j] == InitState::Inadmissible, !admissible, "({b0}, {b1})");
            }
        }
        assert!(m.count(InitState::Inadmissible) > 0);
        let mut buf = Vec::new();
        m.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1 + 169);
    }
}
