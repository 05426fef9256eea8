use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::objectives::RegressionData;
use crate::rng::{stream, substream};
use crate::swarm::Interval;
use crate::{Error, Result};

/// Per-sample size at which the mean maximised baseline log-likelihood sits
/// near -164 (see the acceptance suite).
pub const CALIBRATED_N: usize = 480;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimDesign {
    pub beta_true: [f64; 2],
    pub covariate: Interval,
    pub n_per_sample: usize,
    /// Upper limit on generated replicates.
    pub replicates: usize,
    pub seed: u64,
}

impl Default for SimDesign {
    fn default() -> Self {
        Self {
            beta_true: [-2.30259, 0.38376],
            covariate: Interval::new(-6.0, 6.0),
            n_per_sample: 100,
            replicates: 10_000,
            seed: 0,
        }
    }
}

impl SimDesign {
    pub fn calibrated(seed: u64) -> Self {
        Self {
            n_per_sample: CALIBRATED_N,
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let [b0, b1] = self.beta_true;
        let top = (b0 + b1 * self.covariate.lo).max(b0 + b1 * self.covariate.hi);
        if !(top.exp() < 1.0) {
            return Err(Error::Config(format!(
                "true success probability reaches {} on the covariate range",
                top.exp()
            )));
        }
        if !(self.covariate.is_finite() && self.covariate.lo < self.covariate.hi) {
            return Err(Error::Config("covariate range must be a finite interval".into()));
        }
        if self.n_per_sample == 0 {
            return Err(Error::Config("n_per_sample must be positive".into()));
        }
        Ok(())
    }
}

/// Replicate `r`: `x_i ~ U(covariate)`, `y_i ~ Bernoulli(exp(β0 + β1 x_i))`,
/// with design rows `[1, x_i]`.
pub fn generate_logbinom_sample(design: &SimDesign, r: u64) -> RegressionData {
    let mut rng = substream(design.seed, &[stream::SAMPLE, r]);
    let [b0, b1] = design.beta_true;
    let (lo, hi) = (design.covariate.lo, design.covariate.hi);
    let n = design.n_per_sample;
    let mut y = Vec::with_capacity(n);
    let mut x = Vec::with_capacity(2 * n);
    for _ in 0..n {
        let xi = lo + (hi - lo) * rng.random::<f64>();
        let p = (b0 + b1 * xi).exp();
        y.push(if rng.random::<f64>() < p { 1.0 } else { 0.0 });
        x.extend_from_slice(&[1.0, xi]);
    }
    RegressionData::from_flat(y, vec![1.0; n], x, 2)
        .expect("generated sample is valid by construction")
        .with_names(vec!["intercept".into(), "x".into()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truth_is_admissible() {
        SimDesign::default().validate().unwrap();
        let bad = SimDesign {
            beta_true: [-1.0, 0.5],
            ..SimDesign::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn deterministic_per_index() {
        let d = SimDesign::default();
        assert_eq!(generate_logbinom_sample(&d, 7), generate_logbinom_sample(&d, 7));
        assert_ne!(generate_logbinom_sample(&d, 7), generate_logbinom_sample(&d, 8));
    }

    #[test]
    fn mean_probability_matches_closed_form() {
        // E[exp(β0 + β1 X)], X ~ U[-6, 6]
        let d = SimDesign {
            n_per_sample: 1_000_000,
            seed: 11,
            ..SimDesign::default()
        };
        let [b0, b1] = d.beta_true;
        let exact = ((6.0 * b1).exp() - (-6.0 * b1).exp()) * b0.exp() / (12.0 * b1);
        let s = generate_logbinom_sample(&d, 0);
        let ps: Vec<f64> = (0..s.nrows()).map(|i| s.eta(i, &d.beta_true).exp()).collect();
        assert!(ps.iter().all(|&p| p > 0.0 && p < 1.0));
        let n = ps.len() as f64;
        let mean = ps.iter().sum::<f64>() / n;
        let sd = (ps.iter().map(|p| (p - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
        assert!((mean - exact).abs() < 3.0 * sd / n.sqrt(), "{mean} vs {exact}");
    }
}
