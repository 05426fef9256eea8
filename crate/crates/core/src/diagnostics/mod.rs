//! Identifiability and goodness-of-fit instruments.

mod divergence;
mod ecdf;
mod profile;
mod se;

pub use divergence::{
    detect_divergence, Classification, DivergenceReport, ParameterTrend, RecastSequence,
    DEFAULT_FITNESS_FLAT_THRESHOLD, DEFAULT_REL_CHANGE_THRESHOLD,
};
pub use ecdf::{cdf_fit_distance, cdf_fit_distance_with, ecdf, Ecdf, FitDistance};
pub use profile::{log_grid, profile_loglik_grid, ProfileGrid, RidgePoint};
pub use se::{numerical_se, StandardErrors, DEFAULT_SE_STEP};

use crate::{Error, Result};

/// Average relative bias in percent: `100 · mean((θ̂_r - θ) / θ)`.
pub fn relative_bias(estimates: &[f64], truth: f64) -> Result<f64> {
    if truth == 0.0 || !truth.is_finite() {
        return Err(Error::Domain(format!("relative bias needs a finite nonzero truth, got {truth}")));
    }
    if estimates.is_empty() {
        return Err(Error::Domain("relative bias of an empty estimate set".into()));
    }
    let mean = estimates.iter().map(|e| (e - truth) / truth).sum::<f64>() / estimates.len() as f64;
    Ok(100.0 * mean)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bias_examples() {
        assert_eq!(relative_bias(&[2.0, 2.0], 2.0).unwrap(), 0.0);
        let b = relative_bias(&[-1.1 * 2.3, -1.1 * 2.3, -1.1 * 2.3], -2.3).unwrap();
        assert!((b - 10.0).abs() < 1e-12);
        assert!(relative_bias(&[1.0], 0.0).is_err());
        assert!(relative_bias(&[], 1.0).is_err());
    }
}
