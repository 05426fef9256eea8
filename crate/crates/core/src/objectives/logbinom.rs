//! Log-binomial regression likelihoods.

use serde::{Deserialize, Serialize};

use super::special::ln_choose;
use super::{Objective, ParamSpace};
use crate::{Error, Result};

/// Response, trials and design matrix (intercept column included by the
/// caller) for binomial regression. Rows are stored contiguously.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionData {
    y: Vec<f64>,
    trials: Vec<f64>,
    design: Vec<f64>,
    ncols: usize,
    #[serde(default)]
    covariate_names: Vec<String>,
}

impl RegressionData {
    /// Binary responses with the given design rows.
    pub fn binary(y: Vec<f64>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = y.len();
        Self::new(y, vec![1.0; n], rows)
    }

    pub fn new(y: Vec<f64>, trials: Vec<f64>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut design = Vec::with_capacity(rows.len() * ncols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::Domain(format!(
                    "design row {i} has {} columns, expected {ncols}",
                    r.len()
                )));
            }
            design.extend_from_slice(r);
        }
        Self::from_flat(y, trials, design, ncols)
    }

    pub fn from_flat(y: Vec<f64>, trials: Vec<f64>, design: Vec<f64>, ncols: usize) -> Result<Self> {
        if ncols == 0 || y.is_empty() {
            return Err(Error::Domain("regression data needs at least one row and one column".into()));
        }
        if design.len() != y.len() * ncols || trials.len() != y.len() {
            return Err(Error::DimensionMismatch {
                expected: y.len() * ncols,
                actual: design.len(),
            });
        }
        for (i, (&yi, &ni)) in y.iter().zip(&trials).enumerate() {
            if !(ni >= 1.0 && ni.fract() == 0.0 && ni.is_finite()) {
                return Err(Error::Domain(format!("row {i}: trials must be a positive integer, got {ni}")));
            }
            if !(yi >= 0.0 && yi <= ni && yi.fract() == 0.0) {
                return Err(Error::Domain(format!("row {i}: response {yi} must be an integer in [0, {ni}]")));
            }
        }
        if let Some(i) = design.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("row {}: non-finite covariate", i / ncols)));
        }
        Ok(Self {
            y,
            trials,
            design,
            ncols,
            covariate_names: Vec::new(),
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.covariate_names = names;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.covariate_names
    }

    pub fn nrows(&self) -> usize {
        self.y.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn trials(&self) -> &[f64] {
        &self.trials
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.design[i * self.ncols..(i + 1) * self.ncols]
    }

    /// Linear predictor `x_i' β`.
    #[inline]
    pub fn eta(&self, i: usize, beta: &[f64]) -> f64 {
        self.row(i).iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    /// Rows `idx` as a new dataset.
    pub fn subset(&self, idx: &[usize]) -> Self {
        let mut design = Vec::with_capacity(idx.len() * self.ncols);
        for &i in idx {
            design.extend_from_slice(self.row(i));
        }
        Self {
            y: idx.iter().map(|&i| self.y[i]).collect(),
            trials: idx.iter().map(|&i| self.trials[i]).collect(),
            design,
            ncols: self.ncols,
            covariate_names: self.covariate_names.clone(),
        }
    }

    pub fn is_binary(&self) -> bool {
        self.trials.iter().all(|&n| n == 1.0)
    }
}

fn check_dim(beta: &[f64], data: &RegressionData) -> Result<()> {
    if beta.len() != data.ncols {
        return Err(Error::DimensionMismatch {
            expected: data.ncols,
            actual: beta.len(),
        });
    }
    Ok(())
}

/// Log-binomial log-likelihood
/// `Σ [ln C(n_i, y_i) + y_i x_i'β + (n_i - y_i) ln(1 - exp(x_i'β))]`.
///
/// The binomial coefficient vanishes for binary data, leaving
/// `Σ [y_i x_i'β + (1 - y_i) ln(1 - exp(x_i'β))]`. Any row whose fitted
/// probability exceeds one, or equals one while a failure was observed, makes
/// the result `-∞`.
pub fn loglik_logbinom(beta: &[f64], data: &RegressionData) -> Result<f64> {
    check_dim(beta, data)?;
    let mut ll = 0.0;
    for i in 0..data.nrows() {
        let eta = data.eta(i, beta);
        let (y, n) = (data.y[i], data.trials[i]);
        if eta > 0.0 || eta.is_nan() {
            return Ok(f64::NEG_INFINITY);
        }
        ll += y * eta;
        if n > y {
            ll += (n - y) * (-eta.exp()).ln_1p() + ln_choose(n, y);
        }
    }
    Ok(ll)
}

/// LASSO-penalised log-binomial objective (to be minimised):
/// `-l(β) + ρ ‖β‖₁` with `log p_i = min(x_i'β, 0)`.
pub fn penalized_logbinom(beta: &[f64], data: &RegressionData, rho: f64) -> Result<f64> {
    check_dim(beta, data)?;
    if !(rho >= 0.0) {
        return Err(Error::Domain(format!("rho must be nonnegative, got {rho}")));
    }
    let mut ll = 0.0;
    for i in 0..data.nrows() {
        let log_p = data.eta(i, beta).min(0.0);
        let (y, n) = (data.y[i], data.trials[i]);
        ll += y * log_p;
        if n > y {
            ll += (n - y) * (-log_p.exp()).ln_1p() + ln_choose(n, y);
        }
    }
    let l1: f64 = beta.iter().map(|b| b.abs()).sum();
    Ok(-ll + rho * l1)
}

/// Log-binomial likelihood as a maximisation objective.
#[derive(Debug, Clone)]
pub struct LogBinomObjective {
    data: RegressionData,
    space: ParamSpace,
}

impl LogBinomObjective {
    pub fn new(data: RegressionData) -> Self {
        let names = coefficient_names(&data);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self {
            space: ParamSpace::real_box(&refs, -3.0, 3.0),
            data,
        }
    }

    pub fn data(&self) -> &RegressionData {
        &self.data
    }
}

impl Objective for LogBinomObjective {
    fn name(&self) -> &str {
        "logbinom"
    }
    fn space(&self) -> &ParamSpace {
        &self.space
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        loglik_logbinom(params, &self.data).unwrap_or(f64::NAN)
    }
}

/// Negated penalised objective, so that larger is better.
#[derive(Debug, Clone)]
pub struct PenalizedLogBinomObjective {
    data: RegressionData,
    rho: f64,
    space: ParamSpace,
}

impl PenalizedLogBinomObjective {
    pub fn new(data: RegressionData, rho: f64) -> Self {
        let names = coefficient_names(&data);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self {
            space: ParamSpace::real_box(&refs, -1.0, 1.0),
            data,
            rho,
        }
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

impl Objective for PenalizedLogBinomObjective {
    fn name(&self) -> &str {
        "logbinom-lasso"
    }
    fn space(&self) -> &ParamSpace {
        &self.space
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        penalized_logbinom(params, &self.data, self.rho).map_or(f64::NAN, |v| -v)
    }
}

fn coefficient_names(data: &RegressionData) -> Vec<String> {
    if data.names().len() == data.ncols() {
        data.names().to_vec()
    } else {
        (0..data.ncols()).map(|j| format!("beta{j}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn two_rows() -> RegressionData {
        RegressionData::binary(vec![1.0, 0.0], vec![vec![1.0, 0.3], vec![1.0, -2.0]]).unwrap()
    }

    #[test]
    fn constant_probability_half() {
        let v = loglik_logbinom(&[0.5f64.ln(), 0.0], &two_rows()).unwrap();
        assert_relative_eq!(v, 2.0 * 0.5f64.ln(), epsilon = 1e-15);
        assert_relative_eq!(v, -1.386294, epsilon = 1e-6);
    }

    #[test]
    fn boundary_is_non_finite() {
        // eta = 0 on a failure row: ln(1 - 1)
        let d = RegressionData::binary(vec![0.0], vec![vec![1.0, 1.0]]).unwrap();
        assert!(!loglik_logbinom(&[-1.0, 1.0], &d).unwrap().is_finite());
        assert!(!loglik_logbinom(&[0.5, 0.0], &two_rows()).unwrap().is_finite());
        assert!(loglik_logbinom(&[0.0], &d).is_err());
    }

    #[test]
    fn matches_bernoulli_pmf_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut rows = Vec::new();
        let mut y = Vec::new();
        for _ in 0..10 {
            let x: f64 = rng.random_range(-6.0..6.0);
            rows.push(vec![1.0, x]);
            y.push(if rng.random_bool(0.4) { 1.0 } else { 0.0 });
        }
        let d = RegressionData::binary(y.clone(), rows.clone()).unwrap();
        let beta = [-2.5, 0.2];
        let mut oracle = 0.0;
        for (r, yi) in rows.iter().zip(&y) {
            let p = (beta[0] + beta[1] * r[1]).exp();
            oracle += if *yi == 1.0 { p.ln() } else { (1.0 - p).ln() };
        }
        assert_relative_eq!(loglik_logbinom(&beta, &d).unwrap(), oracle, epsilon = 1e-12);
    }

    #[test]
    fn binomial_counts_include_the_coefficient() {
        let d = RegressionData::new(vec![2.0], vec![5.0], vec![vec![1.0]]).unwrap();
        let p: f64 = 0.3;
        let oracle = 10f64.ln() + 2.0 * p.ln() + 3.0 * (1.0 - p).ln();
        assert_relative_eq!(loglik_logbinom(&[p.ln()], &d).unwrap(), oracle, epsilon = 1e-12);
        assert_relative_eq!(penalized_logbinom(&[p.ln()], &d, 0.0).unwrap(), -oracle, epsilon = 1e-12);
    }

    #[test]
    fn validation() {
        assert!(RegressionData::binary(vec![2.0], vec![vec![1.0]]).is_err());
        assert!(RegressionData::binary(vec![0.5], vec![vec![1.0]]).is_err());
        assert!(RegressionData::binary(vec![1.0, 0.0], vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(RegressionData::binary(vec![1.0], vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn penalized_examples() {
        let ones = RegressionData::binary(vec![1.0; 3], vec![vec![1.0, 0.5]; 3]).unwrap();
        for rho in [0.0, 0.1, 10.0] {
            assert_eq!(penalized_logbinom(&[0.0, 0.0], &ones, rho).unwrap(), 0.0);
        }
        let v = penalized_logbinom(&[0.0, 0.0], &two_rows(), 0.1).unwrap();
        assert!(!v.is_finite());
        assert!(penalized_logbinom(&[0.0, 0.0], &two_rows(), -1.0).is_err());
        let obj = PenalizedLogBinomObjective::new(ones, 1.0);
        assert_eq!(obj.evaluate(&[-0.5, 0.0]), -(0.5 * 3.0 + 0.5));
    }

    proptest! {
        #[test]
        fn penalized_consistency(b0 in -4.0f64..-1.0, b1 in -0.15f64..0.15,
                                 ys in proptest::collection::vec(0u8..2, 8)) {
            let rows: Vec<Vec<f64>> = (0..8).map(|i| vec![1.0, i as f64 - 4.0]).collect();
            let y: Vec<f64> = ys.iter().map(|&v| v as f64).collect();
            let d = RegressionData::binary(y, rows).unwrap();
            let beta = [b0, b1];
            let l = loglik_logbinom(&beta, &d).unwrap();
            prop_assert!(l.is_finite());
            prop_assert!((penalized_logbinom(&beta, &d, 0.0).unwrap() + l).abs() <= 1e-12 * l.abs().max(1.0));
        }

        #[test]
        fn lasso_strictly_increasing_in_rho(b0 in -4.0f64..-1.0, b1 in -0.15f64..0.15,
                                            r1 in 0.0f64..10.0, dr in 1e-3f64..10.0) {
            let rows: Vec<Vec<f64>> = (0..6).map(|i| vec![1.0, i as f64 - 3.0]).collect();
            let d = RegressionData::binary(vec![1.0, 0.0, 0.0, 1.0, 0.0, 1.0], rows).unwrap();
            let beta = [b0, b1];
            prop_assert!(penalized_logbinom(&beta, &d, r1 + dr).unwrap() > penalized_logbinom(&beta, &d, r1).unwrap());
        }

        #[test]
        fn additivity(b0 in -4.0f64..-1.5, b1 in -0.2f64..0.2, split in 1usize..9) {
            let rows: Vec<Vec<f64>> = (0..10).map(|i| vec![1.0, i as f64 - 5.0]).collect();
            let y = vec![1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0];
            let d = RegressionData::binary(y, rows).unwrap();
            let (a, b): (Vec<usize>, Vec<usize>) = (0..10).partition(|&i| i < split);
            let beta = [b0, b1];
            let whole = loglik_logbinom(&beta, &d).unwrap();
            let parts = loglik_logbinom(&beta, &d.subset(&a)).unwrap() + loglik_logbinom(&beta, &d.subset(&b)).unwrap();
            prop_assert!((whole - parts).abs() < 1e-10);
        }
    }
}
