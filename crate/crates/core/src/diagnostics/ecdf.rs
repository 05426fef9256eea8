use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Empirical distribution function `F̂(x) = #{X_i ≤ x} / n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ecdf {
    sorted: Vec<f64>,
}

pub fn ecdf(x: &[f64]) -> Result<Ecdf> {
    Ecdf::new(x)
}

impl Ecdf {
    pub fn new(x: &[f64]) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Domain("ECDF of empty data".into()));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("ECDF data must be finite".into()));
        }
        let mut sorted = x.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.sorted.len() as f64
    }

    /// Distinct jump locations with the height reached at each.
    pub fn steps(&self) -> Vec<(f64, f64)> {
        let n = self.sorted.len() as f64;
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (i, &v) in self.sorted.iter().enumerate() {
            let h = (i + 1) as f64 / n;
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 = h,
                _ => out.push((v, h)),
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitDistance {
    #[default]
    KolmogorovSmirnov,
    CramerVonMises,
}

/// Kolmogorov–Smirnov distance between the data's ECDF and `cdf`.
pub fn cdf_fit_distance<F: Fn(f64) -> f64>(data: &[f64], cdf: F) -> Result<f64> {
    cdf_fit_distance_with(FitDistance::KolmogorovSmirnov, data, cdf)
}

pub fn cdf_fit_distance_with<F: Fn(f64) -> f64>(metric: FitDistance, data: &[f64], cdf: F) -> Result<f64> {
    let e = Ecdf::new(data)?;
    let n = e.len() as f64;
    let mut acc: f64 = 0.0;
    for (i, &x) in e.sorted.iter().enumerate() {
        let f = cdf(x);
        if !f.is_finite() {
            return Err(Error::Domain(format!("CDF is not finite at {x}")));
        }
        let i = i as f64;
        match metric {
            FitDistance::KolmogorovSmirnov => acc = acc.max((i + 1.0) / n - f).max(f - i / n),
            FitDistance::CramerVonMises => acc += (f - (2.0 * i + 1.0) / (2.0 * n)).powi(2),
        }
    }
    Ok(match metric {
        FitDistance::KolmogorovSmirnov => acc,
        FitDistance::CramerVonMises => acc + 1.0 / (12.0 * n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        let e = ecdf(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(e.eval(2.0), 2.0 / 3.0);
        assert_eq!(e.eval(0.5), 0.0);
        assert_eq!(e.eval(3.0), 1.0);
        assert_eq!(ecdf(&[1.0, 1.0, 2.0]).unwrap().eval(1.0), 2.0 / 3.0);
        assert_eq!(ecdf(&[2.0, 1.0, 1.0]).unwrap().steps(), vec![(1.0, 2.0 / 3.0), (2.0, 1.0)]);
        assert!(ecdf(&[]).is_err());
    }

    #[test]
    fn quantile_matched_data() {
        let n = 20;
        // Exponential quantiles at (i - 0.5) / n.
        let data: Vec<f64> = (1..=n).map(|i| -(1.0 - (i as f64 - 0.5) / n as f64).ln()).collect();
        let d = cdf_fit_distance(&data, |x| 1.0 - (-x).exp()).unwrap();
        assert!((d - 0.5 / n as f64).abs() < 1e-12);
        let w = cdf_fit_distance_with(FitDistance::CramerVonMises, &data, |x| 1.0 - (-x).exp()).unwrap();
        assert!((w - 1.0 / (12.0 * n as f64)).abs() < 1e-12);
    }

    #[test]
    fn constant_cdf() {
        assert_eq!(cdf_fit_distance(&[1.0], |_| 0.5).unwrap(), 0.5);
    }

    proptest! {
        #[test]
        fn ecdf_axioms(
            data in proptest::collection::vec(-100.0f64..100.0, 1..40),
            q in proptest::collection::vec(-150.0f64..150.0, 2..20),
        ) {
            let e = ecdf(&data).unwrap();
            let mut q = q;
            q.sort_by(f64::total_cmp);
            for w in q.windows(2) {
                prop_assert!(e.eval(w[0]) <= e.eval(w[1]));
            }
            let min = e.sorted()[0];
            let max = *e.sorted().last().unwrap();
            prop_assert_eq!(e.eval(min - 1e-9), 0.0);
            prop_assert_eq!(e.eval(max), 1.0);
            for &x in &data {
                prop_assert!(e.eval(x) > e.eval(x - 1e-9 * (1.0 + x.abs())));
            }
        }

        #[test]
        fn distance_nonnegative(data in proptest::collection::vec(0.01f64..10.0, 1..30), rate in 0.1f64..5.0) {
            let d = cdf_fit_distance(&data, |x| 1.0 - (-rate * x).exp()).unwrap();
            prop_assert!(d >= 0.0 && d <= 1.0);
        }
    }
}
