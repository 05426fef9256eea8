use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::objectives::Objective;
use crate::{Error, Result};

/// Relative finite-difference step; the absolute step for coordinate `j` is
/// `max(step, step · |θ_j|)`.
pub const DEFAULT_SE_STEP: f64 = 1e-4;

const SINGULAR_RCOND: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StandardErrors {
    pub se: Vec<f64>,
    /// Finite-difference Hessian of the log-likelihood (row-major).
    pub hessian: Vec<Vec<f64>>,
    /// Eigenvalues of the negated Hessian, ascending.
    pub eigenvalues: Vec<f64>,
}

/// Standard errors from the inverse of the negated central-difference Hessian.
pub fn numerical_se<O: Objective + ?Sized>(objective: &O, theta: &[f64], step: f64) -> Result<StandardErrors> {
    let d = objective.dimension();
    if theta.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: theta.len(),
        });
    }
    if !(step > 0.0) {
        return Err(Error::Config(format!("finite-difference step must be positive, got {step}")));
    }
    let h: Vec<f64> = theta.iter().map(|t| step.max(step * t.abs())).collect();
    let f = |offsets: &[(usize, f64)], index: usize| -> Result<f64> {
        let mut x = theta.to_vec();
        for &(j, s) in offsets {
            x[j] += s * h[j];
        }
        let v = objective.evaluate(&x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteNeighbourhood { index })
        }
    };
    let f0 = f(&[], 0)?;
    let mut hess = DMatrix::zeros(d, d);
    for i in 0..d {
        let fp = f(&[(i, 1.0)], i)?;
        let fm = f(&[(i, -1.0)], i)?;
        hess[(i, i)] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for j in 0..i {
            let fpp = f(&[(i, 1.0), (j, 1.0)], i)?;
            let fpm = f(&[(i, 1.0), (j, -1.0)], i)?;
            let fmp = f(&[(i, -1.0), (j, 1.0)], i)?;
            let fmm = f(&[(i, -1.0), (j, -1.0)], i)?;
            let v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    let neg = -hess.clone();
    let eig = SymmetricEigen::new(neg.clone());
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    let negative = eigenvalues.iter().filter(|&&e| e <= 0.0).count();
    if negative > 0 {
        return Err(Error::IndefiniteHessian {
            negative,
            min_eigenvalue: eigenvalues[0],
        });
    }
    let (lo, hi) = (eigenvalues[0], eigenvalues[d - 1]);
    if lo < hi * SINGULAR_RCOND {
        return Err(Error::SingularHessian { condition: hi / lo });
    }
    let inv = eig.recompose().try_inverse().ok_or(Error::SingularHessian { condition: hi / lo })?;
    Ok(StandardErrors {
        se: (0..d).map(|i| inv[(i, i)].sqrt()).collect(),
        hessian: (0..d).map(|i| (0..d).map(|j| hess[(i, j)]).collect()).collect(),
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{FnObjective, ParamSpace};

    #[test]
    fn quadratic_curvature() {
        let (a, sigma) = (3.0, 0.7);
        let obj = FnObjective::new("q", ParamSpace::real_box(&["t"], 0.0, 5.0), move |x: &[f64]| {
            -(x[0] - a).powi(2) / (2.0 * sigma * sigma)
        });
        let r = numerical_se(&obj, &[a], DEFAULT_SE_STEP).unwrap();
        assert!((r.se[0] - sigma).abs() < 1e-6, "{:?}", r.se);
    }

    #[test]
    fn correlated_gaussian() {
        // log-density of N(0, Σ) with Σ = [[2, 0.6], [0.6, 1]]
        let obj = FnObjective::new("g", ParamSpace::real_box(&["x", "y"], -1.0, 1.0), |x: &[f64]| {
            let det = 2.0 - 0.36;
            -(x[0] * x[0] - 1.2 * x[0] * x[1] + 2.0 * x[1] * x[1]) / (2.0 * det)
        });
        let r = numerical_se(&obj, &[0.0, 0.0], DEFAULT_SE_STEP).unwrap();
        assert!((r.se[0] - 2f64.sqrt()).abs() < 1e-6);
        assert!((r.se[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn saddle_is_indefinite() {
        let obj = FnObjective::new("s", ParamSpace::real_box(&["x", "y"], -1.0, 1.0), |x: &[f64]| x[0] * x[0] - x[1] * x[1]);
        match numerical_se(&obj, &[0.0, 0.0], DEFAULT_SE_STEP) {
            Err(Error::IndefiniteHessian { negative, min_eigenvalue }) => {
                assert_eq!(negative, 1);
                assert!(min_eigenvalue < 0.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonfinite_neighbourhood() {
        let obj = FnObjective::new("l", ParamSpace::positive_box(&["x"], 1.0), |x: &[f64]| x[0].ln());
        assert!(matches!(
            numerical_se(&obj, &[0.0], DEFAULT_SE_STEP),
            Err(Error::NonFiniteNeighbourhood { index: 0 })
        ));
    }
}
