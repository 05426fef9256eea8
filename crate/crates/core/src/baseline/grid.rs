use super::BaselineResult;
use crate::objectives::Objective;
use crate::swarm::Interval;
use crate::{Error, Result};

pub const MAX_GRID_DIMENSION: usize = 4;

/// Exhaustive search over the lattice with `points_per_dim` evenly spaced
/// values per axis (endpoints included). Returns the first lattice point (in
/// row-major order, first axis slowest) attaining the maximum.
pub fn brute_force_grid<O: Objective + ?Sized>(
    objective: &O,
    bounds: &[Interval],
    points_per_dim: usize,
) -> Result<BaselineResult> {
    let d = bounds.len();
    if d > MAX_GRID_DIMENSION {
        return Err(Error::GridTooLarge {
            max: MAX_GRID_DIMENSION,
            actual: d,
        });
    }
    if d == 0 || points_per_dim == 0 {
        return Err(Error::Config("grid needs at least one axis and one point".into()));
    }
    if objective.dimension() != d {
        return Err(Error::DimensionMismatch {
            expected: objective.dimension(),
            actual: d,
        });
    }
    let axes: Vec<Vec<f64>> = bounds.iter().map(|b| lattice(b, points_per_dim)).collect();
    let total = points_per_dim.pow(d as u32);
    let mut best_x = Vec::new();
    let mut best_f = f64::NEG_INFINITY;
    let mut x = vec![0.0; d];
    for flat in 0..total {
        let mut rem = flat;
        for j in (0..d).rev() {
            x[j] = axes[j][rem % points_per_dim];
            rem /= points_per_dim;
        }
        let f = objective.evaluate(&x);
        if f.is_finite() && (best_x.is_empty() || f > best_f) {
            best_f = f;
            best_x.clone_from(&x);
        }
    }
    if best_x.is_empty() {
        return Ok(BaselineResult::failure(
            axes.iter().map(|a| a[0]).collect(),
            f64::NEG_INFINITY,
            total,
            super::FailureReason::NonfiniteObjective,
        ));
    }
    Ok(BaselineResult::success(best_x, best_f, total))
}

/// `points` evenly spaced values from `lo` to `hi`, computed as
/// `lo + (hi - lo) * i / (points - 1)`.
pub(crate) fn lattice(b: &Interval, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![b.lo];
    }
    (0..points)
        .map(|i| b.lo + (b.hi - b.lo) * i as f64 / (points - 1) as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{FnObjective, ParamSpace};

    #[test]
    fn lattice_contains_the_optimum() {
        let obj = FnObjective::new("q", ParamSpace::real_box(&["x"], 0.0, 1.0), |x: &[f64]| -(x[0] - 0.5).powi(2));
        let r = brute_force_grid(&obj, &[Interval::new(0.0, 1.0)], 101).unwrap();
        assert_eq!(r.params, vec![0.5]);
        assert_eq!(r.objective_value, 0.0);
    }

    #[test]
    fn constant_objective_returns_first_point() {
        let obj = FnObjective::new("c", ParamSpace::real_box(&["x", "y"], 0.0, 1.0), |_: &[f64]| 1.0);
        let r = brute_force_grid(&obj, &[Interval::new(-1.0, 1.0), Interval::new(2.0, 3.0)], 5).unwrap();
        assert_eq!(r.params, vec![-1.0, 2.0]);
    }

    #[test]
    fn cost_guard() {
        let obj = FnObjective::new("c", ParamSpace::real_box(&["a", "b", "c", "d", "e"], 0.0, 1.0), |_: &[f64]| 1.0);
        let err = brute_force_grid(&obj, &[Interval::new(0.0, 1.0); 5], 3).unwrap_err();
        assert!(matches!(err, Error::GridTooLarge { max: 4, actual: 5 }));
    }
}
