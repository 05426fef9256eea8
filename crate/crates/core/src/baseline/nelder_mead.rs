use rand::Rng;

use super::{BaselineResult, FailureReason};
use crate::objectives::Objective;
use crate::rng::{stream, substream};
use crate::swarm::Interval;

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadOptions {
    pub max_iter: usize,
    /// Simplex diameter tolerance (max-norm, absolute).
    pub xtol: f64,
    /// Spread of function values across the simplex.
    pub ftol: f64,
    /// Initial edge as a fraction of `|x0_j|`.
    pub rel_step: f64,
    /// Initial edge for coordinates where `x0_j == 0`.
    pub zero_step: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            max_iter: 20_000,
            xtol: 1e-10,
            ftol: 1e-13,
            rel_step: 0.05,
            zero_step: 0.00025,
        }
    }
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Minimises `f` from `x0`. Non-finite values are treated as `+∞`.
pub fn minimize_nelder_mead<F: Fn(&[f64]) -> f64>(f: F, x0: &[f64], opts: &NelderMeadOptions) -> BaselineResult {
    let eval = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };
    let f0 = eval(x0);
    if !f0.is_finite() || x0.iter().any(|v| !v.is_finite()) {
        return BaselineResult::failure(x0.to_vec(), f0, 0, FailureReason::NonfiniteObjective);
    }
    let d = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
    simplex.push((x0.to_vec(), f0));
    for j in 0..d {
        let mut x = x0.to_vec();
        x[j] += if x[j] != 0.0 { opts.rel_step * x[j] } else { opts.zero_step };
        let fx = eval(&x);
        simplex.push((x, fx));
    }

    let mut iter = 0;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best_x, best_f) = (&simplex[0].0, simplex[0].1);
        let fspread = simplex.iter().map(|s| (s.1 - best_f).abs()).fold(0.0, f64::max);
        let xspread = simplex
            .iter()
            .flat_map(|s| s.0.iter().zip(best_x).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if fspread <= opts.ftol && xspread <= opts.xtol {
            let (x, v) = simplex.swap_remove(0);
            return BaselineResult::success(x, v, iter);
        }
        if iter >= opts.max_iter {
            let (x, v) = simplex.swap_remove(0);
            return BaselineResult::failure(x, v, iter, FailureReason::MaxIter);
        }
        iter += 1;

        let mut centroid = vec![0.0; d];
        for (x, _) in &simplex[..d] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / d as f64;
            }
        }
        let along = |coef: f64, from: &[f64]| -> Vec<f64> {
            centroid.iter().zip(from).map(|(c, w)| c + coef * (c - w)).collect()
        };
        let worst = simplex[d].0.clone();
        let fw = simplex[d].1;
        let fsecond = simplex[d - 1].1;

        let xr = along(REFLECT, &worst);
        let fr = eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(EXPAND, &worst);
            let fe = eval(&xe);
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < fsecond {
            simplex[d] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < fw {
            let xc = along(REFLECT * CONTRACT, &worst);
            let fc = eval(&xc);
            (xc, fc)
        } else {
            let xc = along(-CONTRACT, &worst);
            let fc = eval(&xc);
            (xc, fc)
        };
        if fc < fr.min(fw) {
            simplex[d] = (xc, fc);
            continue;
        }
        let x1 = simplex[0].0.clone();
        for s in simplex.iter_mut().skip(1) {
            for (xi, bi) in s.0.iter_mut().zip(&x1) {
                *xi = bi + SHRINK * (*xi - bi);
            }
            s.1 = eval(&s.0);
        }
    }
}

/// Maximises an objective with the simplex method on its negation.
/// `objective_value` in the result is the objective itself (not negated).
pub fn nelder_mead<O: Objective + ?Sized>(objective: &O, x0: &[f64], opts: &NelderMeadOptions) -> BaselineResult {
    let mut r = minimize_nelder_mead(|x| -objective.evaluate(x), x0, opts);
    r.objective_value = -r.objective_value;
    r
}

/// Best of `starts` Nelder–Mead runs from points drawn uniformly in `init_box`.
/// Start `i` is keyed by `(seed, i)`, so the set of starts is reproducible.
pub fn nelder_mead_multistart<O: Objective + ?Sized>(
    objective: &O,
    init_box: &[Interval],
    starts: usize,
    seed: u64,
    opts: &NelderMeadOptions,
) -> Option<BaselineResult> {
    let mut best: Option<BaselineResult> = None;
    for i in 0..starts {
        let mut rng = substream(seed, &[stream::RESTART, i as u64]);
        let x0: Vec<f64> = init_box
            .iter()
            .map(|b| b.lo + (b.hi - b.lo) * rng.random::<f64>())
            .collect();
        let r = nelder_mead(objective, &x0, opts);
        if r.objective_value.is_finite()
            && best.as_ref().is_none_or(|b| r.objective_value > b.objective_value)
        {
            best = Some(r);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic() {
        let r = minimize_nelder_mead(|x| (x[0] - 1.0).powi(2), &[0.0], &NelderMeadOptions::default());
        assert!(r.converged);
        assert!((r.params[0] - 1.0).abs() < 1e-8, "{:?}", r.params);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let r = minimize_nelder_mead(f, &[-1.2, 1.0], &NelderMeadOptions::default());
        assert!(r.converged);
        assert!((r.params[0] - 1.0).abs() < 1e-6 && (r.params[1] - 1.0).abs() < 1e-6, "{:?}", r.params);
    }

    #[test]
    fn nonfinite_start_fails_immediately() {
        let r = minimize_nelder_mead(|x| x[0].ln(), &[-1.0], &NelderMeadOptions::default());
        assert!(!r.converged);
        assert_eq!(r.failure_reason, Some(FailureReason::NonfiniteObjective));
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn max_iter_reported() {
        let opts = NelderMeadOptions { max_iter: 3, ..Default::default() };
        let r = minimize_nelder_mead(|x| (x[0] - 1.0).powi(2) + x[1].powi(2), &[0.0, 3.0], &opts);
        assert_eq!(r.failure_reason, Some(FailureReason::MaxIter));
    }
}
