//! The per-particle update rules.

use rand::Rng;

use super::config::{BoundPolicy, InertiaSchedule, Interval};
use crate::{Error, Result};

fn same_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, actual })
    }
}

/// `x + v`, elementwise.
pub fn position_update(x: &[f64], v: &[f64]) -> Result<Vec<f64>> {
    same_len(x.len(), v.len())?;
    Ok(x.iter().zip(v).map(|(a, b)| a + b).collect())
}

/// `χ [φ v + c1 u1 (p - x) + c2 u2 (g - x)]` with scalar draws `u1`, `u2`.
#[allow(clippy::too_many_arguments)]
pub fn velocity_update(
    v: &[f64],
    x: &[f64],
    p: &[f64],
    g: &[f64],
    phi: f64,
    c1: f64,
    c2: f64,
    u1: f64,
    u2: f64,
    chi: f64,
) -> Result<Vec<f64>> {
    let d = v.len();
    same_len(d, x.len())?;
    same_len(d, p.len())?;
    same_len(d, g.len())?;
    if !((0.0..=1.0).contains(&u1) && (0.0..=1.0).contains(&u2)) {
        return Err(Error::Domain(format!("u1, u2 must lie in [0, 1], got {u1}, {u2}")));
    }
    let mut out = v.to_vec();
    step_velocity(&mut out, x, p, g, phi, c1, c2, chi, |_| (u1, u2));
    Ok(out)
}

/// In-place velocity step; `draws(j)` yields `(u1, u2)` for coordinate `j`.
#[allow(clippy::too_many_arguments)]
#[inline]
pub(crate) fn step_velocity(
    v: &mut [f64],
    x: &[f64],
    p: &[f64],
    g: &[f64],
    phi: f64,
    c1: f64,
    c2: f64,
    chi: f64,
    mut draws: impl FnMut(usize) -> (f64, f64),
) {
    for j in 0..v.len() {
        let (u1, u2) = draws(j);
        v[j] = chi * (phi * v[j] + c1 * u1 * (p[j] - x[j]) + c2 * u2 * (g[j] - x[j]));
    }
}

/// Inertia weight at iteration `t` of `max`.
pub fn inertia(t: usize, max: usize, schedule: InertiaSchedule) -> Result<f64> {
    let out_of_range = || Error::IterationOutOfRange { t, max };
    match schedule {
        InertiaSchedule::Linear => {
            if t > max || max == 0 {
                return Err(out_of_range());
            }
            Ok(1.0 - t as f64 / max as f64)
        }
        InertiaSchedule::Logarithmic => {
            if t < 1 || t > max {
                return Err(out_of_range());
            }
            if max == 1 {
                // ln t / ln M is 0/0 at t = M = 1; the schedule's endpoint value is 0.
                return Ok(0.0);
            }
            Ok(1.0 - (t as f64).ln() / (max as f64).ln())
        }
        InertiaSchedule::Constant { w } => Ok(w),
    }
}

/// Returns a copy of `x` with every out-of-bounds coordinate replaced per
/// `policy`. In-bounds coordinates are untouched.
pub fn apply_bounds<R: Rng + ?Sized>(
    x: &[f64],
    bounds: &[Interval],
    policy: BoundPolicy,
    rng: &mut R,
) -> Vec<f64> {
    let mut out = x.to_vec();
    apply_bounds_in_place(&mut out, bounds, policy, rng);
    out
}

pub(crate) fn apply_bounds_in_place<R: Rng + ?Sized>(
    x: &mut [f64],
    bounds: &[Interval],
    policy: BoundPolicy,
    rng: &mut R,
) {
    for (xj, b) in x.iter_mut().zip(bounds) {
        let below = *xj < b.lo;
        let above = *xj > b.hi;
        // NaN coordinates count as out of bounds on whichever side is finite.
        let nan = xj.is_nan();
        if !(below || above || nan) {
            continue;
        }
        match policy {
            BoundPolicy::NoneWithPenalty => {}
            BoundPolicy::RerandomizeFull => *xj = uniform(rng, b.lo, b.hi),
            BoundPolicy::RerandomizeNearEdge {
                lower_width,
                upper_width,
            } => {
                if below || (nan && b.lo.is_finite()) {
                    *xj = uniform(rng, b.lo, (b.lo + lower_width).min(b.hi));
                } else if above || (nan && b.hi.is_finite()) {
                    *xj = uniform(rng, (b.hi - upper_width).max(b.lo), b.hi);
                }
            }
        }
    }
}

#[inline]
pub(crate) fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        lo + (hi - lo) * rng.random::<f64>()
    } else {
        lo
    }
}
