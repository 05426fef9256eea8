//! Re-initialising a swarm around a previous answer.

use serde::{Deserialize, Serialize};

use super::config::{Interval, SwarmConfig};
use super::engine::FitResult;
use crate::{Error, Result};

/// Replaces the recast box of one coordinate with a hand-picked interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InitOverride {
    pub index: usize,
    pub interval: Interval,
}

/// Builds the configuration for a recast run.
///
/// Coordinate `j` is initialised over `[(1-w)θ_j, (1+w)θ_j]` around the
/// previous best `θ`; a zero estimate gets `[-ω, ω]` clipped to the bounds,
/// where `ω` is the lower edge width of the bound policy (0.5 when the policy
/// has none). Upper bounds are dropped; lower bounds and the policy stay.
pub fn recast_config(prev: &FitResult, rel_width: f64, overrides: &[InitOverride]) -> Result<SwarmConfig> {
    if !(rel_width > 0.0 && rel_width < 1.0) {
        return Err(Error::Config(format!("recast width must lie in (0, 1), got {rel_width}")));
    }
    let theta = &prev.best_params;
    if theta.iter().any(|v| !v.is_finite()) {
        return Err(Error::Config("previous best parameters are not finite".into()));
    }
    let mut cfg = prev.config.clone();
    if theta.len() != cfg.dimension() {
        return Err(Error::DimensionMismatch {
            expected: cfg.dimension(),
            actual: theta.len(),
        });
    }
    let omega = cfg.bound_policy.edge_width().unwrap_or(0.5);
    for b in cfg.bounds.iter_mut() {
        b.hi = f64::INFINITY;
    }
    cfg.init_box = theta
        .iter()
        .zip(&cfg.bounds)
        .map(|(&t, b)| {
            if t == 0.0 {
                Interval::new(-omega, omega).intersect(b)
            } else {
                let (a, c) = ((1.0 - rel_width) * t, (1.0 + rel_width) * t);
                Interval::new(a.min(c), a.max(c))
            }
        })
        .collect();
    for o in overrides {
        if o.index >= cfg.init_box.len() {
            return Err(Error::Config(format!("override index {} out of range", o.index)));
        }
        if !(o.interval.lo <= o.interval.hi) {
            return Err(Error::Config(format!("override interval for {} is empty", o.index)));
        }
        cfg.init_box[o.index] = o.interval;
    }
    Ok(cfg)
}
