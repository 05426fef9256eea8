use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::objectives::Objective;
use crate::par::{map_indices, Execution};
use crate::swarm::PENALTY;
use crate::{Error, Result};

/// Log-likelihood evaluated over a two-parameter grid with the remaining
/// parameters held fixed. `values[i][j]` belongs to `(axis1[i], axis2[j])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileGrid {
    pub objective: String,
    pub fixed: Vec<(String, f64)>,
    pub axis1_name: String,
    pub axis1: Vec<f64>,
    pub axis2_name: String,
    pub axis2: Vec<f64>,
    /// Non-finite evaluations are stored as the swarm penalty and flagged.
    pub values: Vec<Vec<f64>>,
    pub flagged: Vec<Vec<bool>>,
}

/// Best cell along axis 2 for one axis-1 value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RidgePoint {
    pub axis1: f64,
    pub axis2: f64,
    pub loglik: f64,
}

/// `n` log-spaced points from `lo` to `hi` (both positive).
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

pub fn profile_loglik_grid<O: Objective + ?Sized>(
    objective: &O,
    fixed: &[(String, f64)],
    axis1: (&str, &[f64]),
    axis2: (&str, &[f64]),
    exec: Execution,
) -> Result<ProfileGrid> {
    let names = &objective.space().names;
    let mut template = vec![f64::NAN; names.len()];
    let mut assigned = vec![false; names.len()];
    let mut assign = |name: &str| -> Result<usize> {
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Config(format!("`{name}` is not a parameter of {}", objective.name())))?;
        if assigned[idx] {
            return Err(Error::Config(format!("parameter `{name}` given more than once")));
        }
        assigned[idx] = true;
        Ok(idx)
    };
    for (name, value) in fixed {
        if !value.is_finite() {
            return Err(Error::Config(format!("fixed value for `{name}` is not finite")));
        }
        template[assign(name)?] = *value;
    }
    let i1 = assign(axis1.0)?;
    let i2 = assign(axis2.0)?;
    if let Some(missing) = assigned.iter().position(|a| !a) {
        return Err(Error::Config(format!("parameter `{}` is neither fixed nor a grid axis", names[missing])));
    }
    if axis1.1.is_empty() || axis2.1.is_empty() || axis1.1.iter().chain(axis2.1).any(|v| !v.is_finite()) {
        return Err(Error::Config("grid axes must be nonempty and finite".into()));
    }

    let (n1, n2) = (axis1.1.len(), axis2.1.len());
    let flat = map_indices(exec, n1 * n2, |k| {
        let mut theta = template.clone();
        theta[i1] = axis1.1[k / n2];
        theta[i2] = axis2.1[k % n2];
        objective.evaluate(&theta)
    });
    let values = flat
        .chunks(n2)
        .map(|r| r.iter().map(|&v| if v.is_finite() { v } else { PENALTY }).collect())
        .collect();
    let flagged = flat.chunks(n2).map(|r| r.iter().map(|v| !v.is_finite()).collect()).collect();
    Ok(ProfileGrid {
        objective: objective.name().to_string(),
        fixed: fixed.to_vec(),
        axis1_name: axis1.0.to_string(),
        axis1: axis1.1.to_vec(),
        axis2_name: axis2.0.to_string(),
        axis2: axis2.1.to_vec(),
        values,
        flagged,
    })
}

impl ProfileGrid {
    /// For each axis-1 value, the axis-2 cell with the highest log-likelihood.
    /// Rows that are entirely flagged are skipped.
    pub fn ridge(&self) -> Vec<RidgePoint> {
        self.values
            .iter()
            .zip(&self.flagged)
            .enumerate()
            .filter_map(|(i, (row, flags))| {
                let (j, v) = row
                    .iter()
                    .zip(flags)
                    .enumerate()
                    .filter(|(_, (_, f))| !**f)
                    .map(|(j, (v, _))| (j, *v))
                    .fold(None, |best: Option<(usize, f64)>, (j, v)| match best {
                        Some((_, bv)) if bv >= v => best,
                        _ => Some((j, v)),
                    })?;
                Some(RidgePoint {
                    axis1: self.axis1[i],
                    axis2: self.axis2[j],
                    loglik: v,
                })
            })
            .collect()
    }

    /// Writes `axis1,axis2,loglik` rows; flagged cells are written as `NaN`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record([&self.axis1_name, &self.axis2_name, "loglik"])?;
        for (i, a) in self.axis1.iter().enumerate() {
            for (j, b) in self.axis2.iter().enumerate() {
                let v = if self.flagged[i][j] { f64::NAN } else { self.values[i][j] };
                out.write_record([a.to_string(), b.to_string(), v.to_string()])?;
            }
        }
        out.flush()?;
        Ok(())
    }
}
