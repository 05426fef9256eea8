use serde::{Deserialize, Serialize};

use crate::swarm::FitResult;
use crate::{Error, Result};

pub const DEFAULT_REL_CHANGE_THRESHOLD: f64 = 0.5;
pub const DEFAULT_FITNESS_FLAT_THRESHOLD: f64 = 1e-3;

/// Estimates and fitness of successive recast runs, oldest first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecastSequence {
    pub param_names: Vec<String>,
    pub params: Vec<Vec<f64>>,
    pub fitness: Vec<f64>,
}

impl RecastSequence {
    pub fn new(param_names: Vec<String>, params: Vec<Vec<f64>>, fitness: Vec<f64>) -> Result<Self> {
        if params.len() != fitness.len() {
            return Err(Error::DimensionMismatch {
                expected: params.len(),
                actual: fitness.len(),
            });
        }
        if let Some(p) = params.iter().find(|p| p.len() != param_names.len()) {
            return Err(Error::DimensionMismatch {
                expected: param_names.len(),
                actual: p.len(),
            });
        }
        Ok(Self {
            param_names,
            params,
            fitness,
        })
    }

    pub fn from_fits(fits: &[FitResult]) -> Result<Self> {
        let names = fits.first().map(|f| f.param_names.clone()).unwrap_or_default();
        Self::new(
            names,
            fits.iter().map(|f| f.best_params.clone()).collect(),
            fits.iter().map(|f| f.best_fitness).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.fitness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fitness.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Stable,
    DivergentUp,
    DivergentDown,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterTrend {
    pub name: String,
    pub classification: Classification,
    /// Relative change of each of the last two steps.
    pub relative_steps: [f64; 2],
    /// `|last - first| / min(|first|, |last|)` over the last three runs.
    pub relative_span: f64,
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub parameters: Vec<ParameterTrend>,
    /// `max - min` of the fitness over the last three runs.
    pub fitness_span: f64,
    pub rel_change_threshold: f64,
    pub fitness_flat_threshold: f64,
}

impl DivergenceReport {
    pub fn divergent(&self) -> Vec<&str> {
        self.parameters
            .iter()
            .filter(|p| p.classification != Classification::Stable)
            .map(|p| p.name.as_str())
            .collect()
    }

    pub fn classification(&self, name: &str) -> Option<Classification> {
        self.parameters.iter().find(|p| p.name == name).map(|p| p.classification)
    }
}

/// Change relative to the smaller magnitude, so that doubling and halving
/// score the same. A pair of parameters trading off as `β·k = const` moves by
/// equal factors in opposite directions.
fn relative(from: f64, to: f64) -> f64 {
    let base = from.abs().min(to.abs());
    if from == to {
        0.0
    } else if base == 0.0 {
        f64::INFINITY
    } else {
        (to - from).abs() / base
    }
}

/// Classifies each parameter over the last three runs of `seq`. A parameter
/// is divergent when both steps move in the same strict direction, the total
/// relative change exceeds `rel_change_threshold`, and the fitness moved by
/// less than `fitness_flat_threshold` over the same runs.
pub fn detect_divergence(
    seq: &RecastSequence,
    rel_change_threshold: f64,
    fitness_flat_threshold: f64,
) -> Result<DivergenceReport> {
    if seq.len() < 3 {
        return Err(Error::InsufficientEvidence {
            required: 3,
            actual: seq.len(),
        });
    }
    let n = seq.len();
    let tail = &seq.fitness[n - 3..];
    if tail.iter().zip(tail.iter().skip(1)).any(|(a, b)| b < a) {
        log::warn!("recast fitness decreased within the last three runs");
    }
    let fmax = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let fmin = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let fitness_span = fmax - fmin;
    let flat = fitness_span < fitness_flat_threshold;

    let parameters = seq
        .param_names
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let (a, b, c) = (seq.params[n - 3][j], seq.params[n - 2][j], seq.params[n - 1][j]);
            let (s1, s2) = (b - a, c - b);
            let monotone = s1 != 0.0 && s2 != 0.0 && s1.signum() == s2.signum();
            let relative_span = relative(a, c);
            let classification = if flat && monotone && relative_span > rel_change_threshold {
                if s2 > 0.0 {
                    Classification::DivergentUp
                } else {
                    Classification::DivergentDown
                }
            } else {
                Classification::Stable
            };
            ParameterTrend {
                name: name.clone(),
                classification,
                relative_steps: [relative(a, b), relative(b, c)],
                relative_span,
                monotone,
            }
        })
        .collect();
    Ok(DivergenceReport {
        parameters,
        fitness_span,
        rel_change_threshold,
        fitness_flat_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(cols: &[(&str, &[f64])], ll: &[f64]) -> RecastSequence {
        let names = cols.iter().map(|c| c.0.to_string()).collect();
        let params = (0..ll.len()).map(|r| cols.iter().map(|c| c.1[r]).collect()).collect();
        RecastSequence::new(names, params, ll.to_vec()).unwrap()
    }

    #[test]
    fn wbxii_alpha_diverges() {
        let s = seq(
            &[
                ("alpha", &[138.96, 672.5, 38417.2, 106321.7]),
                ("s", &[145.2, 145.3, 145.26, 145.26]),
            ],
            &[-455.09719, -455.09113, -455.09099, -455.09099],
        );
        let r = detect_divergence(&s, 0.5, 1e-3).unwrap();
        assert_eq!(r.classification("alpha"), Some(Classification::DivergentUp));
        assert_eq!(r.classification("s"), Some(Classification::Stable));
    }

    #[test]
    fn reciprocal_pair_diverges_together() {
        let s = seq(
            &[
                ("beta", &[40.416, 52.143, 88.661]),
                ("k", &[0.03541, 0.02744, 0.01613]),
                ("c", &[9.888, 9.888, 9.887]),
            ],
            &[-455.104858, -455.104858, -455.104857],
        );
        let r = detect_divergence(&s, 0.5, 1e-3).unwrap();
        assert_eq!(r.classification("beta"), Some(Classification::DivergentUp));
        assert_eq!(r.classification("k"), Some(Classification::DivergentDown));
        assert_eq!(r.classification("c"), Some(Classification::Stable));
        let spans: Vec<f64> = r.parameters.iter().map(|p| p.relative_span).collect();
        assert!((spans[0] - (88.661 / 40.416 - 1.0)).abs() < 1e-12);
        assert!((spans[1] - (0.03541 / 0.01613 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn constant_is_stable() {
        let s = seq(&[("a", &[1.0, 1.0, 1.0]), ("b", &[2.0, 2.0, 2.0])], &[0.0, 0.0, 0.0]);
        let r = detect_divergence(&s, 0.5, 1e-3).unwrap();
        assert!(r.divergent().is_empty());
        assert_eq!(r.parameters.len(), 2);
    }

    #[test]
    fn moving_fitness_blocks_divergence() {
        let s = seq(&[("a", &[1.0, 10.0, 100.0])], &[-10.0, -5.0, -1.0]);
        let r = detect_divergence(&s, 0.5, 1e-3).unwrap();
        assert!(r.divergent().is_empty());
    }

    #[test]
    fn too_short() {
        let s = seq(&[("a", &[1.0, 2.0])], &[0.0, 0.0]);
        assert!(matches!(
            detect_divergence(&s, 0.5, 1e-3),
            Err(Error::InsufficientEvidence { required: 3, actual: 2 })
        ));
    }

    proptest! {
        #[test]
        fn scale_equivariant(
            vals in proptest::collection::vec(-1e3f64..1e3, 3..6),
            scale in 1e-3f64..1e3,
        ) {
            let ll = vec![0.0; vals.len()];
            let scaled: Vec<f64> = vals.iter().map(|v| v * scale).collect();
            let a = detect_divergence(&seq(&[("p", &vals)], &ll), 0.5, 1e-3).unwrap();
            let b = detect_divergence(&seq(&[("p", &scaled)], &ll), 0.5, 1e-3).unwrap();
            prop_assert_eq!(a.parameters[0].classification, b.parameters[0].classification);
        }
    }
}
