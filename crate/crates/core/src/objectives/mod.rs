//! Log-likelihood families as pure objectives.
//!
//! Each family is available both as a plain function over a data slice (the
//! `loglik_*` functions) and through the [`Objective`] trait, which is what the
//! swarm engine and the baselines consume. Objectives are maximised; the
//! penalised log-binomial problem is exposed with its sign flipped.

mod eeiw;
mod logbinom;
pub mod special;
mod weibull_g;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::swarm::Interval;
use crate::{Error, Result};

pub use eeiw::{eeiw_cdf, loglik_eeiw};
pub use logbinom::{
    loglik_logbinom, penalized_logbinom, LogBinomObjective, PenalizedLogBinomObjective,
    RegressionData,
};
pub use weibull_g::{
    loglik_bbxii, loglik_ee, loglik_ew, loglik_wbxii, loglik_we, weibull_g_cdf,
};

/// Names, positivity constraints and default initialisation box of a model's
/// parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamSpace {
    pub names: Vec<String>,
    pub positive: Vec<bool>,
    pub default_init_box: Vec<Interval>,
}

impl ParamSpace {
    pub fn new(names: &[&str], positive: Vec<bool>, init: Vec<Interval>) -> Self {
        assert_eq!(names.len(), positive.len());
        assert_eq!(names.len(), init.len());
        Self {
            names: names.iter().map(|s| s.to_string()).collect(),
            positive,
            default_init_box: init,
        }
    }

    /// All parameters positive, all initialised over `[0, hi]`.
    pub fn positive_box(names: &[&str], hi: f64) -> Self {
        let d = names.len();
        Self::new(names, vec![true; d], vec![Interval::new(0.0, hi); d])
    }

    /// Unconstrained parameters initialised over `[lo, hi]`.
    pub fn real_box(names: &[&str], lo: f64, hi: f64) -> Self {
        let d = names.len();
        Self::new(names, vec![false; d], vec![Interval::new(lo, hi); d])
    }

    pub fn dimension(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A pure fitness function over a fixed dataset. Larger is better.
///
/// Implementations must be deterministic and reentrant; the engine evaluates
/// particles concurrently. Returning a non-finite value is allowed and is
/// absorbed into the penalty by [`crate::swarm::evaluate_fitness`].
pub trait Objective: Send + Sync {
    fn name(&self) -> &str;
    fn space(&self) -> &ParamSpace;
    fn evaluate(&self, params: &[f64]) -> f64;

    fn dimension(&self) -> usize {
        self.space().dimension()
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn space(&self) -> &ParamSpace {
        (**self).space()
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        (**self).evaluate(params)
    }
}

impl<T: Objective + ?Sized> Objective for Box<T> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn space(&self) -> &ParamSpace {
        (**self).space()
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        (**self).evaluate(params)
    }
}

/// Wraps a closure as an objective; handy for test functions.
pub struct FnObjective<F> {
    name: String,
    space: ParamSpace,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    pub fn new(name: impl Into<String>, space: ParamSpace, f: F) -> Self {
        Self {
            name: name.into(),
            space,
            f,
        }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }
    fn space(&self) -> &ParamSpace {
        &self.space
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        (self.f)(params)
    }
}

/// The univariate lifetime families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    We,
    Ew,
    Ee,
    Wbxii,
    Bbxii,
    Eeiw,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::We,
        Family::Ew,
        Family::Ee,
        Family::Wbxii,
        Family::Bbxii,
        Family::Eeiw,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::We => "we",
            Family::Ew => "ew",
            Family::Ee => "ee",
            Family::Wbxii => "wbxii",
            Family::Bbxii => "bbxii",
            Family::Eeiw => "eeiw",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.as_str() == name)
    }

    /// Parameter names and the default initialisation box used for fitting.
    pub fn space(self) -> ParamSpace {
        match self {
            Family::We => ParamSpace::positive_box(&["alpha", "beta", "lambda"], 4.0),
            Family::Ew => ParamSpace::positive_box(&["alpha", "beta", "lambda"], 10.0),
            Family::Ee => ParamSpace::positive_box(&["alpha", "lambda"], 40.0),
            Family::Wbxii | Family::Bbxii => ParamSpace::new(
                &["alpha", "beta", "s", "k", "c"],
                vec![true; 5],
                vec![
                    Interval::new(0.0, 200.0),
                    Interval::new(0.0, 200.0),
                    Interval::new(0.0, 200.0),
                    Interval::new(0.0, 30.0),
                    Interval::new(0.0, 30.0),
                ],
            ),
            Family::Eeiw => ParamSpace::positive_box(&["alpha", "beta", "c"], 10.0),
        }
    }

    pub fn loglik(self, params: &[f64], x: &[f64]) -> Result<f64> {
        let want = self.space().dimension();
        if params.len() != want {
            return Err(Error::DimensionMismatch {
                expected: want,
                actual: params.len(),
            });
        }
        let p = params;
        match self {
            Family::We => loglik_we(p[0], p[1], p[2], x),
            Family::Ew => loglik_ew(p[0], p[1], p[2], x),
            Family::Ee => loglik_ee(p[0], p[1], x),
            Family::Wbxii => loglik_wbxii(p[0], p[1], p[2], p[3], p[4], x),
            Family::Bbxii => loglik_bbxii(p[0], p[1], p[2], p[3], p[4], x),
            Family::Eeiw => loglik_eeiw(p[0], p[1], p[2], x),
        }
    }

    /// Distribution function at `x`. Not available for BBXII, whose CDF is an
    /// incomplete beta ratio.
    pub fn cdf(self, params: &[f64], x: f64) -> Result<f64> {
        let want = self.space().dimension();
        if params.len() != want {
            return Err(Error::DimensionMismatch {
                expected: want,
                actual: params.len(),
            });
        }
        for (name, &v) in self.space().names.iter().zip(params) {
            check_positive(name, v)?;
        }
        if !(x >= 0.0) {
            return Err(Error::Domain(format!("x must be nonnegative, got {x}")));
        }
        let p = params;
        match self {
            Family::We => weibull_g_cdf(-(-p[2] * x).exp_m1(), p[0], p[1]),
            Family::Ew => Ok((-(-(p[2] * x).powf(p[1])).exp_m1()).powf(p[0])),
            Family::Ee => Ok((-(-p[1] * x).exp_m1()).powf(p[0])),
            Family::Wbxii => {
                let g = -(-p[3] * (x / p[2]).powf(p[4]).ln_1p()).exp_m1();
                weibull_g_cdf(g, p[0], p[1])
            }
            Family::Bbxii => Err(Error::Domain("the BBXII distribution function is not implemented".into())),
            Family::Eeiw => eeiw_cdf(x, p[0], p[1], p[2]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A lifetime family bound to a univariate sample.
#[derive(Debug, Clone)]
pub struct UnivariateObjective {
    family: Family,
    space: ParamSpace,
    data: Vec<f64>,
}

impl UnivariateObjective {
    pub fn new(family: Family, data: Vec<f64>) -> Self {
        Self {
            family,
            space: family.space(),
            data,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn with_space(mut self, space: ParamSpace) -> Self {
        assert_eq!(space.dimension(), self.space.dimension());
        self.space = space;
        self
    }
}

impl Objective for UnivariateObjective {
    fn name(&self) -> &str {
        self.family.as_str()
    }
    fn space(&self) -> &ParamSpace {
        &self.space
    }
    fn evaluate(&self, params: &[f64]) -> f64 {
        self.family.loglik(params, &self.data).unwrap_or(f64::NAN)
    }
}

/// Model names accepted on the command line.
pub const MODEL_NAMES: [&str; 8] = [
    "we",
    "ew",
    "ee",
    "wbxii",
    "bbxii",
    "logbinom",
    "logbinom-lasso",
    "eeiw",
];

pub fn check_model_name(name: &str) -> Result<()> {
    if MODEL_NAMES.contains(&name) {
        Ok(())
    } else {
        Err(Error::UnknownModel {
            name: name.to_string(),
            valid: MODEL_NAMES.join(", "),
        })
    }
}

pub(crate) fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {v}")))
    }
}

pub(crate) fn check_positive_data(x: &[f64]) -> Result<()> {
    match x.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
        None => Ok(()),
        Some(i) => Err(Error::Domain(format!(
            "observation {i} must be positive and finite, got {}",
            x[i]
        ))),
    }
}
