//! Built-in datasets, CSV ingestion and JSON persistence.

mod builtin;
mod persist;
mod tabular;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::objectives::RegressionData;
use crate::{Error, Result};

pub use builtin::{
    builtin_dataset, Builtin, ALUMINUM_COUPONS, BALL_BEARINGS, BALL_BEARINGS_CORRECTED,
    CARBON_FIBERS, COVID19, GLASS_FIBERS,
};
pub use persist::{load_result, persist_result, from_json, to_json, Persist, SCHEMA_VERSION};
pub use tabular::{load_csv, parse_csv, write_univariate_csv, CsvSchema};

/// Reference copies of the full 63-value glass-fibre strengths and the
/// 101-value aluminium fatigue lives, shipped as CSV fixtures.
pub mod reference {
    pub const GLASS_FIBERS_63_CSV: &str = include_str!("../../data/glass_fibers_63.csv");
    pub const ALUMINUM_COUPONS_101_CSV: &str = include_str!("../../data/aluminum_coupons_101.csv");
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DatasetValues {
    Univariate(Vec<f64>),
    Regression(RegressionData),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub name: String,
    pub source: Source,
    pub values: DatasetValues,
}

impl Dataset {
    pub fn n(&self) -> usize {
        match &self.values {
            DatasetValues::Univariate(v) => v.len(),
            DatasetValues::Regression(r) => r.nrows(),
        }
    }

    pub fn univariate(&self) -> Result<&[f64]> {
        match &self.values {
            DatasetValues::Univariate(v) => Ok(v),
            DatasetValues::Regression(_) => Err(Error::Domain(format!("dataset `{}` is tabular, not univariate", self.name))),
        }
    }

    pub fn regression(&self) -> Result<&RegressionData> {
        match &self.values {
            DatasetValues::Regression(r) => Ok(r),
            DatasetValues::Univariate(_) => Err(Error::Domain(format!("dataset `{}` is univariate, not tabular", self.name))),
        }
    }
}

/// Resolves `builtin:NAME` to an embedded dataset and anything else to a CSV
/// file read with `schema`.
pub fn resolve(spec: &str, schema: &CsvSchema) -> Result<Dataset> {
    match spec.strip_prefix("builtin:") {
        Some(name) => builtin_dataset(name),
        None => load_csv(spec, schema),
    }
}
