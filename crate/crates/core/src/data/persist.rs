use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::diagnostics::{DivergenceReport, ProfileGrid, StandardErrors};
use crate::simstudy::{ConvergenceMap, CvReport, StudyReport};
use crate::swarm::FitResult;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u64 = 1;

/// A result type with a stable tag in the JSON envelope.
pub trait Persist: Serialize + DeserializeOwned {
    const KIND: &'static str;
}

impl Persist for FitResult {
    const KIND: &'static str = "fit_result";
}
impl Persist for StudyReport {
    const KIND: &'static str = "study_report";
}
impl Persist for DivergenceReport {
    const KIND: &'static str = "divergence_report";
}
impl Persist for ProfileGrid {
    const KIND: &'static str = "profile_grid";
}
impl Persist for ConvergenceMap {
    const KIND: &'static str = "convergence_map";
}
impl Persist for CvReport {
    const KIND: &'static str = "cv_report";
}
impl Persist for StandardErrors {
    const KIND: &'static str = "standard_errors";
}

#[derive(Serialize)]
struct EnvelopeOut<'a, T> {
    schema_version: u64,
    kind: &'a str,
    data: &'a T,
}

#[derive(Deserialize)]
struct Header {
    schema_version: u64,
    kind: String,
}

#[derive(Deserialize)]
struct EnvelopeIn<T> {
    data: T,
}

pub fn to_json<T: Persist>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&EnvelopeOut {
        schema_version: SCHEMA_VERSION,
        kind: T::KIND,
        data: value,
    })?)
}

pub fn from_json<T: Persist>(text: &str) -> Result<T> {
    let header: Header = serde_json::from_str(text)?;
    if header.schema_version != SCHEMA_VERSION {
        return Err(Error::SchemaVersion {
            found: header.schema_version,
            expected: SCHEMA_VERSION,
        });
    }
    if header.kind != T::KIND {
        return Err(Error::WrongKind {
            found: header.kind,
            expected: T::KIND.to_string(),
        });
    }
    Ok(serde_json::from_str::<EnvelopeIn<T>>(text)?.data)
}

pub fn persist_result<T: Persist>(value: &T, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(value)?)?;
    Ok(())
}

pub fn load_result<T: Persist>(path: impl AsRef<Path>) -> Result<T> {
    from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{Family, UnivariateObjective};
    use crate::swarm::{run_pso, SwarmConfig};

    fn fit() -> FitResult {
        let obj = UnivariateObjective::new(Family::Ee, vec![0.3, 1.7, 2.2, 0.9]);
        let cfg = SwarmConfig::positive(obj_box(), 10, 20, 4);
        run_pso(&obj, &cfg).unwrap()
    }

    fn obj_box() -> Vec<crate::swarm::Interval> {
        Family::Ee.space().default_init_box
    }

    #[test]
    fn fit_round_trip_is_exact() {
        let f = fit();
        let back: FitResult = from_json(&to_json(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("fit.json");
        let f = fit();
        persist_result(&f, &p).unwrap();
        assert_eq!(load_result::<FitResult>(&p).unwrap(), f);
    }

    #[test]
    fn version_and_kind_checked() {
        let text = to_json(&fit()).unwrap().replacen("\"schema_version\": 1", "\"schema_version\": 0", 1);
        assert!(matches!(from_json::<FitResult>(&text), Err(Error::SchemaVersion { found: 0, expected: 1 })));
        let text = to_json(&fit()).unwrap();
        assert!(matches!(from_json::<ProfileGrid>(&text), Err(Error::WrongKind { .. })));
        assert!(matches!(from_json::<FitResult>("{not json"), Err(Error::Json(_))));
    }
}
