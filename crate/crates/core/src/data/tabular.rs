use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use super::{Dataset, DatasetValues, Source};
use crate::objectives::RegressionData;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum CsvSchema {
    /// One column of observations; the first column when `column` is `None`.
    Univariate { column: Option<String> },
    Regression {
        response: String,
        /// Binary responses are assumed when absent.
        trials: Option<String>,
        covariates: Vec<String>,
        intercept: bool,
    },
}

impl CsvSchema {
    pub fn univariate() -> Self {
        CsvSchema::Univariate { column: None }
    }
}

pub fn load_csv(path: impl AsRef<Path>, schema: &CsvSchema) -> Result<Dataset> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    let name = path.file_stem().map_or_else(|| "data".into(), |s| s.to_string_lossy().into_owned());
    let mut ds = parse_csv(file, path, schema)?;
    ds.name = name;
    ds.source = Source::File(path.to_path_buf());
    Ok(ds)
}

/// Parses CSV text with a header row. `label` only appears in error messages.
pub fn parse_csv<R: Read>(reader: R, label: impl AsRef<Path>, schema: &CsvSchema) -> Result<Dataset> {
    let label: PathBuf = label.as_ref().to_path_buf();
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let parse_err = |row: usize, message: String| Error::Parse {
        path: label.clone(),
        row,
        message,
    };
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| parse_err(1, format!("missing column `{name}`")))
    };
    let wanted: Vec<usize> = match schema {
        CsvSchema::Univariate { column: Some(c) } => vec![col(c)?],
        CsvSchema::Univariate { column: None } => {
            if headers.is_empty() {
                return Err(Error::Domain(format!("{}: empty file", label.display())));
            }
            vec![0]
        }
        CsvSchema::Regression {
            response,
            trials,
            covariates,
            ..
        } => {
            let mut v = vec![col(response)?];
            if let Some(t) = trials {
                v.push(col(t)?);
            }
            for c in covariates {
                v.push(col(c)?);
            }
            v
        }
    };

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        // header is row 1
        let row = k + 2;
        let rec = rec?;
        let mut vals = Vec::with_capacity(wanted.len());
        for &c in &wanted {
            let cell = rec.get(c).ok_or_else(|| parse_err(row, format!("missing column `{}`", &headers[c])))?;
            let v: f64 = cell
                .parse()
                .map_err(|_| parse_err(row, format!("column `{}`: `{cell}` is not a number", &headers[c])))?;
            if !v.is_finite() {
                return Err(parse_err(row, format!("column `{}`: non-finite value", &headers[c])));
            }
            vals.push(v);
        }
        rows.push(vals);
    }
    if rows.is_empty() {
        return Err(Error::Domain(format!("{}: no data rows", label.display())));
    }

    let values = match schema {
        CsvSchema::Univariate { .. } => DatasetValues::Univariate(rows.into_iter().map(|r| r[0]).collect()),
        CsvSchema::Regression {
            trials,
            covariates,
            intercept,
            ..
        } => {
            let off = 1 + trials.is_some() as usize;
            let y: Vec<f64> = rows.iter().map(|r| r[0]).collect();
            let n: Vec<f64> = if trials.is_some() {
                rows.iter().map(|r| r[1]).collect()
            } else {
                if let Some(i) = y.iter().position(|&v| v != 0.0 && v != 1.0) {
                    return Err(parse_err(i + 2, format!("response {} is not 0/1 and no trials column was given", y[i])));
                }
                vec![1.0; y.len()]
            };
            let design: Vec<Vec<f64>> = rows
                .iter()
                .map(|r| {
                    let mut x = Vec::with_capacity(covariates.len() + 1);
                    if *intercept {
                        x.push(1.0);
                    }
                    x.extend_from_slice(&r[off..]);
                    x
                })
                .collect();
            let mut names: Vec<String> = Vec::new();
            if *intercept {
                names.push("intercept".into());
            }
            names.extend(covariates.iter().cloned());
            DatasetValues::Regression(RegressionData::new(y, n, design)?.with_names(names))
        }
    };
    Ok(Dataset {
        name: "data".into(),
        source: Source::File(label),
        values,
    })
}

/// Writes a one-column CSV with the given header.
pub fn write_univariate_csv<W: Write>(w: W, header: &str, values: &[f64]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([header])?;
    for v in values {
        out.write_record([v.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{builtin_dataset, reference};

    #[test]
    fn minimal_univariate() {
        let d = parse_csv("x\n1\n2\n3\n".as_bytes(), "mem", &CsvSchema::univariate()).unwrap();
        assert_eq!(d.univariate().unwrap(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn non_numeric_cell_is_row_addressed() {
        let err = parse_csv("x\n1\nabc\n".as_bytes(), "mem", &CsvSchema::univariate()).unwrap_err();
        assert!(matches!(err, Error::Parse { row: 3, .. }), "{err}");
        let err = parse_csv("x\n1\nNaN\n".as_bytes(), "mem", &CsvSchema::univariate()).unwrap_err();
        assert!(matches!(err, Error::Parse { row: 3, .. }), "{err}");
    }

    #[test]
    fn empty_is_domain_error() {
        assert!(matches!(parse_csv("x\n".as_bytes(), "mem", &CsvSchema::univariate()), Err(Error::Domain(_))));
    }

    fn regression(trials: Option<&str>) -> CsvSchema {
        CsvSchema::Regression {
            response: "y".into(),
            trials: trials.map(String::from),
            covariates: vec!["age".into()],
            intercept: true,
        }
    }

    #[test]
    fn regression_schema() {
        let d = parse_csv("age,y\n30,1\n40,0\n".as_bytes(), "mem", &regression(None)).unwrap();
        let r = d.regression().unwrap();
        assert_eq!(r.row(1), &[1.0, 40.0]);
        assert_eq!(r.names(), &["intercept".to_string(), "age".to_string()]);
        let err = parse_csv("age,y\n30,2\n".as_bytes(), "mem", &regression(None)).unwrap_err();
        assert!(matches!(err, Error::Parse { row: 2, .. }));
        let d = parse_csv("age,y,n\n30,2,5\n".as_bytes(), "mem", &regression(Some("n"))).unwrap();
        assert_eq!(d.regression().unwrap().trials(), &[5.0]);
        let err = parse_csv("age\n30\n".as_bytes(), "mem", &regression(None)).unwrap_err();
        assert!(err.to_string().contains("missing column `y`"));
    }

    #[test]
    fn builtin_round_trip() {
        let g = builtin_dataset("glass_fibers").unwrap();
        let mut buf = Vec::new();
        write_univariate_csv(&mut buf, "strength", g.univariate().unwrap()).unwrap();
        let back = parse_csv(buf.as_slice(), "mem", &CsvSchema::univariate()).unwrap();
        assert_eq!(back.univariate().unwrap(), g.univariate().unwrap());
    }

    #[test]
    fn reference_fixtures() {
        let g = parse_csv(reference::GLASS_FIBERS_63_CSV.as_bytes(), "g", &CsvSchema::univariate()).unwrap();
        assert_eq!(g.n(), 63);
        let a = parse_csv(reference::ALUMINUM_COUPONS_101_CSV.as_bytes(), "a", &CsvSchema::univariate()).unwrap();
        assert_eq!(a.n(), 101);
    }
}
