//! Datasets embedded exactly as printed in the supplementary listing.

use serde::{Deserialize, Serialize};

use super::{Dataset, DatasetValues, Source};
use crate::{Error, Result};

pub const GLASS_FIBERS: [f64; 57] = [
    0.55, 0.74, 0.77, 0.81, 0.84, 0.93, 1.04, 1.11, 1.13, 1.24, 1.27, 1.28, 1.29, 1.30, 1.36,
    1.39, 1.42, 1.48, 1.49, 1.50, 1.50, 1.52, 1.53, 1.54, 1.55, 1.55, 1.58, 1.59, 1.60, 1.61,
    1.61, 1.61, 1.61, 1.62, 1.62, 1.63, 1.64, 1.66, 1.66, 1.66, 1.67, 1.68, 1.68, 1.69, 1.70,
    1.73, 1.76, 1.77, 1.78, 1.81, 1.82, 1.84, 1.84, 1.89, 2.00, 2.01, 2.24,
];

pub const ALUMINUM_COUPONS: [f64; 99] = [
    70.0, 90.0, 96.0, 97.0, 99.0, 100.0, 103.0, 104.0, 104.0, 105.0, 107.0, 108.0, 108.0, 108.0,
    109.0, 109.0, 112.0, 112.0, 113.0, 114.0, 114.0, 114.0, 116.0, 119.0, 120.0, 120.0, 120.0,
    121.0, 121.0, 123.0, 124.0, 124.0, 124.0, 124.0, 124.0, 128.0, 128.0, 129.0, 129.0, 130.0,
    130.0, 130.0, 131.0, 131.0, 131.0, 131.0, 131.0, 132.0, 132.0, 133.0, 134.0, 134.0, 134.0,
    134.0, 134.0, 136.0, 136.0, 137.0, 138.0, 138.0, 138.0, 139.0, 139.0, 141.0, 141.0, 142.0,
    142.0, 142.0, 142.0, 142.0, 142.0, 144.0, 144.0, 145.0, 146.0, 148.0, 149.0, 151.0, 151.0,
    152.0, 155.0, 156.0, 157.0, 157.0, 157.0, 157.0, 158.0, 159.0, 162.0, 163.0, 163.0, 164.0,
    166.0, 166.0, 168.0, 170.0, 174.0, 196.0, 212.0,
];

pub const COVID19: [f64; 32] = [
    0.0557, 0.0559, 0.0617, 0.0649, 0.0683, 0.0709, 0.0711, 0.0736, 0.0737, 0.0739, 0.0741,
    0.0743, 0.0776, 0.0782, 0.0804, 0.0808, 0.0815, 0.0818, 0.0819, 0.0840, 0.0850, 0.0864,
    0.0867, 0.0869, 0.0901, 0.0904, 0.0907, 0.0914, 0.0943, 0.0946, 0.1009, 0.1134,
];

pub const CARBON_FIBERS: [f64; 100] = [
    3.7, 3.11, 4.42, 3.28, 3.75, 2.96, 3.39, 3.31, 3.15, 2.81, 1.41, 2.76, 3.19, 1.59, 2.17,
    3.51, 1.84, 1.61, 1.57, 1.89, 2.74, 3.27, 2.41, 3.09, 2.43, 2.53, 2.81, 3.31, 2.35, 2.77,
    0.39, 2.79, 1.08, 2.88, 2.73, 2.85, 2.55, 2.17, 2.97, 3.68, 2.03, 2.82, 2.50, 1.47, 3.22,
    2.83, 1.36, 1.84, 5.56, 1.12, 3.60, 3.11, 1.69, 4.90, 3.39, 1.59, 1.73, 1.71, 1.18, 4.38,
    2.68, 4.91, 1.57, 2.00, 2.87, 3.19, 1.87, 2.95, 0.81, 1.22, 5.08, 1.69, 3.15, 2.97, 2.93,
    3.33, 2.48, 1.25, 2.48, 2.03, 3.22, 2.55, 3.56, 2.38, 0.85, 1.80, 2.12, 3.65, 1.17, 2.17,
    2.67, 4.20, 3.68, 4.70, 2.56, 2.59, 1.61, 2.05, 1.92, 0.98,
];

pub const BALL_BEARINGS: [f64; 23] = [
    17.88, 28.0, 92.0, 33.0, 41.52, 42.12, 45.60, 48.4, 51.84, 51.96, 54.12, 55.56, 67.8, 68.64,
    68.88, 84.12, 93.12, 98.64, 105.12, 105.84, 127.92, 128.04, 173.4,
];

/// The bearings listing with the printed `28, 92` read as the single value 28.92.
pub const BALL_BEARINGS_CORRECTED: [f64; 22] = [
    17.88, 28.92, 33.0, 41.52, 42.12, 45.60, 48.4, 51.84, 51.96, 54.12, 55.56, 67.8, 68.64, 68.88,
    84.12, 93.12, 98.64, 105.12, 105.84, 127.92, 128.04, 173.4,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    GlassFibers,
    AluminumCoupons,
    Covid19,
    CarbonFibers,
    BallBearings,
    BallBearingsCorrected,
}

impl Builtin {
    pub const ALL: [Builtin; 6] = [
        Builtin::GlassFibers,
        Builtin::AluminumCoupons,
        Builtin::Covid19,
        Builtin::CarbonFibers,
        Builtin::BallBearings,
        Builtin::BallBearingsCorrected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::GlassFibers => "glass_fibers",
            Builtin::AluminumCoupons => "aluminum_coupons",
            Builtin::Covid19 => "covid19",
            Builtin::CarbonFibers => "carbon_fibers",
            Builtin::BallBearings => "ball_bearings",
            Builtin::BallBearingsCorrected => "ball_bearings_corrected",
        }
    }

    pub fn values(self) -> &'static [f64] {
        match self {
            Builtin::GlassFibers => &GLASS_FIBERS,
            Builtin::AluminumCoupons => &ALUMINUM_COUPONS,
            Builtin::Covid19 => &COVID19,
            Builtin::CarbonFibers => &CARBON_FIBERS,
            Builtin::BallBearings => &BALL_BEARINGS,
            Builtin::BallBearingsCorrected => &BALL_BEARINGS_CORRECTED,
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|b| b.name() == name).ok_or_else(|| Error::UnknownDataset {
            name: name.to_string(),
            valid: Self::ALL.map(Builtin::name).join(", "),
        })
    }
}

pub fn builtin_dataset(name: &str) -> Result<Dataset> {
    let b = Builtin::from_name(name)?;
    Ok(Dataset {
        name: b.name().to_string(),
        source: Source::Builtin,
        values: DatasetValues::Univariate(b.values().to_vec()),
    })
}
