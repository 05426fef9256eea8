//! Derivative-free maximum likelihood estimation built around particle swarm
//! optimization.
//!
//! The crate is organised by role:
//!
//! * [`swarm`] – the PSO engine (global/local best, inertia schedules, bound
//!   handling, recast re-initialisation).
//! * [`objectives`] – log-likelihood families exposed as pure objectives.
//! * [`baseline`] – classical optimizers used as comparators and oracles.
//! * [`diagnostics`] – identifiability probes and goodness-of-fit tools.
//! * [`simstudy`] – the log-binomial simulation study and LASSO cross-validation.
//! * [`data`] – built-in datasets, CSV ingestion and JSON persistence.
//! * [`cli`] – the command-line front end.

pub mod baseline;
pub mod cli;
pub mod data;
pub mod diagnostics;
mod error;
pub mod objectives;
pub mod par;
pub mod rng;
pub mod simstudy;
pub mod swarm;

pub use error::{Error, Result};
pub use objectives::{Objective, ParamSpace};
pub use swarm::{run_pso, FitResult, SwarmConfig};
