//! The log-binomial simulation study and LASSO cross-validation.

mod comparison;
mod cv;
mod design;
mod map;

pub use comparison::{run_comparison_study, ReplicateRecord, StudyReport, StudySummary, BASELINE_INIT};
pub use cv::{cross_validate_rho, fold_assignment, CvReport};
pub use design::{generate_logbinom_sample, SimDesign, CALIBRATED_N};
pub use map::{convergence_map, ConvergenceMap, InitState};
