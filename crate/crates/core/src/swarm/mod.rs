//! Particle swarm optimization engine.

mod config;
mod engine;
mod recast;
mod update;

pub use config::{
    BoundPolicy, InertiaSchedule, Interval, Stagnation, SwarmConfig, Topology, VelocityInit,
};
pub use engine::{
    evaluate_fitness, run_pso, run_pso_observed, FitResult, FitnessCounter, IterationView, TracePoint,
    PENALTY,
};
pub use recast::{recast_config, InitOverride};
pub use update::{apply_bounds, inertia, position_update, velocity_update};
