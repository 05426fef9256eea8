use serde::{Deserialize, Serialize};

use crate::par::Execution;
use crate::{Error, Result};

/// A closed interval `[lo, hi]`; either end may be infinite. Infinite ends
/// are written as `null` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "open_end::lower")]
    pub lo: f64,
    #[serde(with = "open_end::upper")]
    pub hi: f64,
}

mod open_end {
    use serde::{Deserialize, Deserializer, Serializer};

    fn ser<S: Serializer>(v: f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_none()
        } else {
            s.serialize_f64(v)
        }
    }

    pub mod lower {
        use super::*;

        pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
            ser(*v, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
            Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NEG_INFINITY))
        }
    }

    pub mod upper {
        use super::*;

        pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
            ser(*v, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
            Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
        }
    }
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub const fn unbounded() -> Self {
        Self::new(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub const fn nonnegative() -> Self {
        Self::new(0.0, f64::INFINITY)
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InertiaSchedule {
    /// `1 - t/M`
    Linear,
    /// `1 - ln t / ln M`
    Logarithmic,
    Constant { w: f64 },
}

/// What happens to a coordinate that leaves `[L, U]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundPolicy {
    /// Redraw uniformly over the whole interval.
    RerandomizeFull,
    /// Redraw uniformly over the part of the interval within `lower_width` of
    /// `L` (below) or `upper_width` of `U` (above).
    RerandomizeNearEdge { lower_width: f64, upper_width: f64 },
    /// Leave the coordinate alone; the objective is expected to penalise it.
    NoneWithPenalty,
}

impl BoundPolicy {
    /// Positivity handling used for the lifetime models: negative coordinates
    /// are redrawn from `U[0, 0.5]`, and an upper bound (if any) from a band of
    /// width 100 below it.
    pub const fn near_edge_default() -> Self {
        BoundPolicy::RerandomizeNearEdge {
            lower_width: 0.5,
            upper_width: 100.0,
        }
    }

    pub fn edge_width(&self) -> Option<f64> {
        match self {
            BoundPolicy::RerandomizeNearEdge { lower_width, .. } => Some(*lower_width),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Topology {
    GlobalBest,
    /// Ring neighbourhood of `neighbors` nearest indices (plus the particle).
    LocalBest { neighbors: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VelocityInit {
    Zero,
    /// Uniform in `±(U - L)` per coordinate; needs finite bounds, otherwise the
    /// width of the initialisation box is used.
    Uniform,
}

/// Early stop when the global best has not improved by more than `tolerance`
/// over `window` iterations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stagnation {
    pub tolerance: f64,
    pub window: usize,
}

/// Every knob of a PSO run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwarmConfig {
    pub swarm_size: usize,
    pub max_iterations: usize,
    pub c1: f64,
    pub c2: f64,
    pub constriction: f64,
    pub inertia: InertiaSchedule,
    pub bounds: Vec<Interval>,
    pub bound_policy: BoundPolicy,
    pub topology: Topology,
    pub seed: u64,
    pub init_box: Vec<Interval>,
    /// One `u1`/`u2` draw per coordinate instead of one per particle.
    #[serde(default)]
    pub per_dimension_draws: bool,
    pub velocity_init: VelocityInit,
    /// Optional per-coordinate velocity clamp.
    #[serde(default)]
    pub v_max: Option<Vec<f64>>,
    #[serde(default)]
    pub stagnation: Option<Stagnation>,
    #[serde(default)]
    pub execution: Execution,
}

impl SwarmConfig {
    /// The classic setting: `c1 = c2 = 2`, `χ = 1`, linear inertia, zero
    /// initial velocity, global best.
    pub fn new(init_box: Vec<Interval>, swarm_size: usize, max_iterations: usize, seed: u64) -> Self {
        let d = init_box.len();
        Self {
            swarm_size,
            max_iterations,
            c1: 2.0,
            c2: 2.0,
            constriction: 1.0,
            inertia: InertiaSchedule::Linear,
            bounds: vec![Interval::unbounded(); d],
            bound_policy: BoundPolicy::NoneWithPenalty,
            topology: Topology::GlobalBest,
            seed,
            init_box,
            per_dimension_draws: false,
            velocity_init: VelocityInit::Zero,
            v_max: None,
            stagnation: None,
            execution: Execution::default(),
        }
    }

    /// Lifetime-model setting: positivity on every coordinate with the
    /// near-edge redraw policy.
    pub fn positive(init_box: Vec<Interval>, swarm_size: usize, max_iterations: usize, seed: u64) -> Self {
        let d = init_box.len();
        Self {
            bounds: vec![Interval::nonnegative(); d],
            bound_policy: BoundPolicy::near_edge_default(),
            ..Self::new(init_box, swarm_size, max_iterations, seed)
        }
    }

    /// Penalised-regression setting: `c1 = 0.5`, `c2 = 0.3`, constant `w = 0.9`.
    pub fn lasso(init_box: Vec<Interval>, swarm_size: usize, max_iterations: usize, seed: u64) -> Self {
        Self {
            c1: 0.5,
            c2: 0.3,
            inertia: InertiaSchedule::Constant { w: 0.9 },
            ..Self::new(init_box, swarm_size, max_iterations, seed)
        }
    }

    pub fn dimension(&self) -> usize {
        self.init_box.len()
    }

    pub fn with_bounds(mut self, bounds: Vec<Interval>, policy: BoundPolicy) -> Self {
        self.bounds = bounds;
        self.bound_policy = policy;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_topology(mut self, topology: Topology) -> Self {
        self.topology = topology;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.swarm_size < 2 {
            return bad(format!("swarm_size must be at least 2, got {}", self.swarm_size));
        }
        if self.max_iterations < 1 {
            return bad("max_iterations must be at least 1".into());
        }
        if !(self.c1 >= 0.0 && self.c2 >= 0.0) {
            return bad("c1 and c2 must be nonnegative".into());
        }
        if !(self.constriction > 0.0) {
            return bad("constriction must be positive".into());
        }
        let d = self.dimension();
        if d == 0 {
            return bad("at least one dimension is required".into());
        }
        if self.bounds.len() != d {
            return bad(format!("{} bounds for {} dimensions", self.bounds.len(), d));
        }
        for (j, (b, ib)) in self.bounds.iter().zip(&self.init_box).enumerate() {
            if !(b.lo < b.hi) {
                return bad(format!("bound {j}: lower {} not below upper {}", b.lo, b.hi));
            }
            if !(ib.lo.is_finite() && ib.hi.is_finite() && ib.lo <= ib.hi) {
                return bad(format!("init box {j}: [{}, {}] is not a finite interval", ib.lo, ib.hi));
            }
            if self.bound_policy == BoundPolicy::RerandomizeFull && !b.is_finite() {
                return bad(format!("bound {j}: full re-randomisation needs finite bounds"));
            }
        }
        match self.inertia {
            InertiaSchedule::Constant { w } if !w.is_finite() => return bad("inertia weight must be finite".into()),
            _ => {}
        }
        if let BoundPolicy::RerandomizeNearEdge { lower_width, upper_width } = self.bound_policy {
            if !(lower_width > 0.0 && upper_width > 0.0) {
                return bad("edge widths must be positive".into());
            }
        }
        if let Topology::LocalBest { neighbors } = self.topology {
            if neighbors < 1 || neighbors >= self.swarm_size {
                return bad(format!(
                    "local-best neighbour count must be in [1, {}), got {neighbors}",
                    self.swarm_size
                ));
            }
        }
        if let Some(v) = &self.v_max {
            if v.len() != d || v.iter().any(|&m| !(m > 0.0)) {
                return bad("v_max needs one positive entry per dimension".into());
            }
        }
        if let Some(s) = &self.stagnation {
            if s.window == 0 || !(s.tolerance >= 0.0) {
                return bad("stagnation window must be positive and tolerance nonnegative".into());
            }
        }
        Ok(())
    }
}
