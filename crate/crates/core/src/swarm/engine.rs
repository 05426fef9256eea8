use rand::Rng;
use serde::{Deserialize, Serialize};

use super::config::{SwarmConfig, Topology, VelocityInit};
use super::update::{apply_bounds_in_place, inertia, step_velocity, uniform};
use crate::objectives::Objective;
use crate::par;
use crate::rng::{stream, substream};
use crate::{Error, Result};

/// Fitness assigned to any non-finite objective value: the most negative
/// finite double.
pub const PENALTY: f64 = f64::MIN;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FitnessCounter {
    pub evaluations: u64,
    pub nonfinite: u64,
}

#[inline]
fn absorb(value: f64) -> (f64, bool) {
    if value.is_finite() {
        (value, false)
    } else {
        (PENALTY, true)
    }
}

/// Evaluates the objective, mapping any non-finite result to [`PENALTY`].
pub fn evaluate_fitness<O: Objective + ?Sized>(objective: &O, x: &[f64], counter: &mut FitnessCounter) -> f64 {
    let (f, bad) = absorb(objective.evaluate(x));
    counter.evaluations += 1;
    counter.nonfinite += bad as u64;
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub iteration: usize,
    pub fitness: f64,
}

/// Outcome of a PSO run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub objective: String,
    pub param_names: Vec<String>,
    pub best_params: Vec<f64>,
    pub best_fitness: f64,
    /// Global-best fitness after initialisation (iteration 0) and after every
    /// iteration.
    pub trace: Vec<TracePoint>,
    pub config: SwarmConfig,
    pub evaluations: u64,
    pub nonfinite_evaluations: u64,
}

impl FitResult {
    pub fn iterations_run(&self) -> usize {
        self.trace.last().map_or(0, |p| p.iteration)
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.param_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.best_params[i])
    }
}

/// Snapshot handed to the observer after every iteration's best-update fold.
pub struct IterationView<'a> {
    pub iteration: usize,
    pub positions: Vec<&'a [f64]>,
    pub fitness: Vec<f64>,
    pub personal_best_fitness: Vec<f64>,
    pub global_best: &'a [f64],
    pub global_best_fitness: f64,
}

struct Particle {
    x: Vec<f64>,
    v: Vec<f64>,
    p: Vec<f64>,
    pf: f64,
    f: f64,
}

/// Runs PSO to maximise `objective`.
pub fn run_pso<O: Objective + ?Sized>(objective: &O, config: &SwarmConfig) -> Result<FitResult> {
    run_pso_observed(objective, config, |_| {})
}

/// [`run_pso`] with a callback invoked after initialisation and after every
/// iteration.
pub fn run_pso_observed<O, F>(objective: &O, config: &SwarmConfig, mut observer: F) -> Result<FitResult>
where
    O: Objective + ?Sized,
    F: FnMut(&IterationView<'_>),
{
    config.validate()?;
    let d = config.dimension();
    if objective.dimension() != d {
        return Err(Error::Config(format!(
            "objective `{}` has {} parameters but the swarm is configured for {d}",
            objective.name(),
            objective.dimension()
        )));
    }
    let n = config.swarm_size;
    let exec = config.execution;

    let init: Vec<(Particle, bool)> = par::map_indices(exec, n, |i| {
        let mut rng = substream(config.seed, &[stream::INIT_POSITION, i as u64]);
        let mut x: Vec<f64> = config
            .init_box
            .iter()
            .map(|b| uniform(&mut rng, b.lo, b.hi))
            .collect();
        apply_bounds_in_place(&mut x, &config.bounds, config.bound_policy, &mut rng);
        let v = match config.velocity_init {
            VelocityInit::Zero => vec![0.0; d],
            VelocityInit::Uniform => {
                let mut vr = substream(config.seed, &[stream::INIT_VELOCITY, i as u64]);
                config
                    .bounds
                    .iter()
                    .zip(&config.init_box)
                    .map(|(b, ib)| {
                        let w = if b.is_finite() { b.width() } else { ib.width() };
                        uniform(&mut vr, -w, w)
                    })
                    .collect()
            }
        };
        let (f, bad) = absorb(objective.evaluate(&x));
        (
            Particle {
                p: x.clone(),
                x,
                v,
                pf: f,
                f,
            },
            bad,
        )
    });
    let mut counter = FitnessCounter {
        evaluations: n as u64,
        nonfinite: init.iter().filter(|(_, b)| *b).count() as u64,
    };
    let mut swarm: Vec<Particle> = init.into_iter().map(|(p, _)| p).collect();

    let mut best = 0;
    for (i, p) in swarm.iter().enumerate().skip(1) {
        if p.pf > swarm[best].pf {
            best = i;
        }
    }
    let mut g = swarm[best].p.clone();
    let mut gf = swarm[best].pf;
    let mut trace = vec![TracePoint {
        iteration: 0,
        fitness: gf,
    }];
    notify(&mut observer, 0, &swarm, &g, gf);

    let m = config.max_iterations;
    for t in 1..=m {
        let phi = inertia(t, m, config.inertia)?;
        let attractors = neighbourhood_bests(&swarm, config.topology);

        let outcomes: Vec<bool> = par::map_mut(exec, &mut swarm, |i, part| {
            let mut rng = substream(config.seed, &[stream::STEP, t as u64, i as u64]);
            let target: &[f64] = match &attractors {
                Some(a) => &a[i],
                None => &g,
            };
            if config.per_dimension_draws {
                step_velocity(&mut part.v, &part.x, &part.p, target, phi, config.c1, config.c2, config.constriction, |_| {
                    (rng.random(), rng.random())
                });
            } else {
                let (u1, u2): (f64, f64) = (rng.random(), rng.random());
                step_velocity(&mut part.v, &part.x, &part.p, target, phi, config.c1, config.c2, config.constriction, |_| {
                    (u1, u2)
                });
            }
            if let Some(vmax) = &config.v_max {
                for (vj, &mj) in part.v.iter_mut().zip(vmax) {
                    *vj = vj.clamp(-mj, mj);
                }
            }
            for (xj, vj) in part.x.iter_mut().zip(&part.v) {
                *xj += vj;
            }
            apply_bounds_in_place(&mut part.x, &config.bounds, config.bound_policy, &mut rng);
            let (f, bad) = absorb(objective.evaluate(&part.x));
            part.f = f;
            bad
        });
        counter.evaluations += n as u64;
        counter.nonfinite += outcomes.iter().filter(|&&b| b).count() as u64;

        // Deterministic fold in index order; ties keep the incumbent.
        for part in swarm.iter_mut() {
            if part.f > part.pf {
                part.pf = part.f;
                part.p.clone_from(&part.x);
            }
            if part.pf > gf {
                gf = part.pf;
                g.clone_from(&part.p);
            }
        }
        trace.push(TracePoint {
            iteration: t,
            fitness: gf,
        });
        notify(&mut observer, t, &swarm, &g, gf);

        if let Some(s) = config.stagnation {
            if t >= s.window && gf - trace[t - s.window].fitness <= s.tolerance {
                break;
            }
        }
    }

    Ok(FitResult {
        objective: objective.name().to_string(),
        param_names: objective.space().names.clone(),
        best_params: g,
        best_fitness: gf,
        trace,
        config: config.clone(),
        evaluations: counter.evaluations,
        nonfinite_evaluations: counter.nonfinite,
    })
}

fn notify<F: FnMut(&IterationView<'_>)>(observer: &mut F, t: usize, swarm: &[Particle], g: &[f64], gf: f64) {
    observer(&IterationView {
        iteration: t,
        positions: swarm.iter().map(|p| p.x.as_slice()).collect(),
        fitness: swarm.iter().map(|p| p.f).collect(),
        personal_best_fitness: swarm.iter().map(|p| p.pf).collect(),
        global_best: g,
        global_best_fitness: gf,
    });
}

/// Ring-neighbourhood attractors for local-best PSO; `None` for global best.
fn neighbourhood_bests(swarm: &[Particle], topology: Topology) -> Option<Vec<Vec<f64>>> {
    let Topology::LocalBest { neighbors } = topology else {
        return None;
    };
    let n = swarm.len();
    let left = neighbors / 2;
    let right = neighbors - left;
    Some(
        (0..n)
            .map(|i| {
                let mut best = i;
                for off in (1..=left).map(|o| n - o).chain(1..=right) {
                    let j = (i + off) % n;
                    if swarm[j].pf > swarm[best].pf {
                        best = j;
                    }
                }
                swarm[best].p.clone()
            })
            .collect(),
    )
}
