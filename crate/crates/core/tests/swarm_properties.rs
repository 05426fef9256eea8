use proptest::prelude::*;

use swarmfit::objectives::{Family, FnObjective, ParamSpace, UnivariateObjective};
use swarmfit::par::Execution;
use swarmfit::swarm::{run_pso, run_pso_observed, BoundPolicy, Interval, SwarmConfig, Topology};

fn sphere() -> FnObjective<impl Fn(&[f64]) -> f64 + Send + Sync> {
    let space = ParamSpace::real_box(&["a", "b", "c"], -5.0, 5.0);
    FnObjective::new("sphere", space, |x: &[f64]| -x.iter().map(|v| (v - 1.0) * (v - 1.0)).sum::<f64>())
}

fn cfg(seed: u64, n: usize, iters: usize) -> SwarmConfig {
    SwarmConfig::new(vec![Interval::new(-5.0, 5.0); 3], n, iters, seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trace_is_monotone(seed in any::<u64>(), n in 2usize..30, iters in 1usize..60) {
        let fit = run_pso(&sphere(), &cfg(seed, n, iters)).unwrap();
        prop_assert_eq!(fit.trace.len(), iters + 1);
        for w in fit.trace.windows(2) {
            prop_assert!(w[1].fitness >= w[0].fitness);
        }
        prop_assert_eq!(fit.trace.last().unwrap().fitness, fit.best_fitness);
    }

    #[test]
    fn seed_determines_result(seed in any::<u64>(), local in any::<bool>()) {
        let mut c = cfg(seed, 12, 40);
        if local {
            c = c.with_topology(Topology::LocalBest { neighbors: 2 });
        }
        let a = run_pso(&sphere(), &c.clone().with_execution(Execution::Sequential)).unwrap();
        let b = run_pso(&sphere(), &c.with_execution(Execution::Parallel)).unwrap();
        prop_assert_eq!(a.best_params, b.best_params);
        prop_assert_eq!(a.trace, b.trace);
    }

    #[test]
    fn positions_respect_bounds(seed in any::<u64>(), full in any::<bool>()) {
        let bounds = vec![Interval::new(0.0, 2.0); 3];
        let policy = if full { BoundPolicy::RerandomizeFull } else { BoundPolicy::near_edge_default() };
        let c = cfg(seed, 15, 30).with_bounds(bounds.clone(), policy);
        let mut ok = true;
        run_pso_observed(&sphere(), &c, |view| {
            for x in &view.positions {
                ok &= x.iter().zip(&bounds).all(|(v, b)| b.contains(*v));
            }
        })
        .unwrap();
        prop_assert!(ok);
    }
}

#[test]
fn penalised_region_never_wins() {
    // Half of the box is non-finite; the best must come from the other half.
    let space = ParamSpace::real_box(&["a"], -3.0, 3.0);
    let obj = FnObjective::new("half", space, |x: &[f64]| if x[0] < 0.0 { f64::NAN } else { -x[0] });
    let fit = run_pso(&obj, &SwarmConfig::new(vec![Interval::new(-3.0, 3.0)], 20, 50, 4)).unwrap();
    assert!(fit.best_params[0] >= 0.0 && fit.best_fitness.is_finite());
    assert!(fit.nonfinite_evaluations > 0);
}

#[test]
fn lifetime_fit_is_reproducible() {
    let x = swarmfit::data::Builtin::GlassFibers.values().to_vec();
    let obj = UnivariateObjective::new(Family::Ee, x);
    let c = SwarmConfig::positive(Family::Ee.space().default_init_box, 30, 50, 11);
    assert_eq!(run_pso(&obj, &c).unwrap(), run_pso(&obj, &c).unwrap());
}
