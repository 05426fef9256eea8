use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use swarmfit::baseline::FisherOptions;
use swarmfit::data::Builtin;
use swarmfit::objectives::{Family, UnivariateObjective};
use swarmfit::par::Execution;
use swarmfit::simstudy::{run_comparison_study, SimDesign};
use swarmfit::swarm::{run_pso, Interval, SwarmConfig};

fn whole_run(c: &mut Criterion) {
    let obj = UnivariateObjective::new(Family::Wbxii, Builtin::AluminumCoupons.values().to_vec());
    let mut group = c.benchmark_group("wbxii_500x100");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        let cfg = SwarmConfig::positive(Family::Wbxii.space().default_init_box, 500, 100, 7).with_execution(exec);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &cfg, |b, cfg| {
            b.iter(|| run_pso(&obj, cfg).unwrap().best_fitness)
        });
    }
    group.finish();
}

fn replicates(c: &mut Criterion) {
    let design = SimDesign {
        n_per_sample: 200,
        replicates: 400,
        seed: 3,
        ..SimDesign::default()
    };
    let cfg = SwarmConfig::new(vec![Interval::new(-3.0, 3.0); 2], 40, 100, 1);
    let mut group = c.benchmark_group("logbinom_study_8");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| {
                run_comparison_study(&design, 8, &cfg, &FisherOptions::default(), exec)
                    .unwrap()
                    .replicates_examined
            })
        });
    }
    group.finish();
}

criterion_group!(benches, whole_run, replicates);
criterion_main!(benches);
