use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use slls_core::locomotion::{caterpillar, serpentine};
use slls_core::memory::VisibleList;
use slls_core::optimizer::{run, SllsConfig};
use slls_core::problems::make_problem;
use slls_core::space::{SearchSpace, Spot};
use slls_core::Rng;

fn locomotion(c: &mut Criterion) {
    let space = SearchSpace::uniform(30, -100.0, 100.0).unwrap();
    let start = vec![3.0; 30];
    let target = vec![-7.0; 30];
    let mut rng = Rng::new(1);
    c.bench_function("serpentine d30 n_hc2", |b| {
        b.iter(|| serpentine(black_box(&start), &space, 40.0, 2, &mut rng).unwrap())
    });
    c.bench_function("caterpillar d30 n_cm4", |b| {
        b.iter(|| caterpillar(black_box(&start), black_box(&target), 0.5, 4).unwrap())
    });
}

fn visible_list(c: &mut Criterion) {
    let mut rng = Rng::new(2);
    let values: Vec<f64> = (0..1024).map(|_| rng.uniform()).collect();
    c.bench_function("visible list 1024 inserts cap5", |b| {
        b.iter_batched(
            || VisibleList::new(5).unwrap(),
            |mut list| {
                for (i, &f) in values.iter().enumerate() {
                    list.insert(Spot::evaluated(vec![i as f64], f)).unwrap();
                }
                list
            },
            BatchSize::SmallInput,
        )
    });
}

fn full_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("run");
    group.sample_size(10);
    for (name, dim) in [("f1", 30), ("f10", 30)] {
        let problem = make_problem(name, Some(dim)).unwrap();
        let cfg = SllsConfig {
            max_iter: 200,
            ..SllsConfig::default()
        };
        group.bench_function(format!("{name} d{dim} T200"), |b| {
            b.iter(|| run(&cfg, &problem, None).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, locomotion, visible_list, full_run);
criterion_main!(benches);
