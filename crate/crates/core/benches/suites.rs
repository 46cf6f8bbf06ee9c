//! Sequential against parallel execution of the law suites.
//!
//! Without the `parallel` feature both variants run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ifas::check::{self, Config};
use ifas::par::Exec;
use ifas::spans::QFlavor;
use ifas::Kind;

fn config(exec: Exec, max_size: usize, trials: usize) -> Config {
    Config {
        exec,
        seed: 1,
        trials,
        max_size,
    }
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        let name = if exec == Exec::Sequential { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::new("category", name), &exec, |b, &exec| {
            b.iter(|| check::category(&config(exec, 2, 500), Kind::Ifas).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("star", name), &exec, |b, &exec| {
            b.iter(|| check::star(&config(exec, 2, 200)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("prop", name), &exec, |b, &exec| {
            b.iter(|| check::prop(&config(exec, 1, 500), QFlavor::Q).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
