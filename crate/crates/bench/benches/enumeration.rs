use brauer_core::brauer::{self, DEFAULT_MAX_SUBALCOVES};
use brauer_core::census::{self, GroupConfig};
use brauer_core::{AffineDatum, FrobeniusConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn subalcoves(c: &mut Criterion) {
    let mut group = c.benchmark_group("subalcoves");
    group.sample_size(10);
    for (label, q) in [("A2", 7), ("B3", 5), ("D4", 3), ("E6", 2)] {
        let aff = AffineDatum::from_label(label).unwrap();
        let frob = FrobeniusConfig::split(&aff, q).unwrap();
        group.bench_with_input(BenchmarkId::new(label, q), &q, |b, _| {
            b.iter(|| brauer::enumerate_subalcoves(&aff, &frob, DEFAULT_MAX_SUBALCOVES).unwrap())
        });
    }
    group.finish();
}

fn census_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for (label, q, twisted) in [("A3", 5, false), ("C3", 3, false), ("E6", 2, true)] {
        let config = GroupConfig::from_parts(label, "ad", q, twisted, false).unwrap();
        group.bench_with_input(BenchmarkId::new(label, q), &q, |b, _| {
            b.iter(|| census::run(&config, DEFAULT_MAX_SUBALCOVES).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, subalcoves, census_run);
criterion_main!(benches);
