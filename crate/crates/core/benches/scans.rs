use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hirano_core::census::{
    run_census_with, verify_theorem, CensusOptions, TheoremId, VerifyOptions,
};
use hirano_core::par::Workers;
use hirano_core::RingSpec;

fn m2(n: u64) -> RingSpec {
    RingSpec::matrix(RingSpec::modular(n).unwrap(), 2).unwrap()
}

const MODES: [(&str, Workers); 2] = [
    ("sequential", Workers::Fixed(1)),
    ("parallel", Workers::Auto),
];

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census_m2_z5");
    g.sample_size(10);
    let ring = m2(5);
    for (name, workers) in MODES {
        let opts = CensusOptions {
            workers,
            ..Default::default()
        };
        g.bench_function(name, |b| {
            b.iter(|| run_census_with(black_box(&ring), &opts).unwrap())
        });
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_5_1_m2_z2");
    g.sample_size(10);
    let ring = m2(2);
    for (name, workers) in MODES {
        let opts = VerifyOptions {
            workers,
            ..Default::default()
        };
        g.bench_function(name, |b| {
            b.iter(|| verify_theorem(TheoremId::T5_1, black_box(&ring), &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, census, verify);
criterion_main!(benches);
