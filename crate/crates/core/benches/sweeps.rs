use criterion::{black_box, criterion_group, criterion_main, Criterion};
use partheta::asympt::{table1, table1_sequential};
use partheta::identities::{verify, IdentityCase, IdentityKind};
use partheta::par::{par_map, seq_map};
use partheta::quad::QuadConfig;
use partheta::C64;

fn verify_grid() -> Vec<IdentityCase> {
    let mut jobs = Vec::new();
    for a in [0.25, 0.5, 1.0, 2.0, 4.0] {
        for z in [0.5, 1.0, 2.0] {
            jobs.push(IdentityCase::new(IdentityKind::Erf2, a).with_z(C64::new(z, 0.0)));
        }
    }
    jobs
}

fn table(c: &mut Criterion) {
    let cfg = QuadConfig::default();
    let ks: Vec<u32> = (1..=10).collect();
    let alphas = [1.5, 2.378, 9361.79];
    let mut g = c.benchmark_group("table1");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| table1(black_box(&ks), &alphas, &cfg).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| table1_sequential(black_box(&ks), &alphas, &cfg).unwrap())
    });
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let jobs = verify_grid();
    let mut g = c.benchmark_group("verify_grid");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| par_map(black_box(&jobs), |j| verify(j).unwrap().passed))
    });
    g.bench_function("sequential", |b| {
        b.iter(|| seq_map(black_box(&jobs), |j| verify(j).unwrap().passed))
    });
    g.finish();
}

criterion_group!(benches, table, sweep);
criterion_main!(benches);
