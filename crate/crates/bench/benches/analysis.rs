use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use linprod::kernel::rat;
use linprod::{iota_zero_count, phi_sequence, pq_inequality_check, scan_sign_pattern, JacobiParams, ScanMode};

fn scans(c: &mut Criterion) {
    let p = JacobiParams::new(rat(-33, 100), rat(-87, 100)).unwrap();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for mode in [ScanMode::JacobiNonneg, ScanMode::GenChebAll, ScanMode::Oscillation] {
        group.bench_function(mode.as_str(), |b| b.iter(|| scan_sign_pattern(black_box(&p), 8, mode)));
    }
    group.finish();
}

fn proof_machinery(c: &mut Criterion) {
    let p = JacobiParams::new(rat(-33, 100), rat(-87, 100)).unwrap();
    c.bench_function("pq_inequality/m8", |b| b.iter(|| pq_inequality_check(black_box(&p), 8, 2).unwrap()));
    c.bench_function("phi_sequence/m8", |b| b.iter(|| phi_sequence(black_box(&p), 8, 2).unwrap()));
    let q = JacobiParams::new(rat(-81, 200), rat(-181, 200)).unwrap();
    c.bench_function("iota_zero_count/m12", |b| b.iter(|| iota_zero_count(black_box(&q), 12, 3).unwrap()));
}

criterion_group!(benches, scans, proof_machinery);
criterion_main!(benches);
