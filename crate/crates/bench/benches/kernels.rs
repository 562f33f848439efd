use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cubesum_core::diophantine::{search_with, SearchOptions};
use cubesum_core::elliptic::{omega_sigma1, sigma1};
use cubesum_core::fibration::HeightContext;
use cubesum_core::modular::{eta_quotient, hecke_expand, lattice_sum};
use cubesum_core::pointcount::brute_count_surface;
use cubesum_core::{EtaQuotientSpec, NfElem, Omega};

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for bound in [1_000u64, 5_000] {
        g.bench_with_input(BenchmarkId::from_parameter(bound), &bound, |b, &bound| {
            b.iter(|| search_with(&SearchOptions::new(black_box(bound))).unwrap())
        });
    }
    g.finish();
}

fn q_expansions(c: &mut Criterion) {
    let spec = EtaQuotientSpec::weight_three_level_48();
    let mut g = c.benchmark_group("q-expansion");
    g.bench_function("eta 1000", |b| b.iter(|| eta_quotient(&spec, black_box(1000)).unwrap()));
    g.bench_function("hecke 1000", |b| b.iter(|| hecke_expand(black_box(1000))));
    g.sample_size(10);
    g.bench_function("lattice 300", |b| b.iter(|| lattice_sum(black_box(300)).unwrap()));
    g.finish();
}

fn point_counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute-count");
    g.sample_size(10);
    for (p, n) in [(13u64, 1u32), (101, 1), (7, 2)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{p}^{n}")), &(p, n), |b, &(p, n)| {
            b.iter(|| brute_count_surface(black_box(p), n).unwrap())
        });
    }
    g.finish();
}

fn sections(c: &mut Criterion) {
    let ctx = HeightContext::<NfElem<Omega>>::e_t();
    let (s, ws) = (sigma1(), omega_sigma1());
    let mut g = c.benchmark_group("sections");
    g.bench_function("3*s1 + 2*[w]s1", |b| {
        b.iter(|| {
            let e = &ctx.curve;
            e.add(&e.mul(3, &s).unwrap(), &e.mul(2, &ws).unwrap()).unwrap()
        })
    });
    g.bench_function("gram", |b| b.iter(|| ctx.gram(&[s.clone(), ws.clone()]).unwrap()));
    g.finish();
}

criterion_group!(benches, search, q_expansions, point_counts, sections);
criterion_main!(benches);
