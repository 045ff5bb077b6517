use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use subatomic_bench::{element, sequences};
use subatomic_core::checker::classify_domain;
use subatomic_core::domains::{almost_atomic_witness_search, is_irreducible, sample_universe};
use subatomic_core::monoids::seq_atom_characterization;
use subatomic_core::{Domain, DomainId, SearchBounds};

fn irreducibility(c: &mut Criterion) {
    let b = SearchBounds::default();
    let (d24, f24) = element(DomainId::D24, "3 + 2*x^(1/2) + -5*x^(1)");
    c.bench_function("d24 irreducible", |bn| bn.iter(|| is_irreducible(&d24, black_box(&f24), &b).unwrap()));
    let (d23, f23) = element(DomainId::D23, "2 + 1/3*x^(1) + 5/2*x^(3)");
    c.bench_function("d23 irreducible", |bn| bn.iter(|| is_irreducible(&d23, black_box(&f23), &b).unwrap()));
}

fn witnesses(c: &mut Criterion) {
    let b = SearchBounds::default();
    let (d8, f8) = element(DomainId::D8, "3/4*x^(2) + 5*x^(4)");
    c.bench_function("d8 almost atomic witness", |bn| bn.iter(|| almost_atomic_witness_search(&d8, black_box(&f8), &b).unwrap()));
    let seqs = sequences();
    c.bench_function("sequence atom closed form", |bn| {
        bn.iter(|| seqs.iter().filter(|t| seq_atom_characterization(t).unwrap_or(false)).count())
    });
}

fn classification(c: &mut Criterion) {
    let b = SearchBounds::default();
    let d = Domain::new(DomainId::D23);
    let samples = sample_universe(&d, 0, &b);
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    g.bench_function("d23", |bn| bn.iter(|| classify_domain(&d, &b, black_box(&samples)).unwrap()));
    g.finish();
}

criterion_group!(benches, irreducibility, witnesses, classification);
criterion_main!(benches);
