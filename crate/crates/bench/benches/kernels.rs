use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use solvrep_bench::{extension, heisenberg, triangular};
use solvrep_core::classes::{modules_equivalent, r_class};
use solvrep_core::pbw::{bounded_submodule, highest_vectors, normal_order, AdaptedBasis, UeaElement};
use solvrep_core::polar::vergne_polarization;
use solvrep_core::InducedModule;

fn polarization(c: &mut Criterion) {
    let mut group = c.benchmark_group("vergne_polarization");
    for n in [3, 4] {
        let (fa, f) = triangular(n);
        group.bench_with_input(BenchmarkId::new("triangular", fa.dim()), &(fa, f), |b, (fa, f)| {
            b.iter(|| vergne_polarization(fa, f).unwrap())
        });
    }
    let (fa, f) = extension(6, 1);
    group.bench_function("extension/6", |b| b.iter(|| vergne_polarization(&fa, &f).unwrap()));
    group.finish();
}

fn classes(c: &mut Criterion) {
    let (fa, f) = triangular(4);
    c.bench_function("r_class/triangular/6", |b| b.iter(|| r_class(&fa, &f).unwrap()));
    let g = r_class(&fa, &f).unwrap().set().point().to_vec();
    let g = solvrep_core::Functional::new(g);
    c.bench_function("modules_equivalent/triangular/6", |b| b.iter(|| modules_equivalent(&fa, &f, &g).unwrap()));
}

fn straightening(c: &mut Criterion) {
    let (fa, _) = triangular(4);
    let basis = AdaptedBasis::standard(fa.algebra());
    let n = fa.dim();
    let word = UeaElement::word((0..n).rev().chain((0..n).rev()).collect());
    c.bench_function("normal_order/reversed/12", |b| b.iter(|| normal_order(&word, &basis).unwrap()));
}

fn modules(c: &mut Criterion) {
    let (fa, f) = heisenberg();
    c.bench_function("highest_vectors/heisenberg/D8", |b| {
        b.iter(|| {
            let m = InducedModule::vergne(&fa, &f).unwrap();
            highest_vectors(&m, 8).unwrap()
        })
    });
    let (fa, f) = extension(5, 3);
    c.bench_function("bounded_submodule/extension5/D4", |b| {
        b.iter(|| {
            let m = InducedModule::vergne(&fa, &f).unwrap();
            bounded_submodule(&m, &[m.cyclic()], 4).unwrap()
        })
    });
}

criterion_group!(benches, polarization, classes, straightening, modules);
criterion_main!(benches);
