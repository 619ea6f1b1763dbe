use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use homquiver::auslander::{build_auslander, ext_table, gamma_homology_oracle};
use homquiver::cyclic::{hc_bicomplex_oracle, hc_closed_form};
use homquiver::hochschild::{hh_bar_oracle, hh_closed_form};
use homquiver::ktheory::{k0_product_oracle, product_formula};
use homquiver::{AlgebraPresentation, Field, HCQuery, HHQuery, IndecLabel, Quiver, SparseMatrix};

fn taft(n: usize) -> AlgebraPresentation {
    AlgebraPresentation::truncated(Quiver::crown(n).unwrap(), n, &Field::rationals())
}

fn hochschild(c: &mut Criterion) {
    let mut g = c.benchmark_group("hh");
    for n in [2, 3] {
        let q = HHQuery::new(taft(n), 4, 6);
        g.bench_with_input(BenchmarkId::new("closed", n), &q, |b, q| b.iter(|| hh_closed_form(black_box(q)).unwrap()));
        g.bench_with_input(BenchmarkId::new("oracle", n), &q, |b, q| b.iter(|| hh_bar_oracle(black_box(q)).unwrap()));
    }
    let q = HHQuery::new(AlgebraPresentation::truncated(Quiver::loops(2), 2, &Field::rationals()), 4, 6);
    g.bench_function("oracle/two-loops", |b| b.iter(|| hh_bar_oracle(black_box(&q)).unwrap()));
    g.finish();
}

fn cyclic(c: &mut Criterion) {
    let mut g = c.benchmark_group("hc");
    g.sample_size(10);
    for n in [2, 3] {
        let q = HCQuery::new(taft(n), 3);
        g.bench_with_input(BenchmarkId::new("closed", n), &q, |b, q| b.iter(|| hc_closed_form(black_box(q)).unwrap()));
        g.bench_with_input(BenchmarkId::new("oracle", n), &q, |b, q| b.iter(|| hc_bicomplex_oracle(black_box(q)).unwrap()));
    }
    g.finish();
}

fn auslander(c: &mut Criterion) {
    let mut g = c.benchmark_group("auslander");
    g.sample_size(10);
    for n in [2, 3, 4] {
        g.bench_with_input(BenchmarkId::new("build", n), &n, |b, &n| b.iter(|| build_auslander(black_box(n)).unwrap()));
    }
    let g3 = build_auslander(3).unwrap();
    g.bench_function("ext/3", |b| b.iter(|| ext_table(black_box(&g3)).unwrap()));
    let g2 = build_auslander(2).unwrap();
    g.bench_function("homology-oracle/2", |b| b.iter(|| gamma_homology_oracle(black_box(&g2), 2).unwrap()));
    g.finish();
}

fn grothendieck(c: &mut Criterion) {
    let mut g = c.benchmark_group("k0");
    let n = 4;
    let labels = IndecLabel::all(n);
    g.bench_function("formula/all-pairs-4", |b| {
        b.iter(|| {
            for &x in &labels {
                for &y in &labels {
                    black_box(product_formula(n, x, y));
                }
            }
        })
    });
    let (x, y) = (IndecLabel::new(0, 2), IndecLabel::new(1, 3));
    g.bench_function("oracle/one-pair-4", |b| b.iter(|| k0_product_oracle(black_box(x), black_box(y), n).unwrap()));
    g.finish();
}

fn linalg(c: &mut Criterion) {
    let f = Field::rationals();
    let size = 200;
    let m = SparseMatrix::from_triplets(
        &f,
        size,
        size,
        (0..size).flat_map(|i| {
            let f = f.clone();
            [(i, i, f.from_i64(2)), (i, (i * 7 + 3) % size, f.from_i64(-1)), (i, (i * 13 + 5) % size, f.from_i64(1))]
        }),
    );
    c.bench_function("rank/sparse-200", |b| b.iter(|| black_box(&m).rank()));
}

criterion_group!(benches, hochschild, cyclic, auslander, grothendieck, linalg);
criterion_main!(benches);
