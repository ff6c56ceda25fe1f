use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use octoplane::jordan::veronese_to_jordan;
use octoplane::lie::{derivations_of_algebra, jordan_derivations, killing_and_identify, triality_algebra};
use octoplane::linalg::{int, LinearSystem, Strategy};
use octoplane::plane::run_axioms;
use octoplane::sampling::Sampler;
use octoplane::{Algebra, Gamma, PolarityKind};

fn arithmetic(c: &mut Criterion) {
    let mut s = Sampler::new(0);
    for alg in Algebra::ALL {
        let (x, y) = (s.element(alg), s.element(alg));
        c.bench_function(&format!("mul/{alg}"), |b| b.iter(|| black_box(&x) * black_box(&y)));
        let j = veronese_to_jordan(s.veronese(alg).as_ambient(), Gamma::EUCLIDEAN);
        let k = j.add(&veronese_to_jordan(s.veronese(alg).as_ambient(), Gamma::EUCLIDEAN)).unwrap();
        c.bench_function(&format!("sharp/{alg}"), |b| b.iter(|| black_box(&k).sharp()));
        c.bench_function(&format!("det/{alg}"), |b| b.iter(|| black_box(&k).det()));
    }
}

/// `rows x cols` sparse integer system with a planted kernel.
fn system(rows: usize, cols: usize) -> LinearSystem {
    let mut s = Sampler::new(7);
    let mut sys = LinearSystem::new(cols);
    for _ in 0..rows {
        let row: Vec<_> = (0..4).map(|_| (s.index(cols - 4), int(s.nonzero_int(3)))).collect();
        let copy: Vec<_> = row.iter().filter(|(c, _)| *c < 4).map(|(c, q)| (cols - 4 + c, q.clone())).collect();
        sys.push_row(row.into_iter().chain(copy));
    }
    sys
}

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("nullspace");
    g.sample_size(10);
    for (rows, cols) in [(120, 100), (400, 300)] {
        let sys = system(rows, cols);
        for (name, route) in [("fraction-free", Strategy::FractionFree), ("multimodular", Strategy::MultiModular)] {
            g.bench_with_input(BenchmarkId::new(name, format!("{rows}x{cols}")), &sys, |b, sys| {
                b.iter(|| sys.nullspace_with(route))
            });
        }
    }
    g.finish();
}

fn lie(c: &mut Criterion) {
    let mut g = c.benchmark_group("lie");
    g.sample_size(10);
    g.bench_function("der-alg/O", |b| b.iter(|| derivations_of_algebra(Algebra::Octonions)));
    g.bench_function("tri+killing/Os", |b| {
        b.iter(|| killing_and_identify(triality_algebra(Algebra::SplitOctonions)).unwrap())
    });
    g.bench_function("der-jordan/O", |b| b.iter(|| jordan_derivations(Algebra::Octonions, Gamma::EUCLIDEAN)));
    g.finish();
}

fn plane(c: &mut Criterion) {
    let mut g = c.benchmark_group("plane");
    g.sample_size(10);
    g.bench_function("axioms/O/20", |b| b.iter(|| run_axioms(Algebra::Octonions, PolarityKind::Elliptic, 20, 0)));
    g.finish();
}

criterion_group!(benches, arithmetic, kernels, lie, plane);
criterion_main!(benches);
