use criterion::{criterion_group, criterion_main, Criterion};
use fano_core::albanese::{self, Albanese, NsAlbanese};
use fano_core::fermat;
use fano_core::fibrations;
use fano_core::group;
use fano_core::lattice::{wedge_top_coefficient, TwoForm};
use num_rational::BigRational;
use std::hint::black_box;

fn group_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate G(3,3,5)", |b| b.iter(group::enumerate_group));
    c.bench_function("invariant hermitian forms", |b| {
        b.iter(group::invariant_hermitian_forms)
    });
}

fn ns_fermat(c: &mut Criterion) {
    c.bench_function("NS rank and discriminant", |b| b.iter(fermat::ns_rank_and_basis));
    c.bench_function("relations kernel", |b| b.iter(fermat::relations_kernel));
}

fn period_lattice(c: &mut Criterion) {
    c.bench_function("select H1", |b| b.iter(albanese::select_h1));
    let alb = Albanese::new().unwrap();
    let mut g = c.benchmark_group("albanese");
    g.sample_size(10);
    g.bench_function("End^s and its q_theta Gram", |b| {
        b.iter(|| NsAlbanese::compute(&alb).unwrap())
    });
    g.finish();
}

fn wedge(c: &mut Criterion) {
    let forms: Vec<TwoForm> = (0..5)
        .map(|k| {
            TwoForm::from_upper(10, |p, q| {
                BigRational::from_integer((((p * 3 + q * 7 + k) % 11) as i64 - 5).into())
            })
        })
        .collect();
    let refs: Vec<&TwoForm> = forms.iter().collect();
    c.bench_function("wedge of five 2-forms in dimension 10", |b| {
        b.iter(|| wedge_top_coefficient(black_box(&refs)).unwrap())
    });
}

fn fibrations_bench(c: &mut Criterion) {
    let forms = fibrations::sample_forms(7, 20);
    c.bench_function("fibre intersections and genus, 20 forms", |b| {
        b.iter(|| {
            for l in &forms {
                black_box(fibrations::fiber_intersections(l).unwrap());
                black_box(fibrations::fiber_genus(l).unwrap());
            }
        })
    });
}

criterion_group!(
    benches,
    group_enumeration,
    ns_fermat,
    period_lattice,
    wedge,
    fibrations_bench
);
criterion_main!(benches);
