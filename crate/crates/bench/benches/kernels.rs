use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyperfuse::fusion::catalog::{haagerup_izumi, near_group, su2_level, tambara_yamagami, two_element};
use hyperfuse::fusion::{fp_dimension, to_hypergroup, FiniteGroup};
use hyperfuse::grading::derived_chain;
use hyperfuse::harmonic::{character_table, simulate_walk, transition_matrix};
use hyperfuse::quotient::{find_subhypergroups, quotient_hypergroup};
use hyperfuse::{QuadScalar, Subhypergroup};

fn group(name: &str) -> FiniteGroup {
    FiniteGroup::parse(name).unwrap()
}

fn quotients(c: &mut Criterion) {
    let k = to_hypergroup(&haagerup_izumi(&group("Z3")).unwrap()).unwrap();
    let l = Subhypergroup::new(&k, &[0, 1, 2]).unwrap();
    c.bench_function("quotient haagerup_izumi(Z3)//Z3", |b| {
        b.iter(|| quotient_hypergroup(black_box(&k), &l).unwrap())
    });
    let ty = to_hypergroup(&tambara_yamagami(&group("Z2xZ2")).unwrap()).unwrap();
    c.bench_function("subhypergroups tambara_yamagami(Z2xZ2)", |b| {
        b.iter(|| find_subhypergroups(black_box(&ty)).unwrap())
    });
    c.bench_function("derived chain tambara_yamagami(Z2xZ2)", |b| {
        b.iter(|| derived_chain(black_box(&ty)).unwrap())
    });
}

fn dimensions(c: &mut Criterion) {
    let ng = near_group(&group("Z3"), 3).unwrap();
    c.bench_function("fp_dimension near_group(Z3,3)", |b| b.iter(|| fp_dimension(black_box(&ng)).unwrap()));
    let su2 = su2_level(6).unwrap();
    c.bench_function("fp_dimension su2_level(6)", |b| b.iter(|| fp_dimension(black_box(&su2)).unwrap()));
}

fn harmonic(c: &mut Criterion) {
    let ising = to_hypergroup(&tambara_yamagami(&group("Z2")).unwrap()).unwrap();
    c.bench_function("character table ising", |b| b.iter(|| character_table(black_box(&ising)).unwrap()));
    let k = two_element(&QuadScalar::from(2)).unwrap();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    c.bench_function("walk K(2) 10^5 steps", |b| b.iter(|| simulate_walk(black_box(&m), 0, 100_000, 42).unwrap()));
}

criterion_group!(benches, quotients, dimensions, harmonic);
criterion_main!(benches);
