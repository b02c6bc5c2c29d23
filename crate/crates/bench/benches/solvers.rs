use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pmcover::compositions::tau5odd_example;
use pmcover::coverings::{covering_number, fulkerson_covering, odd_covering_number};
use pmcover::generators;
use pmcover::{enumerate_perfect_matchings, CubicGraph};

fn fixtures() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("petersen", generators::petersen()),
        ("blanusa1", generators::blanusa1()),
        ("flower7", generators::flower_snark(7).unwrap()),
        ("goldberg5", generators::goldberg_graph(5).unwrap()),
        ("tau5odd", tau5odd_example()),
    ]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_pm");
    for (name, g) in fixtures() {
        group.bench_function(name, |b| b.iter(|| enumerate_perfect_matchings(black_box(&g))));
    }
    group.finish();
}

fn tau(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau");
    for (name, g) in fixtures() {
        let cat = enumerate_perfect_matchings(&g);
        group.bench_function(name, |b| b.iter(|| covering_number(&g, black_box(&cat), 6).unwrap()));
    }
    group.finish();
}

fn tau_odd(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau_odd");
    group.sample_size(10);
    for (name, g) in fixtures() {
        let cat = enumerate_perfect_matchings(&g);
        group.bench_function(name, |b| b.iter(|| odd_covering_number(&g, black_box(&cat), 7).unwrap()));
    }
    group.finish();
}

fn fulkerson(c: &mut Criterion) {
    let mut group = c.benchmark_group("fulkerson");
    for (name, g) in fixtures() {
        let cat = enumerate_perfect_matchings(&g);
        group.bench_function(name, |b| b.iter(|| fulkerson_covering(&g, black_box(&cat)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, enumeration, tau, tau_odd, fulkerson);
criterion_main!(benches);
