use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tsc_core::cm::is_cm_with;
use tsc_core::cover::minimal_vertex_covers_with;
use tsc_core::tsc::build_tsc_with;
use tsc_core::{friendship, Exec, FieldSpec};

fn modes() -> Vec<(&'static str, Exec)> {
    let mut m = vec![("sequential", Exec::Sequential)];
    if Exec::default() != Exec::Sequential {
        m.push(("parallel", Exec::default()));
    }
    m
}

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_tsc");
    for n in [3u32, 6] {
        let (g, l) = friendship(n).unwrap();
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| build_tsc_with(black_box(&g), black_box(&l), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_cm(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_cm");
    group.sample_size(10);
    let (g, l) = friendship(2).unwrap();
    let tsc = build_tsc_with(&g, &l, Exec::Sequential).unwrap();
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| is_cm_with(black_box(&tsc), FieldSpec::default(), exec)));
    }
    group.finish();
}

fn bench_covers(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_vertex_covers");
    group.sample_size(10);
    let (g, l) = friendship(3).unwrap();
    let tsc = build_tsc_with(&g, &l, Exec::Sequential).unwrap();
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| minimal_vertex_covers_with(black_box(&tsc), exec)));
    }
    group.finish();
}

criterion_group!(benches, bench_build, bench_cm, bench_covers);
criterion_main!(benches);
