use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knotsum::braid::{census, parse_braid};
use knotsum::invariant::intersection_i_with;
use knotsum::oracles::{coloured_jones_rmatrix_with, jones_kauffman_with};
use knotsum::par::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn state_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("intersection");
    g.sample_size(10);
    let cases = [
        ("3_1", census()[0].1.clone(), 4),
        ("4_1", census()[1].1.clone(), 3),
        ("5_2", census()[3].1.clone(), 3),
        (
            "B4 word",
            parse_braid("2 -1 2 3 1 1 3 1 -2 1", 4).unwrap(),
            3,
        ),
    ];
    for (name, b, colour) in &cases {
        for (mode, exec) in MODES {
            g.bench_with_input(
                BenchmarkId::new(mode, format!("{name}/N={colour}")),
                b,
                |bn, b| bn.iter(|| intersection_i_with(b, *colour, exec).unwrap()),
            );
        }
    }
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracles");
    g.sample_size(10);
    let long = parse_braid("1 -2 3 1 1 -2 -2 3 3 -1 -1 2 2", 4).unwrap();
    let fig8 = census()[1].1.clone();
    for (mode, exec) in MODES {
        g.bench_function(BenchmarkId::new(mode, "kauffman/13 crossings"), |bn| {
            bn.iter(|| jones_kauffman_with(&long, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new(mode, "rmatrix/4_1/N=4"), |bn| {
            bn.iter(|| coloured_jones_rmatrix_with(&fig8, 4, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, state_sum, oracles);
criterion_main!(benches);
