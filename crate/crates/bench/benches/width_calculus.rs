use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sloped_width::oracle::{enumerate_decompositions, enumerate_widths, EnumerationBudget};
use sloped_width::{classify, slope_grid, Decomposition, Slope};

fn classify_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_grid");
    for (p, q) in [(2, 3), (3, 7)] {
        let slopes = slope_grid(20, 20);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{p},{q}")), &slopes, |b, slopes| {
            b.iter(|| {
                for &slope in slopes {
                    black_box(classify(p, q, slope).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn width_order(c: &mut Criterion) {
    let widths = enumerate_widths(6, 3);
    c.bench_function("width_order_all_pairs", |b| {
        b.iter(|| {
            let mut greater = 0usize;
            for a in &widths {
                for w in &widths {
                    greater += usize::from(a > w);
                }
            }
            black_box(greater)
        })
    });
}

fn decomposition_ops(c: &mut Criterion) {
    let budget = EnumerationBudget::default();
    c.bench_function("enumerate_closed_default_budget", |b| {
        b.iter(|| black_box(enumerate_decompositions(&budget, Slope::Closed).len()))
    });

    let sloped = Decomposition::from_json(
        r#"{"slope":"1/2","thick":[[{"g":1,"b":2}],[{"g":2,"b":2}]],"thin":[[{"g":0,"b":2}]]}"#,
    )
    .unwrap();
    c.bench_function("validate_strict", |b| b.iter(|| black_box(sloped.validate(true))));
    c.bench_function("stabilize_then_fill", |b| {
        b.iter(|| {
            let s = sloped.alpha_stabilize(sloped.slope, 0).unwrap();
            black_box(s.fill().width())
        })
    });
}

criterion_group!(benches, classify_grid, width_order, decomposition_ops);
criterion_main!(benches);
