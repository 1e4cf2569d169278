use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use efl_bench::efl_core::forest::{total_plane_weight, total_support_weight};
use efl_bench::efl_core::ibtree::sum_weights;
use efl_bench::efl_core::perm::{derangement_poly, eulerian_by_enumeration};
use efl_bench::efl_core::{eulerian_via_grammar, EulerianForm, LabelScheme, WeightRuleSet};

fn grammar(c: &mut Criterion) {
    let mut g = c.benchmark_group("grammar");
    for n in [8, 12, 16] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| eulerian_via_grammar(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for n in [6, 7] {
        g.bench_with_input(BenchmarkId::new("min_form", n), &n, |b, &n| {
            b.iter(|| eulerian_by_enumeration(black_box(n), EulerianForm::MinForm))
        });
        g.bench_with_input(BenchmarkId::new("tree_sum", n), &n, |b, &n| {
            b.iter(|| sum_weights(black_box(n + 1), LabelScheme::AbAlphaBeta).unwrap())
        });
    }
    g.bench_function("derangements/8", |b| {
        b.iter(|| derangement_poly(black_box(8)))
    });
    g.finish();
}

fn forests(c: &mut Criterion) {
    let mut g = c.benchmark_group("forests");
    g.sample_size(10);
    for n in [5, 6, 7] {
        g.bench_with_input(BenchmarkId::new("plane_thm_b", n), &n, |b, &n| {
            b.iter(|| total_plane_weight(black_box(n), WeightRuleSet::AlphaBeta).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("support", n), &n, |b, &n| {
            b.iter(|| total_support_weight(black_box(n)))
        });
    }
    g.finish();
}

criterion_group!(benches, grammar, enumeration, forests);
criterion_main!(benches);
