//! Parallel vs sequential certificate search and catalog sweep.
//!
//! Run with `cargo bench -p lpcoh`. The parallel variants are only
//! distinct when the default `parallel` feature is enabled.

use criterion::{criterion_group, criterion_main, Criterion};

use lpcoh::batch::{paper_report, paper_report_seq, ReportOptions};
use lpcoh::cartan::CartanLabel;
use lpcoh::psi::{search_certificate, search_certificate_seq};
use lpcoh::roots::{RootFamily, RootSystem};

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_d4");
    let sys = RootSystem::build(RootFamily::D(4)).unwrap();
    let target = sys.positive_sum();
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| search_certificate(&sys, &target, 5, true, None))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| search_certificate_seq(&sys, &target, 5, true, None))
    });
    group.finish();
}

fn bench_report(c: &mut Criterion) {
    let mut group = c.benchmark_group("paper_report_bi");
    let opts = ReportOptions {
        only_label: Some(CartanLabel::BI),
        ..Default::default()
    };
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| paper_report(&opts)));
    group.bench_function("sequential", |b| b.iter(|| paper_report_seq(&opts)));
    group.finish();
}

criterion_group!(benches, bench_search, bench_report);
criterion_main!(benches);
