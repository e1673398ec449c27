use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use leonard_core::analysis::{
    analyze_instance, counterexample_d2, pit_campaign, sample_spec, CampaignConfig, Depth, Forcing,
};
use leonard_core::parray::build_parameter_array;
use leonard_core::realization::realize_split;
use leonard_core::{FieldContext, LeonardType, TypeSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec(kind: LeonardType, d: usize) -> TypeSpec {
    let field = FieldContext::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    sample_spec(kind, d, &field, Forcing::None, &mut rng, 12).expect("sample")
}

fn field_ops(c: &mut Criterion) {
    let q = FieldContext::rationals();
    let x = q.from_ratio(355, 113).unwrap();
    let y = q.from_ratio(-22, 7).unwrap();
    c.bench_function("field/q_mul_inv", |b| b.iter(|| (black_box(&x) * black_box(&y)).inv()));

    let gf = FieldContext::extension(2, 3).unwrap();
    let t = gf.generator().unwrap();
    let u = &t.square() + &gf.one();
    c.bench_function("field/gf8_mul_inv", |b| b.iter(|| (black_box(&t) * black_box(&u)).inv()));
}

fn idempotents(c: &mut Criterion) {
    let p = build_parameter_array(&spec(LeonardType::QRacah, 6)).unwrap();
    c.bench_function("realization/idempotents_qracah_d6", |b| {
        b.iter_batched(
            || realize_split(&p),
            |real| {
                real.e().unwrap();
                real.e_star().unwrap().len()
            },
            BatchSize::SmallInput,
        )
    });
}

fn analyze(c: &mut Criterion) {
    let mut group = c.benchmark_group("analysis/analyze_instance");
    for (kind, d) in [(LeonardType::Krawtchouk, 3), (LeonardType::Racah, 4), (LeonardType::QRacah, 5)] {
        let s = spec(kind, d);
        group.bench_function(format!("{kind}_d{d}"), |b| b.iter(|| analyze_instance(black_box(&s)).unwrap()));
    }
    group.finish();
}

fn campaign(c: &mut Criterion) {
    let config = CampaignConfig {
        types: vec![LeonardType::Krawtchouk, LeonardType::Hahn],
        d_max: 4,
        trials: 4,
        seed: 7,
        depth: Depth::Tables,
        ..CampaignConfig::default()
    };
    let mut group = c.benchmark_group("analysis/campaign");
    group.sample_size(10);
    group.bench_function("tables_small", |b| b.iter(|| pit_campaign(black_box(&config)).unwrap()));
    group.finish();
}

fn counterexample(c: &mut Criterion) {
    c.bench_function("analysis/counterexample_d2", |b| b.iter(|| counterexample_d2().unwrap()));
}

criterion_group!(benches, field_ops, idempotents, analyze, campaign, counterexample);
criterion_main!(benches);
