use leonard_core::analysis::{forcings_for, sample_spec, sampling_fields, Forcing};
use leonard_core::parray::build_parameter_array;
use leonard_core::realization::{intersection_a_closed, intersection_a_trace, realize_split, verify_axioms};
use leonard_core::{FieldContext, LeonardType, ParameterArray};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sampled(kind_idx: usize, d: usize, seed: u64) -> ParameterArray {
    let kind = LeonardType::ALL[kind_idx];
    let d = if kind == LeonardType::Orphan { 3 } else { d };
    let field = sampling_fields(kind).remove(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = sample_spec(kind, d, &field, Forcing::None, &mut rng, 9).unwrap();
    build_parameter_array(&spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transforms_are_involutions(k in 0usize..13, d in 3usize..6, seed in any::<u64>()) {
        let p = sampled(k, d, seed);
        prop_assert_eq!(p.down().down(), p.clone());
        prop_assert_eq!(p.double_down().double_down(), p.clone());
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.down().double_down(), p.double_down().down());
    }

    #[test]
    fn transforms_stay_leonard(k in 0usize..13, d in 3usize..5, seed in any::<u64>()) {
        let p = sampled(k, d, seed);
        for q in [p.down(), p.double_down(), p.dual()] {
            let real = realize_split(&q);
            let e = real.e().unwrap();
            let es = real.e_star().unwrap();
            prop_assert!(verify_axioms(&real, e, es).is_ok());
            prop_assert_eq!(intersection_a_trace(&real, es), intersection_a_closed(&q));
        }
    }

    #[test]
    fn affine_moves_a_linearly(k in 0usize..13, seed in any::<u64>(), xi in 1i64..5, zeta in -4i64..4) {
        let p = sampled(k, 3, seed);
        let ctx = p.context().clone();
        let (xi, zeta) = (ctx.from_i64(xi), ctx.from_i64(zeta));
        prop_assume!(!xi.is_zero());
        let q = p.affine(&xi, &zeta, &ctx.one(), &ctx.zero()).unwrap();
        let expected: Vec<_> = intersection_a_closed(&p).iter().map(|a| &xi * a + &zeta).collect();
        prop_assert_eq!(intersection_a_closed(&q), expected);
    }
}

#[test]
fn trace_matches_closed_form_for_every_cell() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in LeonardType::ALL {
        for field in sampling_fields(kind) {
            for forcing in forcings_for(kind, 4) {
                let d = if kind == LeonardType::Orphan { 3 } else { 4 };
                let spec = sample_spec(kind, d, &field, forcing, &mut rng, 12).unwrap();
                let p = build_parameter_array(&spec).unwrap();
                let real = realize_split(&p);
                let es = real.e_star().unwrap();
                assert_eq!(intersection_a_trace(&real, es), intersection_a_closed(&p), "{kind} {forcing}");
            }
        }
    }
}

#[test]
fn zero_scale_is_rejected() {
    let p = sampled(10, 3, 1);
    let ctx = FieldContext::rationals();
    assert!(p.affine(&ctx.zero(), &ctx.one(), &ctx.one(), &ctx.one()).is_err());
}
