use leonard_core::field::{parse_element, FieldContext, FieldElement};
use proptest::prelude::*;

fn fields() -> Vec<FieldContext> {
    vec![
        FieldContext::rationals(),
        FieldContext::prime(7).unwrap(),
        FieldContext::extension(2, 3).unwrap(),
        FieldContext::extension(3, 2).unwrap(),
    ]
}

/// An element built from small integers, meaningful in every field above.
fn element(ctx: &FieldContext, num: i64, den: i64, coeffs: &[i64]) -> FieldElement {
    if ctx.kind().is_extension() {
        ctx.from_coefficients(coeffs).expect("extension")
    } else {
        ctx.from_ratio(num, den).unwrap_or_else(|_| ctx.from_i64(num))
    }
}

fn triple() -> impl Strategy<Value = (usize, [(i64, i64, Vec<i64>); 3])> {
    let one = || (-30i64..30, 1i64..30, prop::collection::vec(0i64..5, 3));
    (0usize..4, [one(), one(), one()])
}

proptest! {
    #[test]
    fn ring_axioms((f, xs) in triple()) {
        let ctx = &fields()[f];
        let [a, b, c] = xs.map(|(n, d, co)| element(ctx, n, d, &co));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &ctx.zero(), a.clone());
        prop_assert_eq!(&a * &ctx.one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn inverses((f, xs) in triple()) {
        let ctx = &fields()[f];
        let [a, b, _] = xs.map(|(n, d, co)| element(ctx, n, d, &co));
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b);
            prop_assert_eq!(a.pow(-2).unwrap(), a.square().inv().unwrap());
            prop_assert_eq!(a.pow(3).unwrap(), &a.square() * &a);
        }
    }

    #[test]
    fn display_parses_back((f, xs) in triple()) {
        let ctx = &fields()[f];
        for (n, d, co) in xs {
            let a = element(ctx, n, d, &co);
            prop_assert_eq!(parse_element(&a.to_string(), ctx).unwrap(), a);
        }
    }
}

#[test]
fn finite_fields_have_frobenius() {
    // x^q = x for every element of a field of order q.
    for ctx in fields().into_iter().skip(1) {
        let q = ctx.order().unwrap() as i64;
        for x in ctx.elements().unwrap() {
            assert_eq!(x.pow(q).unwrap(), x, "{ctx}");
        }
    }
}

#[test]
fn characteristic_two_has_no_signs() {
    let ctx = FieldContext::extension(2, 2).unwrap();
    let t = ctx.generator().unwrap();
    assert_eq!(-t.clone(), t);
    // t^2 + t + 1 = 0
    assert!((&(&t.square() + &t) + &ctx.one()).is_zero());
    assert!(ctx.from_i64(2).is_zero());
}
