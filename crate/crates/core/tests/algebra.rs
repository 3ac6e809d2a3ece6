mod common;

use linco::algebra::{Bindings, ExactPoly, Monomial, Rational, Var, XPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec((rational(), 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        ExactPoly::from_terms(
            terms
                .into_iter()
                .map(|(c, t, q, a)| (c, Monomial::new(t, q, a))),
        )
    })
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(poly(), 0..4).prop_map(XPoly::from_coeffs)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ExactPoly::one(), a.clone());
    }

    #[test]
    fn division_round_trip(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), tv in rational(), qv in rational()) {
        let bind = Bindings::new()
            .with(Var::T, ExactPoly::constant(tv))
            .with(Var::Q, ExactPoly::constant(qv));
        prop_assert_eq!((&a * &b).substitute(&bind), &a.substitute(&bind) * &b.substitute(&bind));
        prop_assert_eq!((&a + &b).substitute(&bind), &a.substitute(&bind) + &b.substitute(&bind));
        let full = bind.with(Var::Alpha, ExactPoly::from_int(2));
        prop_assert!(a.substitute(&full).as_constant().is_some());
    }

    #[test]
    fn xpoly_ring(a in xpoly(), b in xpoly(), c in xpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: ExactPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn inexact_division_is_an_error() {
    let t = ExactPoly::t();
    let q = ExactPoly::q();
    assert!((&t + &q).exact_div(&t).is_err());
    assert!(t.exact_div(&ExactPoly::zero()).is_err());
}

#[test]
fn rendering() {
    let t = ExactPoly::t();
    let q = ExactPoly::q();
    assert_eq!(
        (&(&t * &t) * &q + t.scale(&common::rat(2))).to_string(),
        "t^2*q + 2*t"
    );
    assert_eq!(ExactPoly::zero().to_string(), "0");
    let x2 = XPoly::x_pow(2) - XPoly::constant(t);
    assert_eq!(x2.to_string(), "x^2 - t");
}
