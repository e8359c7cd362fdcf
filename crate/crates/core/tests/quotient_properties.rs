mod common;

use common::{quotient_element, rational};
use proptest::prelude::*;
use q8deform::quotient::{QuotientElement, QuotientRing, XPoly};
use q8deform::DeformationParams;

fn ring() -> QuotientRing {
    QuotientRing::from_params(&DeformationParams::example()).unwrap()
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    proptest::collection::vec(rational(), 0..7).prop_map(XPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(u in quotient_element(), v in quotient_element(), w in quotient_element()) {
        let r = ring();
        prop_assert_eq!(r.mul(&u, &v), r.mul(&v, &u));
        prop_assert_eq!(r.mul(&r.mul(&u, &v), &w), r.mul(&u, &r.mul(&v, &w)));
        prop_assert_eq!(r.mul(&u, &(&v + &w)), &r.mul(&u, &v) + &r.mul(&u, &w));
        prop_assert_eq!(r.mul(&u, &QuotientElement::one()), u.clone());
        prop_assert!((&u + &u).is_zero());
    }

    #[test]
    fn reduction_is_a_ring_map(p in xpoly(), q in xpoly()) {
        let r = ring();
        prop_assert_eq!(r.reduce(&(&p * &q)), r.mul(&r.reduce(&p), &r.reduce(&q)));
        prop_assert_eq!(r.reduce(&(&p + &q)), &r.reduce(&p) + &r.reduce(&q));
    }

    #[test]
    fn reduction_agrees_with_division(p in xpoly()) {
        let r = ring();
        let rem = p.rem(r.modulus()).unwrap();
        prop_assert!(rem.degree().is_none_or(|d| d < 4));
        prop_assert_eq!(r.reduce(&p), r.reduce(&rem));
        let lifted = r.reduce(&p).lift();
        prop_assert_eq!(lifted, rem);
    }
}
