mod common;

use common::quotient_element;
use proptest::prelude::*;
use q8deform::deformation::{AlgebraElement, DeformedAlgebra};
use q8deform::quotient::QuotientElement;
use q8deform::skew::SkewPoly;
use q8deform::DeformationParams;
use std::sync::OnceLock;

fn algebra() -> &'static DeformedAlgebra {
    static ALG: OnceLock<DeformedAlgebra> = OnceLock::new();
    ALG.get_or_init(|| DeformedAlgebra::new(&DeformationParams::example()).unwrap())
}

fn skew_poly() -> impl Strategy<Value = SkewPoly> {
    proptest::collection::vec(quotient_element(), 0..3).prop_map(SkewPoly::new)
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    (quotient_element(), quotient_element()).prop_map(|(u, v)| AlgebraElement::from_parts(&u, &v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eta_is_a_ring_map(u in quotient_element(), v in quotient_element()) {
        let alg = algebra();
        let (r, eta) = (alg.ring(), alg.eta());
        prop_assert_eq!(eta.apply(&r.mul(&u, &v)), r.mul(&eta.apply(&u), &eta.apply(&v)));
        prop_assert_eq!(eta.apply(&(&u + &v)), &eta.apply(&u) + &eta.apply(&v));
        prop_assert_eq!(eta.apply(&eta.apply(&u)), u.clone());
        prop_assert_eq!(eta.apply(&QuotientElement::one()), QuotientElement::one());
    }

    #[test]
    fn skew_multiplication_is_associative(f in skew_poly(), g in skew_poly(), h in skew_poly()) {
        let s = algebra().skew();
        prop_assert_eq!(s.mul(&s.mul(&f, &g), &h), s.mul(&f, &s.mul(&g, &h)));
        prop_assert_eq!(s.mul(&f, &(&g + &h)), &s.mul(&f, &g) + &s.mul(&f, &h));
    }

    #[test]
    fn qt_is_central_against_random_elements(f in skew_poly()) {
        let alg = algebra();
        prop_assert!(alg.skew().commutator(alg.qt(), &f).is_zero());
    }

    #[test]
    fn algebra_product_is_associative(u in element(), v in element(), w in element()) {
        let alg = algebra();
        prop_assert_eq!(alg.mul(&alg.mul(&u, &v), &w), alg.mul(&u, &alg.mul(&v, &w)));
        prop_assert_eq!(alg.mul(&u, &v), alg.mul_via_skew(&u, &v));
    }
}
