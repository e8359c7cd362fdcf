#![allow(dead_code)]

use proptest::prelude::*;
use q8deform::quotient::QuotientElement;
use q8deform::scalar::{Gf2Poly, RationalFunction};

/// Polynomials of degree below `bits`.
pub fn poly(bits: u32) -> impl Strategy<Value = Gf2Poly> {
    (0u64..(1u64 << bits)).prop_map(Gf2Poly::from_word)
}

pub fn nonzero_poly(bits: u32) -> impl Strategy<Value = Gf2Poly> {
    (1u64..(1u64 << bits)).prop_map(Gf2Poly::from_word)
}

pub fn rational() -> impl Strategy<Value = RationalFunction> {
    (poly(6), nonzero_poly(5)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = RationalFunction> {
    (nonzero_poly(6), nonzero_poly(5)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Elements of GF(2)[[t]] ∩ GF(2)(t): denominators with constant term 1.
pub fn integral() -> impl Strategy<Value = RationalFunction> {
    (poly(6), 0u64..16).prop_map(|(n, d)| RationalFunction::new(n, Gf2Poly::from_word(2 * d + 1)).unwrap())
}

/// Mostly sparse coordinates, to keep products small.
pub fn quotient_element() -> impl Strategy<Value = QuotientElement> {
    let coord = prop_oneof![
        2 => Just(RationalFunction::zero()),
        1 => Just(RationalFunction::one()),
        3 => rational(),
    ];
    [coord.clone(), coord.clone(), coord.clone(), coord].prop_map(QuotientElement::new)
}
