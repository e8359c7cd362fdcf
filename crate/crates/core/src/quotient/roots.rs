//! Root search for monic quadratics `x^2 + a x + b` with `a` in tGF(2)[[t]]
//! and `b` a 1-unit.
//!
//! Any root in GF(2)((t)) is then a unit of GF(2)[[t]] with constant term 1:
//! the two root valuations sum to val(b) = 0, and their sum a has positive
//! valuation, so both are zero. Hence finding no root modulo t^N among the
//! 2^(N-1) candidates with constant term 1 proves irreducibility.

use super::{QuotientError, XPoly};
use crate::scalar::{Gf2Poly, RationalFunction, Valuation};

/// Largest precision accepted by the exhaustive search.
pub const MAX_ROOT_SEARCH_PRECISION: usize = 24;

/// Modular roots tried for exact reconstruction before giving up.
const MAX_LIFT_ATTEMPTS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSearch {
    /// No root modulo t^N, hence no root at all.
    Irreducible,
    /// An exact root in GF(2)(t), verified by substitution.
    ReducibleWithRoot(RationalFunction),
    /// Roots exist modulo t^N but none could be lifted exactly.
    Unknown,
}

fn mul_trunc(a: u64, b: u64, mask: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b & mask;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc & mask
}

fn low_word(p: &Gf2Poly, precision: usize) -> u64 {
    p.truncate(precision)
        .exponents()
        .fold(0u64, |w, e| w | (1u64 << e))
}

pub fn irreducibility_check(pi: &XPoly, precision: usize) -> Result<RootSearch, QuotientError> {
    if pi.degree() != Some(2) || !pi.is_monic() {
        return Err(QuotientError::RootSearchPrecondition(format!(
            "expected a monic quadratic, got {pi}"
        )));
    }
    if precision == 0 || precision > MAX_ROOT_SEARCH_PRECISION {
        return Err(QuotientError::RootSearchPrecondition(format!(
            "precision {precision} outside 1..={MAX_ROOT_SEARCH_PRECISION}"
        )));
    }
    let a = pi.coeff(1);
    let b = pi.coeff(0);
    if a.valuation() < Valuation::Finite(1) {
        return Err(QuotientError::RootSearchPrecondition(format!(
            "linear coefficient {a} must have positive valuation"
        )));
    }
    if !b.is_deformation_unit() {
        return Err(QuotientError::RootSearchPrecondition(format!(
            "constant coefficient {b} must be congruent to 1 mod t"
        )));
    }

    let mask = if precision == 64 { u64::MAX } else { (1u64 << precision) - 1 };
    let a_bits = low_word(a.expand(precision)?.poly(), precision);
    let b_bits = low_word(b.expand(precision)?.poly(), precision);

    let mut modular_roots = Vec::new();
    for high in 0..(1u64 << (precision - 1)) {
        let u = 1 | (high << 1);
        if mul_trunc(u, u, mask) ^ mul_trunc(a_bits, u, mask) ^ b_bits == 0 {
            modular_roots.push(u);
        }
    }
    if modular_roots.is_empty() {
        return Ok(RootSearch::Irreducible);
    }

    let is_root = |r: &RationalFunction| (&(&r.square() + &(&a * r)) + &b).is_zero();
    for &u in modular_roots.iter().take(MAX_LIFT_ATTEMPTS) {
        for cand in reconstructions(&Gf2Poly::from_word(u), precision) {
            if is_root(&cand) {
                return Ok(RootSearch::ReducibleWithRoot(cand));
            }
        }
    }
    Ok(RootSearch::Unknown)
}

/// Candidate exact values for a series known modulo t^N: the truncated
/// polynomial itself plus every convergent of the extended Euclidean
/// algorithm on (t^N, u) whose denominator is a unit.
fn reconstructions(u: &Gf2Poly, precision: usize) -> Vec<RationalFunction> {
    let mut out = vec![RationalFunction::from_poly(u.clone())];
    let (mut r0, mut r1) = (Gf2Poly::monomial(precision), u.clone());
    let (mut s0, mut s1) = (Gf2Poly::zero(), Gf2Poly::one());
    while !r1.is_zero() {
        if s1.constant_term() {
            if let Ok(c) = RationalFunction::new(r1.clone(), s1.clone()) {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 + &(&q * &s1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    out
}
