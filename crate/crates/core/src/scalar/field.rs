use std::fmt;

use super::rational::RationalFunction;

/// A field of characteristic 2, addressed through a context value.
///
/// Subtraction coincides with addition, so the interface has no `sub` or
/// `neg`. The context form lets fields whose arithmetic depends on runtime
/// data (such as a quadratic extension given by its defining polynomial)
/// share the generic linear algebra with GF(2) and GF(2)(t).
pub trait Char2Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    /// Cost heuristic for pivot selection; smaller is cheaper.
    fn size(&self, _x: &Self::Elem) -> usize {
        0
    }
}

/// The prime field GF(2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gf2;

impl Char2Field for Gf2 {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn is_zero(&self, x: &bool) -> bool {
        !*x
    }
    fn add(&self, x: &bool, y: &bool) -> bool {
        x ^ y
    }
    fn mul(&self, x: &bool, y: &bool) -> bool {
        x & y
    }
    fn inv(&self, x: &bool) -> Option<bool> {
        x.then_some(true)
    }
}

/// The rational function field GF(2)(t).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Char2Field for RationalField {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn is_zero(&self, x: &RationalFunction) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &RationalFunction, y: &RationalFunction) -> RationalFunction {
        x + y
    }
    fn mul(&self, x: &RationalFunction, y: &RationalFunction) -> RationalFunction {
        x * y
    }
    fn inv(&self, x: &RationalFunction) -> Option<RationalFunction> {
        x.inv().ok()
    }
    fn size(&self, x: &RationalFunction) -> usize {
        x.size()
    }
}
