use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parse::parse_rational;
use super::poly::Gf2Poly;
use super::series::PowerSeries;
use super::ScalarError;

/// t-adic valuation; zero has the infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// An element of GF(2)(t), kept as a reduced fraction.
///
/// Over GF(2) every nonzero polynomial is monic, so "numerator and
/// denominator coprime" already pins down a unique representative; zero is
/// stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Gf2Poly,
    den: Gf2Poly,
}

impl RationalFunction {
    pub fn new(num: Gf2Poly, den: Gf2Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Gf2Poly, den: Gf2Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self { num, den }
        } else {
            Self {
                num: num.exact_div(&g),
                den: den.exact_div(&g),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Gf2Poly::zero(),
            den: Gf2Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Gf2Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Gf2Poly::t())
    }

    pub fn from_poly(p: Gf2Poly) -> Self {
        Self {
            num: p,
            den: Gf2Poly::one(),
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn numerator(&self) -> &Gf2Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Gf2Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rough size used to prefer small pivots in elimination.
    pub fn size(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> Self {
        // the Frobenius map preserves coprimality
        Self {
            num: self.num.square(),
            den: self.den.square(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn valuation(&self) -> Valuation {
        match (self.num.valuation(), self.den.valuation()) {
            (Some(n), Some(d)) => Valuation::Finite(n as i64 - d as i64),
            _ => Valuation::Infinite,
        }
    }

    /// True iff the value lies in GF(2)[[t]] (valuation at least zero).
    pub fn is_integral(&self) -> bool {
        self.valuation() >= Valuation::Finite(0)
    }

    /// Power-series expansion modulo `t^precision`.
    pub fn expand(&self, precision: usize) -> Result<PowerSeries, ScalarError> {
        if let Valuation::Finite(v) = self.valuation() {
            if v < 0 {
                return Err(ScalarError::NegativeValuation(v));
            }
        }
        let den = PowerSeries::from_poly(self.den.clone(), precision)?;
        let num = PowerSeries::from_poly(self.num.clone(), precision)?;
        // reduced and integral, so den(0) = 1
        Ok(&num * &den.inverse()?)
    }

    /// Specialization at `t = 0`.
    pub fn at_zero(&self) -> Result<bool, ScalarError> {
        if let Valuation::Finite(v) = self.valuation() {
            if v < 0 {
                return Err(ScalarError::NegativeValuation(v));
            }
        }
        Ok(self.num.constant_term() && self.den.constant_term())
    }

    /// A 1-unit: valuation zero with value 1 at `t = 0`, i.e. `r = 1 mod t`.
    pub fn is_deformation_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(0) && self.at_zero() == Ok(true)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        // the result's common factors with the denominator all divide g
        let h = num.gcd(&g);
        let num = num.exact_div(&h);
        let den = &(&d1 * &d2) * &g.exact_div(&h);
        RationalFunction { num, den }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = &*self + rhs;
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RationalFunction {
            num: &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2),
            den: &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1),
        }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl From<Gf2Poly> for RationalFunction {
    fn from(p: Gf2Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    /// Writes the form accepted by the parser: `1+t^2`, `1/(1+t)`,
    /// `(t+t^2+t^3)/(1+t)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Gf2Poly| {
            if p.weight() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF[{self}]")
    }
}

impl FromStr for RationalFunction {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn char_two_self_cancellation() {
        assert!((&rf("t") + &rf("t")).is_zero());
    }

    #[test]
    fn common_denominator_sum() {
        assert_eq!(&rf("1/(1+t)") + &rf("t/(1+t)"), RationalFunction::one());
    }

    #[test]
    fn cross_multiplied_sum() {
        // (t+t^2)(1+t) + 1 = t + t^3 + 1 over (1+t), and gcd(1+t+t^3, 1+t) = 1
        let expected = RationalFunction::new(
            Gf2Poly::from_exponents(&[0, 1, 3]),
            Gf2Poly::from_exponents(&[0, 1]),
        )
        .unwrap();
        assert_eq!(&rf("t+t^2") + &rf("1/(1+t)"), expected);
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(&rf("1+t") * &rf("1/(1+t)"), RationalFunction::one());
        assert_eq!(&rf("t") * &rf("t"), rf("t^2"));
        assert_eq!(&rf("(t+t^2+t^3)/(1+t)") * &rf("1+t"), rf("t+t^2+t^3"));
        assert_eq!(RationalFunction::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(rf("t^3").pow(3), rf("t^9"));
    }

    #[test]
    fn valuations() {
        assert_eq!(RationalFunction::zero().valuation(), Valuation::Infinite);
        assert_eq!(rf("(t+t^2+t^3)/(1+t)").valuation(), Valuation::Finite(1));
        assert_eq!(rf("1/t^2").valuation(), Valuation::Finite(-2));
        assert!(Valuation::Finite(1_000_000) < Valuation::Infinite);
    }

    #[test]
    fn expansion() {
        assert_eq!(rf("1/(1+t)").expand(4).unwrap().poly(), &rf_poly("1+t+t^2+t^3"));
        assert_eq!(rf("t+t^2").expand(4).unwrap().poly(), &rf_poly("t+t^2"));
        assert_eq!(rf("1/t").expand(4), Err(ScalarError::NegativeValuation(-1)));
    }

    fn rf_poly(s: &str) -> Gf2Poly {
        rf(s).numerator().clone()
    }

    #[test]
    fn specialization_at_zero() {
        assert_eq!(rf("1/(1+t)").at_zero(), Ok(true));
        assert_eq!(rf("(t+t^2+t^3)/(1+t)").at_zero(), Ok(false));
        assert_eq!(rf("1+t^2+t^3").at_zero(), Ok(true));
        assert!(rf("1/t").at_zero().is_err());
    }

    #[test]
    fn deformation_units() {
        assert!(rf("1+t^2+t^3").is_deformation_unit());
        assert!(rf("1/(1+t)").is_deformation_unit());
        assert!(!rf("t").is_deformation_unit());
        assert!(!RationalFunction::zero().is_deformation_unit());
        assert!(!rf("1/t").is_deformation_unit());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "t", "1+t^2+t^3", "1/(1+t)", "(t+t^2+t^3)/(1+t)", "1/t^2"] {
            assert_eq!(rf(s).to_string(), s);
        }
    }
}
