use std::fmt;
use std::ops::{Add, Mul};

use super::poly::Gf2Poly;
use super::ScalarError;

/// An element of GF(2)[[t]] / (t^N).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Gf2Poly,
    precision: usize,
}

impl PowerSeries {
    pub fn from_poly(p: Gf2Poly, precision: usize) -> Result<Self, ScalarError> {
        if precision == 0 {
            return Err(ScalarError::ZeroPrecision);
        }
        Ok(Self {
            coeffs: p.truncate(precision),
            precision,
        })
    }

    /// Builds a series from its low bits; bit `k` is the `t^k` coefficient.
    pub fn from_bits(bits: u64, precision: usize) -> Result<Self, ScalarError> {
        Self::from_poly(Gf2Poly::from_word(bits), precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Truncated coefficients as a polynomial of degree below the precision.
    pub fn poly(&self) -> &Gf2Poly {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<bool> {
        (k < self.precision).then(|| self.coeffs.coeff(k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Drops to a smaller precision; a larger `m` leaves the series unchanged.
    pub fn truncate(&self, m: usize) -> Self {
        let precision = m.min(self.precision).max(1);
        Self {
            coeffs: self.coeffs.truncate(precision),
            precision,
        }
    }

    /// Multiplicative inverse, defined when the constant term is 1.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if !self.coeffs.constant_term() {
            return Err(ScalarError::NotInvertible);
        }
        // inv_n = sum_{k=1..n} s_k inv_{n-k}, inv_0 = 1
        let mut inv = Gf2Poly::one();
        for n in 1..self.precision {
            let bit = (1..=n).fold(false, |acc, k| {
                acc ^ (self.coeffs.coeff(k) && inv.coeff(n - k))
            });
            if bit {
                inv.flip(n);
            }
        }
        Ok(Self {
            coeffs: inv,
            precision: self.precision,
        })
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let precision = self.precision.min(rhs.precision);
        PowerSeries {
            coeffs: (&self.coeffs + &rhs.coeffs).truncate(precision),
            precision,
        }
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let precision = self.precision.min(rhs.precision);
        PowerSeries {
            coeffs: (&self.coeffs * &rhs.coeffs).truncate(precision),
            precision,
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.coeffs, self.precision)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries({self})")
    }
}
