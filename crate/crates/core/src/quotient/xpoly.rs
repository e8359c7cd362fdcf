use std::fmt;
use std::ops::{Add, Mul};

use crate::scalar::{RationalFunction, ScalarError};

/// A polynomial in `x` with coefficients in GF(2)(t), lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<RationalFunction>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn x() -> Self {
        Self::monomial(RationalFunction::one(), 1)
    }

    pub fn monomial(c: RationalFunction, k: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x + r`.
    pub fn linear(r: &RationalFunction) -> Self {
        Self::new(vec![r.clone(), RationalFunction::one()])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(RationalFunction::is_one)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative; in characteristic 2 the even-degree terms vanish.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| if i % 2 == 1 { a.clone() } else { RationalFunction::zero() })
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ScalarError> {
        let dd = divisor.degree().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RationalFunction::zero(); self.coeffs.len().saturating_sub(dd)];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lead_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = &rem[k - dd + i] + &(&q * d);
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, ScalarError> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("leading coefficient is nonzero")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn eval(&self, r: &RationalFunction) -> RationalFunction {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalFunction::zero(), |acc, c| &(&acc * r) + c)
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Coefficient-wise specialization at `t = 0`, as bits indexed by degree.
    pub fn at_zero(&self) -> Result<Vec<bool>, ScalarError> {
        let mut bits = self
            .coeffs
            .iter()
            .map(RationalFunction::at_zero)
            .collect::<Result<Vec<_>, _>>()?;
        while bits.last() == Some(&false) {
            bits.pop();
        }
        Ok(bits)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(out)
    }
}

impl fmt::Display for XPoly {
    /// Descending in `x`, e.g. `x^2 + ((t+t^2+t^3)/(1+t))*x + 1+t^2+t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "x")
    }
}

impl XPoly {
    pub(crate) fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            match (c.is_one(), k) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{mono}")?,
                (false, 0) => write!(f, "{c}")?,
                (false, _) => write!(f, "({c})*{mono}")?,
            }
        }
        Ok(())
    }

    /// Renders with a chosen variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a XPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_in(f, self.1)
            }
        }
        D(self, var)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly[{self}]")
    }
}
