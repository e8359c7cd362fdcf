//! The commutative algebra F[x]/(p_t(x)) over F = GF(2)(t), where
//! p_t = pi(x)(x+c)(x+d) deforms x^4 + 1.

mod roots;
mod xpoly;

pub use roots::{irreducibility_check, RootSearch, MAX_ROOT_SEARCH_PRECISION};
pub use xpoly::XPoly;

use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::linalg;
use crate::params::DeformationParams;
use crate::scalar::{RationalField, RationalFunction, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("modulus must be monic of degree 4, got {0}")]
    NonMonicModulus(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(&'static str),
    #[error("root search precondition violated: {0}")]
    RootSearchPrecondition(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An element of the quotient, as coordinates on `1, x, x^2, x^3`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuotientElement {
    coords: [RationalFunction; 4],
}

impl QuotientElement {
    pub fn new(coords: [RationalFunction; 4]) -> Self {
        Self { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: RationalFunction) -> Self {
        let mut e = Self::zero();
        e.coords[0] = c;
        e
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    /// The basis element `x^i`, `i < 4`.
    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.coords[i] = RationalFunction::one();
        e
    }

    pub fn coords(&self) -> &[RationalFunction; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RationalFunction::is_zero)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    /// The canonical lift of degree below 4.
    pub fn lift(&self) -> XPoly {
        XPoly::new(self.coords.to_vec())
    }

    /// Coordinate-wise specialization at `t = 0`.
    pub fn at_zero(&self) -> Result<[bool; 4], ScalarError> {
        let mut out = [false; 4];
        for (o, c) in out.iter_mut().zip(&self.coords) {
            *o = c.at_zero()?;
        }
        Ok(out)
    }
}

impl Add<&QuotientElement> for &QuotientElement {
    type Output = QuotientElement;
    fn add(self, rhs: &QuotientElement) -> QuotientElement {
        QuotientElement {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift().display_in("xb"))
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientElement[{self}]")
    }
}

/// Arithmetic context for F[x]/(m) with `m` monic of degree 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus: XPoly,
    /// Reductions of x^4, x^5, x^6.
    high_powers: [QuotientElement; 3],
}

impl QuotientRing {
    pub fn new(modulus: XPoly) -> Result<Self, QuotientError> {
        if modulus.degree() != Some(4) || !modulus.is_monic() {
            return Err(QuotientError::NonMonicModulus(modulus.to_string()));
        }
        // x^4 = sum m_i x^i in characteristic 2
        let x4 = QuotientElement::new(std::array::from_fn(|i| modulus.coeff(i)));
        let shift = |v: &QuotientElement| {
            let c = v.coords();
            let top = c[3].clone();
            let shifted = QuotientElement::new([
                RationalFunction::zero(),
                c[0].clone(),
                c[1].clone(),
                c[2].clone(),
            ]);
            &shifted + &x4.scale(&top)
        };
        let x5 = shift(&x4);
        let x6 = shift(&x5);
        Ok(Self {
            modulus,
            high_powers: [x4, x5, x6],
        })
    }

    pub fn from_params(params: &DeformationParams) -> Result<Self, QuotientError> {
        Self::new(build_modulus(params))
    }

    pub fn modulus(&self) -> &XPoly {
        &self.modulus
    }

    pub fn x(&self) -> QuotientElement {
        QuotientElement::basis(1)
    }

    pub fn reduce(&self, p: &XPoly) -> QuotientElement {
        let r = p.rem(&self.modulus).expect("modulus is nonzero");
        QuotientElement::new(std::array::from_fn(|i| r.coeff(i)))
    }

    pub fn mul(&self, u: &QuotientElement, v: &QuotientElement) -> QuotientElement {
        let mut prod: [RationalFunction; 7] = Default::default();
        for (i, a) in u.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        let [p0, p1, p2, p3, p4, p5, p6] = prod;
        let mut out = QuotientElement::new([p0, p1, p2, p3]);
        for (c, power) in [p4, p5, p6].iter().zip(&self.high_powers) {
            if !c.is_zero() {
                out = &out + &power.scale(c);
            }
        }
        out
    }

    pub fn pow(&self, u: &QuotientElement, e: usize) -> QuotientElement {
        (0..e).fold(QuotientElement::one(), |acc, _| self.mul(&acc, u))
    }

    /// Evaluates `p` at the ring element `at` (Horner).
    pub fn eval(&self, p: &XPoly, at: &QuotientElement) -> QuotientElement {
        p.coeffs().iter().rev().fold(QuotientElement::zero(), |acc, c| {
            &self.mul(&acc, at) + &QuotientElement::scalar(c.clone())
        })
    }

    /// Matrix of multiplication by `u`; column `j` holds `u * x^j`.
    pub fn multiplication_matrix(&self, u: &QuotientElement) -> Vec<Vec<RationalFunction>> {
        let cols: Vec<QuotientElement> = (0..4)
            .map(|j| self.mul(u, &QuotientElement::basis(j)))
            .collect();
        (0..4)
            .map(|i| cols.iter().map(|c| c.coords[i].clone()).collect())
            .collect()
    }

    /// Dimension over F of the ideal generated by `u`.
    pub fn ideal_rank(&self, u: &QuotientElement) -> usize {
        linalg::rank(&RationalField, &self.multiplication_matrix(u))
    }
}

/// `p_t(x) = pi(x)(x+c)(x+d)`.
pub fn build_modulus(params: &DeformationParams) -> XPoly {
    &(&params.pi() * &XPoly::linear(&params.c)) * &XPoly::linear(&params.d)
}

/// Remainder of `p` modulo a monic quartic.
pub fn reduce(p: &XPoly, modulus: &XPoly) -> Result<QuotientElement, QuotientError> {
    Ok(QuotientRing::new(modulus.clone())?.reduce(p))
}

/// `gcd(p, p') = 1`.
pub fn separability_of_modulus(p: &XPoly) -> bool {
    p.gcd(&p.derivative()).degree() == Some(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentTriple {
    pub e1: QuotientElement,
    pub e2: QuotientElement,
    pub e3: QuotientElement,
}

/// Outcome of checking the idempotent identities exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub squares: [bool; 3],
    pub orthogonal: bool,
    pub complete: bool,
    pub ranks: [usize; 3],
}

impl IdempotentReport {
    pub fn passed(&self) -> bool {
        self.squares.iter().all(|&s| s) && self.orthogonal && self.complete && self.ranks == [2, 1, 1]
    }
}

impl IdempotentTriple {
    pub fn as_array(&self) -> [&QuotientElement; 3] {
        [&self.e1, &self.e2, &self.e3]
    }

    pub fn check(&self, ring: &QuotientRing) -> IdempotentReport {
        let e = self.as_array();
        let squares = std::array::from_fn(|i| ring.mul(e[i], e[i]) == *e[i]);
        let orthogonal = (0..3)
            .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
            .all(|(i, j)| ring.mul(e[i], e[j]).is_zero());
        let complete = &(&self.e1 + &self.e2) + &self.e3 == QuotientElement::one();
        let ranks = std::array::from_fn(|i| ring.ideal_rank(e[i]));
        IdempotentReport {
            squares,
            orthogonal,
            complete,
            ranks,
        }
    }
}

/// The primitive idempotents
/// `e1 = (x+w)(x+c)(x+d)/a`, `e2 = c(x+d)pi(x)/(a(c+d))`,
/// `e3 = d(x+c)pi(x)/(a(c+d))`.
pub fn compute_idempotents(
    params: &DeformationParams,
    ring: &QuotientRing,
) -> Result<IdempotentTriple, QuotientError> {
    if params.a.is_zero() {
        return Err(QuotientError::DegenerateParameters("a = 0"));
    }
    if params.c == params.d {
        return Err(QuotientError::DegenerateParameters("c = d"));
    }
    let pi = params.pi();
    let lin = XPoly::linear;
    let a_inv = params.a.inv()?;
    let cd_inv = (&params.a * &(&params.c + &params.d)).inv()?;

    let e1 = &(&lin(&params.w) * &lin(&params.c)) * &lin(&params.d);
    let e2 = (&lin(&params.d) * &pi).scale(&(&params.c * &cd_inv));
    let e3 = (&lin(&params.c) * &pi).scale(&(&params.d * &cd_inv));
    Ok(IdempotentTriple {
        e1: ring.reduce(&e1.scale(&a_inv)),
        e2: ring.reduce(&e2),
        e3: ring.reduce(&e3),
    })
}
