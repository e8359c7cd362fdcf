//! The involution eta of F[x]/(p_t) and the skew polynomial ring
//! `A[y; eta]` with `y a = eta(a) y`.

use std::fmt;
use std::ops::Add;

use crate::params::DeformationParams;
use crate::quotient::{QuotientElement, QuotientRing, XPoly};

/// A ring endomorphism determined by its value on the generator `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    image: QuotientElement,
    /// Images of `1, x, x^2, x^3`.
    powers: [QuotientElement; 4],
    /// Images of the basis under the square of the map.
    square_powers: [QuotientElement; 4],
}

impl Automorphism {
    pub fn new(ring: &QuotientRing, image: QuotientElement) -> Self {
        let powers = std::array::from_fn(|i| ring.pow(&image, i));
        let square_powers = std::array::from_fn(|i| combine(&powers, &powers[i]));
        Self {
            image,
            powers,
            square_powers,
        }
    }

    pub fn identity(ring: &QuotientRing) -> Self {
        Self::new(ring, ring.x())
    }

    /// eta(x) = x pi(x) + x + a.
    pub fn eta(params: &DeformationParams, ring: &QuotientRing) -> Self {
        let image = &(&XPoly::x() * &params.pi()) + &XPoly::linear(&params.a);
        Self::new(ring, ring.reduce(&image))
    }

    pub fn image_of_generator(&self) -> &QuotientElement {
        &self.image
    }

    pub fn apply(&self, v: &QuotientElement) -> QuotientElement {
        combine(&self.powers, v)
    }

    pub fn apply_twice(&self, v: &QuotientElement) -> QuotientElement {
        combine(&self.square_powers, v)
    }

    pub fn apply_n(&self, v: &QuotientElement, n: usize) -> QuotientElement {
        let mut out = v.clone();
        for _ in 0..n / 2 {
            out = self.apply_twice(&out);
        }
        if n % 2 == 1 {
            out = self.apply(&out);
        }
        out
    }

    /// eta applied twice fixes the basis, hence everything.
    pub fn is_involution(&self) -> bool {
        (0..4).all(|i| self.square_powers[i] == QuotientElement::basis(i))
    }

    /// `m(eta(x)) = 0` in the quotient, so eta descends from F[x].
    pub fn well_defined(&self, ring: &QuotientRing) -> bool {
        ring.eval(ring.modulus(), &self.image).is_zero()
    }

    /// For each factor `f` of the modulus, whether `f | f(E(x))` in F[x],
    /// where `E` is the degree-below-4 lift of the image of `x`.
    pub fn preserves_factors(&self, factors: &[XPoly]) -> Vec<bool> {
        let lift = self.image.lift();
        factors
            .iter()
            .map(|f| f.compose(&lift).rem(f).is_ok_and(|r| r.is_zero()))
            .collect()
    }
}

fn combine(images: &[QuotientElement; 4], v: &QuotientElement) -> QuotientElement {
    v.coords()
        .iter()
        .zip(images)
        .filter(|(c, _)| !c.is_zero())
        .fold(QuotientElement::zero(), |acc, (c, img)| &acc + &img.scale(c))
}

/// A skew polynomial in left normal form: `sum_i coeffs[i] y^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    coeffs: Vec<QuotientElement>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<QuotientElement>) -> Self {
        while coeffs.last().is_some_and(QuotientElement::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QuotientElement) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QuotientElement::one())
    }

    /// `c y^k`.
    pub fn monomial(c: QuotientElement, k: usize) -> Self {
        let mut coeffs = vec![QuotientElement::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn y() -> Self {
        Self::monomial(QuotientElement::one(), 1)
    }

    pub fn coeffs(&self) -> &[QuotientElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuotientElement {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&QuotientElement::one())
    }

    /// Coefficient-wise specialization at `t = 0`.
    pub fn at_zero(&self) -> Result<Vec<[bool; 4]>, crate::scalar::ScalarError> {
        self.coeffs.iter().map(QuotientElement::at_zero).collect()
    }
}

impl Add<&SkewPoly> for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SkewPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*y"),
                _ => format!("({c})*y^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{self}]")
    }
}

/// Arithmetic context for `A[y; eta]`.
#[derive(Clone, Debug)]
pub struct SkewRing {
    ring: QuotientRing,
    twist: Automorphism,
}

impl SkewRing {
    pub fn new(ring: QuotientRing, twist: Automorphism) -> Self {
        Self { ring, twist }
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn twist(&self) -> &Automorphism {
        &self.twist
    }

    /// `(a y^i)(b y^j) = a eta^i(b) y^(i+j)`.
    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        if f.is_zero() || g.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![QuotientElement::zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let twisted = self.twist.apply_n(b, i);
                out[i + j] = &out[i + j] + &self.ring.mul(a, &twisted);
            }
        }
        SkewPoly::new(out)
    }

    pub fn commutator(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        &self.mul(f, g) + &self.mul(g, f)
    }

    /// Commutes with the generators `x` and `y`, which generate the ring.
    pub fn is_central(&self, f: &SkewPoly) -> bool {
        let x = SkewPoly::constant(self.ring.x());
        self.commutator(f, &x).is_zero() && self.commutator(f, &SkewPoly::y()).is_zero()
    }

    /// Remainder of `f` on division by a monic `g` of positive degree, by
    /// cancelling leading terms with left multiples `c y^k g`. When `g` is
    /// central this is also the right remainder.
    pub fn rem(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let dg = g.degree().expect("divisor is nonzero");
        assert!(dg > 0 && g.is_monic(), "divisor must be monic of positive degree");
        let mut r = f.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lead = SkewPoly::monomial(r.coeffs[dr].clone(), dr - dg);
            r = &r + &self.mul(&lead, g);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::compute_idempotents;

    fn setup() -> (DeformationParams, SkewRing) {
        let p = DeformationParams::example();
        let ring = QuotientRing::from_params(&p).unwrap();
        let eta = Automorphism::eta(&p, &ring);
        (p, SkewRing::new(ring, eta))
    }

    #[test]
    fn eta_specializes_to_cube() {
        let (_, s) = setup();
        let img = s.twist().image_of_generator();
        assert!(img.coords().iter().all(|c| c.is_integral()));
        assert_eq!(img.at_zero().unwrap(), [false, false, false, true]);
        assert_eq!(s.twist().apply(&QuotientElement::one()), QuotientElement::one());
    }

    #[test]
    fn eta_is_a_well_defined_involution() {
        let (p, s) = setup();
        let eta = s.twist();
        assert!(eta.well_defined(s.ring()));
        assert!(eta.is_involution());
        assert_eq!(eta.apply(eta.image_of_generator()), s.ring().x());
        let factors = [p.pi(), XPoly::linear(&p.c), XPoly::linear(&p.d)];
        assert_eq!(eta.preserves_factors(&factors), vec![true; 3]);
    }

    #[test]
    fn eta_on_pi_matches_closed_form() {
        // eta(pi(x)) = pi(x) + x(x+w)p_t(x) as polynomials in x
        let (p, s) = setup();
        let lift = s.twist().image_of_generator().lift();
        let lhs = p.pi().compose(&lift);
        let rhs = &p.pi() + &(&(&XPoly::x() * &XPoly::linear(&p.w)) * s.ring().modulus());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn a_bad_endomorphism_is_detected() {
        let (_, s) = setup();
        let shifted = &s.ring().x() + &QuotientElement::one();
        let bad = Automorphism::new(s.ring(), shifted);
        assert!(!bad.well_defined(s.ring()));
        assert!(Automorphism::identity(s.ring()).well_defined(s.ring()));
    }

    #[test]
    fn eta_fixes_idempotents_and_twists_the_field_block() {
        let (p, s) = setup();
        let e = compute_idempotents(&p, s.ring()).unwrap();
        for ei in e.as_array() {
            assert_eq!(&s.twist().apply(ei), ei);
        }
        let xe1 = s.ring().mul(&s.ring().x(), &e.e1);
        let expected = s
            .ring()
            .mul(&(&s.ring().x() + &QuotientElement::scalar(p.a.clone())), &e.e1);
        assert_eq!(s.twist().apply(&xe1), expected);
        assert_ne!(s.twist().apply(&xe1), xe1);
    }

    #[test]
    fn twist_relation() {
        let (_, s) = setup();
        let x = SkewPoly::constant(s.ring().x());
        let eta_x = s.twist().image_of_generator().clone();
        assert_eq!(s.mul(&SkewPoly::y(), &x), SkewPoly::monomial(eta_x.clone(), 1));
        assert_eq!(s.mul(&SkewPoly::y(), &SkewPoly::y()), SkewPoly::monomial(QuotientElement::one(), 2));
        let xy = SkewPoly::monomial(s.ring().x(), 1);
        let expected = SkewPoly::monomial(s.ring().mul(&s.ring().x(), &eta_x), 2);
        assert_eq!(s.mul(&xy, &xy), expected);
    }

    #[test]
    fn centrality_of_simple_elements() {
        let (_, s) = setup();
        assert!(s.is_central(&SkewPoly::one()));
        assert!(!s.is_central(&SkewPoly::y()));
        assert!(s.is_central(&SkewPoly::monomial(QuotientElement::one(), 2)));
    }
}
