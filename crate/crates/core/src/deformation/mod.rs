//! The deformed quaternion algebra `A[y; eta]/(q_t)` with
//! `q_t(y) = y^2 + z x pi(x) y + x^2 + a x`, on the basis `x^i y^j`
//! (slot `i + 4j`), and its comparison with GF(2)Q8 at `t = 0`.

mod group;
mod psi;

pub use group::{index as group_index, label as group_label, GroupTable, GROUP_ORDER};
pub use psi::{cocycle_defects, hochschild_cocycle_check, psi_extract, PsiTable};

use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::params::DeformationParams;
use crate::quotient::{compute_idempotents, IdempotentTriple, QuotientElement, QuotientError, QuotientRing, XPoly};
use crate::scalar::{RationalField, RationalFunction, Valuation};
use crate::skew::{Automorphism, SkewPoly, SkewRing};

pub const ALGEBRA_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("z = {0} must be a nonzero element of positive valuation")]
    InvalidZ(String),
    #[error("q_t is not central, so (q_t) is not a two-sided ideal")]
    NonCentralRelation,
    #[error("structure constant for {left} * {right} has coordinate {coordinate} of valuation {valuation}")]
    Flatness {
        left: String,
        right: String,
        coordinate: String,
        valuation: i64,
    },
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

/// Label of a basis slot, e.g. `x^2 y`.
pub fn basis_label(k: usize) -> String {
    let (i, j) = (k % 4, k / 4);
    let x = match i {
        0 => "",
        1 => "x",
        2 => "x^2",
        _ => "x^3",
    };
    match (i, j) {
        (0, 0) => "1".into(),
        (0, _) => "y".into(),
        (_, 0) => x.into(),
        _ => format!("{x} y"),
    }
}

/// An element of the 8-dimensional algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    coords: [RationalFunction; ALGEBRA_DIM],
}

impl AlgebraElement {
    pub fn new(coords: [RationalFunction; ALGEBRA_DIM]) -> Self {
        Self { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut e = Self::zero();
        e.coords[k] = RationalFunction::one();
        e
    }

    pub fn coords(&self) -> &[RationalFunction; ALGEBRA_DIM] {
        &self.coords
    }

    pub fn from_slice(v: &[RationalFunction]) -> Self {
        Self {
            coords: std::array::from_fn(|i| v[i].clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RationalFunction::is_zero)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    /// `u + v y` from two elements of the commutative part.
    pub fn from_parts(u: &QuotientElement, v: &QuotientElement) -> Self {
        Self {
            coords: std::array::from_fn(|k| {
                if k < 4 {
                    u.coords()[k].clone()
                } else {
                    v.coords()[k - 4].clone()
                }
            }),
        }
    }

    pub fn to_skew(&self) -> SkewPoly {
        let part = |off: usize| QuotientElement::new(std::array::from_fn(|i| self.coords[off + i].clone()));
        SkewPoly::new(vec![part(0), part(4)])
    }

    /// Requires y-degree below 2.
    pub fn from_skew(f: &SkewPoly) -> Self {
        assert!(f.degree().unwrap_or(0) < 2, "reduce modulo q_t first");
        Self::from_parts(&f.coeff(0), &f.coeff(1))
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match (c.is_one(), k) {
                (true, _) => basis_label(k),
                (false, 0) => format!("{c}"),
                (false, _) => format!("({c})*{}", basis_label(k)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{self}]")
    }
}

/// `q_t(y) = y^2 + z x pi(x) y + x^2 + a x`.
pub fn build_qt(params: &DeformationParams, skew: &SkewRing) -> Result<SkewPoly, DeformationError> {
    if params.z.is_zero() || params.z.valuation() < Valuation::Finite(1) {
        return Err(DeformationError::InvalidZ(params.z.to_string()));
    }
    let ring = skew.ring();
    let x_pi = ring.reduce(&(&XPoly::x() * &params.pi()).scale(&params.z));
    let constant = ring.reduce(&XPoly::new(vec![
        RationalFunction::zero(),
        params.a.clone(),
        RationalFunction::one(),
    ]));
    Ok(SkewPoly::new(vec![constant, x_pi, QuotientElement::one()]))
}

/// Everything needed to compute in the deformed algebra.
#[derive(Clone, Debug)]
pub struct DeformedAlgebra {
    params: DeformationParams,
    skew: SkewRing,
    idempotents: IdempotentTriple,
    qt: SkewPoly,
    algebra: FiniteAlgebra<RationalField>,
}

impl DeformedAlgebra {
    /// Builds the modulus, eta, the idempotents and q_t, then tabulates the
    /// 64 basis products. Fails if q_t is not central, since the quotient
    /// would not be an algebra.
    pub fn new(params: &DeformationParams) -> Result<Self, DeformationError> {
        let ring = QuotientRing::from_params(params)?;
        let eta = Automorphism::eta(params, &ring);
        let idempotents = compute_idempotents(params, &ring)?;
        let skew = SkewRing::new(ring, eta);
        let qt = build_qt(params, &skew)?;
        if !qt.is_monic() || qt.degree() != Some(2) || !skew.is_central(&qt) {
            return Err(DeformationError::NonCentralRelation);
        }
        let mut this = Self {
            params: params.clone(),
            skew,
            idempotents,
            qt,
            algebra: FiniteAlgebra::new(
                RationalField,
                1,
                vec![vec![RationalFunction::one()]],
                vec![RationalFunction::one()],
            ),
        };
        let products = (0..ALGEBRA_DIM * ALGEBRA_DIM)
            .map(|ij| {
                let p = this.mul_via_skew(
                    &AlgebraElement::basis(ij / ALGEBRA_DIM),
                    &AlgebraElement::basis(ij % ALGEBRA_DIM),
                );
                p.coords.to_vec()
            })
            .collect();
        this.algebra = FiniteAlgebra::new(
            RationalField,
            ALGEBRA_DIM,
            products,
            AlgebraElement::basis(0).coords.to_vec(),
        );
        Ok(this)
    }

    pub fn params(&self) -> &DeformationParams {
        &self.params
    }

    pub fn skew(&self) -> &SkewRing {
        &self.skew
    }

    pub fn ring(&self) -> &QuotientRing {
        self.skew.ring()
    }

    pub fn eta(&self) -> &Automorphism {
        self.skew.twist()
    }

    pub fn idempotents(&self) -> &IdempotentTriple {
        &self.idempotents
    }

    pub fn qt(&self) -> &SkewPoly {
        &self.qt
    }

    /// The algebra as a structure-constant table (unchecked for flatness).
    pub fn algebra(&self) -> &FiniteAlgebra<RationalField> {
        &self.algebra
    }

    /// Product computed in the skew ring and reduced modulo the central,
    /// monic q_t.
    pub fn mul_via_skew(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let prod = self.skew.mul(&u.to_skew(), &v.to_skew());
        AlgebraElement::from_skew(&self.skew.rem(&prod, &self.qt))
    }

    /// Product via the structure constants.
    pub fn mul(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_slice(&self.algebra.mul(u.coords(), v.coords()))
    }

    /// Structure constants, certified to lie in GF(2)[[t]].
    pub fn structure_constants(&self) -> Result<StructureConstants, DeformationError> {
        for i in 0..ALGEBRA_DIM {
            for j in 0..ALGEBRA_DIM {
                for (k, c) in self.algebra.product(i, j).iter().enumerate() {
                    if let Valuation::Finite(v) = c.valuation() {
                        if v < 0 {
                            return Err(DeformationError::Flatness {
                                left: basis_label(i),
                                right: basis_label(j),
                                coordinate: basis_label(k),
                                valuation: v,
                            });
                        }
                    }
                }
            }
        }
        Ok(StructureConstants {
            algebra: self.algebra.clone(),
        })
    }

    /// Element of the commutative part, embedded in degree 0.
    pub fn embed(&self, u: &QuotientElement) -> AlgebraElement {
        AlgebraElement::from_parts(u, &QuotientElement::zero())
    }

    pub fn x(&self) -> AlgebraElement {
        AlgebraElement::basis(1)
    }

    pub fn y(&self) -> AlgebraElement {
        AlgebraElement::basis(4)
    }

    /// The expected summands `q_t e_i`:
    /// `(y^2 + b) e1`, `(y^2 + z a y + c(c+a)) e2`, `(y^2 + z a y + d(d+a)) e3`.
    pub fn qt_block_targets(&self) -> [SkewPoly; 3] {
        let p = &self.params;
        let e = &self.idempotents;
        let za = &p.z * &p.a;
        let scaled = |c: &RationalFunction, ei: &QuotientElement| ei.scale(c);
        [
            SkewPoly::new(vec![scaled(&p.b, &e.e1), QuotientElement::zero(), e.e1.clone()]),
            SkewPoly::new(vec![
                scaled(&(&p.c * &(&p.c + &p.a)), &e.e2),
                scaled(&za, &e.e2),
                e.e2.clone(),
            ]),
            SkewPoly::new(vec![
                scaled(&(&p.d * &(&p.d + &p.a)), &e.e3),
                scaled(&za, &e.e3),
                e.e3.clone(),
            ]),
        ]
    }

    /// Whether `q_t e_i` equals each target, and whether the targets sum to q_t.
    pub fn qt_decomposition(&self) -> ([bool; 3], bool) {
        let targets = self.qt_block_targets();
        let e = self.idempotents.as_array();
        let parts = std::array::from_fn(|i| {
            self.skew.mul(&self.qt, &SkewPoly::constant(e[i].clone())) == targets[i]
        });
        let sum = &(&targets[0] + &targets[1]) + &targets[2];
        (parts, sum == self.qt)
    }

    /// `q_t` at `t = 0` is `y^2 + x^2`.
    pub fn qt_specializes_to_group_relation(&self) -> bool {
        let expected = vec![[false, false, true, false], [false; 4], [true, false, false, false]];
        self.qt.at_zero().is_ok_and(|v| v == expected)
    }
}

/// Structure constants whose every coordinate has nonnegative valuation.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    algebra: FiniteAlgebra<RationalField>,
}

impl StructureConstants {
    pub fn algebra(&self) -> &FiniteAlgebra<RationalField> {
        &self.algebra
    }

    pub fn product(&self, i: usize, j: usize) -> AlgebraElement {
        AlgebraElement::from_slice(self.algebra.product(i, j))
    }

    /// Specialization of one product at `t = 0`, as a bit vector over the basis.
    pub fn product_at_zero(&self, i: usize, j: usize) -> u8 {
        self.algebra
            .product(i, j)
            .iter()
            .enumerate()
            .filter(|(_, c)| c.at_zero().expect("flat coordinates are integral"))
            .fold(0u8, |acc, (k, _)| acc | (1 << k))
    }
}

/// Comparison of the `t = 0` structure constants with a group table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTableComparison {
    /// Basis pairs whose specialized product is not the group product.
    pub mismatches: Vec<(usize, usize)>,
}

impl GroupTableComparison {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn matched_pairs(&self) -> usize {
        ALGEBRA_DIM * ALGEBRA_DIM - self.mismatches.len()
    }
}

pub fn specialize_table_t0(sc: &StructureConstants, group: &GroupTable) -> GroupTableComparison {
    let mismatches = (0..ALGEBRA_DIM)
        .flat_map(|i| (0..ALGEBRA_DIM).map(move |j| (i, j)))
        .filter(|&(i, j)| sc.product_at_zero(i, j) != 1u8 << group.mul(i, j))
        .collect();
    GroupTableComparison { mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    fn example() -> DeformedAlgebra {
        DeformedAlgebra::new(&DeformationParams::example()).unwrap()
    }

    #[test]
    fn qt_is_central_and_monic() {
        let alg = example();
        assert!(alg.skew().is_central(alg.qt()));
        assert!(alg.qt().is_monic());
        assert_eq!(alg.qt().degree(), Some(2));
    }

    #[test]
    fn qt_decomposes_along_idempotents() {
        let (parts, sum) = example().qt_decomposition();
        assert_eq!(parts, [true; 3]);
        assert!(sum);
    }

    #[test]
    fn qt_at_zero() {
        assert!(example().qt_specializes_to_group_relation());
    }

    #[test]
    fn invalid_z() {
        let mut p = DeformationParams::example();
        for z in ["0", "1", "1/t"] {
            p.z = rf(z);
            assert!(matches!(DeformedAlgebra::new(&p), Err(DeformationError::InvalidZ(_))));
        }
    }

    #[test]
    fn basic_products() {
        let alg = example();
        let p = alg.params().clone();
        let x = alg.x();
        let y = alg.y();
        assert_eq!(alg.mul_via_skew(&x, &x), AlgebraElement::basis(2));
        // y^2 = z x pi(x) y + x^2 + a x
        let x_pi = alg.ring().reduce(&(&XPoly::x() * &p.pi()).scale(&p.z));
        let rest = alg.ring().reduce(&XPoly::new(vec![rf("0"), p.a.clone(), rf("1")]));
        assert_eq!(alg.mul_via_skew(&y, &y), AlgebraElement::from_parts(&rest, &x_pi));
        // y x = eta(x) y
        let eta_x = alg.eta().image_of_generator().clone();
        assert_eq!(
            alg.mul_via_skew(&y, &x),
            AlgebraElement::from_parts(&QuotientElement::zero(), &eta_x)
        );
        // x * x^3 = x^4, the tail of the modulus
        let tail = alg.ring().reduce(&XPoly::monomial(rf("1"), 4));
        assert_eq!(alg.mul(&x, &AlgebraElement::basis(3)), alg.embed(&tail));
    }

    #[test]
    fn table_and_skew_routes_agree() {
        let alg = example();
        let u = AlgebraElement::new(std::array::from_fn(|k| rf(["1", "t", "0", "1/(1+t)", "t^2", "0", "1", "1+t"][k])));
        let v = AlgebraElement::new(std::array::from_fn(|k| rf(["t", "0", "1", "1", "0", "t^3", "1/t", "1"][k])));
        assert_eq!(alg.mul(&u, &v), alg.mul_via_skew(&u, &v));
    }

    #[test]
    fn flatness_and_group_table() {
        let alg = example();
        let sc = alg.structure_constants().unwrap();
        let cmp = specialize_table_t0(&sc, &GroupTable::quaternion());
        assert!(cmp.matches(), "{:?}", cmp.mismatches);
        assert_eq!(cmp.matched_pairs(), 64);
        let (s, r) = (group_index(1, 0), group_index(0, 1));
        assert_eq!(sc.product_at_zero(r, s), 1 << group_index(3, 1));
        assert_eq!(sc.product_at_zero(r, r), 1 << group_index(2, 0));
        for v in 0..8 {
            assert_eq!(sc.product(0, v), AlgebraElement::basis(v));
        }
    }

    #[test]
    fn associativity() {
        let alg = example();
        assert!(alg.algebra().associativity_defects().is_empty());
        assert!(alg.algebra().unit_law_holds());
    }
}
