//! The quadratic extension `K = F[s]/(s^2 + a s + b)` and the splitting of
//! the `e1` block over it.

use std::fmt;

use crate::deformation::{AlgebraElement, DeformedAlgebra};
use crate::linalg;
use crate::quotient::XPoly;
use crate::scalar::{Char2Field, RationalField, RationalFunction};

use super::{AnalysisError, CrossedProductData};

/// `c0 + c1 s`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KElem(pub [RationalFunction; 2]);

impl KElem {
    pub fn from_f(c: RationalFunction) -> Self {
        Self([c, RationalFunction::zero()])
    }

    pub fn s() -> Self {
        Self([RationalFunction::zero(), RationalFunction::one()])
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.0[0].is_zero(), self.0[1].is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.0[0]),
            (true, false) if self.0[1].is_one() => write!(f, "s"),
            (true, false) => write!(f, "({})s", self.0[1]),
            (false, false) if self.0[1].is_one() => write!(f, "{} + s", self.0[0]),
            (false, false) => write!(f, "{} + ({})s", self.0[0], self.0[1]),
        }
    }
}

/// Arithmetic in `K`. Only a field when `s^2 + a s + b` is irreducible,
/// which callers certify separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingField {
    a: RationalFunction,
    b: RationalFunction,
}

impl SplittingField {
    pub fn new(a: RationalFunction, b: RationalFunction) -> Self {
        Self { a, b }
    }

    pub fn from_minimal_polynomial(pi: &XPoly) -> Result<Self, AnalysisError> {
        if pi.degree() != Some(2) || !pi.is_monic() {
            return Err(AnalysisError::NotQuadratic(pi.to_string()));
        }
        Ok(Self::new(pi.coeff(1), pi.coeff(0)))
    }

    /// `c0^2 + a c0 c1 + b c1^2`.
    pub fn norm(&self, x: &KElem) -> RationalFunction {
        let [c0, c1] = &x.0;
        &(&c0.square() + &(&(&self.a * c0) * c1)) + &(&self.b * &c1.square())
    }

    /// The other root: `s -> s + a`.
    pub fn conjugate(&self, x: &KElem) -> KElem {
        let [c0, c1] = &x.0;
        KElem([c0 + &(&self.a * c1), c1.clone()])
    }
}

impl Char2Field for SplittingField {
    type Elem = KElem;

    fn zero(&self) -> KElem {
        KElem::default()
    }

    fn one(&self) -> KElem {
        KElem::from_f(RationalFunction::one())
    }

    fn is_zero(&self, x: &KElem) -> bool {
        x.0[0].is_zero() && x.0[1].is_zero()
    }

    fn add(&self, x: &KElem, y: &KElem) -> KElem {
        KElem([&x.0[0] + &y.0[0], &x.0[1] + &y.0[1]])
    }

    fn mul(&self, x: &KElem, y: &KElem) -> KElem {
        // s^2 = a s + b
        let [x0, x1] = &x.0;
        let [y0, y1] = &y.0;
        let top = x1 * y1;
        KElem([
            &(x0 * y0) + &(&self.b * &top),
            &(&(x0 * y1) + &(x1 * y0)) + &(&self.a * &top),
        ])
    }

    fn inv(&self, x: &KElem) -> Option<KElem> {
        let n = self.norm(x).inv().ok()?;
        let c = self.conjugate(x);
        Some(KElem([&c.0[0] * &n, &c.0[1] * &n]))
    }

    fn size(&self, x: &KElem) -> usize {
        x.0[0].size() + x.0[1].size()
    }
}

pub type KMatrix = [[KElem; 2]; 2];

/// The `e1` block as a right `K`-space with basis `{e1, v}`, `K` acting by
/// right multiplication through `s -> u`.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub labels: [&'static str; 4],
    /// Left multiplication by `e1, u, v, uv` as `2 x 2` matrices over `K`.
    pub matrices: [KMatrix; 4],
    pub unit_is_identity: bool,
    /// `det(X + M_u) = pi(X)`.
    pub u_char_poly_is_pi: bool,
    /// Left multiplication by `u` on `span_F{e1, u}` in that basis.
    pub u_regular_matrix: [[RationalFunction; 2]; 2],
    pub u_regular_is_companion: bool,
    /// Basis pairs `(i, j)` with `M(f_i f_j) != M(f_i) M(f_j)`.
    pub non_multiplicative: Vec<(usize, usize)>,
    pub rank_over_k: usize,
    pub rank_over_f: usize,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.unit_is_identity
            && self.u_char_poly_is_pi
            && self.u_regular_is_companion
            && self.non_multiplicative.is_empty()
            && self.rank_over_k == 4
            && self.rank_over_f == 4
    }
}

/// Coordinates of `w` on the F-basis `{e1, u, v, vu}` of the block.
fn block_coordinates(
    frame: &[AlgebraElement; 4],
    w: &AlgebraElement,
) -> Result<[RationalFunction; 4], AnalysisError> {
    let columns: Vec<Vec<RationalFunction>> = frame.iter().map(|f| f.coords().to_vec()).collect();
    let rows = linalg::transpose(&columns);
    let x = linalg::solve(&RationalField, &rows, w.coords(), 4).ok_or_else(|| AnalysisError::NotInBlock(w.to_string()))?;
    Ok([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()])
}

fn k_matrix(
    alg: &DeformedAlgebra,
    frame: &[AlgebraElement; 4],
    beta: &AlgebraElement,
) -> Result<KMatrix, AnalysisError> {
    let e1 = &frame[0];
    let v = &frame[2];
    // beta * e1 and beta * v, each written as e1 k + v k'
    let col = |w: AlgebraElement| -> Result<[KElem; 2], AnalysisError> {
        let [a0, a1, g0, g1] = block_coordinates(frame, &w)?;
        Ok([KElem([a0, a1]), KElem([g0, g1])])
    };
    let c0 = col(alg.mul(beta, e1))?;
    let c1 = col(alg.mul(beta, v))?;
    let [r00, r10] = c0;
    let [r01, r11] = c1;
    Ok([[r00, r01], [r10, r11]])
}

fn to_rows(m: &KMatrix) -> Vec<Vec<KElem>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// Computes the left-multiplication matrices over K of the block basis and
/// checks they form a multiplicative, injective image spanning `M_2(K)`.
pub fn split_block_over_k(
    alg: &DeformedAlgebra,
    cross: &CrossedProductData,
    k: &SplittingField,
) -> Result<SplittingReport, AnalysisError> {
    let e1 = alg.embed(&alg.idempotents().e1);
    let (u, v) = (cross.u.clone(), cross.v.clone());
    let vu = alg.mul(&v, &u);
    let frame = [e1.clone(), u.clone(), v.clone(), vu];
    let basis = [e1, u.clone(), v.clone(), alg.mul(&u, &v)];

    let matrices: [KMatrix; 4] = {
        let mut out = Vec::with_capacity(4);
        for b in &basis {
            out.push(k_matrix(alg, &frame, b)?);
        }
        out.try_into().expect("four basis elements")
    };

    let identity = [[k.one(), k.zero()], [k.zero(), k.one()]];
    let unit_is_identity = matrices[0] == identity;

    // det(X + M) = X^2 + tr(M) X + det(M); its coefficients must be a and b in F
    let mu = &matrices[1];
    let trace = k.add(&mu[0][0], &mu[1][1]);
    let det = k.add(&k.mul(&mu[0][0], &mu[1][1]), &k.mul(&mu[0][1], &mu[1][0]));
    let u_char_poly_is_pi = trace == KElem::from_f(k.a.clone()) && det == KElem::from_f(k.b.clone());

    let reg = |w: &AlgebraElement| -> Result<[RationalFunction; 2], AnalysisError> {
        let c = block_coordinates(&frame, w)?;
        Ok([c[0].clone(), c[1].clone()])
    };
    let col_e1 = reg(&basis[1])?;
    let col_u = reg(&alg.mul(&u, &u))?;
    let u_regular_matrix = [
        [col_e1[0].clone(), col_u[0].clone()],
        [col_e1[1].clone(), col_u[1].clone()],
    ];
    let companion = [
        [RationalFunction::zero(), k.b.clone()],
        [RationalFunction::one(), k.a.clone()],
    ];
    let u_regular_is_companion = u_regular_matrix == companion;

    let mut non_multiplicative = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let lhs = to_rows(&k_matrix(alg, &frame, &alg.mul(&basis[i], &basis[j]))?);
            let rhs = linalg::mat_mul(k, &to_rows(&matrices[i]), &to_rows(&matrices[j]));
            if lhs != rhs {
                non_multiplicative.push((i, j));
            }
        }
    }

    let flat: Vec<Vec<KElem>> = matrices.iter().map(|m| m.iter().flatten().cloned().collect()).collect();
    let rank_over_k = linalg::rank(k, &flat);
    let over_f: Vec<Vec<RationalFunction>> = flat
        .iter()
        .map(|row| row.iter().flat_map(|e| e.0.iter().cloned()).collect())
        .collect();
    let rank_over_f = linalg::rank(&RationalField, &over_f);
    if rank_over_k < 4 {
        return Err(AnalysisError::Dependence { rank: rank_over_k });
    }

    Ok(SplittingReport {
        labels: ["e1", "u", "v", "uv"],
        matrices,
        unit_is_identity,
        u_char_poly_is_pi,
        u_regular_matrix,
        u_regular_is_companion,
        non_multiplicative,
        rank_over_k,
        rank_over_f,
    })
}
