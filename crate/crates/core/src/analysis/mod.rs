//! Structure of the deformed algebra: its three blocks, the crossed product
//! on the `e1` block, the two commutative blocks, and the resulting
//! dimension vector over an algebraic closure.

mod separability;
mod splitting;

pub use separability::{
    separability_certificate, separability_system, verify_certificate, verify_infeasibility, SeparabilityOutcome,
};
pub use splitting::{split_block_over_k, KElem, KMatrix, SplittingField, SplittingReport};

use thiserror::Error;

use crate::deformation::{AlgebraElement, DeformedAlgebra, GroupTable, GROUP_ORDER};
use crate::linalg;
use crate::quotient::XPoly;
use crate::scalar::{RationalField, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("e{0} is not central in the algebra")]
    NotCentral(usize),
    #[error("{0} does not lie in the e1 block")]
    NotInBlock(String),
    #[error("block images span only rank {rank} over K")]
    Dependence { rank: usize },
    #[error("{0} is not a monic quadratic")]
    NotQuadratic(String),
    #[error("cannot assemble the dimension vector: {0}")]
    Assembly(&'static str),
}

/// The ideals `A e_i`.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// A reduced echelon basis of `A e_i` for each `i`.
    pub spans: [Vec<AlgebraElement>; 3],
    pub dims: [usize; 3],
    /// `e1, u, v, uv` with `u = x e1`, `v = y e1`; then `e2, y e2`; `e3, y e3`.
    pub natural_bases: [Vec<AlgebraElement>; 3],
    /// Natural bases lie in their blocks and are independent.
    pub natural_bases_ok: bool,
    /// Pairs of blocks `(i, j)`, `i != j`, with a nonzero cross product.
    pub cross_products_nonzero: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn passed(&self) -> bool {
        self.dims == [4, 2, 2] && self.natural_bases_ok && self.cross_products_nonzero.is_empty()
    }
}

fn idempotent_elements(alg: &DeformedAlgebra) -> [AlgebraElement; 3] {
    let e = alg.idempotents();
    [alg.embed(&e.e1), alg.embed(&e.e2), alg.embed(&e.e3)]
}

fn span_rank(vectors: &[AlgebraElement]) -> usize {
    let rows: Vec<Vec<RationalFunction>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    linalg::rank(&RationalField, &rows)
}

pub fn decompose_blocks(alg: &DeformedAlgebra) -> Result<BlockDecomposition, AnalysisError> {
    let es = idempotent_elements(alg);
    for (i, e) in es.iter().enumerate() {
        if !alg.algebra().is_central(e.coords()) {
            return Err(AnalysisError::NotCentral(i + 1));
        }
    }
    let spans: [Vec<AlgebraElement>; 3] = std::array::from_fn(|i| {
        let rows = (0..8)
            .map(|k| alg.mul(&AlgebraElement::basis(k), &es[i]).coords().to_vec())
            .collect();
        linalg::reduce(&RationalField, rows, 8)
            .rows
            .iter()
            .map(|r| AlgebraElement::from_slice(r))
            .collect()
    });
    let dims = std::array::from_fn(|i| spans[i].len());

    let (x, y) = (alg.x(), alg.y());
    let u = alg.mul(&x, &es[0]);
    let v = alg.mul(&y, &es[0]);
    let uv = alg.mul(&u, &v);
    let natural_bases = [
        vec![es[0].clone(), u, v, uv],
        vec![es[1].clone(), alg.mul(&y, &es[1])],
        vec![es[2].clone(), alg.mul(&y, &es[2])],
    ];
    let natural_bases_ok = (0..3).all(|i| {
        let basis = &natural_bases[i];
        basis.iter().all(|b| &alg.mul(b, &es[i]) == b) && span_rank(basis) == basis.len() && basis.len() == dims[i]
    });

    let mut cross_products_nonzero = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j && spans[i].iter().any(|p| spans[j].iter().any(|q| !alg.mul(p, q).is_zero())) {
                cross_products_nonzero.push((i + 1, j + 1));
            }
        }
    }

    Ok(BlockDecomposition {
        spans,
        dims,
        natural_bases,
        natural_bases_ok,
        cross_products_nonzero,
    })
}

/// The centre of a block given by a basis.
#[derive(Clone, Debug)]
pub struct BlockCenter {
    pub dim: usize,
    pub basis: Vec<AlgebraElement>,
}

/// Solves `sum_k c_k [f_k, f_l] = 0` for all `l`.
pub fn center_of_block(alg: &DeformedAlgebra, block: &[AlgebraElement]) -> BlockCenter {
    let n = block.len();
    let commutators: Vec<Vec<AlgebraElement>> = block
        .iter()
        .map(|fk| block.iter().map(|fl| &alg.mul(fk, fl) + &alg.mul(fl, fk)).collect())
        .collect();
    // one equation per (l, coordinate), one unknown per k
    let rows: Vec<Vec<RationalFunction>> = (0..n)
        .flat_map(|l| (0..8).map(move |m| (l, m)))
        .map(|(l, m)| (0..n).map(|k| commutators[k][l].coords()[m].clone()).collect())
        .collect();
    let kernel = linalg::nullspace(&RationalField, &rows, n);
    let basis = kernel
        .iter()
        .map(|c| {
            block
                .iter()
                .zip(c)
                .fold(AlgebraElement::zero(), |acc, (f, ck)| &acc + &f.scale(ck))
        })
        .collect();
    BlockCenter {
        dim: kernel.len(),
        basis,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// The `e1` block as a crossed product of `K` with `C2`.
#[derive(Clone, Debug)]
pub struct CrossedProductData {
    pub u: AlgebraElement,
    pub v: AlgebraElement,
    pub relations: Vec<RelationCheck>,
    /// Products of the group-indexed basis `{e1, v}` against `f(g, h) . gh`.
    pub cocycle: Vec<RelationCheck>,
}

impl CrossedProductData {
    pub fn broken(&self) -> Vec<String> {
        self.relations
            .iter()
            .chain(&self.cocycle)
            .filter(|r| !r.holds)
            .map(|r| r.name.to_string())
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.broken().is_empty()
    }
}

pub fn crossed_product_relations(alg: &DeformedAlgebra) -> CrossedProductData {
    let p = alg.params();
    let e1 = alg.embed(&alg.idempotents().e1);
    let u = alg.mul(&alg.x(), &e1);
    let v = alg.mul(&alg.y(), &e1);
    let ae1 = e1.scale(&p.a);
    let be1 = e1.scale(&p.b);
    let uu = alg.mul(&u, &u);
    let relations = vec![
        RelationCheck {
            name: "u^2 + a u + b e1 = 0",
            holds: (&(&uu + &u.scale(&p.a)) + &be1).is_zero(),
        },
        RelationCheck {
            name: "v^2 = b e1",
            holds: alg.mul(&v, &v) == be1,
        },
        RelationCheck {
            name: "v u = (u + a e1) v",
            holds: alg.mul(&v, &u) == alg.mul(&(&u + &ae1), &v),
        },
    ];
    let cocycle = vec![
        RelationCheck {
            name: "f(1,1) = e1",
            holds: alg.mul(&e1, &e1) == e1,
        },
        RelationCheck {
            name: "f(1,tau) = e1",
            holds: alg.mul(&e1, &v) == v,
        },
        RelationCheck {
            name: "f(tau,1) = e1",
            holds: alg.mul(&v, &e1) == v,
        },
        RelationCheck {
            name: "f(tau,tau) = b e1",
            holds: alg.mul(&v, &v) == alg.mul(&be1, &e1),
        },
    ];
    CrossedProductData {
        u,
        v,
        relations,
        cocycle,
    }
}

/// Minimal polynomial of `y e_i` on a commutative block.
#[derive(Clone, Debug)]
pub struct EtaleBlock {
    pub index: usize,
    /// `None` when `y e_i` is not quadratic over `F e_i`.
    pub minimal_polynomial: Option<XPoly>,
    pub expected: XPoly,
    pub matches_expected: bool,
    /// The linear coefficient is nonzero.
    pub separable_by_linear_term: bool,
    /// `gcd(m, m') = 1`.
    pub separable_by_gcd: bool,
}

impl EtaleBlock {
    pub fn passed(&self) -> bool {
        self.matches_expected && self.separable_by_linear_term && self.separable_by_gcd
    }
}

fn is_separable_polynomial(m: &XPoly) -> bool {
    m.gcd(&m.derivative()).degree() == Some(0)
}

/// `y^2 + z a y + c(c+a)` on the `e2` block and `y^2 + z a y + d(d+a)` on
/// the `e3` block.
pub fn etale_check(alg: &DeformedAlgebra) -> [EtaleBlock; 2] {
    let p = alg.params();
    let es = idempotent_elements(alg);
    let za = &p.z * &p.a;
    let roots = [&p.c, &p.d];
    std::array::from_fn(|slot| {
        let e = &es[slot + 1];
        let r = roots[slot];
        let expected = XPoly::new(vec![r * &(r + &p.a), za.clone(), RationalFunction::one()]);
        let ye = alg.mul(&alg.y(), e);
        let yy = alg.mul(&ye, &ye);
        // y e is not a multiple of e, and (ye)^2 = alpha (ye) + beta e
        let quadratic = span_rank(&[e.clone(), ye.clone()]) == 2;
        let rows = linalg::transpose(&[ye.coords().to_vec(), e.coords().to_vec()]);
        let minimal_polynomial = linalg::solve(&RationalField, &rows, yy.coords(), 2)
            .filter(|_| quadratic)
            .map(|c| XPoly::new(vec![c[1].clone(), c[0].clone(), RationalFunction::one()]));
        let (matches_expected, separable_by_linear_term, separable_by_gcd) = match &minimal_polynomial {
            Some(m) => (m == &expected, !m.coeff(1).is_zero(), is_separable_polynomial(m)),
            None => (false, false, false),
        };
        EtaleBlock {
            index: slot + 2,
            minimal_polynomial,
            expected,
            matches_expected,
            separable_by_linear_term,
            separable_by_gcd,
        }
    })
}

/// Inputs for the dimension vector; each is `Some` only if the
/// corresponding check passed.
#[derive(Clone, Copy, Debug, Default)]
pub struct DimensionInputs<'a> {
    pub splitting: Option<&'a SplittingReport>,
    pub etale: Option<&'a [EtaleBlock; 2]>,
    pub separable: Option<bool>,
}

/// Degrees of the simple components over an algebraic closure, ascending.
/// Each separable quadratic block gives two 1-dimensional components and
/// the split 4-dimensional block gives one `M_2`.
pub fn dimension_vector(inputs: DimensionInputs<'_>) -> Result<Vec<usize>, AnalysisError> {
    let splitting = inputs.splitting.ok_or(AnalysisError::Assembly("splitting over K"))?;
    let etale = inputs.etale.ok_or(AnalysisError::Assembly("etale blocks"))?;
    match inputs.separable {
        Some(true) => {}
        Some(false) => return Err(AnalysisError::Assembly("separability certificate is infeasible")),
        None => return Err(AnalysisError::Assembly("separability certificate")),
    }
    if !splitting.passed() || !etale.iter().all(EtaleBlock::passed) {
        return Err(AnalysisError::Assembly("a prerequisite check failed"));
    }
    let mut dims: Vec<usize> = etale.iter().flat_map(|_| [1, 1]).collect();
    dims.push(2);
    dims.sort_unstable();
    Ok(dims)
}

/// Degrees of the complex irreducible representations of a group whose
/// non-linear characters all share one degree: the number of linear ones is
/// `|G / [G, G]|` and the remaining classes split the rest of `|G|` evenly.
pub fn complex_reference_vector(group: &GroupTable) -> Option<Vec<usize>> {
    let n = GROUP_ORDER;
    let inv = |g: usize| group.inverse(g).expect("group elements are invertible");
    let mut class_of = vec![usize::MAX; n];
    let mut classes = 0;
    for g in 0..n {
        if class_of[g] == usize::MAX {
            for h in 0..n {
                class_of[group.mul(group.mul(h, g), inv(h))] = classes;
            }
            classes += 1;
        }
    }
    // derived subgroup, closed under products
    let mut derived = vec![false; n];
    for g in 0..n {
        for h in 0..n {
            derived[group.mul(group.mul(g, h), group.mul(inv(g), inv(h)))] = true;
        }
    }
    loop {
        let members: Vec<usize> = (0..n).filter(|&g| derived[g]).collect();
        let mut grew = false;
        for &g in &members {
            for &h in &members {
                let gh = group.mul(g, h);
                grew |= !std::mem::replace(&mut derived[gh], true);
            }
        }
        if !grew {
            break;
        }
    }
    let linear = n / derived.iter().filter(|&&d| d).count();
    let rest = classes - linear;
    let mut dims = vec![1; linear];
    if let Some(per) = (n - linear).checked_div(rest) {
        let d = (1..=per).find(|d| d * d == per)?;
        if per * rest != n - linear {
            return None;
        }
        dims.extend(std::iter::repeat_n(d, rest));
    }
    Some(dims)
}

/// Structural and certificate verdicts on separability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparabilityAgreement {
    pub structural: bool,
    pub certificate: bool,
}

impl SeparabilityAgreement {
    pub fn agrees(&self) -> bool {
        self.structural == self.certificate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DeformationParams;

    fn example() -> DeformedAlgebra {
        DeformedAlgebra::new(&DeformationParams::example()).unwrap()
    }

    #[test]
    fn blocks_have_dimensions_four_two_two() {
        let alg = example();
        let blocks = decompose_blocks(&alg).unwrap();
        assert_eq!(blocks.dims, [4, 2, 2]);
        assert_eq!(blocks.dims.iter().sum::<usize>(), 8);
        assert!(blocks.passed(), "{:?}", blocks.cross_products_nonzero);
    }

    #[test]
    fn centres() {
        let alg = example();
        let blocks = decompose_blocks(&alg).unwrap();
        let c1 = center_of_block(&alg, &blocks.natural_bases[0]);
        assert_eq!(c1.dim, 1);
        let e1 = alg.embed(&alg.idempotents().e1);
        assert_eq!(span_rank(&[c1.basis[0].clone(), e1]), 1);
        assert_eq!(center_of_block(&alg, &blocks.natural_bases[1]).dim, 2);
        assert_eq!(center_of_block(&alg, &blocks.natural_bases[2]).dim, 2);
        // u does not commute with v: v u + u v = a v
        let cross = crossed_product_relations(&alg);
        let comm = &alg.mul(&cross.u, &cross.v) + &alg.mul(&cross.v, &cross.u);
        assert_eq!(comm, cross.v.scale(&alg.params().a));
    }

    #[test]
    fn crossed_product() {
        let cross = crossed_product_relations(&example());
        assert!(cross.passed(), "{:?}", cross.broken());
        assert_eq!(cross.relations.len(), 3);
    }

    #[test]
    fn broken_relation_is_named() {
        let mut cross = crossed_product_relations(&example());
        cross.relations[1].holds = false;
        assert_eq!(cross.broken(), vec!["v^2 = b e1".to_string()]);
    }

    #[test]
    fn splitting() {
        let alg = example();
        let cross = crossed_product_relations(&alg);
        let k = SplittingField::from_minimal_polynomial(&alg.params().pi()).unwrap();
        let rep = split_block_over_k(&alg, &cross, &k).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let a = KElem::from_f(alg.params().a.clone());
        let s = KElem::s();
        let s_plus_a = crate::scalar::Char2Field::add(&k, &s, &a);
        assert_eq!(rep.matrices[1], [[s, KElem::default()], [KElem::default(), s_plus_a]]);
        let b = KElem::from_f(alg.params().b.clone());
        let one = KElem::from_f(RationalFunction::one());
        assert_eq!(rep.matrices[2], [[KElem::default(), b], [one, KElem::default()]]);
    }

    #[test]
    fn etale_blocks() {
        for block in etale_check(&example()) {
            assert!(block.passed(), "{block:?}");
            assert!(block.minimal_polynomial.is_some());
        }
    }

    #[test]
    fn inseparable_quadratic() {
        let m = XPoly::new(vec![RationalFunction::t(), RationalFunction::zero(), RationalFunction::one()]);
        assert!(!is_separable_polynomial(&m));
    }

    #[test]
    fn reference_vector_of_q8() {
        let v = complex_reference_vector(&GroupTable::quaternion()).unwrap();
        assert_eq!(v, vec![1, 1, 1, 1, 2]);
        assert_eq!(v.iter().map(|d| d * d).sum::<usize>(), 8);
    }

    #[test]
    fn dimension_vector_needs_inputs() {
        assert!(dimension_vector(DimensionInputs::default()).is_err());
        let alg = example();
        let cross = crossed_product_relations(&alg);
        let k = SplittingField::from_minimal_polynomial(&alg.params().pi()).unwrap();
        let rep = split_block_over_k(&alg, &cross, &k).unwrap();
        let et = etale_check(&alg);
        let inputs = DimensionInputs {
            splitting: Some(&rep),
            etale: Some(&et),
            separable: Some(true),
        };
        assert_eq!(dimension_vector(inputs).unwrap(), vec![1, 1, 1, 1, 2]);
        let refused = DimensionInputs {
            separable: Some(false),
            ..inputs
        };
        assert!(dimension_vector(refused).is_err());
    }

    #[test]
    fn deformed_algebra_is_separable() {
        let alg = example();
        let sc = alg.structure_constants().unwrap();
        match separability_certificate(sc.algebra()) {
            SeparabilityOutcome::Certificate(e) => assert!(verify_certificate(sc.algebra(), &e)),
            SeparabilityOutcome::Infeasible(_) => panic!("expected a certificate"),
        }
    }
}
