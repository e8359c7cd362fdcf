//! Separability idempotents `e = sum e_ij b_i (x) b_j` in `A (x) A^op`, found
//! by an exact linear solve. An inconsistent system comes with a dual vector
//! proving it.

use crate::algebra::FiniteAlgebra;
use crate::linalg;
use crate::scalar::Char2Field;

#[derive(Clone, Debug, PartialEq)]
pub enum SeparabilityOutcome<E> {
    /// Coefficients `e_ij` at index `i * n + j`.
    Certificate(Vec<E>),
    /// `lambda` with `lambda^T A = 0` and `lambda^T rhs = 1`.
    Infeasible(Vec<E>),
}

impl<E> SeparabilityOutcome<E> {
    pub fn is_separable(&self) -> bool {
        matches!(self, Self::Certificate(_))
    }
}

/// The system in the unknowns `e_ij`: for every basis element `a`,
/// `sum_ij e_ij (a b_i) (x) b_j = sum_ij e_ij b_i (x) (b_j a)`, then
/// `sum_ij e_ij b_i b_j = 1`. Returns `(rows, rhs)` with `n^3 + n` rows.
pub fn separability_system<F: Char2Field>(alg: &FiniteAlgebra<F>) -> (Vec<Vec<F::Elem>>, Vec<F::Elem>) {
    let f = alg.field();
    let n = alg.dim();
    let mut rows = Vec::with_capacity(n * n * n + n);
    let mut rhs = Vec::with_capacity(n * n * n + n);
    for a in 0..n {
        // output slot (k, l): sum_i L_ki e_il + sum_j R_lj e_kj
        for k in 0..n {
            for l in 0..n {
                let mut row = vec![f.zero(); n * n];
                for i in 0..n {
                    let c = &alg.product(a, i)[k];
                    if !f.is_zero(c) {
                        row[i * n + l] = f.add(&row[i * n + l], c);
                    }
                }
                for j in 0..n {
                    let c = &alg.product(j, a)[l];
                    if !f.is_zero(c) {
                        row[k * n + j] = f.add(&row[k * n + j], c);
                    }
                }
                rows.push(row);
                rhs.push(f.zero());
            }
        }
    }
    for k in 0..n {
        rows.push((0..n * n).map(|ij| alg.product(ij / n, ij % n)[k].clone()).collect());
        rhs.push(alg.unit()[k].clone());
    }
    (rows, rhs)
}

pub fn separability_certificate<F: Char2Field>(alg: &FiniteAlgebra<F>) -> SeparabilityOutcome<F::Elem> {
    let f = alg.field();
    let n2 = alg.dim() * alg.dim();
    let (rows, rhs) = separability_system(alg);
    if let Some(e) = linalg::solve(f, &rows, &rhs, n2) {
        return SeparabilityOutcome::Certificate(e);
    }
    // lambda^T [A | rhs] = [0 | 1]
    let mut dual = linalg::transpose(&rows);
    dual.push(rhs);
    let mut target = vec![f.zero(); n2];
    target.push(f.one());
    let lambda = linalg::solve(f, &dual, &target, rows.len())
        .expect("an inconsistent system has a dual certificate");
    SeparabilityOutcome::Infeasible(lambda)
}

/// Re-checks a certificate by multiplying in `A (x) A` directly.
pub fn verify_certificate<F: Char2Field>(alg: &FiniteAlgebra<F>, e: &[F::Elem]) -> bool {
    let f = alg.field();
    let n = alg.dim();
    if e.len() != n * n {
        return false;
    }
    // tensor -> flat vector, slot k * n + l for b_k (x) b_l
    let tensor = |left: &[F::Elem], right: &[F::Elem], coeff: &F::Elem, acc: &mut [F::Elem]| {
        for (k, x) in left.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            let cx = f.mul(coeff, x);
            for (l, y) in right.iter().enumerate() {
                if !f.is_zero(y) {
                    acc[k * n + l] = f.add(&acc[k * n + l], &f.mul(&cx, y));
                }
            }
        }
    };
    let terms: Vec<(usize, usize, &F::Elem)> = (0..n * n)
        .filter(|&ij| !f.is_zero(&e[ij]))
        .map(|ij| (ij / n, ij % n, &e[ij]))
        .collect();
    let balanced = (0..n).all(|a| {
        let ba = alg.basis(a);
        let mut left = vec![f.zero(); n * n];
        let mut right = vec![f.zero(); n * n];
        for &(i, j, c) in &terms {
            tensor(&alg.mul(&ba, &alg.basis(i)), &alg.basis(j), c, &mut left);
            tensor(&alg.basis(i), &alg.mul(&alg.basis(j), &ba), c, &mut right);
        }
        left == right
    });
    let mu = terms.iter().fold(alg.zero(), |acc, &(i, j, c)| {
        alg.add(&acc, &alg.scale(c, &alg.mul(&alg.basis(i), &alg.basis(j))))
    });
    balanced && mu == alg.unit()
}

/// Re-checks an infeasibility proof against the system.
pub fn verify_infeasibility<F: Char2Field>(alg: &FiniteAlgebra<F>, lambda: &[F::Elem]) -> bool {
    let f = alg.field();
    let (rows, rhs) = separability_system(alg);
    if lambda.len() != rows.len() {
        return false;
    }
    let columns = linalg::transpose(&rows);
    columns.iter().all(|c| f.is_zero(&linalg::dot(f, c, lambda))) && linalg::dot(f, &rhs, lambda) == f.one()
}
