//! Finite-dimensional algebras given by structure constants.

use crate::linalg;
use crate::scalar::Char2Field;

/// An algebra with basis `b_0..b_{n-1}` over a characteristic-2 field.
/// `products[i * n + j]` holds the coordinates of `b_i b_j`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra<F: Char2Field> {
    field: F,
    dim: usize,
    products: Vec<Vec<F::Elem>>,
    unit: Vec<F::Elem>,
}

impl<F: Char2Field> FiniteAlgebra<F> {
    pub fn new(field: F, dim: usize, products: Vec<Vec<F::Elem>>, unit: Vec<F::Elem>) -> Self {
        assert_eq!(products.len(), dim * dim, "need one product per basis pair");
        assert!(products.iter().all(|p| p.len() == dim));
        assert_eq!(unit.len(), dim);
        Self {
            field,
            dim,
            products,
            unit,
        }
    }

    /// The algebra spanned by the elements of a group with the given
    /// multiplication table.
    pub fn from_group_table(field: F, table: &[Vec<usize>], identity: usize) -> Self {
        let n = table.len();
        let basis = |k: usize| {
            let mut v = vec![field.zero(); n];
            v[k] = field.one();
            v
        };
        let products = (0..n * n).map(|ij| basis(table[ij / n][ij % n])).collect();
        let unit = basis(identity);
        Self::new(field, n, products, unit)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn basis(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[k] = self.field.one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.products[i * self.dim + j]
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn is_zero(&self, u: &[F::Elem]) -> bool {
        u.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        u.iter().zip(v).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, u: &[F::Elem]) -> Vec<F::Elem> {
        u.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn mul(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, a) in u.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !f.is_zero(c) {
                        *o = f.add(o, &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v -> u v`; column `j` holds `u b_j`.
    pub fn left_matrix(&self, u: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul(u, &self.basis(j))).collect();
        linalg::transpose(&cols)
    }

    /// Matrix of `v -> v u`; column `j` holds `b_j u`.
    pub fn right_matrix(&self, u: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul(&self.basis(j), u)).collect();
        linalg::transpose(&cols)
    }

    pub fn commutes(&self, u: &[F::Elem], v: &[F::Elem]) -> bool {
        self.mul(u, v) == self.mul(v, u)
    }

    /// Commutes with every basis element.
    pub fn is_central(&self, u: &[F::Elem]) -> bool {
        (0..self.dim).all(|k| self.commutes(u, &self.basis(k)))
    }

    /// Basis triples `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub fn associativity_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut defects = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(self.product(i, j), &self.basis(k));
                    let right = self.mul(&self.basis(i), self.product(j, k));
                    if left != right {
                        defects.push((i, j, k));
                    }
                }
            }
        }
        defects
    }

    /// `b_0` is the unit on both sides for every basis element.
    pub fn unit_law_holds(&self) -> bool {
        (0..self.dim).all(|k| {
            let b = self.basis(k);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;

    #[test]
    fn cyclic_group_algebra() {
        let table: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        let alg = FiniteAlgebra::from_group_table(Gf2, &table, 0);
        assert!(alg.associativity_defects().is_empty());
        assert!(alg.unit_law_holds());
        assert!(alg.is_central(&alg.basis(1)));
        // (1 + g)^2 = 1 + g^2 in characteristic 2
        let u = alg.add(&alg.basis(0), &alg.basis(1));
        assert_eq!(alg.mul(&u, &u), alg.add(&alg.basis(0), &alg.basis(2)));
    }
}
