//! Exact Gauss-Jordan elimination over any characteristic-2 field.
//!
//! Matrices are dense `Vec` rows. Every pivot row is normalized to a
//! leading 1 as soon as it is chosen, and among the candidate pivots the one
//! with the smallest entry (per [`Char2Field::size`]) wins, which keeps
//! rational-function entries from swelling.

use crate::scalar::Char2Field;

/// Reduced row echelon form: `rows[i]` has a 1 in column `pivots[i]` and
/// zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    /// Rows left over after elimination; nonzero only outside the pivot
    /// search range.
    pub residual: Vec<Vec<E>>,
}

/// Row-reduces `rows`, choosing pivots only among the first `pivot_cols`
/// columns while eliminating across the full width.
pub fn reduce<F: Char2Field>(
    field: &F,
    rows: Vec<Vec<F::Elem>>,
    pivot_cols: usize,
) -> Echelon<F::Elem> {
    let nonzero = |r: &Vec<F::Elem>| r.iter().any(|x| !field.is_zero(x));
    let mut pending: Vec<Vec<F::Elem>> = rows.into_iter().filter(|r| nonzero(r)).collect();
    let width = pending.first().map_or(0, Vec::len);
    let mut done: Vec<Vec<F::Elem>> = Vec::new();
    let mut pivots = Vec::new();

    for col in 0..pivot_cols.min(width) {
        let best = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| !field.is_zero(&r[col]))
            .min_by_key(|(_, r)| field.size(&r[col]))
            .map(|(i, _)| i);
        let Some(best) = best else { continue };
        let mut pivot = pending.swap_remove(best);
        let inv = field.inv(&pivot[col]).expect("pivot entries are nonzero");
        for x in pivot[col..].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        // pending rows and the pivot vanish left of `col`; finished rows
        // vanish there except at their own pivots, which `pivot` does not touch
        for row in pending.iter_mut().chain(done.iter_mut()) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                if !field.is_zero(p) {
                    *x = field.add(x, &field.mul(&factor, p));
                }
            }
        }
        pending.retain(|r| nonzero(r));
        done.push(pivot);
        pivots.push(col);
    }

    Echelon {
        rows: done,
        pivots,
        residual: pending,
    }
}

pub fn rank<F: Char2Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    reduce(field, rows.to_vec(), cols).pivots.len()
}

/// Basis of `{x : A x = 0}` for an `m x ncols` matrix `A`.
pub fn nullspace<F: Char2Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
    ncols: usize,
) -> Vec<Vec<F::Elem>> {
    let ech = reduce(field, rows.to_vec(), ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ncols];
            v[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                // x_p + row[free] = 0, and -1 = 1
                v[p] = row[free].clone();
            }
            v
        })
        .collect()
}

/// A particular solution of `A x = b` (free variables set to zero), or
/// `None` when the system is inconsistent.
pub fn solve<F: Char2Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
    rhs: &[F::Elem],
    ncols: usize,
) -> Option<Vec<F::Elem>> {
    let augmented: Vec<Vec<F::Elem>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let ech = reduce(field, augmented, ncols);
    if !ech.residual.is_empty() {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

pub fn mat_vec<F: Char2Field>(field: &F, rows: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    rows.iter()
        .map(|r| dot(field, r, v))
        .collect()
}

pub fn dot<F: Char2Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| {
        if field.is_zero(x) || field.is_zero(y) {
            acc
        } else {
            field.add(&acc, &field.mul(x, y))
        }
    })
}

pub fn mat_mul<F: Char2Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(field.zero(), |acc, k| {
                        field.add(&acc, &field.mul(&row[k], &b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose<E: Clone>(rows: &[Vec<E>]) -> Vec<Vec<E>> {
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}
