//! Order-by-order coefficients of the deformed product on the group basis.

use super::group::{GroupTable, GROUP_ORDER};
use super::StructureConstants;

/// `table[i][g1 * 8 + g2]` is the order-`i` coefficient of `g1 * g2`, as a
/// bit vector over the group basis. Orders above `max_order` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTable {
    max_order: usize,
    table: Vec<[u8; GROUP_ORDER * GROUP_ORDER]>,
}

impl PsiTable {
    pub fn from_fn(max_order: usize, mut f: impl FnMut(usize, usize, usize) -> u8) -> Self {
        let table = (0..=max_order)
            .map(|i| std::array::from_fn(|k| f(i, k / GROUP_ORDER, k % GROUP_ORDER)))
            .collect();
        Self { max_order, table }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// `None` above the stored order.
    pub fn get(&self, order: usize, g1: usize, g2: usize) -> Option<u8> {
        self.table.get(order).map(|row| row[g1 * GROUP_ORDER + g2])
    }

    pub fn set(&mut self, order: usize, g1: usize, g2: usize, value: u8) {
        self.table[order][g1 * GROUP_ORDER + g2] = value;
    }

    pub fn order0(&self, g1: usize, g2: usize) -> u8 {
        self.table[0][g1 * GROUP_ORDER + g2]
    }

    /// Orders `1..=max_order` are all zero for this pair.
    pub fn vanishes(&self, g1: usize, g2: usize) -> bool {
        (1..=self.max_order).all(|i| self.get(i, g1, g2) == Some(0))
    }
}

/// Expands every coordinate of every basis product to precision `n + 1`.
/// Flat structure constants make the expansion exact up to order `n`.
pub fn psi_extract(sc: &StructureConstants, n: usize) -> PsiTable {
    let mut psi = PsiTable::from_fn(n, |_, _, _| 0);
    for g1 in 0..GROUP_ORDER {
        for g2 in 0..GROUP_ORDER {
            for (k, c) in sc.algebra().product(g1, g2).iter().enumerate() {
                let series = c.expand(n + 1).expect("flat coordinates are integral");
                for i in 0..=n {
                    if series.coeff(i) == Some(true) {
                        let v = psi.get(i, g1, g2).unwrap_or(0) | (1 << k);
                        psi.set(i, g1, g2, v);
                    }
                }
            }
        }
    }
    psi
}

/// Triples `(g1, g2, g3)` violating
/// `g1 psi(g2,g3) + psi(g1 g2, g3) + psi(g1, g2 g3) + psi(g1,g2) g3 = 0`.
pub fn cocycle_defects(group: &GroupTable, psi1: impl Fn(usize, usize) -> u8) -> Vec<(usize, usize, usize)> {
    let n = GROUP_ORDER;
    let mut defects = Vec::new();
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let total = group.act_left(g1, psi1(g2, g3))
                    ^ psi1(group.mul(g1, g2), g3)
                    ^ psi1(g1, group.mul(g2, g3))
                    ^ group.act_right(psi1(g1, g2), g3);
                if total != 0 {
                    defects.push((g1, g2, g3));
                }
            }
        }
    }
    defects
}

/// The first-order coefficient is a Hochschild 2-cocycle of the group algebra.
pub fn hochschild_cocycle_check(psi: &PsiTable, group: &GroupTable) -> bool {
    psi.max_order() >= 1 && cocycle_defects(group, |a, b| psi.get(1, a, b).unwrap_or(0)).is_empty()
}
