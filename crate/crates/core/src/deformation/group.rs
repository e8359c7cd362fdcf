//! The quaternion group Q8 = <sigma, tau | sigma^4 = 1, tau sigma = sigma^3 tau,
//! sigma^2 = tau^2>.
//!
//! Elements are kept in the normal form `sigma^i tau^j` (`i < 4`, `j < 2`) at
//! index `i + 4j`, the same slot order as the algebra basis `x^i y^j`.

/// Multiplication table of Q8 on normal-form indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
}

pub const GROUP_ORDER: usize = 8;

pub fn index(s_exp: usize, r_exp: usize) -> usize {
    (s_exp % 4) + 4 * (r_exp % 2)
}

/// Label of a normal-form index, e.g. `sigma^3 tau`.
pub fn label(g: usize) -> String {
    let (i, j) = (g % 4, g / 4);
    let s = match i {
        0 => String::new(),
        1 => "sigma".to_string(),
        _ => format!("sigma^{i}"),
    };
    match (s.is_empty(), j) {
        (true, 0) => "1".to_string(),
        (true, _) => "tau".to_string(),
        (false, 0) => s,
        (false, _) => format!("{s} tau"),
    }
}

/// Right multiplication of a normal form by a single generator, using only
/// the defining relations.
fn times_generator(g: usize, generator: Generator) -> usize {
    let (i, j) = (g % 4, g / 4);
    match (generator, j) {
        (Generator::Sigma, 0) => index(i + 1, 0),
        // tau sigma = sigma^3 tau
        (Generator::Sigma, _) => index(i + 3, 1),
        (Generator::Tau, 0) => index(i, 1),
        // tau^2 = sigma^2
        (Generator::Tau, _) => index(i + 2, 0),
    }
}

#[derive(Clone, Copy)]
enum Generator {
    Sigma,
    Tau,
}

impl GroupTable {
    /// Builds the table by rewriting `(sigma^i tau^j)(sigma^k tau^l)` one
    /// generator of the right factor at a time.
    pub fn quaternion() -> Self {
        let table = (0..GROUP_ORDER)
            .map(|g| {
                (0..GROUP_ORDER)
                    .map(|h| {
                        let (k, l) = (h % 4, h / 4);
                        let word = std::iter::repeat_n(Generator::Sigma, k)
                            .chain(std::iter::repeat_n(Generator::Tau, l));
                        word.fold(g, times_generator)
                    })
                    .collect()
            })
            .collect();
        Self { table }
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..GROUP_ORDER).find(|&h| self.mul(g, h) == 0 && self.mul(h, g) == 0)
    }

    /// Associative, unital, and every element invertible.
    pub fn is_group(&self) -> bool {
        let n = GROUP_ORDER;
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        });
        let unit = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        assoc && unit && (0..n).all(|a| self.inverse(a).is_some())
    }

    pub fn satisfies_relations(&self) -> bool {
        let s = index(1, 0);
        let r = index(0, 1);
        let pow = |g: usize, e: usize| (0..e).fold(0, |acc, _| self.mul(acc, g));
        pow(s, 4) == 0 && self.mul(r, s) == self.mul(pow(s, 3), r) && pow(s, 2) == pow(r, 2)
    }

    /// Left action `g . v` on a GF(2)-vector of group elements (bit `k` is
    /// the coefficient of element `k`).
    pub fn act_left(&self, g: usize, v: u8) -> u8 {
        (0..GROUP_ORDER)
            .filter(|k| v >> k & 1 == 1)
            .fold(0, |acc, k| acc ^ (1 << self.mul(g, k)))
    }

    pub fn act_right(&self, v: u8, g: usize) -> u8 {
        (0..GROUP_ORDER)
            .filter(|k| v >> k & 1 == 1)
            .fold(0, |acc, k| acc ^ (1 << self.mul(k, g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_and_group_axioms() {
        let q = GroupTable::quaternion();
        assert!(q.is_group());
        assert!(q.satisfies_relations());
    }

    #[test]
    fn specific_products() {
        let q = GroupTable::quaternion();
        let (s, r) = (index(1, 0), index(0, 1));
        assert_eq!(q.mul(r, s), index(3, 1));
        assert_eq!(q.mul(r, r), index(2, 0));
        // sigma^2 is the unique involution and is central
        let z = index(2, 0);
        assert!((0..8).all(|g| q.mul(z, g) == q.mul(g, z)));
        assert_eq!((0..8).filter(|&g| g != 0 && q.mul(g, g) == 0).count(), 1);
    }

    #[test]
    fn labels() {
        assert_eq!(label(0), "1");
        assert_eq!(label(4), "tau");
        assert_eq!(label(7), "sigma^3 tau");
    }
}
