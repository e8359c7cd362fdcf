//! Bit-packed polynomials over GF(2) in the indeterminate `t`.
//!
//! Bit `k` of the packed word sequence is the coefficient of `t^k`. The
//! word vector never carries trailing zero words, so structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

/// Carry-less product of two words, returned as `(low, high)`.
fn clmul(a: u64, mut b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    while b != 0 {
        let i = b.trailing_zeros();
        lo ^= a << i;
        if i > 0 {
            hi ^= a >> (64 - i);
        }
        b &= b - 1;
    }
    (lo, hi)
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD + 1];
        words[k / WORD] = 1u64 << (k % WORD);
        Self { words }
    }

    /// Builds `sum t^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// Builds the polynomial whose low 64 coefficients are the bits of `bits`.
    pub fn from_word(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (63 - top.leading_zeros() as usize))
    }

    /// Index of the lowest nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words
            .get(k / WORD)
            .is_some_and(|w| (w >> (k % WORD)) & 1 == 1)
    }

    /// Toggles the coefficient of `t^k`.
    pub fn flip(&mut self, k: usize) {
        if self.words.len() <= k / WORD {
            self.words.resize(k / WORD + 1, 0);
        }
        self.words[k / WORD] ^= 1u64 << (k % WORD);
        self.normalize();
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Multiplication by `t^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / WORD, k % WORD);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs > 0 {
                words[i + ws + 1] ^= w >> (WORD - bs);
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Exact division by `t^k`, dropping the low `k` coefficients.
    pub fn shr(&self, k: usize) -> Self {
        let (ws, bs) = (k / WORD, k % WORD);
        if ws >= self.words.len() {
            return Self::zero();
        }
        let src = &self.words[ws..];
        let mut words = vec![0u64; src.len()];
        for i in 0..src.len() {
            words[i] = src[i] >> bs;
            if bs > 0 && i + 1 < src.len() {
                words[i] |= src[i + 1] << (WORD - bs);
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Reduction modulo `t^n`.
    pub fn truncate(&self, n: usize) -> Self {
        let full = n / WORD;
        let rest = n % WORD;
        let mut words: Vec<u64> = self.words.iter().take(full + 1).copied().collect();
        if words.len() > full {
            if rest == 0 {
                words.truncate(full);
            } else {
                words[full] &= (1u64 << rest) - 1;
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// `self ^= other * t^shift`.
    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        let (ws, bs) = (shift / WORD, shift % WORD);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs > 0 {
                self.words[i + ws + 1] ^= w >> (WORD - bs);
            }
        }
        self.normalize();
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem.xor_shifted(divisor, shift);
            quot.flip(shift);
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; the caller guarantees `divisor | self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn square(&self) -> Self {
        // Frobenius: (sum a_i t^i)^2 = sum a_i t^{2i}
        let mut p = Self::zero();
        for e in self.exponents() {
            p.flip(2 * e);
        }
        p
    }
}

impl Ord for Gf2Poly {
    /// Orders by degree first, then lexicographically from the top
    /// coefficient down. Used only for deterministic tie-breaking.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Gf2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl AddAssign<&Gf2Poly> for Gf2Poly {
    fn add_assign(&mut self, rhs: &Gf2Poly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (w, s) in self.words.iter_mut().zip(&rhs.words) {
            *w ^= s;
        }
        self.normalize();
    }
}

impl Mul<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let mut words = vec![0u64; self.words.len() + rhs.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.words.iter().enumerate() {
                let (lo, hi) = clmul(a, b);
                words[i + j] ^= lo;
                words[i + j + 1] ^= hi;
            }
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

impl fmt::Display for Gf2Poly {
    /// Ascending sum of monomials, e.g. `1+t^2+t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, e) in self.exponents().enumerate() {
            if n > 0 {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}
