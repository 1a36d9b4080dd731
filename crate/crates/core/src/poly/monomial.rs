use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A power product `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// Arithmetic is checked: any exponent leaving the `u32` range is an
/// [`Error::ExponentOverflow`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// `x_F` for a set of variable indices given as a bitmask.
    pub fn from_support(nvars: usize, mask: u64) -> Self {
        let mut m = Self::one(nvars);
        for (i, e) in m.0.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                *e = 1;
            }
        }
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of the variables with nonzero exponent (first 64 variables).
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    /// Multiplies every exponent by `k`.
    pub fn scale(&self, k: u32) -> Result<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(b.checked_sub(*a)?);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Splits each exponent as `a = q*quot + rem` with `0 <= rem < q`.
    pub fn div_rem_exponents(&self, q: u32) -> (Monomial, Monomial) {
        let quot = self.0.iter().map(|a| a / q).collect();
        let rem = self.0.iter().map(|a| a % q).collect();
        (Monomial(quot), Monomial(rem))
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut SmallVec<[u32; 8]> {
        &mut self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0.as_slice())
    }
}
