//! Exponent vectors over the zone variables of a code.
//!
//! Monomials are stored densely, one exponent per variable in the canonical
//! variable order of the ambient ring. Multiplication of monomials is
//! addition of exponent vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    /// The constant monomial `1` in `vars` variables.
    pub fn one(vars: usize) -> Self {
        ExponentVector(vec![0; vars])
    }

    pub fn unit(vars: usize, index: usize) -> Self {
        let mut e = vec![0; vars];
        e[index] = 1;
        ExponentVector(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    /// Builds `prod t_i` over the listed variable indices (repeats allowed).
    pub fn from_indices(vars: usize, indices: &[usize]) -> Self {
        let mut e = vec![0; vars];
        for &i in indices {
            e[i] += 1;
        }
        ExponentVector(e)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// `(index, exponent)` pairs with nonzero exponent.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().copied().enumerate().filter(|&(_, e)| e > 0)
    }

    /// True if `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect()))
    }

    /// `self / divisor * factor` without allocating an intermediate vector.
    /// Caller guarantees `divisor | self`.
    pub(crate) fn div_mul(&self, divisor: &Self, factor: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&divisor.0)
                .zip(&factor.0)
                .map(|((&a, &d), &f)| a - d + f)
                .collect(),
        )
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> Self {
        // perm[new] = old
        ExponentVector(perm.iter().map(|&old| self.0[old]).collect())
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = ExponentVector::from_exponents(vec![1, 0, 2]);
        let b = ExponentVector::from_exponents(vec![1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
        assert_eq!(b.checked_div(&a).unwrap().exponents(), &[0, 1, 1]);
        assert!(a.checked_div(&b).is_none());
    }

    #[test]
    fn degree_and_support() {
        let a = ExponentVector::from_indices(4, &[0, 3, 3]);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.support().collect::<Vec<_>>(), vec![0, 3]);
        assert!(ExponentVector::one(4).is_one());
        assert!(a.is_coprime(&ExponentVector::unit(4, 1)));
    }
}
