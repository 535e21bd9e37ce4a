//! Exponent vectors and variable sets.
//!
//! An [`Exponent`] is a point of `N^n` identified with the monomial
//! `x^a = x_1^{a_1} ... x_n^{a_n}`. A [`VarSet`] is a subset of the
//! variable indices `[n] = {1, ..., n}`, stored as a bitmask; it doubles
//! as the face type of simplicial complexes on `[n]`.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the ambient variable count, so subsets of `[n]` fit in a `u64`.
pub const MAX_VARS: usize = 64;

/// A subset of `[n] = {1, ..., n}` as a bitmask (bit `j-1` marks variable `j`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> VarSet {
        debug_assert!(n <= MAX_VARS);
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    /// Singleton `{j}`, `j` 1-based.
    pub fn singleton(j: usize) -> VarSet {
        debug_assert!((1..=MAX_VARS).contains(&j));
        VarSet(1u64 << (j - 1))
    }

    /// Collects 1-based indices; indices must lie in `1..=MAX_VARS`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VarSet {
        let mut mask = 0u64;
        for j in indices {
            debug_assert!((1..=MAX_VARS).contains(&j));
            mask |= 1u64 << (j - 1);
        }
        VarSet(mask)
    }

    pub fn contains(self, j: usize) -> bool {
        (1..=MAX_VARS).contains(&j) && self.0 & (1u64 << (j - 1)) != 0
    }

    pub fn insert(&mut self, j: usize) {
        debug_assert!((1..=MAX_VARS).contains(&j));
        self.0 |= 1u64 << (j - 1);
    }

    pub fn remove(&mut self, j: usize) {
        debug_assert!((1..=MAX_VARS).contains(&j));
        self.0 &= !(1u64 << (j - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// 1-based member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let j = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(j)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, smallest mask first (the empty set leads).
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // Standard submask enumeration trick.
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VarSet(cur))
        })
    }

    pub fn as_mask(self) -> u64 {
        self.0
    }

    pub fn from_mask(mask: u64) -> VarSet {
        VarSet(mask)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        for &j in &indices {
            if j == 0 || j > MAX_VARS {
                return Err(D::Error::custom(format!(
                    "vertex index {j} out of range 1..={MAX_VARS}"
                )));
            }
        }
        Ok(VarSet::from_indices(indices))
    }
}

/// A point `a` of `N^n`, i.e. the monomial `x^a`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent {
    coords: Vec<u32>,
}

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Exponent {
        Exponent { coords }
    }

    /// The zero exponent (the monomial 1) in `n` variables.
    pub fn zero(n: usize) -> Exponent {
        Exponent { coords: vec![0; n] }
    }

    /// The unit exponent `e_j` (the variable `x_j`), `j` 1-based.
    pub fn unit(n: usize, j: usize) -> Exponent {
        debug_assert!(j >= 1 && j <= n);
        let mut coords = vec![0; n];
        coords[j - 1] = 1;
        Exponent { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Degree of `x_j` in the monomial, `j` 1-based.
    pub fn deg(&self, j: usize) -> u32 {
        self.coords[j - 1]
    }

    /// Total degree `|a|`.
    pub fn total_degree(&self) -> u64 {
        self.coords.iter().map(|&c| c as u64).sum()
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| i + 1),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.coords.iter().all(|&c| c <= 1)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }

    /// `x^self * x^other`.
    pub fn mul(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise max, i.e. `lcm(x^self, x^other)`.
    pub fn lcm(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self - min(self, other)` componentwise: the exponent of
    /// `x^self / gcd(x^self, x^other)`.
    pub fn saturated_sub(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// The squarefree exponent of the same support.
    pub fn radical(&self) -> Exponent {
        Exponent::new(self.coords.iter().map(|&c| c.min(1)).collect())
    }

    /// Squarefree exponent of a variable set.
    pub fn from_set(n: usize, set: VarSet) -> Exponent {
        let mut coords = vec![0; n];
        for j in set.iter() {
            coords[j - 1] = 1;
        }
        Exponent { coords }
    }

    /// Zeroes every coordinate outside `keep`.
    pub fn restricted_to(&self, keep: VarSet) -> Exponent {
        Exponent::new(
            self.coords
                .iter()
                .enumerate()
                .map(|(i, &c)| if keep.contains(i + 1) { c } else { 0 })
                .collect(),
        )
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.len(), n))
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// Renders `x^a` in the ideal text grammar, e.g. `x1*x2^3`; the monomial 1
/// renders as `1`.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if c == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_and_degree() {
        let a = Exponent::new(vec![1, 0, 3]);
        assert_eq!(a.total_degree(), 4);
        assert_eq!(a.support().to_vec(), vec![1, 3]);
        assert_eq!(a.deg(3), 3);
    }

    #[test]
    fn divisibility() {
        let a = Exponent::new(vec![1, 1, 0]);
        let b = Exponent::new(vec![2, 1, 0]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
    }

    #[test]
    fn saturated_sub_is_colon_step() {
        let u = Exponent::new(vec![0, 1, 5]);
        let a = Exponent::new(vec![0, 2, 0]);
        assert_eq!(u.saturated_sub(&a), Exponent::new(vec![0, 0, 5]));
    }

    #[test]
    fn varset_subsets_enumerates_all() {
        let s = VarSet::from_indices([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&VarSet::EMPTY));
        assert!(subs.contains(&s));
    }

    #[test]
    fn display_matches_grammar() {
        let a = Exponent::new(vec![1, 3, 0]);
        assert_eq!(a.to_string(), "x1*x2^3");
        assert_eq!(Exponent::zero(2).to_string(), "1");
    }
}
