//! Multi-indices, variable sets, divisibility and minimal generating sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An exponent vector in N^n, standing for the PBW monomial
/// x_1^{a_1} ... x_n^{a_n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    /// The i-th unit vector (0-based).
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Total degree |a|.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` unless `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(out))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices (0-based) of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i)
    }

    pub fn max_support(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a > 0)
    }

    pub fn min_support(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    /// The reversed exponent vector (a_n, ..., a_1).
    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        MultiIndex(v)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.len(), found: other.len() })
        }
    }
}

/// Componentwise maximum: the exponent of lcm(x^a, x^b).
pub fn lcm(a: &MultiIndex, b: &MultiIndex) -> Result<MultiIndex> {
    a.check_len(b)?;
    Ok(MultiIndex(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect()))
}

/// The divisibility-minimal elements of `gens`; they generate the same
/// monomial ideal (Dickson's Lemma guarantees finiteness in general).
pub fn minimal_generators(gens: &[MultiIndex]) -> Vec<MultiIndex> {
    let mut sorted: Vec<&MultiIndex> = gens.iter().collect();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<MultiIndex> = Vec::new();
    // Processing by ascending degree: a monomial can only be divided by one
    // of smaller or equal degree, which has already been kept.
    sorted.sort_by_key(|m| m.degree());
    for m in sorted {
        if !out.iter().any(|kept| kept.divides(m)) {
            out.push(m.clone());
        }
    }
    out.sort();
    out
}

/// A subset of the variables {x_1, ..., x_n}, stored as a bitmask
/// (0-based indices). Variable counts are limited to 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet {
    bits: u64,
}

impl VarSet {
    pub const EMPTY: VarSet = VarSet { bits: 0 };

    pub fn empty() -> Self {
        VarSet { bits: 0 }
    }

    /// All of x_1, ..., x_n.
    pub fn full(nvars: usize) -> Self {
        assert!(nvars <= 64, "variable counts above 64 are not supported");
        if nvars == 64 {
            VarSet { bits: u64::MAX }
        } else {
            VarSet { bits: (1u64 << nvars) - 1 }
        }
    }

    pub fn from_indices(indices: &[usize], nvars: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i >= nvars {
                return Err(Error::VarOutOfRange { index: i + 1, nvars });
            }
            bits |= 1 << i;
        }
        Ok(VarSet { bits })
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.bits & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.bits |= 1 << i;
    }

    pub fn remove(&self, i: usize) -> Self {
        VarSet { bits: self.bits & !(1 << i) }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersect(&self, other: &Self) -> Self {
        VarSet { bits: self.bits & other.bits }
    }

    /// Iterate member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.bits & (1 << i) != 0)
    }

    /// Every subset of `self`, in an order suitable for deterministic
    /// maximum-cardinality searches.
    pub fn subsets(&self) -> Vec<VarSet> {
        let members: Vec<usize> = self.iter().collect();
        let k = members.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0..(1u64 << k) {
            let mut bits = 0u64;
            for (pos, &idx) in members.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    bits |= 1 << idx;
                }
            }
            out.push(VarSet { bits });
        }
        out
    }

    /// Does the monomial x^m lie in the submonoid generated by this set?
    pub fn supports(&self, m: &MultiIndex) -> bool {
        m.support().all(|i| self.contains(i))
    }

    /// Members as a sorted list of 0-based indices.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
