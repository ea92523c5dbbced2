//! Weight-vector approximation of monomial orderings.
//!
//! For any monomial ordering and degree bound d there is a positive
//! integer weight vector w with ||w|| <= 2d(N+1)N^{N/2} whose weight
//! functional agrees with the ordering on all multi-indices of degree at
//! most d. The search below finds a smallest-norm such vector by
//! iterative deepening; the norm bound caps the search.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::ordering::MonomialOrdering;

/// A positive integer weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    /// wt(a) = w . a
    pub fn weight(&self, a: &MultiIndex) -> u64 {
        debug_assert_eq!(self.0.len(), a.len());
        self.0.iter().zip(&a.0).map(|(&w, &x)| w * x as u64).sum()
    }

    /// max |w_i|
    pub fn norm(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// ceil(2 d (N+1) N^{N/2}) as an exact integer.
pub fn weight_norm_bound(nvars: usize, d: usize) -> BigInt {
    let n = BigInt::from(nvars);
    let base = BigInt::from(2 * d as u64 * (nvars as u64 + 1)) * n.pow(nvars as u32 / 2);
    if nvars.is_multiple_of(2) {
        base
    } else {
        // ceil(base * sqrt(N)): smallest M with M^2 >= base^2 * N.
        let target = &base * &base * &n;
        ceil_sqrt(&target)
    }
}

fn ceil_sqrt(v: &BigInt) -> BigInt {
    if v.is_negative() || v.is_zero() {
        return BigInt::zero();
    }
    let r = v.sqrt();
    if &r * &r == *v {
        r
    } else {
        r + BigInt::one()
    }
}

/// All multi-indices in N^n of total degree at most d, ascending degree.
pub fn indices_up_to(nvars: usize, d: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    enumerate(&mut cur, 0, d, &mut out);
    out.sort_by_key(|m| m.degree());
    out
}

fn enumerate(cur: &mut Vec<u32>, pos: usize, remaining: usize, out: &mut Vec<MultiIndex>) {
    if pos == cur.len() {
        out.push(MultiIndex(cur.clone()));
        return;
    }
    for e in 0..=remaining {
        cur[pos] = e as u32;
        enumerate(cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

/// Find a positive weight vector whose weight functional agrees with `ord`
/// on all pairs of multi-indices of degree at most `d`:
/// a <= b iff wt(a) <= wt(b). Iterative deepening over the max-norm, so the
/// returned vector has minimal norm; the search is capped at
/// ceil(2d(N+1)N^{N/2}), within which a solution is guaranteed to exist.
pub fn approx_weight_vector(
    ord: &MonomialOrdering,
    d: usize,
    nvars: usize,
) -> Result<WeightVector> {
    assert!(d >= 1, "degree bound must be at least 1");
    let monos = indices_up_to(nvars, d);
    // Signed difference vectors b - a for a < b; the functional must be
    // strictly positive on each. Deduplicated: many pairs share one
    // difference.
    let mut constraints: Vec<Vec<i64>> = Vec::new();
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i + 1..] {
            let mut delta: Vec<i64> =
                b.0.iter().zip(&a.0).map(|(&x, &y)| x as i64 - y as i64).collect();
            if ord.compare(b, a)? == Ordering::Less {
                for v in &mut delta {
                    *v = -*v;
                }
            }
            constraints.push(delta);
        }
    }
    constraints.sort();
    constraints.dedup();
    // Cheap-to-violate constraints first: small support, then small entries.
    constraints.sort_by_key(|c| {
        (c.iter().filter(|&&v| v != 0).count(), c.iter().map(|v| v.abs()).sum::<i64>())
    });

    let bound = weight_norm_bound(nvars, d);
    let cap = u64::try_from(&bound).unwrap_or(u64::MAX);
    let mut w = vec![1u64; nvars];
    for m in 1..=cap {
        if search(&constraints, &mut w, 0, m, false) {
            return Ok(WeightVector(w));
        }
    }
    Err(Error::WeightSearchExhausted)
}

/// Depth-first enumeration of w in {1..m}^n with max(w) = m, lexicographic,
/// pruning prefixes that already violate a fully-determined constraint.
fn search(constraints: &[Vec<i64>], w: &mut Vec<u64>, pos: usize, m: u64, has_max: bool) -> bool {
    let n = w.len();
    if pos == n {
        return has_max && constraints.iter().all(|c| dot(c, w) > 0);
    }
    for v in 1..=m {
        w[pos] = v;
        let hm = has_max || v == m;
        // Remaining positions must still be able to realize the max.
        if !hm && pos + 1 == n {
            continue;
        }
        if prefix_ok(constraints, w, pos + 1) && search(constraints, w, pos + 1, m, hm) {
            return true;
        }
    }
    w[pos] = 1;
    false
}

fn dot(c: &[i64], w: &[u64]) -> i64 {
    c.iter().zip(w).map(|(&ci, &wi)| ci * wi as i64).sum()
}

fn prefix_ok(constraints: &[Vec<i64>], w: &[u64], filled: usize) -> bool {
    constraints.iter().all(|c| {
        if c[filled..].iter().any(|&v| v != 0) {
            true
        } else {
            c[..filled].iter().zip(w).map(|(&ci, &wi)| ci * wi as i64).sum::<i64>() > 0
        }
    })
}
