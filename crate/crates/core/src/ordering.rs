//! Monomial orderings of N^n.
//!
//! All orderings here are total, compatible with addition, and have 0 as
//! their minimum, so they are well-orderings. They are first-class
//! immutable values: the product and opposite constructions used by the
//! Rees and enveloping algebras compose them mechanically.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    /// Lexicographic: the first differing exponent decides.
    Lex,
    /// Total degree first, lexicographic tiebreak.
    DegLex,
    /// Weight functional first (all weights positive), lexicographic tiebreak.
    WeightThenLex(Vec<u64>),
    /// Lexicographic product: `left` on the first `split` coordinates,
    /// `right` on the rest; the left block decides first.
    Product { left: Box<MonomialOrdering>, right: Box<MonomialOrdering>, split: usize },
    /// a <= b iff reverse(a) <= reverse(b) under the inner ordering.
    Opposite(Box<MonomialOrdering>),
}

impl MonomialOrdering {
    /// Lexicographic product of `self` (on the first `split` variables)
    /// and `right`.
    pub fn product(self, right: MonomialOrdering, split: usize) -> MonomialOrdering {
        MonomialOrdering::Product { left: Box::new(self), right: Box::new(right), split }
    }

    pub fn opposite(self) -> MonomialOrdering {
        match self {
            // The opposite construction is an involution.
            MonomialOrdering::Opposite(inner) => *inner,
            other => MonomialOrdering::Opposite(Box::new(other)),
        }
    }

    /// Compare two multi-indices of the same length.
    pub fn compare(&self, a: &MultiIndex, b: &MultiIndex) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
        }
        Ok(self.cmp_slices(&a.0, &b.0))
    }

    /// Comparison on raw exponent slices; callers guarantee equal length.
    pub fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrdering::Lex => cmp_lex(a, b),
            MonomialOrdering::DegLex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| cmp_lex(a, b))
            }
            MonomialOrdering::WeightThenLex(w) => {
                debug_assert_eq!(w.len(), a.len());
                let wa: u64 = a.iter().zip(w).map(|(&x, &wi)| x as u64 * wi).sum();
                let wb: u64 = b.iter().zip(w).map(|(&x, &wi)| x as u64 * wi).sum();
                wa.cmp(&wb).then_with(|| cmp_lex(a, b))
            }
            MonomialOrdering::Product { left, right, split } => {
                let k = *split;
                left.cmp_slices(&a[..k], &b[..k]).then_with(|| right.cmp_slices(&a[k..], &b[k..]))
            }
            MonomialOrdering::Opposite(inner) => {
                let ra: Vec<u32> = a.iter().rev().copied().collect();
                let rb: Vec<u32> = b.iter().rev().copied().collect();
                inner.cmp_slices(&ra, &rb)
            }
        }
    }

    /// Largest element of a nonempty iterator under this ordering.
    pub fn max_of<'a, I: Iterator<Item = &'a MultiIndex>>(&self, iter: I) -> Option<&'a MultiIndex> {
        iter.fold(None, |best, m| match best {
            None => Some(m),
            Some(cur) => {
                if self.cmp_slices(&m.0, &cur.0) == Ordering::Greater {
                    Some(m)
                } else {
                    Some(cur)
                }
            }
        })
    }

    /// A sound syntactic test for degree compatibility
    /// (|a| < |b| implies a < b). `false` may be returned for orderings
    /// that happen to be degree-compatible; `true` is always correct.
    pub fn is_degree_compatible(&self, nvars: usize) -> bool {
        match self {
            MonomialOrdering::Lex => nvars <= 1,
            MonomialOrdering::DegLex => true,
            MonomialOrdering::WeightThenLex(w) => w.windows(2).all(|p| p[0] == p[1]),
            MonomialOrdering::Product { left, split, .. } => {
                // Degenerate products only: a genuine two-block product
                // ignores the right block's degree.
                *split == nvars && left.is_degree_compatible(nvars)
            }
            MonomialOrdering::Opposite(inner) => inner.is_degree_compatible(nvars),
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    #[test]
    fn deglex_examples() {
        let ord = MonomialOrdering::DegLex;
        assert_eq!(ord.compare(&mi(&[1, 1]), &mi(&[2, 0])).unwrap(), Ordering::Less);
        assert_eq!(ord.compare(&mi(&[0, 0]), &mi(&[0, 0])).unwrap(), Ordering::Equal);
        assert_eq!(ord.compare(&mi(&[0, 3]), &mi(&[1, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrdering::Lex;
        assert_eq!(ord.compare(&mi(&[0, 5]), &mi(&[1, 0])).unwrap(), Ordering::Less);
        assert!(ord.compare(&mi(&[1]), &mi(&[1, 0])).is_err());
    }

    #[test]
    fn opposite_reverses_coordinates() {
        let ord = MonomialOrdering::Lex.opposite();
        // (1,0) vs (0,1): reversed (0,1) vs (1,0): lex says Less.
        assert_eq!(ord.compare(&mi(&[1, 0]), &mi(&[0, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn product_extends_left() {
        let ord = MonomialOrdering::DegLex.product(MonomialOrdering::Lex, 2);
        assert_eq!(ord.compare(&mi(&[1, 0, 9]), &mi(&[0, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&mi(&[1, 0, 0]), &mi(&[1, 0, 2])).unwrap(), Ordering::Less);
    }

    #[test]
    fn degree_compatibility_classification() {
        assert!(MonomialOrdering::DegLex.is_degree_compatible(4));
        assert!(!MonomialOrdering::Lex.is_degree_compatible(2));
        assert!(MonomialOrdering::Lex.is_degree_compatible(1));
        assert!(MonomialOrdering::WeightThenLex(vec![2, 2]).is_degree_compatible(2));
        assert!(!MonomialOrdering::WeightThenLex(vec![2, 1]).is_degree_compatible(2));
        assert!(MonomialOrdering::DegLex.opposite().is_degree_compatible(3));
    }

    fn arb_index(n: usize) -> impl Strategy<Value = MultiIndex> {
        proptest::collection::vec(0u32..5, n).prop_map(MultiIndex)
    }

    fn orderings(n: usize) -> Vec<MonomialOrdering> {
        let mut v = vec![
            MonomialOrdering::Lex,
            MonomialOrdering::DegLex,
            MonomialOrdering::DegLex.clone().opposite(),
            MonomialOrdering::WeightThenLex((1..=n as u64).collect()),
        ];
        if n >= 2 {
            v.push(MonomialOrdering::DegLex.product(MonomialOrdering::Lex, n / 2));
        }
        v
    }

    proptest! {
        // Totality, transitivity, compatibility with addition, 0 minimal.
        #[test]
        fn monomial_ordering_axioms(
            a in arb_index(3), b in arb_index(3), c in arb_index(3)
        ) {
            for ord in orderings(3) {
                let ab = ord.compare(&a, &b).unwrap();
                let ba = ord.compare(&b, &a).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // transitivity
                if ab != Ordering::Greater
                    && ord.compare(&b, &c).unwrap() != Ordering::Greater
                {
                    prop_assert_ne!(ord.compare(&a, &c).unwrap(), Ordering::Greater);
                }
                // addition compatibility
                prop_assert_eq!(ord.compare(&a.add(&c), &b.add(&c)).unwrap(), ab);
                // zero minimal
                let zero = MultiIndex::zero(3);
                prop_assert_ne!(ord.compare(&zero, &a).unwrap(), Ordering::Greater);
            }
        }
    }
}
