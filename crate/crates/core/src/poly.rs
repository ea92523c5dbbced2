//! Sparse polynomials over a PBW monomial basis.
//!
//! A `Polynomial` is a finite map from multi-indices to nonzero
//! coefficients. It is a plain value: the algebra it lives in is passed
//! as context to the operations that need the commutation relations or
//! the monomial ordering.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::coeff::{Coefficient, FieldSpec};
use crate::monomial::MultiIndex;
use crate::ordering::MonomialOrdering;

/// Finite coefficient map; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<MultiIndex, Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, field: FieldSpec) -> Self {
        Self::monomial(MultiIndex::zero(nvars), field.one())
    }

    pub fn monomial(exp: MultiIndex, coeff: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Polynomial { terms }
    }

    pub fn constant(nvars: usize, coeff: Coefficient) -> Self {
        Self::monomial(MultiIndex::zero(nvars), coeff)
    }

    pub fn variable(i: usize, nvars: usize, field: FieldSpec) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), field.one())
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, Coefficient)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in the structural (not ordering-dependent) key order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Coefficient)> {
        self.terms.iter()
    }

    /// Terms sorted descending under the given monomial ordering.
    pub fn terms_desc(&self, ord: &MonomialOrdering) -> Vec<(&MultiIndex, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.cmp_slices(&b.0, &a.0));
        v
    }

    pub fn coeff(&self, m: &MultiIndex) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiIndex> {
        self.terms.keys()
    }

    /// Total degree: max |a| over the support; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True for zero or a single total degree across the support.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// The homogeneous component of total degree d.
    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Leading monomial under `ord`; `None` for the zero polynomial.
    pub fn leading_monomial(&self, ord: &MonomialOrdering) -> Option<&MultiIndex> {
        ord.max_of(self.terms.keys())
    }

    pub fn leading_coeff(&self, ord: &MonomialOrdering) -> Option<&Coefficient> {
        self.leading_monomial(ord).and_then(|m| self.terms.get(m))
    }

    pub fn add_term(&mut self, m: &MultiIndex, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect() }
    }

    /// Multiply every exponent by adding `shift` (a commutative monomial
    /// shift, used only where the ambient algebra is known to permit it,
    /// e.g. cone bookkeeping).
    pub fn shift_exponents(&self, shift: &MultiIndex) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.add(shift), c.clone())).collect(),
        }
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, ord: &MonomialOrdering) -> Polynomial {
        match self.leading_coeff(ord) {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Compare leading monomials; zero sorts below everything.
    pub fn cmp_by_lm(&self, other: &Polynomial, ord: &MonomialOrdering) -> Ordering {
        match (self.leading_monomial(ord), other.leading_monomial(ord)) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => ord.cmp_slices(&a.0, &b.0),
        }
    }
}
