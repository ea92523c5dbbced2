//! Algebras of solvable type: validation of commutation systems, PBW
//! normal-form arithmetic, and the standard presets.
//!
//! An algebra is described by a commutation system
//! x_j x_i = c_ij x_i x_j + p_ij (for i < j) together with a monomial
//! ordering; it is of solvable type when every c_ij is nonzero and
//! lm(p_ij) < x_i x_j. Products are computed by recursive single-swap
//! rewriting of the leftmost misordered generator pair, memoized per
//! monomial pair.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use spin::Mutex;

use crate::coeff::{Coefficient, FieldSpec};
use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;

/// One commutation relation x_j x_i = c x_i x_j + p (indices implicit).
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub c: Coefficient,
    pub p: Polynomial,
}

/// The full family of relations for pairs 1 <= i < j <= N (stored 0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct CommutationSystem {
    nvars: usize,
    relations: Vec<Relation>,
}

impl CommutationSystem {
    /// The commutative system: all c_ij = 1, p_ij = 0.
    pub fn trivial(nvars: usize, field: FieldSpec) -> Self {
        let count = nvars * nvars.saturating_sub(1) / 2;
        let one = Relation { c: field.one(), p: Polynomial::zero() };
        CommutationSystem { nvars, relations: alloc::vec![one; count] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.nvars);
        i * self.nvars - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Set the relation for the pair (i, j), 0-based, i < j.
    pub fn set(&mut self, i: usize, j: usize, c: Coefficient, p: Polynomial) {
        let k = self.idx(i, j);
        self.relations[k] = Relation { c, p };
    }

    pub fn get(&self, i: usize, j: usize) -> &Relation {
        &self.relations[self.idx(i, j)]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &Relation)> {
        let n = self.nvars;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.get(i, j))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AlgebraFlags {
    /// all deg p_ij <= 2
    pub quadric: bool,
    /// all p_ij zero or homogeneous of degree exactly 2
    pub homogeneous: bool,
    /// all p_ij = 0
    pub semi_commutative: bool,
    /// semi-commutative and all c_ij = 1
    pub commutative: bool,
}

/// A validated algebra of solvable type. Shared immutably; the product
/// memo is internally synchronized and observationally pure.
#[derive(Debug)]
pub struct SolvableAlgebra {
    nvars: usize,
    names: Vec<String>,
    field: FieldSpec,
    ordering: MonomialOrdering,
    system: CommutationSystem,
    flags: AlgebraFlags,
    memo: Mutex<BTreeMap<(MultiIndex, MultiIndex), Polynomial>>,
}

impl Clone for SolvableAlgebra {
    fn clone(&self) -> Self {
        SolvableAlgebra {
            nvars: self.nvars,
            names: self.names.clone(),
            field: self.field,
            ordering: self.ordering.clone(),
            system: self.system.clone(),
            flags: self.flags,
            memo: Mutex::new(BTreeMap::new()),
        }
    }
}

impl PartialEq for SolvableAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.names == other.names
            && self.field == other.field
            && self.ordering == other.ordering
            && self.system == other.system
    }
}

impl SolvableAlgebra {
    /// Validate a commutation system against an ordering. Succeeds iff all
    /// c_ij are nonzero and lm(p_ij) < x_i x_j; computes the flags.
    pub fn validate(
        names: Vec<String>,
        field: FieldSpec,
        ordering: MonomialOrdering,
        system: CommutationSystem,
    ) -> Result<Self> {
        let nvars = system.nvars();
        assert_eq!(names.len(), nvars, "one name per variable");
        let mut flags = AlgebraFlags {
            quadric: true,
            homogeneous: true,
            semi_commutative: true,
            commutative: true,
        };
        for (i, j, rel) in system.pairs() {
            let (oi, oj) = (i + 1, j + 1);
            if rel.c.is_zero() {
                return Err(Error::NotSolvable { i: oi, j: oj, reason: "c is zero".into() });
            }
            if rel.c.field() != field {
                return Err(Error::FieldMismatch);
            }
            let pair = MultiIndex::unit(nvars, i).add(&MultiIndex::unit(nvars, j));
            if let Some(lm) = rel.p.leading_monomial(&ordering) {
                if lm.len() != nvars {
                    return Err(Error::DimensionMismatch { expected: nvars, found: lm.len() });
                }
                if ordering.cmp_slices(&lm.0, &pair.0) != Ordering::Less {
                    return Err(Error::NotSolvable {
                        i: oi,
                        j: oj,
                        reason: "lm(p) is not below x_i x_j".into(),
                    });
                }
                if rel.p.terms().any(|(_, c)| c.field() != field) {
                    return Err(Error::FieldMismatch);
                }
            }
            let pdeg = rel.p.degree();
            if pdeg.is_some_and(|d| d > 2) {
                flags.quadric = false;
            }
            if !(rel.p.is_zero() || (rel.p.is_homogeneous() && pdeg == Some(2))) {
                flags.homogeneous = false;
            }
            if !rel.p.is_zero() {
                flags.semi_commutative = false;
            }
            if !rel.p.is_zero() || !rel.c.is_one() {
                flags.commutative = false;
            }
        }
        if !flags.quadric {
            flags.homogeneous = false;
        }
        let alg = SolvableAlgebra {
            nvars,
            names,
            field,
            ordering,
            system,
            flags,
            memo: Mutex::new(BTreeMap::new()),
        };
        // The leading-monomial condition alone does not make the ordered
        // monomials a basis: the rewriting system must also be confluent.
        // The only minimal overlaps are the words x_k x_j x_i with
        // i < j < k, so resolving those is sufficient (diamond lemma).
        for i in 0..nvars {
            for j in i + 1..nvars {
                for k in j + 1..nvars {
                    let (xi, xj, xk) = (
                        MultiIndex::unit(nvars, i),
                        MultiIndex::unit(nvars, j),
                        MultiIndex::unit(nvars, k),
                    );
                    let left = alg.mul(&alg.mul(&alg.mono(xk.clone()), &alg.mono(xj.clone())), &alg.mono(xi.clone()));
                    let right = alg.mul(&alg.mono(xk), &alg.mul(&alg.mono(xj), &alg.mono(xi)));
                    if left != right {
                        return Err(Error::NotSolvable {
                            i: i + 1,
                            j: k + 1,
                            reason: alloc::format!(
                                "overlap x_{} x_{} x_{} does not resolve; the ordered monomials are not a basis",
                                k + 1,
                                j + 1,
                                i + 1
                            ),
                        });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.ordering
    }

    pub fn system(&self) -> &CommutationSystem {
        &self.system
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    pub fn is_quadric(&self) -> bool {
        self.flags.quadric
    }

    pub fn is_homogeneous(&self) -> bool {
        self.flags.homogeneous
    }

    pub fn is_commutative(&self) -> bool {
        self.flags.commutative
    }

    pub fn compare(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        self.ordering.cmp_slices(&a.0, &b.0)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars, self.field)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::variable(i, self.nvars, self.field)
    }

    pub fn mono(&self, m: MultiIndex) -> Polynomial {
        Polynomial::monomial(m, self.field.one())
    }

    pub fn lm<'a>(&self, f: &'a Polynomial) -> Option<&'a MultiIndex> {
        f.leading_monomial(&self.ordering)
    }

    pub fn lc<'a>(&self, f: &'a Polynomial) -> Option<&'a Coefficient> {
        f.leading_coeff(&self.ordering)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// PBW normal form of x^a . x^b. The leading monomial is always
    /// x^{a+b}; in quadric algebras the degree is at most |a| + |b|.
    pub fn mul_mono(&self, a: &MultiIndex, b: &MultiIndex) -> Polynomial {
        debug_assert_eq!(a.len(), self.nvars);
        debug_assert_eq!(b.len(), self.nvars);
        if ordered_concat(a, b) {
            return self.mono(a.add(b));
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.memo.lock().get(&key) {
            return hit.clone();
        }
        let result = if b.degree() == 1 {
            let j = b.min_support().expect("degree-1 index has support");
            self.mul_mono_gen(a, j)
        } else {
            // x^a x^b = (x^a x_j) x^{b'} with x_j the leftmost generator of b.
            let j = b.min_support().expect("nonzero b");
            let rest = b.checked_sub(&MultiIndex::unit(self.nvars, j)).unwrap();
            let head = self.mul_mono(a, &MultiIndex::unit(self.nvars, j));
            let mut acc = Polynomial::zero();
            for (g, c) in head.terms() {
                let prod = self.mul_mono(g, &rest);
                acc = acc.add(&prod.scale(c));
            }
            acc
        };
        self.memo.lock().insert(key, result.clone());
        result
    }

    /// x^a . x_j where the concatenated word is misordered (some generator
    /// of a has index above j). One swap of the rightmost generator of a
    /// with x_j, then recursion.
    fn mul_mono_gen(&self, a: &MultiIndex, j: usize) -> Polynomial {
        let k = a.max_support().expect("misordered product has nonzero left factor");
        debug_assert!(k > j);
        let delta = a.checked_sub(&MultiIndex::unit(self.nvars, k)).unwrap();
        // x^a x_j = x^delta (x_k x_j) = c_jk (x^delta x_j) x_k + x^delta p_jk
        let rel = self.system.get(j, k);
        let inner = self.mul_mono(&delta, &MultiIndex::unit(self.nvars, j));
        let mut acc = Polynomial::zero();
        for (g, c) in inner.terms() {
            let shifted = self.mul_mono(g, &MultiIndex::unit(self.nvars, k));
            acc = acc.add(&shifted.scale(&c.mul(&rel.c)));
        }
        for (beta, c) in rel.p.terms() {
            let prod = self.mul_mono(&delta, beta);
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    /// Bilinear extension of the monomial product.
    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let prod = self.mul_mono(a, b);
                acc = acc.add(&prod.scale(&ca.mul(cb)));
            }
        }
        acc
    }

    /// Product of a list, left to right.
    pub fn mul_all(&self, factors: &[Polynomial]) -> Polynomial {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Number of memoized monomial products (for diagnostics).
    pub fn memo_len(&self) -> usize {
        self.memo.lock().len()
    }
}

fn ordered_concat(a: &MultiIndex, b: &MultiIndex) -> bool {
    match (a.max_support(), b.min_support()) {
        (Some(ka), Some(kb)) => ka <= kb,
        _ => true,
    }
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// K[x_1, ..., x_n] with the given ordering. Small variable counts get the
/// classical names x, y, z.
pub fn preset_commutative(n: usize, ordering: MonomialOrdering) -> SolvableAlgebra {
    let names: Vec<String> = match n {
        1 => alloc::vec!["x".to_string()],
        2 => alloc::vec!["x".to_string(), "y".to_string()],
        3 => alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
        _ => numbered("x", n),
    };
    let field = FieldSpec::Rational;
    SolvableAlgebra::validate(names, field, ordering, CommutationSystem::trivial(n, field))
        .expect("commutative preset is always of solvable type")
}

/// The n-th Weyl algebra A_n: 2n generators x_1..x_n, d_1..d_n with
/// d_i x_i = x_i d_i + 1 and all other pairs commuting.
pub fn preset_weyl(n: usize, ordering: MonomialOrdering) -> Result<SolvableAlgebra> {
    let names: Vec<String> = if n == 1 {
        alloc::vec!["x".to_string(), "d".to_string()]
    } else {
        let mut v = numbered("x", n);
        v.extend(numbered("d", n));
        v
    };
    let field = FieldSpec::Rational;
    let nvars = 2 * n;
    let mut system = CommutationSystem::trivial(nvars, field);
    for i in 0..n {
        // pair (x_i, d_i): d_i x_i = x_i d_i + 1
        system.set(i, n + i, field.one(), Polynomial::constant(nvars, field.one()));
    }
    SolvableAlgebra::validate(names, field, ordering, system)
}

/// The universal enveloping algebra of a Lie algebra given by brackets
/// [x_j, x_i] = sum_k coeff * x_k for i < j (0-based indices into `names`);
/// the relation stored is x_j x_i = x_i x_j - [x_j, x_i].
///
/// The Jacobi identity is not checked: any structure constants passing the
/// solvable-type validation yield a legitimate algebra.
pub fn preset_lie(
    names: Vec<String>,
    brackets: &[((usize, usize), Vec<(usize, Coefficient)>)],
    ordering: MonomialOrdering,
) -> Result<SolvableAlgebra> {
    let n = names.len();
    let field = FieldSpec::Rational;
    let mut system = CommutationSystem::trivial(n, field);
    for ((i, j), combo) in brackets {
        if *i >= n || *j >= n || i >= j {
            return Err(Error::VarOutOfRange { index: (*j).max(*i) + 1, nvars: n });
        }
        let mut p = Polynomial::zero();
        for (k, c) in combo {
            if *k >= n {
                return Err(Error::VarOutOfRange { index: *k + 1, nvars: n });
            }
            p.add_term(&MultiIndex::unit(n, *k), &c.neg());
        }
        system.set(*i, *j, field.one(), p);
    }
    SolvableAlgebra::validate(names, field, ordering, system)
}

/// The 2-dimensional nonabelian Lie algebra: [x_2, x_1] = x_1.
pub fn preset_nonabelian2(ordering: MonomialOrdering) -> SolvableAlgebra {
    let field = FieldSpec::Rational;
    preset_lie(
        numbered("x", 2),
        &[((0, 1), alloc::vec![(0, field.one())])],
        ordering,
    )
    .expect("linear brackets pass validation under deglex-like orderings")
}
