//! Derived algebras: opposite, tensor product, Rees algebra
//! (homogenization), and the associated graded algebra.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{CommutationSystem, SolvableAlgebra};
use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;

/// The opposite algebra: reversed variable tuple, opposite ordering.
/// Multiplying a.b here equals b.a in the original after index reversal.
pub fn opposite(alg: &SolvableAlgebra) -> SolvableAlgebra {
    let n = alg.nvars();
    let mut names: Vec<String> = alg.names().to_vec();
    names.reverse();
    let ordering = alg.ordering().clone().opposite();
    let mut system = CommutationSystem::trivial(n, alg.field());
    for (i, j) in pairs(n) {
        // New pair (y_i, y_j) with y_i = x_{n-1-i} comes from the original
        // pair (a, b) = (n-1-j, n-1-i): y_j ∘ y_i = x_b x_a in the base.
        let (a, b) = (n - 1 - j, n - 1 - i);
        let rel = alg.system().get(a, b);
        let p = reverse_exponents(&rel.p);
        system.set(i, j, rel.c.clone(), p);
    }
    SolvableAlgebra::validate(names, alg.field(), ordering, system)
        .expect("opposite of a solvable algebra is solvable")
}

/// Transport an element of the base algebra to the opposite algebra
/// (or back): the underlying K-linear space is shared, and the PBW
/// monomial with exponent a corresponds to the opposite PBW monomial
/// with exponent reversed(a).
pub fn reverse_exponents(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(f.terms().map(|(m, c)| (m.reversed(), c.clone())))
}

/// Tensor product over K: N + N' variables, lexicographic product
/// ordering, blockwise relations with the cross block commuting.
pub fn tensor(left: &SolvableAlgebra, right: &SolvableAlgebra) -> Result<SolvableAlgebra> {
    if left.field() != right.field() {
        return Err(Error::FieldMismatch);
    }
    let (n, m) = (left.nvars(), right.nvars());
    let mut names: Vec<String> = left.names().to_vec();
    for name in right.names() {
        let mut candidate = name.clone();
        while names.contains(&candidate) {
            candidate.push('\'');
        }
        names.push(candidate);
    }
    let ordering = left.ordering().clone().product(right.ordering().clone(), n);
    let mut system = CommutationSystem::trivial(n + m, left.field());
    for (i, j) in pairs(n) {
        let rel = left.system().get(i, j);
        system.set(i, j, rel.c.clone(), pad_right(&rel.p, m));
    }
    for (i, j) in pairs(m) {
        let rel = right.system().get(i, j);
        system.set(n + i, n + j, rel.c.clone(), pad_left(&rel.p, n));
    }
    SolvableAlgebra::validate(names, left.field(), ordering, system)
}

fn pad_right(f: &Polynomial, extra: usize) -> Polynomial {
    Polynomial::from_terms(f.terms().map(|(a, c)| {
        let mut v = a.0.clone();
        v.extend(core::iter::repeat_n(0, extra));
        (MultiIndex(v), c.clone())
    }))
}

fn pad_left(f: &Polynomial, extra: usize) -> Polynomial {
    Polynomial::from_terms(f.terms().map(|(a, c)| {
        let mut v = alloc::vec![0u32; extra];
        v.extend_from_slice(&a.0);
        (MultiIndex(v), c.clone())
    }))
}

/// The Rees algebra of a quadric algebra: adjoin a central degree-one
/// variable t, homogenize every p_ij to degree 2 by padding with powers
/// of t, and order by the lexicographic product of the base ordering
/// with the usual order on the t-exponent. The result is homogeneous.
pub fn rees(alg: &SolvableAlgebra) -> Result<SolvableAlgebra> {
    if !alg.is_quadric() {
        return Err(Error::NotQuadric);
    }
    let n = alg.nvars();
    let mut names: Vec<String> = alg.names().to_vec();
    let mut t = "t".to_string();
    while names.contains(&t) {
        t.push('_');
    }
    names.push(t);
    let ordering = alg.ordering().clone().product(MonomialOrdering::Lex, n);
    let mut system = CommutationSystem::trivial(n + 1, alg.field());
    for (i, j) in pairs(n) {
        let rel = alg.system().get(i, j);
        let p = Polynomial::from_terms(rel.p.terms().map(|(a, c)| {
            let mut v = a.0.clone();
            v.push(2 - a.degree() as u32);
            (MultiIndex(v), c.clone())
        }));
        system.set(i, j, rel.c.clone(), p);
    }
    SolvableAlgebra::validate(names, alg.field(), ordering, system)
}

/// f* = sum_a f_a x^a t^{deg(f) - |a|}, homogeneous of degree deg(f).
pub fn homogenize_poly(f: &Polynomial) -> Polynomial {
    match f.degree() {
        None => Polynomial::zero(),
        Some(d) => Polynomial::from_terms(f.terms().map(|(a, c)| {
            let mut v = a.0.clone();
            v.push((d - a.degree()) as u32);
            (MultiIndex(v), c.clone())
        })),
    }
}

/// The algebra morphism t -> 1: x^a t^i maps to x^a.
pub fn dehomogenize_poly(h: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (a, c) in h.terms() {
        let v = a.0[..a.len() - 1].to_vec();
        out.add_term(&MultiIndex(v), c);
    }
    out
}

/// The associated graded algebra for the standard filtration: relations
/// y_j y_i = c_ij y_i y_j + (p_ij)_(2). Commutative iff all deg p_ij < 2
/// and c_ij = 1.
pub fn associated_graded(alg: &SolvableAlgebra) -> Result<SolvableAlgebra> {
    if !alg.is_quadric() {
        return Err(Error::NotQuadric);
    }
    let n = alg.nvars();
    let mut system = CommutationSystem::trivial(n, alg.field());
    for (i, j) in pairs(n) {
        let rel = alg.system().get(i, j);
        system.set(i, j, rel.c.clone(), rel.p.homogeneous_component(2));
    }
    SolvableAlgebra::validate(alg.names().to_vec(), alg.field(), alg.ordering().clone(), system)
}

/// The top-degree homogeneous component of f, read in the associated
/// graded algebra (which shares the variable tuple).
pub fn top_form(f: &Polynomial) -> Polynomial {
    match f.degree() {
        None => Polynomial::zero(),
        Some(d) => f.homogeneous_component(d),
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}
