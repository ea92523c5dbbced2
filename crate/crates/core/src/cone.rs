//! Cone decompositions: the SPLIT/QUOTIENT combinatorics, d-standard and
//! exact decompositions, Macaulay constants, and Hilbert data read off a
//! decomposition.
//!
//! A cone C(w, y, h) is the K-span of { x^m h : m in w * y^diamond }. A
//! decomposition is a finite set of cones whose direct sum is a given
//! homogeneous space. Monomial decompositions (h = 1) arise from SPLIT;
//! general ones decompose homogeneous left ideals componentwise.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::SolvableAlgebra;
use crate::error::{Error, Result};
use crate::groebner::{irreducible_monomials, GroebnerBasis};
use crate::hilbert::{binom_count, binom_poly, regularity_from, HilbertData, PolyQ};
use crate::monomial::{minimal_generators, MultiIndex, VarSet};
use crate::poly::Polynomial;
use crate::syzygy::colon_ideal;

/// A cone (w, y, h). `factor: None` stands for h = 1 (a monomial cone).
#[derive(Debug, Clone, PartialEq)]
pub struct Cone {
    pub apex: MultiIndex,
    pub vars: VarSet,
    pub factor: Option<Polynomial>,
}

impl Cone {
    pub fn monomial(apex: MultiIndex, vars: VarSet) -> Self {
        Cone { apex, vars, factor: None }
    }

    pub fn with_factor(apex: MultiIndex, vars: VarSet, factor: Polynomial) -> Self {
        debug_assert!(!factor.is_zero() && factor.is_homogeneous());
        Cone { apex, vars, factor: Some(factor) }
    }

    pub fn factor_degree(&self) -> usize {
        self.factor.as_ref().and_then(|f| f.degree()).unwrap_or(0)
    }

    /// deg(w) + deg(h)
    pub fn degree(&self) -> usize {
        self.apex.degree() + self.factor_degree()
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.factor.is_none()
    }

    /// Membership test for monomial cones: m in C(w, y) iff w | m and the
    /// quotient is supported in y.
    pub fn contains_monomial(&self, m: &MultiIndex) -> bool {
        debug_assert!(self.is_monomial());
        match m.checked_sub(&self.apex) {
            Some(q) => self.vars.supports(&q),
            None => false,
        }
    }

    /// Hilbert function of the cone at degree d.
    pub fn hilbert_value(&self, d: usize) -> BigInt {
        let base = self.degree();
        if d < base {
            return BigInt::zero();
        }
        if self.vars.is_empty() {
            return if d == base { BigInt::from(1) } else { BigInt::zero() };
        }
        let k = self.dimension();
        binom_count((d - base + k - 1) as i64, k - 1)
    }

    /// Contribution to the Hilbert polynomial (valid beyond the
    /// decomposition degree; empty-y cones contribute nothing).
    pub fn hilbert_poly(&self) -> PolyQ {
        if self.vars.is_empty() {
            return PolyQ::zero();
        }
        let k = self.dimension();
        binom_poly(k as i64 - 1 - self.degree() as i64, k - 1)
    }
}

/// A finite set of cones decomposing some homogeneous space.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeDecomposition {
    pub nvars: usize,
    pub cones: Vec<Cone>,
}

impl ConeDecomposition {
    pub fn empty(nvars: usize) -> Self {
        ConeDecomposition { nvars, cones: Vec::new() }
    }

    /// max deg over all cones; `None` stands for -infinity.
    pub fn degree(&self) -> Option<usize> {
        self.cones.iter().map(|c| c.degree()).max()
    }

    /// The cones with nonempty y.
    pub fn plus_cones(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter().filter(|c| !c.vars.is_empty())
    }

    pub fn plus_degree(&self) -> Option<usize> {
        self.plus_cones().map(|c| c.degree()).max()
    }

    /// The least d for which the decomposition is d-standard, when it is
    /// d-standard at all: every positive-dimension cone has degree >= d,
    /// and each degree in [d, deg(cone)] is realized in D^+ with at least
    /// the same dimension.
    pub fn d_standard(&self) -> Option<usize> {
        let plus: Vec<&Cone> = self.plus_cones().collect();
        if plus.is_empty() {
            return Some(0);
        }
        let d = plus.iter().map(|c| c.degree()).min().unwrap();
        let top = plus.iter().map(|c| c.degree()).max().unwrap();
        let mut max_dim_at = vec![0usize; top + 1];
        for c in &plus {
            let deg = c.degree();
            max_dim_at[deg] = max_dim_at[deg].max(c.dimension());
        }
        for c in &plus {
            for d2 in d..=c.degree() {
                if max_dim_at[d2] < c.dimension() {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// At most one positive-dimension cone per degree (and d-standard).
    pub fn is_exact(&self) -> bool {
        if self.d_standard().is_none() {
            return false;
        }
        let mut seen: Vec<usize> = self.plus_cones().map(|c| c.degree()).collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// How many cones contain the monomial (monomial decompositions only).
    pub fn monomial_multiplicity(&self, m: &MultiIndex) -> usize {
        self.cones.iter().filter(|c| c.contains_monomial(m)).count()
    }
}

/// Generators of (I : x_i) from generators of the monomial ideal I:
/// divide out x_i where possible, keep the rest.
pub fn quotient_gens(gens: &[MultiIndex], i: usize, nvars: usize) -> Result<Vec<MultiIndex>> {
    if i >= nvars {
        return Err(Error::VarOutOfRange { index: i + 1, nvars });
    }
    let unit = MultiIndex::unit(nvars, i);
    let mut out: Vec<MultiIndex> = gens
        .iter()
        .map(|v| v.checked_sub(&unit).unwrap_or_else(|| v.clone()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// SPLIT(w, y, F): split the monomial cone C(w, y) relative to the
/// monomial ideal I, where F generates (I : w). The P-part lies inside I,
/// the Q-part meets I trivially, and Q is deg(w)-standard.
pub fn split(
    w: &MultiIndex,
    y: VarSet,
    gens: &[MultiIndex],
    nvars: usize,
) -> (Vec<Cone>, Vec<Cone>) {
    if gens.iter().any(|v| v.is_zero()) {
        return (vec![Cone::monomial(w.clone(), y)], Vec::new());
    }
    if !gens.iter().any(|v| y.supports(v)) {
        return (Vec::new(), vec![Cone::monomial(w.clone(), y)]);
    }
    // Maximum-cardinality z subset of y with no generator supported in z;
    // ties resolved by the lexicographically least index set.
    let mut best: Option<VarSet> = None;
    for z in y.subsets() {
        if gens.iter().any(|v| z.supports(v)) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                z.len() > b.len() || (z.len() == b.len() && z.indices() < b.indices())
            }
        };
        if better {
            best = Some(z);
        }
    }
    let z = best.expect("the empty subset avoids all nonunit generators");
    let i = y.iter().find(|&i| !z.contains(i)).expect("y strictly contains z here");

    let (mut p0, mut q0) = split(w, y.remove(i), gens, nvars);
    let quotient = quotient_gens(gens, i, nvars).expect("index from y is in range");
    let (p1, q1) = split(&w.add(&MultiIndex::unit(nvars, i)), y, &quotient, nvars);
    p0.extend(p1);
    q0.extend(q1);
    (p0, q0)
}

/// SPLIT applied to the whole ambient space: (P, Q) with P a decomposition
/// of the monomial ideal generated by F and Q a standard decomposition of
/// its complement.
pub fn split_complement(
    gens: &[MultiIndex],
    nvars: usize,
) -> (ConeDecomposition, ConeDecomposition) {
    let minimal = minimal_generators(gens);
    let (p, q) = split(&MultiIndex::zero(nvars), VarSet::full(nvars), &minimal, nvars);
    (
        ConeDecomposition { nvars, cones: p },
        ConeDecomposition { nvars, cones: q },
    )
}

/// Drop basis elements of degree above 1 + deg(Q); the rest is still a
/// Gröbner basis of the same ideal. (For the unit ideal Q is empty and
/// the threshold clamps to 0, keeping the units.)
pub fn truncate_gb(gb: &GroebnerBasis, q: &ConeDecomposition) -> GroebnerBasis {
    let threshold = q.degree().map_or(0, |d| d + 1);
    let elements: Vec<Polynomial> = gb
        .elements
        .iter()
        .filter(|g| g.degree().is_some_and(|d| d <= threshold))
        .cloned()
        .collect();
    GroebnerBasis { elements, reduced: false, certificates: None }
}

/// The nf-space cone description together with the monomials of degree
/// <= `up_to` outside the leading-monomial ideal.
pub fn irreducible_monomial_basis(
    alg: &SolvableAlgebra,
    gb: &GroebnerBasis,
    up_to: usize,
) -> (Vec<MultiIndex>, ConeDecomposition) {
    let monos = irreducible_monomials(alg, gb, up_to);
    let (_, q) = split_complement(&gb.leading_monomials(alg), alg.nvars());
    (monos, q)
}

/// Refine every degree-d cone through the family
/// C(w,y,h) = (w, {}, h) + sum over x_i in y of (w*x_i, y ∩ {x_j : j >= i}, h),
/// raising a d-standard decomposition to d'-standard.
pub fn shift_standard(dec: &ConeDecomposition, target: usize) -> Result<ConeDecomposition> {
    let mut cur = dec.clone();
    loop {
        let d = cur.d_standard().ok_or(Error::NotStandard)?;
        if cur.plus_cones().next().is_none() {
            return Ok(cur);
        }
        if target < d {
            return Err(Error::ShiftBelowStandard { have: d, requested: target });
        }
        if d >= target {
            return Ok(cur);
        }
        let mut next: Vec<Cone> = Vec::new();
        for cone in &cur.cones {
            if cone.vars.is_empty() || cone.degree() != d {
                next.push(cone.clone());
                continue;
            }
            next.push(Cone { apex: cone.apex.clone(), vars: VarSet::empty(), factor: cone.factor.clone() });
            for i in cone.vars.iter() {
                let vars = VarSet::from_indices(
                    &cone.vars.iter().filter(|&j| j >= i).collect::<Vec<_>>(),
                    dec.nvars,
                )
                .unwrap();
                next.push(Cone {
                    apex: cone.apex.add(&MultiIndex::unit(dec.nvars, i)),
                    vars,
                    factor: cone.factor.clone(),
                });
            }
        }
        cur = ConeDecomposition { nvars: dec.nvars, cones: next };
    }
}

/// Which cone to split when several positive-dimension cones share a
/// degree. Both policies satisfy the split lemma's witness requirement;
/// the resulting Macaulay constants agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactifyPolicy {
    /// Split the largest-dimension splittable cone, ties to the larger apex.
    PreferLargeDimension,
    /// Split the smallest-dimension cone, ties to the smaller apex.
    PreferSmallDimension,
}

/// Macaulay constants b_0 >= b_1 >= ... >= b_{N+1} = d_D of a d-standard
/// decomposition: b_i = max(d_D, 1 + deg D_i) over the subfamily D_i of
/// cones with dimension >= i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayConstants {
    pub b: Vec<usize>,
}

impl MacaulayConstants {
    pub fn b0(&self) -> usize {
        self.b[0]
    }
}

pub fn macaulay_constants(dec: &ConeDecomposition) -> Result<MacaulayConstants> {
    let d_std = dec.d_standard().ok_or(Error::NotStandard)?;
    let n = dec.nvars;
    let mut b = Vec::with_capacity(n + 2);
    for i in 0..=n + 1 {
        let deg_i = dec.cones.iter().filter(|c| c.dimension() >= i).map(|c| c.degree()).max();
        b.push(deg_i.map_or(d_std, |d| d_std.max(d + 1)));
    }
    debug_assert!(b.windows(2).all(|w| w[0] >= w[1]));
    debug_assert_eq!(b[n + 1], d_std);
    Ok(MacaulayConstants { b })
}

/// Split same-degree cones until at most one positive-dimension cone
/// remains per degree. Preserves the decomposed space and d-standardness;
/// the resulting b_0 is at least 1 + deg of the input.
pub fn make_exact(
    dec: &ConeDecomposition,
    policy: ExactifyPolicy,
) -> Result<(ConeDecomposition, MacaulayConstants)> {
    if dec.d_standard().is_none() {
        return Err(Error::NotStandard);
    }
    let mut cones = dec.cones.clone();
    loop {
        // Lowest degree carrying at least two positive-dimension cones.
        let mut by_degree: Vec<(usize, usize)> = cones
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.vars.is_empty())
            .map(|(k, c)| (c.degree(), k))
            .collect();
        by_degree.sort();
        let mut split_at: Option<usize> = None;
        for w in by_degree.windows(2) {
            if w[0].0 == w[1].0 {
                split_at = Some(w[0].0);
                break;
            }
        }
        let Some(delta) = split_at else { break };
        let at: Vec<usize> = by_degree
            .iter()
            .filter(|(deg, _)| *deg == delta)
            .map(|&(_, k)| k)
            .collect();
        let max_dim = at.iter().map(|&k| cones[k].dimension()).max().unwrap();
        let max_count = at.iter().filter(|&&k| cones[k].dimension() == max_dim).count();
        // Splittable: some other cone at this degree has dimension >= ours.
        let splittable: Vec<usize> = at
            .iter()
            .copied()
            .filter(|&k| cones[k].dimension() < max_dim || max_count >= 2)
            .collect();
        let chosen = match policy {
            ExactifyPolicy::PreferLargeDimension => splittable
                .iter()
                .copied()
                .max_by_key(|&k| (cones[k].dimension(), cones[k].apex.clone()))
                .unwrap(),
            ExactifyPolicy::PreferSmallDimension => splittable
                .iter()
                .copied()
                .min_by_key(|&k| (cones[k].dimension(), cones[k].apex.clone()))
                .unwrap(),
        };
        let cone = cones[chosen].clone();
        let i = cone.vars.iter().next().expect("splittable cones have nonempty y");
        cones[chosen] =
            Cone { apex: cone.apex.clone(), vars: cone.vars.remove(i), factor: cone.factor.clone() };
        cones.push(Cone {
            apex: cone.apex.add(&MultiIndex::unit(dec.nvars, i)),
            vars: cone.vars,
            factor: cone.factor,
        });
    }
    let out = ConeDecomposition { nvars: dec.nvars, cones };
    let constants = macaulay_constants(&out)?;
    debug_assert!(out.is_exact());
    Ok((out, constants))
}

/// Hilbert data of the decomposed space: the table by per-cone counting,
/// the polynomial from the positive-dimension cones, and the regularity.
/// The table extends to at least one entry past deg(D), where table and
/// polynomial provably agree.
pub fn hilbert_from_decomposition(dec: &ConeDecomposition, table_len: usize) -> HilbertData {
    let needed = dec.degree().map_or(2, |d| d + 2);
    let len = table_len.max(needed);
    let mut table = vec![BigInt::zero(); len];
    for c in &dec.cones {
        for (d, slot) in table.iter_mut().enumerate() {
            *slot += c.hilbert_value(d);
        }
    }
    let mut poly = PolyQ::zero();
    for c in dec.plus_cones() {
        poly = poly.add(&c.hilbert_poly());
    }
    let regularity = regularity_from(&table, &poly);
    HilbertData { table, poly, regularity }
}

/// The closed form of the Hilbert polynomial of an exact decomposition in
/// terms of its Macaulay constants:
/// binom(T - b_{N+1} + N, N) - 1 - sum_i binom(T - b_i + i - 1, i).
pub fn macaulay_hilbert_poly(constants: &MacaulayConstants, nvars: usize) -> PolyQ {
    let b = &constants.b;
    let mut p = binom_poly(nvars as i64 - b[nvars + 1] as i64, nvars);
    p = p.sub(&PolyQ::one());
    for i in 1..=nvars {
        p = p.sub(&binom_poly(i as i64 - 1 - b[i] as i64, i));
    }
    p
}

/// A d-standard cone decomposition of the homogeneous left ideal
/// (f_1, ..., f_n), d the maximum generator degree: one full cone carrying
/// a maximal-degree generator, plus shifted nf-space decompositions of the
/// successive colon ideals applied to the remaining generators.
pub fn decompose_homogeneous_ideal(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
) -> Result<ConeDecomposition> {
    let (lead, rest) = decompose_homogeneous_ideal_parts(alg, gens)?;
    let mut cones = vec![lead];
    cones.extend(rest.cones);
    Ok(ConeDecomposition { nvars: alg.nvars(), cones })
}

/// The decomposition split as (leading cone, rest): the leading cone
/// (1, x, f_1) spans the principal ideal of a maximal-degree generator,
/// and `rest` is by itself a d-standard decomposition of a complement M
/// with I = (f_1) + M direct.
pub fn decompose_homogeneous_ideal_parts(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
) -> Result<(Cone, ConeDecomposition)> {
    if !alg.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if gens.iter().any(|f| f.is_zero()) || gens.is_empty() {
        return Err(Error::ZeroInput);
    }
    if gens.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    // The leading cone must carry a generator of maximal degree for the
    // union to be d-standard; sort descending (stable).
    let mut sorted: Vec<Polynomial> = gens.to_vec();
    sorted.sort_by_key(|f| core::cmp::Reverse(f.degree().unwrap()));
    let d = sorted[0].degree().unwrap();
    let nvars = alg.nvars();
    let lead = Cone::with_factor(MultiIndex::zero(nvars), VarSet::full(nvars), sorted[0].clone());
    let mut cones = Vec::new();
    for i in 1..sorted.len() {
        let colon = colon_ideal(alg, &sorted[..i], &sorted[i])?;
        if colon.contains_unit(alg) {
            // f_i already lies in the ideal of its predecessors.
            continue;
        }
        let (_, q) = split_complement(&colon.leading_monomials(alg), nvars);
        let with_factor = ConeDecomposition {
            nvars,
            cones: q
                .cones
                .into_iter()
                .map(|c| Cone { apex: c.apex, vars: c.vars, factor: Some(sorted[i].clone()) })
                .collect(),
        };
        let shifted = shift_standard(&with_factor, d)?;
        cones.extend(shifted.cones);
    }
    Ok((lead, ConeDecomposition { nvars, cones }))
}
