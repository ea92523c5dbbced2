//! Left reduction, S-polynomials, Buchberger's algorithm, reduced Gröbner
//! bases, ideal membership, and Gröbner bases via homogenization.
//!
//! Reduction strategy: always reduce the largest reducible monomial of f,
//! choosing the basis element with the smallest leading monomial (ties go
//! to the lowest index). Pair selection: smallest lcm degree first, then
//! the ordering on the lcm, then the index pair. These choices make every
//! output deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::SolvableAlgebra;
use crate::constructions::{dehomogenize_poly, homogenize_poly, rees};
use crate::error::{Error, Result};
use crate::monomial::{lcm, minimal_generators, MultiIndex};
use crate::poly::Polynomial;

/// The outcome of reducing f by a basis G: an identity
/// f = sum_k cofactors[k] * G[k] + remainder with
/// lm(cofactors[k] * G[k]) <= lm(f) for every k.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Reduce f by G until no monomial of the remainder is divisible by any
/// leading monomial of G. Always terminates; if G is a Gröbner basis the
/// remainder is the unique G-normal form of f.
pub fn normal_form(alg: &SolvableAlgebra, basis: &[Polynomial], f: &Polynomial) -> ReductionCertificate {
    let ord = alg.ordering();
    let lms: Vec<Option<&MultiIndex>> = basis.iter().map(|g| alg.lm(g)).collect();
    let mut cofactors = vec![Polynomial::zero(); basis.len()];
    let mut rem = f.clone();
    'outer: loop {
        for (alpha, c_alpha) in rem.terms_desc(ord) {
            let mut choice: Option<usize> = None;
            for (k, lm) in lms.iter().enumerate() {
                let Some(lm) = lm else { continue };
                if !lm.divides(alpha) {
                    continue;
                }
                match choice {
                    None => choice = Some(k),
                    Some(best) => {
                        let best_lm = lms[best].unwrap();
                        if ord.cmp_slices(&lm.0, &best_lm.0) == Ordering::Less {
                            choice = Some(k);
                        }
                    }
                }
            }
            if let Some(k) = choice {
                let g = &basis[k];
                let beta = alpha.checked_sub(lms[k].unwrap()).unwrap();
                let alpha = alpha.clone();
                let c_alpha = c_alpha.clone();
                // u = x^beta g has leading monomial alpha.
                let u = alg.mul(&alg.mono(beta.clone()), g);
                debug_assert_eq!(alg.lm(&u), Some(&alpha));
                let c = c_alpha.div(alg.lc(&u).unwrap());
                rem = rem.sub(&u.scale(&c));
                debug_assert!(rem.coeff(&alpha).is_none());
                cofactors[k].add_term(&beta, &c);
                continue 'outer;
            }
        }
        break;
    }
    ReductionCertificate { cofactors, remainder: rem }
}

/// S(f, g) = d lc(g) x^a f - c lc(f) x^b g, where x^a lm(f) = x^b lm(g)
/// = lcm(lm f, lm g) and c = lc(x^a f), d = lc(x^b g). The leading terms
/// at the lcm cancel exactly.
pub fn s_polynomial(alg: &SolvableAlgebra, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (s, _, _) = s_polynomial_parts(alg, f, g)?;
    Ok(s)
}

/// S-polynomial together with the two multiplier terms
/// (d lc(g) x^a, c lc(f) x^b), so that S = first . f - second . g.
pub(crate) fn s_polynomial_parts(
    alg: &SolvableAlgebra,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<(Polynomial, Polynomial, Polynomial)> {
    let lmf = alg.lm(f).ok_or(Error::ZeroInput)?;
    let lmg = alg.lm(g).ok_or(Error::ZeroInput)?;
    let gamma = lcm(lmf, lmg)?;
    let a = gamma.checked_sub(lmf).unwrap();
    let b = gamma.checked_sub(lmg).unwrap();
    let uf = alg.mul(&alg.mono(a.clone()), f);
    let ug = alg.mul(&alg.mono(b.clone()), g);
    let c = alg.lc(&uf).unwrap().clone();
    let d = alg.lc(&ug).unwrap().clone();
    let mf = Polynomial::monomial(a, d.mul(alg.lc(g).unwrap()));
    let mg = Polynomial::monomial(b, c.mul(alg.lc(f).unwrap()));
    let s = uf.scale(&d.mul(alg.lc(g).unwrap())).sub(&ug.scale(&c.mul(alg.lc(f).unwrap())));
    Ok((s, mf, mg))
}

/// Cofactor rows expressing each basis element in terms of the original
/// generator list: elements[k] = sum_i rows[k][i] * input[i].
#[derive(Debug, Clone, PartialEq)]
pub struct GbCertificates {
    pub input: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
}

/// A Gröbner basis, elements sorted descending by leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
    pub certificates: Option<GbCertificates>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self, alg: &SolvableAlgebra) -> Vec<MultiIndex> {
        self.elements.iter().filter_map(|g| alg.lm(g).cloned()).collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.elements.iter().filter_map(|g| g.degree()).max()
    }

    /// True iff some element is a nonzero constant (the ideal is all of R).
    pub fn contains_unit(&self, alg: &SolvableAlgebra) -> bool {
        self.elements.iter().any(|g| alg.lm(g).is_some_and(|m| m.is_zero()))
    }
}

/// Buchberger's algorithm. Zero generators and duplicates are dropped
/// (certificate columns still cover the full input list). With
/// `with_certificates`, every basis element carries a cofactor row over
/// the input generators.
pub fn buchberger(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    with_certificates: bool,
) -> GroebnerBasis {
    let ncols = gens.len();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() || basis.contains(g) {
            continue;
        }
        basis.push(g.clone());
        if with_certificates {
            let mut row = vec![Polynomial::zero(); ncols];
            row[i] = alg.one();
            rows.push(row);
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }

    while let Some(pos) = select_pair(alg, &basis, &pairs) {
        let (i, j) = pairs.swap_remove(pos);
        let (s, mf, mg) = s_polynomial_parts(alg, &basis[i], &basis[j])
            .expect("basis elements are nonzero");
        let cert = normal_form(alg, &basis, &s);
        if cert.remainder.is_zero() {
            continue;
        }
        let lc = alg.lc(&cert.remainder).unwrap().clone();
        let new_elem = cert.remainder.scale(&lc.inv());
        if with_certificates {
            // r = mf*basis[i] - mg*basis[j] - sum_k cofactor_k*basis[k],
            // then normalized to be monic.
            let mut row = vec![Polynomial::zero(); ncols];
            accumulate_row(alg, &mut row, &mf, &rows[i]);
            accumulate_row(alg, &mut row, &mg.neg(), &rows[j]);
            for (k, p) in cert.cofactors.iter().enumerate() {
                if !p.is_zero() {
                    accumulate_row(alg, &mut row, &p.neg(), &rows[k]);
                }
            }
            let inv = Polynomial::constant(alg.nvars(), lc.inv());
            for entry in &mut row {
                *entry = alg.mul(&inv, entry);
            }
            rows.push(row);
        }
        let new_index = basis.len();
        basis.push(new_elem);
        for k in 0..new_index {
            pairs.push((k, new_index));
        }
    }

    let certificates =
        with_certificates.then(|| GbCertificates { input: gens.to_vec(), rows: rows.clone() });
    let mut gb = GroebnerBasis { elements: basis, reduced: false, certificates };
    sort_basis(alg, &mut gb);
    gb
}

fn accumulate_row(
    alg: &SolvableAlgebra,
    row: &mut [Polynomial],
    multiplier: &Polynomial,
    source: &[Polynomial],
) {
    for (dst, src) in row.iter_mut().zip(source) {
        if !src.is_zero() {
            *dst = dst.add(&alg.mul(multiplier, src));
        }
    }
}

/// Normal selection: smallest lcm degree, then the ordering on the lcm,
/// then the index pair.
fn select_pair(alg: &SolvableAlgebra, basis: &[Polynomial], pairs: &[(usize, usize)]) -> Option<usize> {
    let ord = alg.ordering();
    let key = |&(i, j): &(usize, usize)| -> (usize, MultiIndex, usize, usize) {
        let li = alg.lm(&basis[i]).unwrap();
        let lj = alg.lm(&basis[j]).unwrap();
        let l = lcm(li, lj).unwrap();
        (l.degree(), l, i, j)
    };
    let mut best: Option<(usize, (usize, MultiIndex, usize, usize))> = None;
    for (pos, pr) in pairs.iter().enumerate() {
        let k = key(pr);
        let better = match &best {
            None => true,
            Some((_, bk)) => {
                k.0.cmp(&bk.0)
                    .then_with(|| ord.cmp_slices(&k.1 .0, &bk.1 .0))
                    .then_with(|| (k.2, k.3).cmp(&(bk.2, bk.3)))
                    == Ordering::Less
            }
        };
        if better {
            best = Some((pos, k));
        }
    }
    best.map(|(pos, _)| pos)
}

fn sort_basis(alg: &SolvableAlgebra, gb: &mut GroebnerBasis) {
    let mut order: Vec<usize> = (0..gb.elements.len()).collect();
    order.sort_by(|&a, &b| gb.elements[b].cmp_by_lm(&gb.elements[a], alg.ordering()));
    gb.elements = order.iter().map(|&k| gb.elements[k].clone()).collect();
    if let Some(certs) = &mut gb.certificates {
        certs.rows = order.iter().map(|&k| certs.rows[k].clone()).collect();
    }
}

/// The unique reduced Gröbner basis of the ideal of `gb`: minimal leading
/// monomials, monic elements, every element irreducible by the others.
/// Canonical: independent of the presentation of the input basis.
pub fn reduce_basis(alg: &SolvableAlgebra, gb: &GroebnerBasis) -> GroebnerBasis {
    let ord = alg.ordering();
    // Keep one element per divisibility-minimal leading monomial.
    let mut idx: Vec<usize> = (0..gb.elements.len()).filter(|&k| !gb.elements[k].is_zero()).collect();
    idx.sort_by(|&a, &b| {
        gb.elements[a]
            .cmp_by_lm(&gb.elements[b], ord)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = Vec::new();
    for k in idx {
        let lm = alg.lm(&gb.elements[k]).unwrap();
        if !kept.iter().any(|&p| alg.lm(&gb.elements[p]).unwrap().divides(lm)) {
            kept.push(k);
        }
    }
    let minimal: Vec<Polynomial> = kept.iter().map(|&k| gb.elements[k].clone()).collect();

    let mut elements = Vec::with_capacity(minimal.len());
    let mut rows = Vec::new();
    for (pos, &k) in kept.iter().enumerate() {
        let g = &minimal[pos];
        let lc = alg.lc(g).unwrap().clone();
        let lm = alg.lm(g).unwrap().clone();
        let monic = g.scale(&lc.inv());
        let tail = monic.sub(&alg.mono(lm.clone()));
        // Tail monomials are below lm(g), so reducing by the full minimal
        // set never uses g itself.
        let cert = normal_form(alg, &minimal, &tail);
        let reduced = alg.mono(lm).add(&cert.remainder);
        if let Some(certs) = &gb.certificates {
            let mut row = vec![Polynomial::zero(); certs.input.len()];
            let inv = Polynomial::constant(alg.nvars(), lc.inv());
            let scaled: Vec<Polynomial> =
                certs.rows[k].iter().map(|p| alg.mul(&inv, p)).collect();
            for (dst, src) in row.iter_mut().zip(&scaled) {
                *dst = dst.add(src);
            }
            for (m, p) in cert.cofactors.iter().enumerate() {
                if !p.is_zero() {
                    accumulate_row(alg, &mut row, &p.neg(), &certs.rows[kept[m]]);
                }
            }
            rows.push(row);
        }
        elements.push(reduced);
    }
    let certificates = gb
        .certificates
        .as_ref()
        .map(|c| GbCertificates { input: c.input.clone(), rows });
    let mut out = GroebnerBasis { elements, reduced: true, certificates };
    sort_basis(alg, &mut out);
    out
}

/// Buchberger's criterion with a witness: `Err((i, j, w))` gives an
/// offending pair and the nonzero normal form of its S-polynomial.
pub fn is_groebner(
    alg: &SolvableAlgebra,
    set: &[Polynomial],
) -> core::result::Result<(), (usize, usize, Polynomial)> {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            let s = s_polynomial(alg, &set[i], &set[j]).expect("nonzero inputs");
            let r = normal_form(alg, set, &s).remainder;
            if !r.is_zero() {
                return Err((i, j, r));
            }
        }
    }
    Ok(())
}

/// Outcome of an ideal membership test.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// f = sum_i cofactors[i] * gens[i].
    Member { cofactors: Vec<Polynomial> },
    /// The nonzero normal form of f, irreducible by a Gröbner basis of
    /// the ideal.
    NotMember { witness: Polynomial },
}

/// Decide membership of f in the left ideal generated by `gens`, with an
/// explicit cofactor certificate on success. Quadric algebras go through
/// the Rees algebra (which also keeps the certificate degrees within the
/// doubly-exponential bounds); other algebras use a direct basis.
pub fn membership(alg: &SolvableAlgebra, gens: &[Polynomial], f: &Polynomial) -> Result<Membership> {
    let gb = if alg.is_quadric() {
        groebner_via_homogenization(alg, gens, true)?
    } else {
        buchberger(alg, gens, true)
    };
    Ok(membership_with_basis(alg, &gb, f))
}

/// Membership against an already-computed basis carrying certificates.
pub fn membership_with_basis(alg: &SolvableAlgebra, gb: &GroebnerBasis, f: &Polynomial) -> Membership {
    let cert = normal_form(alg, &gb.elements, f);
    if !cert.remainder.is_zero() {
        return Membership::NotMember { witness: cert.remainder };
    }
    let certs = gb.certificates.as_ref().expect("membership requires certificates");
    let mut out = vec![Polynomial::zero(); certs.input.len()];
    for (k, p) in cert.cofactors.iter().enumerate() {
        if !p.is_zero() {
            accumulate_row(alg, &mut out, p, &certs.rows[k]);
        }
    }
    Membership::Member { cofactors: out }
}

/// All monomials of degree <= `up_to` outside the leading-monomial ideal
/// of the basis, sorted ascending under the algebra ordering. Together
/// with the ideal they span: R = I + span(these), a direct sum.
pub fn irreducible_monomials(
    alg: &SolvableAlgebra,
    gb: &GroebnerBasis,
    up_to: usize,
) -> Vec<MultiIndex> {
    let lms = minimal_generators(&gb.leading_monomials(alg));
    let mut out: Vec<MultiIndex> = crate::weights::indices_up_to(alg.nvars(), up_to)
        .into_iter()
        .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
        .collect();
    out.sort_by(|a, b| alg.ordering().cmp_slices(&a.0, &b.0));
    out
}

/// Hilbert function of R/I at degree d for a homogeneous ideal given by a
/// Gröbner basis: the count of degree-d monomials outside lm(I).
pub fn hilbert_function_quotient(
    alg: &SolvableAlgebra,
    gb: &GroebnerBasis,
    d: usize,
) -> Result<usize> {
    if !alg.is_homogeneous() || gb.elements.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let lms = minimal_generators(&gb.leading_monomials(alg));
    let count = degree_slice(alg.nvars(), d)
        .into_iter()
        .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
        .count();
    Ok(count)
}

/// All multi-indices of total degree exactly d.
pub fn degree_slice(nvars: usize, d: usize) -> Vec<MultiIndex> {
    crate::weights::indices_up_to(nvars, d)
        .into_iter()
        .filter(|m| m.degree() == d)
        .collect()
}

/// Homogenize the generators into the Rees algebra, take the reduced
/// Gröbner basis there, and dehomogenize. The result is a Gröbner basis
/// of the original ideal (possibly non-reduced); its degrees obey the
/// doubly-exponential bound for the homogeneous case one variable up.
pub fn groebner_via_homogenization(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    with_certificates: bool,
) -> Result<GroebnerBasis> {
    Ok(homogenization_route(alg, gens, with_certificates)?.0)
}

/// Like [`groebner_via_homogenization`], additionally expressing each
/// input generator over the output basis: gens[i] = sum_k rows[i][k] *
/// gb.elements[k]. Both certificate families descend from homogeneous
/// identities, so the forward cofactors stay within the basis degree and
/// the reverse ones within the generator degree.
pub fn groebner_via_homogenization_full(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
) -> Result<(GroebnerBasis, Vec<Vec<Polynomial>>)> {
    let (gb, b) = homogenization_route(alg, gens, true)?;
    Ok((gb, b.expect("requested reverse certificates")))
}

fn homogenization_route(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    with_certificates: bool,
) -> Result<(GroebnerBasis, Option<Vec<Vec<Polynomial>>>)> {
    let star = rees(alg)?;
    let hgens: Vec<Polynomial> = gens.iter().map(homogenize_poly).collect();
    let gb = buchberger(&star, &hgens, with_certificates);
    let red = reduce_basis(&star, &gb);
    let reverse = with_certificates.then(|| {
        hgens
            .iter()
            .map(|h| {
                let cert = normal_form(&star, &red.elements, h);
                debug_assert!(cert.remainder.is_zero());
                cert.cofactors.iter().map(dehomogenize_poly).collect()
            })
            .collect()
    });
    let elements: Vec<Polynomial> = red.elements.iter().map(dehomogenize_poly).collect();
    let certificates = red.certificates.as_ref().map(|c| GbCertificates {
        input: gens.to_vec(),
        rows: c
            .rows
            .iter()
            .map(|row| row.iter().map(dehomogenize_poly).collect())
            .collect(),
    });
    let mut out = GroebnerBasis { elements, reduced: false, certificates };
    // Sorting is shared between the elements, their certificate rows, and
    // the columns of the reverse rows.
    let ord = alg.ordering();
    let mut order: Vec<usize> = (0..out.elements.len()).collect();
    order.sort_by(|&a, &b| out.elements[b].cmp_by_lm(&out.elements[a], ord));
    out.elements = order.iter().map(|&k| out.elements[k].clone()).collect();
    if let Some(certs) = &mut out.certificates {
        certs.rows = order.iter().map(|&k| certs.rows[k].clone()).collect();
    }
    let reverse = reverse.map(|rows: Vec<Vec<Polynomial>>| {
        rows.into_iter()
            .map(|row| order.iter().map(|&k| row[k].clone()).collect())
            .collect()
    });
    Ok((out, reverse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset_commutative, preset_weyl};
    use crate::coeff::FieldSpec;
    use crate::monomial::MultiIndex;
    use crate::ordering::MonomialOrdering;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    /// Check a certificate against its defining identity.
    fn check_certificate(
        alg: &SolvableAlgebra,
        basis: &[Polynomial],
        f: &Polynomial,
        cert: &ReductionCertificate,
    ) {
        let mut acc = cert.remainder.clone();
        for (p, g) in cert.cofactors.iter().zip(basis) {
            acc = acc.add(&alg.mul(p, g));
        }
        assert_eq!(&acc, f, "certificate identity violated");
        if let Some(lmf) = alg.lm(f) {
            for (p, g) in cert.cofactors.iter().zip(basis) {
                if p.is_zero() || g.is_zero() {
                    continue;
                }
                let prod = alg.mul(p, g);
                if let Some(lmp) = alg.lm(&prod) {
                    assert_ne!(
                        alg.ordering().cmp_slices(&lmp.0, &lmf.0),
                        core::cmp::Ordering::Greater,
                        "cofactor product exceeds lm(f)"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_form_single_step() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        // reduce x d + 1 by {d}: remainder 1, cofactor x
        let f = a1.mono(mi(&[1, 1])).add(&a1.one());
        let basis = [a1.var(1)];
        let cert = normal_form(&a1, &basis, &f);
        assert_eq!(cert.remainder, a1.one());
        assert_eq!(cert.cofactors[0], a1.var(0));
        check_certificate(&a1, &basis, &f, &cert);
    }

    #[test]
    fn normal_form_irreducible_and_zero() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        // G = {x^2, xd - 1}: x is irreducible
        let basis = [
            a1.mono(mi(&[2, 0])),
            a1.mono(mi(&[1, 1])).sub(&a1.one()),
        ];
        let x = a1.var(0);
        let cert = normal_form(&a1, &basis, &x);
        assert_eq!(cert.remainder, x);
        let zero = normal_form(&a1, &basis, &Polynomial::zero());
        assert!(zero.remainder.is_zero());
        assert!(zero.cofactors.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn s_polynomial_commutative_example() {
        // K[x,y] lex: S(xy, x - y^2) = y^3
        let alg = preset_commutative(2, MonomialOrdering::Lex);
        let f = alg.mono(mi(&[1, 1]));
        let g = alg.var(0).sub(&alg.mono(mi(&[0, 2])));
        let s = s_polynomial(&alg, &f, &g).unwrap();
        assert_eq!(s, alg.mono(mi(&[0, 3])));
        assert!(s_polynomial(&alg, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_weyl() {
        // A_1: S(x, d) = (d.x) - (x.d) = 1
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let s = s_polynomial(&a1, &a1.var(0), &a1.var(1)).unwrap();
        assert_eq!(s, a1.one());
    }

    #[test]
    fn buchberger_weyl2_example() {
        // A_2 deglex, gens {x1 d1, x2 d1^2 - d1} has reduced basis {d1}
        let a2 = preset_weyl(2, MonomialOrdering::DegLex).unwrap();
        let f1 = a2.mono(mi(&[1, 0, 1, 0]));
        let f2 = a2.mono(mi(&[0, 1, 2, 0])).sub(&a2.mono(mi(&[0, 0, 1, 0])));
        let gb = buchberger(&a2, &[f1.clone(), f2.clone()], true);
        let red = reduce_basis(&a2, &gb);
        assert_eq!(red.elements, alloc::vec![a2.var(2)]);
        // the certificate for d1 re-multiplies exactly
        let certs = red.certificates.as_ref().unwrap();
        let mut acc = Polynomial::zero();
        for (p, g) in certs.rows[0].iter().zip(&certs.input) {
            acc = acc.add(&a2.mul(p, g));
        }
        assert_eq!(acc, a2.var(2));
    }

    #[test]
    fn buchberger_weyl_unit_ideal() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let gb = buchberger(&a1, &[a1.var(1), a1.var(0)], false);
        let red = reduce_basis(&a1, &gb);
        assert_eq!(red.elements, alloc::vec![a1.one()]);
    }

    #[test]
    fn buchberger_lex_adds_y_cubed() {
        // K[x,y] lex, gens {xy, x - y^2, x^2}: not a basis, y^3 appears
        let alg = preset_commutative(2, MonomialOrdering::Lex);
        let gens = [
            alg.mono(mi(&[1, 1])),
            alg.var(0).sub(&alg.mono(mi(&[0, 2]))),
            alg.mono(mi(&[2, 0])),
        ];
        match is_groebner(&alg, &gens) {
            Err((_, _, w)) => assert_eq!(w, alg.mono(mi(&[0, 3]))),
            Ok(()) => panic!("expected a failing pair"),
        }
        let gb = buchberger(&alg, &gens, false);
        assert!(gb.elements.iter().any(|g| alg.lm(g) == Some(&mi(&[0, 3]))));
        assert!(is_groebner(&alg, &gb.elements).is_ok());
    }

    #[test]
    fn reduce_basis_examples() {
        let kx = preset_commutative(1, MonomialOrdering::Lex);
        // {x, x^2} reduces to {x}
        let gb = GroebnerBasis {
            elements: alloc::vec![kx.var(0), kx.mono(mi(&[2]))],
            reduced: false,
            certificates: None,
        };
        let red = reduce_basis(&kx, &gb);
        assert_eq!(red.elements, alloc::vec![kx.var(0)]);
        // {c x} normalizes to {x}
        let gb = GroebnerBasis {
            elements: alloc::vec![kx.var(0).scale(&q().from_integer(5))],
            reduced: false,
            certificates: None,
        };
        assert_eq!(reduce_basis(&kx, &gb).elements, alloc::vec![kx.var(0)]);
    }

    #[test]
    fn reduced_gb_canonical_under_permutation_and_scaling() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let f1 = a1.mono(mi(&[0, 2]));
        let f2 = a1.mono(mi(&[1, 1])).sub(&a1.one());
        let g1 = reduce_basis(&a1, &buchberger(&a1, &[f1.clone(), f2.clone()], false));
        let g2 = reduce_basis(
            &a1,
            &buchberger(
                &a1,
                &[f2.scale(&q().from_integer(-7)), f1.scale(&q().parse("2/3").unwrap())],
                false,
            ),
        );
        assert_eq!(g1.elements, g2.elements);
        // {d^2, xd - 1} is already reduced; descending leading monomials
        // put xd - 1 first under deglex.
        assert_eq!(g1.elements, alloc::vec![f2, f1]);
    }

    #[test]
    fn membership_weyl_unit() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let gens = [a1.var(0), a1.var(1)];
        match membership(&a1, &gens, &a1.one()).unwrap() {
            Membership::Member { cofactors } => {
                let mut acc = Polynomial::zero();
                for (p, g) in cofactors.iter().zip(&gens) {
                    acc = acc.add(&a1.mul(p, g));
                }
                assert_eq!(acc, a1.one());
            }
            Membership::NotMember { .. } => panic!("1 is in (x, d)"),
        }
    }

    #[test]
    fn membership_negative_and_trivial() {
        let kx = preset_commutative(1, MonomialOrdering::Lex);
        let gens = [kx.mono(mi(&[2]))];
        match membership(&kx, &gens, &kx.var(0)).unwrap() {
            Membership::NotMember { witness } => assert_eq!(witness, kx.var(0)),
            _ => panic!("x is not in (x^2)"),
        }
        match membership(&kx, &gens, &kx.mono(mi(&[2]))).unwrap() {
            Membership::Member { cofactors } => {
                assert_eq!(cofactors[0], kx.one());
            }
            _ => panic!("f1 is in (f1)"),
        }
    }

    #[test]
    fn irreducible_monomials_weyl_colon_basis() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let g2 = GroebnerBasis {
            elements: alloc::vec![
                a1.mono(mi(&[0, 2])),
                a1.mono(mi(&[1, 1])).sub(&a1.one()),
            ],
            reduced: true,
            certificates: None,
        };
        let basis = irreducible_monomials(&a1, &g2, 3);
        let expected = alloc::vec![
            mi(&[0, 0]),
            mi(&[0, 1]),
            mi(&[1, 0]),
            mi(&[2, 0]),
            mi(&[3, 0]),
        ];
        assert_eq!(basis, expected);
    }

    #[test]
    fn irreducible_monomials_unit_ideal_and_plane() {
        let kxy = preset_commutative(2, MonomialOrdering::DegLex);
        let unit = GroebnerBasis {
            elements: alloc::vec![kxy.one()],
            reduced: true,
            certificates: None,
        };
        assert!(irreducible_monomials(&kxy, &unit, 4).is_empty());
        let gx = GroebnerBasis {
            elements: alloc::vec![kxy.var(0)],
            reduced: true,
            certificates: None,
        };
        assert_eq!(
            irreducible_monomials(&kxy, &gx, 2),
            alloc::vec![mi(&[0, 0]), mi(&[0, 1]), mi(&[0, 2])]
        );
    }

    #[test]
    fn hilbert_quotient_examples() {
        let kxy = preset_commutative(2, MonomialOrdering::DegLex);
        // I = (x, y)
        let gxy = buchberger(&kxy, &[kxy.var(0), kxy.var(1)], false);
        assert_eq!(hilbert_function_quotient(&kxy, &gxy, 0).unwrap(), 1);
        assert_eq!(hilbert_function_quotient(&kxy, &gxy, 3).unwrap(), 0);
        // I = (x)
        let gx = buchberger(&kxy, &[kxy.var(0)], false);
        for d in 0..6 {
            assert_eq!(hilbert_function_quotient(&kxy, &gx, d).unwrap(), 1);
        }
        // ambient count at N=2, d=3 is 4
        assert_eq!(degree_slice(2, 3).len(), 4);
    }

    #[test]
    fn homogenization_route_k_x() {
        // K[x], gens {x^2, x + x^2}: Rees basis {xt, x^2}, dehomogenized
        // {x, x^2}; reduction yields {x}.
        let kx = preset_commutative(1, MonomialOrdering::Lex);
        let gens = [kx.mono(mi(&[2])), kx.var(0).add(&kx.mono(mi(&[2])))];
        let star = rees(&kx).unwrap();
        let hgens: Vec<Polynomial> = gens.iter().map(homogenize_poly).collect();
        let hred = reduce_basis(&star, &buchberger(&star, &hgens, false));
        let hset: Vec<Polynomial> =
            alloc::vec![star.mono(mi(&[1, 1])), star.mono(mi(&[2, 0]))];
        assert_eq!(hred.elements.len(), 2);
        for h in &hset {
            assert!(hred.elements.contains(h), "missing {h:?}");
        }
        let gb = groebner_via_homogenization(&kx, &gens, false).unwrap();
        let mut els = gb.elements.clone();
        els.sort_by(|a, b| a.cmp_by_lm(b, kx.ordering()));
        assert_eq!(els, alloc::vec![kx.var(0), kx.mono(mi(&[2]))]);
        assert!(is_groebner(&kx, &gb.elements).is_ok());
        assert_eq!(reduce_basis(&kx, &gb).elements, alloc::vec![kx.var(0)]);
    }

    #[test]
    fn homogenization_route_weyl() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let gens = [a1.mono(mi(&[1, 1])).add(&a1.one())];
        let gb = groebner_via_homogenization(&a1, &gens, true).unwrap();
        assert!(is_groebner(&a1, &gb.elements).is_ok());
        // certificates re-multiply
        let certs = gb.certificates.as_ref().unwrap();
        for (k, row) in certs.rows.iter().enumerate() {
            let mut acc = Polynomial::zero();
            for (p, g) in row.iter().zip(&certs.input) {
                acc = acc.add(&a1.mul(p, g));
            }
            assert_eq!(acc, gb.elements[k]);
        }
    }

    #[test]
    fn normal_form_uniqueness_modulo_ideal() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let gens = [a1.mono(mi(&[0, 2])), a1.mono(mi(&[1, 1])).sub(&a1.one())];
        let gb = reduce_basis(&a1, &buchberger(&a1, &gens, false));
        let f = a1.mono(mi(&[2, 1])).add(&a1.var(0));
        let shift = a1.mul(&a1.mono(mi(&[1, 0])), &gens[0]);
        let n1 = normal_form(&a1, &gb.elements, &f).remainder;
        let n2 = normal_form(&a1, &gb.elements, &f.add(&shift)).remainder;
        assert_eq!(n1, n2);
    }
}
