//! Generators of left syzygy modules, colon ideals, and direct-sum
//! decompositions of left ideals.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::SolvableAlgebra;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, is_groebner, normal_form, reduce_basis, s_polynomial_parts, GroebnerBasis,
};
use crate::poly::Polynomial;

/// An element of the free left module R^n.
pub type ModuleVector = Vec<Polynomial>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyProvenance {
    /// The s_ij of a Gröbner basis.
    GbDirect,
    /// Transformed through certificates onto an arbitrary tuple.
    Transformed,
}

/// A generating set of the left module Syz(f) = { v : sum v_i f_i = 0 }.
#[derive(Debug, Clone, PartialEq)]
pub struct SyzygyGenerators {
    pub tuple: Vec<Polynomial>,
    pub generators: Vec<ModuleVector>,
    pub provenance: SyzygyProvenance,
}

impl SyzygyGenerators {
    /// sum_i v_i f_i for one generator; zero for exact syzygies.
    pub fn contract(&self, alg: &SolvableAlgebra, v: &ModuleVector) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (vi, fi) in v.iter().zip(&self.tuple) {
            acc = acc.add(&alg.mul(vi, fi));
        }
        acc
    }
}

/// The syzygies s_ij of a Gröbner basis G = {g_1, ..., g_m}:
/// s_ij = d_ij lc(g_j) x^{a_ij} e_i - c_ij lc(g_i) x^{b_ij} e_j
///      - sum_k p_ijk e_k,
/// with the p_ijk the cofactors of the reduction of S(g_i, g_j) to zero.
/// These generate Syz(g_1, ..., g_m).
pub fn syzygies_of_gb(alg: &SolvableAlgebra, gb: &GroebnerBasis) -> Result<SyzygyGenerators> {
    if let Err((i, j, _)) = is_groebner(alg, &gb.elements) {
        return Err(Error::NotGroebner { i, j });
    }
    let g = &gb.elements;
    let m = g.len();
    let mut generators = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (s, mf, mg) = s_polynomial_parts(alg, &g[i], &g[j])?;
            let cert = normal_form(alg, g, &s);
            debug_assert!(cert.remainder.is_zero(), "S-polynomial of a basis must reduce to zero");
            let mut row: ModuleVector = vec![Polynomial::zero(); m];
            row[i] = row[i].add(&mf);
            row[j] = row[j].sub(&mg);
            for (k, p) in cert.cofactors.iter().enumerate() {
                row[k] = row[k].sub(p);
            }
            if row.iter().any(|p| !p.is_zero()) {
                generators.push(row);
            }
        }
    }
    Ok(SyzygyGenerators { tuple: g.clone(), generators, provenance: SyzygyProvenance::GbDirect })
}

/// Syzygy generators for an arbitrary tuple f: compute a Gröbner basis g
/// with certificates A (g = A f) and B (f = B g); the rows of [M A] and
/// [I - B A] generate Syz(f), where the rows of M generate Syz(g).
/// Zero rows are pruned.
pub fn syzygies_of_tuple(alg: &SolvableAlgebra, tuple: &[Polynomial]) -> Result<SyzygyGenerators> {
    let n = tuple.len();
    // Quadric algebras go through the Rees algebra: both certificate
    // families then descend from homogeneous identities, which keeps the
    // emitted generator degrees within the doubly-exponential bound.
    let (gb, b_rows): (GroebnerBasis, Vec<Vec<Polynomial>>) = if alg.is_quadric() {
        crate::groebner::groebner_via_homogenization_full(alg, tuple)?
    } else {
        let gb = reduce_basis(alg, &buchberger(alg, tuple, true));
        let b = tuple
            .iter()
            .map(|f| {
                let cert = normal_form(alg, &gb.elements, f);
                debug_assert!(cert.remainder.is_zero());
                cert.cofactors
            })
            .collect();
        (gb, b)
    };
    let a_rows = &gb.certificates.as_ref().expect("certificates requested").rows;
    let mut generators: Vec<ModuleVector> = Vec::new();
    // M A
    let m_rows = syzygies_of_gb(alg, &gb)?;
    for row in &m_rows.generators {
        let mut out = vec![Polynomial::zero(); n];
        for (k, r) in row.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (i, a) in a_rows[k].iter().enumerate() {
                if !a.is_zero() {
                    out[i] = out[i].add(&alg.mul(r, a));
                }
            }
        }
        if out.iter().any(|p| !p.is_zero()) {
            generators.push(out);
        }
    }
    // I - B A
    for i in 0..n {
        let mut out = vec![Polynomial::zero(); n];
        out[i] = alg.one();
        for (k, b) in b_rows[i].iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (jj, a) in a_rows[k].iter().enumerate() {
                if !a.is_zero() {
                    out[jj] = out[jj].sub(&alg.mul(b, a));
                }
            }
        }
        if out.iter().any(|p| !p.is_zero()) {
            generators.push(out);
        }
    }
    Ok(SyzygyGenerators {
        tuple: tuple.to_vec(),
        generators,
        provenance: SyzygyProvenance::Transformed,
    })
}

/// The colon ideal (I : f) = { g : g f in I }, computed as the projection
/// of Syz(i_1, ..., i_n, f) onto its last coordinate; returns the reduced
/// Gröbner basis. Note that (I : f) need not contain I here.
pub fn colon_ideal(
    alg: &SolvableAlgebra,
    ideal_gens: &[Polynomial],
    f: &Polynomial,
) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut tuple: Vec<Polynomial> = ideal_gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    tuple.push(f.clone());
    let syz = syzygies_of_tuple(alg, &tuple)?;
    let last: Vec<Polynomial> = syz
        .generators
        .iter()
        .map(|row| row.last().unwrap().clone())
        .filter(|p| !p.is_zero())
        .collect();
    Ok(reduce_basis(alg, &buchberger(alg, &last, false)))
}

/// One summand of the decomposition
/// I = (f_1) + nf_{G_2}(R) f_2 + ... + nf_{G_n}(R) f_n (a direct sum).
#[derive(Debug, Clone, PartialEq)]
pub enum IdealComponent {
    /// The principal left ideal (f_1).
    Principal { generator: Polynomial },
    /// The K-linear space nf_G(R) . factor, with G the reduced basis of
    /// ((f_1, ..., f_{i-1}) : f_i).
    NormalFormSpace { colon_basis: GroebnerBasis, factor: Polynomial },
}

/// Decompose the left ideal (f_1, ..., f_n) as a direct sum of the
/// principal ideal (f_1) and normal-form spaces against successive colon
/// ideals.
pub fn ideal_direct_decomposition(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
) -> Result<Vec<IdealComponent>> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(Error::ZeroInput);
    }
    let mut out = vec![IdealComponent::Principal { generator: gens[0].clone() }];
    for i in 1..gens.len() {
        let colon = colon_ideal(alg, &gens[..i], &gens[i])?;
        out.push(IdealComponent::NormalFormSpace { colon_basis: colon, factor: gens[i].clone() });
    }
    Ok(out)
}
