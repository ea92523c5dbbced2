//! Two-sided Gröbner bases via the enveloping algebra R ⊗ R^op.
//!
//! A two-sided ideal J of R pulls back to the left ideal μ^{-1}(J) of the
//! enveloping algebra, where μ(a ⊗ b) = ab. A left Gröbner basis there
//! maps forward under μ to a two-sided Gröbner basis of J.

use alloc::vec::Vec;

use crate::algebra::SolvableAlgebra;
use crate::constructions::{opposite, tensor};
use crate::error::Result;
use crate::groebner::{
    buchberger, is_groebner, normal_form, reduce_basis, GroebnerBasis,
};
use crate::monomial::MultiIndex;
use crate::poly::Polynomial;

/// The enveloping algebra E = R ⊗ R^op with its embeddings. The E
/// variable tuple is (x_1 ⊗ 1, ..., x_N ⊗ 1, 1 ⊗ x_N, ..., 1 ⊗ x_1);
/// the right block is reversed because the opposite algebra reverses the
/// variable tuple.
#[derive(Debug, Clone)]
pub struct EnvelopingContext {
    pub base: SolvableAlgebra,
    pub env: SolvableAlgebra,
}

impl EnvelopingContext {
    pub fn new(base: &SolvableAlgebra) -> Result<Self> {
        let env = tensor(base, &opposite(base))?;
        Ok(EnvelopingContext { base: base.clone(), env })
    }

    fn n(&self) -> usize {
        self.base.nvars()
    }

    /// a ⊗ 1
    pub fn embed_left(&self, f: &Polynomial) -> Polynomial {
        let n = self.n();
        Polynomial::from_terms(f.terms().map(|(m, c)| {
            let mut v = m.0.clone();
            v.extend(core::iter::repeat_n(0, n));
            (MultiIndex(v), c.clone())
        }))
    }

    /// 1 ⊗ b: the right block carries reversed exponents.
    pub fn embed_right(&self, f: &Polynomial) -> Polynomial {
        let n = self.n();
        Polynomial::from_terms(f.terms().map(|(m, c)| {
            let mut v = alloc::vec![0u32; n];
            v.extend(m.reversed().0);
            (MultiIndex(v), c.clone())
        }))
    }

    /// The multiplication morphism μ: E -> R, μ(x^a ⊗ x^b) = x^a . x^b
    /// computed in the base algebra (the right-block exponents are read
    /// back in base order).
    pub fn mu(&self, h: &Polynomial) -> Polynomial {
        let n = self.n();
        let mut acc = Polynomial::zero();
        for (m, c) in h.terms() {
            let left = MultiIndex(m.0[..n].to_vec());
            let right = MultiIndex(m.0[n..].to_vec()).reversed();
            let prod = self.base.mul_mono(&left, &right);
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    /// Generators of μ^{-1}(J) for the two-sided ideal J = (f_1, ..., f_n):
    /// the f_i ⊗ 1 together with the kernel generators
    /// x_i ⊗ 1 - 1 ⊗ x_i. Degrees stay within max(d, 1).
    pub fn lift_two_sided(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        let n = self.n();
        let mut out: Vec<Polynomial> = gens.iter().map(|f| self.embed_left(f)).collect();
        for i in 0..n {
            let xi = Polynomial::variable(i, n, self.base.field());
            out.push(self.embed_left(&xi).sub(&self.embed_right(&xi)));
        }
        out
    }
}

/// A two-sided basis along with the raw μ-image witnessing the degree
/// bound D(2N, d); the `reduced` field is the reduced left basis of the
/// same ideal (which is the canonical two-sided basis).
#[derive(Debug, Clone)]
pub struct TwoSidedBasis {
    pub raw: Vec<Polynomial>,
    pub reduced: GroebnerBasis,
}

/// Compute a two-sided Gröbner basis of the two-sided ideal generated by
/// `gens`: a left basis of μ^{-1}(J) in the enveloping algebra, mapped
/// forward with μ and then reduced.
pub fn two_sided_groebner(alg: &SolvableAlgebra, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    Ok(two_sided_groebner_with_witness(alg, gens)?.reduced)
}

pub fn two_sided_groebner_with_witness(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
) -> Result<TwoSidedBasis> {
    let ctx = EnvelopingContext::new(alg)?;
    let lifted = ctx.lift_two_sided(gens);
    let env_gb = reduce_basis(&ctx.env, &buchberger(&ctx.env, &lifted, false));
    let raw: Vec<Polynomial> =
        env_gb.elements.iter().map(|h| ctx.mu(h)).filter(|f| !f.is_zero()).collect();
    debug_assert!(is_groebner(alg, &raw).is_ok());
    let reduced = reduce_basis(
        alg,
        &GroebnerBasis { elements: raw.clone(), reduced: false, certificates: None },
    );
    Ok(TwoSidedBasis { raw, reduced })
}

/// G is a two-sided Gröbner basis iff it is a left Gröbner basis and
/// g x_i stays in the left ideal (G) for every g in G and every variable.
pub fn is_two_sided_gb(alg: &SolvableAlgebra, set: &[Polynomial]) -> bool {
    if is_groebner(alg, set).is_err() {
        return false;
    }
    for g in set {
        for i in 0..alg.nvars() {
            let shifted = alg.mul(g, &alg.var(i));
            if !normal_form(alg, set, &shifted).remainder.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset_commutative, preset_nonabelian2, preset_weyl};
    use crate::ordering::MonomialOrdering;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    #[test]
    fn mu_on_monomials() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let ctx = EnvelopingContext::new(&a1).unwrap();
        // μ(x ⊗ d) = x d: E monomial (1,0 | d-block); right block is
        // (d, x) reversed = (x, d) hmm — build via embeddings instead.
        let h = ctx.env.mul(&ctx.embed_left(&a1.var(0)), &ctx.embed_right(&a1.var(1)));
        assert_eq!(ctx.mu(&h), a1.mono(mi(&[1, 1])));
        // μ(1 ⊗ 1) = 1
        assert_eq!(ctx.mu(&ctx.env.one()), a1.one());
        // kernel generators map to zero
        for i in 0..1 {
            let xi = a1.var(i);
            let k = ctx.embed_left(&xi).sub(&ctx.embed_right(&xi));
            assert!(ctx.mu(&k).is_zero());
        }
    }

    #[test]
    fn mu_is_a_bimodule_morphism() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let ctx = EnvelopingContext::new(&a1).unwrap();
        let samples = [
            a1.var(0),
            a1.var(1),
            a1.mono(mi(&[1, 1])).add(&a1.one()),
            a1.mono(mi(&[2, 1])),
            a1.mono(mi(&[0, 2])).sub(&a1.var(0)),
            a1.one(),
        ];
        for a in &samples {
            for h0 in &samples {
                for b in &samples {
                    let h = ctx.env.mul(&ctx.embed_left(h0), &ctx.embed_right(b));
                    // μ((a ⊗ 1) h) = a μ(h)
                    let lhs = ctx.mu(&ctx.env.mul(&ctx.embed_left(a), &h));
                    let rhs = a1.mul(a, &ctx.mu(&h));
                    assert_eq!(lhs, rhs);
                    // μ((1 ⊗ b) h) = μ(h) b
                    let lhs = ctx.mu(&ctx.env.mul(&ctx.embed_right(b), &h));
                    let rhs = a1.mul(&ctx.mu(&h), b);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn lift_counts_and_degrees() {
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let ctx = EnvelopingContext::new(&a1).unwrap();
        let lifted = ctx.lift_two_sided(&[]);
        assert_eq!(lifted.len(), 2);
        let lifted = ctx.lift_two_sided(&[a1.var(0)]);
        assert_eq!(lifted.len(), 3);
        assert!(lifted.iter().all(|f| f.degree() == Some(1)));
    }

    #[test]
    fn two_sided_nonabelian_x1_is_closed() {
        // U(2-dim nonabelian): the two-sided ideal (x_1) has basis {x_1}
        let u = preset_nonabelian2(MonomialOrdering::DegLex);
        let gb = two_sided_groebner(&u, &[u.var(0)]).unwrap();
        assert_eq!(gb.elements, alloc::vec![u.var(0)]);
        assert!(is_two_sided_gb(&u, &gb.elements));
    }

    #[test]
    fn two_sided_weyl_is_simple() {
        // A_1 is simple: the two-sided ideal (x) is everything
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        let gb = two_sided_groebner(&a1, &[a1.var(0)]).unwrap();
        assert_eq!(gb.elements, alloc::vec![a1.one()]);
    }

    #[test]
    fn two_sided_commutative_agrees_with_left() {
        let kxy = preset_commutative(2, MonomialOrdering::DegLex);
        let gens = [kxy.mono(mi(&[1, 1])), kxy.var(0).sub(&kxy.mono(mi(&[0, 2])))];
        let two = two_sided_groebner(&kxy, &gens).unwrap();
        let left = reduce_basis(&kxy, &buchberger(&kxy, &gens, false));
        assert_eq!(two.elements, left.elements);
    }

    #[test]
    fn left_but_not_two_sided() {
        // {x} in A_1: a left basis, but x d lands outside Rx
        let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
        assert!(!is_two_sided_gb(&a1, &[a1.var(0)]));
        assert!(is_two_sided_gb(&a1, &[a1.one()]));
    }
}
