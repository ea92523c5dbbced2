//! Behavioral soundness of colon ideals: members of (I : f) multiply
//! into I, and elements irreducible by the colon basis do not.

use solvable_core::algebra::{preset_commutative, preset_weyl, SolvableAlgebra};
use solvable_core::groebner::{buchberger, normal_form, reduce_basis};
use solvable_core::monomial::MultiIndex;
use solvable_core::ordering::MonomialOrdering;
use solvable_core::poly::Polynomial;
use solvable_core::syzygy::colon_ideal;

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn random_combination(
    alg: &SolvableAlgebra,
    rng: &mut XorShift,
    basis: &[Polynomial],
) -> Polynomial {
    let mut acc = Polynomial::zero();
    for g in basis {
        let mut mono = MultiIndex::zero(alg.nvars());
        let var = (rng.next() % alg.nvars() as u64) as usize;
        mono.0[var] = (rng.next() % 3) as u32;
        let coeff = solvable_core::coeff::FieldSpec::Rational
            .from_integer((rng.next() % 7) as i64 - 3);
        acc = acc.add(&alg.mul(&Polynomial::monomial(mono, coeff), g));
    }
    acc
}

fn check_colon(alg: &SolvableAlgebra, ideal: &[Polynomial], f: &Polynomial, samples: usize) {
    let colon = colon_ideal(alg, ideal, f).unwrap();
    let ideal_gb = reduce_basis(alg, &buchberger(alg, ideal, false));
    let mut rng = XorShift(0xC010_11);
    let mut positives = 0;
    for _ in 0..samples {
        // members of the colon ideal multiply into I
        let j = random_combination(alg, &mut rng, &colon.elements);
        if j.is_zero() {
            continue;
        }
        let jf = alg.mul(&j, f);
        assert!(
            normal_form(alg, &ideal_gb.elements, &jf).remainder.is_zero(),
            "colon member leaves the ideal"
        );
        positives += 1;
    }
    assert!(positives >= samples / 2);
    // irreducible-by-colon elements stay outside
    let mut negatives = 0;
    for _ in 0..samples {
        let mut candidate = Polynomial::zero();
        for _ in 0..2 {
            let exp =
                MultiIndex((0..alg.nvars()).map(|_| (rng.next() % 3) as u32).collect());
            let coeff = solvable_core::coeff::FieldSpec::Rational
                .from_integer((rng.next() % 7) as i64 - 3);
            candidate.add_term(&exp, &coeff);
        }
        let r = normal_form(alg, &colon.elements, &candidate).remainder;
        if r.is_zero() {
            continue;
        }
        let rf = alg.mul(&r, f);
        assert!(
            !normal_form(alg, &ideal_gb.elements, &rf).remainder.is_zero(),
            "irreducible element {r:?} multiplies into the ideal"
        );
        negatives += 1;
    }
    assert!(negatives >= 1, "no negative samples were exercised");
}

#[test]
fn weyl_colon_behaves_like_a_colon_ideal() {
    let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
    check_colon(&a1, &[a1.var(1)], &a1.var(0), 100);
}

#[test]
fn commutative_colon_behaves_like_a_colon_ideal() {
    let kxy = preset_commutative(2, MonomialOrdering::DegLex);
    // ((x^2, xy) : y) = (x)
    let ideal = [
        kxy.mono(MultiIndex(vec![2, 0])),
        kxy.mono(MultiIndex(vec![1, 1])),
    ];
    let colon = colon_ideal(&kxy, &ideal, &kxy.var(1)).unwrap();
    assert_eq!(colon.elements, vec![kxy.var(0)]);
    check_colon(&kxy, &ideal, &kxy.var(1), 100);
}
