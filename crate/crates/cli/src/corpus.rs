//! Seeded instance-corpus generation: presets and random quadric systems
//! with homogeneous and inhomogeneous generator sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvable_core::algebra::{
    preset_commutative, preset_nonabelian2, preset_weyl, CommutationSystem, SolvableAlgebra,
};
use solvable_core::coeff::FieldSpec;
use solvable_core::monomial::MultiIndex;
use solvable_core::ordering::MonomialOrdering;
use solvable_core::parse::poly_to_string;
use solvable_core::poly::Polynomial;
use solvable_core::weights::indices_up_to;

use crate::formats::{AlgebraDesc, CorpusFile, InstanceFile};

pub struct CorpusLimits {
    pub max_n: usize,
    pub max_d: usize,
    pub max_gens: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        CorpusLimits { max_n: 4, max_d: 3, max_gens: 4 }
    }
}

/// Reproducible pseudo-random instances over the presets plus random
/// quadric systems. A fixed seed yields a byte-identical corpus.
pub fn gen_corpus(seed: u64, limits: &CorpusLimits) -> CorpusFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::new();

    let mut push = |name: String, alg: &SolvableAlgebra, gens: Vec<Polynomial>, homogeneous: bool, two_sided: bool| {
        let gens: Vec<String> = gens.iter().map(|f| poly_to_string(alg, f)).collect();
        instances.push(InstanceFile {
            name,
            algebra: AlgebraDesc::from_algebra(alg),
            gens,
            homogeneous,
            two_sided,
        });
    };

    // commutative rings, deglex and lex
    for n in 1..=limits.max_n.min(3) {
        let alg = preset_commutative(n, MonomialOrdering::DegLex);
        let gens = random_gens(&mut rng, &alg, limits, false);
        push(format!("commutative{n}-deglex"), &alg, gens, false, n <= 2);
        let hgens = random_gens(&mut rng, &alg, limits, true);
        push(format!("commutative{n}-deglex-homog"), &alg, hgens, true, false);
    }
    {
        let alg = preset_commutative(2, MonomialOrdering::Lex);
        let gens = random_gens(&mut rng, &alg, limits, false);
        push("commutative2-lex".into(), &alg, gens, false, false);
    }

    // Weyl algebras (2n variables, capped by max_n)
    for n in 1..=(limits.max_n / 2).max(1) {
        let alg = preset_weyl(n, MonomialOrdering::DegLex).expect("weyl preset");
        let gens = random_gens(&mut rng, &alg, limits, false);
        push(format!("weyl{n}-deglex"), &alg, gens, false, false);
    }
    {
        // exercises the general (non-degree-compatible) bound formulas
        let alg = preset_weyl(1, MonomialOrdering::Lex).expect("weyl preset");
        let gens = random_gens(&mut rng, &alg, limits, false);
        push("weyl1-lex".into(), &alg, gens, false, false);
    }

    // the 2-dimensional nonabelian enveloping algebra
    {
        let alg = preset_nonabelian2(MonomialOrdering::DegLex);
        let gens = random_gens(&mut rng, &alg, limits, false);
        push("nonabelian2-deglex".into(), &alg, gens, false, true);
    }

    // random quadric systems
    for (k, n) in [(0usize, 2usize), (1, 2), (2, 3)] {
        if n > limits.max_n {
            continue;
        }
        let alg = random_quadric_algebra(&mut rng, n);
        let gens = random_gens(&mut rng, &alg, limits, false);
        push(format!("quadric{n}-{k}"), &alg, gens, false, false);
        if k == 0 {
            let alg2 = random_quadric_homogeneous(&mut rng, n);
            let hgens = random_gens(&mut rng, &alg2, limits, true);
            push(format!("quadric{n}-{k}-homog"), &alg2, hgens, true, false);
        }
    }

    CorpusFile { seed, instances }
}

fn random_coeff(rng: &mut ChaCha8Rng) -> solvable_core::coeff::Coefficient {
    let field = FieldSpec::Rational;
    let c = rng.gen_range(-3i64..=3);
    field.from_integer(if c == 0 { 1 } else { c })
}

fn random_gens(
    rng: &mut ChaCha8Rng,
    alg: &SolvableAlgebra,
    limits: &CorpusLimits,
    homogeneous: bool,
) -> Vec<Polynomial> {
    let count = rng.gen_range(1..=limits.max_gens);
    let mut out = Vec::new();
    for _ in 0..count {
        let deg = rng.gen_range(1..=limits.max_d);
        let pool: Vec<MultiIndex> = indices_up_to(alg.nvars(), deg)
            .into_iter()
            .filter(|m| if homogeneous { m.degree() == deg } else { m.degree() > 0 })
            .collect();
        let terms = rng.gen_range(1..=3usize.min(pool.len()));
        let mut f = Polynomial::zero();
        for _ in 0..terms {
            let m = pool[rng.gen_range(0..pool.len())].clone();
            f.add_term(&m, &random_coeff(rng));
        }
        if !homogeneous && rng.gen_bool(0.4) {
            f.add_term(&MultiIndex::zero(alg.nvars()), &random_coeff(rng));
        }
        if f.is_zero() {
            f = alg.var(rng.gen_range(0..alg.nvars()));
        }
        out.push(f);
    }
    out
}

/// A random quadric commutation system: candidate relations keep the
/// leading-monomial condition by construction (only monomials below
/// x_i x_j appear), and rejection sampling retries until the full
/// validation — including the overlap-confluence check — passes.
fn random_quadric_algebra(rng: &mut ChaCha8Rng, n: usize) -> SolvableAlgebra {
    let field = FieldSpec::Rational;
    let ordering = MonomialOrdering::DegLex;
    loop {
        let mut system = CommutationSystem::trivial(n, field);
        for i in 0..n {
            for j in i + 1..n {
                let c = random_coeff(rng);
                let pair = MultiIndex::unit(n, i).add(&MultiIndex::unit(n, j));
                let pool: Vec<MultiIndex> = indices_up_to(n, 2)
                    .into_iter()
                    .filter(|m| ordering.cmp_slices(&m.0, &pair.0) == std::cmp::Ordering::Less)
                    .collect();
                let mut p = Polynomial::zero();
                for _ in 0..rng.gen_range(0..=2) {
                    p.add_term(&pool[rng.gen_range(0..pool.len())].clone(), &random_coeff(rng));
                }
                system.set(i, j, c, p);
            }
        }
        let names = (1..=n).map(|k| format!("x{k}")).collect();
        if let Ok(alg) = SolvableAlgebra::validate(names, field, ordering.clone(), system) {
            return alg;
        }
    }
}

/// As above but homogeneous: p_ij zero or of degree exactly 2.
fn random_quadric_homogeneous(rng: &mut ChaCha8Rng, n: usize) -> SolvableAlgebra {
    let field = FieldSpec::Rational;
    let ordering = MonomialOrdering::DegLex;
    loop {
        let mut system = CommutationSystem::trivial(n, field);
        for i in 0..n {
            for j in i + 1..n {
                let c = random_coeff(rng);
                let pair = MultiIndex::unit(n, i).add(&MultiIndex::unit(n, j));
                let pool: Vec<MultiIndex> = indices_up_to(n, 2)
                    .into_iter()
                    .filter(|m| {
                        m.degree() == 2
                            && ordering.cmp_slices(&m.0, &pair.0) == std::cmp::Ordering::Less
                    })
                    .collect();
                let mut p = Polynomial::zero();
                if !pool.is_empty() && rng.gen_bool(0.5) {
                    p.add_term(&pool[rng.gen_range(0..pool.len())].clone(), &random_coeff(rng));
                }
                system.set(i, j, c, p);
            }
        }
        let names = (1..=n).map(|k| format!("y{k}")).collect();
        if let Ok(alg) = SolvableAlgebra::validate(names, field, ordering.clone(), system) {
            return alg;
        }
    }
}
