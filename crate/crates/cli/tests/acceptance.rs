//! Acceptance suite: golden worked examples, exact bound values, and the
//! seeded property corpus. One test per criterion; each prints a pass
//! line with its key numbers.
//!
//! Worst-case degree growth for Gröbner bases is doubly exponential and
//! is not reproducible at this scale; what is checked here is that the
//! upper bounds are never violated on the corpus (a violation would mean
//! an implementation bug, since the bounds are theorems).

use std::process::Command;

use num_bigint::BigInt;
use num_rational::BigRational;
use solvable_core::algebra::{preset_commutative, preset_nonabelian2, preset_weyl};
use solvable_core::bounds::{
    dube_bound, homogeneous_gb_bound, verify_instance, VerifyOptions,
};
use solvable_core::cone::{
    hilbert_from_decomposition, macaulay_hilbert_poly, make_exact, split_complement,
    ExactifyPolicy,
};
use solvable_core::constructions::{homogenize_poly, rees};
use solvable_core::envelope::{is_two_sided_gb, two_sided_groebner};
use solvable_core::groebner::{
    buchberger, groebner_via_homogenization, hilbert_function_quotient, irreducible_monomials,
    is_groebner, reduce_basis, GroebnerBasis,
};
use solvable_core::monomial::MultiIndex;
use solvable_core::ordering::MonomialOrdering;
use solvable_core::parse::{parse_poly, poly_to_string};
use solvable_core::poly::Polynomial;
use solvable_core::syzygy::colon_ideal;
use solvable_core::weights::indices_up_to;
use solvable_core::SolvableAlgebra;

fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex(v.to_vec())
}

fn solvable_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_solvable"))
}

/// The shared corpus: seeded, N <= 4, degrees <= 3, at most 4 generators.
fn corpus() -> Vec<(String, SolvableAlgebra, Vec<Polynomial>, bool, bool)> {
    let out = solvable_bin()
        .args(["gen-corpus", "--seed", "20080918"])
        .output()
        .expect("corpus generation");
    assert!(out.status.success());
    let corpus: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mut items = Vec::new();
    for inst in corpus["instances"].as_array().unwrap() {
        let name = inst["name"].as_str().unwrap().to_string();
        let algebra = build_algebra(&inst["algebra"]);
        let gens: Vec<Polynomial> = inst["gens"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| parse_poly(&algebra, g.as_str().unwrap()).unwrap())
            .collect();
        let homogeneous = inst["homogeneous"].as_bool().unwrap_or(false);
        let two_sided = inst["two_sided"].as_bool().unwrap_or(false);
        items.push((name, algebra, gens, homogeneous, two_sided));
    }
    assert!(items.len() >= 10, "corpus too small");
    items
}

fn build_algebra(desc: &serde_json::Value) -> SolvableAlgebra {
    use solvable_core::algebra::CommutationSystem;
    use solvable_core::coeff::FieldSpec;
    let vars: Vec<String> =
        desc["vars"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().into()).collect();
    let order = match desc["order"].as_str() {
        Some("deglex") => MonomialOrdering::DegLex,
        Some("lex") => MonomialOrdering::Lex,
        other => panic!("unsupported corpus ordering {other:?}"),
    };
    let field = FieldSpec::Rational;
    let scratch = SolvableAlgebra::validate(
        vars.clone(),
        field,
        MonomialOrdering::Lex,
        CommutationSystem::trivial(vars.len(), field),
    )
    .unwrap();
    let mut system = CommutationSystem::trivial(vars.len(), field);
    if let Some(rels) = desc["relations"].as_array() {
        for rel in rels {
            let i = rel["i"].as_u64().unwrap() as usize - 1;
            let j = rel["j"].as_u64().unwrap() as usize - 1;
            let c = field.parse(rel["c"].as_str().unwrap()).unwrap();
            let p = match rel["p"].as_str().unwrap() {
                "0" => Polynomial::zero(),
                s => parse_poly(&scratch, s).unwrap(),
            };
            system.set(i, j, c, p);
        }
    }
    SolvableAlgebra::validate(vars, field, order, system).unwrap()
}

#[test]
fn acceptance_1a_weyl2_reduced_basis() {
    let a2 = preset_weyl(2, MonomialOrdering::DegLex).unwrap();
    let f1 = parse_poly(&a2, "x1*d1").unwrap();
    let f2 = parse_poly(&a2, "x2*d1^2 - d1").unwrap();
    let red = reduce_basis(&a2, &buchberger(&a2, &[f1, f2], false));
    assert_eq!(red.elements, vec![a2.var(2)]);
    // the CLI prints exactly "d1"
    let out = solvable_bin()
        .args([
            "groebner",
            "--algebra",
            "weyl:2",
            "--order",
            "deglex",
            "--gens",
            "x1*d1, x2*d1^2 - d1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "d1");
    println!("1a pass: reduced basis of (x1 d1, x2 d1^2 - d1) in A_2 is {{d1}}");
}

#[test]
fn acceptance_1b_weyl_colon_and_normal_forms() {
    let a1 = preset_weyl(1, MonomialOrdering::DegLex).unwrap();
    let colon = colon_ideal(&a1, &[a1.var(1)], &a1.var(0)).unwrap();
    let expected = vec![
        parse_poly(&a1, "x*d - 1").unwrap(),
        parse_poly(&a1, "d^2").unwrap(),
    ];
    assert_eq!(colon.elements, expected);
    let monos = irreducible_monomials(&a1, &colon, 5);
    let want: Vec<MultiIndex> = vec![
        mi(&[0, 0]),
        mi(&[0, 1]),
        mi(&[1, 0]),
        mi(&[2, 0]),
        mi(&[3, 0]),
        mi(&[4, 0]),
        mi(&[5, 0]),
    ];
    assert_eq!(monos, want);
    println!("1b pass: (d : x) = {{d^2, x d - 1}}, normal forms K d + K[x]");
}

#[test]
fn acceptance_1c_homogenization_of_kx() {
    let kx = preset_commutative(1, MonomialOrdering::Lex);
    let gens = [parse_poly(&kx, "x^2").unwrap(), parse_poly(&kx, "x + x^2").unwrap()];
    let star = rees(&kx).unwrap();
    let hgens: Vec<Polynomial> = gens.iter().map(homogenize_poly).collect();
    let rees_gb = reduce_basis(&star, &buchberger(&star, &hgens, false));
    let expected: Vec<Polynomial> =
        vec![parse_poly(&star, "x^2").unwrap(), parse_poly(&star, "x*t").unwrap()];
    assert_eq!(rees_gb.elements.len(), 2);
    for e in &expected {
        assert!(rees_gb.elements.contains(e), "missing {}", poly_to_string(&star, e));
    }
    let dehom = groebner_via_homogenization(&kx, &gens, false).unwrap();
    let mut els = dehom.elements.clone();
    els.sort_by(|a, b| a.cmp_by_lm(b, kx.ordering()));
    assert_eq!(els, vec![kx.var(0), parse_poly(&kx, "x^2").unwrap()]);
    assert!(is_groebner(&kx, &dehom.elements).is_ok());
    let red = reduce_basis(&kx, &dehom);
    assert_eq!(red.elements, vec![kx.var(0)]);
    println!("1c pass: Rees basis {{x t, x^2}}, dehomogenized {{x, x^2}}, reduced {{x}}");
}

#[test]
fn acceptance_1d_lex_witness() {
    let kxy = preset_commutative(2, MonomialOrdering::Lex);
    let gens = [
        parse_poly(&kxy, "x*y").unwrap(),
        parse_poly(&kxy, "x - y^2").unwrap(),
        parse_poly(&kxy, "x^2").unwrap(),
    ];
    match is_groebner(&kxy, &gens) {
        Err((_, _, witness)) => {
            assert_eq!(witness, parse_poly(&kxy, "y^3").unwrap());
        }
        Ok(()) => panic!("{{xy, x - y^2, x^2}} must fail the criterion"),
    }
    println!("1d pass: criterion fails with witness y^3");
}

#[test]
fn acceptance_1e_two_sided_nonabelian() {
    let u = preset_nonabelian2(MonomialOrdering::DegLex);
    let gb = two_sided_groebner(&u, &[u.var(0)]).unwrap();
    assert_eq!(gb.elements, vec![u.var(0)]);
    assert!(is_two_sided_gb(&u, &gb.elements));
    println!("1e pass: two-sided basis of (x1) in U(nonabelian 2-dim) is {{x1}}");
}

#[test]
fn acceptance_2_bound_values() {
    assert_eq!(dube_bound(1, 2), BigRational::from(BigInt::from(8)));
    assert_eq!(dube_bound(2, 2), BigRational::from(BigInt::from(32)));
    assert_eq!(dube_bound(2, 3), BigRational::new(BigInt::from(225), BigInt::from(2)));
    assert_eq!(homogeneous_gb_bound(2, 1), BigRational::from(BigInt::from(3)));
    for (args, want) in [
        (["bounds", "--formula", "dube", "--n", "1", "--d", "2"], "8"),
        (["bounds", "--formula", "dube", "--n", "2", "--d", "2"], "32"),
        (["bounds", "--formula", "dube", "--n", "2", "--d", "3"], "225/2"),
        (["bounds", "--formula", "homogeneous-gb", "--n", "2", "--d", "1"], "3"),
    ] {
        let out = solvable_bin().args(args).output().unwrap();
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), want);
    }
    println!("2 pass: D(1,2)=8, D(2,2)=32, D(2,3)=225/2, homogeneous bound(2,1)=3");
}

#[test]
fn acceptance_3a_lm_multiplication_on_corpus() {
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
    let mut algebras: Vec<SolvableAlgebra> = Vec::new();
    for (_, alg, _, _, _) in corpus() {
        if !algebras.contains(&alg) {
            algebras.push(alg);
        }
    }
    for alg in &algebras {
        let mut rng = XorShift(0xACCE55);
        for _ in 0..1000 {
            let a = MultiIndex((0..alg.nvars()).map(|_| (rng.next() % 4) as u32).collect());
            let b = MultiIndex((0..alg.nvars()).map(|_| (rng.next() % 4) as u32).collect());
            let prod = alg.mul_mono(&a, &b);
            assert_eq!(alg.lm(&prod), Some(&a.add(&b)));
        }
    }
    println!("3a pass: lm(x^a x^b) = x^(a+b) on 1000 pairs in each of {} algebras", algebras.len());
}

#[test]
fn acceptance_3b_reduced_basis_canonicity() {
    for (name, alg, gens, _, _) in corpus() {
        let base = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        // permute and rescale
        let mut permuted: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        for (k, f) in permuted.iter_mut().enumerate() {
            let c = solvable_core::coeff::FieldSpec::Rational.from_integer(2 + k as i64);
            *f = f.scale(&c);
        }
        let again = reduce_basis(&alg, &buchberger(&alg, &permuted, false));
        assert_eq!(base.elements, again.elements, "canonicity failed on {name}");
    }
    println!("3b pass: reduced bases identical under permutation and rescaling");
}

#[test]
fn acceptance_3c_split_direct_sum() {
    for (name, alg, gens, _, _) in corpus() {
        let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        let lms = gb.leading_monomials(&alg);
        let (p, q) = split_complement(&lms, alg.nvars());
        // every monomial of degree <= 10 in exactly one cone
        for m in indices_up_to(alg.nvars().min(3), 10) {
            let m = if m.len() == alg.nvars() {
                m
            } else {
                let mut v = m.0.clone();
                v.resize(alg.nvars(), 0);
                MultiIndex(v)
            };
            let in_ideal = lms.iter().any(|lm| lm.divides(&m));
            let cp = p.monomial_multiplicity(&m);
            let cq = q.monomial_multiplicity(&m);
            assert_eq!(cp + cq, 1, "{name}: monomial {m:?} covered {cp}+{cq} times");
            assert_eq!(cp == 1, in_ideal, "{name}: monomial {m:?} on the wrong side");
        }
        assert_eq!(q.d_standard(), Some(0), "{name}: Q not standard");
    }
    println!("3c pass: SPLIT partitions all monomials to degree 10; Q standard");
}

#[test]
fn acceptance_3d_hilbert_agreement() {
    let mut checked = 0;
    for (name, alg, gens, homogeneous, _) in corpus() {
        if !homogeneous {
            continue;
        }
        let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        let (_, q) = split_complement(&gb.leading_monomials(&alg), alg.nvars());
        let data = hilbert_from_decomposition(&q, 11);
        for d in 0..=10usize {
            let direct = hilbert_function_quotient(&alg, &gb, d).unwrap();
            assert_eq!(
                data.table[d],
                BigInt::from(direct as u64),
                "{name}: Hilbert mismatch at degree {d}"
            );
        }
        // closed forms agree coefficientwise on the exact decomposition
        let (exact, constants) = make_exact(&q, ExactifyPolicy::PreferLargeDimension).unwrap();
        let he = hilbert_from_decomposition(&exact, 11);
        assert_eq!(he.poly, macaulay_hilbert_poly(&constants, alg.nvars()), "{name}");
        assert_eq!(he.poly, data.poly, "{name}: exactification changed the polynomial");
        checked += 1;
    }
    assert!(checked >= 3, "not enough homogeneous instances");
    println!("3d pass: decomposition and quotient Hilbert data agree on {checked} instances");
}

#[test]
fn acceptance_3e_macaulay_invariance_and_b0() {
    for (name, alg, gens, _, _) in corpus() {
        let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        let (_, q) = split_complement(&gb.leading_monomials(&alg), alg.nvars());
        let (_, c1) = make_exact(&q, ExactifyPolicy::PreferLargeDimension).unwrap();
        let (_, c2) = make_exact(&q, ExactifyPolicy::PreferSmallDimension).unwrap();
        assert_eq!(c1, c2, "{name}: tie-break policy changed the constants");
        let max_deg = gb.max_degree().unwrap_or(0);
        assert!(max_deg <= c1.b0(), "{name}: basis degree {max_deg} above b0 {}", c1.b0());
    }
    println!("3e pass: Macaulay constants policy-independent; basis degrees below b_0");
}

#[test]
fn acceptance_3f_degree_bounds_zero_violations() {
    let mut checks = 0;
    for (name, alg, gens, _, two_sided) in corpus() {
        let options = VerifyOptions { two_sided, membership_samples: 3 };
        let report = verify_instance(&alg, &gens, &options).unwrap();
        for check in &report.checks {
            assert!(check.passed, "{name}/{}: {}", check.name, check.detail);
            checks += 1;
        }
    }
    assert!(checks >= 60);
    println!("3f pass: {checks} degree-bound checks, zero violations");
}

#[test]
fn acceptance_3g_certificates_remultiply() {
    for (name, alg, gens, _, _) in corpus() {
        // Gröbner certificates over the original generators
        let gb = buchberger(&alg, &gens, true);
        let certs = gb.certificates.as_ref().unwrap();
        for (k, row) in certs.rows.iter().enumerate() {
            let mut acc = Polynomial::zero();
            for (p, g) in row.iter().zip(&certs.input) {
                acc = acc.add(&alg.mul(p, g));
            }
            assert_eq!(acc, gb.elements[k], "{name}: basis certificate {k}");
        }
        // syzygies contract to zero exactly
        let syz = solvable_core::syzygy::syzygies_of_tuple(&alg, &gens).unwrap();
        for row in &syz.generators {
            assert!(syz.contract(&alg, row).is_zero(), "{name}: syzygy residual");
        }
    }
    println!("3g pass: every certificate identity re-multiplies exactly");
}

/// Graded transfer on the corpus: under degree-compatible orderings the
/// top forms of a reduced basis form a basis of the graded ideal in the
/// associated graded algebra.
#[test]
fn acceptance_graded_transfer_on_corpus() {
    use solvable_core::constructions::{associated_graded, top_form};
    let mut checked = 0;
    for (name, alg, gens, _, _) in corpus() {
        if !alg.ordering().is_degree_compatible(alg.nvars()) || !alg.is_quadric() {
            continue;
        }
        let red = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        if red.elements.is_empty() {
            continue;
        }
        let gr = associated_graded(&alg).unwrap();
        let tops: Vec<Polynomial> = red.elements.iter().map(top_form).collect();
        assert!(is_groebner(&gr, &tops).is_ok(), "{name}: graded transfer failed");
        checked += 1;
    }
    assert!(checked >= 8);
    println!("graded transfer pass: {checked} corpus instances");
}

/// Reduced bases read back through the text format are unchanged, and the
/// binary is deterministic byte-for-byte.
#[test]
fn acceptance_roundtrip_and_determinism() {
    for (name, alg, gens, _, _) in corpus() {
        let gb: GroebnerBasis = reduce_basis(&alg, &buchberger(&alg, &gens, false));
        for g in &gb.elements {
            let text = poly_to_string(&alg, g);
            let back = parse_poly(&alg, &text).unwrap();
            assert_eq!(&back, g, "{name}: round-trip changed {text}");
        }
    }
    let run = || {
        solvable_bin()
            .args(["gen-corpus", "--seed", "99", "--max-n", "3"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run(), "corpus generation must be byte-identical");
    println!("roundtrip pass: printing is parseable and runs are deterministic");
}
