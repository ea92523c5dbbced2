//! Closed-form degree bounds, exact bound arithmetic, and the verification
//! harness checking the bounds on concrete instances.
//!
//! The central quantity is D(N, d) = 2 (d^2/2 + d)^{2^{N-1}}. Several
//! derived bounds carry a factor N^{N/2}, which is irrational for odd N;
//! bound values are therefore kept as a + b sqrt(n) with exact rational
//! a, b >= 0 and compared by sign analysis and squaring. No floating
//! point anywhere.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::SolvableAlgebra;
use crate::cone::{
    decompose_homogeneous_ideal_parts, make_exact, split_complement,
    ExactifyPolicy,
};
use crate::error::Result;
use crate::groebner::{
    buchberger, groebner_via_homogenization, membership_with_basis, reduce_basis, Membership,
};
use crate::monomial::MultiIndex;
use crate::poly::Polynomial;
use crate::syzygy::syzygies_of_tuple;

/// An exact nonnegative bound of the form rat + sqrt_coeff * sqrt(radicand).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub rat: BigRational,
    pub sqrt_coeff: BigRational,
    pub radicand: u64,
}

fn big(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl BoundValue {
    pub fn from_rational(rat: BigRational) -> Self {
        debug_assert!(!rat.is_negative());
        BoundValue { rat, sqrt_coeff: BigRational::zero(), radicand: 0 }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    /// coeff * n^{n/2}: an integer power for even n, otherwise a surd.
    pub fn pow_half(coeff: BigRational, n: u64) -> Self {
        let whole = BigRational::from(BigInt::from(n)).pow((n / 2) as i32);
        if n.is_multiple_of(2) {
            Self::from_rational(coeff * whole)
        } else {
            BoundValue { rat: BigRational::zero(), sqrt_coeff: coeff * whole, radicand: n }
        }
    }

    pub fn add_rational(&self, r: &BigRational) -> Self {
        BoundValue { rat: &self.rat + r, sqrt_coeff: self.sqrt_coeff.clone(), radicand: self.radicand }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        debug_assert!(!r.is_negative());
        BoundValue {
            rat: &self.rat * r,
            sqrt_coeff: &self.sqrt_coeff * r,
            radicand: self.radicand,
        }
    }

    /// Exact comparison of a + b sqrt(n) against c + e sqrt(m)
    /// (all coefficients nonnegative).
    pub fn compare(&self, other: &BoundValue) -> Ordering {
        // a sqrt(n) - c sqrt(m) vs t := other.rat - self.rat
        let a = &self.sqrt_coeff;
        let c = &other.sqrt_coeff;
        let n = BigRational::from(BigInt::from(self.radicand));
        let m = BigRational::from(BigInt::from(other.radicand));
        let t = &other.rat - &self.rat;
        let lhs_sign = (a * a * &n).cmp(&(c * c * &m));
        match t.cmp(&BigRational::zero()) {
            Ordering::Equal => lhs_sign,
            Ordering::Greater => {
                if lhs_sign != Ordering::Greater {
                    return Ordering::Less;
                }
                // both sides positive: square a sqrt(n) - c sqrt(m) vs t
                // -> (a^2 n + c^2 m - t^2) vs 2 a c sqrt(nm)
                let lhs = a * a * &n + c * c * &m - &t * &t;
                cmp_rat_vs_surd(&lhs, &(big(2) * a * c), self.radicand as u128 * other.radicand as u128)
            }
            Ordering::Less => {
                if lhs_sign != Ordering::Less {
                    return Ordering::Greater;
                }
                let t = -t;
                // compare c sqrt(m) - a sqrt(n) vs t, both positive
                let lhs = a * a * &n + c * c * &m - &t * &t;
                cmp_rat_vs_surd(&lhs, &(big(2) * a * c), self.radicand as u128 * other.radicand as u128)
                    .reverse()
            }
        }
    }

    /// deg <= bound, exactly.
    pub fn admits_degree(&self, deg: usize) -> bool {
        self.compare(&BoundValue::from_rational(big(deg as i64))) != Ordering::Less
    }

    /// Decimal-free display: "a + b*sqrt(n)" with zero parts elided.
    pub fn to_display(&self) -> String {
        let rat_zero = self.rat.is_zero();
        let surd_zero = self.sqrt_coeff.is_zero();
        match (rat_zero, surd_zero) {
            (_, true) => format!("{}", Rat(&self.rat)),
            (true, false) => format!("{}*sqrt({})", Rat(&self.sqrt_coeff), self.radicand),
            (false, false) => {
                format!("{} + {}*sqrt({})", Rat(&self.rat), Rat(&self.sqrt_coeff), self.radicand)
            }
        }
    }
}

struct Rat<'a>(&'a BigRational);

impl core::fmt::Display for Rat<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// sign of r - s*sqrt(m), with s >= 0.
fn cmp_rat_vs_surd(r: &BigRational, s: &BigRational, m: u128) -> Ordering {
    let surd_sq = s * s * BigRational::from(BigInt::from(m));
    if surd_sq.is_zero() {
        return r.cmp(&BigRational::zero());
    }
    if r.is_negative() || r.is_zero() {
        return Ordering::Less;
    }
    (r * r).cmp(&surd_sq)
}

/// D(N, d) = 2 (d^2/2 + d)^{2^{N-1}}, the degree bound for Gröbner bases
/// of ideals generated in degree at most d.
pub fn dube_bound(nvars: usize, d: usize) -> BigRational {
    assert!(nvars >= 1, "at least one variable");
    assert!(nvars <= 16, "exponent 2^(N-1) too large to evaluate exactly");
    let d = big(d as i64);
    let base = &d * &d / big(2) + &d;
    big(2) * base.pow(1i32 << (nvars - 1))
}

/// Bound for reduced Gröbner bases of homogeneous ideals: D(N-1, d) for
/// N > 1; a single variable falls back to d itself (every homogeneous
/// ideal of K[x] is principal).
pub fn homogeneous_gb_bound(nvars: usize, d: usize) -> BigRational {
    if nvars == 1 {
        big(d as i64)
    } else {
        dube_bound(nvars - 1, d)
    }
}

/// Bound for the reduced Gröbner basis in the inhomogeneous case:
/// D(N, d) under a degree-compatible ordering, otherwise
/// 2 D(N+1, d) (N+1) N^{N/2}.
pub fn reduced_gb_bound(nvars: usize, d: usize, degree_compatible: bool) -> BoundValue {
    if degree_compatible {
        BoundValue::from_rational(dube_bound(nvars, d))
    } else {
        let coeff = big(2) * dube_bound(nvars + 1, d) * big(nvars as i64 + 1);
        BoundValue::pow_half(coeff, nvars as u64)
    }
}

/// Degree bound for membership certificates: deg(f) + D(N, d) under a
/// degree-compatible ordering, otherwise
/// D(N, d) (2 deg(f) (N+1) N^{N/2} + 1).
pub fn membership_bound(
    nvars: usize,
    d: usize,
    deg_f: usize,
    degree_compatible: bool,
) -> BoundValue {
    let dube = dube_bound(nvars, d);
    if degree_compatible {
        BoundValue::from_rational(big(deg_f as i64) + dube)
    } else {
        let coeff = big(2) * big(deg_f as i64) * big(nvars as i64 + 1) * &dube;
        BoundValue::pow_half(coeff, nvars as u64).add_rational(&dube)
    }
}

/// Degree bound for one reduction sequence: deg(f) 2d(N+1) N^{N/2}.
pub fn reduction_degree_bound(nvars: usize, d: usize, deg_f: usize) -> BoundValue {
    let coeff = big(deg_f as i64) * big(2) * big(d as i64) * big(nvars as i64 + 1);
    BoundValue::pow_half(coeff, nvars as u64)
}

/// Syzygy modules of tuples of degree <= d are generated in degree
/// <= 3 D(N, d).
pub fn syzygy_bound(nvars: usize, d: usize) -> BigRational {
    big(3) * dube_bound(nvars, d)
}

/// Two-sided Gröbner bases exist in degree <= D(2N, d).
pub fn two_sided_bound(nvars: usize, d: usize) -> BigRational {
    dube_bound(2 * nvars, d)
}

/// One named pass/fail line of a verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also run the two-sided checks (costly: doubles the variable count).
    pub two_sided: bool,
    /// How many deterministic membership samples to certify.
    pub membership_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { two_sided: false, membership_samples: 3 }
    }
}

/// Run every applicable degree-bound check on one instance. A failing
/// check would contradict a theorem, so it indicates an implementation
/// bug; the report records each check with its exact numbers.
pub fn verify_instance(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    options: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let gens: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(VerifyReport { checks });
    }
    let nvars = alg.nvars();
    let d = gens.iter().map(|f| f.degree().unwrap()).max().unwrap();
    let deg_compatible = alg.ordering().is_degree_compatible(nvars);
    let homogeneous_case = alg.is_homogeneous() && gens.iter().all(|f| f.is_homogeneous());

    let reduced = reduce_basis(alg, &buchberger(alg, &gens, false));
    let max_red = reduced.max_degree().unwrap_or(0);

    if homogeneous_case {
        let bound = homogeneous_gb_bound(nvars, d);
        checks.push(CheckResult {
            name: "homogeneous-reduced-gb-degree".into(),
            passed: big(max_red as i64) <= bound,
            detail: format!("max degree {} <= {}", max_red, Rat(&bound)),
        });
    }

    if alg.is_quadric() {
        let via = groebner_via_homogenization(alg, &gens, false)?;
        let max_via = via.max_degree().unwrap_or(0);
        let bound = dube_bound(nvars, d);
        checks.push(CheckResult {
            name: "dehomogenized-gb-degree".into(),
            passed: big(max_via as i64) <= bound,
            detail: format!("max degree {} <= {}", max_via, Rat(&bound)),
        });

        let bound = reduced_gb_bound(nvars, d, deg_compatible);
        checks.push(CheckResult {
            name: "reduced-gb-degree".into(),
            passed: bound.admits_degree(max_red),
            detail: format!("max degree {} <= {}", max_red, bound.to_display()),
        });
    }

    if homogeneous_case && nvars > 1 && d >= 1 {
        checks.push(macaulay_pair_check(alg, &gens, &reduced, d)?);
    }

    // Reduced Gröbner basis degrees never exceed the Macaulay constant b_0
    // of the normal-form space.
    {
        let (p_dec, q_dec) = split_complement(&reduced.leading_monomials(alg), nvars);
        let (_, constants) = make_exact(&q_dec, ExactifyPolicy::PreferLargeDimension)?;
        checks.push(CheckResult {
            name: "reduced-gb-below-b0".into(),
            passed: max_red <= constants.b0(),
            detail: format!("max degree {} <= b_0 = {}", max_red, constants.b0()),
        });
        // max-lemma on the complementary pair decomposing all of R
        let all = [
            p_dec.degree(),
            q_dec.degree(),
        ];
        let plus = [p_dec.plus_degree(), q_dec.plus_degree()];
        let lhs = all.iter().flatten().max().copied();
        let rhs = plus.iter().flatten().max().copied();
        checks.push(CheckResult {
            name: "max-lemma".into(),
            passed: lhs == rhs,
            detail: format!("max deg {:?} = max deg of positive cones {:?}", lhs, rhs),
        });
    }

    if alg.is_quadric() && d >= 1 && options.membership_samples > 0 {
        checks.push(membership_check(alg, &gens, d, deg_compatible, options.membership_samples)?);
    }

    // One reduction sequence: cofactor products stay within
    // deg(f) 2 d~ (N+1) N^{N/2}, where d~ bounds the basis and the
    // commutation polynomials.
    {
        let d_tilde = reduced
            .max_degree()
            .unwrap_or(0)
            .max(alg.system().pairs().filter_map(|(_, _, r)| r.p.degree()).max().unwrap_or(0))
            .max(1);
        let mut sample = Polynomial::zero();
        for (i, g) in gens.iter().enumerate() {
            let mut exp = MultiIndex::zero(nvars);
            exp.0[i % nvars] = (i % 2) as u32 + 1;
            sample = sample.add(&alg.mul(&alg.mono(exp), g));
        }
        if let Some(deg_f) = sample.degree() {
            let cert = crate::groebner::normal_form(alg, &reduced.elements, &sample);
            let mut max_prod = cert.remainder.degree().unwrap_or(0);
            for (p, g) in cert.cofactors.iter().zip(&reduced.elements) {
                if !p.is_zero() {
                    max_prod = max_prod.max(alg.mul(p, g).degree().unwrap_or(0));
                }
            }
            let bound = reduction_degree_bound(nvars, d_tilde, deg_f);
            checks.push(CheckResult {
                name: "reduction-sequence-degree".into(),
                passed: bound.admits_degree(max_prod),
                detail: format!("max product degree {} <= {}", max_prod, bound.to_display()),
            });
        }
    }

    if alg.is_quadric() && deg_compatible && d >= 1 {
        let syz = syzygies_of_tuple(alg, &gens)?;
        let bound = syzygy_bound(nvars, d);
        let mut max_deg = 0usize;
        let mut exact = true;
        for row in &syz.generators {
            for entry in row {
                if let Some(deg) = entry.degree() {
                    max_deg = max_deg.max(deg);
                }
            }
            exact &= syz.contract(alg, row).is_zero();
        }
        checks.push(CheckResult {
            name: "syzygy-generator-degree".into(),
            passed: big(max_deg as i64) <= bound,
            detail: format!("max component degree {} <= {}", max_deg, Rat(&bound)),
        });
        checks.push(CheckResult {
            name: "syzygy-exactness".into(),
            passed: exact,
            detail: "all generators contract to zero".into(),
        });
    }

    if options.two_sided && alg.is_quadric() && d >= 1 {
        let witness = crate::envelope::two_sided_groebner_with_witness(alg, &gens)?;
        let max_deg = witness.raw.iter().filter_map(|f| f.degree()).max().unwrap_or(0);
        let bound = two_sided_bound(nvars, d);
        checks.push(CheckResult {
            name: "two-sided-gb-degree".into(),
            passed: big(max_deg as i64) <= bound,
            detail: format!("max degree {} <= {}", max_deg, Rat(&bound)),
        });
    }

    Ok(VerifyReport { checks })
}

/// The two-sided Macaulay estimate: exact decompositions of the ideal
/// side (minus its leading cone) and the normal-form side satisfy
/// a_1 + b_1 <= D(N-1, d).
fn macaulay_pair_check(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    reduced: &crate::groebner::GroebnerBasis,
    d: usize,
) -> Result<CheckResult> {
    let nvars = alg.nvars();
    let (_lead, rest) = decompose_homogeneous_ideal_parts(alg, gens)?;
    let (_, a_constants) = make_exact(&rest, ExactifyPolicy::PreferLargeDimension)?;
    let (_, q_dec) = split_complement(&reduced.leading_monomials(alg), nvars);
    let (_, b_constants) = make_exact(&q_dec, ExactifyPolicy::PreferLargeDimension)?;
    let sum = a_constants.b[1] + b_constants.b[1];
    let bound = dube_bound(nvars - 1, d);
    Ok(CheckResult {
        name: "macaulay-a1-b1".into(),
        passed: big(sum as i64) <= bound,
        detail: format!(
            "a_1 + b_1 = {} + {} <= {}",
            a_constants.b[1],
            b_constants.b[1],
            Rat(&bound)
        ),
    })
}

/// Deterministic membership samples: small monomial combinations of the
/// generators, certified and degree-checked.
fn membership_check(
    alg: &SolvableAlgebra,
    gens: &[Polynomial],
    d: usize,
    deg_compatible: bool,
    samples: usize,
) -> Result<CheckResult> {
    let nvars = alg.nvars();
    let gb = groebner_via_homogenization(alg, gens, true)?;
    let mut passed = true;
    let mut detail = String::new();
    for s in 0..samples {
        // f = sum_i m_{s,i} f_i with fixed small monomial multipliers
        let mut f = Polynomial::zero();
        for (i, g) in gens.iter().enumerate() {
            let e = (s + i) % 3;
            let var = (s + i) % nvars;
            let mut exp = MultiIndex::zero(nvars);
            exp.0[var] = e as u32;
            f = f.add(&alg.mul(&alg.mono(exp), g));
        }
        if f.is_zero() {
            continue;
        }
        let deg_f = f.degree().unwrap();
        match membership_with_basis(alg, &gb, &f) {
            Membership::NotMember { .. } => {
                passed = false;
                detail.push_str("constructed member rejected; ");
            }
            Membership::Member { cofactors } => {
                // exact identity
                let mut acc = Polynomial::zero();
                for (p, g) in cofactors.iter().zip(gens) {
                    acc = acc.add(&alg.mul(p, g));
                }
                if acc != f {
                    passed = false;
                    detail.push_str("certificate does not re-multiply; ");
                }
                let bound = membership_bound(nvars, d, deg_f, deg_compatible);
                let max_cof = cofactors.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
                if !bound.admits_degree(max_cof) {
                    passed = false;
                    detail.push_str(&format!(
                        "cofactor degree {} exceeds {}; ",
                        max_cof,
                        bound.to_display()
                    ));
                }
            }
        }
    }
    if detail.is_empty() {
        detail = format!("{samples} samples within bound, certificates exact");
    }
    Ok(CheckResult { name: "membership-certificates".into(), passed, detail })
}
