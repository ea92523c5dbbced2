//! Hilbert functions and Hilbert polynomials in exact arithmetic.
//!
//! Two binomial conventions are in play. Counting (the Hilbert function
//! table) uses binom(n, k) = 0 for n < k or n < 0. The Hilbert polynomial
//! uses binom(T + s, k) as an honest polynomial in T with rational
//! coefficients; for arguments beyond the decomposition degree the two
//! agree.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Counting convention: 0 unless 0 <= k <= n.
pub fn binom_count(n: i64, k: usize) -> BigInt {
    if n < 0 || (n as u64) < k as u64 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for r in 0..k {
        acc *= BigInt::from(n - r as i64);
        // exact: a product of r+1 consecutive integers divides by (r+1)!
        acc /= BigInt::from(r as i64 + 1);
    }
    acc
}

/// A dense polynomial in one variable T over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    /// coeffs[k] multiplies T^k; trailing zeros trimmed.
    pub coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = PolyQ { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] = &coeffs[k] + c;
        }
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> PolyQ {
        let mut p = PolyQ { coeffs: self.coeffs.iter().map(|a| a * c).collect() };
        p.trim();
        p
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let tt = BigRational::from(BigInt::from(t));
        for c in self.coeffs.iter().rev() {
            acc = acc * &tt + c;
        }
        acc
    }

    /// Human-readable form like "1/2*T^2 + 3/2*T + 1".
    pub fn to_display(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (pos, (k, c)) in self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).enumerate() {
            let neg = c.is_negative();
            if pos == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coeff_is_one = a.is_one();
            if k == 0 {
                let _ = write!(out, "{a}");
            } else {
                if !coeff_is_one {
                    let _ = write!(out, "{a}*");
                }
                if k == 1 {
                    out.push('T');
                } else {
                    let _ = write!(out, "T^{k}");
                }
            }
        }
        out
    }
}

/// binom(T + shift, k) as a polynomial in T:
/// (T + shift)(T + shift - 1)...(T + shift - k + 1) / k!.
pub fn binom_poly(shift: i64, k: usize) -> PolyQ {
    let mut acc = PolyQ::one();
    for r in 0..k {
        let lin = PolyQ {
            coeffs: vec![
                BigRational::from(BigInt::from(shift - r as i64)),
                BigRational::one(),
            ],
        };
        acc = acc.mul(&lin);
    }
    let mut kfact = BigRational::one();
    for r in 1..=k {
        kfact *= BigRational::from(BigInt::from(r as i64));
    }
    acc.scale(&kfact.recip())
}

/// Hilbert data of a graded space: a table of values, the eventual
/// polynomial, and the regularity (least r with H(d) = P(d) for d >= r).
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertData {
    pub table: Vec<BigInt>,
    pub poly: PolyQ,
    pub regularity: usize,
}

impl HilbertData {
    pub fn value(&self, d: usize) -> Option<&BigInt> {
        self.table.get(d)
    }
}

/// Least r such that table[d] = poly(d) for all d in [r, table.len());
/// callers guarantee agreement holds from some point on.
pub fn regularity_from(table: &[BigInt], poly: &PolyQ) -> usize {
    let mut r = table.len();
    while r > 0 {
        let d = r - 1;
        let pv = poly.eval(d as i64);
        if pv.denom().is_one() && pv.numer() == &table[d] {
            r = d;
        } else {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom_count(4, 2), BigInt::from(6));
        assert_eq!(binom_count(1, 2), BigInt::zero());
        assert_eq!(binom_count(-3, 1), BigInt::zero());
        assert_eq!(binom_count(5, 0), BigInt::one());
    }

    #[test]
    fn binom_poly_matches_counts_in_range() {
        // binom(T + 1, 2) at T = 3 is binom(4, 2) = 6
        let p = binom_poly(1, 2);
        assert_eq!(p.eval(3), BigRational::from(BigInt::from(6)));
        // ambient series binom(T + N - 1, N - 1) for N = 2: T + 1
        let amb = binom_poly(1, 1);
        assert_eq!(amb.eval(7), BigRational::from(BigInt::from(8)));
    }

    #[test]
    fn polyq_arithmetic_and_display() {
        let p = binom_poly(1, 2); // (T+1)T/2 = 1/2 T^2 + 1/2 T
        assert_eq!(p.to_display(), "1/2*T^2 + 1/2*T");
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(PolyQ::one().to_display(), "1");
        let r = binom_poly(0, 1).neg();
        assert_eq!(r.to_display(), "-T");
    }

    #[test]
    fn regularity_detection() {
        let poly = PolyQ::constant(BigRational::from(BigInt::from(2)));
        let table = vec![BigInt::from(1), BigInt::from(2), BigInt::from(2), BigInt::from(2)];
        assert_eq!(regularity_from(&table, &poly), 1);
        let table = vec![BigInt::from(2), BigInt::from(2)];
        assert_eq!(regularity_from(&table, &poly), 0);
    }
}
