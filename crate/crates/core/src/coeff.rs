//! Exact coefficient arithmetic: arbitrary-precision rationals and prime
//! fields GF(p). Floating point is never used; leading-term cancellation
//! must be exact.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    /// GF(p) for a prime p (primality is the caller's responsibility).
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Coefficient::Mod { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Coefficient::Mod { value: 1 % *p, modulus: *p },
        }
    }

    pub fn from_integer(&self, n: i64) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p;
                let r = n.rem_euclid(p as i64) as u64;
                Coefficient::Mod { value: r, modulus: p }
            }
        }
    }

    /// Parse "a", "-a", or "a/b" into this field.
    pub fn parse(&self, s: &str) -> Option<Coefficient> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = match den {
            Some(d) => d.parse().ok()?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rational => Some(Coefficient::Rat(BigRational::new(n, d))),
            FieldSpec::Prime(p) => {
                let p = *p;
                let pn = BigInt::from(p);
                let nn = ((n % &pn) + &pn) % &pn;
                let dd = ((d % &pn) + &pn) % &pn;
                let nv: u64 = nn.try_into().ok()?;
                let dv: u64 = dd.try_into().ok()?;
                let num = Coefficient::Mod { value: nv, modulus: p };
                let den = Coefficient::Mod { value: dv, modulus: p };
                if den.is_zero() {
                    None
                } else {
                    Some(num.div(&den))
                }
            }
        }
    }
}

/// An element of the coefficient field, in canonical form: reduced fraction
/// with positive denominator, or a residue in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rat(_) => FieldSpec::Rational,
            Coefficient::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_zero(),
            Coefficient::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_one(),
            Coefficient::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a + b),
            (Coefficient::Mod { value: a, modulus: p }, Coefficient::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "coefficient field mismatch");
                Coefficient::Mod { value: addmod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rat(a) => Coefficient::Rat(-a),
            Coefficient::Mod { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus - value };
                Coefficient::Mod { value: v, modulus: *modulus }
            }
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a * b),
            (Coefficient::Mod { value: a, modulus: p }, Coefficient::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "coefficient field mismatch");
                Coefficient::Mod { value: mulmod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn inv(&self) -> Coefficient {
        assert!(!self.is_zero(), "division by zero coefficient");
        match self {
            Coefficient::Rat(a) => Coefficient::Rat(a.recip()),
            Coefficient::Mod { value, modulus } => {
                Coefficient::Mod { value: invmod(*value, *modulus), modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inv())
    }

    /// Canonical text form: reduced fraction "a" or "a/b", or a residue.
    pub fn to_display(&self) -> String {
        match self {
            Coefficient::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    let mut s = r.numer().to_string();
                    s.push('/');
                    s.push_str(&r.denom().to_string());
                    s
                }
            }
            Coefficient::Mod { value, .. } => value.to_string(),
        }
    }

    /// True if the canonical form starts with a minus sign.
    pub fn is_negative_display(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_negative(),
            Coefficient::Mod { .. } => false,
        }
    }

    /// The coefficient with any leading sign stripped for display.
    pub fn abs_display(&self) -> String {
        match self {
            Coefficient::Rat(r) => {
                let a = r.abs();
                Coefficient::Rat(a).to_display()
            }
            Coefficient::Mod { .. } => self.to_display(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display())
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "inverse of a non-unit mod p (modulus not prime?)");
    (s0.rem_euclid(p as i128)) as u64
}
