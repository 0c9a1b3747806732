//! Exact coefficient arithmetic: rationals with bignum integers, and prime fields.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a ring context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CoeffField {
    Q,
    Fp(u32),
}

impl CoeffField {
    pub fn validate(&self) -> Result<()> {
        match self {
            CoeffField::Q => Ok(()),
            CoeffField::Fp(p) => {
                if is_prime_u32(*p) {
                    Ok(())
                } else {
                    Err(Error::BadCoefficient(format!("{p} is not prime")))
                }
            }
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffField::Q => Coeff::Q(BigRational::zero()),
            CoeffField::Fp(p) => Coeff::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffField::Q => Coeff::Q(BigRational::one()),
            CoeffField::Fp(p) => Coeff::Fp { val: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoeffField::Q => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            CoeffField::Fp(p) => {
                let p64 = *p as i64;
                Coeff::Fp {
                    val: n.rem_euclid(p64) as u64,
                    p: *p,
                }
            }
        }
    }

    /// Parse "a" or "a/b" in this field.
    pub fn parse(&self, text: &str) -> Result<Coeff> {
        let bad = || Error::BadCoefficient(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = match den {
            Some(d) => d.trim().parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad());
        }
        match self {
            CoeffField::Q => Ok(Coeff::Q(BigRational::new(n, d))),
            CoeffField::Fp(p) => {
                let pi = BigInt::from(*p);
                let nv = ((n % &pi) + &pi) % &pi;
                let dv = ((d % &pi) + &pi) % &pi;
                let nv: u64 = nv.try_into().unwrap();
                let dv: u64 = dv.try_into().unwrap();
                if dv == 0 {
                    return Err(bad());
                }
                let inv = fp_inv(dv, *p);
                Ok(Coeff::Fp {
                    val: fp_mul(nv, inv, *p),
                    p: *p,
                })
            }
        }
    }
}

/// An element of the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { val: u64, p: u32 },
}

fn fp_mul(a: u64, b: u64, p: u32) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(mut b: u64, mut e: u64, p: u32) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(acc, b, p);
        }
        b = fp_mul(b, b, p);
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u32) -> u64 {
    debug_assert!(a % p as u64 != 0);
    fp_pow(a % p as u64, p as u64 - 2, p)
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp { val, .. } => *val == 0,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { val: a, p }, Coeff::Fp { val: b, p: q }) => {
                assert_eq!(p, q);
                Coeff::Fp {
                    val: (a + b) % *p as u64,
                    p: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { val, p } => Coeff::Fp {
                val: if *val == 0 { 0 } else { *p as u64 - val },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { val: a, p }, Coeff::Fp { val: b, p: q }) => {
                assert_eq!(p, q);
                Coeff::Fp {
                    val: fp_mul(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Q(a) => Coeff::Q(a.recip()),
            Coeff::Fp { val, p } => Coeff::Fp {
                val: fp_inv(*val, *p),
                p: *p,
            },
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp { val, .. } => *val == 1,
        }
    }

    /// Rational value, for field Q only.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Q(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// True if the rational part is negative (used for sign-aware printing).
pub fn coeff_is_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Q(r) => r.is_negative(),
        Coeff::Fp { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_validation() {
        assert!(CoeffField::Q.validate().is_ok());
        assert!(CoeffField::Fp(65537).validate().is_ok());
        assert!(CoeffField::Fp(65536).validate().is_err());
        assert!(CoeffField::Fp(1).validate().is_err());
    }

    #[test]
    fn parse_rationals() {
        let f = CoeffField::Q;
        assert_eq!(f.parse("3/2").unwrap(), f.parse("3/2").unwrap());
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = CoeffField::Fp(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b), f.from_i64(1));
        assert_eq!(a.mul(&b), f.from_i64(1));
        assert_eq!(a.inv(), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }
}
