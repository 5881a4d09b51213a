//! Exact scalars over ℚ or 𝔽_p, selected at runtime by a [`Characteristic`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::KernelError;

/// Characteristic of the ground field: `0` for ℚ, otherwise a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self, KernelError> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(KernelError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = KernelError;
    fn try_from(p: u64) -> Result<Self, Self::Error> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u64 {
    fn from(c: Characteristic) -> u64 {
        c.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of the largest power of `p` dividing `n`; `None` stands for +∞ (n = 0).
pub fn p_adic_order(n: u64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    Some(k)
}

/// An element of ℚ (reduced fraction) or of 𝔽_p (residue in `[0, p)`).
///
/// Arithmetic between scalars of different characteristic is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(ch: Characteristic) -> Self {
        Scalar::from_i64(ch, 0)
    }

    pub fn one(ch: Characteristic) -> Self {
        Scalar::from_i64(ch, 1)
    }

    pub fn from_i64(ch: Characteristic, v: i64) -> Self {
        match ch.0 {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Modular {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(ch: Characteristic, v: &BigInt) -> Self {
        match ch.0 {
            0 => Scalar::Rational(BigRational::from_integer(v.clone())),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Reduces a rational into the given characteristic; fails if the denominator vanishes mod p.
    pub fn from_rational(ch: Characteristic, q: &BigRational) -> Result<Self, KernelError> {
        match ch.0 {
            0 => Ok(Scalar::Rational(q.clone())),
            _ => {
                let n = Scalar::from_bigint(ch, q.numer());
                let d = Scalar::from_bigint(ch, q.denom());
                if d.is_zero() {
                    return Err(KernelError::DivisionByZero);
                }
                Ok(n.div(&d))
            }
        }
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Scalar::Rational(_) => Characteristic(0),
            Scalar::Modular { modulus, .. } => Characteristic(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_integer(),
            Scalar::Modular { .. } => true,
        }
    }

    /// Sign in char 0; residues count as positive when nonzero.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("scalar characteristic mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("scalar characteristic mismatch"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.characteristic());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer value when the scalar is a rational integer (char 0 only).
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", q),
            Scalar::Modular { value, .. } => write!(f, "{}", value),
        }
    }
}

/// Binomial coefficient as a scalar of the given characteristic.
pub fn binomial(ch: Characteristic, n: u64, k: u64) -> Scalar {
    if k > n {
        return Scalar::zero(ch);
    }
    let mut acc = BigInt::one();
    let k = k.min(n - k);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Scalar::from_bigint(ch, &acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_must_be_prime() {
        assert!(Characteristic::new(0).is_ok());
        assert!(Characteristic::new(7).is_ok());
        assert!(Characteristic::new(9).is_err());
        assert!(Characteristic::new(1).is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let ch = Characteristic::new(5).unwrap();
        assert_eq!(Scalar::from_i64(ch, -1), Scalar::from_i64(ch, 4));
        assert_eq!(Scalar::from_i64(ch, 3).inv().mul(&Scalar::from_i64(ch, 3)), Scalar::one(ch));
    }

    #[test]
    fn rationals_reduce() {
        let ch = Characteristic::ZERO;
        let a = Scalar::from_i64(ch, 2).div(&Scalar::from_i64(ch, 4));
        let b = Scalar::from_i64(ch, 1).div(&Scalar::from_i64(ch, 2));
        assert_eq!(a, b);
    }

    #[test]
    fn binomials_vanish_mod_p() {
        let two = Characteristic::new(2).unwrap();
        assert!(binomial(two, 4, 2).is_zero());
        assert!(!binomial(two, 4, 4).is_zero());
        assert_eq!(binomial(Characteristic::ZERO, 6, 3), Scalar::from_i64(Characteristic::ZERO, 20));
    }

    #[test]
    fn p_adic_orders() {
        assert_eq!(p_adic_order(12, 2), Some(2));
        assert_eq!(p_adic_order(0, 3), None);
        assert_eq!(p_adic_order(7, 3), Some(0));
    }
}
