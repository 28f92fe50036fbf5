//! Coefficient fields: the rationals and prime fields GF(p).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest characteristic accepted for prime fields.
pub const MAX_CHARACTERISTIC: u64 = u32::MAX as u64;

/// A coefficient field, identified by its characteristic.
///
/// Characteristic 0 is the field of rationals; otherwise the field is GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    characteristic: u64,
}

/// A field element. The variant always matches the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_CHARACTERISTIC || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { characteristic: p })
    }

    /// `0` builds the rationals, anything else must be a prime.
    pub fn with_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Coeff {
        if self.is_rational() {
            Coeff::Rational(BigRational::zero())
        } else {
            Coeff::Modular(0)
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        if self.is_rational() {
            Coeff::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = self.characteristic as i128;
            Coeff::Modular((v as i128).rem_euclid(p) as u64)
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        if self.is_rational() {
            Coeff::Rational(BigRational::from_integer(v.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            Coeff::Modular(v.mod_floor(&p).to_u64().unwrap())
        }
    }

    /// Builds `num/den`; fails when the denominator vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_rational() {
            return Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone())));
        }
        let d = self.from_bigint(den);
        match self.inv(&d) {
            Some(di) => Ok(self.mul(&self.from_bigint(num), &di)),
            None => Err(Error::DenominatorDivisibleByPrime(self.characteristic)),
        }
    }

    /// Maps a rational coefficient into this field (identity on matching fields).
    pub fn convert(&self, c: &Coeff) -> Result<Coeff> {
        match c {
            Coeff::Rational(r) => self.from_ratio(r.numer(), r.denom()),
            Coeff::Modular(v) => {
                if self.is_rational() {
                    Ok(self.from_i64(*v as i64))
                } else {
                    Ok(Coeff::Modular(v % self.characteristic))
                }
            }
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => {
                if x.is_integer() && y.is_integer() {
                    return Coeff::Rational(BigRational::from_integer(x.numer() + y.numer()));
                }
                Coeff::Rational(x + y)
            }
            (Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(((*x as u128 + *y as u128) % self.characteristic as u128) as u64)
            }
            _ => unreachable!("coefficients from different fields"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rational(x) => Coeff::Rational(-x),
            Coeff::Modular(x) => {
                if *x == 0 {
                    Coeff::Modular(0)
                } else {
                    Coeff::Modular(self.characteristic - x)
                }
            }
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => {
                // the generic product reduces against unit denominators
                if x.is_integer() && y.is_integer() {
                    return Coeff::Rational(BigRational::from_integer(x.numer() * y.numer()));
                }
                Coeff::Rational(x * y)
            }
            (Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(((*x as u128 * *y as u128) % self.characteristic as u128) as u64)
            }
            _ => unreachable!("coefficients from different fields"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match a {
            Coeff::Rational(x) => Some(Coeff::Rational(x.recip())),
            Coeff::Modular(x) => {
                let p = self.characteristic as i128;
                let g = (*x as i128).extended_gcd(&p);
                Some(Coeff::Modular(g.x.rem_euclid(p) as u64))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduces a coefficient into GF(p) as a plain residue.
    pub fn residue(&self, c: &Coeff, p: u64) -> Result<u64> {
        match c {
            Coeff::Modular(v) => {
                if self.characteristic != p {
                    return Err(Error::FieldMismatch);
                }
                Ok(*v)
            }
            Coeff::Rational(r) => {
                let pb = BigInt::from(p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap();
                let den = r.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::DenominatorDivisibleByPrime(p));
                }
                let inv = mod_inverse(den, p).expect("nonzero residue mod prime");
                Ok(((num as u128 * inv as u128) % p as u128) as u64)
            }
        }
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let g = ((a % p) as i128).extended_gcd(&(p as i128));
    Some(g.x.rem_euclid(p as i128) as u64)
}

impl Coeff {
    /// True when the coefficient prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Modular(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(r) => Some(r),
            Coeff::Modular(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Modular(v) => write!(f, "{v}"),
        }
    }
}
