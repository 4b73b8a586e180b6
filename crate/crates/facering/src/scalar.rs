//! Exact coefficient arithmetic over the supported fields: the rationals
//! (characteristic 0) and prime fields `F_p`.
//!
//! No floating point is used anywhere. A [`Scalar`] is either an
//! arbitrary-precision rational or a residue modulo `p`; all operations go
//! through a [`FieldSpec`], which supplies the characteristic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),
    #[error("cannot parse `{text}` as an element of {field}")]
    Parse { text: String, field: FieldSpec },
    #[error("division by zero in {0}")]
    DivisionByZero(FieldSpec),
}

/// The coefficient field, identified by its characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Modular product without overflow for any 64-bit modulus.
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<Self, ScalarError> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(ScalarError::InvalidCharacteristic(characteristic))
        }
    }

    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(ScalarError::InvalidCharacteristic(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_char_zero(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            p => Scalar::Residue((n as i128).rem_euclid(p as i128) as u64),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let p = self.characteristic as u128;
                Scalar::Residue(((*x as u128 + *y as u128) % p) as u64)
            }
            _ => panic!("mixed scalar representations in {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Residue(x) => {
                let p = self.characteristic;
                Scalar::Residue(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, self.characteristic))
            }
            _ => panic!("mixed scalar representations in {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, ScalarError> {
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero(*self));
        }
        Ok(match a {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Residue(x) => {
                let p = self.characteristic;
                Scalar::Residue(pow_mod(*x, p - 2, p))
            }
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `(-1)^e` in this field; trivial in characteristic 2.
    pub fn sign(&self, e: usize) -> Scalar {
        if e.is_multiple_of(2) {
            self.one()
        } else {
            self.from_integer(-1)
        }
    }

    /// Parses the textual form produced by `Display`: an integer or a
    /// fraction `a/b`, reduced into the field.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let text = text.trim();
        let err = || ScalarError::Parse {
            text: text.to_string(),
            field: *self,
        };
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let num = BigInt::from_str(num_str.trim()).map_err(|_| err())?;
        let den = match den_str {
            Some(d) => {
                let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                d
            }
            None => BigInt::one(),
        };
        match self.characteristic {
            0 => Ok(Scalar::Rational(BigRational::new(num, den))),
            p => {
                let reduce = |n: &BigInt| -> u64 {
                    let m = n % BigInt::from(p);
                    let m = if m.is_negative() {
                        m + BigInt::from(p)
                    } else {
                        m
                    };
                    u64::try_from(m).expect("residue fits in u64")
                };
                let n = Scalar::Residue(reduce(&num));
                let d = Scalar::Residue(reduce(&den));
                self.div(&n, &d)
            }
        }
    }
}

/// An exact field element: rational in characteristic 0, residue mod `p`
/// otherwise. Residues are kept reduced to `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(x) => *x == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Residue(x) => write!(f, "{x}"),
        }
    }
}
