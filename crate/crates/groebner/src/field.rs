//! Exact coefficient arithmetic: arbitrary-precision rationals and the prime
//! fields GF(p) for p < 2^63.
//!
//! Elements carry enough information to detect cross-field mixing at runtime;
//! rationals are kept in lowest terms with a positive denominator (the
//! representation `num` maintains), and GF(p) values live in `[0, p)`.

use crate::error::{Error, Result};
use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// Descriptor of the active coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rational,
    /// Integers modulo a prime below 2^63.
    Prime(u64),
}

impl Field {
    /// Validates `p` and returns the prime-field descriptor.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 63 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Prime { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::one()),
            Field::Prime(p) => FieldElement::Prime { value: 1 % p, modulus: *p },
        }
    }

    /// Embeds a signed integer, reducing modulo p in the prime case.
    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = v % &p_big;
                if r.sign() == Sign::Minus {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                let value = digits.first().copied().unwrap_or(0);
                FieldElement::Prime { value, modulus: *p }
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(v))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

/// A single exact coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &FieldElement) -> Error {
        Error::FieldMismatch(format!("{} vs {}", self.field(), other.field()))
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a + b))
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Prime {
                value: addmod(*a, *b, *p),
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a * b))
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Prime {
                value: mulmod(*a, *b, *p),
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldElement::Rational(a) => Ok(FieldElement::Rational(a.recip())),
            FieldElement::Prime { value, modulus } => Ok(FieldElement::Prime {
                value: powmod(*value, *modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.mul(&other.inv()?)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < p < 2^63, so the sum cannot wrap a u64.
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the base set below is exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_requires_prime_modulus() {
        assert_eq!(Field::prime(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(Field::prime(1), Err(Error::NonPrimeModulus(1)));
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(32003).is_ok());
        assert_eq!(Field::prime(1 << 63), Err(Error::ModulusTooLarge(1 << 63)));
    }

    #[test]
    fn primality_spot_checks() {
        let primes = [2u64, 3, 5, 7, 31, 32003, 65537, (1 << 61) - 1];
        for p in primes {
            assert!(is_prime_u64(p), "{p} is prime");
        }
        let composites = [0u64, 1, 4, 9, 91, 32001, 6700417u64 * 3];
        for c in composites {
            assert!(!is_prime_u64(c), "{c} is composite");
        }
    }

    #[test]
    fn gf_values_stay_in_range() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.from_i64(7), f.zero());
        for v in -20..20 {
            if let FieldElement::Prime { value, .. } = f.from_i64(v) {
                assert!(value < 7);
            } else {
                panic!("wrong representation");
            }
        }
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let q = Field::Rational;
        assert_eq!(q.one().div(&q.zero()), Err(Error::DivisionByZero));
        assert_eq!(q.zero().inv(), Err(Error::DivisionByZero));
        let f = Field::prime(13).unwrap();
        assert_eq!(f.from_i64(5).div(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn cross_field_mixing_is_an_error() {
        let q = Field::Rational;
        let f = Field::prime(13).unwrap();
        assert!(matches!(
            q.one().add(&f.one()),
            Err(Error::FieldMismatch(_))
        ));
        let g = Field::prime(7).unwrap();
        assert!(matches!(
            f.one().mul(&g.one()),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rational;
        let half = q.from_i64(2).inv().unwrap();
        if let FieldElement::Rational(r) = &half {
            assert_eq!(r.numer(), &BigInt::from(1));
            assert_eq!(r.denom(), &BigInt::from(2));
        }
        let minus_half = q.from_i64(-3).div(&q.from_i64(6)).unwrap();
        if let FieldElement::Rational(r) = &minus_half {
            // sign on the numerator, denominator positive, lowest terms
            assert_eq!(r.numer(), &BigInt::from(-1));
            assert_eq!(r.denom(), &BigInt::from(2));
        }
    }

    proptest! {
        #[test]
        fn gf_inverse_axiom(a in 1u64..32003) {
            let f = Field::prime(32003).unwrap();
            let x = f.from_i64(a as i64);
            prop_assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), f.one());
        }

        #[test]
        fn rational_inverse_axiom(n in -200i64..200, d in 1i64..200) {
            prop_assume!(n != 0);
            let q = Field::Rational;
            let x = q.from_i64(n).div(&q.from_i64(d)).unwrap();
            prop_assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), q.one());
        }

        #[test]
        fn gf_arithmetic_matches_integers(a in 0u64..7, b in 0u64..7) {
            let f = Field::prime(7).unwrap();
            let (x, y) = (f.from_i64(a as i64), f.from_i64(b as i64));
            prop_assert_eq!(x.add(&y).unwrap(), f.from_i64(((a + b) % 7) as i64));
            prop_assert_eq!(x.mul(&y).unwrap(), f.from_i64(((a * b) % 7) as i64));
            prop_assert_eq!(x.sub(&y).unwrap(), f.from_i64((a as i64) - (b as i64)));
        }
    }
}
