//! Exact field elements over the rationals and small prime fields.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest characteristic accepted for prime fields. Root finding over
/// `F_p` is exhaustive, so the characteristic is kept small.
pub const MAX_CHARACTERISTIC: u32 = 1000;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u32 },
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::Field(format!(
                "characteristic {p} exceeds the supported maximum {MAX_CHARACTERISTIC}"
            )));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime { p } => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_rational(&self, q: BigRational) -> Result<Scalar> {
        match *self {
            FieldSpec::Rational => Ok(Scalar::Rational(q)),
            FieldSpec::Prime { p } => {
                let m = BigInt::from(p);
                let num = residue_of(q.numer(), &m);
                let den = residue_of(q.denom(), &m);
                if den == 0 {
                    return Err(Error::ParseScalar {
                        text: q.to_string(),
                        reason: format!("denominator divisible by {p}"),
                    });
                }
                let num = Scalar::Residue { value: num, modulus: p };
                let den = Scalar::Residue { value: den, modulus: p };
                Ok(&num * &den.inv().expect("nonzero residue"))
            }
        }
    }

    /// Parses `"n"` or `"n/d"` (rationals) or a decimal integer (prime
    /// fields; any integer is reduced to its canonical residue).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::ParseScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad("not an integer"))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        if let FieldSpec::Prime { .. } = self {
            if !den.is_one() {
                return Err(bad("prime-field elements are written as integers"));
            }
        }
        self.from_rational(BigRational::new(num, den))
    }

    /// All elements of a prime field in residue order; `None` for the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime { p } => Some((0..p).map(move |value| Scalar::Residue { value, modulus: p })),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

fn residue_of(n: &BigInt, m: &BigInt) -> u32 {
    let r = ((n % m) + m) % m;
    r.to_u32().expect("residue below modulus")
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed
/// by [`BigRational`]); residues are canonical in `[0, p)`. Mixing elements
/// of different fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value),
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Serialized as its canonical decimal string; reading back needs the field.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on rationals, residue order on prime fields.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                (p, a).cmp(&(q, b))
            }
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Less,
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

#[inline]
fn same_modulus(p: u32, q: u32) -> u64 {
    assert_eq!(p, q, "mixed prime fields");
    p as u64
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Residue { value: ((*a as u64 + *b as u64) % m) as u32, modulus: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Residue { value: ((*a as u64 + m - *b as u64) % m) as u32, modulus: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Residue { value: ((*a as u64 * *b as u64) % m) as u32, modulus: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_rejects_composites_and_large_primes() {
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1009).is_err());
    }

    #[test]
    fn rational_formatting_is_canonical() {
        let q = FieldSpec::Rational;
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("4/2").unwrap().to_string(), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.parse("-1").unwrap().to_string(), "6");
        assert_eq!(f.parse("15").unwrap().to_string(), "1");
        assert_eq!(f.from_i64(3).inv().unwrap().to_string(), "5");
        assert!(f.parse("1/2").is_err());
        assert!(f.zero().inv().is_none());
    }

    proptest! {
        #[test]
        fn rational_string_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let q = FieldSpec::Rational;
            let s = q.from_rational(BigRational::new(n.into(), d.into())).unwrap();
            prop_assert_eq!(q.parse(&s.to_string()).unwrap(), s);
        }

        #[test]
        fn residue_string_round_trip(n in -10_000i64..10_000) {
            let f = FieldSpec::prime(997).unwrap();
            let s = f.from_i64(n);
            prop_assert_eq!(f.parse(&s.to_string()).unwrap(), s);
        }

        #[test]
        fn residue_inverse(n in 1i64..997) {
            let f = FieldSpec::prime(997).unwrap();
            let s = f.from_i64(n);
            prop_assert!((&s * &s.inv().unwrap()).is_one());
        }
    }
}
