//! Exact scalars over the rationals, the integers and the residue rings `Z/m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base ring `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    Integers,
    /// `Z/m` with `m >= 2`; build through [`RingSpec::modular`].
    Modular(u64),
}

impl RingSpec {
    pub fn modular(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus {modulus} must be at least 2")));
        }
        Ok(RingSpec::Modular(modulus))
    }

    pub fn is_field(&self) -> bool {
        match *self {
            RingSpec::Rationals => true,
            RingSpec::Integers => false,
            RingSpec::Modular(m) => is_prime(m),
        }
    }

    /// Zero for `Q` and `Z`.
    pub fn characteristic(&self) -> u64 {
        match *self {
            RingSpec::Modular(m) => m,
            _ => 0,
        }
    }

    pub fn two_invertible(&self) -> bool {
        self.from_i64(2).invert().is_ok()
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match *self {
            RingSpec::Rationals => Coefficient::Rational(BigRational::from_integer(n.clone())),
            RingSpec::Integers => Coefficient::Integer(n.clone()),
            RingSpec::Modular(m) => Coefficient::Modular { value: reduce_bigint(n, m), modulus: m },
        }
    }

    /// The class of `num/den`. Over `Z` the quotient must be exact; over `Z/m`
    /// the denominator must be a unit.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            RingSpec::Rationals => Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone()))),
            RingSpec::Integers => {
                let (q, r) = num.div_rem(den);
                if r.is_zero() {
                    Ok(Coefficient::Integer(q))
                } else {
                    Err(Error::NotInvertible(format!("{den} in Z")))
                }
            }
            RingSpec::Modular(_) => {
                let d = self.from_bigint(den);
                let inv = d.invert()?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    /// Parses `3`, `-3` or `3/4` as an element of this ring.
    pub fn parse_coefficient(&self, text: &str) -> Result<Coefficient> {
        let text = text.trim();
        let bad = |m: &str| Error::Syntax { position: 0, message: format!("{m}: `{text}`") };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Modular(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(RingSpec::Rationals),
            "Z" => Ok(RingSpec::Integers),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .and_then(|m| m.trim().parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidRing(format!("`{other}` (expected Q, Z or Z/<m>)")))?;
                RingSpec::modular(m)
            }
        }
    }
}

/// An element of a [`RingSpec`], always in canonical form: rationals in
/// lowest terms with positive denominator, residues in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Integer(BigInt),
    Modular { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn ring(&self) -> RingSpec {
        match self {
            Coefficient::Rational(_) => RingSpec::Rationals,
            Coefficient::Integer(_) => RingSpec::Integers,
            Coefficient::Modular { modulus, .. } => RingSpec::Modular(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Integer(n) => n.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Integer(n) => n.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    /// True for strictly negative rationals and integers; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Integer(n) => n.is_negative(),
            Coefficient::Modular { .. } => false,
        }
    }

    fn check_ring(&self, other: &Coefficient) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring().to_string(), other.ring().to_string()))
        }
    }

    pub fn checked_add(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_ring(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_ring(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_ring(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse. Zero yields [`Error::DivisionByZero`]; a
    /// nonzero non-unit yields [`Error::NotInvertible`].
    pub fn invert(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Coefficient::Rational(r) => Ok(Coefficient::Rational(r.recip())),
            Coefficient::Integer(n) => {
                if n.abs().is_one() {
                    Ok(Coefficient::Integer(n.clone()))
                } else {
                    Err(Error::NotInvertible(format!("{n} in Z")))
                }
            }
            Coefficient::Modular { value, modulus } => match mod_inverse(*value, *modulus) {
                Some(inv) => Ok(Coefficient::Modular { value: inv, modulus: *modulus }),
                None => Err(Error::NotInvertible(self.describe())),
            },
        }
    }

    pub fn checked_div(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_ring(other)?;
        Ok(self * &other.invert()?)
    }

    /// Diagnostic form; residues print as `3 mod 5`.
    pub fn describe(&self) -> String {
        match self {
            Coefficient::Modular { value, modulus } => format!("{value} mod {modulus}"),
            other => other.to_string(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coefficient::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            Coefficient::Rational(_) => None,
            Coefficient::Integer(n) => n.to_i64(),
            Coefficient::Modular { value, .. } => i64::try_from(*value).ok(),
        }
    }
}

fn mismatch(a: &Coefficient, b: &Coefficient) -> ! {
    panic!("coefficient ring mismatch: {} vs {}", a.ring(), b.ring())
}

impl Add for &Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (Coefficient::Modular { value: a, modulus: m }, Coefficient::Modular { value: b, modulus: n }) if m == n => {
                Coefficient::Modular { value: ((*a as u128 + *b as u128) % *m as u128) as u64, modulus: *m }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (Coefficient::Modular { value: a, modulus: m }, Coefficient::Modular { value: b, modulus: n }) if m == n => {
                Coefficient::Modular { value: ((*a as u128 * *b as u128) % *m as u128) as u64, modulus: *m }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::Modular { value, modulus } => {
                Coefficient::Modular { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Integer(n) => write!(f, "{n}"),
            Coefficient::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_bigint(n: &BigInt, m: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
