use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`; panics on `d == 0`, use [`Rat::checked_new`] for untrusted input.
    pub fn new(n: i64, d: i64) -> Self {
        Self::checked_new(n, d).expect("zero denominator")
    }

    pub fn checked_new(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(BigInt::from(n), BigInt::from(d))))
    }

    pub fn from_bigints(n: BigInt, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(n, d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let mut acc = Rat::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `(-1)^k` as a rational.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Rat::one()
        } else {
            Rat::from_int(-1)
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rat::from_bigints(n, d)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = Rat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational string \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
        Ok(Rat::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
        Ok(Rat::from(BigInt::from(v)))
    }

    // Floats are refused outright: nothing in this crate is approximate.
    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Rat, E> {
        Err(E::custom(format!("floating-point value {v} is not accepted; use \"p/q\"")))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

// num-rational normalizes every result with a binary gcd, which is quadratic when one
// side is tiny (often 1) and the other huge. These versions cross-reduce first and
// route lopsided gcds through a remainder step.

fn gcd_u(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_one() || b.is_one() {
        return BigUint::one();
    }
    let (mut x, mut y) = if a >= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    loop {
        if y.is_zero() {
            return x;
        }
        if let Some(s) = y.to_u64() {
            let r = (&x % s).to_u64().expect("remainder fits");
            return BigUint::from(s.gcd(&r));
        }
        if x.bits() > y.bits() + 64 {
            let r = &x % &y;
            x = y;
            y = r;
        } else {
            return x.gcd(&y);
        }
    }
}

fn gcd_i(a: &BigInt, b: &BigInt) -> BigInt {
    BigInt::from(gcd_u(a.magnitude(), b.magnitude()))
}

fn div_exact(a: &BigInt, g: &BigInt) -> BigInt {
    if g.is_one() {
        a.clone()
    } else {
        a / g
    }
}

fn raw(n: BigInt, d: BigInt) -> Rat {
    Rat(BigRational::new_raw(n, d))
}

fn mul_ref(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    let (an, ad, bn, bd) = (a.0.numer(), a.0.denom(), b.0.numer(), b.0.denom());
    let g1 = gcd_i(an, bd);
    let g2 = gcd_i(bn, ad);
    raw(div_exact(an, &g1) * div_exact(bn, &g2), div_exact(ad, &g2) * div_exact(bd, &g1))
}

fn add_ref(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (an, ad, bn, bd) = (a.0.numer(), a.0.denom(), b.0.numer(), b.0.denom());
    if ad.is_one() && bd.is_one() {
        return raw(an + bn, BigInt::one());
    }
    let g = gcd_i(ad, bd);
    if g.is_one() {
        return raw(an * bd + bn * ad, ad * bd);
    }
    let t = an * (bd / &g) + bn * (ad / &g);
    if t.is_zero() {
        return Rat::zero();
    }
    let g2 = gcd_i(&t, &g);
    raw(div_exact(&t, &g2), (ad / &g) * div_exact(bd, &g2))
}

fn sub_ref(a: &Rat, b: &Rat) -> Rat {
    add_ref(a, &-b)
}

fn div_ref(a: &Rat, b: &Rat) -> Rat {
    assert!(!b.is_zero(), "division by zero");
    let (n, d) = (b.0.numer(), b.0.denom());
    let inv = if n.is_negative() { raw(-d, -n) } else { raw(d.clone(), n.clone()) };
    mul_ref(a, &inv)
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $f:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(self, rhs)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(&self, &rhs)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                $f(&self, rhs)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                $f(self, &rhs)
            }
        }
        impl $atr<&Rat> for Rat {
            fn $am(&mut self, rhs: &Rat) {
                *self = $f(self, rhs);
            }
        }
        impl $atr<Rat> for Rat {
            fn $am(&mut self, rhs: Rat) {
                *self = $f(self, &rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, add_ref);
binop!(Sub, sub, SubAssign, sub_assign, sub_ref);
binop!(Mul, mul, MulAssign, mul_assign, mul_ref);
// Division panics on zero like the integer types; fallible callers use `checked_div`.
binop!(Div, div, DivAssign, div_assign, div_ref);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}
