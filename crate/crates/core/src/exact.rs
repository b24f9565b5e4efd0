//! Exact rational scalars.
//!
//! Every quantity the library touches (sides, coordinates, parameters, curve
//! coordinates) is a [`Rational`]. Values are always stored in lowest terms
//! with a positive denominator, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom`, failing when `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Largest bit length among numerator and denominator.
    pub fn height_bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    /// Nonnegative rational square root, if `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = isqrt_exact(self.numer())?;
        let d = isqrt_exact(self.denom())?;
        Some(Rational(BigRational::new_raw(n, d)))
    }

    /// Lossy conversion for rendering. Never used inside the exact core.
    pub fn to_f64(&self) -> f64 {
        // Shift both parts down so the conversion never overflows.
        let shift = self.height_bits().saturating_sub(1000);
        let n = self.numer() >> shift;
        let d = self.denom() >> shift;
        if d.is_zero() {
            return if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        let nf = num_traits::ToPrimitive::to_f64(&n).unwrap_or(f64::NAN);
        let df = num_traits::ToPrimitive::to_f64(&d).unwrap_or(f64::NAN);
        nf / df
    }

    /// Decimal string with `digits` significant digits.
    /// Rounds to `digits` significant digits (half away from zero).
    ///
    /// Plain notation for magnitudes in `[1e-6, 1e15)`, otherwise `d.ddde±k`.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let digits = digits.max(1);
        let v = self.abs();
        let pow10 = |k: i64| {
            let t = Rational::from(BigInt::from(10).pow(k.unsigned_abs() as u32));
            if k < 0 {
                t.recip().expect("nonzero")
            } else {
                t
            }
        };
        // Decimal exponent k with 10^k <= v < 10^(k+1).
        let mut k = self.numer().magnitude().to_string().len() as i64
            - self.denom().to_string().len() as i64;
        while v >= pow10(k + 1) {
            k += 1;
        }
        while v < pow10(k) {
            k -= 1;
        }
        let scaled = &v * pow10(digits as i64 - 1 - k) + Rational::new(1, 2).expect("nonzero");
        let mut m = scaled.numer() / scaled.denom();
        if m == BigInt::from(10).pow(digits as u32) {
            m /= 10;
            k += 1;
        }
        let ds = m.to_string();
        let ds = ds.trim_end_matches('0');
        let sign = if self.is_negative() { "-" } else { "" };
        let body = if (-6..15).contains(&k) {
            if k < 0 {
                format!("0.{}{}", "0".repeat((-k - 1) as usize), ds)
            } else if (ds.len() as i64) <= k + 1 {
                format!("{}{}", ds, "0".repeat((k + 1) as usize - ds.len()))
            } else {
                let (int, frac) = ds.split_at((k + 1) as usize);
                format!("{int}.{frac}")
            }
        } else {
            let (lead, rest) = ds.split_at(1);
            if rest.is_empty() {
                format!("{lead}e{k}")
            } else {
                format!("{lead}.{rest}e{k}")
            }
        };
        format!("{sign}{body}")
    }
}

/// Exact integer square root: `Some(r)` with `r * r == n`, or `None`.
///
/// `Roots::sqrt` is a Newton iteration on big integers; the final product
/// check is what decides.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    // Squares mod 16 are 0, 1, 4, 9.
    let low = n.iter_u32_digits().next().unwrap_or(0) & 15;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational if it is a perfect square.
pub fn is_perfect_square(v: &Rational) -> Option<Rational> {
    v.sqrt_exact()
}

/// Scales a tuple of rationals to coprime integers.
///
/// Returns the unique positive `scale` such that `scale * values` is a tuple
/// of integers with overall gcd 1, together with that tuple.
pub fn gcd_scale(values: &[Rational]) -> Result<(Rational, Vec<BigInt>)> {
    if values.iter().all(Rational::is_zero) {
        return Err(Error::AllZero);
    }
    let lcm_den = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm_den / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let primitives: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
    let scale = Rational(BigRational::new(lcm_den, g));
    Ok((scale, primitives))
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                $assign_trait::$assign_method(&mut self.0, &rhs.0);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                $assign_trait::$assign_method(&mut self.0, rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d` in base 10, with an optional leading minus on `n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let parse_int = |t: &str, allow_minus: bool| -> Result<BigInt> {
            let digits = match t.strip_prefix('-') {
                Some(rest) if allow_minus => rest,
                _ => t,
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, true)?)),
            Some((n, d)) => {
                let n = parse_int(n, true)?;
                let d = parse_int(d, false)?;
                Rational::new(n, d)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for integer-valued rationals in formulas.
pub fn q(n: i64) -> Rational {
    Rational::from(n)
}
