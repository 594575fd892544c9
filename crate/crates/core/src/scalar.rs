//! Exact rational scalars.
//!
//! Values live in a machine-word `Ratio<i64>` while they fit and spill into
//! `BigRational` on overflow, so the common case (small numerators and
//! denominators coming out of blade products) never allocates. A value is
//! stored as `Big` only when it does not fit the small form, which keeps the
//! representation canonical and lets equality and hashing be structural.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

/// An exact rational number with arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(Ratio::zero()))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(Ratio::one()))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_big(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num / den`. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Rational(Repr::Small(Ratio::new_raw(n, d)))
            }
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(r) => r.clone(),
        }
    }

    fn from_small(r: Ratio<i64>) -> Self {
        if *r.numer() == i64::MIN || *r.denom() == i64::MIN {
            Self::from_big(BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
        } else {
            Rational(Repr::Small(r))
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small(r) if r.is_one())
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// True when the value is held in the allocation-free form.
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(_))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplies by a sign in {-1, 0, +1} without a general multiplication.
    pub fn signed(&self, sign: i8) -> Self {
        match sign {
            0 => Self::zero(),
            s if s > 0 => self.clone(),
            _ => -self,
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::from_big(self.to_big().recip())
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b) {
                        return Rational::from_small(r);
                    }
                }
                Rational::from_big(self.to_big() $op rhs.to_big())
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
    };
}

checked_binop!(Add, add, checked_add, +);
checked_binop!(Sub, sub, checked_sub, -);
checked_binop!(Mul, mul, checked_mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational::from_big(self.to_big() / rhs.to_big())
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = &*self - &rhs;
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            // i64::MIN never appears in the small form, so negation cannot overflow.
            Repr::Small(r) => Rational(Repr::Small(-*r)),
            Repr::Big(r) => Rational::from_big(-r.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                // cross-multiply in i128; denominators are positive
                let l = *a.numer() as i128 * *b.denom() as i128;
                let r = *b.numer() as i128 * *a.denom() as i128;
                l.cmp(&r)
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
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

    /// Accepts `n`, `-n`, `p/q`; whitespace around the parts is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = match d {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::from_integer(7).to_string(), "7");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), Rational::new(-3, 2));
        assert_eq!(" 4 / 8 ".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let m = Rational::from_integer(i64::MAX);
        let sq = &m * &m;
        assert!(!sq.is_small());
        assert_eq!(sq.to_big(), big(i64::MAX, 1) * big(i64::MAX, 1));
        let back = &sq / &m;
        assert!(back.is_small());
        assert_eq!(back, m);
        // i64::MIN is kept out of the small form
        let min = &Rational::from_integer(-i64::MAX) - &Rational::one();
        assert!(!min.is_small());
        assert_eq!((-&min).to_big(), -big(-i64::MAX, 1) + big(1, 1));
    }

    #[test]
    fn signed_multiplication() {
        let x = Rational::new(3, 7);
        assert_eq!(x.signed(1), x);
        assert_eq!(x.signed(-1), -&x);
        assert!(x.signed(0).is_zero());
    }

    fn arb() -> impl Strategy<Value = (i64, i64)> {
        prop_oneof![
            (-20i64..20, 1i64..10),
            (any::<i64>().prop_filter("min", |v| *v != i64::MIN), 1i64..i64::MAX),
        ]
    }

    proptest! {
        // The hybrid representation agrees with plain BigRational arithmetic.
        #[test]
        fn agrees_with_bigrational((an, ad) in arb(), (bn, bd) in arb()) {
            let (a, b) = (Rational::new(an, ad), Rational::new(bn, bd));
            let (ba, bb) = (big(an, ad), big(bn, bd));
            prop_assert_eq!((&a + &b).to_big(), &ba + &bb);
            prop_assert_eq!((&a - &b).to_big(), &ba - &bb);
            prop_assert_eq!((&a * &b).to_big(), &ba * &bb);
            prop_assert_eq!(a.cmp(&b), ba.cmp(&bb));
            prop_assert_eq!(Rational::from_big(&ba * &bb), &a * &b);
        }
    }
}
