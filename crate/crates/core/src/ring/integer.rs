use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Arbitrary-precision integer with an inline fast path.
///
/// Values that fit in an `i64` are always stored as `Small`; only results that
/// overflow are promoted to a heap-allocated `BigInt`. Keeping the
/// representation canonical makes derived equality and hashing sound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => match b.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            },
        }
    }

    pub fn add_ref(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_add(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() + other.to_big())
    }

    pub fn sub_ref(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_sub(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() - other.to_big())
    }

    pub fn mul_ref(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_mul(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_big() * other.to_big())
    }

    pub fn neg_ref(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b.clone()),
        }
    }

    pub fn add_assign_ref(&mut self, other: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, other) {
            if let Some(c) = a.checked_add(*b) {
                *self = Integer::Small(c);
                return;
            }
        }
        *self = Integer::from_big(self.to_big() + other.to_big());
    }

    /// Exact quotient; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Integer) -> Option<Integer> {
        if other.is_zero() {
            return None;
        }
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (r == 0).then_some(Integer::Small(q));
            }
        }
        let (a, b) = (self.to_big(), other.to_big());
        let r = &a % &b;
        r.is_zero().then(|| Integer::from_big(a / b))
    }

    pub fn pow(&self, exp: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..exp {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        self.add_ref(&rhs)
    }
}

impl Sub for Integer {
    type Output = Integer;
    fn sub(self, rhs: Integer) -> Integer {
        self.sub_ref(&rhs)
    }
}

impl Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        self.mul_ref(&rhs)
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        self.neg_ref()
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>().map(Integer::from_big)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Integer::from(i64::MAX);
        let b = a.add_ref(&Integer::ONE);
        assert!(matches!(b, Integer::Big(_)));
        let c = b.sub_ref(&Integer::ONE);
        assert_eq!(c, Integer::Small(i64::MAX));
    }

    #[test]
    fn big_product_roundtrips_through_text() {
        let a = Integer::from(3_000_000_000_i64);
        let p = a.mul_ref(&a).mul_ref(&a);
        let s = p.to_string();
        assert_eq!(s, "27000000000000000000000000000");
        assert_eq!(s.parse::<Integer>().unwrap(), p);
    }

    #[test]
    fn negation_of_min() {
        let m = Integer::from(i64::MIN);
        assert_eq!(m.neg_ref().neg_ref(), m);
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            Integer::from(12).div_exact(&Integer::from(-4)),
            Some(Integer::from(-3))
        );
        assert_eq!(Integer::from(12).div_exact(&Integer::from(5)), None);
    }
}
