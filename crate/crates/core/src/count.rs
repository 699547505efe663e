//! Exact chain counts.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Number of maximal chains of an interval. Exact and unbounded.
///
/// Serialized as a decimal string so values beyond 2^53 survive JSON.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ChainCount(BigUint);

impl ChainCount {
    pub fn zero() -> Self {
        ChainCount(BigUint::zero())
    }

    pub fn one() -> Self {
        ChainCount(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self / rhs` if the division is exact.
    pub fn checked_div_exact(&self, rhs: &ChainCount) -> Option<ChainCount> {
        if rhs.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        r.is_zero().then_some(ChainCount(q))
    }

    pub fn factorial(n: u64) -> ChainCount {
        ChainCount((1..=n).fold(BigUint::one(), |acc, k| acc * k))
    }

    pub fn pow2(e: u64) -> ChainCount {
        ChainCount(BigUint::one() << e)
    }
}

impl From<u64> for ChainCount {
    fn from(v: u64) -> Self {
        ChainCount(BigUint::from(v))
    }
}

impl From<u128> for ChainCount {
    fn from(v: u128) -> Self {
        ChainCount(BigUint::from(v))
    }
}

impl From<BigUint> for ChainCount {
    fn from(v: BigUint) -> Self {
        ChainCount(v)
    }
}

impl PartialEq<u64> for ChainCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for &ChainCount {
    type Output = ChainCount;
    fn add(self, rhs: &ChainCount) -> ChainCount {
        ChainCount(&self.0 + &rhs.0)
    }
}

impl Mul for &ChainCount {
    type Output = ChainCount;
    fn mul(self, rhs: &ChainCount) -> ChainCount {
        ChainCount(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &ChainCount {
    type Output = ChainCount;
    fn mul(self, rhs: u64) -> ChainCount {
        ChainCount(&self.0 * rhs)
    }
}

impl fmt::Display for ChainCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for ChainCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ChainCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<BigUint>()
            .map(ChainCount)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_beyond_u64() {
        let f = ChainCount::factorial(25);
        assert_eq!(f.to_string(), "15511210043330985984000000");
        assert!(f.to_u64().is_none());
    }

    #[test]
    fn exact_division() {
        let a = ChainCount::from(48u64);
        assert_eq!(a.checked_div_exact(&ChainCount::from(6u64)), Some(8u64.into()));
        assert_eq!(a.checked_div_exact(&ChainCount::from(5u64)), None);
        assert_eq!(a.checked_div_exact(&ChainCount::zero()), None);
    }

    #[test]
    fn json_is_decimal_string() {
        let c = ChainCount::factorial(21);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, "\"51090942171709440000\"");
        let back: ChainCount = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
