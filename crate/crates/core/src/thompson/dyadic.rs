use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

/// An exact dyadic rational `mantissa / 2^exponent`.
///
/// Canonical form: `exponent == 0` or `mantissa` odd. Zero is `0 / 2^0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(mantissa: i64, exponent: u32) -> Self {
        Self::from_parts(BigInt::from(mantissa), exponent)
    }

    pub fn from_parts(mut mantissa: BigInt, mut exponent: u32) -> Self {
        if mantissa.is_zero() {
            return Dyadic {
                mantissa,
                exponent: 0,
            };
        }
        if exponent > 0 {
            let tz = mantissa.trailing_zeros().unwrap_or(0).min(exponent as u64) as u32;
            mantissa >>= tz;
            exponent -= tz;
        }
        Dyadic { mantissa, exponent }
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Self {
        Dyadic::new(1, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// `self · 2^k`, exact for any sign of `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if k >= 0 {
            let k = k as u64;
            if k <= self.exponent as u64 {
                Self::from_parts(self.mantissa.clone(), self.exponent - k as u32)
            } else {
                Dyadic {
                    mantissa: &self.mantissa << (k - self.exponent as u64),
                    exponent: 0,
                }
            }
        } else {
            let e = self.exponent as i64 - k;
            Self::from_parts(
                self.mantissa.clone(),
                u32::try_from(e).expect("exponent overflow"),
            )
        }
    }

    pub fn half(&self) -> Self {
        self.mul_pow2(-1)
    }

    /// `log2(self / other)` when the quotient of two positive dyadics is a
    /// power of two.
    pub fn log2_ratio(&self, other: &Dyadic) -> Option<i64> {
        if !self.is_positive() || !other.is_positive() {
            return None;
        }
        let (odd_a, tz_a) = odd_part(&self.mantissa);
        let (odd_b, tz_b) = odd_part(&other.mantissa);
        if odd_a != odd_b {
            return None;
        }
        Some((tz_a as i64 - self.exponent as i64) - (tz_b as i64 - other.exponent as i64))
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.exponent)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        (
            &self.mantissa << (e - self.exponent),
            &other.mantissa << (e - other.exponent),
            e,
        )
    }
}

fn odd_part(m: &BigInt) -> (BigInt, u64) {
    let tz = m.trailing_zeros().unwrap_or(0);
    (m >> tz, tz)
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::from_parts(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::from_parts(a - b, e)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl std::ops::Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::from_parts(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `m/2^k`, the wire form.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.mantissa, self.exponent)
    }
}

/// Accepts `m/2^k`, plain `p/q` with `q` a power of two, and integers.
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a dyadic rational: {s:?}"));
        let s = s.trim();
        let Some((num, den)) = s.split_once('/') else {
            return Ok(Dyadic::from_parts(s.parse().map_err(|_| bad())?, 0));
        };
        let m: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den = den.trim();
        if let Some(k) = den.strip_prefix("2^") {
            let k: u32 = k.parse().map_err(|_| bad())?;
            return Ok(Dyadic::from_parts(m, k));
        }
        let q: BigInt = den.parse().map_err(|_| bad())?;
        if !q.is_positive() {
            return Err(bad());
        }
        let (odd, tz) = odd_part(&q);
        if !odd.is_one() {
            // p/q may still be dyadic after reduction, e.g. 3/6
            let g = m.gcd(&odd);
            if g != odd {
                return Err(bad());
            }
            return Ok(Dyadic::from_parts(m / odd, tz as u32));
        }
        Ok(Dyadic::from_parts(m, tz as u32))
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dy(m: i64, e: u32) -> Dyadic {
        Dyadic::new(m, e)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(dy(4, 3), dy(1, 1));
        assert_eq!(dy(4, 3).exponent(), 1);
        assert_eq!(dy(0, 7), Dyadic::zero());
        assert_eq!(dy(6, 0).exponent(), 0);
        assert_eq!(dy(8, 3), Dyadic::one());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&dy(1, 3) + &dy(3, 3), dy(1, 1));
        assert_eq!(&dy(1, 2) - &dy(3, 3), dy(-1, 3));
        assert_eq!(&dy(3, 2) * &dy(1, 1), dy(3, 3));
        assert_eq!(dy(3, 2).mul_pow2(2), dy(3, 0));
        assert_eq!(dy(3, 0).mul_pow2(-2), dy(3, 2));
        assert_eq!(dy(3, 1).mul_pow2(3), dy(12, 0));
        assert!(dy(3, 3) < dy(1, 1));
        assert!(dy(-1, 1) < Dyadic::zero());
    }

    #[test]
    fn power_of_two_ratios() {
        assert_eq!(dy(1, 1).log2_ratio(&dy(1, 3)), Some(2));
        assert_eq!(dy(1, 3).log2_ratio(&dy(1, 2)), Some(-1));
        assert_eq!(dy(6, 0).log2_ratio(&dy(3, 4)), Some(5));
        assert_eq!(dy(3, 2).log2_ratio(&dy(1, 1)), None);
        assert_eq!(dy(-1, 1).log2_ratio(&dy(1, 1)), None);
    }

    #[test]
    fn text_form() {
        assert_eq!(dy(3, 3).to_string(), "3/2^3");
        assert_eq!(Dyadic::zero().to_string(), "0/2^0");
        assert_eq!("3/2^3".parse::<Dyadic>().unwrap(), dy(3, 3));
        assert_eq!("6/16".parse::<Dyadic>().unwrap(), dy(3, 3));
        assert_eq!("3/6".parse::<Dyadic>().unwrap(), dy(1, 1));
        assert_eq!("1".parse::<Dyadic>().unwrap(), Dyadic::one());
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("1/0".parse::<Dyadic>().is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_rationals(a in -1000i64..1000, ea in 0u32..12, b in -1000i64..1000, eb in 0u32..12, k in -8i64..8) {
            let (x, y) = (dy(a, ea), dy(b, eb));
            prop_assert_eq!((&x + &y).to_rational(), x.to_rational() + y.to_rational());
            prop_assert_eq!((&x - &y).to_rational(), x.to_rational() - y.to_rational());
            prop_assert_eq!((&x * &y).to_rational(), x.to_rational() * y.to_rational());
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
            let scaled = x.mul_pow2(k).to_rational();
            let expect = if k >= 0 {
                x.to_rational() * Rational::from_integer(BigInt::from(1i64 << k))
            } else {
                x.to_rational() / Rational::from_integer(BigInt::from(1i64 << -k))
            };
            prop_assert_eq!(scaled, expect);
            prop_assert_eq!(x.to_string().parse::<Dyadic>().unwrap(), x);
        }
    }
}
