use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The characteristic of the ground field: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    /// `p | a`, with the convention that `0 | a` iff `a = 0`.
    pub fn divides_int(&self, a: i64) -> bool {
        if self.0 == 0 {
            a == 0
        } else {
            a.rem_euclid(self.0 as i64) == 0
        }
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u64 {
    fn from(p: Characteristic) -> u64 {
        p.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `p | a` for an integral rational `a`; non-integers are an error.
pub fn divides(p: Characteristic, a: Rational64) -> Result<bool> {
    Ok(p.divides_int(integral(a)?))
}

pub(crate) fn integral(a: Rational64) -> Result<i64> {
    if !a.is_integer() {
        return Err(Error::NonIntegralPairing(a.to_string()));
    }
    Ok(a.to_integer())
}

/// Whether `a = s·p^k - 1` with `0 < s < p` and `k ≥ 0`.
pub fn is_s_power_minus_one(a: i64, p: u64) -> bool {
    if p < 2 || a < 0 {
        return false;
    }
    let p = p as i64;
    let mut x = a + 1;
    while x % p == 0 {
        x /= p;
    }
    x > 0 && x < p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64) -> Rational64 {
        Rational64::from_integer(a)
    }

    #[test]
    fn zero_divides_only_zero() {
        assert!(!divides(Characteristic::ZERO, r(5)).unwrap());
        assert!(divides(Characteristic::ZERO, r(0)).unwrap());
        assert!(divides(Characteristic::new(3).unwrap(), r(6)).unwrap());
        assert!(divides(Characteristic::new(3).unwrap(), r(-6)).unwrap());
        assert!(!divides(Characteristic::new(5).unwrap(), r(6)).unwrap());
        assert!(divides(Characteristic::ZERO, Rational64::new(1, 2)).is_err());
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(Characteristic::new(4).is_err());
        assert!(Characteristic::new(1).is_err());
        assert!(Characteristic::new(7).is_ok());
    }

    #[test]
    fn s_power_forms() {
        let hits: Vec<i64> = (0..30).filter(|&a| is_s_power_minus_one(a, 5)).collect();
        assert_eq!(hits, vec![0, 1, 2, 3, 4, 9, 14, 19, 24]);
        assert!(!is_s_power_minus_one(7, 5));
        assert!(!is_s_power_minus_one(-1, 5));
    }
}
