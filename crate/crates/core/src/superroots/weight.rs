use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::Perm;
use crate::error::{Error, Result};

/// A weight of the maximal torus with rational coordinates whose denominators
/// divide 2. Stored as integer numerators over the fixed denominator 2.
///
/// The derived order is lexicographic with the first coordinate most
/// significant; the character ring uses it as its monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    halves: Vec<i64>,
}

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight {
            halves: vec![0; len],
        }
    }

    /// The basis weight `ε_i` (0-based).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = Weight::zero(len);
        w.halves[i] = 2;
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            halves: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn from_halves(halves: Vec<i64>) -> Self {
        Weight { halves }
    }

    /// Parses comma separated integers such as `"1,0,-2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight entry {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight::from_ints(&coords))
    }

    pub fn len(&self) -> usize {
        self.halves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }

    pub fn halves(&self) -> &[i64] {
        &self.halves
    }

    pub fn coord(&self, i: usize) -> Rational64 {
        Rational64::new(self.halves[i], 2)
    }

    pub fn coords(&self) -> Vec<Rational64> {
        (0..self.len()).map(|i| self.coord(i)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.halves.iter().all(|h| h % 2 == 0)
    }

    /// Integer coordinates, or an error when some coordinate is a half-integer.
    pub fn to_ints(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NonIntegralWeight(self.to_string()));
        }
        Ok(self.halves.iter().map(|h| h / 2).collect())
    }

    pub fn require_integral(&self) -> Result<()> {
        self.to_ints().map(|_| ())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            halves: self.halves.iter().map(|h| h * k).collect(),
        }
    }

    /// Exact halving; `None` when some numerator is odd.
    pub fn halve(&self) -> Option<Weight> {
        if self.halves.iter().any(|h| h % 2 != 0) {
            return None;
        }
        Some(Weight {
            halves: self.halves.iter().map(|h| h / 2).collect(),
        })
    }

    /// The permuted weight `uλ`, with `u ε_i = ε_{u(i)}`.
    pub fn permuted(&self, u: &Perm) -> Weight {
        assert_eq!(
            u.len(),
            self.len(),
            "permutation degree does not match weight length"
        );
        let mut halves = vec![0; self.len()];
        for (i, &h) in self.halves.iter().enumerate() {
            halves[u.apply(i)] = h;
        }
        Weight { halves }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.same_len(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.same_len(other)?;
        Ok(self - other)
    }

    fn same_len(&self, other: &Weight) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(())
    }

    pub fn sum<'a>(len: usize, items: impl IntoIterator<Item = &'a Weight>) -> Weight {
        items.into_iter().fold(Weight::zero(len), |acc, w| &acc + w)
    }
}

fn fmt_half(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{h}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.halves.iter().map(|&h| fmt_half(h)).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Weight {
    /// Coordinates as exact rational strings, e.g. `["1", "-1/2"]`.
    pub fn to_strings(&self) -> Vec<String> {
        self.halves.iter().map(|&h| fmt_half(h)).collect()
    }

    /// Inverse of [`Weight::to_strings`].
    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Weight> {
        let halves = parts
            .iter()
            .map(|p| {
                let p = p.as_ref().trim();
                let bad = || Error::Parse(format!("bad rational coordinate {p:?}"));
                match p.split_once('/') {
                    None => p.parse::<i64>().map(|x| 2 * x).map_err(|_| bad()),
                    Some((num, "2")) => num.parse::<i64>().map_err(|_| bad()),
                    Some((num, "1")) => num.parse::<i64>().map(|x| 2 * x).map_err(|_| bad()),
                    Some(_) => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { halves })
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(deserializer)?;
        Weight::from_strings(&parts).map_err(serde::de::Error::custom)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "adding weights of different length");
        Weight {
            halves: self
                .halves
                .iter()
                .zip(&rhs.halves)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(
            self.len(),
            rhs.len(),
            "subtracting weights of different length"
        );
        Weight {
            halves: self
                .halves
                .iter()
                .zip(&rhs.halves)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            halves: self.halves.iter().map(|a| -a).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}
