use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superroots::{Perm, Weight};

/// An element of `ℤ[e^λ]`: a finitely supported map from exponent weights
/// (denominators dividing 2) to nonzero integers.
///
/// Terms are kept in a `BTreeMap` keyed by the lexicographic order on
/// exponents, which is also the monomial order used by [`LaurentPoly::exact_divide`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::monomial(Weight::zero(nvars), BigInt::one())
    }

    /// `c·e^λ`.
    pub fn monomial(exponent: Weight, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero(exponent.len());
        p.add_term(exponent, coeff.into());
        p
    }

    /// `e^λ`.
    pub fn exp(exponent: &Weight) -> Self {
        LaurentPoly::monomial(exponent.clone(), 1)
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Weight, BigInt)>,
    ) -> Result<Self> {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    actual: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn coeff(&self, exponent: &Weight) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// The term with the lexicographically largest exponent.
    pub fn leading_term(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exponent: Weight, coeff: BigInt) {
        assert_eq!(
            exponent.len(),
            self.nvars,
            "exponent length does not match ring"
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                actual: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.try_add(&-other)
    }

    /// Schoolbook product; `O(st)` map insertions for supports of sizes `s`, `t`.
    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_ring(other)?;
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Multiplication by the unit `e^μ`.
    pub fn shift(&self, mu: &Weight) -> LaurentPoly {
        assert_eq!(mu.len(), self.nvars, "shift length does not match ring");
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + mu, c.clone()))
                .collect(),
        }
    }

    /// Applies `u` to every exponent.
    pub fn permuted(&self, u: &Perm) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.permuted(u), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients, i.e. the (virtual) dimension of a character.
    pub fn evaluate_dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Returns `q` with `q·g = self` in the Laurent ring, or
    /// [`Error::InexactDivision`] when no such `q` exists.
    ///
    /// Leading-term division under the lexicographic order. Every exponent of
    /// an exact quotient lies in the coordinate box
    /// `[min(f) - min(g), max(f) - max(g)]` (Newton polytopes add under
    /// multiplication), which bounds the loop; the product is re-checked at
    /// the end.
    pub fn exact_divide(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let (lo_f, hi_f) = self.bounding_box();
        let (lo_g, hi_g) = g.bounding_box();
        let lo: Vec<i64> = lo_f.iter().zip(&lo_g).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_f.iter().zip(&hi_g).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InexactDivision);
        }

        let (g_lead_exp, g_lead_coeff) = g.leading_term().expect("nonzero divisor");
        let mut remainder = self.clone();
        let mut quotient = LaurentPoly::zero(self.nvars);
        while let Some((r_exp, r_coeff)) = remainder
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let (q_coeff, rem) = r_coeff.div_rem(g_lead_coeff);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            let q_exp = &r_exp - g_lead_exp;
            let inside = q_exp
                .halves()
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(x, (a, b))| a <= x && x <= b);
            if !inside {
                return Err(Error::InexactDivision);
            }
            for (e, c) in &g.terms {
                remainder.add_term(e + &q_exp, -(c * &q_coeff));
            }
            quotient.add_term(q_exp, q_coeff);
        }
        if quotient.try_mul(g)? != *self {
            return Err(Error::Invariant(
                "division round trip q·g = f failed".into(),
            ));
        }
        Ok(quotient)
    }

    /// Per-coordinate minimum and maximum of the exponents, in halves.
    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.nvars];
        let mut hi = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (k, &x) in e.halves().iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        (lo, hi)
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "e^{e}")?;
            } else {
                write!(f, "{abs}·e^{e}")?;
            }
        }
        Ok(())
    }
}

/// One term of the canonical JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponent: Weight,
    pub coeff: String,
}

impl LaurentPoly {
    /// Terms sorted by increasing exponent, coefficients as decimal strings.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exponent: e.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[TermJson]) -> Result<LaurentPoly> {
        let parsed = terms
            .iter()
            .map(|t| {
                let c = t
                    .coeff
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exponent.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        LaurentPoly::from_terms(nvars, parsed)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs)
            .expect("adding polynomials over different rings")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs)
            .expect("subtracting polynomials over different rings")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs)
            .expect("multiplying polynomials over different rings")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
