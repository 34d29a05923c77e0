use std::fmt;

use serde::Serialize;

use super::characteristic::{integral, Characteristic};
use crate::error::{Error, Result};
use crate::superroots::{pair_root, SuperRootData, Superdim, Weight};

/// `λ = (a, …, a, b, …, b)` with `p | a + b` (so `b = -a` when `p = 0`):
/// the weights of one-dimensional `G`-supermodules.
pub fn one_dim_weight(lambda: &Weight, dim: Superdim, p: Characteristic) -> Result<bool> {
    dim.check_len(lambda)?;
    let ints = lambda.to_ints()?;
    let (even, odd) = ints.split_at(dim.m());
    let a = even[0];
    let b = odd[0];
    Ok(even.iter().all(|&x| x == a) && odd.iter().all(|&x| x == b) && p.divides_int(a + b))
}

/// Which side of a two-dimensional induced module a label refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `GL(1|1)` over `B⁻_id`; weights `λ, λ-α`.
    Minus,
    /// `GL(1|1)` over `B⁺_id`; weights `λ, λ+α`.
    Plus,
    /// `ind_B^{P(α)}` over the given Borel.
    Parabolic,
    /// `ind_{B'}^{P(α)}` over the odd-adjacent Borel.
    ParabolicAdjacent,
}

/// A module named by a weight and a parity, e.g. the socle `L_-(λ^ε)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Labelled {
    pub side: Side,
    pub weight: Weight,
    pub parity: u8,
}

impl fmt::Display for Labelled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.side {
            Side::Minus => "-",
            Side::Plus => "+",
            Side::Parabolic => "P",
            Side::ParabolicAdjacent => "P'",
        };
        write!(f, "{name}({}^{})", self.weight, self.parity)
    }
}

/// A length-two composition series, `top` over `bottom` (the socle).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Series {
    pub top: Labelled,
    pub bottom: Labelled,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{} over L{}", self.top, self.bottom)
    }
}

/// A two-dimensional induced module: its weight table, simplicity, and
/// either an isomorphism (simple case) or composition series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoDimStructure {
    pub weights: [Weight; 2],
    pub parities: [u8; 2],
    /// The pairing whose divisibility by `p` decides simplicity.
    pub pairing: i64,
    pub simple: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic_to: Option<Labelled>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<Series>,
}

impl TwoDimStructure {
    pub fn dimension(&self) -> usize {
        2
    }
}

fn flip(parity: u8) -> u8 {
    (parity + 1) % 2
}

/// `H^0_±(λ^ε)` for `GL(1|1)`.
pub fn gl11_h0_structure(
    lambda: &Weight,
    parity: u8,
    side: Side,
    p: Characteristic,
) -> Result<TwoDimStructure> {
    if lambda.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: lambda.len(),
        });
    }
    let ints = lambda.to_ints()?;
    let degree = ints[0] + ints[1];
    let alpha = Weight::from_ints(&[1, -1]);
    let parity = parity % 2;
    let other = match side {
        Side::Minus => lambda - &alpha,
        Side::Plus => lambda + &alpha,
        _ => return Err(Error::Parse(format!("{side:?} is not a GL(1|1) side"))),
    };
    let simple = !p.divides_int(degree);
    let mut out = TwoDimStructure {
        weights: [lambda.clone(), other.clone()],
        parities: [parity, flip(parity)],
        pairing: degree,
        simple,
        isomorphic_to: None,
        series: Vec::new(),
    };
    let label = |side, weight: &Weight, parity| Labelled {
        side,
        weight: weight.clone(),
        parity,
    };
    match (side, simple) {
        (Side::Plus, true) => out.isomorphic_to = Some(label(Side::Minus, &other, flip(parity))),
        (_, false) => out.series.push(Series {
            top: label(side, &other, flip(parity)),
            bottom: label(side, lambda, parity),
        }),
        _ => {}
    }
    Ok(out)
}

/// `ind_B^{P(α)} K_λ^ε` for an odd simple root `α`.
pub fn parabolic_ind_structure(
    lambda: &Weight,
    parity: u8,
    position: usize,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<TwoDimStructure> {
    let alpha = sys.simple_root(position)?;
    if !alpha.is_odd(sys.dim()) {
        return Err(Error::EvenRoot(alpha.to_string()));
    }
    sys.dim().check_len(lambda)?;
    let root = alpha.to_weight(sys.rank());
    let pairing = integral(pair_root(sys.dim(), lambda, alpha)?)?;
    let parity = parity % 2;
    let lower = lambda - &root;
    let simple = !p.divides_int(pairing);
    let label = |side, weight: &Weight, parity| Labelled {
        side,
        weight: weight.clone(),
        parity,
    };
    let mut out = TwoDimStructure {
        weights: [lambda.clone(), lower.clone()],
        parities: [parity, flip(parity)],
        pairing,
        simple,
        isomorphic_to: None,
        series: Vec::new(),
    };
    if simple {
        out.isomorphic_to = Some(label(Side::ParabolicAdjacent, &lower, flip(parity)));
    } else {
        out.series.push(Series {
            top: label(Side::Parabolic, &lower, flip(parity)),
            bottom: label(Side::Parabolic, lambda, parity),
        });
        out.series.push(Series {
            top: label(Side::ParabolicAdjacent, &(lambda + &root), flip(parity)),
            bottom: label(Side::ParabolicAdjacent, lambda, parity),
        });
    }
    Ok(out)
}
