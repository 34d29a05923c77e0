use serde::Serialize;

use super::characteristic::{integral, is_s_power_minus_one, Characteristic};
use crate::error::{Error, Result};
use crate::superroots::{
    dot_action, pair_coroot, pair_root, reflect, Perm, Root, SuperRootData, Weight,
};

/// Which rule applies to `(λ, ε)` across an even simple root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum EvenStep {
    /// `(λ, α^∨) = -1`: every `H^k` vanishes.
    Vanishing,
    /// `H^k(λ^ε) ≅ H^{k+1}((s_α.λ)^ε)`.
    DegreeShift {
        pairing: i64,
        target: Weight,
    },
    NoRule {
        pairing: i64,
    },
}

/// Transport across an odd simple root to the adjacent Borel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddStep {
    /// `H^k(B, λ^ε) ≅ H^k(B', (λ-α)^{ε+1})`.
    Transported {
        lambda: Weight,
        parity: u8,
        system: SuperRootData,
    },
    /// `p | (λ, α)`: the isomorphism is not available.
    Refused { pairing: i64 },
}

impl OddStep {
    pub fn is_refused(&self) -> bool {
        matches!(self, OddStep::Refused { .. })
    }
}

fn simple_at(sys: &SuperRootData, position: usize) -> Result<Root> {
    sys.simple_root(position)
}

pub fn even_reflection_step(
    lambda: &Weight,
    _parity: u8,
    position: usize,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<EvenStep> {
    let alpha = simple_at(sys, position)?;
    if alpha.is_odd(sys.dim()) {
        return Err(Error::OddRoot(alpha.to_string()));
    }
    sys.dim().check_len(lambda)?;
    lambda.require_integral()?;
    let pairing = integral(pair_coroot(sys.dim(), lambda, alpha)?)?;
    if pairing == -1 {
        return Ok(EvenStep::Vanishing);
    }
    let licensed = pairing >= 0 && (p.is_zero() || is_s_power_minus_one(pairing, p.value()));
    if !licensed {
        return Ok(EvenStep::NoRule { pairing });
    }
    let root = alpha.to_weight(sys.rank());
    let target = lambda - &root.scale(pairing + 1);
    if target != &reflect(alpha, lambda, sys.dim())? - &root {
        return Err(Error::Invariant(format!(
            "s_α.λ ≠ s_α(λ) - α for α = {alpha}, λ = {lambda}"
        )));
    }
    let s = Perm::transposition(sys.rank(), alpha.i, alpha.j);
    if target != dot_action(&s, lambda, sys)? {
        return Err(Error::Invariant(format!(
            "(ρ, α^∨) ≠ 1 for the even simple root {alpha} of {sys}"
        )));
    }
    Ok(EvenStep::DegreeShift { pairing, target })
}

pub fn odd_adjacency_step(
    lambda: &Weight,
    parity: u8,
    position: usize,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<OddStep> {
    let alpha = simple_at(sys, position)?;
    if !alpha.is_odd(sys.dim()) {
        return Err(Error::EvenRoot(alpha.to_string()));
    }
    sys.dim().check_len(lambda)?;
    let pairing = integral(pair_root(sys.dim(), lambda, alpha)?)?;
    if p.divides_int(pairing) {
        return Ok(OddStep::Refused { pairing });
    }
    let system = sys.odd_reflect(position)?;
    Ok(OddStep::Transported {
        lambda: lambda - &alpha.to_weight(sys.rank()),
        parity: (parity + 1) % 2,
        system,
    })
}
