use serde::{Deserialize, Serialize};

use super::characteristic::{integral, Characteristic};
use crate::error::Result;
use crate::superroots::{pair_coroot, pair_root, Root, SuperRootData, Weight};

/// Position of `λ + ρ` relative to the fundamental region
/// `0 < (λ + ρ, α^∨) ≤ p` (no upper bound in characteristic 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chamber {
    /// All pairings strictly positive and within the bound.
    InteriorC,
    /// All pairings in `[0, bound]`, at least one zero.
    ClosureMinusC,
    Outside,
}

impl Chamber {
    pub fn is_closed(&self) -> bool {
        !matches!(self, Chamber::Outside)
    }
}

/// `(λ + ρ, α)` for every `α ∈ Φ⁺_1`, in the order of `Φ⁺`.
pub fn odd_pairings(lambda: &Weight, sys: &SuperRootData) -> Result<Vec<(Root, i64)>> {
    sys.dim().check_len(lambda)?;
    let shifted = lambda + sys.rho();
    sys.positive_odd()
        .map(|alpha| Ok((alpha, integral(pair_root(sys.dim(), &shifted, alpha)?)?)))
        .collect()
}

/// `(λ + ρ, α^∨)` for every `α ∈ Φ⁺_0`.
pub fn even_pairings(lambda: &Weight, sys: &SuperRootData) -> Result<Vec<(Root, i64)>> {
    sys.dim().check_len(lambda)?;
    let shifted = lambda + sys.rho();
    sys.positive_even()
        .map(|alpha| Ok((alpha, integral(pair_coroot(sys.dim(), &shifted, alpha)?)?)))
        .collect()
}

/// `p ∤ (λ + ρ, α)` for all `α ∈ Φ⁺_1`.
pub fn is_typical(lambda: &Weight, sys: &SuperRootData, p: Characteristic) -> Result<bool> {
    lambda.require_integral()?;
    Ok(odd_pairings(lambda, sys)?
        .iter()
        .all(|&(_, a)| !p.divides_int(a)))
}

pub fn chamber(lambda: &Weight, sys: &SuperRootData, p: Characteristic) -> Result<Chamber> {
    lambda.require_integral()?;
    let pairings = even_pairings(lambda, sys)?;
    let within = |a: i64| p.is_zero() || a <= p.value() as i64;
    if pairings.iter().all(|&(_, a)| a > 0 && within(a)) {
        Ok(Chamber::InteriorC)
    } else if pairings.iter().all(|&(_, a)| a >= 0 && within(a)) {
        Ok(Chamber::ClosureMinusC)
    } else {
        Ok(Chamber::Outside)
    }
}
