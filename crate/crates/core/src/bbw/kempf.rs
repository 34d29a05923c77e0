use serde::Serialize;

use super::characteristic::integral;
use crate::error::{Error, Result};
use crate::superroots::{pair_coroot, Root, SuperRootData, Weight};

/// The threshold `k_i` for one even simple root `β_i = ε_i - ε_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KempfBound {
    /// 1-based index `i`, never equal to `m`.
    pub index: usize,
    pub beta: Root,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempfBounds {
    pub bounds: Vec<KempfBound>,
}

impl KempfBounds {
    pub fn get(&self, index: usize) -> Option<usize> {
        self.bounds.iter().find(|b| b.index == index).map(|b| b.k)
    }
}

fn require_standard_even(sys: &SuperRootData) -> Result<()> {
    if !sys.has_standard_even_part() {
        return Err(Error::NonStandardEvenPart(sys.w().to_string()));
    }
    Ok(())
}

/// `β_i` for `i ∈ {1..m+n-1} \ {m}`, as 0-based roots.
fn betas(sys: &SuperRootData) -> Vec<(usize, Root)> {
    let m = sys.dim().m();
    (0..sys.rank().saturating_sub(1))
        .filter(|&i| i + 1 != m)
        .map(|i| (i + 1, Root::new(i, i + 1)))
        .collect()
}

/// `|{γ ∈ Φ⁺_1 : (γ, β^∨) = 1}|`.
pub fn kempf_count(sys: &SuperRootData, beta: Root) -> Result<usize> {
    let dim = sys.dim();
    let coroot_len = sys.rank();
    let mut count = 0;
    for gamma in sys.positive_odd() {
        let pairing = pair_coroot(dim, &gamma.to_weight(coroot_len), beta)?;
        if integral(pairing)? == 1 {
            count += 1;
        }
    }
    Ok(count)
}

/// `n + #{odd letters between i and i+1}` inside the even block,
/// `m + #{even letters between i and i+1}` inside the odd block.
pub fn kempf_closed_form(sys: &SuperRootData, beta: Root) -> usize {
    let dim = sys.dim();
    let pos = sys.w().inverse();
    let (a, b) = (pos.apply(beta.i), pos.apply(beta.j));
    let (lo, hi) = (a.min(b), a.max(b));
    let word = sys.w().images();
    let odd_block = dim.is_odd_index(beta.i);
    let between = word[lo + 1..hi]
        .iter()
        .filter(|&&v| dim.is_odd_index(v) != odd_block)
        .count();
    if odd_block {
        dim.m() + between
    } else {
        dim.n() + between
    }
}

pub fn kempf_bounds(sys: &SuperRootData) -> Result<KempfBounds> {
    require_standard_even(sys)?;
    let mut bounds = Vec::new();
    for (index, beta) in betas(sys) {
        let k = kempf_count(sys, beta)?;
        let closed = kempf_closed_form(sys, beta);
        if k != closed {
            return Err(Error::Invariant(format!(
                "k_{index} on {sys}: count {k}, closed form {closed}"
            )));
        }
        bounds.push(KempfBound { index, beta, k });
    }
    Ok(KempfBounds { bounds })
}

/// `(λ, β_i^∨)` for every `β_i`, paired with its bound.
pub fn kempf_margins(lambda: &Weight, sys: &SuperRootData) -> Result<Vec<(KempfBound, i64)>> {
    sys.dim().check_len(lambda)?;
    let bounds = kempf_bounds(sys)?;
    bounds
        .bounds
        .into_iter()
        .map(|b| Ok((b, integral(pair_coroot(sys.dim(), lambda, b.beta)?)?)))
        .collect()
}

/// `(λ, β_i^∨) ≥ min(m, n)` for all `i`; an exploratory label only.
pub fn conjecture_label(lambda: &Weight, sys: &SuperRootData) -> Result<Option<bool>> {
    if !sys.has_standard_even_part() {
        return Ok(None);
    }
    let floor = sys.dim().m().min(sys.dim().n()) as i64;
    Ok(Some(
        kempf_margins(lambda, sys)?.iter().all(|&(_, x)| x >= floor),
    ))
}
