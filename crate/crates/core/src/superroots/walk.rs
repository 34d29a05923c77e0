use std::collections::{HashSet, VecDeque};

use super::{Perm, Root, SuperRootData, Weight};
use crate::error::{Error, Result};

/// A chain of odd reflections from a system to a standard one with the same
/// even part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkResult {
    /// The odd simple roots reflected, in order (each simple in the system it
    /// was reflected from).
    pub steps: Vec<Root>,
    /// Positions in the one-line word at which each reflection happened.
    pub positions: Vec<usize>,
    pub end: SuperRootData,
    /// `ρ(end) - ρ(start)`, equal to the sum of the reflected roots.
    pub delta_rho: Weight,
}

impl WalkResult {
    /// Number of odd reflections performed.
    pub fn reflections(&self) -> usize {
        self.steps.len()
    }

    /// Number of Borel subgroups in the chain, endpoints included.
    pub fn borels(&self) -> usize {
        self.steps.len() + 1
    }
}

/// Breadth-first search over odd simple reflections for the nearest standard
/// system; neighbours are explored by increasing position, so the walk is
/// deterministic and of minimal length.
pub fn walk_to_standard(sys: &SuperRootData) -> Result<WalkResult> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: VecDeque<(SuperRootData, Vec<usize>)> = VecDeque::new();
    seen.insert(sys.w().clone());
    queue.push_back((sys.clone(), Vec::new()));

    while let Some((current, path)) = queue.pop_front() {
        if current.is_standard() {
            return finish(sys, current, path);
        }
        for position in current.odd_simple_positions() {
            let next = current.odd_reflect(position)?;
            if seen.insert(next.w().clone()) {
                let mut next_path = path.clone();
                next_path.push(position);
                queue.push_back((next, next_path));
            }
        }
    }
    Err(Error::Invariant(format!(
        "no standard system reachable from {sys} by odd reflections"
    )))
}

fn finish(start: &SuperRootData, end: SuperRootData, positions: Vec<usize>) -> Result<WalkResult> {
    let mut steps = Vec::with_capacity(positions.len());
    let mut current = start.clone();
    for &position in &positions {
        steps.push(current.simple_root(position)?);
        current = current.odd_reflect(position)?;
    }
    let len = start.rank();
    let delta_rho = Weight::sum(
        len,
        steps
            .iter()
            .map(|r| r.to_weight(len))
            .collect::<Vec<_>>()
            .iter(),
    );
    if delta_rho != end.rho() - start.rho() {
        return Err(Error::Invariant(format!(
            "walk from {start}: Σ reflected roots {delta_rho} differs from ρ' - ρ"
        )));
    }
    if start.decomposition().w0 != end.decomposition().w0 {
        return Err(Error::Invariant(format!(
            "walk from {start} changed the even part"
        )));
    }
    Ok(WalkResult {
        steps,
        positions,
        end,
        delta_rho,
    })
}
