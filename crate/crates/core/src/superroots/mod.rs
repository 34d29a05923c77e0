//! Permutation-indexed super root systems of `GL(m|n)`.
//!
//! A Borel supersubgroup is indexed by `w ∈ S_{m+n}` and carries the positive
//! system `Φ⁺_w = {ε_{w(i)} - ε_{w(j)} | i < j}`. Indices are 0-based in code;
//! the first `m` basis vectors are even, the remaining `n` odd.

mod perm;
mod system;
mod walk;
mod weight;

pub use perm::Perm;
pub use system::{
    bilinear_form, coroot, decompose, dot_action, length_and_sign, pair_coroot, pair_root,
    parity_function, reflect, Decomposition, Root, SuperRootData, Superdim,
};
pub use walk::{walk_to_standard, WalkResult};
pub use weight::Weight;
