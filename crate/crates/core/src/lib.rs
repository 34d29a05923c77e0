//! Exact weight and character combinatorics for the general linear supergroup
//! `GL(m|n)`, together with a decision engine for the cohomology of line
//! bundles `H^k(G/B, K_λ^ε)` over Borel supersubgroups in any characteristic.
//!
//! Everything is computed at the level of weights and characters:
//!
//! * [`superroots`] – permutation-indexed super root systems, ρ-vectors,
//!   reflections, the dot action and odd-reflection walks.
//! * [`charring`] – the Laurent-polynomial character ring with alternants,
//!   exact division and the even Weyl character.
//! * [`eulerchar`] – the character of the Euler characteristic `χ(B, λ^ε)`.
//! * [`bbw`] – typicality, chambers, Borel–Bott–Weil and Kempf-type verdicts.
//! * [`gl21`] – the complete `H^0`/`H^1` classifier for `GL(2|1)` over its two
//!   non-standard-type Borels, used as ground truth for the generic engine.
//! * [`selftest`] – the acceptance checks, shared by the test suite and the CLI.
//!
//! All arithmetic is exact. Weights are stored as integer numerators over a
//! fixed denominator 2; character coefficients are arbitrary precision.

pub mod bbw;
pub mod charring;
mod error;
pub mod eulerchar;
pub mod gl21;
pub mod selftest;
pub mod superroots;

pub use bbw::{Chamber, Characteristic, KempfBounds, Provenance, Verdict, VerdictTag};
pub use charring::LaurentPoly;
pub use error::{Error, Result};
pub use eulerchar::EulerCharacter;
pub use gl21::{Gl21Answer, Gl21System};
pub use superroots::{Perm, Root, SuperRootData, Superdim, Weight};
