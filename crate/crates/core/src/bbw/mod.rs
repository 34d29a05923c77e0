//! The cohomology decision engine: typicality, chambers, reflection steps,
//! and verdicts licensed by Borel–Bott–Weil and Kempf-type vanishing.
//!
//! A verdict that no theorem licenses is [`VerdictTag::Undetermined`] with a
//! machine-readable [`Reason`].

mod chamber;
mod characteristic;
mod kempf;
mod steps;
mod structure;
mod verdict;

pub use chamber::{chamber, even_pairings, is_typical, odd_pairings, Chamber};
pub use characteristic::{divides, is_s_power_minus_one, Characteristic};
pub use kempf::{
    conjecture_label, kempf_bounds, kempf_closed_form, kempf_count, kempf_margins, KempfBound,
    KempfBounds,
};
pub use steps::{even_reflection_step, odd_adjacency_step, EvenStep, OddStep};
pub use structure::{
    gl11_h0_structure, one_dim_weight, parabolic_ind_structure, Labelled, Series, Side,
    TwoDimStructure,
};
pub use verdict::{
    all_verdicts, bbw_verdict, check_consistency, compatible, engine_verdict, is_simple_h0,
    kempf_typical_verdict, kempf_verdict, top_degree, Description, Provenance, Reason, Verdict,
    VerdictTag,
};
