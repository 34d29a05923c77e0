//! The character of the Euler characteristic
//! `χ(B, λ^ε) = Σ_k (-1)^k [H^k(G/B, K_λ^ε)]`:
//!
//! ```text
//! ch χ(B, λ^ε) = ∏_{Φ⁺_1}(1 + e^{-α}) / ∏_{Φ⁺_0}(1 - e^{-α}) · Σ_{u∈W} (-1)^u e^{u·λ}
//! ```
//!
//! It is computed as the odd numerator times the even Weyl character, and the
//! identity with denominators cleared is checked before a value is returned.

use serde::Serialize;

use crate::charring::{
    dot_alternant, even_denominator, odd_numerator, weyl_character_even, LaurentPoly,
};
use crate::error::{Error, Result};
use crate::superroots::{Perm, SuperRootData, Superdim, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCharacter {
    pub poly: LaurentPoly,
    pub lambda: Weight,
    pub m: usize,
    pub n: usize,
    pub w: Perm,
    /// `ε`; the character does not depend on it.
    pub parity: u8,
}

impl EulerCharacter {
    pub fn system(&self) -> Result<SuperRootData> {
        SuperRootData::new(Superdim::new(self.m, self.n)?, self.w.clone())
    }

    pub fn with_parity(mut self, parity: u8) -> Self {
        self.parity = parity % 2;
        self
    }
}

pub fn chi_character(lambda: &Weight, sys: &SuperRootData) -> Result<EulerCharacter> {
    let even = weyl_character_even(lambda, sys)?;
    let ec = EulerCharacter {
        poly: &odd_numerator(sys) * &even,
        lambda: lambda.clone(),
        m: sys.dim().m(),
        n: sys.dim().n(),
        w: sys.w().clone(),
        parity: 0,
    };
    if !verify_clearing(&ec) {
        return Err(Error::Invariant(format!(
            "χ for λ = {lambda} on {sys} fails the cleared identity"
        )));
    }
    Ok(ec)
}

/// `poly · ∏(1 - e^{-α}) == ∏(1 + e^{-α}) · Σ (-1)^u e^{u·λ}`, term by term.
pub fn verify_clearing(ec: &EulerCharacter) -> bool {
    let Ok(sys) = ec.system() else {
        return false;
    };
    let Ok(alternant) = dot_alternant(&ec.lambda, &sys) else {
        return false;
    };
    if ec.poly.nvars() != sys.rank() {
        return false;
    }
    &ec.poly * &even_denominator(&sys) == &odd_numerator(&sys) * &alternant
}

/// `χ(B, λ) = χ(B', λ - α)` for `B'` odd adjacent to `B` through the simple
/// root at `position`.
pub fn check_odd_invariance(lambda: &Weight, sys: &SuperRootData, position: usize) -> Result<bool> {
    let alpha = sys.simple_root(position)?;
    if !alpha.is_odd(sys.dim()) {
        return Err(Error::EvenRoot(alpha.to_string()));
    }
    let other = sys.odd_reflect(position)?;
    let moved = lambda - &alpha.to_weight(sys.rank());
    Ok(chi_character(lambda, sys)?.poly == chi_character(&moved, &other)?.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn e(c: &[i64]) -> LaurentPoly {
        LaurentPoly::exp(&Weight::from_ints(c))
    }

    #[test]
    fn gl11_is_two_dimensional() {
        let sys = SuperRootData::from_word(1, 1, &[1, 2]).unwrap();
        for lam in [[0, 0], [3, -1], [-2, 5]] {
            let chi = chi_character(&Weight::from_ints(&lam), &sys).unwrap();
            let expected = &e(&lam) + &e(&[lam[0] - 1, lam[1] + 1]);
            assert_eq!(chi.poly, expected);
        }
    }

    #[test]
    fn gl11_zero_weight_by_hand() {
        let sys = SuperRootData::from_word(1, 1, &[1, 2]).unwrap();
        let chi = chi_character(&Weight::zero(2), &sys).unwrap();
        assert_eq!(chi.poly, &LaurentPoly::one(2) + &e(&[-1, 1]));
        assert!(verify_clearing(&chi));
    }

    #[test]
    fn perturbation_is_detected() {
        let sys = SuperRootData::from_word(2, 1, &[1, 3, 2]).unwrap();
        let mut chi = chi_character(&Weight::from_ints(&[2, 0, 1]), &sys).unwrap();
        assert!(verify_clearing(&chi));
        chi.poly = &chi.poly + &LaurentPoly::one(3);
        assert!(!verify_clearing(&chi));
    }

    #[test]
    fn gl21_w23_singular_weight() {
        let sys = SuperRootData::from_word(2, 1, &[1, 3, 2]).unwrap();
        let chi = chi_character(&Weight::from_ints(&[3, 3, -2]), &sys).unwrap();
        assert!(chi.poly.is_zero());
    }

    #[test]
    fn odd_invariance_rejects_even_roots() {
        let sys = SuperRootData::from_word(2, 1, &[1, 2, 3]).unwrap();
        assert!(check_odd_invariance(&Weight::zero(3), &sys, 0).is_err());
        assert!(check_odd_invariance(&Weight::zero(3), &sys, 1).unwrap());
        let _ = BigInt::from(0);
    }
}
