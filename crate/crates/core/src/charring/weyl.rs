use num_bigint::BigInt;

use super::{antisymmetrize, LaurentPoly};
use crate::error::{Error, Result};
use crate::superroots::Weight;
use crate::superroots::{dot_action, length_and_sign, SuperRootData};

/// `∏_{α ∈ Φ⁺_0} (1 - e^{-α})`.
pub fn even_denominator(sys: &SuperRootData) -> LaurentPoly {
    let len = sys.rank();
    let one = LaurentPoly::one(len);
    sys.positive_even().fold(one.clone(), |acc, alpha| {
        &acc * &(&one - &LaurentPoly::exp(&-alpha.to_weight(len)))
    })
}

/// `∏_{α ∈ Φ⁺_1} (1 + e^{-α})`, the character of the odd unipotent coordinate ring.
pub fn odd_numerator(sys: &SuperRootData) -> LaurentPoly {
    let len = sys.rank();
    let one = LaurentPoly::one(len);
    sys.positive_odd().fold(one.clone(), |acc, alpha| {
        &acc * &(&one + &LaurentPoly::exp(&-alpha.to_weight(len)))
    })
}

/// `Σ_{u ∈ W} (-1)^{l(u)} e^{u ·_w λ}` with the dot action of the system.
pub fn dot_alternant(lambda: &Weight, sys: &SuperRootData) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(sys.rank());
    for u in sys.weyl_group() {
        let (_, sign) = length_and_sign(&u, sys)?;
        out.add_term(dot_action(&u, lambda, sys)?, BigInt::from(sign));
    }
    Ok(out)
}

/// The even Euler characteristic with the system's ρ:
/// `e^{-ρ} A(λ + ρ) / ∏_{α ∈ Φ⁺_0}(1 - e^{-α})`, where `A` is the block
/// alternant. Zero when `λ + ρ` is singular.
pub fn weyl_character_even(lambda: &Weight, sys: &SuperRootData) -> Result<LaurentPoly> {
    sys.dim().check_len(lambda)?;
    lambda.require_integral()?;
    let shifted = lambda + sys.rho();
    let alternant = antisymmetrize(&shifted, sys.dim());
    if alternant.is_zero() {
        return Ok(LaurentPoly::zero(sys.rank()));
    }
    let numerator = alternant.shift(&-sys.rho());
    numerator
        .exact_divide(&even_denominator(sys))
        .map_err(|e| match e {
            Error::InexactDivision => Error::Invariant(format!(
                "Weyl numerator for λ = {lambda} is not divisible by the Weyl denominator"
            )),
            other => other,
        })
}
