//! The character ring `ℤ[e^λ]`: sparse Laurent polynomials with exact
//! division, block alternants and the even Weyl character.

mod alternant;
mod poly;
mod weyl;

pub use alternant::{antisymmetrize, BlockAlternant};
pub use poly::{LaurentPoly, TermJson};
pub use weyl::{dot_alternant, even_denominator, odd_numerator, weyl_character_even};
