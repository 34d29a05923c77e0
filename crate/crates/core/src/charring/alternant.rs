use num_bigint::BigInt;

use super::LaurentPoly;
use crate::superroots::{Perm, Superdim, Weight};

/// `Σ_{u ∈ S_m × S_n} sign(u) e^{uμ}`.
///
/// Zero exactly when `μ` repeats a coordinate inside one of the two blocks.
pub fn antisymmetrize(mu: &Weight, dim: Superdim) -> LaurentPoly {
    assert_eq!(
        mu.len(),
        dim.rank(),
        "weight length does not match superdimension"
    );
    if has_block_repeat(mu, dim) {
        return LaurentPoly::zero(dim.rank());
    }
    let mut out = LaurentPoly::zero(dim.rank());
    for u in Perm::all_block(dim.m(), dim.n()) {
        out.add_term(mu.permuted(&u), BigInt::from(u.sign()));
    }
    out
}

fn has_block_repeat(mu: &Weight, dim: Superdim) -> bool {
    let h = mu.halves();
    let repeats = |block: &[i64]| {
        let mut v = block.to_vec();
        v.sort_unstable();
        v.windows(2).any(|p| p[0] == p[1])
    };
    repeats(&h[..dim.m()]) || repeats(&h[dim.m()..])
}

/// An alternant together with the sign relating it to the alternant of the
/// block-sorted (strictly decreasing) representative of `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockAlternant {
    pub mu: Weight,
    pub value: LaurentPoly,
    /// `None` when the alternant vanishes.
    pub sign: Option<i8>,
}

impl BlockAlternant {
    pub fn new(mu: &Weight, dim: Superdim) -> Self {
        let value = antisymmetrize(mu, dim);
        let sign = if value.is_zero() {
            None
        } else {
            Some(sorting_sign(mu, dim))
        };
        BlockAlternant {
            mu: mu.clone(),
            value,
            sign,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign.is_none()
    }
}

/// Sign of the block permutation taking `μ` to its decreasing rearrangement.
fn sorting_sign(mu: &Weight, dim: Superdim) -> i8 {
    let h = mu.halves();
    let inversions = |block: &[i64]| {
        let mut count = 0usize;
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                if block[i] < block[j] {
                    count += 1;
                }
            }
        }
        count
    };
    if (inversions(&h[..dim.m()]) + inversions(&h[dim.m()..])) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_block_coordinate_vanishes() {
        let d = Superdim::new(2, 1).unwrap();
        assert!(antisymmetrize(&Weight::from_ints(&[4, 4, -1]), d).is_zero());
        // Equal coordinates across blocks do not cancel.
        assert!(!antisymmetrize(&Weight::from_ints(&[4, 3, 4]), d).is_zero());
    }

    #[test]
    fn two_element_group() {
        let d = Superdim::new(2, 1).unwrap();
        let a = antisymmetrize(&Weight::from_ints(&[1, 0, 7]), d);
        let expected = &LaurentPoly::exp(&Weight::from_ints(&[1, 0, 7]))
            - &LaurentPoly::exp(&Weight::from_ints(&[0, 1, 7]));
        assert_eq!(a, expected);
    }

    #[test]
    fn gl11_single_term() {
        let d = Superdim::new(1, 1).unwrap();
        let mu = Weight::from_halves(vec![3, -5]);
        assert_eq!(antisymmetrize(&mu, d), LaurentPoly::exp(&mu));
    }

    #[test]
    fn sign_tracks_sorting() {
        let d = Superdim::new(3, 1).unwrap();
        let sorted = BlockAlternant::new(&Weight::from_ints(&[5, 2, 0, 1]), d);
        let swapped = BlockAlternant::new(&Weight::from_ints(&[2, 5, 0, 1]), d);
        assert_eq!(sorted.sign, Some(1));
        assert_eq!(swapped.sign, Some(-1));
        assert_eq!(swapped.value, -sorted.value.clone());
        assert!(BlockAlternant::new(&Weight::from_ints(&[2, 2, 0, 1]), d).is_zero());
    }
}
