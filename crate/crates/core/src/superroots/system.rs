use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{Perm, Weight};
use crate::error::{Error, Result};

/// The superdimension `(m|n)` of the natural representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Superdim {
    m: usize,
    n: usize,
}

impl Superdim {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidSuperdim { m, n });
        }
        Ok(Superdim { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m + n`, the rank of the torus.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// Whether the basis vector with 0-based index `i` is odd.
    pub fn is_odd_index(&self, i: usize) -> bool {
        i >= self.m
    }

    /// `(ε_i, ε_i)`: `+1` on the even block, `-1` on the odd block.
    pub fn form_sign(&self, i: usize) -> i64 {
        if self.is_odd_index(i) {
            -1
        } else {
            1
        }
    }

    pub fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: w.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Superdim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL({}|{})", self.m, self.n)
    }
}

/// The invariant form `(ε_i, ε_j) = δ_ij (-1)^{|v_i|}`.
pub fn bilinear_form(dim: Superdim, a: &Weight, b: &Weight) -> Result<Rational64> {
    dim.check_len(a)?;
    dim.check_len(b)?;
    let quarters: i64 = (0..dim.rank())
        .map(|i| a.halves()[i] * b.halves()[i] * dim.form_sign(i))
        .sum();
    Ok(Rational64::new(quarters, 4))
}

/// The root `ε_i - ε_j` (0-based indices, `i != j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "a root needs two distinct indices");
        Root { i, j }
    }

    pub fn negated(&self) -> Root {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    pub fn is_odd(&self, dim: Superdim) -> bool {
        dim.is_odd_index(self.i) != dim.is_odd_index(self.j)
    }

    pub fn to_weight(&self, len: usize) -> Weight {
        &Weight::unit(len, self.i) - &Weight::unit(len, self.j)
    }

    /// Image under a permutation of indices.
    pub fn permuted(&self, u: &Perm) -> Root {
        Root {
            i: u.apply(self.i),
            j: u.apply(self.j),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `(ε_i - ε_j)^∨ = ε'_i - ε'_j` with `ε'_k = (-1)^{|v_k|} ε_k`.
pub fn coroot(alpha: Root, dim: Superdim) -> Weight {
    let len = dim.rank();
    let mut halves = vec![0; len];
    halves[alpha.i] += 2 * dim.form_sign(alpha.i);
    halves[alpha.j] -= 2 * dim.form_sign(alpha.j);
    Weight::from_halves(halves)
}

/// `(λ, α^∨)`.
pub fn pair_coroot(dim: Superdim, lambda: &Weight, alpha: Root) -> Result<Rational64> {
    bilinear_form(dim, lambda, &coroot(alpha, dim))
}

/// `(λ, α)`.
pub fn pair_root(dim: Superdim, lambda: &Weight, alpha: Root) -> Result<Rational64> {
    bilinear_form(dim, lambda, &alpha.to_weight(dim.rank()))
}

/// `λ - r·v` for an exact rational `r`; the result must stay on the half-lattice.
pub(crate) fn sub_multiple(lambda: &Weight, r: Rational64, v: &Weight) -> Result<Weight> {
    let halves = lambda
        .halves()
        .iter()
        .zip(v.halves())
        .map(|(&l, &x)| {
            let t = r * Rational64::from_integer(x);
            if !t.is_integer() {
                return Err(Error::Invariant(format!(
                    "{r} * {v} leaves the half-integral lattice"
                )));
            }
            Ok(l - t.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Weight::from_halves(halves))
}

/// `w = w0 · w1` with `w0 ∈ S_m × S_n` and `w1^{-1}` increasing on each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub w0: Perm,
    pub w1: Perm,
}

pub fn decompose(w: &Perm, dim: Superdim) -> Result<Decomposition> {
    if w.len() != dim.rank() {
        return Err(Error::DimensionMismatch {
            expected: dim.rank(),
            actual: w.len(),
        });
    }
    let m = dim.m();
    // w1^{-1} sends the k-th block element to the k-th position holding that block.
    let mut w1_inv: Vec<usize> = (0..w.len()).filter(|&pos| w.apply(pos) < m).collect();
    w1_inv.extend((0..w.len()).filter(|&pos| w.apply(pos) >= m));
    let w1_inv = Perm::from_images_unchecked(w1_inv);
    let w0 = w.compose(&w1_inv);
    if !w0.preserves_blocks(m) {
        return Err(Error::Invariant(format!(
            "w0 = {w0} is not block preserving"
        )));
    }
    Ok(Decomposition {
        w0,
        w1: w1_inv.inverse(),
    })
}

/// The root system `Φ_w` of `GL(m|n)` with positive part
/// `Φ⁺_w = {ε_{w(i)} - ε_{w(j)} | i < j}` and all derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperRootData {
    dim: Superdim,
    w: Perm,
    positive: Vec<Root>,
    simple: Vec<Root>,
    rho0: Weight,
    rho1: Weight,
    rho: Weight,
}

impl SuperRootData {
    pub fn new(dim: Superdim, w: Perm) -> Result<Self> {
        if w.len() != dim.rank() {
            return Err(Error::InvalidPermutation {
                len: dim.rank(),
                images: w.one_line(),
            });
        }
        let len = dim.rank();
        let mut positive = Vec::with_capacity(len * (len - 1) / 2);
        for a in 0..len {
            for b in a + 1..len {
                positive.push(Root::new(w.apply(a), w.apply(b)));
            }
        }
        let simple = (0..len - 1)
            .map(|a| Root::new(w.apply(a), w.apply(a + 1)))
            .collect();
        let rho0 = Weight::sum(
            len,
            positive
                .iter()
                .filter(|r| !r.is_odd(dim))
                .map(|r| r.to_weight(len))
                .collect::<Vec<_>>()
                .iter(),
        );
        let rho1 = Weight::sum(
            len,
            positive
                .iter()
                .filter(|r| r.is_odd(dim))
                .map(|r| r.to_weight(len))
                .collect::<Vec<_>>()
                .iter(),
        );
        // ρ = (ρ0 - ρ1)/2: the integer vector ρ0 - ρ1 is exactly the halves of ρ.
        let rho = Weight::from_halves((&rho0 - &rho1).halves().iter().map(|h| h / 2).collect());
        Ok(SuperRootData {
            dim,
            w,
            positive,
            simple,
            rho0,
            rho1,
            rho,
        })
    }

    /// Convenience constructor from a 1-based one-line word.
    pub fn from_word(m: usize, n: usize, word: &[usize]) -> Result<Self> {
        SuperRootData::new(Superdim::new(m, n)?, Perm::from_one_line(word)?)
    }

    pub fn dim(&self) -> Superdim {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.dim.rank()
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    /// `Φ⁺` in the order of position pairs `(a, b)`, `a < b`.
    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn positive_even(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive
            .iter()
            .copied()
            .filter(|r| !r.is_odd(self.dim))
    }

    pub fn positive_odd(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive.iter().copied().filter(|r| r.is_odd(self.dim))
    }

    /// `Π_w`; entry `a` is `ε_{w(a)} - ε_{w(a+1)}`.
    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn simple_root(&self, position: usize) -> Result<Root> {
        self.simple.get(position).copied().ok_or(Error::NotSimple {
            position,
            count: self.simple.len(),
        })
    }

    /// Positions of the odd simple roots.
    pub fn odd_simple_positions(&self) -> Vec<usize> {
        (0..self.simple.len())
            .filter(|&a| self.simple[a].is_odd(self.dim))
            .collect()
    }

    pub fn even_simple_positions(&self) -> Vec<usize> {
        (0..self.simple.len())
            .filter(|&a| !self.simple[a].is_odd(self.dim))
            .collect()
    }

    pub fn is_positive(&self, root: Root) -> bool {
        self.positive.contains(&root)
    }

    pub fn rho0(&self) -> &Weight {
        &self.rho0
    }

    pub fn rho1(&self) -> &Weight {
        &self.rho1
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn decomposition(&self) -> Decomposition {
        decompose(&self.w, self.dim).expect("w has the right degree by construction")
    }

    /// The even simple roots of `Π_w` are simple roots of the even part.
    ///
    /// An even root that is simple in `Φ⁺_w` is always simple in `Φ⁺_0`, so this
    /// is the same as `Π_w` containing `m + n - 2` even roots, i.e. each block
    /// occupies a contiguous run of positions.
    pub fn is_standard(&self) -> bool {
        self.even_simple_positions().len() == self.rank() - 2
    }

    /// `Φ⁺_0` agrees with the even part of the identity system.
    pub fn has_standard_even_part(&self) -> bool {
        self.decomposition().w0.is_identity()
    }

    pub fn even_positive_set(&self) -> BTreeSet<Root> {
        self.positive_even().collect()
    }

    /// Replaces the odd simple root at `position` by its negative, i.e.
    /// `w' = w ∘ (position, position + 1)`.
    pub fn odd_reflect(&self, position: usize) -> Result<SuperRootData> {
        let alpha = self.simple_root(position)?;
        if !alpha.is_odd(self.dim) {
            return Err(Error::EvenRoot(alpha.to_string()));
        }
        let swap = Perm::transposition(self.rank(), position, position + 1);
        let next = SuperRootData::new(self.dim, self.w.compose(&swap))?;
        let expected_rho = &self.rho + &alpha.to_weight(self.rank());
        if next.rho != expected_rho {
            return Err(Error::Invariant(format!(
                "odd reflection through {alpha}: ρ' = {} but ρ + α = {expected_rho}",
                next.rho
            )));
        }
        if next.even_positive_set() != self.even_positive_set() {
            return Err(Error::Invariant(format!(
                "odd reflection through {alpha} changed the even positive roots"
            )));
        }
        Ok(next)
    }

    pub fn check_block_preserving(&self, u: &Perm) -> Result<()> {
        if u.len() != self.rank() || !u.preserves_blocks(self.dim.m()) {
            return Err(Error::NotBlockPreserving(u.to_string()));
        }
        Ok(())
    }

    /// The Weyl group `S_m × S_n`.
    pub fn weyl_group(&self) -> Vec<Perm> {
        Perm::all_block(self.dim.m(), self.dim.n())
    }
}

impl fmt::Display for SuperRootData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} w=[{}]", self.dim, self.w)
    }
}

/// `s_α(λ) = λ - (λ, α^∨) α` for an even root `α`.
pub fn reflect(alpha: Root, lambda: &Weight, dim: Superdim) -> Result<Weight> {
    dim.check_len(lambda)?;
    if alpha.is_odd(dim) {
        return Err(Error::OddRoot(alpha.to_string()));
    }
    let pairing = pair_coroot(dim, lambda, alpha)?;
    sub_multiple(lambda, pairing, &alpha.to_weight(dim.rank()))
}

/// The dot action `u ·_w λ = u(λ + ρ(w)) - ρ(w)`.
pub fn dot_action(u: &Perm, lambda: &Weight, sys: &SuperRootData) -> Result<Weight> {
    sys.check_block_preserving(u)?;
    sys.dim().check_len(lambda)?;
    lambda.require_integral()?;
    let shifted = (lambda + sys.rho()).permuted(u);
    let out = &shifted - sys.rho();
    if !out.is_integral() {
        return Err(Error::Invariant(format!(
            "dot action of {u} on {lambda} left the integral lattice: {out}"
        )));
    }
    Ok(out)
}

/// `l(u) = #{α ∈ Φ⁺_0 : uα ∈ -Φ⁺_0}` and the sign `(-1)^{l(u)}`.
pub fn length_and_sign(u: &Perm, sys: &SuperRootData) -> Result<(usize, i8)> {
    sys.check_block_preserving(u)?;
    let even = sys.even_positive_set();
    let length = even
        .iter()
        .filter(|alpha| even.contains(&alpha.permuted(u).negated()))
        .count();
    Ok((length, if length % 2 == 0 { 1 } else { -1 }))
}

/// A parity function with `p(λ + α) = p(λ) + p(α)`: the sum of the odd-block
/// coordinates modulo 2.
pub fn parity_function(lambda: &Weight, dim: Superdim) -> Result<u8> {
    dim.check_len(lambda)?;
    let ints = lambda.to_ints()?;
    let s: i64 = ints[dim.m()..].iter().sum();
    Ok(s.rem_euclid(2) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(m: usize, n: usize) -> Superdim {
        Superdim::new(m, n).unwrap()
    }

    fn w(m: usize, n: usize, word: &[usize]) -> SuperRootData {
        SuperRootData::from_word(m, n, word).unwrap()
    }

    #[test]
    fn form_on_basis() {
        let d = gl(2, 1);
        let e = |i| Weight::unit(3, i);
        assert_eq!(bilinear_form(d, &e(0), &e(0)).unwrap(), 1.into());
        assert_eq!(bilinear_form(d, &e(2), &e(2)).unwrap(), (-1).into());
        assert_eq!(
            bilinear_form(d, &Weight::zero(3), &Weight::from_ints(&[4, -7, 2])).unwrap(),
            0.into()
        );
        let odd = Root::new(0, 2).to_weight(3);
        assert_eq!(bilinear_form(d, &odd, &odd).unwrap(), 0.into());
        assert!(bilinear_form(d, &e(0), &Weight::zero(2)).is_err());
    }

    #[test]
    fn coroots() {
        let d = gl(2, 1);
        assert_eq!(coroot(Root::new(0, 1), d), Weight::from_ints(&[1, -1, 0]));
        assert_eq!(coroot(Root::new(0, 2), d), Weight::from_ints(&[1, 0, 1]));
        let d11 = gl(1, 1);
        assert_eq!(
            pair_coroot(d11, &Weight::zero(2), Root::new(0, 1)).unwrap(),
            0.into()
        );
    }

    #[test]
    fn superdim_rejects_zero() {
        assert!(Superdim::new(0, 2).is_err());
        assert!(Superdim::new(2, 0).is_err());
    }

    #[test]
    fn gl21_w23_has_zero_rho() {
        let s = w(2, 1, &[1, 3, 2]);
        assert_eq!(s.simple(), &[Root::new(0, 2), Root::new(2, 1)]);
        assert_eq!(s.rho(), &Weight::zero(3));
        assert!(!s.is_standard());
    }

    #[test]
    fn gl22_all_simple_roots_odd() {
        let s = w(2, 2, &[3, 1, 4, 2]);
        assert_eq!(
            s.simple(),
            &[Root::new(2, 0), Root::new(0, 3), Root::new(3, 1)]
        );
        assert_eq!(s.odd_simple_positions(), vec![0, 1, 2]);
    }

    #[test]
    fn gl22_w23_rho1() {
        let s = w(2, 2, &[1, 3, 2, 4]);
        assert_eq!(s.rho1(), &Weight::from_ints(&[2, 0, 0, -2]));
    }

    #[test]
    fn gl11_rho_is_half_integral() {
        let s = w(1, 1, &[1, 2]);
        assert_eq!(s.rho(), &Weight::from_halves(vec![-1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let d = gl(2, 1);
        let id = Perm::identity(3);
        assert_eq!(
            decompose(&id, d).unwrap(),
            Decomposition {
                w0: id.clone(),
                w1: id.clone()
            }
        );
        let w23 = Perm::parse("1,3,2").unwrap();
        assert_eq!(
            decompose(&w23, d).unwrap(),
            Decomposition {
                w0: id.clone(),
                w1: w23.clone()
            }
        );
        for u in Perm::all_block(2, 1) {
            assert_eq!(
                decompose(&u, d).unwrap(),
                Decomposition {
                    w0: u.clone(),
                    w1: id.clone()
                }
            );
        }
    }

    #[test]
    fn reflect_transposes() {
        let d = gl(2, 1);
        let lam = Weight::from_ints(&[3, 1, 0]);
        let a = Root::new(0, 1);
        let r = reflect(a, &lam, d).unwrap();
        assert_eq!(r, Weight::from_ints(&[1, 3, 0]));
        assert_eq!(r, lam.permuted(&Perm::transposition(3, 0, 1)));
        assert_eq!(reflect(a, &r, d).unwrap(), lam);
        let fixed = Weight::from_ints(&[2, 2, 5]);
        assert_eq!(reflect(a, &fixed, d).unwrap(), fixed);
        assert!(matches!(
            reflect(Root::new(0, 2), &lam, d),
            Err(Error::OddRoot(_))
        ));
    }

    #[test]
    fn reflect_odd_block_root() {
        let d = gl(1, 2);
        let lam = Weight::from_ints(&[0, 4, -1]);
        assert_eq!(
            reflect(Root::new(1, 2), &lam, d).unwrap(),
            Weight::from_ints(&[0, -1, 4])
        );
    }

    #[test]
    fn dot_action_basics() {
        let s = w(2, 1, &[1, 3, 2]);
        let lam = Weight::from_ints(&[4, -1, 3]);
        assert_eq!(dot_action(&Perm::identity(3), &lam, &s).unwrap(), lam);
        // ρ = 0, so the dot action is the linear one.
        let swap = Perm::transposition(3, 0, 1);
        assert_eq!(dot_action(&swap, &lam, &s).unwrap(), lam.permuted(&swap));
        assert!(dot_action(&Perm::parse("3,2,1").unwrap(), &lam, &s).is_err());
        assert!(dot_action(&swap, &Weight::from_halves(vec![1, 0, 0]), &s).is_err());
    }

    #[test]
    fn lengths() {
        let s = w(2, 1, &[1, 2, 3]);
        assert_eq!(length_and_sign(&Perm::identity(3), &s).unwrap(), (0, 1));
        let max21 = s
            .weyl_group()
            .iter()
            .map(|u| length_and_sign(u, &s).unwrap().0)
            .max();
        assert_eq!(max21, Some(1));
        let s22 = w(2, 2, &[3, 1, 4, 2]);
        let max22 = s22
            .weyl_group()
            .iter()
            .map(|u| length_and_sign(u, &s22).unwrap().0)
            .max();
        assert_eq!(max22, Some(2));
    }

    #[test]
    fn odd_reflect_examples() {
        let s = w(2, 1, &[1, 3, 2]);
        let t = s.odd_reflect(0).unwrap();
        assert_eq!(t.w(), &Perm::parse("3,1,2").unwrap());
        assert_eq!(t.rho(), &(s.rho() + &Root::new(0, 2).to_weight(3)));
        assert_eq!(t.odd_reflect(0).unwrap(), s);
        let std = w(2, 1, &[1, 2, 3]);
        assert!(matches!(std.odd_reflect(0), Err(Error::EvenRoot(_))));
        assert!(matches!(std.odd_reflect(5), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn parity_examples() {
        let d = gl(2, 1);
        assert_eq!(parity_function(&Weight::zero(3), d).unwrap(), 0);
        assert_eq!(
            parity_function(&Weight::from_ints(&[0, 0, 1]), d).unwrap(),
            1
        );
        assert_eq!(
            parity_function(&Weight::from_ints(&[0, 0, -3]), d).unwrap(),
            1
        );
        assert!(parity_function(&Weight::from_halves(vec![1, 1, 0]), d).is_err());
    }
}
