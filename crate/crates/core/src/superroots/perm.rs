use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., len}` stored in one-line notation.
///
/// Internally 0-based: `images[i]` is `w(i + 1) - 1`. Composition follows
/// functions, `(w ∘ v)(i) = w(v(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(len: usize) -> Self {
        Perm {
            images: (0..len).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line word.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let len = word.len();
        let mut seen = vec![false; len];
        for &x in word {
            if x == 0 || x > len || seen[x - 1] {
                return Err(Error::InvalidPermutation {
                    len,
                    images: word.to_vec(),
                });
            }
            seen[x - 1] = true;
        }
        Ok(Perm {
            images: word.iter().map(|x| x - 1).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(
            Perm::from_one_line(&images.iter().map(|x| x + 1).collect::<Vec<_>>()).is_ok()
        );
        Perm { images }
    }

    /// Parses a comma separated one-line word such as `"1,3,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let word = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_one_line(&word)
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(len: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..len).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Whether the permutation maps `{0..m}` onto itself (and hence the
    /// complement onto itself), i.e. lies in `S_m × S_n`.
    pub fn preserves_blocks(&self, m: usize) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| (i < m) == (x < m))
    }

    /// All permutations of `{0..len}` in lexicographic order of one-line words.
    pub fn all(len: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..len).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }

    /// All elements of `S_m × S_n` acting on `{0..m+n}`.
    pub fn all_block(m: usize, n: usize) -> Vec<Perm> {
        let left = Perm::all(m);
        let right = Perm::all(n);
        let mut out = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                let mut images = a.images.clone();
                images.extend(b.images.iter().map(|x| x + m));
                out.push(Perm { images });
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", words.join(","))
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_one_line(&word).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::from_one_line(&[1, 1, 2]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert!(Perm::from_one_line(&[1, 4, 2]).is_err());
        assert!(Perm::parse("1,x").is_err());
    }

    #[test]
    fn composition_is_functional() {
        let w = Perm::parse("2,3,1").unwrap();
        let v = Perm::parse("1,3,2").unwrap();
        let wv = w.compose(&v);
        for i in 0..3 {
            assert_eq!(wv.apply(i), w.apply(v.apply(i)));
        }
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn counts() {
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(0).len(), 1);
        assert_eq!(Perm::all_block(2, 3).len(), 12);
        assert!(Perm::all_block(2, 3).iter().all(|u| u.preserves_blocks(2)));
    }

    #[test]
    fn sign_of_transposition() {
        assert_eq!(Perm::transposition(4, 1, 3).sign(), -1);
        assert_eq!(Perm::identity(4).sign(), 1);
    }
}
