//! Permutations in one-line notation, composed right to left:
//! `(a * b)(i) = a(b(i))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 0-based one-line notation.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_iter().map(|x| x as u8).collect()))
    }

    /// From 1-based one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("one-based permutation contains 0".into()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The adjacent transposition `(i i+1)`, `1 <= i < n`.
    pub fn transposition(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "transposition index {i} out of range for degree {n}");
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// `τ_{n,m}`: the first block of `n` letters moves past the last block of `m`.
    pub fn block_shuffle(n: usize, m: usize) -> Perm {
        Perm((0..n + m).map(|i| if i < n { (i + m) as u8 } else { (i - n) as u8 }).collect())
    }

    /// `σ × τ`: `σ` on the first letters, `τ` on the remaining ones.
    pub fn cross(&self, other: &Perm) -> Perm {
        let n = self.degree() as u8;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&x| x + n)).collect())
    }

    /// Product of adjacent transpositions along a word of 1-based indices.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Self::identity(n), |p, &i| p.mul(&Self::transposition(n, i)))
    }

    /// Whether `s_i * self` is shorter than `self`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).unwrap();
        pos(i as u8) < pos(i as u8 - 1)
    }

    /// The lexicographically smallest reduced word (1-based generator indices).
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.degree();
        let mut p = self.clone();
        let mut word = Vec::with_capacity(p.length());
        while !p.is_identity() {
            let i = (1..n).find(|&i| p.has_left_descent(i)).expect("non-identity has a descent");
            // s_i * p swaps the values i-1 and i
            for x in p.0.iter_mut() {
                if *x == i as u8 - 1 {
                    *x = i as u8;
                } else if *x == i as u8 {
                    *x = i as u8 - 1;
                }
            }
            word.push(i);
        }
        word
    }

    /// Position of `self` in the lexicographic order of one-line notations.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Perm {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<u8> = (0..n as u8).collect();
        Perm(digits.into_iter().map(|d| avail.remove(d)).collect())
    }

    /// All permutations of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for Perm {
    /// 1-based one-line notation, e.g. `[2 3 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shuffle_and_word() {
        assert_eq!(Perm::block_shuffle(2, 1), Perm::from_word(3, &[1, 2]));
        assert_eq!(Perm::block_shuffle(1, 1), Perm::transposition(2, 1));
        assert!(Perm::block_shuffle(0, 3).is_identity());
    }

    #[test]
    fn cross_places_blocks() {
        let t = Perm::identity(2).cross(&Perm::transposition(2, 1));
        assert_eq!(t, Perm::transposition(4, 3));
    }

    #[test]
    fn braid_word_is_lexicographically_smallest() {
        let p = Perm::from_word(3, &[2, 1, 2]);
        assert_eq!(p.reduced_word(), vec![1, 2, 1]);
    }

    #[test]
    fn rank_round_trip() {
        for (r, p) in Perm::all(4).iter().enumerate() {
            assert_eq!(p.rank(), r);
        }
        let all = Perm::all(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn reduced_words_evaluate_back(r in 0usize..5040) {
            let p = Perm::unrank(7, r);
            let w = p.reduced_word();
            prop_assert_eq!(w.len(), p.length());
            prop_assert_eq!(Perm::from_word(7, &w), p.clone());
            prop_assert_eq!(p.mul(&p.inverse()), Perm::identity(7));
        }

        #[test]
        fn shuffle_commutes_with_cross(r1 in 0usize..6, r2 in 0usize..24) {
            let (s, t) = (Perm::unrank(3, r1), Perm::unrank(4, r2));
            let lhs = Perm::block_shuffle(3, 4).mul(&s.cross(&t));
            let rhs = t.cross(&s).mul(&Perm::block_shuffle(3, 4));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
