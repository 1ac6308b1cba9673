//! Deterministic tuple enumeration over candidate lists.
//!
//! When the full cartesian product fits in the budget every tuple is
//! produced in lexicographic order. Otherwise the product of the leading
//! prefixes of each list is produced first (small elements come first in
//! every window), followed by seeded random tuples drawn from the full lists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Enumeration limits shared by every law suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest coordinate size in element windows of infinite carriers.
    pub window: u64,
    /// Maximum number of elements taken from any one carrier.
    pub window_cap: usize,
    /// Maximum number of tuples per law and degree combination.
    pub budget: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { window: 50, window_cap: 4096, budget: 200_000, seed: 0 }
    }
}

impl Bounds {
    pub fn with_window(self, window: u64) -> Self {
        Bounds { window, ..self }
    }

    pub fn with_budget(self, budget: usize) -> Self {
        Bounds { budget, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Bounds { seed, ..self }
    }
}

/// Flat storage of index tuples of a fixed arity.
#[derive(Clone, Debug, Default)]
pub struct TupleSet {
    arity: usize,
    data: Vec<u32>,
    pub exhaustive: bool,
}

impl TupleSet {
    pub fn len(&self) -> usize {
        if self.arity == 0 {
            0
        } else {
            self.data.len() / self.arity
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

/// Stable 64-bit seed derived from a label, so each law samples differently
/// but reproducibly.
pub fn label_seed(base: u64, label: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ base;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Index tuples for lists of the given sizes, at most `budget` of them.
pub fn tuples(sizes: &[usize], budget: usize, seed: u64) -> TupleSet {
    let arity = sizes.len();
    let mut set = TupleSet { arity, data: Vec::new(), exhaustive: true };
    if arity == 0 || sizes.contains(&0) {
        return set;
    }
    let total = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
    match total {
        Some(t) if t <= budget => {
            set.data.reserve(t * arity);
            product(sizes, &mut set.data);
        }
        _ => {
            set.exhaustive = false;
            let root = (budget as f64 * 0.75).powf(1.0 / arity as f64).floor().max(1.0) as usize;
            let prefix: Vec<usize> = sizes.iter().map(|&s| s.min(root)).collect();
            product(&prefix, &mut set.data);
            let have = set.len();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in have..budget.max(have + 1) {
                for &s in sizes {
                    set.data.push(rng.gen_range(0..s) as u32);
                }
            }
        }
    }
    set
}

fn product(sizes: &[usize], out: &mut Vec<u32>) {
    let mut idx = vec![0u32; sizes.len()];
    loop {
        out.extend_from_slice(&idx);
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if (idx[k] as usize) < sizes[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products_are_exhaustive_and_ordered() {
        let s = tuples(&[2, 3], 100, 0);
        assert!(s.exhaustive);
        assert_eq!(s.len(), 6);
        assert_eq!(s.get(0), &[0, 0]);
        assert_eq!(s.get(1), &[0, 1]);
        assert_eq!(s.get(5), &[1, 2]);
    }

    #[test]
    fn large_products_are_budgeted_and_reproducible() {
        let a = tuples(&[1000, 1000, 1000], 5000, 7);
        let b = tuples(&[1000, 1000, 1000], 5000, 7);
        assert!(!a.exhaustive);
        assert_eq!(a.len(), 5000);
        assert_eq!(a.data, b.data);
        assert_eq!(a.get(0), &[0, 0, 0]);
    }

    #[test]
    fn empty_slot_gives_nothing() {
        assert!(tuples(&[3, 0], 10, 0).is_empty());
    }
}
