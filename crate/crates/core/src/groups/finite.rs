//! Finite groups given by multiplication tables, used to exercise the
//! nilpotency-class-2 checks on nonabelian carriers.

use std::collections::BTreeMap;

use crate::report::{LawReport, LawRun, Outcome, Witness};

/// A finite group with elements `0..order`; element `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Closure of the given permutations (one-line notation on `0..n`).
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Self {
        let n = gens.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..n).collect();
        let mut index = BTreeMap::new();
        let mut elems = vec![id.clone()];
        index.insert(id, 0usize);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let inverse = (0..elems.len())
            .map(|a| (0..elems.len()).find(|&b| table[a][b] == 0).expect("group inverse"))
            .collect();
        FiniteGroup { name: name.to_string(), table, inverse }
    }

    pub fn cyclic(n: usize) -> Self {
        let gen: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(&format!("Z/{n}"), &[gen])
    }

    /// Dihedral group of order 8 acting on the vertices of a square.
    pub fn dihedral8() -> Self {
        Self::from_permutations("D8", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    pub fn symmetric4() -> Self {
        Self::from_permutations("S4", &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// Group law, written additively to match the abelian carriers.
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `[a, b] = -a - b + a + b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let t = self.add(self.neg(a), self.neg(b));
        self.add(self.add(t, a), b)
    }

    pub fn is_central(&self, c: usize) -> bool {
        (0..self.order()).all(|g| self.add(c, g) == self.add(g, c))
    }

    /// Centrality and bilinearity of the commutator over all triples.
    pub fn check_class2(&self) -> LawReport {
        let n = self.order();
        let mut run = LawRun::new("CLASS2", "commutators central and bilinear");
        run.run_items(n * n * n, |i| {
            let (g, h, k) = (i / (n * n), (i / n) % n, i % n);
            let c = self.commutator(h, k);
            if self.commutator(g, c) != 0 {
                return Outcome::Fails(
                    Witness::new(
                        vec![g.to_string(), h.to_string(), k.to_string()],
                        self.commutator(g, c).to_string(),
                        "0",
                    )
                    .clause("[g,[h,k]] = 0"),
                );
            }
            let lhs = self.commutator(self.add(g, h), k);
            let rhs = self.add(self.commutator(g, k), self.commutator(h, k));
            Outcome::compare(&lhs, &rhs, || {
                Witness::new(vec![g.to_string(), h.to_string(), k.to_string()], lhs.to_string(), rhs.to_string())
                    .clause("[g+h,k] = [g,k]+[h,k]")
            })
        });
        run.finish()
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::dihedral8().order(), 8);
        assert_eq!(FiniteGroup::symmetric4().order(), 24);
        assert_eq!(FiniteGroup::cyclic(6).order(), 6);
    }

    #[test]
    fn dihedral_commutator_is_the_central_half_turn() {
        let d = FiniteGroup::dihedral8();
        // brute force: find r, s that do not commute
        let (r, s) = (0..8)
            .flat_map(|a| (0..8).map(move |b| (a, b)))
            .find(|&(a, b)| d.add(a, b) != d.add(b, a))
            .unwrap();
        let c = d.commutator(r, s);
        assert_ne!(c, 0);
        assert_eq!(d.add(c, c), 0);
        assert!(d.is_central(c));
        assert_eq!(d.commutator(r, 0), 0);
    }

    #[test]
    fn class_two_verdicts() {
        assert_eq!(FiniteGroup::cyclic(6).check_class2().status, Status::Pass);
        assert_eq!(FiniteGroup::dihedral8().check_class2().status, Status::Pass);
        assert_eq!(FiniteGroup::symmetric4().check_class2().status, Status::Fail);
    }
}
