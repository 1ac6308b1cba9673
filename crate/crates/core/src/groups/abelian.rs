//! Finitely generated abelian groups presented as direct sums of cyclic
//! groups, with elements in reduced coordinate normal form.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{IntMatrix, Smith};
use crate::error::{Error, Result};

/// Coordinate vector of an element of an [`AbelianGroup`].
pub type Elem = Vec<BigInt>;

/// `Z/d_1 ⊕ … ⊕ Z/d_r` where an order of `0` stands for a copy of `Z`.
///
/// Coordinates of torsion summands are kept in `0..d`, so two elements are
/// equal exactly when their coordinate vectors are.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    orders: Vec<BigInt>,
    names: Vec<String>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<BigInt>, names: Vec<String>) -> Result<Self> {
        if orders.len() != names.len() {
            return Err(Error::Invalid(format!(
                "{} orders but {} generator names",
                orders.len(),
                names.len()
            )));
        }
        if let Some(d) = orders.iter().find(|d| d.is_negative() || d.is_one()) {
            return Err(Error::Invalid(format!("cyclic order {d} is not 0 or >= 2")));
        }
        Ok(AbelianGroup { orders, names })
    }

    /// Convenience constructor from machine integers; panics on bad input.
    pub fn cyclic(orders: &[u64], names: &[&str]) -> Self {
        Self::new(
            orders.iter().map(|&d| BigInt::from(d)).collect(),
            names.iter().map(|s| s.to_string()).collect(),
        )
        .expect("valid cyclic decomposition")
    }

    pub fn trivial() -> Self {
        AbelianGroup { orders: vec![], names: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|d| !d.is_zero())
    }

    /// Number of elements, or `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        if self.is_finite() {
            Some(self.orders.iter().product())
        } else {
            None
        }
    }

    pub fn zero(&self) -> Elem {
        vec![BigInt::zero(); self.rank()]
    }

    pub fn generator(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = BigInt::one();
        e
    }

    pub fn from_ints(&self, coords: &[i64]) -> Elem {
        assert_eq!(coords.len(), self.rank());
        self.reduce(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Brings arbitrary integer coordinates into normal form.
    pub fn reduce(&self, mut v: Elem) -> Elem {
        debug_assert_eq!(v.len(), self.rank());
        for (x, d) in v.iter_mut().zip(&self.orders) {
            if !d.is_zero() {
                *x = x.mod_floor(d);
            }
        }
        v
    }

    /// Checks that `v` is a normal-form element of this group.
    pub fn check(&self, v: &Elem) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::CarrierMismatch(format!(
                "element has {} coordinates, carrier has rank {}",
                v.len(),
                self.rank()
            )));
        }
        for (x, d) in v.iter().zip(&self.orders) {
            if !d.is_zero() && (x.is_negative() || x >= d) {
                return Err(Error::CarrierMismatch(format!("coordinate {x} not reduced mod {d}")));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.reduce(a.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: &BigInt, a: &Elem) -> Elem {
        self.reduce(a.iter().map(|x| x * k).collect())
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Elem>) -> Elem {
        let mut acc = self.zero();
        for it in items {
            for (x, y) in acc.iter_mut().zip(it) {
                *x += y;
            }
        }
        self.reduce(acc)
    }

    /// Checked addition for elements of unknown provenance.
    pub fn try_add(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Smallest `k > 0` with `k·a = 0`; `None` when `a` has infinite order.
    pub fn element_order(&self, a: &Elem) -> Option<BigInt> {
        let mut acc = BigInt::one();
        for (x, d) in a.iter().zip(&self.orders) {
            if x.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            let o = d / x.gcd(d);
            acc = acc.lcm(&o);
        }
        Some(acc)
    }

    /// Whether `target` lies in the subgroup generated by `gens`.
    pub fn in_span(&self, gens: &[Elem], target: &Elem) -> bool {
        self.span_solver(gens).contains(target)
    }

    /// Precomputed membership test for the subgroup generated by `gens`.
    pub fn span_solver(&self, gens: &[Elem]) -> SpanSolver {
        let r = self.rank();
        let mut cols: Vec<Vec<BigInt>> = gens.to_vec();
        for (i, d) in self.orders.iter().enumerate() {
            if !d.is_zero() {
                let mut c = vec![BigInt::zero(); r];
                c[i] = d.clone();
                cols.push(c);
            }
        }
        SpanSolver { smith: Smith::new(&IntMatrix::from_columns(r, &cols)), ngens: gens.len() }
    }

    /// All elements of the subgroup generated by `gens`, if it has at most `cap` elements.
    pub fn span_elements(&self, gens: &[Elem], cap: usize) -> Option<Vec<Elem>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut frontier = vec![self.zero()];
        seen.insert(self.zero());
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        Some(seen.into_iter().collect())
    }

    /// Elements with every coordinate of "size" at most `bound`, smallest
    /// first, truncated to `cap` elements. A torsion coordinate `c` mod `d`
    /// has size `min(c, d - c)`; an integer coordinate has size `|c|`.
    pub fn window(&self, bound: u64, cap: usize) -> Vec<Elem> {
        let values: Vec<Vec<(u64, BigInt)>> = self
            .orders
            .iter()
            .map(|d| {
                let mut vals = vec![(0u64, BigInt::zero())];
                if d.is_zero() {
                    for k in 1..=bound {
                        vals.push((k, BigInt::from(k)));
                        vals.push((k, -BigInt::from(k)));
                    }
                } else {
                    let dd: u64 = d.try_into().unwrap_or(u64::MAX);
                    for k in 1..dd {
                        let size = k.min(dd - k);
                        if size <= bound {
                            vals.push((size, BigInt::from(k)));
                        }
                    }
                    vals.sort_by_key(|(s, _)| *s);
                }
                vals
            })
            .collect();
        let max_size = values.iter().flat_map(|v| v.iter().map(|(s, _)| *s)).max().unwrap_or(0);
        let mut out = Vec::new();
        for radius in 0..=max_size {
            let mut shell = Vec::new();
            shell_rec(&values, radius, 0, false, &mut Vec::new(), &mut shell);
            for e in shell {
                out.push(self.reduce(e));
                if out.len() >= cap {
                    return out;
                }
            }
        }
        out
    }

    pub fn format(&self, a: &Elem) -> String {
        let mut s = String::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let m = x.abs();
            let name = &self.names[i];
            if !m.is_one() {
                let _ = write!(s, "{m}");
                if name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    s.push('*');
                }
            }
            s.push_str(name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn shell_rec(
    values: &[Vec<(u64, BigInt)>],
    radius: u64,
    idx: usize,
    hit: bool,
    cur: &mut Vec<BigInt>,
    out: &mut Vec<Elem>,
) {
    if idx == values.len() {
        if hit || (radius == 0) {
            out.push(cur.clone());
        }
        return;
    }
    for (size, v) in &values[idx] {
        if *size > radius {
            continue;
        }
        cur.push(v.clone());
        shell_rec(values, radius, idx + 1, hit || *size == radius, cur, out);
        cur.pop();
    }
}

/// Subgroup membership via a cached Smith decomposition.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    smith: Smith,
    ngens: usize,
}

impl SpanSolver {
    pub fn contains(&self, target: &Elem) -> bool {
        self.smith.solve(target).is_some()
    }

    /// Integer coefficients on the generators expressing `target`, if any.
    pub fn coefficients(&self, target: &Elem) -> Option<Vec<BigInt>> {
        self.smith.solve(target).map(|mut v| {
            v.truncate(self.ngens);
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_and_integer_addition() {
        let z4 = AbelianGroup::cyclic(&[4], &["g"]);
        assert_eq!(z4.add(&z4.from_ints(&[3]), &z4.from_ints(&[2])), z4.from_ints(&[1]));
        let z = AbelianGroup::cyclic(&[0], &["g"]);
        assert!(z.is_zero(&z.add(&z.from_ints(&[2]), &z.from_ints(&[-2]))));
        let mixed = AbelianGroup::cyclic(&[0, 2], &["a", "b"]);
        let x = mixed.from_ints(&[1, 1]);
        assert_eq!(mixed.add(&x, &x), mixed.from_ints(&[2, 0]));
    }

    #[test]
    fn mismatched_elements_are_reported() {
        let z4 = AbelianGroup::cyclic(&[4], &["g"]);
        let bad = vec![BigInt::from(1), BigInt::from(0)];
        assert!(matches!(z4.try_add(&bad, &z4.zero()), Err(Error::CarrierMismatch(_))));
        assert!(z4.check(&vec![BigInt::from(7)]).is_err());
    }

    #[test]
    fn window_is_small_first_and_complete() {
        let g = AbelianGroup::cyclic(&[0, 3], &["a", "b"]);
        let w = g.window(2, usize::MAX);
        assert_eq!(w.len(), 5 * 3);
        assert_eq!(w[0], g.zero());
        let w1: std::collections::BTreeSet<_> = w.iter().cloned().collect();
        assert_eq!(w1.len(), w.len());
    }

    #[test]
    fn span_membership() {
        let g = AbelianGroup::cyclic(&[0, 6], &["a", "b"]);
        let gens = vec![g.from_ints(&[2, 2])];
        assert!(g.in_span(&gens, &g.from_ints(&[4, 4])));
        assert!(g.in_span(&gens, &g.from_ints(&[0, 0])));
        assert!(!g.in_span(&gens, &g.from_ints(&[1, 0])));
        assert!(!g.in_span(&gens, &g.from_ints(&[0, 2])));
        let z6 = AbelianGroup::cyclic(&[6], &["c"]);
        let sub = z6.span_elements(&[z6.from_ints(&[4])], 100).unwrap();
        assert_eq!(sub.len(), 3);
    }

    #[test]
    fn formatting_uses_generator_names() {
        let g = AbelianGroup::cyclic(&[0, 0], &["p", "q"]);
        assert_eq!(g.format(&g.from_ints(&[1, 1])), "p+q");
        assert_eq!(g.format(&g.from_ints(&[0, -2])), "-2q");
        assert_eq!(g.format(&g.zero()), "0");
    }
}
