//! Homomorphisms, bilinear maps and quadratic maps between abelian carriers,
//! all stored by their values on generators.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::abelian::{AbelianGroup, Elem};
use crate::error::{Error, Result};

/// `n(n-1)/2` for any integer `n`.
pub fn binom2(n: &BigInt) -> BigInt {
    n * (n - BigInt::one()) / 2
}

/// A homomorphism given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hom {
    pub images: Vec<Elem>,
}

impl Hom {
    pub fn zero(src: &AbelianGroup, tgt: &AbelianGroup) -> Self {
        Hom { images: vec![tgt.zero(); src.rank()] }
    }

    pub fn identity(g: &AbelianGroup) -> Self {
        Hom { images: (0..g.rank()).map(|i| g.generator(i)).collect() }
    }

    /// Integer matrix with entries reduced into the target.
    pub fn from_ints(tgt: &AbelianGroup, cols: &[&[i64]]) -> Self {
        Hom { images: cols.iter().map(|c| tgt.from_ints(c)).collect() }
    }

    pub fn apply(&self, tgt: &AbelianGroup, x: &Elem) -> Elem {
        let mut acc = tgt.zero();
        for (xi, img) in x.iter().zip(&self.images) {
            if xi.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(img) {
                if !b.is_zero() {
                    *a += xi * b;
                }
            }
        }
        tgt.reduce(acc)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &Hom, tgt: &AbelianGroup) -> Hom {
        Hom { images: self.images.iter().map(|v| after.apply(tgt, v)).collect() }
    }

    /// Shape, normal form, and compatibility with the torsion of the source.
    pub fn check(&self, src: &AbelianGroup, tgt: &AbelianGroup, what: &str) -> Result<()> {
        if self.images.len() != src.rank() {
            return Err(Error::Invalid(format!(
                "{what}: {} images for {} source generators",
                self.images.len(),
                src.rank()
            )));
        }
        for (i, img) in self.images.iter().enumerate() {
            tgt.check(img).map_err(|e| Error::Invalid(format!("{what}: image of {}: {e}", src.names()[i])))?;
            let d = &src.orders()[i];
            if !d.is_zero() && !tgt.is_zero(&tgt.scale(d, img)) {
                return Err(Error::Invalid(format!(
                    "{what}: not well defined, generator {} has order {d} but its image does not",
                    src.names()[i]
                )));
            }
        }
        Ok(())
    }
}

/// A bilinear map `A × B → C` given on pairs of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bilinear {
    /// `table[i][j]` is the value on (generator i of A, generator j of B).
    pub table: Vec<Vec<Elem>>,
}

impl Bilinear {
    pub fn zero(a: &AbelianGroup, b: &AbelianGroup, c: &AbelianGroup) -> Self {
        Bilinear { table: vec![vec![c.zero(); b.rank()]; a.rank()] }
    }

    pub fn apply(&self, tgt: &AbelianGroup, x: &Elem, y: &Elem) -> Elem {
        let mut acc = tgt.zero();
        for (xi, row) in x.iter().zip(&self.table) {
            if xi.is_zero() {
                continue;
            }
            for (yj, v) in y.iter().zip(row) {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (a, b) in acc.iter_mut().zip(v) {
                    if !b.is_zero() {
                        *a += &c * b;
                    }
                }
            }
        }
        tgt.reduce(acc)
    }

    /// `x ↦ β(x, y)` for fixed `y`, as a homomorphism.
    pub fn right_fixed(&self, tgt: &AbelianGroup, y: &Elem) -> Hom {
        Hom {
            images: self
                .table
                .iter()
                .map(|row| {
                    let h = Hom { images: row.clone() };
                    h.apply(tgt, y)
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn check(&self, a: &AbelianGroup, b: &AbelianGroup, c: &AbelianGroup, what: &str) -> Result<()> {
        if self.table.len() != a.rank() || self.table.iter().any(|r| r.len() != b.rank()) {
            return Err(Error::Invalid(format!("{what}: table shape does not match carriers")));
        }
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                c.check(v).map_err(|e| Error::Invalid(format!("{what}: entry ({i},{j}): {e}")))?;
                for d in [&a.orders()[i], &b.orders()[j]] {
                    if !d.is_zero() && !c.is_zero(&c.scale(d, v)) {
                        return Err(Error::Invalid(format!(
                            "{what}: not well defined on ({}, {}), torsion order {d}",
                            a.names()[i],
                            b.names()[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A quadratic map on an abelian group, determined by its values on the
/// generators and its (symmetric) crossed effect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticMap {
    pub values: Vec<Elem>,
    pub pairing: Bilinear,
}

impl QuadraticMap {
    pub fn zero(src: &AbelianGroup, tgt: &AbelianGroup) -> Self {
        QuadraticMap { values: vec![tgt.zero(); src.rank()], pairing: Bilinear::zero(src, src, tgt) }
    }

    /// `H(Σ xᵢgᵢ) = Σ xᵢH(gᵢ) + Σ binom(xᵢ,2)(gᵢ|gᵢ) + Σ_{i<j} xᵢxⱼ(gᵢ|gⱼ)`.
    pub fn eval(&self, tgt: &AbelianGroup, x: &Elem) -> Elem {
        let mut acc = tgt.zero();
        let mut add = |k: &BigInt, v: &Elem| {
            if k.is_zero() {
                return;
            }
            for (a, b) in acc.iter_mut().zip(v) {
                if !b.is_zero() {
                    *a += k * b;
                }
            }
        };
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            add(&x[i], &self.values[i]);
            add(&binom2(&x[i]), &self.pairing.table[i][i]);
            for j in (i + 1)..x.len() {
                if !x[j].is_zero() {
                    add(&(&x[i] * &x[j]), &self.pairing.table[i][j]);
                }
            }
        }
        tgt.reduce(acc)
    }

    /// The crossed effect `(x|y)`.
    pub fn cross(&self, tgt: &AbelianGroup, x: &Elem, y: &Elem) -> Elem {
        self.pairing.apply(tgt, x, y)
    }

    pub fn check(&self, src: &AbelianGroup, tgt: &AbelianGroup, what: &str) -> Result<()> {
        if self.values.len() != src.rank() {
            return Err(Error::Invalid(format!("{what}: expected {} generator values", src.rank())));
        }
        for v in &self.values {
            tgt.check(v).map_err(|e| Error::Invalid(format!("{what}: {e}")))?;
        }
        if self.pairing.table.len() != src.rank() || self.pairing.table.iter().any(|r| r.len() != src.rank()) {
            return Err(Error::Invalid(format!("{what}: crossed-effect table shape does not match carrier")));
        }
        let n = src.rank();
        for i in 0..n {
            for j in 0..n {
                if self.pairing.table[i][j] != self.pairing.table[j][i] {
                    return Err(Error::Invalid(format!(
                        "{what}: crossed effect not symmetric on ({}, {})",
                        src.names()[i],
                        src.names()[j]
                    )));
                }
            }
        }
        for i in 0..n {
            let d = &src.orders()[i];
            if d.is_zero() {
                continue;
            }
            let g = src.generator(i);
            let mut lifted = g.clone();
            lifted[i] += d;
            // the closed form evaluated on unreduced coordinates
            if self.eval(tgt, &lifted) != self.eval(tgt, &g) {
                return Err(Error::Invalid(format!(
                    "{what}: not well defined on generator {} of order {d}: H(g + {d}g) != H(g)",
                    src.names()[i]
                )));
            }
        }
        self.pairing.check(src, src, tgt, what)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zsigma_h() -> (AbelianGroup, AbelianGroup, QuadraticMap) {
        let z = AbelianGroup::cyclic(&[0], &["1"]);
        let h = QuadraticMap { values: vec![z.from_ints(&[0])], pairing: Bilinear { table: vec![vec![z.from_ints(&[1])]] } };
        (z.clone(), z, h)
    }

    #[test]
    fn triangular_numbers() {
        let (src, tgt, h) = zsigma_h();
        for n in -20i64..=20 {
            assert_eq!(h.eval(&tgt, &src.from_ints(&[n])), tgt.from_ints(&[n * (n - 1) / 2]));
        }
    }

    #[test]
    fn crossed_effect_is_the_bilinearized_defect() {
        let (src, tgt, h) = zsigma_h();
        let (x, y) = (src.from_ints(&[2]), src.from_ints(&[3]));
        let defect = tgt.sub(&tgt.sub(&h.eval(&tgt, &src.add(&x, &y)), &h.eval(&tgt, &y)), &h.eval(&tgt, &x));
        assert_eq!(defect, tgt.from_ints(&[6]));
        assert_eq!(h.cross(&tgt, &x, &y), defect);
    }

    #[test]
    fn torsion_well_definedness() {
        let z4 = AbelianGroup::cyclic(&[4], &["g"]);
        let z = AbelianGroup::cyclic(&[0], &["e"]);
        let bad = QuadraticMap { values: vec![z.from_ints(&[0])], pairing: Bilinear { table: vec![vec![z.from_ints(&[1])]] } };
        let err = bad.check(&z4, &z, "H").unwrap_err();
        assert!(err.to_string().contains("generator g"));
        let z2 = AbelianGroup::cyclic(&[2], &["e"]);
        let ok = QuadraticMap { values: vec![z2.from_ints(&[1])], pairing: Bilinear { table: vec![vec![z2.from_ints(&[0])]] } };
        assert!(ok.check(&z4, &z2, "H").is_ok());
    }

    #[test]
    fn hom_torsion_check() {
        let z2 = AbelianGroup::cyclic(&[2], &["a"]);
        let z = AbelianGroup::cyclic(&[0], &["b"]);
        assert!(Hom::from_ints(&z, &[&[1]]).check(&z2, &z, "f").is_err());
        assert!(Hom::from_ints(&z2, &[&[1]]).check(&z, &z2, "f").is_ok());
    }
}
