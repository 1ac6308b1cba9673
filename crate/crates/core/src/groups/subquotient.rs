//! Subquotients `N / D` of an abelian carrier, put in invariant-factor form
//! with explicit class and section maps. Homology groups are built this way.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abelian::{AbelianGroup, Elem};
use super::maps::Hom;
use super::matrix::{IntMatrix, Smith};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: AbelianGroup,
    /// Columns form a basis of the numerator lattice in `ℤ^rank`.
    basis: IntMatrix,
    basis_solver: Smith,
    relations: Smith,
    /// Indices `i` of the relation decomposition that survive (`dᵢ ≠ 1`).
    kept: Vec<usize>,
    /// Sign flips making each generator's representative read positively.
    signs: Vec<BigInt>,
    group: AbelianGroup,
}

fn lattice_generators(ambient: &AbelianGroup, gens: &[Elem]) -> Vec<Vec<BigInt>> {
    let r = ambient.rank();
    let mut cols: Vec<Vec<BigInt>> = gens.to_vec();
    for (i, d) in ambient.orders().iter().enumerate() {
        if !d.is_zero() {
            let mut c = vec![BigInt::zero(); r];
            c[i] = d.clone();
            cols.push(c);
        }
    }
    cols
}

/// Generators (as integer vectors in source coordinates) of the kernel of `f`.
pub fn hom_kernel(src: &AbelianGroup, tgt: &AbelianGroup, f: &Hom) -> Vec<Elem> {
    let mut cols = f.images.clone();
    for (i, d) in tgt.orders().iter().enumerate() {
        if !d.is_zero() {
            let mut c = vec![BigInt::zero(); tgt.rank()];
            c[i] = d.clone();
            cols.push(c);
        }
    }
    if cols.is_empty() {
        return (0..src.rank()).map(|i| src.generator(i)).collect();
    }
    let smith = Smith::new(&IntMatrix::from_columns(tgt.rank(), &cols));
    smith.kernel_basis().into_iter().map(|mut v| {
        v.truncate(src.rank());
        v
    }).collect()
}

/// Whether `f` is an isomorphism.
pub fn hom_is_iso(src: &AbelianGroup, tgt: &AbelianGroup, f: &Hom) -> bool {
    let injective = hom_kernel(src, tgt, f).into_iter().all(|k| src.is_zero(&src.reduce(k)));
    let solver = tgt.span_solver(&f.images);
    let surjective = (0..tgt.rank()).all(|i| solver.contains(&tgt.generator(i)));
    injective && surjective
}

impl Subquotient {
    /// `⟨numerator⟩ / ⟨denominator⟩` inside `ambient`, where both lists are
    /// integer vectors and the relations of `ambient` are added to each.
    pub fn new(ambient: &AbelianGroup, numerator: &[Elem], denominator: &[Elem], prefix: &str) -> Result<Self> {
        let r = ambient.rank();
        let num = lattice_generators(ambient, numerator);
        let den = lattice_generators(ambient, denominator);
        let basis_cols = if num.is_empty() {
            vec![]
        } else {
            Smith::new(&IntMatrix::from_columns(r, &num)).image_basis()
        };
        let basis = IntMatrix::from_columns(r, &basis_cols);
        let basis_solver = Smith::new(&basis);
        let t = basis_cols.len();
        let mut rel_cols = Vec::new();
        for g in &den {
            let c = basis_solver
                .solve(g)
                .ok_or_else(|| Error::Invalid("denominator not contained in numerator".into()))?;
            rel_cols.push(c);
        }
        let relations = Smith::new(&IntMatrix::from_columns(t, &rel_cols));
        let kept: Vec<usize> = (0..t)
            .filter(|&i| i >= relations.diag.len() || !relations.diag[i].is_one())
            .collect();
        let orders: Vec<BigInt> = kept
            .iter()
            .map(|&i| relations.diag.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect();
        let mut sq = Subquotient {
            ambient: ambient.clone(),
            basis,
            basis_solver,
            relations,
            signs: vec![BigInt::one(); kept.len()],
            kept,
            group: AbelianGroup::trivial(),
        };
        let mut names = Vec::new();
        for k in 0..sq.kept.len() {
            let mut c = vec![BigInt::zero(); sq.kept.len()];
            c[k] = BigInt::one();
            let rep = sq.section(&c);
            if rep.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                sq.signs[k] = -BigInt::one();
            }
            let rep = sq.section(&c);
            let s = ambient.format(&rep);
            names.push(if s.contains(['+', '-']) || s == "0" { format!("{prefix}[{s}]") } else { s });
        }
        sq.group = AbelianGroup::new(orders, names)?;
        Ok(sq)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.basis_solver.solve(x).is_some()
    }

    /// Class of an element of the numerator.
    pub fn class(&self, x: &Elem) -> Result<Elem> {
        let w = self
            .basis_solver
            .solve(x)
            .ok_or_else(|| Error::Invalid(format!("{} is not a cycle", self.ambient.format(x))))?;
        let y = self.relations.u.mul_vec(&w);
        let c: Elem = self.kept.iter().zip(&self.signs).map(|(&i, s)| &y[i] * s).collect();
        Ok(self.group.reduce(c))
    }

    /// A representative of a class.
    pub fn section(&self, c: &Elem) -> Elem {
        let t = self.basis.cols();
        let mut y = vec![BigInt::zero(); t];
        for ((&i, s), v) in self.kept.iter().zip(&self.signs).zip(c) {
            y[i] = v * s;
        }
        let w = self.relations.u_inv.mul_vec(&y);
        let x = if t == 0 { self.ambient.zero() } else { self.basis.mul_vec(&w) };
        self.ambient.reduce(x)
    }

    /// Whether `x` lies in the denominator.
    pub fn is_zero_class(&self, x: &Elem) -> bool {
        self.class(x).map(|c| self.group.is_zero(&c)).unwrap_or(false)
    }
}

/// `Coker(f)` for `f: src → tgt`.
pub fn cokernel(src_images: &[Elem], tgt: &AbelianGroup, prefix: &str) -> Result<Subquotient> {
    let all: Vec<Elem> = (0..tgt.rank()).map(|i| tgt.generator(i)).collect();
    Subquotient::new(tgt, &all, src_images, prefix)
}

/// `Ker(f)` for `f: src → tgt`.
pub fn kernel(src: &AbelianGroup, tgt: &AbelianGroup, f: &Hom, prefix: &str) -> Result<Subquotient> {
    Subquotient::new(src, &hom_kernel(src, tgt, f), &[], prefix)
}

/// Gcd-style helper: `x mod d` in `0..d`, or `x` when `d = 0`.
pub fn reduce_mod(x: &BigInt, d: &BigInt) -> BigInt {
    if d.is_zero() {
        x.clone()
    } else {
        x.mod_floor(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Elem {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cokernel_of_multiplication_by_two() {
        let z = AbelianGroup::cyclic(&[0], &["1"]);
        let q = cokernel(&[ints(&[2])], &z, "h").unwrap();
        assert_eq!(q.group().orders(), &[BigInt::from(2)]);
        assert_eq!(q.class(&ints(&[3])).unwrap(), ints(&[1]));
        assert_eq!(q.section(&ints(&[1])), ints(&[1]));
    }

    #[test]
    fn kernel_with_torsion() {
        // ∂: Z ⊕ Z → Z, p ↦ z, q ↦ 0
        let src = AbelianGroup::cyclic(&[0, 0], &["p", "q"]);
        let tgt = AbelianGroup::cyclic(&[0], &["z"]);
        let f = Hom::from_ints(&tgt, &[&[1], &[0]]);
        let k = kernel(&src, &tgt, &f, "h").unwrap();
        assert_eq!(k.group().orders(), &[BigInt::zero()]);
        assert_eq!(k.group().names(), &["q".to_string()]);
        assert_eq!(k.class(&ints(&[0, -3])).unwrap(), ints(&[-3]));
        assert!(k.class(&ints(&[1, 0])).is_err());
    }

    #[test]
    fn kernel_modulo_torsion_target() {
        // Z/4 → Z/2 reduction has kernel generated by 2
        let src = AbelianGroup::cyclic(&[4], &["a"]);
        let tgt = AbelianGroup::cyclic(&[2], &["b"]);
        let f = Hom::from_ints(&tgt, &[&[1]]);
        let k = kernel(&src, &tgt, &f, "h").unwrap();
        assert_eq!(k.group().orders(), &[BigInt::from(2)]);
        assert_eq!(k.section(&ints(&[1])), ints(&[2]));
    }

    #[test]
    fn isomorphism_detection() {
        let z6 = AbelianGroup::cyclic(&[6], &["a"]);
        let z2z3 = AbelianGroup::cyclic(&[2, 3], &["b", "c"]);
        assert!(hom_is_iso(&z6, &z2z3, &Hom::from_ints(&z2z3, &[&[1, 1]])));
        assert!(!hom_is_iso(&z6, &z2z3, &Hom::from_ints(&z2z3, &[&[1, 0]])));
        let z = AbelianGroup::cyclic(&[0], &["x"]);
        assert!(!hom_is_iso(&z, &z, &Hom::from_ints(&z, &[&[2]])));
        assert!(hom_is_iso(&z, &z, &Hom::from_ints(&z, &[&[-1]])));
    }
}
