//! Quadratic pair modules `C_ee --P--> C₁ --∂--> C₀ --H--> C_ee` over
//! abelian carriers: evaluation, axioms and derived identities, homology,
//! the k-invariant and morphisms.

use num_bigint::BigInt;

use crate::enumerate::Bounds;
use crate::error::{Error, Result};
use crate::groups::{cokernel, hom_is_iso, kernel, AbelianGroup, Elem, Hom, QuadraticMap, SpanSolver, Subquotient};
use crate::report::{LawReport, LawRun, Outcome, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qpm {
    pub c0: AbelianGroup,
    pub c1: AbelianGroup,
    pub cee: AbelianGroup,
    pub boundary: Hom,
    pub h: QuadraticMap,
    pub p: Hom,
}

/// `h₀ = Coker ∂` and `h₁ = Ker ∂` with their class and section maps.
#[derive(Clone, Debug)]
pub struct Homology {
    pub h0: Subquotient,
    pub h1: Subquotient,
}

impl Qpm {
    /// Builds a module after checking shapes and that `∂`, `P` and `H` are well defined.
    /// The axioms themselves are checked by [`Qpm::check_axioms`].
    pub fn new(
        c0: AbelianGroup,
        c1: AbelianGroup,
        cee: AbelianGroup,
        boundary: Hom,
        h: QuadraticMap,
        p: Hom,
    ) -> Result<Self> {
        boundary.check(&c1, &c0, "boundary")?;
        p.check(&cee, &c1, "P")?;
        h.check(&c0, &cee, "H")?;
        Ok(Qpm { c0, c1, cee, boundary, h, p })
    }

    pub fn zero() -> Self {
        let t = AbelianGroup::trivial();
        Qpm {
            boundary: Hom::zero(&t, &t),
            h: QuadraticMap::zero(&t, &t),
            p: Hom::zero(&t, &t),
            c0: t.clone(),
            c1: t.clone(),
            cee: t,
        }
    }

    pub fn d(&self, s: &Elem) -> Elem {
        self.boundary.apply(&self.c0, s)
    }

    pub fn pp(&self, a: &Elem) -> Elem {
        self.p.apply(&self.c1, a)
    }

    pub fn hh(&self, x: &Elem) -> Elem {
        self.h.eval(&self.cee, x)
    }

    /// `(x₁|x₂)_H = H(x₁+x₂) - H(x₂) - H(x₁)`, evaluated through `H`.
    pub fn cross(&self, x1: &Elem, x2: &Elem) -> Elem {
        let s = self.hh(&self.c0.add(x1, x2));
        let s = self.cee.sub(&s, &self.hh(x2));
        self.cee.sub(&s, &self.hh(x1))
    }

    /// `H∂P`.
    pub fn hdp(&self, a: &Elem) -> Elem {
        self.hh(&self.d(&self.pp(a)))
    }

    /// `T = H∂P - 1`.
    pub fn t(&self, a: &Elem) -> Elem {
        self.cee.sub(&self.hdp(a), a)
    }

    /// `Δ(x) = (x|x)_H - H(x) + TH(x)`.
    pub fn delta(&self, x: &Elem) -> Elem {
        let hx = self.hh(x);
        let s = self.cee.sub(&self.cross(x, x), &hx);
        self.cee.add(&s, &self.t(&hx))
    }

    /// Solver for preimages under `∂`.
    pub fn boundary_solver(&self) -> SpanSolver {
        self.c0.span_solver(&self.boundary.images)
    }

    /// Some `s` with `∂s = x`, if `x` is a boundary.
    pub fn preimage(&self, solver: &SpanSolver, x: &Elem) -> Option<Elem> {
        solver.coefficients(x).map(|c| self.c1.reduce(c))
    }

    pub fn homology(&self) -> Result<Homology> {
        Ok(Homology {
            h0: cokernel(&self.boundary.images, &self.c0, "h0")?,
            h1: kernel(&self.c1, &self.c0, &self.boundary, "h1")?,
        })
    }

    /// `x·η = P(x|x)_H` on a representative of the class `x ∈ h₀`, as an `h₁` class.
    pub fn k_invariant(&self, hom: &Homology, class: &Elem) -> Result<Elem> {
        let x = hom.h0.section(class);
        hom.h1.class(&self.pp(&self.cross(&x, &x)))
    }

    pub fn windows(&self, b: &Bounds) -> Windows {
        Windows {
            c0: self.c0.window(b.window, b.window_cap),
            c1: self.c1.window(b.window, b.window_cap),
            cee: self.cee.window(b.window, b.window_cap),
        }
    }

    /// Axioms M1–M4 and the derived identities D1–D8.
    pub fn check_axioms(&self, bounds: &Bounds) -> Vec<LawReport> {
        let w = self.windows(bounds);
        let (c0, c1, cee) = (&self.c0, &self.c1, &self.cee);
        let f0 = |x: &Elem| c0.format(x);
        let f1 = |x: &Elem| c1.format(x);
        let fe = |x: &Elem| cee.format(x);
        let mut out = Vec::new();

        let mut run = LawRun::new("M1", "PH∂P(a) = P(a)+P(a)");
        run.run_over(&[&w.cee], bounds, |v| {
            let a = v[0];
            let lhs = self.pp(&self.hdp(a));
            let pa = self.pp(a);
            let rhs = c1.add(&pa, &pa);
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![fe(a)], f1(&lhs), f1(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("M2", "H(x+∂P(a)) = H(x)+H∂P(a)");
        run.run_over(&[&w.c0, &w.cee], bounds, |v| {
            let (x, a) = (v[0], v[1]);
            let lhs = self.hh(&c0.add(x, &self.d(&self.pp(a))));
            let rhs = cee.add(&self.hh(x), &self.hdp(a));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x), fe(a)], fe(&lhs), fe(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("M3", "PH(∂s₁+∂s₂) = PH∂s₁+PH∂s₂+[s₁,s₂]");
        run.run_over(&[&w.c1, &w.c1], bounds, |v| {
            let (s1, s2) = (v[0], v[1]);
            let (d1, d2) = (self.d(s1), self.d(s2));
            let lhs = self.pp(&self.hh(&c0.add(&d1, &d2)));
            // the commutator vanishes in an abelian carrier
            let rhs = c1.add(&self.pp(&self.hh(&d1)), &self.pp(&self.hh(&d2)));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f1(s1), f1(s2)], f1(&lhs), f1(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("M4", "∂PH(x₁+x₂) = ∂PH(x₁)+∂PH(x₂)+[x₁,x₂]");
        run.run_over(&[&w.c0, &w.c0], bounds, |v| {
            let (x1, x2) = (v[0], v[1]);
            let dph = |x: &Elem| self.d(&self.pp(&self.hh(x)));
            let lhs = dph(&c0.add(x1, x2));
            let rhs = c0.add(&dph(x1), &dph(x2));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x1), f0(x2)], f0(&lhs), f0(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D1", "(x|y)_H is bilinear");
        run.run_over(&[&w.c0, &w.c0, &w.c0], bounds, |v| {
            let (x1, x2, y) = (v[0], v[1], v[2]);
            let x12 = c0.add(x1, x2);
            let lhs = self.cross(&x12, y);
            let rhs = cee.add(&self.cross(x1, y), &self.cross(x2, y));
            let inputs = || vec![f0(x1), f0(x2), f0(y)];
            if lhs != rhs {
                return Outcome::Fails(Witness::new(inputs(), fe(&lhs), fe(&rhs)).clause("left"));
            }
            let lhs = self.cross(y, &x12);
            let rhs = cee.add(&self.cross(y, x1), &self.cross(y, x2));
            Outcome::compare(&lhs, &rhs, || Witness::new(inputs(), fe(&lhs), fe(&rhs)).clause("right"))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D2", "H(0) = 0");
        let h0 = self.hh(&c0.zero());
        run.record(Outcome::check(cee.is_zero(&h0), || Witness::new(vec!["0".into()], fe(&h0), "0")));
        out.push(run.finish());

        let mut run = LawRun::new("D3", "H(-x) = -H(x)+(x|x)_H");
        run.run_over(&[&w.c0], bounds, |v| {
            let x = v[0];
            let lhs = self.hh(&c0.neg(x));
            let rhs = cee.add(&cee.neg(&self.hh(x)), &self.cross(x, x));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x)], fe(&lhs), fe(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D4", "T is an additive involution");
        run.run_over(&[&w.cee, &w.cee], bounds, |v| {
            let (a, b) = (v[0], v[1]);
            let lhs = self.t(&cee.add(a, b));
            let rhs = cee.add(&self.t(a), &self.t(b));
            if lhs != rhs {
                return Outcome::Fails(Witness::new(vec![fe(a), fe(b)], fe(&lhs), fe(&rhs)).clause("additive"));
            }
            let tt = self.t(&self.t(a));
            Outcome::compare(&tt, a, || Witness::new(vec![fe(a)], fe(&tt), fe(a)).clause("involution"))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D5", "T(x₁|x₂)_H = -(x₂|x₁)_H");
        run.run_over(&[&w.c0, &w.c0], bounds, |v| {
            let (x1, x2) = (v[0], v[1]);
            let lhs = self.t(&self.cross(x1, x2));
            let rhs = cee.neg(&self.cross(x2, x1));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x1), f0(x2)], fe(&lhs), fe(&rhs)))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D6", "PT = P and P(x₁|x₂)_H = -P(x₂|x₁)_H");
        run.run_over(&[&w.cee], bounds, |v| {
            let a = v[0];
            let lhs = self.pp(&self.t(a));
            let rhs = self.pp(a);
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![fe(a)], f1(&lhs), f1(&rhs)).clause("PT = P"))
        });
        run.run_over(&[&w.c0, &w.c0], bounds, |v| {
            let (x1, x2) = (v[0], v[1]);
            let lhs = self.pp(&self.cross(x1, x2));
            let rhs = c1.neg(&self.pp(&self.cross(x2, x1)));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x1), f0(x2)], f1(&lhs), f1(&rhs)).clause("antisymmetry"))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D7", "Δ is additive and PΔ(x) = P(x|x)_H");
        run.run_over(&[&w.c0, &w.c0], bounds, |v| {
            let (x1, x2) = (v[0], v[1]);
            let lhs = self.delta(&c0.add(x1, x2));
            let rhs = cee.add(&self.delta(x1), &self.delta(x2));
            if lhs != rhs {
                return Outcome::Fails(Witness::new(vec![f0(x1), f0(x2)], fe(&lhs), fe(&rhs)).clause("additive"));
            }
            let lhs = self.pp(&self.delta(x1));
            let rhs = self.pp(&self.cross(x1, x1));
            Outcome::compare(&lhs, &rhs, || Witness::new(vec![f0(x1)], f1(&lhs), f1(&rhs)).clause("PΔ"))
        });
        out.push(run.finish());

        let mut run = LawRun::new("D8", "∂C₁ normal, P(C_ee) and Ker ∂ central");
        // commutators in abelian carriers: -a-b+a+b
        let comm = |g: &AbelianGroup, a: &Elem, b: &Elem| g.add(&g.sub(&g.neg(a), b), &g.add(a, b));
        let solver = self.boundary_solver();
        run.run_over(&[&w.c0, &w.c1], bounds, |v| {
            let (x, s) = (v[0], v[1]);
            let ds = self.d(s);
            let conj = c0.sub(&c0.add(x, &ds), x);
            let in_image = solver.contains(&conj);
            if !in_image {
                return Outcome::Fails(Witness::new(vec![f0(x), f1(s)], f0(&conj), "boundary").clause("normal"));
            }
            let c = comm(c1, &self.pp(&self.hh(x)), s);
            Outcome::check(c1.is_zero(&c), || Witness::new(vec![f0(x), f1(s)], f1(&c), "0").clause("P central"))
        });
        out.push(run.finish());
        out
    }
}

/// Element windows of the three carriers.
#[derive(Clone, Debug)]
pub struct Windows {
    pub c0: Vec<Elem>,
    pub c1: Vec<Elem>,
    pub cee: Vec<Elem>,
}

/// A morphism given by its three level maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpmMorphism {
    pub f0: Hom,
    pub f1: Hom,
    pub fee: Hom,
}

impl QpmMorphism {
    pub fn identity(m: &Qpm) -> Self {
        QpmMorphism { f0: Hom::identity(&m.c0), f1: Hom::identity(&m.c1), fee: Hom::identity(&m.cee) }
    }

    pub fn zero(src: &Qpm, tgt: &Qpm) -> Self {
        QpmMorphism {
            f0: Hom::zero(&src.c0, &tgt.c0),
            f1: Hom::zero(&src.c1, &tgt.c1),
            fee: Hom::zero(&src.cee, &tgt.cee),
        }
    }

    /// `f₀∂ = ∂f₁`, `f₁P = Pf_ee` and `f_eeH = Hf₀`.
    pub fn check(&self, src: &Qpm, tgt: &Qpm, bounds: &Bounds) -> Result<LawReport> {
        self.f0.check(&src.c0, &tgt.c0, "f0")?;
        self.f1.check(&src.c1, &tgt.c1, "f1")?;
        self.fee.check(&src.cee, &tgt.cee, "fee")?;
        let w = src.windows(bounds);
        let mut run = LawRun::new("MOR", "level maps commute with ∂, P and H");
        run.run_over(&[&w.c1], bounds, |v| {
            let s = v[0];
            let lhs = self.f0.apply(&tgt.c0, &src.d(s));
            let rhs = tgt.d(&self.f1.apply(&tgt.c1, s));
            Outcome::compare(&lhs, &rhs, || {
                Witness::new(vec![src.c1.format(s)], tgt.c0.format(&lhs), tgt.c0.format(&rhs)).clause("f0∂ = ∂f1")
            })
        });
        run.run_over(&[&w.cee], bounds, |v| {
            let a = v[0];
            let lhs = self.f1.apply(&tgt.c1, &src.pp(a));
            let rhs = tgt.pp(&self.fee.apply(&tgt.cee, a));
            Outcome::compare(&lhs, &rhs, || {
                Witness::new(vec![src.cee.format(a)], tgt.c1.format(&lhs), tgt.c1.format(&rhs)).clause("f1P = Pfee")
            })
        });
        run.run_over(&[&w.c0], bounds, |v| {
            let x = v[0];
            let lhs = self.fee.apply(&tgt.cee, &src.hh(x));
            let rhs = tgt.hh(&self.f0.apply(&tgt.c0, x));
            Outcome::compare(&lhs, &rhs, || {
                Witness::new(vec![src.c0.format(x)], tgt.cee.format(&lhs), tgt.cee.format(&rhs)).clause("feeH = Hf0")
            })
        });
        Ok(run.finish())
    }

    /// Whether the induced maps on `h₀` and `h₁` are isomorphisms.
    pub fn is_quasi_iso(&self, src: &Qpm, tgt: &Qpm) -> Result<bool> {
        let (hs, ht) = (src.homology()?, tgt.homology()?);
        let induced = |a: &Subquotient, b: &Subquotient, f: &Hom| -> Result<Hom> {
            let images = (0..a.group().rank())
                .map(|i| b.class(&f.apply(b.ambient(), &a.section(&a.group().generator(i)))))
                .collect::<Result<Vec<_>>>()?;
            Ok(Hom { images })
        };
        let g0 = induced(&hs.h0, &ht.h0, &self.f0)?;
        let g1 = induced(&hs.h1, &ht.h1, &self.f1)
            .map_err(|e| Error::Invalid(format!("f1 does not preserve cycles: {e}")))?;
        Ok(hom_is_iso(hs.h0.group(), ht.h0.group(), &g0) && hom_is_iso(hs.h1.group(), ht.h1.group(), &g1))
    }
}

/// Integer helper for building tables.
pub fn ints(v: &[i64]) -> Elem {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Bilinear;
    use crate::report::{all_pass, find, Status};

    fn zsigma() -> Qpm {
        let z = AbelianGroup::cyclic(&[0], &["1"]);
        let eta = AbelianGroup::cyclic(&[2], &["eta"]);
        let cee = AbelianGroup::cyclic(&[0], &["e"]);
        let h = QuadraticMap { values: vec![ints(&[0])], pairing: Bilinear { table: vec![vec![ints(&[1])]] } };
        Qpm::new(z, eta.clone(), cee, Hom::from_ints(&AbelianGroup::cyclic(&[0], &["1"]), &[&[0]]), h, Hom::from_ints(&eta, &[&[1]]))
            .unwrap()
    }

    #[test]
    fn zsigma_axioms_hold() {
        let m = zsigma();
        let r = m.check_axioms(&Bounds::default().with_window(20));
        assert!(all_pass(&r), "{r:?}");
        assert_eq!(r.len(), 12);
    }

    #[test]
    fn zsigma_maps() {
        let m = zsigma();
        assert_eq!(m.cross(&ints(&[2]), &ints(&[3])), ints(&[6]));
        assert_eq!(m.cross(&ints(&[7]), &ints(&[0])), ints(&[0]));
        for n in -5..5 {
            assert_eq!(m.t(&ints(&[n])), ints(&[-n]));
            assert_eq!(m.delta(&ints(&[n])), ints(&[n]));
        }
    }

    #[test]
    fn broken_module_fails_m1() {
        let z2 = AbelianGroup::cyclic(&[2], &["g"]);
        let id = Hom::identity(&z2);
        let h = QuadraticMap { values: vec![ints(&[1])], pairing: Bilinear { table: vec![vec![ints(&[0])]] } };
        let m = Qpm::new(z2.clone(), z2.clone(), z2, id.clone(), h, id).unwrap();
        let r = m.check_axioms(&Bounds::default());
        let m1 = find(&r, "M1").unwrap();
        assert_eq!(m1.status, Status::Fail);
        let w = m1.witness.as_ref().unwrap();
        assert_eq!(w.inputs, vec!["g".to_string()]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("g", "0"));
    }

    #[test]
    fn zero_module_passes() {
        let r = Qpm::zero().check_axioms(&Bounds::default());
        assert!(all_pass(&r));
    }

    #[test]
    fn zsigma_homology_and_k_invariant() {
        let m = zsigma();
        let hom = m.homology().unwrap();
        assert_eq!(hom.h0.group().orders(), &[BigInt::from(0)]);
        assert_eq!(hom.h1.group().orders(), &[BigInt::from(2)]);
        assert_eq!(m.k_invariant(&hom, &ints(&[1])).unwrap(), ints(&[1]));
        assert_eq!(m.k_invariant(&hom, &ints(&[2])).unwrap(), ints(&[0]));
        assert_eq!(m.k_invariant(&hom, &ints(&[-3])).unwrap(), ints(&[1]));
    }

    #[test]
    fn isomorphic_boundary_kills_homology() {
        let z = AbelianGroup::cyclic(&[0], &["a"]);
        let t = AbelianGroup::trivial();
        let m = Qpm::new(z.clone(), z.clone(), t.clone(), Hom::identity(&z), QuadraticMap::zero(&z, &t), Hom::zero(&t, &z))
            .unwrap();
        let hom = m.homology().unwrap();
        assert!(hom.h0.group().is_trivial() && hom.h1.group().is_trivial());
    }

    #[test]
    fn morphisms() {
        let m = zsigma();
        let b = Bounds::default().with_window(10);
        let id = QpmMorphism::identity(&m);
        assert!(id.check(&m, &m, &b).unwrap().passed());
        assert!(id.is_quasi_iso(&m, &m).unwrap());
        let zero = QpmMorphism::zero(&m, &m);
        assert!(zero.check(&m, &m, &b).unwrap().passed());
        assert!(!zero.is_quasi_iso(&m, &m).unwrap());
        let doubling = QpmMorphism {
            f0: Hom::from_ints(&m.c0, &[&[2]]),
            f1: Hom::zero(&m.c1, &m.c1),
            fee: Hom::from_ints(&m.cee, &[&[4]]),
        };
        let r = doubling.check(&m, &m, &b).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.unwrap().clause.as_deref(), Some("feeH = Hf0"));
    }
}
