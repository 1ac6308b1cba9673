//! Products induced on homology: `h₀` as a graded ring (or right module over
//! `h₀B`), `h₁` as a bimodule, the k-invariant as a bimodule map, and the
//! search for kernel-of-`H` representatives.

use crate::enumerate::Bounds;
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Bilinear, Elem};
use crate::qpm::{Homology, Qpm};
use crate::report::{LawReport, LawRun, Outcome, Witness};

use super::algebra::{Action, GradedQpa, RightModule, Table};

/// Homology of both families of an action with the induced product tables
/// on class generators. For a module, `base` holds the ring of the algebra.
#[derive(Clone)]
pub struct HomologyRing<'a> {
    pub act: Action<'a>,
    pub left: Vec<Homology>,
    pub right: Vec<Homology>,
    /// `h₀L_p × h₀B_q → h₀L_{p+q}`.
    pub m00: Table,
    /// `h₀L_p × h₁B_q → h₁L_{p+q}`.
    pub m01: Table,
    /// `h₁L_p × h₀B_q → h₁L_{p+q}`.
    pub m10: Table,
    /// Class of the unit in `h₀B₀`.
    pub unit: Elem,
    base: Option<Box<HomologyRing<'a>>>,
}

fn homologies(degrees: &[Qpm]) -> Result<Vec<Homology>> {
    degrees.iter().map(Qpm::homology).collect()
}

fn gens(g: &AbelianGroup) -> Vec<Elem> {
    (0..g.rank()).map(|i| g.generator(i)).collect()
}

impl<'a> HomologyRing<'a> {
    pub fn algebra(b: &'a GradedQpa) -> Result<Self> {
        let left = homologies(&b.degrees)?;
        Self::build(b.action(), left.clone(), left, &b.unit, None)
    }

    pub fn module(m: &'a RightModule, b: &'a GradedQpa) -> Result<Self> {
        let base = Self::algebra(b)?;
        let left = homologies(&m.degrees)?;
        Self::build(m.action(b), left, base.left.clone(), &b.unit, Some(Box::new(base)))
    }

    fn build(act: Action<'a>, left: Vec<Homology>, right: Vec<Homology>, unit: &Elem, base: Option<Box<Self>>) -> Result<Self> {
        let top = act.top();
        let (mut m00, mut m01, mut m10) = (Table::new(), Table::new(), Table::new());
        for p in 0..=top {
            for q in 0..right.len().min(top - p + 1) {
                let (l, r, t) = (&left[p], &right[q], &left[p + q]);
                let table = |lg: &AbelianGroup, rg: &AbelianGroup, f: &dyn Fn(&Elem, &Elem) -> Result<Elem>| -> Result<Bilinear> {
                    let rows = gens(lg)
                        .iter()
                        .map(|a| gens(rg).iter().map(|b| f(a, b)).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Bilinear { table: rows })
                };
                let ill = |what: &str, e: Error| Error::Invalid(format!("induced product {what} ({p}, {q}) is not well defined: {e}"));
                let b00 = table(l.h0.group(), r.h0.group(), &|a, b| {
                    t.h0.class(&act.x_y(p, &l.h0.section(a), q, &r.h0.section(b)))
                })
                .map_err(|e| ill("h₀·h₀", e))?;
                let b01 = table(l.h0.group(), r.h1.group(), &|a, z| {
                    t.h1.class(&act.x_s(p, &l.h0.section(a), q, &r.h1.section(z)))
                })
                .map_err(|e| ill("h₀·h₁", e))?;
                let b10 = table(l.h1.group(), r.h0.group(), &|z, b| {
                    t.h1.class(&act.s_x(p, &l.h1.section(z), q, &r.h0.section(b)))
                })
                .map_err(|e| ill("h₁·h₀", e))?;
                b00.check(l.h0.group(), r.h0.group(), t.h0.group(), "h₀·h₀").map_err(|e| ill("h₀·h₀", e))?;
                b01.check(l.h0.group(), r.h1.group(), t.h1.group(), "h₀·h₁").map_err(|e| ill("h₀·h₁", e))?;
                b10.check(l.h1.group(), r.h0.group(), t.h1.group(), "h₁·h₀").map_err(|e| ill("h₁·h₀", e))?;
                m00.insert((p, q), b00);
                m01.insert((p, q), b01);
                m10.insert((p, q), b10);
            }
        }
        let unit = right[0].h0.class(unit)?;
        Ok(HomologyRing { act, left, right, m00, m01, m10, unit, base })
    }

    pub fn top(&self) -> usize {
        self.act.top()
    }

    /// Number of degrees on the right.
    pub fn rlen(&self) -> usize {
        self.right.len()
    }

    pub fn is_algebra(&self) -> bool {
        self.base.is_none()
    }

    /// The ring of the underlying algebra (itself for an algebra).
    pub fn alg(&self) -> &HomologyRing<'a> {
        self.base.as_deref().unwrap_or(self)
    }

    pub fn h0(&self, n: usize) -> &AbelianGroup {
        self.left[n].h0.group()
    }

    pub fn h1(&self, n: usize) -> &AbelianGroup {
        self.left[n].h1.group()
    }

    pub fn rh0(&self, n: usize) -> &AbelianGroup {
        self.right[n].h0.group()
    }

    pub fn rh1(&self, n: usize) -> &AbelianGroup {
        self.right[n].h1.group()
    }

    fn apply(t: &Table, tgt: &AbelianGroup, p: usize, a: &Elem, q: usize, b: &Elem) -> Elem {
        match t.get(&(p, q)) {
            Some(m) => m.apply(tgt, a, b),
            None => tgt.zero(),
        }
    }

    pub fn mul00(&self, p: usize, a: &Elem, q: usize, b: &Elem) -> Elem {
        Self::apply(&self.m00, self.h0(p + q), p, a, q, b)
    }

    pub fn mul01(&self, p: usize, a: &Elem, q: usize, z: &Elem) -> Elem {
        Self::apply(&self.m01, self.h1(p + q), p, a, q, z)
    }

    pub fn mul10(&self, p: usize, z: &Elem, q: usize, b: &Elem) -> Elem {
        Self::apply(&self.m10, self.h1(p + q), p, z, q, b)
    }

    /// `a·η` on the left family.
    pub fn eta(&self, n: usize, a: &Elem) -> Result<Elem> {
        self.act.left[n].k_invariant(&self.left[n], a)
    }

    /// `a·η` on the right family.
    pub fn reta(&self, n: usize, a: &Elem) -> Result<Elem> {
        self.act.right[n].k_invariant(&self.right[n], a)
    }

    /// Classes of `h₀` in a window.
    pub fn classes0(&self, n: usize, b: &Bounds) -> Vec<Elem> {
        self.h0(n).window(b.window, b.window_cap)
    }

    pub fn rclasses0(&self, n: usize, b: &Bounds) -> Vec<Elem> {
        self.rh0(n).window(b.window, b.window_cap)
    }

    pub fn classes1(&self, n: usize, b: &Bounds) -> Vec<Elem> {
        self.h1(n).window(b.window, b.window_cap)
    }

    pub fn rclasses1(&self, n: usize, b: &Bounds) -> Vec<Elem> {
        self.rh1(n).window(b.window, b.window_cap)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let top = self.top();
        (0..=top).flat_map(|p| (0..self.rlen().min(top - p + 1)).map(move |q| (p, q))).collect()
    }

    /// HR: induced products are independent of representatives, associative,
    /// unital and form a bimodule; KB: the k-invariant is a bimodule map.
    pub fn check_laws(&self, bounds: &Bounds) -> Vec<LawReport> {
        vec![self.check_ring(bounds), self.check_k_invariant(bounds)]
    }

    fn check_ring(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new("HR", "induced products on homology are well defined, associative and unital");
        let alg = self.alg();
        let small = Bounds { window: bounds.window.min(2), window_cap: bounds.window_cap.min(16), ..*bounds };
        let act = &self.act;
        for (p, q) in self.pairs() {
            let (l, r, t) = (&self.left[p], &self.right[q], &self.left[p + q]);
            let (lm, rm) = (&act.left[p], &act.right[q]);
            let (a0, b0) = (self.classes0(p, bounds), self.rclasses0(q, bounds));
            let (z1, w1) = (self.classes1(p, bounds), self.rclasses1(q, bounds));
            let (lu, ru) = (lm.c1.window(small.window, small.window_cap), rm.c1.window(small.window, small.window_cap));
            let fmt = |g: &AbelianGroup, x: &Elem| g.format(x);
            run.run_over(&[&a0, &b0, &lu, &ru], bounds, |v| {
                let x = lm.c0.add(&l.h0.section(v[0]), &lm.d(v[2]));
                let y = rm.c0.add(&r.h0.section(v[1]), &rm.d(v[3]));
                let got = t.h0.class(&act.x_y(p, &x, q, &y));
                let want = self.mul00(p, v[0], q, v[1]);
                Outcome::check(got.as_ref() == Ok(&want), || {
                    Witness::new(
                        vec![lm.c0.format(&x), rm.c0.format(&y)],
                        got.map(|g| fmt(t.h0.group(), &g)).unwrap_or_else(|e| e.to_string()),
                        fmt(t.h0.group(), &want),
                    )
                    .clause("class of x̄·ȳ")
                })
            });
            run.run_over(&[&a0, &w1, &lu], bounds, |v| {
                let x = lm.c0.add(&l.h0.section(v[0]), &lm.d(v[2]));
                let got = t.h1.class(&act.x_s(p, &x, q, &r.h1.section(v[1])));
                let want = self.mul01(p, v[0], q, v[1]);
                Outcome::check(got.as_ref() == Ok(&want), || {
                    Witness::new(
                        vec![lm.c0.format(&x), fmt(r.h1.group(), v[1])],
                        got.map(|g| fmt(t.h1.group(), &g)).unwrap_or_else(|e| e.to_string()),
                        fmt(t.h1.group(), &want),
                    )
                    .clause("class of x̄·z")
                })
            });
            run.run_over(&[&z1, &b0, &ru], bounds, |v| {
                let y = rm.c0.add(&r.h0.section(v[1]), &rm.d(v[2]));
                let got = t.h1.class(&act.s_x(p, &l.h1.section(v[0]), q, &y));
                let want = self.mul10(p, v[0], q, v[1]);
                Outcome::check(got.as_ref() == Ok(&want), || {
                    Witness::new(
                        vec![fmt(l.h1.group(), v[0]), rm.c0.format(&y)],
                        got.map(|g| fmt(t.h1.group(), &g)).unwrap_or_else(|e| e.to_string()),
                        fmt(t.h1.group(), &want),
                    )
                    .clause("class of z·ȳ")
                })
            });
            if q == 0 {
                let one = &self.unit;
                run.run_over(&[&a0], bounds, |v| {
                    let y = self.mul00(p, v[0], 0, one);
                    Outcome::compare(&y, v[0], || {
                        Witness::new(vec![fmt(self.h0(p), v[0])], fmt(self.h0(p), &y), fmt(self.h0(p), v[0])).clause("a·1")
                    })
                });
                run.run_over(&[&z1], bounds, |v| {
                    let y = self.mul10(p, v[0], 0, one);
                    Outcome::compare(&y, v[0], || {
                        Witness::new(vec![fmt(self.h1(p), v[0])], fmt(self.h1(p), &y), fmt(self.h1(p), v[0])).clause("z·1")
                    })
                });
                if self.is_algebra() {
                    run.run_over(&[&a0], bounds, |v| {
                        let y = self.mul00(0, one, p, v[0]);
                        Outcome::compare(&y, v[0], || {
                            Witness::new(vec![fmt(self.h0(p), v[0])], fmt(self.h0(p), &y), fmt(self.h0(p), v[0])).clause("1·a")
                        })
                    });
                    run.run_over(&[&z1], bounds, |v| {
                        let y = self.mul01(0, one, p, v[0]);
                        Outcome::compare(&y, v[0], || {
                            Witness::new(vec![fmt(self.h1(p), v[0])], fmt(self.h1(p), &y), fmt(self.h1(p), v[0])).clause("1·z")
                        })
                    });
                }
            }
            for s in 0..self.rlen().min(self.top() - p - q + 1) {
                let n = p + q + s;
                let c0 = self.rclasses0(s, bounds);
                let c1 = self.rclasses1(s, bounds);
                let ins = |a: String, b: String, c: String| vec![a, b, c];
                run.run_over(&[&a0, &b0, &c0], bounds, |v| {
                    let lhs = self.mul00(p + q, &self.mul00(p, v[0], q, v[1]), s, v[2]);
                    let rhs = self.mul00(p, v[0], q + s, &alg.mul00(q, v[1], s, v[2]));
                    Outcome::compare(&lhs, &rhs, || {
                        Witness::new(ins(fmt(self.h0(p), v[0]), fmt(self.rh0(q), v[1]), fmt(self.rh0(s), v[2])), fmt(self.h0(n), &lhs), fmt(self.h0(n), &rhs))
                            .clause("(ab)c = a(bc)")
                    })
                });
                run.run_over(&[&a0, &b0, &c1], bounds, |v| {
                    let lhs = self.mul01(p + q, &self.mul00(p, v[0], q, v[1]), s, v[2]);
                    let rhs = self.mul01(p, v[0], q + s, &alg.mul01(q, v[1], s, v[2]));
                    Outcome::compare(&lhs, &rhs, || {
                        Witness::new(ins(fmt(self.h0(p), v[0]), fmt(self.rh0(q), v[1]), fmt(self.rh1(s), v[2])), fmt(self.h1(n), &lhs), fmt(self.h1(n), &rhs))
                            .clause("(ab)z = a(bz)")
                    })
                });
                run.run_over(&[&a0, &w1, &c0], bounds, |v| {
                    let lhs = self.mul10(p + q, &self.mul01(p, v[0], q, v[1]), s, v[2]);
                    let rhs = self.mul01(p, v[0], q + s, &alg.mul10(q, v[1], s, v[2]));
                    Outcome::compare(&lhs, &rhs, || {
                        Witness::new(ins(fmt(self.h0(p), v[0]), fmt(self.rh1(q), v[1]), fmt(self.rh0(s), v[2])), fmt(self.h1(n), &lhs), fmt(self.h1(n), &rhs))
                            .clause("(az)c = a(zc)")
                    })
                });
                run.run_over(&[&z1, &b0, &c0], bounds, |v| {
                    let lhs = self.mul10(p + q, &self.mul10(p, v[0], q, v[1]), s, v[2]);
                    let rhs = self.mul10(p, v[0], q + s, &alg.mul00(q, v[1], s, v[2]));
                    Outcome::compare(&lhs, &rhs, || {
                        Witness::new(ins(fmt(self.h1(p), v[0]), fmt(self.rh0(q), v[1]), fmt(self.rh0(s), v[2])), fmt(self.h1(n), &lhs), fmt(self.h1(n), &rhs))
                            .clause("(zb)c = z(bc)")
                    })
                });
            }
        }
        run.finish()
    }

    fn check_k_invariant(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new("KB", "the k-invariant is a bimodule map");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (a0, b0) = (self.classes0(p, bounds), self.rclasses0(q, bounds));
            run.run_over(&[&a0, &b0], bounds, |v| {
                let ab = self.mul00(p, v[0], q, v[1]);
                let (lhs, r1, r2) = match (self.eta(n, &ab), self.reta(q, v[1]), self.eta(p, v[0])) {
                    (Ok(l), Ok(r1), Ok(r2)) => (l, r1, r2),
                    _ => {
                        return Outcome::Fails(Witness::new(
                            vec![self.h0(p).format(v[0]), self.rh0(q).format(v[1])],
                            "x·η is not a cycle",
                            "a cycle",
                        ))
                    }
                };
                let right = self.mul01(p, v[0], q, &r1);
                let left = self.mul10(p, &r2, q, v[1]);
                let ins = || vec![self.h0(p).format(v[0]), self.rh0(q).format(v[1])];
                let g = self.h1(n);
                if lhs != right {
                    return Outcome::Fails(Witness::new(ins(), g.format(&lhs), g.format(&right)).clause("(ab)·η = a·(b·η)"));
                }
                Outcome::compare(&left, &lhs, || Witness::new(ins(), g.format(&left), g.format(&lhs)).clause("(a·η)·b = (ab)·η"))
            });
        }
        run.finish()
    }
}

/// Per degree, whether every class of `h₀` in the window has a
/// representative `x̄` with `H(x̄) = 0`. Representatives are searched among
/// the section plus boundaries of a window of level 1.
pub fn property_h(degrees: &[Qpm], bounds: &Bounds) -> Result<Vec<bool>> {
    degrees
        .iter()
        .map(|m| {
            let h_vanishes = m.h.values.iter().all(|v| m.cee.is_zero(v)) && m.h.pairing.is_zero();
            if h_vanishes {
                return Ok(true);
            }
            let hom = m.homology()?;
            let g = hom.h0.group();
            let classes = if g.is_finite() {
                g.span_elements(&gens(g), bounds.window_cap.max(1))
                    .unwrap_or_else(|| g.window(bounds.window, bounds.window_cap))
            } else {
                g.window(bounds.window, bounds.window_cap)
            };
            let shifts: Vec<Elem> = m.c1.window(bounds.window, bounds.window_cap).iter().map(|u| m.d(u)).collect();
            Ok(classes.iter().all(|c| {
                let x = hom.h0.section(c);
                shifts.iter().any(|d| m.cee.is_zero(&m.hh(&m.c0.add(&x, d))))
            }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::builtin;
    use crate::qpm::ints;
    use crate::report::all_pass;

    #[test]
    fn zsigma_homology_ring() {
        let inst = builtin("zsigma").unwrap();
        let r = HomologyRing::algebra(&inst.qpa).unwrap();
        assert_eq!(r.h0(0).orders(), &[0.into()]);
        assert_eq!(r.h1(0).orders(), &[2.into()]);
        assert_eq!(r.mul00(0, &ints(&[2]), 0, &ints(&[3])), ints(&[6]));
        assert_eq!(r.mul01(0, &ints(&[3]), 0, &ints(&[1])), ints(&[1]));
        assert_eq!(r.mul10(0, &ints(&[1]), 0, &ints(&[2])), ints(&[0]));
        assert_eq!(r.eta(0, &ints(&[1])).unwrap(), ints(&[1]));
        let reports = r.check_laws(&Bounds::default().with_window(6));
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn k_invariant_bimodule_examples() {
        let inst = builtin("zsigma").unwrap();
        let r = HomologyRing::algebra(&inst.qpa).unwrap();
        let six = r.mul00(0, &ints(&[2]), 0, &ints(&[3]));
        assert_eq!(r.eta(0, &six).unwrap(), ints(&[0]));
        assert_eq!(r.mul01(0, &ints(&[2]), 0, &r.eta(0, &ints(&[3])).unwrap()), ints(&[0]));
        assert_eq!(r.mul01(0, &ints(&[1]), 0, &r.eta(0, &ints(&[1])).unwrap()), ints(&[1]));
    }

    #[test]
    fn lambda_homology() {
        let inst = builtin("lambda-z").unwrap();
        let r = HomologyRing::algebra(&inst.qpa).unwrap();
        assert_eq!(r.h0(1).orders(), &[0.into()]);
        assert_eq!(r.h0(1).names(), &["x".to_string()]);
        assert!(r.h0(2).is_trivial());
        assert!(r.h0(3).is_trivial());
        assert_eq!(r.h1(3).orders(), &[0.into()]);
        assert_eq!(r.h1(3).names(), &["q".to_string()]);
        assert!(r.mul00(1, &ints(&[1]), 1, &ints(&[1])).is_empty());
        let reports = r.check_laws(&Bounds::default().with_window(3));
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn trivial_algebra_homology() {
        let inst = builtin("trivial").unwrap();
        let r = HomologyRing::algebra(&inst.qpa).unwrap();
        assert_eq!(r.top(), 0);
        assert_eq!(r.h0(0).orders(), &[0.into()]);
        assert!(r.h1(0).is_trivial());
        assert_eq!(property_h(&inst.qpa.degrees, &Bounds::default()).unwrap(), vec![true]);
    }

    #[test]
    fn property_h_examples() {
        let z = builtin("zsigma").unwrap();
        assert_eq!(property_h(&z.qpa.degrees, &Bounds::default()).unwrap(), vec![false]);
        let l = builtin("lambda-z").unwrap();
        assert!(property_h(&l.qpa.degrees, &Bounds::default()).unwrap().iter().all(|&b| b));
    }

    #[test]
    fn module_ring_over_itself() {
        let inst = builtin("lambda-z3").unwrap();
        let m = inst.qpa.as_module();
        let r = HomologyRing::module(&m, &inst.qpa).unwrap();
        assert!(!r.is_algebra());
        let reports = r.check_laws(&Bounds::default().with_window(2));
        assert!(all_pass(&reports), "{reports:?}");
    }
}
