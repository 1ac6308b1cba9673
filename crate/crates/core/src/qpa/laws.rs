//! Axiom suites for algebras and right modules: unit and associativity,
//! the eight compatibility axioms, the sign lemma, well-definedness of the
//! induced products on homology and the k-invariant.

use crate::enumerate::Bounds;
use crate::groups::Elem;
use crate::qpm::Windows;
use crate::report::{LawReport, LawRun, Outcome, Witness};

use super::algebra::{Action, GradedQpa, RightModule};

fn pairs(top: usize, rlen: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in 0..=top {
        for q in 0..rlen.min(top - p + 1) {
            v.push((p, q));
        }
    }
    v
}

fn triples(top: usize, rlen: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for (p, q) in pairs(top, rlen) {
        for r in 0..rlen.min(top - p - q + 1) {
            v.push((p, q, r));
        }
    }
    v
}

struct Ctx<'a> {
    act: Action<'a>,
    alg: Action<'a>,
    unit: &'a Elem,
    is_algebra: bool,
    lw: Vec<Windows>,
    rw: Vec<Windows>,
    bounds: Bounds,
}

fn w(inputs: Vec<String>, lhs: String, rhs: String) -> Witness {
    Witness::new(inputs, lhs, rhs)
}

impl<'a> Ctx<'a> {
    fn top(&self) -> usize {
        self.act.top()
    }

    fn rlen(&self) -> usize {
        self.act.right.len()
    }

    fn unit_and_assoc(&self) -> LawReport {
        let (act, alg, b) = (&self.act, &self.alg, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("A1", "unit and associativity");
        let one = self.unit;
        let ee_one = r[0].cross(one, one);
        for p in 0..=self.top() {
            let m = &l[p];
            run.run_over(&[&self.lw[p].c0], b, |v| {
                let y = act.x_y(p, v[0], 0, one);
                Outcome::compare(&y, v[0], || w(vec![m.c0.format(v[0])], m.c0.format(&y), m.c0.format(v[0])).clause("x·1"))
            });
            run.run_over(&[&self.lw[p].c1], b, |v| {
                let y = act.s_x(p, v[0], 0, one);
                Outcome::compare(&y, v[0], || w(vec![m.c1.format(v[0])], m.c1.format(&y), m.c1.format(v[0])).clause("s·1"))
            });
            run.run_over(&[&self.lw[p].cee], b, |v| {
                let y = act.ee(p, v[0], 0, &ee_one);
                Outcome::compare(&y, v[0], || w(vec![m.cee.format(v[0])], m.cee.format(&y), m.cee.format(v[0])).clause("a·(1|1)"))
            });
            if self.is_algebra {
                run.run_over(&[&self.lw[p].c0], b, |v| {
                    let y = act.x_y(0, one, p, v[0]);
                    Outcome::compare(&y, v[0], || w(vec![m.c0.format(v[0])], m.c0.format(&y), m.c0.format(v[0])).clause("1·x"))
                });
                run.run_over(&[&self.lw[p].c1], b, |v| {
                    let y = act.x_s(0, one, p, v[0]);
                    Outcome::compare(&y, v[0], || w(vec![m.c1.format(v[0])], m.c1.format(&y), m.c1.format(v[0])).clause("1·s"))
                });
                run.run_over(&[&self.lw[p].cee], b, |v| {
                    let y = act.ee(0, &ee_one, p, v[0]);
                    Outcome::compare(&y, v[0], || w(vec![m.cee.format(v[0])], m.cee.format(&y), m.cee.format(v[0])).clause("(1|1)·a"))
                });
            }
        }
        for (p, q, s) in triples(self.top(), self.rlen()) {
            let t = &l[p + q + s];
            let (lw, rq, rs) = (&self.lw[p], &self.rw[q], &self.rw[s]);
            let ins = |a: String, bb: String, c: String| vec![a, bb, c];
            run.run_over(&[&lw.c0, &rq.c0, &rs.c0], b, |v| {
                let lhs = act.x_y(p + q, &act.x_y(p, v[0], q, v[1]), s, v[2]);
                let rhs = act.x_y(p, v[0], q + s, &alg.x_y(q, v[1], s, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(ins(l[p].c0.format(v[0]), r[q].c0.format(v[1]), r[s].c0.format(v[2])), t.c0.format(&lhs), t.c0.format(&rhs))
                        .clause("(xy)z")
                })
            });
            run.run_over(&[&lw.c0, &rq.c0, &rs.c1], b, |v| {
                let lhs = act.x_s(p + q, &act.x_y(p, v[0], q, v[1]), s, v[2]);
                let rhs = act.x_s(p, v[0], q + s, &alg.x_s(q, v[1], s, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(ins(l[p].c0.format(v[0]), r[q].c0.format(v[1]), r[s].c1.format(v[2])), t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("(xy)s")
                })
            });
            run.run_over(&[&lw.c0, &rq.c1, &rs.c0], b, |v| {
                let lhs = act.s_x(p + q, &act.x_s(p, v[0], q, v[1]), s, v[2]);
                let rhs = act.x_s(p, v[0], q + s, &alg.s_x(q, v[1], s, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(ins(l[p].c0.format(v[0]), r[q].c1.format(v[1]), r[s].c0.format(v[2])), t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("(xs)y")
                })
            });
            run.run_over(&[&lw.c1, &rq.c0, &rs.c0], b, |v| {
                let lhs = act.s_x(p + q, &act.s_x(p, v[0], q, v[1]), s, v[2]);
                let rhs = act.s_x(p, v[0], q + s, &alg.x_y(q, v[1], s, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(ins(l[p].c1.format(v[0]), r[q].c0.format(v[1]), r[s].c0.format(v[2])), t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("(sx)y")
                })
            });
            run.run_over(&[&lw.cee, &rq.cee, &rs.cee], b, |v| {
                let lhs = act.ee(p + q, &act.ee(p, v[0], q, v[1]), s, v[2]);
                let rhs = act.ee(p, v[0], q + s, &alg.ee(q, v[1], s, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(ins(l[p].cee.format(v[0]), r[q].cee.format(v[1]), r[s].cee.format(v[2])), t.cee.format(&lhs), t.cee.format(&rhs))
                        .clause("(ab)c")
                })
            });
        }
        run.finish()
    }

    fn right_linear(&self) -> LawReport {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("A2", "products are right linear");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let t = &l[p + q];
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            run.run_over(&[&lw.c0, &rw.c0, &rw.c0], b, |v| {
                let lhs = act.x_y(p, v[0], q, &r[q].c0.add(v[1], v[2]));
                let rhs = t.c0.add(&act.x_y(p, v[0], q, v[1]), &act.x_y(p, v[0], q, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![l[p].c0.format(v[0]), r[q].c0.format(v[1]), r[q].c0.format(v[2])], t.c0.format(&lhs), t.c0.format(&rhs))
                        .clause("x(y+y')")
                })
            });
            run.run_over(&[&lw.c0, &rw.c1, &rw.c1], b, |v| {
                let lhs = act.x_s(p, v[0], q, &r[q].c1.add(v[1], v[2]));
                let rhs = t.c1.add(&act.x_s(p, v[0], q, v[1]), &act.x_s(p, v[0], q, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![l[p].c0.format(v[0]), r[q].c1.format(v[1]), r[q].c1.format(v[2])], t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("x(s+s')")
                })
            });
            run.run_over(&[&lw.c1, &rw.c0, &rw.c0], b, |v| {
                let lhs = act.s_x(p, v[0], q, &r[q].c0.add(v[1], v[2]));
                let rhs = t.c1.add(&act.s_x(p, v[0], q, v[1]), &act.s_x(p, v[0], q, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![l[p].c1.format(v[0]), r[q].c0.format(v[1]), r[q].c0.format(v[2])], t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("s(x+x')")
                })
            });
            run.run_over(&[&lw.cee, &rw.cee, &rw.cee], b, |v| {
                let lhs = act.ee(p, v[0], q, &r[q].cee.add(v[1], v[2]));
                let rhs = t.cee.add(&act.ee(p, v[0], q, v[1]), &act.ee(p, v[0], q, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![l[p].cee.format(v[0]), r[q].cee.format(v[1]), r[q].cee.format(v[2])], t.cee.format(&lhs), t.cee.format(&rhs))
                        .clause("a(b+b')")
                })
            });
        }
        run.finish()
    }

    fn left_distributive(&self) -> LawReport {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("A3", "left distributivity with correction terms");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t) = (&l[p], &l[p + q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            run.run_over(&[&lw.c0, &lw.c0, &rw.c0], b, |v| {
                let (x1, x2, y) = (v[0], v[1], v[2]);
                let lhs = act.x_y(p, &m.c0.add(x1, x2), q, y);
                let corr = act.ee(p, &m.cross(x2, x1), q, &r[q].hh(y));
                let rhs = t.c0.add(&t.c0.add(&act.x_y(p, x1, q, y), &act.x_y(p, x2, q, y)), &t.d(&t.pp(&corr)));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c0.format(x1), m.c0.format(x2), r[q].c0.format(y)], t.c0.format(&lhs), t.c0.format(&rhs))
                        .clause("(x+x')y")
                })
            });
            run.run_over(&[&lw.c0, &lw.c0, &rw.c1], b, |v| {
                let (x1, x2, s) = (v[0], v[1], v[2]);
                let lhs = act.x_s(p, &m.c0.add(x1, x2), q, s);
                let corr = act.ee(p, &m.cross(x2, x1), q, &r[q].hh(&r[q].d(s)));
                let rhs = t.c1.add(&t.c1.add(&act.x_s(p, x1, q, s), &act.x_s(p, x2, q, s)), &t.pp(&corr));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c0.format(x1), m.c0.format(x2), r[q].c1.format(s)], t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("(x+x')s")
                })
            });
            run.run_over(&[&lw.c1, &lw.c1, &rw.c0], b, |v| {
                let (s1, s2, x) = (v[0], v[1], v[2]);
                let lhs = act.s_x(p, &m.c1.add(s1, s2), q, x);
                let corr = act.ee(p, &m.cross(&m.d(s2), &m.d(s1)), q, &r[q].hh(x));
                let rhs = t.c1.add(&t.c1.add(&act.s_x(p, s1, q, x), &act.s_x(p, s2, q, x)), &t.pp(&corr));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c1.format(s1), m.c1.format(s2), r[q].c0.format(x)], t.c1.format(&lhs), t.c1.format(&rhs))
                        .clause("(s+s')x")
                })
            });
            run.run_over(&[&lw.cee, &lw.cee, &rw.cee], b, |v| {
                let lhs = act.ee(p, &m.cee.add(v[0], v[1]), q, v[2]);
                let rhs = t.cee.add(&act.ee(p, v[0], q, v[2]), &act.ee(p, v[1], q, v[2]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.cee.format(v[0]), m.cee.format(v[1]), r[q].cee.format(v[2])], t.cee.format(&lhs), t.cee.format(&rhs))
                        .clause("(a+a')b")
                })
            });
        }
        run.finish()
    }

    fn boundary_compat(&self) -> LawReport {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("A4", "∂ is compatible with the products");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t) = (&l[p], &l[p + q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            run.run_over(&[&lw.c0, &rw.c1], b, |v| {
                let lhs = t.d(&act.x_s(p, v[0], q, v[1]));
                let rhs = act.x_y(p, v[0], q, &r[q].d(v[1]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c0.format(v[0]), r[q].c1.format(v[1])], t.c0.format(&lhs), t.c0.format(&rhs)).clause("∂(xs) = x∂s")
                })
            });
            run.run_over(&[&lw.c1, &rw.c0], b, |v| {
                let lhs = t.d(&act.s_x(p, v[0], q, v[1]));
                let rhs = act.x_y(p, &m.d(v[0]), q, v[1]);
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c1.format(v[0]), r[q].c0.format(v[1])], t.c0.format(&lhs), t.c0.format(&rhs)).clause("∂(sx) = ∂s·x")
                })
            });
            run.run_over(&[&lw.c1, &rw.c1], b, |v| {
                let lhs = act.x_s(p, &m.d(v[0]), q, v[1]);
                let rhs = act.s_x(p, v[0], q, &r[q].d(v[1]));
                Outcome::compare(&lhs, &rhs, || {
                    w(vec![m.c1.format(v[0]), r[q].c1.format(v[1])], t.c1.format(&lhs), t.c1.format(&rhs)).clause("∂s·s' = s·∂s'")
                })
            });
        }
        run.finish()
    }

    fn p_laws(&self) -> [LawReport; 2] {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut pml = LawRun::new("A5", "P((x|x)·a) = x·P(a)");
        let mut pmr = LawRun::new("A6", "P(a·Δ(x)) = P(a)·x");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t) = (&l[p], &l[p + q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            pml.run_over(&[&lw.c0, &rw.cee], b, |v| {
                let lhs = t.pp(&act.ee(p, &m.cross(v[0], v[0]), q, v[1]));
                let rhs = act.x_s(p, v[0], q, &r[q].pp(v[1]));
                Outcome::compare(&lhs, &rhs, || w(vec![m.c0.format(v[0]), r[q].cee.format(v[1])], t.c1.format(&lhs), t.c1.format(&rhs)))
            });
            pmr.run_over(&[&lw.cee, &rw.c0], b, |v| {
                let lhs = t.pp(&act.ee(p, v[0], q, &r[q].delta(v[1])));
                let rhs = act.s_x(p, &m.pp(v[0]), q, v[1]);
                Outcome::compare(&lhs, &rhs, || w(vec![m.cee.format(v[0]), r[q].c0.format(v[1])], t.c1.format(&lhs), t.c1.format(&rhs)))
            });
        }
        [pml.finish(), pmr.finish()]
    }

    fn h_laws(&self) -> [LawReport; 3] {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut hm = LawRun::new("A7", "H(x₁x₂) = (x₁|x₁)·H(x₂)+H(x₁)·Δ(x₂)");
        let mut hdpm = LawRun::new("A8", "H∂P(ab) = H∂P(a)·b+a·H∂P(b)-H∂P(a)·H∂P(b)");
        let mut cem = LawRun::new("A9", "(x₁x₂|x₃x₄) = (x₁|x₃)·(x₂|x₄)");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t, n) = (&l[p], &l[p + q], &r[q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            hm.run_over(&[&lw.c0, &rw.c0], b, |v| {
                let (x1, x2) = (v[0], v[1]);
                let lhs = t.hh(&act.x_y(p, x1, q, x2));
                let rhs = t.cee.add(&act.ee(p, &m.cross(x1, x1), q, &n.hh(x2)), &act.ee(p, &m.hh(x1), q, &n.delta(x2)));
                Outcome::compare(&lhs, &rhs, || w(vec![m.c0.format(x1), n.c0.format(x2)], t.cee.format(&lhs), t.cee.format(&rhs)))
            });
            hdpm.run_over(&[&lw.cee, &rw.cee], b, |v| {
                let (a1, a2) = (v[0], v[1]);
                let lhs = t.hdp(&act.ee(p, a1, q, a2));
                let (h1, h2) = (m.hdp(a1), n.hdp(a2));
                let rhs = t.cee.sub(&t.cee.add(&act.ee(p, &h1, q, a2), &act.ee(p, a1, q, &h2)), &act.ee(p, &h1, q, &h2));
                Outcome::compare(&lhs, &rhs, || w(vec![m.cee.format(a1), n.cee.format(a2)], t.cee.format(&lhs), t.cee.format(&rhs)))
            });
            cem.run_over(&[&lw.c0, &rw.c0, &lw.c0, &rw.c0], b, |v| {
                let lhs = t.cross(&act.x_y(p, v[0], q, v[1]), &act.x_y(p, v[2], q, v[3]));
                let rhs = act.ee(p, &m.cross(v[0], v[2]), q, &n.cross(v[1], v[3]));
                Outcome::compare(&lhs, &rhs, || {
                    w(
                        vec![m.c0.format(v[0]), n.c0.format(v[1]), m.c0.format(v[2]), n.c0.format(v[3])],
                        t.cee.format(&lhs),
                        t.cee.format(&rhs),
                    )
                })
            });
        }
        [hm.finish(), hdpm.finish(), cem.finish()]
    }

    fn sign_lemma(&self) -> [LawReport; 3] {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut l1 = LawRun::new("L1", "0·x = 0");
        let mut l2 = LawRun::new("L2", "(-x₁)x₂ = -x₁x₂+∂P((x₁|x₁)·H(x₂))");
        let mut l3 = LawRun::new("L3", "(-x)s = -xs+P((x|x)·H∂s)");
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t, n) = (&l[p], &l[p + q], &r[q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            let z0 = m.c0.zero();
            let z1 = m.c1.zero();
            l1.run_over(&[&rw.c0], b, |v| {
                let a = act.x_y(p, &z0, q, v[0]);
                let c = act.s_x(p, &z1, q, v[0]);
                Outcome::check(t.c0.is_zero(&a) && t.c1.is_zero(&c), || {
                    w(vec![n.c0.format(v[0])], format!("{}, {}", t.c0.format(&a), t.c1.format(&c)), "0, 0".into())
                })
            });
            l1.run_over(&[&rw.c1], b, |v| {
                let a = act.x_s(p, &z0, q, v[0]);
                Outcome::check(t.c1.is_zero(&a), || w(vec![n.c1.format(v[0])], t.c1.format(&a), "0".into()))
            });
            l2.run_over(&[&lw.c0, &rw.c0], b, |v| {
                let (x1, x2) = (v[0], v[1]);
                let lhs = act.x_y(p, &m.c0.neg(x1), q, x2);
                let corr = act.ee(p, &m.cross(x1, x1), q, &n.hh(x2));
                let rhs = t.c0.add(&t.c0.neg(&act.x_y(p, x1, q, x2)), &t.d(&t.pp(&corr)));
                Outcome::compare(&lhs, &rhs, || w(vec![m.c0.format(x1), n.c0.format(x2)], t.c0.format(&lhs), t.c0.format(&rhs)))
            });
            l3.run_over(&[&lw.c0, &rw.c1], b, |v| {
                let (x, s) = (v[0], v[1]);
                let lhs = act.x_s(p, &m.c0.neg(x), q, s);
                let corr = act.ee(p, &m.cross(x, x), q, &n.hh(&n.d(s)));
                let rhs = t.c1.add(&t.c1.neg(&act.x_s(p, x, q, s)), &t.pp(&corr));
                Outcome::compare(&lhs, &rhs, || w(vec![m.c0.format(x), n.c1.format(s)], t.c1.format(&lhs), t.c1.format(&rhs)))
            });
        }
        [l1.finish(), l2.finish(), l3.finish()]
    }

    /// Induced products on `h₀` and actions on `h₁` are well defined.
    fn homology_laws(&self) -> [LawReport; 2] {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut h0 = LawRun::new("H0", "h₀ product is well defined");
        let mut h1 = LawRun::new("H1", "h₁ actions are well defined");
        let cycles = |ws: &Windows, m: &crate::qpm::Qpm| -> Vec<Elem> {
            ws.c1.iter().filter(|s| m.c0.is_zero(&m.d(s))).cloned().collect()
        };
        let lcyc: Vec<Vec<Elem>> = (0..l.len()).map(|p| cycles(&self.lw[p], &l[p])).collect();
        let rcyc: Vec<Vec<Elem>> = (0..r.len()).map(|q| cycles(&self.rw[q], &r[q])).collect();
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t, n) = (&l[p], &l[p + q], &r[q]);
            let (lw, rw) = (&self.lw[p], &self.rw[q]);
            let solver = t.boundary_solver();
            h0.run_over(&[&lw.c0, &rw.c0, &lw.c1, &rw.c1], b, |v| {
                let (x, y, u, s) = (v[0], v[1], v[2], v[3]);
                let moved = act.x_y(p, &m.c0.add(x, &m.d(u)), q, &n.c0.add(y, &n.d(s)));
                let diff = t.c0.sub(&moved, &act.x_y(p, x, q, y));
                Outcome::check(solver.contains(&diff), || {
                    w(
                        vec![m.c0.format(x), n.c0.format(y), m.c1.format(u), n.c1.format(s)],
                        t.c0.format(&diff),
                        "a boundary".into(),
                    )
                })
            });
            h1.run_over(&[&lw.c0, &lw.c1, &rcyc[q]], b, |v| {
                let (x, u, c) = (v[0], v[1], v[2]);
                let xc = act.x_s(p, x, q, c);
                if !t.c0.is_zero(&t.d(&xc)) {
                    return Outcome::Fails(w(vec![m.c0.format(x), n.c1.format(c)], t.c0.format(&t.d(&xc)), "0".into()).clause("x·c is a cycle"));
                }
                let moved = act.x_s(p, &m.c0.add(x, &m.d(u)), q, c);
                Outcome::compare(&moved, &xc, || {
                    w(vec![m.c0.format(x), m.c1.format(u), n.c1.format(c)], t.c1.format(&moved), t.c1.format(&xc)).clause("(x+∂u)·c")
                })
            });
            h1.run_over(&[&lcyc[p], &rw.c0, &rw.c1], b, |v| {
                let (c, y, s) = (v[0], v[1], v[2]);
                let cy = act.s_x(p, c, q, y);
                if !t.c0.is_zero(&t.d(&cy)) {
                    return Outcome::Fails(w(vec![m.c1.format(c), n.c0.format(y)], t.c0.format(&t.d(&cy)), "0".into()).clause("c·y is a cycle"));
                }
                let moved = act.s_x(p, c, q, &n.c0.add(y, &n.d(s)));
                Outcome::compare(&moved, &cy, || {
                    w(vec![m.c1.format(c), n.c0.format(y), n.c1.format(s)], t.c1.format(&moved), t.c1.format(&cy)).clause("c·(y+∂s)")
                })
            });
        }
        [h0.finish(), h1.finish()]
    }

    /// The k-invariant `x ↦ P(x|x)_H` is compatible with the actions.
    fn k_invariant_law(&self) -> LawReport {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("K1", "k-invariant is a module homomorphism");
        for p in 0..=self.top() {
            let m = &l[p];
            run.run_over(&[&self.lw[p].c0, &self.lw[p].c1], b, |v| {
                let (x, u) = (v[0], v[1]);
                let moved = m.c0.add(x, &m.d(u));
                let (a, c) = (m.pp(&m.cross(&moved, &moved)), m.pp(&m.cross(x, x)));
                Outcome::compare(&a, &c, || w(vec![m.c0.format(x), m.c1.format(u)], m.c1.format(&a), m.c1.format(&c)).clause("(x+∂u)·η"))
            });
        }
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t, n) = (&l[p], &l[p + q], &r[q]);
            run.run_over(&[&self.lw[p].c0, &self.rw[q].c0], b, |v| {
                let (x, y) = (v[0], v[1]);
                let xy = act.x_y(p, x, q, y);
                let lhs = t.pp(&t.cross(&xy, &xy));
                let right = act.s_x(p, &m.pp(&m.cross(x, x)), q, y);
                if lhs != right {
                    return Outcome::Fails(w(vec![m.c0.format(x), n.c0.format(y)], t.c1.format(&lhs), t.c1.format(&right)).clause("(xy)η = (xη)y"));
                }
                if !self.is_algebra {
                    return Outcome::Holds;
                }
                let left = act.x_s(p, x, q, &n.pp(&n.cross(y, y)));
                Outcome::compare(&lhs, &left, || {
                    w(vec![m.c0.format(x), n.c0.format(y)], t.c1.format(&lhs), t.c1.format(&left)).clause("(xy)η = x(yη)")
                })
            });
        }
        run.finish()
    }

    /// `h₀M ⊗ h₁B → h₁M` is well defined and extends the k-invariant.
    fn pairing_law(&self) -> LawReport {
        let (act, b) = (&self.act, &self.bounds);
        let (l, r) = (act.left, act.right);
        let mut run = LawRun::new("PAIR", "pairing h₀M ⊗ h₁B → h₁M");
        let one = self.unit;
        let eta_b = r[0].pp(&r[0].cross(one, one));
        for p in 0..=self.top() {
            let m = &l[p];
            run.run_over(&[&self.lw[p].c0], b, |v| {
                let x = v[0];
                let lhs = act.x_s(p, x, 0, &eta_b);
                let rhs = m.pp(&m.cross(x, x));
                Outcome::compare(&lhs, &rhs, || w(vec![m.c0.format(x)], m.c1.format(&lhs), m.c1.format(&rhs)).clause("x·P(1|1) = x·η"))
            });
        }
        let rcyc: Vec<Vec<Elem>> =
            (0..r.len()).map(|q| self.rw[q].c1.iter().filter(|s| r[q].c0.is_zero(&r[q].d(s))).cloned().collect()).collect();
        for (p, q) in pairs(self.top(), self.rlen()) {
            let (m, t, n) = (&l[p], &l[p + q], &r[q]);
            run.run_over(&[&self.lw[p].c0, &self.lw[p].c1, &rcyc[q]], b, |v| {
                let (x, u, c) = (v[0], v[1], v[2]);
                let xc = act.x_s(p, x, q, c);
                if !t.c0.is_zero(&t.d(&xc)) {
                    return Outcome::Fails(w(vec![m.c0.format(x), n.c1.format(c)], t.c0.format(&t.d(&xc)), "0".into()).clause("cycle"));
                }
                let moved = act.x_s(p, &m.c0.add(x, &m.d(u)), q, c);
                Outcome::compare(&moved, &xc, || {
                    w(vec![m.c0.format(x), m.c1.format(u), n.c1.format(c)], t.c1.format(&moved), t.c1.format(&xc)).clause("(x+∂u)·c")
                })
            });
        }
        run.finish()
    }
}

fn suite(ctx: &Ctx<'_>) -> Vec<LawReport> {
    let mut out = vec![ctx.act.check_left_torsion(&ctx.bounds), ctx.unit_and_assoc(), ctx.right_linear(), ctx.left_distributive(), ctx.boundary_compat()];
    out.extend(ctx.p_laws());
    out.extend(ctx.h_laws());
    out.extend(ctx.sign_lemma());
    out.extend(ctx.homology_laws());
    out.push(ctx.k_invariant_law());
    out
}

/// Axioms A1–A9, the sign lemma L1–L3, well-definedness on homology (H0,
/// H1), the k-invariant law K1 and left-torsion well-definedness (WD).
pub fn check_qpa_axioms(b: &GradedQpa, bounds: &Bounds) -> Vec<LawReport> {
    let act = b.action();
    let (lw, rw) = act.windows(bounds);
    let ctx = Ctx { act, alg: act, unit: &b.unit, is_algebra: true, lw, rw, bounds: *bounds };
    suite(&ctx)
}

/// The same schema with a module on the left, plus the pairing law PAIR.
pub fn check_module_axioms(m: &RightModule, base: &GradedQpa, bounds: &Bounds) -> Vec<LawReport> {
    let act = m.action(base);
    let (lw, rw) = act.windows(bounds);
    let ctx = Ctx { act, alg: base.action(), unit: &base.unit, is_algebra: false, lw, rw, bounds: *bounds };
    let mut out = suite(&ctx);
    out.push(ctx.pairing_law());
    out
}
