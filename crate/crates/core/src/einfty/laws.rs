//! Law suites for the symmetric track group actions, equivariance of the
//! products and the cup-one product.

use crate::enumerate::Bounds;
use crate::groups::{Elem, SpanSolver};
use crate::qpa::Action;
use crate::qpm::{Qpm, Windows};
use crate::report::{LawReport, LawRun, Outcome, Witness};
use crate::trackgroup::{binom_sign, Perm, TrackElem};

use super::square::{check_comm_toda_laws, lor2_check, Lift};
use super::{perms, tracks, Einfty};

fn tau(n: usize, m: usize) -> Perm {
    Perm::block_shuffle(n, m)
}

fn id(n: usize) -> Perm {
    Perm::identity(n)
}

/// Runs `f` over index tuples into lists of the given sizes.
fn over<F>(run: &mut LawRun, sizes: &[usize], b: &Bounds, f: F)
where
    F: Fn(&[usize]) -> Outcome + Sync,
{
    let lists: Vec<Vec<usize>> = sizes.iter().map(|&n| (0..n).collect()).collect();
    let refs: Vec<&[usize]> = lists.iter().map(|l| &l[..]).collect();
    run.run_over(&refs, b, |v| {
        let ix: Vec<usize> = v.iter().map(|&&i| i).collect();
        f(&ix)
    });
}

struct Ctx<'a> {
    e: Einfty<'a>,
    act: Action<'a>,
    win: Vec<Windows>,
    perms: Vec<Vec<Perm>>,
    tracks: Vec<Vec<TrackElem>>,
    b: Bounds,
}

impl<'a> Ctx<'a> {
    fn new(e: Einfty<'a>, b: &Bounds) -> Self {
        let top = e.top();
        Ctx {
            e,
            act: e.base.action(),
            win: e.base.degrees.iter().map(|m| m.windows(b)).collect(),
            perms: (0..=top).map(|n| perms(n, b)).collect(),
            tracks: (0..=top).map(|n| tracks(n, b)).collect(),
            b: *b,
        }
    }

    fn m(&self, n: usize) -> &'a Qpm {
        self.e.deg(n)
    }

    fn f0(&self, n: usize, x: &Elem) -> String {
        self.m(n).c0.format(x)
    }

    fn f1(&self, n: usize, s: &Elem) -> String {
        self.m(n).c1.format(s)
    }

    fn fe(&self, n: usize, a: &Elem) -> String {
        self.m(n).cee.format(a)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let top = self.e.top();
        (0..=top).flat_map(|p| (0..=top - p).map(move |q| (p, q))).collect()
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let top = self.e.top();
        self.pairs().into_iter().flat_map(|(p, q)| (0..=top - p - q).map(move |r| (p, q, r))).collect()
    }

    fn h_vanishes(&self, xs: &[(usize, &Elem)]) -> bool {
        xs.iter().all(|&(n, x)| self.m(n).cee.is_zero(&self.m(n).hh(x)))
    }

    fn eq1(&self, n: usize, lhs: &Elem, rhs: &Elem, ins: impl FnOnce() -> Vec<String>, clause: &str) -> Outcome {
        Outcome::compare(lhs, rhs, || Witness::new(ins(), self.f1(n, lhs), self.f1(n, rhs)).clause(clause))
    }

    fn eq0(&self, n: usize, lhs: &Elem, rhs: &Elem, ins: impl FnOnce() -> Vec<String>, clause: &str) -> Outcome {
        Outcome::compare(lhs, rhs, || Witness::new(ins(), self.f0(n, lhs), self.f0(n, rhs)).clause(clause))
    }

    /// `P(a)` followed by `·[g]` on level 1, in degree `n`.
    fn p_act(&self, n: usize, a: &Elem, g: &Perm) -> Elem {
        self.e.act1(n, &self.m(n).pp(a), g)
    }

    /// `TH(x)`.
    fn th(&self, n: usize, x: &Elem) -> Elem {
        let m = self.m(n);
        m.t(&m.hh(x))
    }

    // ---- the right A(Σ̃ₙ)-module structure ----

    fn unit(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("S2", "x·[1ₙ] = x on both levels and x·[1] = 0 for the unit track");
        for n in 0..=e.top() {
            let (one, lift, w) = (id(n), TrackElem::identity(n), &self.win[n]);
            run.run_over(&[&w.c0], &self.b, |v| {
                let y = e.act0(n, v[0], &one);
                self.eq0(n, &y, v[0], || vec![self.f0(n, v[0])], "x·[1ₙ] = x")
            });
            run.run_over(&[&w.c1], &self.b, |v| {
                let y = e.act1(n, v[0], &one);
                self.eq1(n, &y, v[0], || vec![self.f1(n, v[0])], "s·[1ₙ] = s")
            });
            run.run_over(&[&w.c0], &self.b, |v| {
                let y = e.act_track(n, v[0], &lift);
                self.eq1(n, &y, &self.m(n).c1.zero(), || vec![self.f0(n, v[0])], "x·[1] = 0")
            });
        }
        run.finish()
    }

    fn group_action(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("S3", "x·[gh] = (x·[g])·[h] on both levels");
        for n in 0..=e.top() {
            let (w, ps) = (&self.win[n], &self.perms[n]);
            let ins = |x: String, i: usize, j: usize| vec![x, ps[i].to_string(), ps[j].to_string()];
            over(&mut run, &[w.c0.len(), ps.len(), ps.len()], &self.b, |v| {
                let (x, g, h) = (&w.c0[v[0]], &ps[v[1]], &ps[v[2]]);
                let lhs = e.act0(n, x, &g.mul(h));
                let rhs = e.act0(n, &e.act0(n, x, g), h);
                self.eq0(n, &lhs, &rhs, || ins(self.f0(n, x), v[1], v[2]), "level 0")
            });
            over(&mut run, &[w.c1.len(), ps.len(), ps.len()], &self.b, |v| {
                let (s, g, h) = (&w.c1[v[0]], &ps[v[1]], &ps[v[2]]);
                let lhs = e.act1(n, s, &g.mul(h));
                let rhs = e.act1(n, &e.act1(n, s, g), h);
                self.eq1(n, &lhs, &rhs, || ins(self.f1(n, s), v[1], v[2]), "level 1")
            });
        }
        run.finish()
    }

    fn boundary(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("S4", "∂(x·[t]) = −x·[δt] + εδ(t)·x, with ∂ equivariant");
        for n in 0..=e.top() {
            let (m, w, ps, ts) = (self.m(n), &self.win[n], &self.perms[n], &self.tracks[n]);
            over(&mut run, &[w.c0.len(), ts.len()], &self.b, |v| {
                let (x, t) = (&w.c0[v[0]], &ts[v[1]]);
                let lhs = m.d(&e.act_track(n, x, t));
                let moved = e.act0(n, x, t.delta());
                let rhs = m.c0.sub(&(if t.epsilon() < 0 { m.c0.neg(x) } else { x.clone() }), &moved);
                self.eq0(n, &lhs, &rhs, || vec![self.f0(n, x), t.to_string()], "∂(x·[t])")
            });
            over(&mut run, &[w.c1.len(), ps.len()], &self.b, |v| {
                let (s, g) = (&w.c1[v[0]], &ps[v[1]]);
                let lhs = m.d(&e.act1(n, s, g));
                let rhs = e.act0(n, &m.d(s), g);
                self.eq0(n, &lhs, &rhs, || vec![self.f1(n, s), g.to_string()], "∂(s·[g]) = ∂(s)·[g]")
            });
            over(&mut run, &[w.c1.len(), ts.len()], &self.b, |v| {
                let (s, t) = (&w.c1[v[0]], &ts[v[1]]);
                let lhs = e.act_track(n, &m.d(s), t);
                let es = if t.epsilon() < 0 { m.c1.neg(s) } else { s.clone() };
                let rhs = m.c1.sub(&es, &e.act1(n, s, t.delta()));
                self.eq1(n, &lhs, &rhs, || vec![self.f1(n, s), t.to_string()], "∂(s)·[t] = s·∂[t]")
            });
        }
        run.finish()
    }

    /// `x·[st]` against the product rule (s5) or against its right-handed
    /// form (ader), both built from the actions of `s` and `t` separately.
    fn composite(&self, ader: bool) -> LawReport {
        let e = self.e;
        let mut run = if ader {
            LawRun::new("ADER", "x·[st] = (x·[s])·[δt] + εδ(s)·x·[t]")
        } else {
            LawRun::new("S5", "x·[st] = (x·[δs])·[t] + εδ(t)·x·[s] + binom(εδs,2)binom(εδt,2)·xη")
        };
        for n in 0..=e.top() {
            let (m, w, ts) = (self.m(n), &self.win[n], &self.tracks[n]);
            over(&mut run, &[w.c0.len(), ts.len(), ts.len()], &self.b, |v| {
                let (x, s, t) = (&w.c0[v[0]], &ts[v[1]], &ts[v[2]]);
                let lhs = e.act_track(n, x, &(s * t));
                let rhs = if ader {
                    let a = e.act1(n, &e.act_track(n, x, s), t.delta());
                    let b = e.act_track(n, x, t);
                    m.c1.add(&a, &(if s.epsilon() < 0 { m.c1.neg(&b) } else { b }))
                } else {
                    let a = e.act_track(n, &e.act0(n, x, s.delta()), t);
                    let b = e.act_track(n, x, s);
                    let mut r = m.c1.add(&a, &(if t.epsilon() < 0 { m.c1.neg(&b) } else { b }));
                    if binom_sign(s.epsilon()) * binom_sign(t.epsilon()) == 1 {
                        r = m.c1.add(&r, &e.eta(n, x));
                    }
                    r
                };
                self.eq1(n, &lhs, &rhs, || vec![self.f0(n, x), s.to_string(), t.to_string()], "x·[st]")
            });
        }
        run.finish()
    }

    fn omega(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("S6", "x·[ω] = x·η");
        for n in 0..=e.top() {
            let w = TrackElem::omega(n);
            run.run_over(&[&self.win[n].c0], &self.b, |v| {
                let lhs = e.act_track(n, v[0], &w);
                self.eq1(n, &lhs, &e.eta(n, v[0]), || vec![self.f0(n, v[0])], "x·[ω]")
            });
        }
        run.finish()
    }

    fn tauel(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("TAUEL", "(x·[Sᵐ∧t])·[τₙ,ₘ] = (x·[τₙ,ₘ])·[t∧Sᵐ]");
        for total in 0..=e.top() {
            let w = &self.win[total];
            for n in 0..=total {
                let m = total - n;
                let (ts, tm) = (&self.tracks[n], tau(n, m));
                over(&mut run, &[w.c0.len(), ts.len()], &self.b, |v| {
                    let (x, t) = (&w.c0[v[0]], &ts[v[1]]);
                    let ins = || vec![self.f0(total, x), t.to_string(), format!("m = {m}")];
                    let (left, right) = match (t.suspend_left(m), t.suspend_right(m)) {
                        (Ok(l), Ok(r)) => (l, r),
                        (Err(err), _) | (_, Err(err)) => return Outcome::Fails(Witness::new(ins(), err.to_string(), "a suspension")),
                    };
                    let lhs = e.act1(total, &e.act_track(total, x, &left), &tm);
                    let rhs = e.act_track(total, &e.act0(total, x, &tm), &right);
                    self.eq1(total, &lhs, &rhs, ins, "tauel")
                });
            }
        }
        run.finish()
    }

    fn mame(&self, solvers: &[SpanSolver]) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("MAME", "x·[g] ≡ ε(g)·x modulo boundaries");
        for n in 0..=e.top() {
            let (m, w, ps) = (self.m(n), &self.win[n], &self.perms[n]);
            over(&mut run, &[w.c0.len(), ps.len()], &self.b, |v| {
                let (x, g) = (&w.c0[v[0]], &ps[v[1]]);
                let ex = if g.sign() < 0 { m.c0.neg(x) } else { x.clone() };
                let diff = m.c0.sub(&e.act0(n, x, g), &ex);
                Outcome::check(solvers[n].contains(&diff), || {
                    Witness::new(vec![self.f0(n, x), g.to_string()], self.f0(n, &diff), "a boundary")
                })
            });
        }
        run.finish()
    }

    fn eqd(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("EQD", "(x·[τ₂ₖ,₂ₖ])·[τ̂₂ₖ,₂ₖ] + x·[τ̂₂ₖ,₂ₖ] = k·xη");
        for k in 0..=e.top() / 4 {
            let n = 4 * k;
            let m = self.m(n);
            let (t, th) = match TrackElem::shuffle_lift(2 * k, 2 * k) {
                Ok(th) => (tau(2 * k, 2 * k), th),
                Err(_) => break,
            };
            run.run_over(&[&self.win[n].c0], &self.b, |v| {
                let x = v[0];
                let lhs = m.c1.add(&e.act_track(n, &e.act0(n, x, &t), &th), &e.act_track(n, x, &th));
                let rhs = m.c1.scale(&(k as i64).into(), &e.eta(n, x));
                self.eq1(n, &lhs, &rhs, || vec![self.f0(n, x), format!("k = {k}")], "eq (d)")
            });
        }
        run.finish()
    }

    // ---- equivariance of the products ----

    fn equi(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("EQUI", "products are equivariant for g₁×g₂ and Sⁿ∧r");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (wp, wq, pp, pq) = (&self.win[p], &self.win[q], &self.perms[p], &self.perms[q]);
            over(&mut run, &[wp.c0.len(), wq.c0.len(), pp.len(), pq.len()], &self.b, |v| {
                let (x1, x2, g1, g2) = (&wp.c0[v[0]], &wq.c0[v[1]], &pp[v[2]], &pq[v[3]]);
                let lhs = act.x_y(p, &e.act0(p, x1, g1), q, &e.act0(q, x2, g2));
                let rhs = e.act0(n, &act.x_y(p, x1, q, x2), &g1.cross(g2));
                let ins = || vec![self.f0(p, x1), self.f0(q, x2), g1.to_string(), g2.to_string()];
                self.eq0(n, &lhs, &rhs, ins, "(x₁·[g₁])·(x₂·[g₂])")
            });
            over(&mut run, &[wp.c1.len(), wq.c0.len(), pp.len(), pq.len()], &self.b, |v| {
                let (s1, x2, g1, g2) = (&wp.c1[v[0]], &wq.c0[v[1]], &pp[v[2]], &pq[v[3]]);
                let lhs = act.s_x(p, &e.act1(p, s1, g1), q, &e.act0(q, x2, g2));
                let rhs = e.act1(n, &act.s_x(p, s1, q, x2), &g1.cross(g2));
                let ins = || vec![self.f1(p, s1), self.f0(q, x2), g1.to_string(), g2.to_string()];
                self.eq1(n, &lhs, &rhs, ins, "(s₁·[g₁])·(x₂·[g₂])")
            });
            over(&mut run, &[wp.cee.len(), wq.cee.len(), pp.len(), pp.len(), pq.len(), pq.len()], &self.b, |v| {
                let (a1, a2) = (&wp.cee[v[0]], &wq.cee[v[1]]);
                let (g1, h1, g2, h2) = (&pp[v[2]], &pp[v[3]], &pq[v[4]], &pq[v[5]]);
                let lhs = act.ee(p, &e.act_ee(p, a1, g1, h1), q, &e.act_ee(q, a2, g2, h2));
                let rhs = e.act_ee(n, &act.ee(p, a1, q, a2), &g1.cross(g2), &h1.cross(h2));
                Outcome::compare(&lhs, &rhs, || {
                    let ins = vec![self.fe(p, a1), self.fe(q, a2), g1.to_string(), h1.to_string(), g2.to_string(), h2.to_string()];
                    Witness::new(ins, self.fe(n, &lhs), self.fe(n, &rhs)).clause("ee level")
                })
            });
            let tq = &self.tracks[q];
            over(&mut run, &[wp.c0.len(), wq.c0.len(), tq.len()], &self.b, |v| {
                let (x1, x2, r) = (&wp.c0[v[0]], &wq.c0[v[1]], &tq[v[2]]);
                let ins = || vec![self.f0(p, x1), self.f0(q, x2), r.to_string()];
                let sr = match r.suspend_left(p) {
                    Ok(sr) => sr,
                    Err(err) => return Outcome::Fails(Witness::new(ins(), err.to_string(), "a suspension")),
                };
                let lhs = act.x_s(p, x1, q, &e.act_track(q, x2, r));
                let rhs = e.act_track(n, &act.x_y(p, x1, q, x2), &sr);
                self.eq1(n, &lhs, &rhs, ins, "x₁·(x₂·[r₂]) = (x₁x₂)·[Sⁿ¹∧r₂]")
            });
        }
        run.finish()
    }

    fn otros1(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("O1", "(x₁·[g₁])·(s₂·[g₂]) = (x₁s₂)·[g₁×g₂] when H(x₁) = 0");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (wp, wq, pp, pq) = (&self.win[p], &self.win[q], &self.perms[p], &self.perms[q]);
            over(&mut run, &[wp.c0.len(), wq.c1.len(), pp.len(), pq.len()], &self.b, |v| {
                let (x1, s2, g1, g2) = (&wp.c0[v[0]], &wq.c1[v[1]], &pp[v[2]], &pq[v[3]]);
                if !self.h_vanishes(&[(p, x1)]) {
                    return Outcome::Skip;
                }
                let lhs = act.x_s(p, &e.act0(p, x1, g1), q, &e.act1(q, s2, g2));
                let rhs = e.act1(n, &act.x_s(p, x1, q, s2), &g1.cross(g2));
                let ins = || vec![self.f0(p, x1), self.f1(q, s2), g1.to_string(), g2.to_string()];
                self.eq1(n, &lhs, &rhs, ins, "otros (1)")
            });
        }
        run.finish()
    }

    fn otros2(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("O2", "(x₁·[r₁])·x₂ = (x₁x₂)·[r₁∧Sⁿ²] when H(xᵢ) = 0");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (wp, wq, tp) = (&self.win[p], &self.win[q], &self.tracks[p]);
            over(&mut run, &[wp.c0.len(), wq.c0.len(), tp.len()], &self.b, |v| {
                let (x1, x2, r) = (&wp.c0[v[0]], &wq.c0[v[1]], &tp[v[2]]);
                if !self.h_vanishes(&[(p, x1), (q, x2)]) {
                    return Outcome::Skip;
                }
                let ins = || vec![self.f0(p, x1), self.f0(q, x2), r.to_string()];
                let rs = match r.suspend_right(q) {
                    Ok(rs) => rs,
                    Err(err) => return Outcome::Fails(Witness::new(ins(), err.to_string(), "a suspension")),
                };
                let lhs = act.s_x(p, &e.act_track(p, x1, r), q, x2);
                let rhs = e.act_track(n, &act.x_y(p, x1, q, x2), &rs);
                self.eq1(n, &lhs, &rhs, ins, "otros (2)")
            });
        }
        run.finish()
    }

    // ---- the cup-one product ----

    fn lc(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("LC", "(x₂x₁)·[τ] + ∂(x₁⌣₁x₂) = x₁x₂ + ∂P(H(x₂)·TH(x₁))·[τ], and the level 1 form");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (m, wp, wq, t) = (self.m(n), &self.win[p], &self.win[q], tau(p, q));
            run.run_over(&[&wp.c0, &wq.c0], &self.b, |v| {
                let (x1, x2) = (v[0], v[1]);
                let lhs = m.c0.add(&e.act0(n, &act.x_y(q, x2, p, x1), &t), &m.d(&e.cup(p, x1, q, x2)));
                let corr = m.pp(&act.ee(q, &self.m(q).hh(x2), p, &self.th(p, x1)));
                let rhs = m.c0.add(&act.x_y(p, x1, q, x2), &e.act0(n, &m.d(&corr), &t));
                self.eq0(n, &lhs, &rhs, || vec![self.f0(p, x1), self.f0(q, x2)], "level 0")
            });
            run.run_over(&[&wp.c1, &wq.c0], &self.b, |v| {
                let (s1, x2) = (v[0], v[1]);
                let ds = self.m(p).d(s1);
                let lhs = m.c1.add(&e.act1(n, &act.x_s(q, x2, p, s1), &t), &e.cup(p, &ds, q, x2));
                let corr = act.ee(q, &self.m(q).hh(x2), p, &self.th(p, &ds));
                let rhs = m.c1.add(&act.s_x(p, s1, q, x2), &self.p_act(n, &corr, &t));
                self.eq1(n, &lhs, &rhs, || vec![self.f1(p, s1), self.f0(q, x2)], "level 1")
            });
        }
        run.finish()
    }

    fn c1c(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("C1C", "(x₂⌣₁x₁)·[τ] + x₁⌣₁x₂ = −P(TH(x₁)·H(x₂)) + P(H(x₂)·TH(x₁))·[τ]");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (m, t) = (self.m(n), tau(p, q));
            run.run_over(&[&self.win[p].c0, &self.win[q].c0], &self.b, |v| {
                let (x1, x2) = (v[0], v[1]);
                let lhs = m.c1.add(&e.act1(n, &e.cup(q, x2, p, x1), &t), &e.cup(p, x1, q, x2));
                let a = m.pp(&act.ee(p, &self.th(p, x1), q, &self.m(q).hh(x2)));
                let b = self.p_act(n, &act.ee(q, &self.m(q).hh(x2), p, &self.th(p, x1)), &t);
                let rhs = m.c1.sub(&b, &a);
                self.eq1(n, &lhs, &rhs, || vec![self.f0(p, x1), self.f0(q, x2)], "c1c")
            });
        }
        run.finish()
    }

    fn c1_plus(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("C1+", "x₁⌣₁(x₂+x₃) = x₁⌣₁x₂ + x₁⌣₁x₃ + P(∂(x₁⌣₁x₂)|(x₃x₁)·[τ])_H");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (m, t, wq) = (self.m(n), tau(p, q), &self.win[q].c0);
            run.run_over(&[&self.win[p].c0, wq, wq], &self.b, |v| {
                let (x1, x2, x3) = (v[0], v[1], v[2]);
                let lhs = e.cup(p, x1, q, &self.m(q).c0.add(x2, x3));
                let c12 = e.cup(p, x1, q, x2);
                let cr = m.cross(&m.d(&c12), &e.act0(n, &act.x_y(q, x3, p, x1), &t));
                let rhs = m.c1.add(&m.c1.add(&c12, &e.cup(p, x1, q, x3)), &m.pp(&cr));
                self.eq1(n, &lhs, &rhs, || vec![self.f0(p, x1), self.f0(q, x2), self.f0(q, x3)], "c1+")
            });
        }
        run.finish()
    }

    fn c1m(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("C1M", "(x₁x₂)⌣₁x₃ expanded through x₁⌣₁x₃ and x₂⌣₁x₃");
        for (n1, n2, n3) in self.triples() {
            let n = n1 + n2 + n3;
            let m = self.m(n);
            let (m1, m2, m3, m13) = (self.m(n1), self.m(n2), self.m(n3), self.m(n1 + n3));
            let one_tau = id(n1).cross(&tau(n2, n3));
            let (t13, t_3) = (tau(n1, n3), tau(n1 + n2, n3));
            run.run_over(&[&self.win[n1].c0, &self.win[n2].c0, &self.win[n3].c0], &self.b, |v| {
                let (x1, x2, x3) = (v[0], v[1], v[2]);
                let lhs = e.cup(n1 + n2, &act.x_y(n1, x1, n2, x2), n3, x3);
                let c13 = e.cup(n1, x1, n3, x3);
                let a = e.act1(n, &act.s_x(n1 + n3, &c13, n2, x2), &one_tau);
                let b = act.x_s(n1, x1, n2 + n3, &e.cup(n2, x2, n3, x3));
                let cr = m13.cross(&m13.d(&c13), &e.act0(n1 + n3, &act.x_y(n3, x3, n1, x1), &t13));
                let c = self.p_act(n, &act.ee(n1 + n3, &cr, n2, &m2.hh(x2)), &one_tau);
                let (h3, c11, th2) = (m3.hh(x3), m1.cross(x1, x1), self.th(n2, x2));
                let d = self.p_act(n, &act.ee(n3 + n1, &act.ee(n3, &h3, n1, &c11), n2, &th2), &t_3);
                let f = self.p_act(n, &act.ee(n1 + n3, &act.ee(n1, &c11, n3, &h3), n2, &th2), &one_tau);
                let rhs = m.c1.sub(&m.c1.sum([&a, &b, &c, &d]), &f);
                self.eq1(n, &lhs, &rhs, || vec![self.f0(n1, x1), self.f0(n2, x2), self.f0(n3, x3)], "c1m")
            });
        }
        run.finish()
    }

    fn c1e(&self) -> LawReport {
        let e = self.e;
        let mut run = LawRun::new("C1E", "(x₁·[g₁])⌣₁(x₂·[g₂]) = (x₁⌣₁x₂)·[g₁×g₂]");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (wp, wq, pp, pq) = (&self.win[p], &self.win[q], &self.perms[p], &self.perms[q]);
            over(&mut run, &[wp.c0.len(), wq.c0.len(), pp.len(), pq.len()], &self.b, |v| {
                let (x1, x2, g1, g2) = (&wp.c0[v[0]], &wq.c0[v[1]], &pp[v[2]], &pq[v[3]]);
                let lhs = e.cup(p, &e.act0(p, x1, g1), q, &e.act0(q, x2, g2));
                let rhs = e.act1(n, &e.cup(p, x1, q, x2), &g1.cross(g2));
                let ins = || vec![self.f0(p, x1), self.f0(q, x2), g1.to_string(), g2.to_string()];
                self.eq1(n, &lhs, &rhs, ins, "c1e")
            });
        }
        run.finish()
    }

    fn otros3(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("O3", "(s₂x₁)·[τ] + x₁⌣₁∂(s₂) = x₁s₂ when H(x₁) = 0");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (m, t) = (self.m(n), tau(p, q));
            run.run_over(&[&self.win[p].c0, &self.win[q].c1], &self.b, |v| {
                let (x1, s2) = (v[0], v[1]);
                if !self.h_vanishes(&[(p, x1)]) {
                    return Outcome::Skip;
                }
                let lhs = m.c1.add(&e.act1(n, &act.s_x(q, s2, p, x1), &t), &e.cup(p, x1, q, &self.m(q).d(s2)));
                let rhs = act.x_s(p, x1, q, s2);
                self.eq1(n, &lhs, &rhs, || vec![self.f0(p, x1), self.f1(q, s2)], "otros (3)")
            });
        }
        run.finish()
    }

    fn otros4(&self) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = LawRun::new("O4", "(x₁+x₂)⌣₁x₃ = x₁⌣₁x₃ + x₂⌣₁x₃ + P(∂(x₁⌣₁x₃)|(x₃x₂)·[τ])_H when H(xᵢ) = 0");
        for (p, q) in self.pairs() {
            let n = p + q;
            let (m, t, wp) = (self.m(n), tau(p, q), &self.win[p].c0);
            run.run_over(&[wp, wp, &self.win[q].c0], &self.b, |v| {
                let (x1, x2, x3) = (v[0], v[1], v[2]);
                if !self.h_vanishes(&[(p, x1), (p, x2), (q, x3)]) {
                    return Outcome::Skip;
                }
                let lhs = e.cup(p, &self.m(p).c0.add(x1, x2), q, x3);
                let c13 = e.cup(p, x1, q, x3);
                let cr = m.cross(&m.d(&c13), &e.act0(n, &act.x_y(q, x3, p, x2), &t));
                let rhs = m.c1.add(&m.c1.add(&c13, &e.cup(p, x2, q, x3)), &m.pp(&cr));
                self.eq1(n, &lhs, &rhs, || vec![self.f0(p, x1), self.f0(p, x2), self.f0(q, x3)], "otros (4)")
            });
        }
        run.finish()
    }

    /// Lemma otros (5) and (6), which share their left side `x₁⌣₁(x₂x₃)`.
    fn otros56(&self, six: bool) -> LawReport {
        let (e, act) = (self.e, &self.act);
        let mut run = if six {
            LawRun::new("O6", "x₁⌣₁(x₂x₃) = ((x₃x₁)⌣₁x₂)·[τ] + (x₁x₂)⌣₁x₃ when H(xᵢ) = 0")
        } else {
            LawRun::new("O5", "x₁⌣₁(x₂x₃) = (x₂(x₁⌣₁x₃))·[τ×1] + (x₁⌣₁x₂)x₃ when H(xᵢ) = 0")
        };
        for (n1, n2, n3) in self.triples() {
            let n = n1 + n2 + n3;
            let m = self.m(n);
            let t5 = tau(n1, n2).cross(&id(n3));
            let t6 = tau(n1 + n2, n3);
            run.run_over(&[&self.win[n1].c0, &self.win[n2].c0, &self.win[n3].c0], &self.b, |v| {
                let (x1, x2, x3) = (v[0], v[1], v[2]);
                if !self.h_vanishes(&[(n1, x1), (n2, x2), (n3, x3)]) {
                    return Outcome::Skip;
                }
                let lhs = e.cup(n1, x1, n2 + n3, &act.x_y(n2, x2, n3, x3));
                let rhs = if six {
                    let a = e.act1(n, &e.cup(n3 + n1, &act.x_y(n3, x3, n1, x1), n2, x2), &t6);
                    m.c1.add(&a, &e.cup(n1 + n2, &act.x_y(n1, x1, n2, x2), n3, x3))
                } else {
                    let a = e.act1(n, &act.x_s(n2, x2, n1 + n3, &e.cup(n1, x1, n3, x3)), &t5);
                    m.c1.add(&a, &act.s_x(n1 + n2, &e.cup(n1, x1, n2, x2), n3, x3))
                };
                let clause = if six { "otros (6)" } else { "otros (5)" };
                self.eq1(n, &lhs, &rhs, || vec![self.f0(n1, x1), self.f0(n2, x2), self.f0(n3, x3)], clause)
            });
        }
        run.finish()
    }
}

/// Laws of the right `A(Σ̃ₙ)`-module structure on each degree: the
/// group-ring relations and their consequences (Lemma 10, ader, tauel,
/// mame, and the identity used for additivity of cup-one squares).
pub fn check_action_laws(e: Einfty, b: &Bounds) -> Vec<LawReport> {
    let c = Ctx::new(e, b);
    let solvers: Vec<SpanSolver> = e.base.degrees.iter().map(Qpm::boundary_solver).collect();
    vec![
        c.unit(),
        c.group_action(),
        c.boundary(),
        c.composite(false),
        c.omega(),
        c.composite(true),
        c.tauel(),
        c.mame(&solvers),
        c.eqd(),
    ]
}

/// Equivariance of the products, with Lemma otros (1) and (2).
pub fn check_equivariance(e: Einfty, b: &Bounds) -> Vec<LawReport> {
    let c = Ctx::new(e, b);
    vec![c.equi(), c.otros1(), c.otros2()]
}

/// Axioms of the cup-one product, with Lemma otros (3)–(6).
pub fn check_cupone_laws(e: Einfty, b: &Bounds) -> Vec<LawReport> {
    let c = Ctx::new(e, b);
    vec![c.lc(), c.c1c(), c.c1_plus(), c.c1m(), c.c1e(), c.otros3(), c.otros4(), c.otros56(false), c.otros56(true)]
}

/// Every E∞ suite: actions, equivariance, cup-one laws, the comparison of
/// the two cup-one squares and the commutative Toda laws under both lifts.
pub fn check_einfty(e: Einfty, b: &Bounds) -> Vec<LawReport> {
    let mut out = check_action_laws(e, b);
    out.extend(check_equivariance(e, b));
    out.extend(check_cupone_laws(e, b));
    out.push(lor2_check(e, b));
    out.extend(check_comm_toda_laws(e, Lift::TauHat, b));
    out.extend(check_comm_toda_laws(e, Lift::Omega, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::report::{all_pass, find, Status};

    fn suites(name: &str, b: Bounds) -> Vec<LawReport> {
        let inst = instances::builtin(name).unwrap();
        let e = inst.einfty().unwrap().unwrap();
        let mut out = check_action_laws(e, &b);
        out.extend(check_equivariance(e, &b));
        out.extend(check_cupone_laws(e, &b));
        out
    }

    #[test]
    fn lambda_z3_satisfies_every_axiom() {
        let r = suites("lambda-z3-einfty", Bounds::default());
        for x in &r {
            assert!(x.passed(), "{x:?}");
        }
        for id in ["EQUI", "LC", "C1C", "C1+", "C1M", "C1E", "O1", "O2", "O3", "O4", "O5", "O6"] {
            assert_eq!(find(&r, id).unwrap().status, Status::Pass, "{id}");
        }
    }

    #[test]
    fn zsigma_satisfies_every_axiom() {
        let r = suites("zsigma", Bounds::default());
        assert!(all_pass(&r), "{r:?}");
        assert_eq!(find(&r, "S6").unwrap().status, Status::Pass);
    }

    #[test]
    fn negative_control_fails_otros_six_at_x_x_x() {
        let r = suites("lambda-z-einfty-negative", Bounds::default().with_window(3));
        let o6 = find(&r, "O6").unwrap();
        assert_eq!(o6.status, Status::Fail);
        let w = o6.witness.as_ref().unwrap();
        assert_eq!(w.inputs, vec!["x", "x", "x"]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("-2q", "4q"));
    }

    #[test]
    fn broken_generator_action_is_caught() {
        let mut inst = instances::builtin("lambda-z3-einfty").unwrap();
        let data = inst.einfty.as_mut().unwrap();
        // s₁ acting as the identity on y breaks ∂(x·[t₁]) = −x·[s₁] − x
        data.actions[2].perm0[0] = crate::groups::Hom::identity(&inst.qpa.degrees[2].c0);
        let e = Einfty { base: &inst.qpa, data: inst.einfty.as_ref().unwrap() };
        let r = check_action_laws(e, &Bounds::default());
        assert_eq!(find(&r, "S4").unwrap().status, Status::Fail);
    }
}
