//! Massey products `⟨a,b,c⟩ ⊂ h₁` for algebras and right modules, coset
//! arithmetic, a brute-force lift enumerator and the Toda law suite T1–T6.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::algebra::{GradedQpa, RightModule};
use super::homology::HomologyRing;
use crate::enumerate::Bounds;
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Elem, SpanSolver};
use crate::qpm::Qpm;
use crate::report::{LawReport, LawRun, Outcome, Witness};

/// Cap on the number of elements listed for a coset.
pub const COSET_LISTING_CAP: usize = 4096;

/// `rep + ⟨gens⟩` inside some abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: Elem,
    pub gens: Vec<Elem>,
}

impl Coset {
    /// Reduces the data and keeps the distinct nonzero generators.
    pub fn new(g: &AbelianGroup, rep: Elem, gens: impl IntoIterator<Item = Elem>) -> Self {
        let set: BTreeSet<Elem> = gens.into_iter().map(|x| g.reduce(x)).filter(|x| !g.is_zero(x)).collect();
        Coset { rep: g.reduce(rep), gens: set.into_iter().collect() }
    }

    pub fn point(g: &AbelianGroup, rep: Elem) -> Self {
        Coset::new(g, rep, [])
    }

    fn in_span(g: &AbelianGroup, gens: &[Elem], x: &Elem) -> bool {
        if gens.is_empty() {
            g.is_zero(x)
        } else {
            g.in_span(gens, x)
        }
    }

    pub fn contains(&self, g: &AbelianGroup, x: &Elem) -> bool {
        Self::in_span(g, &self.gens, &g.sub(x, &self.rep))
    }

    pub fn subset(&self, g: &AbelianGroup, other: &Coset) -> bool {
        if !other.contains(g, &self.rep) {
            return false;
        }
        if self.gens.is_empty() {
            return true;
        }
        if other.gens.is_empty() {
            return false;
        }
        let s: SpanSolver = g.span_solver(&other.gens);
        self.gens.iter().all(|x| s.contains(x))
    }

    pub fn equals(&self, g: &AbelianGroup, other: &Coset) -> bool {
        self.subset(g, other) && other.subset(g, self)
    }

    pub fn intersects(&self, g: &AbelianGroup, other: &Coset) -> bool {
        let all: Vec<Elem> = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::in_span(g, &all, &g.sub(&self.rep, &other.rep))
    }

    pub fn add(&self, g: &AbelianGroup, other: &Coset) -> Coset {
        Coset::new(g, g.add(&self.rep, &other.rep), self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn neg(&self, g: &AbelianGroup) -> Coset {
        Coset::new(g, g.neg(&self.rep), self.gens.clone())
    }

    pub fn scale(&self, g: &AbelianGroup, k: &BigInt) -> Coset {
        Coset::new(g, g.scale(k, &self.rep), self.gens.iter().map(|x| g.scale(k, x)))
    }

    /// Image under a homomorphism into `tgt`.
    pub fn map(&self, tgt: &AbelianGroup, f: impl Fn(&Elem) -> Elem) -> Coset {
        Coset::new(tgt, f(&self.rep), self.gens.iter().map(f))
    }

    /// All elements, sorted, if there are at most `cap` of them.
    pub fn elements(&self, g: &AbelianGroup, cap: usize) -> Option<Vec<Elem>> {
        let sub = g.span_elements(&self.gens, cap)?;
        let set: BTreeSet<Elem> = sub.iter().map(|x| g.add(&self.rep, x)).collect();
        Some(set.into_iter().collect())
    }

    pub fn format(&self, g: &AbelianGroup) -> String {
        if self.gens.is_empty() {
            format!("{{{}}}", g.format(&self.rep))
        } else {
            let gens: Vec<String> = self.gens.iter().map(|x| g.format(x)).collect();
            format!("{} + ⟨{}⟩", g.format(&self.rep), gens.join(", "))
        }
    }
}

/// Representatives and boundary lifts used for one bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifts {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    /// `∂(ab̄) = ā·b̄`.
    pub ab: Elem,
    /// `∂(bc̄) = b̄·c̄`.
    pub bc: Elem,
}

#[derive(Clone, Debug)]
pub struct MasseyResult {
    pub degree: usize,
    /// The coset in `h₁` of the given degree.
    pub coset: Coset,
    /// Every element of the coset when there are few enough.
    pub listing: Option<Vec<Elem>>,
    pub lifts: Lifts,
    /// `h₁` of the bracket's degree.
    pub group: AbelianGroup,
}

impl MasseyResult {
    pub fn representative(&self) -> &Elem {
        &self.coset.rep
    }

    pub fn indeterminacy(&self) -> &[Elem] {
        &self.coset.gens
    }

    pub fn to_json(&self) -> Value {
        let g = &self.group;
        let f = |x: &Elem| Value::String(g.format(x));
        json!({
            "degree": self.degree,
            "representative": g.format(&self.coset.rep),
            "indeterminacy": self.coset.gens.iter().map(f).collect::<Vec<_>>(),
            "coset": self.listing.as_ref().map(|l| l.iter().map(f).collect::<Vec<_>>()),
        })
    }
}

/// Bracket computations for an algebra, or for a right module over one.
pub struct Brackets<'a> {
    pub ring: HomologyRing<'a>,
    lsolve: Vec<SpanSolver>,
    base: Option<Box<Brackets<'a>>>,
}

fn solvers(degrees: &[Qpm]) -> Vec<SpanSolver> {
    degrees.iter().map(Qpm::boundary_solver).collect()
}

impl<'a> Brackets<'a> {
    pub fn algebra(b: &'a GradedQpa) -> Result<Self> {
        Ok(Brackets { ring: HomologyRing::algebra(b)?, lsolve: solvers(&b.degrees), base: None })
    }

    pub fn module(m: &'a RightModule, b: &'a GradedQpa) -> Result<Self> {
        Ok(Brackets {
            ring: HomologyRing::module(m, b)?,
            lsolve: solvers(&m.degrees),
            base: Some(Box::new(Self::algebra(b)?)),
        })
    }

    /// Brackets of the underlying algebra.
    pub fn alg(&self) -> &Brackets<'a> {
        self.base.as_deref().unwrap_or(self)
    }

    pub fn is_algebra(&self) -> bool {
        self.base.is_none()
    }

    pub fn top(&self) -> usize {
        self.ring.top()
    }

    /// Whether `⟨a,b,c⟩` with entries in degrees `p, q, r` lies within the
    /// truncation.
    pub fn fits(&self, p: usize, q: usize, r: usize) -> bool {
        p + q + r <= self.top() && q + r < self.ring.rlen()
    }

    fn lift(&self, n: usize, x: &Elem) -> Option<Elem> {
        self.ring.act.left[n].preimage(&self.lsolve[n], x)
    }

    /// Structured choice: sections of `h₀` and solver preimages.
    pub fn lifts(&self, p: usize, a: &Elem, q: usize, b: &Elem, r: usize, c: &Elem) -> Result<Lifts> {
        if !self.fits(p, q, r) {
            return Err(Error::DegreeMismatch(format!("bracket in degree {} lies above the truncation", p + q + r)));
        }
        let (ring, alg) = (&self.ring, self.alg());
        let ab = ring.mul00(p, a, q, b);
        if !ring.h0(p + q).is_zero(&ab) {
            return Err(Error::BracketUndefined(format!("{}·{} ≠ 0", ring.h0(p).format(a), ring.rh0(q).format(b))));
        }
        let bc = alg.ring.mul00(q, b, r, c);
        if !alg.ring.h0(q + r).is_zero(&bc) {
            return Err(Error::BracketUndefined(format!("{}·{} ≠ 0", ring.rh0(q).format(b), ring.rh0(r).format(c))));
        }
        let abar = ring.left[p].h0.section(a);
        let bbar = ring.right[q].h0.section(b);
        let cbar = ring.right[r].h0.section(c);
        let prod = ring.act.x_y(p, &abar, q, &bbar);
        let ab = self.lift(p + q, &prod).ok_or_else(|| {
            Error::PreimageNotFound(format!("{} (ā·b̄ should be a boundary)", ring.act.left[p + q].c0.format(&prod)))
        })?;
        let prod = alg.ring.act.x_y(q, &bbar, r, &cbar);
        let bc = alg.lift(q + r, &prod).ok_or_else(|| {
            Error::PreimageNotFound(format!("{} (b̄·c̄ should be a boundary)", alg.ring.act.left[q + r].c0.format(&prod)))
        })?;
        Ok(Lifts { a: abar, b: bbar, c: cbar, ab, bc })
    }

    /// `−ab̄·c̄ + ā·bc̄` on level 1.
    pub fn chain(&self, p: usize, q: usize, r: usize, l: &Lifts) -> Elem {
        let act = &self.ring.act;
        let tgt = &act.left[p + q + r].c1;
        tgt.sub(&act.x_s(p, &l.a, q + r, &l.bc), &act.s_x(p + q, &l.ab, r, &l.c))
    }

    /// Generators of `(h₁L)_{p+q}·c + a·(h₁B)_{q+r}`.
    pub fn indeterminacy(&self, p: usize, a: &Elem, q: usize, r: usize, c: &Elem) -> Vec<Elem> {
        let ring = &self.ring;
        let g1 = ring.h1(p + q);
        let g2 = ring.rh1(q + r);
        (0..g1.rank())
            .map(|i| ring.mul10(p + q, &g1.generator(i), r, c))
            .chain((0..g2.rank()).map(|j| ring.mul01(p, a, q + r, &g2.generator(j))))
            .collect()
    }

    pub fn bracket(&self, p: usize, a: &Elem, q: usize, b: &Elem, r: usize, c: &Elem) -> Result<MasseyResult> {
        let mut res = self.coset_of(p, a, q, b, r, c)?;
        res.listing = res.coset.elements(&res.group, COSET_LISTING_CAP);
        Ok(res)
    }

    /// The bracket without the element listing.
    pub fn coset_of(&self, p: usize, a: &Elem, q: usize, b: &Elem, r: usize, c: &Elem) -> Result<MasseyResult> {
        let lifts = self.lifts(p, a, q, b, r, c)?;
        let n = p + q + r;
        let m = &self.ring.act.left[n];
        let chain = self.chain(p, q, r, &lifts);
        if !m.c0.is_zero(&m.d(&chain)) {
            return Err(Error::Invalid(format!("bracket representative {} is not a cycle", m.c1.format(&chain))));
        }
        let h1 = &self.ring.left[n].h1;
        let rep = h1.class(&chain)?;
        let group = h1.group().clone();
        let coset = Coset::new(&group, rep, self.indeterminacy(p, a, q, r, c));
        Ok(MasseyResult { degree: n, coset, listing: None, lifts, group })
    }

    /// Values of `−ab̄·c̄ + ā·bc̄` over every choice of representatives
    /// `section + ∂u` and every lift `y` with `∂y` equal to the product, for
    /// `u` and `y` ranging over windows of level 1. Uses no solver.
    pub fn oracle(&self, p: usize, a: &Elem, q: usize, b: &Elem, r: usize, c: &Elem, bounds: &Bounds) -> Result<BTreeSet<Elem>> {
        if !self.fits(p, q, r) {
            return Err(Error::DegreeMismatch(format!("bracket in degree {} lies above the truncation", p + q + r)));
        }
        let (ring, alg) = (&self.ring, &self.alg().ring);
        let reps = |m: &Qpm, x: Elem| -> Vec<Elem> {
            let set: BTreeSet<Elem> =
                m.c1.window(bounds.window, bounds.window_cap).iter().map(|u| m.c0.add(&x, &m.d(u))).collect();
            set.into_iter().collect()
        };
        let lifts_of = |m: &Qpm, target: &Elem| -> Vec<Elem> {
            m.c1.window(bounds.window, bounds.window_cap).into_iter().filter(|y| m.d(y) == *target).collect()
        };
        let (lm, rq, rr) = (&ring.act.left[p], &ring.act.right[q], &ring.act.right[r]);
        let abars = reps(lm, ring.left[p].h0.section(a));
        let bbars = reps(rq, ring.right[q].h0.section(b));
        let cbars = reps(rr, ring.right[r].h0.section(c));
        let n = p + q + r;
        let mut out = BTreeSet::new();
        for abar in &abars {
            for bbar in &bbars {
                let prod = ring.act.x_y(p, abar, q, bbar);
                let abs = lifts_of(&ring.act.left[p + q], &prod);
                if abs.is_empty() {
                    return Err(Error::PreimageNotFound(format!(
                        "no lift of {} within the window",
                        ring.act.left[p + q].c0.format(&prod)
                    )));
                }
                for cbar in &cbars {
                    let prod = alg.act.x_y(q, bbar, r, cbar);
                    let bcs = lifts_of(&alg.act.left[q + r], &prod);
                    if bcs.is_empty() {
                        return Err(Error::PreimageNotFound(format!(
                            "no lift of {} within the window",
                            alg.act.left[q + r].c0.format(&prod)
                        )));
                    }
                    for ab in &abs {
                        for bc in &bcs {
                            let l = Lifts { a: abar.clone(), b: bbar.clone(), c: cbar.clone(), ab: ab.clone(), bc: bc.clone() };
                            out.insert(ring.left[n].h1.class(&self.chain(p, q, r, &l))?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Toda laws T1–T5, and T6 for an algebra. Module law ids carry an `M`
    /// prefix.
    pub fn check_toda_laws(&self, bounds: &Bounds) -> Vec<LawReport> {
        let mut out = vec![self.t1(bounds), self.t2(bounds), self.t3(bounds), self.t4(bounds), self.t5(bounds)];
        if self.is_algebra() {
            out.push(self.t6(bounds));
        }
        out
    }

    fn id(&self, law: &str) -> String {
        if self.is_algebra() {
            law.to_string()
        } else {
            format!("M{law}")
        }
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let top = self.top();
        let mut v = Vec::new();
        for p in 0..=top {
            for q in 0..=top - p {
                for r in 0..=top - p - q {
                    if self.fits(p, q, r) {
                        v.push((p, q, r));
                    }
                }
            }
        }
        v
    }

    fn quadruples(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut v = Vec::new();
        for (p, q, r) in self.triples() {
            for s in 0..=self.top() - p - q - r {
                if q + r + s < self.ring.rlen() {
                    v.push((p, q, r, s));
                }
            }
        }
        v
    }

    fn fa(&self, p: usize, a: &Elem) -> String {
        self.ring.h0(p).format(a)
    }

    fn fb(&self, q: usize, b: &Elem) -> String {
        self.ring.rh0(q).format(b)
    }

    fn t1(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T1"), "0 ∈ ⟨a,b,c⟩ if a, b or c is zero");
        let ring = &self.ring;
        for (p, q, r) in self.triples() {
            let (az, bz, cz) = (ring.h0(p).zero(), ring.rh0(q).zero(), ring.rh0(r).zero());
            let (aw, bw, cw) = (ring.classes0(p, bounds), ring.rclasses0(q, bounds), ring.rclasses0(r, bounds));
            let check = |a: &Elem, b: &Elem, c: &Elem, clause: &str| match self.coset_of(p, a, q, b, r, c) {
                Err(Error::BracketUndefined(_)) => Outcome::Skip,
                Err(e) => Outcome::Fails(Witness::new(vec![self.fa(p, a), self.fb(q, b), self.fb(r, c)], e.to_string(), "a bracket").clause(clause)),
                Ok(res) => {
                    let zero = res.group.zero();
                    Outcome::check(res.coset.contains(&res.group, &zero), || {
                        Witness::new(vec![self.fa(p, a), self.fb(q, b), self.fb(r, c)], res.coset.format(&res.group), "∋ 0").clause(clause)
                    })
                }
            };
            run.run_over(&[&bw, &cw], bounds, |v| check(&az, v[0], v[1], "a = 0"));
            run.run_over(&[&aw, &cw], bounds, |v| check(v[0], &bz, v[1], "b = 0"));
            run.run_over(&[&aw, &bw], bounds, |v| check(v[0], v[1], &cz, "c = 0"));
        }
        run.finish()
    }

    fn t2(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T2"), "linearity of ⟨a,b,c⟩ in each variable");
        let ring = &self.ring;
        for (p, q, r) in self.triples() {
            let g = ring.h1(p + q + r);
            let (aw, bw, cw) = (ring.classes0(p, bounds), ring.rclasses0(q, bounds), ring.rclasses0(r, bounds));
            let (ga, gb, gc) = (ring.h0(p), ring.rh0(q), ring.rh0(r));
            // Shape: (lhs, [summands], equality?)
            let law = |ins: Vec<String>, lhs: (Elem, Elem, Elem), parts: [(Elem, Elem, Elem); 2], equal: bool, clause: &str| {
                let br = |t: &(Elem, Elem, Elem)| self.coset_of(p, &t.0, q, &t.1, r, &t.2);
                let (x, y) = match (br(&parts[0]), br(&parts[1])) {
                    (Ok(x), Ok(y)) => (x, y),
                    (Err(Error::BracketUndefined(_)), _) | (_, Err(Error::BracketUndefined(_))) => return Outcome::Skip,
                    (Err(e), _) | (_, Err(e)) => return Outcome::Fails(Witness::new(ins, e.to_string(), "a bracket").clause(clause)),
                };
                let sum = x.coset.add(g, &y.coset);
                match br(&lhs) {
                    Ok(l) => {
                        let ok = if equal { l.coset.equals(g, &sum) } else { l.coset.subset(g, &sum) };
                        Outcome::check(ok, || Witness::new(ins, l.coset.format(g), sum.format(g)).clause(clause))
                    }
                    Err(e) => Outcome::Fails(Witness::new(ins, e.to_string(), sum.format(g)).clause(clause)),
                }
            };
            run.run_over(&[&aw, &aw, &bw, &cw], bounds, |v| {
                let ins = vec![self.fa(p, v[0]), self.fa(p, v[1]), self.fb(q, v[2]), self.fb(r, v[3])];
                let parts = [(v[0].clone(), v[2].clone(), v[3].clone()), (v[1].clone(), v[2].clone(), v[3].clone())];
                law(ins, (ga.add(v[0], v[1]), v[2].clone(), v[3].clone()), parts, false, "⟨a+a',b,c⟩ ⊂ ⟨a,b,c⟩+⟨a',b,c⟩")
            });
            run.run_over(&[&aw, &bw, &bw, &cw], bounds, |v| {
                let ins = vec![self.fa(p, v[0]), self.fb(q, v[1]), self.fb(q, v[2]), self.fb(r, v[3])];
                let parts = [(v[0].clone(), v[1].clone(), v[3].clone()), (v[0].clone(), v[2].clone(), v[3].clone())];
                law(ins, (v[0].clone(), gb.add(v[1], v[2]), v[3].clone()), parts, true, "⟨a,b+b',c⟩ = ⟨a,b,c⟩+⟨a,b',c⟩")
            });
            run.run_over(&[&aw, &bw, &cw, &cw], bounds, |v| {
                let ins = vec![self.fa(p, v[0]), self.fb(q, v[1]), self.fb(r, v[2]), self.fb(r, v[3])];
                let parts = [(v[0].clone(), v[1].clone(), v[2].clone()), (v[0].clone(), v[1].clone(), v[3].clone())];
                law(ins, (v[0].clone(), v[1].clone(), gc.add(v[2], v[3])), parts, false, "⟨a,b,c+c'⟩ ⊂ ⟨a,b,c⟩+⟨a,b,c'⟩")
            });
        }
        run.finish()
    }

    fn quad_lists(&self, p: usize, q: usize, r: usize, s: usize, bounds: &Bounds) -> [Vec<Elem>; 4] {
        let ring = &self.ring;
        [ring.classes0(p, bounds), ring.rclasses0(q, bounds), ring.rclasses0(r, bounds), ring.rclasses0(s, bounds)]
    }

    fn quad_ins(&self, p: usize, q: usize, r: usize, s: usize, v: &[&Elem]) -> Vec<String> {
        vec![self.fa(p, v[0]), self.fb(q, v[1]), self.fb(r, v[2]), self.fb(s, v[3])]
    }

    fn t3(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T3"), "a·⟨b,c,d⟩ ⊂ ⟨ab,c,d⟩ and ⟨a,b,c⟩·d ⊂ ⟨a,b,cd⟩");
        let (ring, alg) = (&self.ring, self.alg());
        for (p, q, r, s) in self.quadruples() {
            let n = p + q + r + s;
            let g = ring.h1(n);
            let [aw, bw, cw, dw] = self.quad_lists(p, q, r, s, bounds);
            run.run_over(&[&aw, &bw, &cw, &dw], bounds, |v| {
                let ins = || self.quad_ins(p, q, r, s, v);
                let inner = match alg.coset_of(q, v[1], r, v[2], s, v[3]) {
                    Ok(x) => x,
                    Err(Error::BracketUndefined(_)) => return Outcome::Skip,
                    Err(e) => return Outcome::Fails(Witness::new(ins(), e.to_string(), "a bracket").clause("a·⟨b,c,d⟩")),
                };
                let left = inner.coset.map(g, |z| ring.mul01(p, v[0], q + r + s, z));
                let ab = ring.mul00(p, v[0], q, v[1]);
                match self.coset_of(p + q, &ab, r, v[2], s, v[3]) {
                    Ok(right) => Outcome::check(left.subset(g, &right.coset), || {
                        Witness::new(ins(), left.format(g), right.coset.format(g)).clause("a·⟨b,c,d⟩ ⊂ ⟨ab,c,d⟩")
                    }),
                    Err(e) => Outcome::Fails(Witness::new(ins(), left.format(g), e.to_string()).clause("a·⟨b,c,d⟩ ⊂ ⟨ab,c,d⟩")),
                }
            });
            run.run_over(&[&aw, &bw, &cw, &dw], bounds, |v| {
                let ins = || self.quad_ins(p, q, r, s, v);
                let inner = match self.coset_of(p, v[0], q, v[1], r, v[2]) {
                    Ok(x) => x,
                    Err(Error::BracketUndefined(_)) => return Outcome::Skip,
                    Err(e) => return Outcome::Fails(Witness::new(ins(), e.to_string(), "a bracket").clause("⟨a,b,c⟩·d")),
                };
                let left = inner.coset.map(g, |z| ring.mul10(p + q + r, z, s, v[3]));
                let cd = alg.ring.mul00(r, v[2], s, v[3]);
                match self.coset_of(p, v[0], q, v[1], r + s, &cd) {
                    Ok(right) => Outcome::check(left.subset(g, &right.coset), || {
                        Witness::new(ins(), left.format(g), right.coset.format(g)).clause("⟨a,b,c⟩·d ⊂ ⟨a,b,cd⟩")
                    }),
                    Err(e) => Outcome::Fails(Witness::new(ins(), left.format(g), e.to_string()).clause("⟨a,b,c⟩·d ⊂ ⟨a,b,cd⟩")),
                }
            });
        }
        run.finish()
    }

    fn t4(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T4"), "⟨ab,c,d⟩ ⊂ ⟨a,bc,d⟩ ⊃ ⟨a,b,cd⟩");
        let (ring, alg) = (&self.ring, self.alg());
        for (p, q, r, s) in self.quadruples() {
            let g = ring.h1(p + q + r + s);
            let [aw, bw, cw, dw] = self.quad_lists(p, q, r, s, bounds);
            let incl = |ins: Vec<String>, small: Result<MasseyResult>, big: Result<MasseyResult>, clause: &str| match (small, big) {
                (Ok(x), Ok(y)) => {
                    Outcome::check(x.coset.subset(g, &y.coset), || Witness::new(ins, x.coset.format(g), y.coset.format(g)).clause(clause))
                }
                (Err(Error::BracketUndefined(_)), _) | (_, Err(Error::BracketUndefined(_))) => Outcome::Skip,
                (Err(e), _) | (_, Err(e)) => Outcome::Fails(Witness::new(ins, e.to_string(), "a bracket").clause(clause)),
            };
            run.run_over(&[&aw, &bw, &cw, &dw], bounds, |v| {
                let ab = ring.mul00(p, v[0], q, v[1]);
                let bc = alg.ring.mul00(q, v[1], r, v[2]);
                incl(
                    self.quad_ins(p, q, r, s, v),
                    self.coset_of(p + q, &ab, r, v[2], s, v[3]),
                    self.coset_of(p, v[0], q + r, &bc, s, v[3]),
                    "⟨ab,c,d⟩ ⊂ ⟨a,bc,d⟩",
                )
            });
            run.run_over(&[&aw, &bw, &cw, &dw], bounds, |v| {
                let bc = alg.ring.mul00(q, v[1], r, v[2]);
                let cd = alg.ring.mul00(r, v[2], s, v[3]);
                incl(
                    self.quad_ins(p, q, r, s, v),
                    self.coset_of(p, v[0], q, v[1], r + s, &cd),
                    self.coset_of(p, v[0], q + r, &bc, s, v[3]),
                    "⟨a,b,cd⟩ ⊂ ⟨a,bc,d⟩",
                )
            });
        }
        run.finish()
    }

    fn t5(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T5"), "0 ∈ ⟨a,b,c⟩d + a⟨b,c,d⟩");
        let (ring, alg) = (&self.ring, self.alg());
        for (p, q, r, s) in self.quadruples() {
            let n = p + q + r + s;
            let g = ring.h1(n);
            let [aw, bw, cw, dw] = self.quad_lists(p, q, r, s, bounds);
            run.run_over(&[&aw, &bw, &cw, &dw], bounds, |v| {
                let ins = || self.quad_ins(p, q, r, s, v);
                let (l1, l2) = match (self.lifts(p, v[0], q, v[1], r, v[2]), alg.lifts(q, v[1], r, v[2], s, v[3])) {
                    (Ok(x), Ok(y)) => (x, y),
                    (Err(Error::BracketUndefined(_)), _) | (_, Err(Error::BracketUndefined(_))) => return Outcome::Skip,
                    (Err(e), _) | (_, Err(e)) => return Outcome::Fails(Witness::new(ins(), e.to_string(), "a bracket")),
                };
                // Share the lift of b̄·c̄ between both brackets.
                let l2 = Lifts { ab: l1.bc.clone(), ..l2 };
                let rep1 = self.chain(p, q, r, &l1);
                let rep2 = alg.chain(q, r, s, &l2);
                let h1l = &ring.left[p + q + r].h1;
                let h1b = &alg.ring.left[q + r + s].h1;
                let (c1, c2) = match (h1l.class(&rep1), h1b.class(&rep2)) {
                    (Ok(x), Ok(y)) => (x, y),
                    (Err(e), _) | (_, Err(e)) => return Outcome::Fails(Witness::new(ins(), e.to_string(), "cycles")),
                };
                let x = Coset::new(ring.h1(p + q + r), c1, self.indeterminacy(p, v[0], q, r, v[2]));
                let y = Coset::new(alg.ring.h1(q + r + s), c2, alg.indeterminacy(q, v[1], r, s, v[3]));
                let sum = x
                    .map(g, |z| ring.mul10(p + q + r, z, s, v[3]))
                    .add(g, &y.map(g, |z| ring.mul01(p, v[0], q + r + s, z)));
                if !sum.contains(g, &g.zero()) {
                    return Outcome::Fails(Witness::new(ins(), sum.format(g), "∋ 0").clause("class level"));
                }
                let act = &ring.act;
                let dbar = ring.right[s].h0.section(v[3]);
                let h_free = act.left[p].hh(&l1.a).iter().all(|c| c == &BigInt::from(0))
                    && [(&l1.b, q), (&l1.c, r), (&dbar, s)].iter().all(|(x, k)| act.right[*k].cee.is_zero(&act.right[*k].hh(x)));
                if !h_free {
                    return Outcome::Holds;
                }
                let m = &act.left[n];
                let chain = m.c1.add(&act.s_x(p + q + r, &rep1, s, &dbar), &act.x_s(p, &l1.a, q + r + s, &rep2));
                Outcome::check(m.c1.is_zero(&chain), || {
                    Witness::new(ins(), m.c1.format(&chain), "0").clause("rep₁·d̄ + ā·rep₂ = 0 with shared bc̄")
                })
            });
        }
        run.finish()
    }

    fn t6(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new(self.id("T6"), "a·η ∈ ⟨2,a,2⟩");
        let ring = &self.ring;
        let two = ring.rh0(0).scale(&BigInt::from(2), &ring.unit);
        for p in 0..=self.top() {
            if !self.fits(0, p, 0) {
                continue;
            }
            let aw = ring.rclasses0(p, bounds);
            run.run_over(&[&aw], bounds, |v| {
                let a = v[0];
                let g0 = ring.h0(p);
                if g0.is_zero(a) {
                    return Outcome::Skip;
                }
                match self.coset_of(0, &two, p, a, 0, &two) {
                    Err(Error::BracketUndefined(_)) => Outcome::Skip,
                    Err(e) => Outcome::Fails(Witness::new(vec![g0.format(a)], e.to_string(), "a bracket")),
                    Ok(res) => match ring.eta(p, a) {
                        Ok(eta) => Outcome::check(res.coset.contains(&res.group, &eta), || {
                            Witness::new(vec![g0.format(a)], res.group.format(&eta), res.coset.format(&res.group))
                        }),
                        Err(e) => Outcome::Fails(Witness::new(vec![g0.format(a)], e.to_string(), "a·η")),
                    },
                }
            });
        }
        let mut r = run.finish();
        if r.tuples_checked == 0 {
            r.note = Some("no nonzero class a with 2a = 0 in the window".into());
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::builtin;
    use crate::qpm::ints;
    use crate::report::{all_pass, find, Status};

    #[test]
    fn lambda_xxx_is_q() {
        let inst = builtin("lambda-z").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        let x = ints(&[1]);
        let res = br.bracket(1, &x, 1, &x, 1, &x).unwrap();
        assert_eq!(res.degree, 3);
        assert_eq!(res.group.format(res.representative()), "q");
        assert!(res.indeterminacy().is_empty());
        assert_eq!(res.listing, Some(vec![ints(&[1])]));
        assert_eq!(
            res.to_json().to_string(),
            r#"{"coset":["q"],"degree":3,"indeterminacy":[],"representative":"q"}"#
        );
        let oracle = br.oracle(1, &x, 1, &x, 1, &x, &Bounds::default().with_window(4)).unwrap();
        assert_eq!(oracle.into_iter().collect::<Vec<_>>(), res.listing.unwrap());
    }

    #[test]
    fn undefined_bracket_names_the_product() {
        let inst = builtin("lambda-z").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        match br.bracket(1, &ints(&[1]), 0, &ints(&[1]), 1, &ints(&[1])) {
            Err(Error::BracketUndefined(m)) => assert_eq!(m, "x·1 ≠ 0"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_middle_entry_contains_zero() {
        let inst = builtin("zsigma").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        let res = br.bracket(0, &ints(&[1]), 0, &ints(&[0]), 0, &ints(&[1])).unwrap();
        assert!(res.coset.contains(&res.group, &ints(&[0])));
    }

    #[test]
    fn lambda_z3_x_x_2x_is_2q() {
        let inst = builtin("lambda-z3").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        let (x, x2) = (ints(&[1]), ints(&[2]));
        let res = br.bracket(1, &x, 1, &x, 1, &x2).unwrap();
        assert_eq!(res.listing, Some(vec![ints(&[2])]));
        let oracle = br.oracle(1, &x, 1, &x, 1, &x2, &Bounds::default().with_window(2)).unwrap();
        assert_eq!(oracle.into_iter().collect::<Vec<_>>(), vec![ints(&[2])]);
        let mid = br.bracket(1, &x, 1, &x2, 1, &x).unwrap();
        assert_eq!(mid.listing, Some(vec![ints(&[2])]));
    }

    #[test]
    fn module_bracket_matches_algebra_bracket() {
        let inst = builtin("lambda-z").unwrap();
        let m = inst.qpa.as_module();
        let br = Brackets::module(&m, &inst.qpa).unwrap();
        let x = ints(&[1]);
        let res = br.bracket(1, &x, 1, &x, 1, &x).unwrap();
        assert_eq!(res.listing, Some(vec![ints(&[1])]));
    }

    #[test]
    fn zero_action_module_brackets_contain_zero() {
        let inst = builtin("lambda-z").unwrap();
        let m = RightModule::with_zero_action("point", inst.qpa.degrees[1].clone());
        let br = Brackets::module(&m, &inst.qpa).unwrap();
        let reports = br.check_toda_laws(&Bounds::default().with_window(2));
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn coset_arithmetic() {
        let g = AbelianGroup::cyclic(&[6], &["g"]);
        let a = Coset::new(&g, ints(&[1]), [ints(&[3])]);
        assert_eq!(a.elements(&g, 10).unwrap(), vec![ints(&[1]), ints(&[4])]);
        assert!(a.contains(&g, &ints(&[4])));
        assert!(!a.contains(&g, &ints(&[2])));
        let b = Coset::new(&g, ints(&[0]), [ints(&[2])]);
        assert!(a.intersects(&g, &b));
        assert!(!Coset::point(&g, ints(&[1])).subset(&g, &b));
        let s = a.add(&g, &b);
        assert_eq!(s.elements(&g, 10).unwrap().len(), 6);
        assert!(a.subset(&g, &s));
        assert!(a.neg(&g).contains(&g, &ints(&[5])));
        assert!(a.scale(&g, &BigInt::from(2)).equals(&g, &Coset::point(&g, ints(&[2]))));
    }

    #[test]
    fn lambda_toda_laws() {
        for name in ["lambda-z", "lambda-z3"] {
            let inst = builtin(name).unwrap();
            let br = Brackets::algebra(&inst.qpa).unwrap();
            let reports = br.check_toda_laws(&Bounds::default().with_window(2));
            assert!(all_pass(&reports), "{name}: {reports:?}");
            assert_eq!(find(&reports, "T1").unwrap().status, Status::Pass);
            assert_eq!(find(&reports, "T6").unwrap().status, Status::Vacuous, "{name}");
        }
    }

    #[test]
    fn zsigma_toda_laws() {
        let inst = builtin("zsigma").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        let reports = br.check_toda_laws(&Bounds::default().with_window(4));
        assert!(all_pass(&reports), "{reports:?}");
        assert_eq!(find(&reports, "T1").unwrap().status, Status::Pass);
    }
}
