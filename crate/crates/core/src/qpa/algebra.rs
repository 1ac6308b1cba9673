//! Graded quadratic pair algebras and right modules over them.
//!
//! Multiplications are stored on generators. The left-hand variable enters
//! quadratically: products with a sum on the left pick up the correction
//! terms dictated by left distributivity, so
//! `(Σ xᵢeᵢ)·y = Σ xᵢ(eᵢ·y) + Σ binom(xᵢ,2) ∂P((eᵢ|eᵢ)·H(y)) + Σ_{i<j} xᵢxⱼ ∂P((eᵢ|eⱼ)·H(y))`
//! and similarly for the other two mixed-level products.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerate::Bounds;
use crate::error::{Error, Result};
use crate::groups::{binom2, AbelianGroup, Bilinear, Elem};
use crate::qpm::{Qpm, Windows};
use crate::report::{LawReport, LawRun, Outcome, Witness};

/// Multiplication tables keyed by `(left degree, right degree)`; missing
/// entries are zero.
pub type Table = BTreeMap<(usize, usize), Bilinear>;

/// The four multiplications `0·0 → 0`, `0·1 → 1`, `1·0 → 1` and `ee·ee → ee`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Products {
    pub m00: Table,
    pub m01: Table,
    pub m10: Table,
    pub mee: Table,
}

/// An `ℕ`-graded quadratic pair algebra truncated above its top degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedQpa {
    pub name: String,
    pub degrees: Vec<Qpm>,
    pub products: Products,
    /// The unit, an element of `B₀,₀`.
    pub unit: Elem,
}

/// A right module over a [`GradedQpa`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub name: String,
    pub degrees: Vec<Qpm>,
    pub products: Products,
}

/// Products of a left family (an algebra or a module) with an algebra.
#[derive(Clone, Copy)]
pub struct Action<'a> {
    pub left: &'a [Qpm],
    pub right: &'a [Qpm],
    pub prod: &'a Products,
}

impl GradedQpa {
    pub fn truncation(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn action(&self) -> Action<'_> {
        Action { left: &self.degrees, right: &self.degrees, prod: &self.products }
    }

    /// The algebra as a right module over itself.
    pub fn as_module(&self) -> RightModule {
        RightModule { name: self.name.clone(), degrees: self.degrees.clone(), products: self.products.clone() }
    }

    /// `(1|1)_H ∈ B₀,ee`.
    pub fn ee_unit(&self) -> Elem {
        self.degrees[0].cross(&self.unit, &self.unit)
    }

    /// Shapes, ranges and well-definedness of every table and of the unit.
    pub fn validate(&self) -> Result<()> {
        if self.degrees.is_empty() {
            return Err(Error::Invalid("an algebra needs degree 0".into()));
        }
        self.degrees[0].c0.check(&self.unit).map_err(|e| Error::Invalid(format!("unit: {e}")))?;
        let h1 = self.degrees[0].hh(&self.unit);
        if !self.degrees[0].cee.is_zero(&h1) {
            return Err(Error::Invalid(format!("H(1) = {} is not zero", self.degrees[0].cee.format(&h1))));
        }
        self.action().validate()
    }
}

impl RightModule {
    pub fn truncation(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn action<'a>(&'a self, base: &'a GradedQpa) -> Action<'a> {
        Action { left: &self.degrees, right: &base.degrees, prod: &self.products }
    }

    /// A module concentrated in degree 0 with carriers of `m` and zero actions.
    pub fn with_zero_action(name: &str, m: Qpm) -> Self {
        RightModule { name: name.into(), degrees: vec![m], products: Products::default() }
    }
}

fn lookup(t: &Table, p: usize, q: usize) -> Option<&Bilinear> {
    t.get(&(p, q))
}

/// `Σ_{i<=j} kᵢⱼ β(cᵢⱼ, y)` over the quadratic coefficients of `x`:
/// `kᵢᵢ = binom(xᵢ,2)` and `kᵢⱼ = xᵢxⱼ`.
fn quadratic_sum(x: &Elem, pair: impl Fn(usize, usize) -> Option<Elem>, tgt: &AbelianGroup) -> Option<Elem> {
    let mut acc: Option<Elem> = None;
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in i..x.len() {
            if x[j].is_zero() {
                continue;
            }
            let k = if i == j { binom2(&x[i]) } else { &x[i] * &x[j] };
            if k.is_zero() {
                continue;
            }
            if let Some(v) = pair(i, j) {
                let a = acc.get_or_insert_with(|| tgt.zero());
                for (s, t) in a.iter_mut().zip(&v) {
                    if !t.is_zero() {
                        *s += &k * t;
                    }
                }
            }
        }
    }
    acc.map(|a| tgt.reduce(a))
}

impl<'a> Action<'a> {
    pub fn top(&self) -> usize {
        self.left.len() - 1
    }

    fn target(&self, p: usize, q: usize) -> &'a Qpm {
        assert!(p + q <= self.top(), "product lands above the truncation");
        &self.left[p + q]
    }

    /// `a·b` for `a ∈ L_{p,ee}`, `b ∈ B_{q,ee}`.
    pub fn ee(&self, p: usize, a: &Elem, q: usize, b: &Elem) -> Elem {
        let tgt = self.target(p, q);
        match lookup(&self.prod.mee, p, q) {
            Some(t) => t.apply(&tgt.cee, a, b),
            None => tgt.cee.zero(),
        }
    }

    fn pair_times(&self, p: usize, c: &Elem, q: usize, h: &Elem) -> Option<Elem> {
        if self.left[p].cee.is_zero(c) || self.right[q].cee.is_zero(h) {
            None
        } else {
            Some(self.ee(p, c, q, h))
        }
    }

    /// `x·y` for `x ∈ L_{p,0}`, `y ∈ B_{q,0}`.
    pub fn x_y(&self, p: usize, x: &Elem, q: usize, y: &Elem) -> Elem {
        let tgt = self.target(p, q);
        let base = match lookup(&self.prod.m00, p, q) {
            Some(t) => t.apply(&tgt.c0, x, y),
            None => tgt.c0.zero(),
        };
        let hy = self.right[q].hh(y);
        let pairing = &self.left[p].h.pairing.table;
        match quadratic_sum(x, |i, j| self.pair_times(p, &pairing[i][j], q, &hy), &tgt.cee) {
            Some(c) => tgt.c0.add(&base, &tgt.d(&tgt.pp(&c))),
            None => base,
        }
    }

    /// `x·s` for `x ∈ L_{p,0}`, `s ∈ B_{q,1}`.
    pub fn x_s(&self, p: usize, x: &Elem, q: usize, s: &Elem) -> Elem {
        let tgt = self.target(p, q);
        let base = match lookup(&self.prod.m01, p, q) {
            Some(t) => t.apply(&tgt.c1, x, s),
            None => tgt.c1.zero(),
        };
        let r = &self.right[q];
        let hds = r.hh(&r.d(s));
        let pairing = &self.left[p].h.pairing.table;
        match quadratic_sum(x, |i, j| self.pair_times(p, &pairing[i][j], q, &hds), &tgt.cee) {
            Some(c) => tgt.c1.add(&base, &tgt.pp(&c)),
            None => base,
        }
    }

    /// `s·x` for `s ∈ L_{p,1}`, `x ∈ B_{q,0}`.
    pub fn s_x(&self, p: usize, s: &Elem, q: usize, x: &Elem) -> Elem {
        let tgt = self.target(p, q);
        let base = match lookup(&self.prod.m10, p, q) {
            Some(t) => t.apply(&tgt.c1, s, x),
            None => tgt.c1.zero(),
        };
        let hx = self.right[q].hh(x);
        let l = &self.left[p];
        let corr = quadratic_sum(
            s,
            |k, m| {
                let (dk, dm) = (l.boundary.images[k].clone(), l.boundary.images[m].clone());
                self.pair_times(p, &l.cross(&dk, &dm), q, &hx)
            },
            &tgt.cee,
        );
        match corr {
            Some(c) => tgt.c1.add(&base, &tgt.pp(&c)),
            None => base,
        }
    }

    /// Checks table shapes and entries, torsion compatibility in the right
    /// variable, and that products do not depend on the coordinates chosen
    /// for torsion generators on the left.
    pub fn validate(&self) -> Result<()> {
        let top = self.top();
        let check_table = |t: &Table, what: &str, lc: fn(&Qpm) -> &AbelianGroup, rc: fn(&Qpm) -> &AbelianGroup, oc: fn(&Qpm) -> &AbelianGroup| -> Result<()> {
            for (&(p, q), b) in t {
                if q >= self.right.len() || p + q > top {
                    return Err(Error::Invalid(format!("{what}: product of degrees ({p}, {q}) out of range")));
                }
                let (a, bb, c) = (lc(&self.left[p]), rc(&self.right[q]), oc(&self.left[p + q]));
                if b.table.len() != a.rank() || b.table.iter().any(|r| r.len() != bb.rank()) {
                    return Err(Error::Invalid(format!("{what} ({p}, {q}): table shape does not match carriers")));
                }
                for (i, row) in b.table.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        c.check(v).map_err(|e| Error::Invalid(format!("{what} ({p}, {q}) entry ({i},{j}): {e}")))?;
                        let d = &bb.orders()[j];
                        if !d.is_zero() && !c.is_zero(&c.scale(d, v)) {
                            return Err(Error::Invalid(format!(
                                "{what} ({p}, {q}): not well defined on right generator {} of order {d}",
                                bb.names()[j]
                            )));
                        }
                    }
                }
            }
            Ok(())
        };
        check_table(&self.prod.m00, "m00", |m| &m.c0, |m| &m.c0, |m| &m.c0)?;
        check_table(&self.prod.m01, "m01", |m| &m.c0, |m| &m.c1, |m| &m.c1)?;
        check_table(&self.prod.m10, "m10", |m| &m.c1, |m| &m.c0, |m| &m.c1)?;
        check_table(&self.prod.mee, "mee", |m| &m.cee, |m| &m.cee, |m| &m.cee)?;
        let r = self.check_left_torsion(&Bounds::default().with_window(2));
        match r.witness {
            None => Ok(()),
            Some(w) => Err(Error::Validation { law_id: r.law_id, witness: w.to_string() }),
        }
    }

    /// Products evaluated on `e + d·g` (unreduced) agree with products on `e`
    /// for every torsion generator `g` of order `d` on the left.
    pub fn check_left_torsion(&self, bounds: &Bounds) -> LawReport {
        let mut run = LawRun::new("WD", "products are well defined on left torsion");
        let top = self.top();
        for p in 0..=top {
            for q in 0..self.right.len().min(top - p + 1) {
                let (l, r) = (&self.left[p], &self.right[q]);
                let tgt = &self.left[p + q];
                let rw = r.windows(bounds);
                let lifts = |g: &AbelianGroup| -> Vec<(Elem, Elem)> {
                    let mut out = Vec::new();
                    for (i, d) in g.orders().iter().enumerate() {
                        if d.is_zero() {
                            continue;
                        }
                        let mut bases = vec![g.zero()];
                        bases.extend((0..g.rank()).map(|k| g.generator(k)));
                        for e in bases {
                            let mut lifted = e.clone();
                            lifted[i] += d;
                            out.push((e, lifted));
                        }
                    }
                    out
                };
                let l0 = lifts(&l.c0);
                let l1 = lifts(&l.c1);
                let lee = lifts(&l.cee);
                let fmt_pair = |g: &AbelianGroup, e: &Elem, lifted: &Elem| {
                    format!("{} lifted as {:?}", g.format(e), lifted.iter().map(BigInt::to_string).collect::<Vec<_>>())
                };
                for (e, lifted) in &l0 {
                    for y in &rw.c0 {
                        let (a, b) = (self.x_y(p, lifted, q, y), self.x_y(p, e, q, y));
                        run.record(Outcome::compare(&a, &b, || {
                            Witness::new(vec![fmt_pair(&l.c0, e, lifted), r.c0.format(y)], tgt.c0.format(&a), tgt.c0.format(&b))
                        }));
                    }
                    for s in &rw.c1 {
                        let (a, b) = (self.x_s(p, lifted, q, s), self.x_s(p, e, q, s));
                        run.record(Outcome::compare(&a, &b, || {
                            Witness::new(vec![fmt_pair(&l.c0, e, lifted), r.c1.format(s)], tgt.c1.format(&a), tgt.c1.format(&b))
                        }));
                    }
                }
                for (e, lifted) in &l1 {
                    for y in &rw.c0 {
                        let (a, b) = (self.s_x(p, lifted, q, y), self.s_x(p, e, q, y));
                        run.record(Outcome::compare(&a, &b, || {
                            Witness::new(vec![fmt_pair(&l.c1, e, lifted), r.c0.format(y)], tgt.c1.format(&a), tgt.c1.format(&b))
                        }));
                    }
                }
                for (e, lifted) in &lee {
                    for b in &rw.cee {
                        let (x, y) = (self.ee(p, lifted, q, b), self.ee(p, e, q, b));
                        run.record(Outcome::compare(&x, &y, || {
                            Witness::new(vec![fmt_pair(&l.cee, e, lifted), r.cee.format(b)], tgt.cee.format(&x), tgt.cee.format(&y))
                        }));
                    }
                }
            }
        }
        run.finish()
    }

    /// Element windows for every degree of both families.
    pub fn windows(&self, bounds: &Bounds) -> (Vec<Windows>, Vec<Windows>) {
        let lw: Vec<Windows> = self.left.iter().map(|m| m.windows(bounds)).collect();
        let rw = if std::ptr::eq(self.left, self.right) {
            lw.clone()
        } else {
            self.right.iter().map(|m| m.windows(bounds)).collect()
        };
        (lw, rw)
    }
}
