//! Built-in instances, the crossed-module construction, seeded random
//! instances and the JSON instance format.

pub mod json;
pub mod random;

use crate::einfty::{Einfty, EinftyData};
use crate::enumerate::Bounds;
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Bilinear, Elem, Hom, QuadraticMap};
use crate::qpa::{check_qpa_axioms, GradedQpa, Products, Table};
use crate::qpm::{ints, Qpm};
use crate::report::LawReport;

pub use json::{load_instance, parse_instance, to_json};
pub use random::random_finite_crossed_module;

/// An algebra, optionally equipped with E∞ data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub qpa: GradedQpa,
    pub einfty: Option<EinftyData>,
}

impl Instance {
    pub fn plain(qpa: GradedQpa) -> Self {
        Instance { qpa, einfty: None }
    }

    pub fn name(&self) -> &str {
        &self.qpa.name
    }

    /// The E∞ view, if this instance carries E∞ data.
    pub fn einfty(&self) -> Result<Option<Einfty<'_>>> {
        self.einfty.as_ref().map(|d| Einfty::new(&self.qpa, d)).transpose()
    }
}

/// Bounds used by load-time validation: small windows keep loading fast
/// while still touching every generator and pair of generators.
pub const LOAD_BOUNDS: Bounds = Bounds { window: 3, window_cap: 64, budget: 5000, seed: 0 };

fn first_failure(reports: Vec<LawReport>) -> Result<()> {
    match reports.into_iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(Error::Validation {
            law_id: r.law_id,
            witness: r.witness.map(|w| w.to_string()).unwrap_or_default(),
        }),
    }
}

/// Structural checks, the module axioms in every degree, the algebra axioms
/// and the shape of any E∞ data.
pub fn validate(inst: &Instance) -> Result<()> {
    validate_qpa(&inst.qpa)?;
    if let Some(d) = &inst.einfty {
        d.validate(&inst.qpa)?;
    }
    Ok(())
}

pub fn validate_qpa(b: &GradedQpa) -> Result<()> {
    b.validate()?;
    for m in &b.degrees {
        first_failure(m.check_axioms(&LOAD_BOUNDS))?;
    }
    first_failure(check_qpa_axioms(b, &LOAD_BOUNDS))
}

/// One degree of a crossed module: `C_ee = 0`, `H = 0`, `P = 0`.
pub fn crossed_degree(c0: AbelianGroup, c1: AbelianGroup, boundary: Hom) -> Result<Qpm> {
    let cee = AbelianGroup::trivial();
    let h = QuadraticMap::zero(&c0, &cee);
    let p = Hom::zero(&cee, &c1);
    Qpm::new(c0, c1, cee, boundary, h, p)
}

/// Graded ring crossed module data: per degree `(C₀, C₁, ∂)` and the three
/// products on generators.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub name: String,
    pub degrees: Vec<(AbelianGroup, AbelianGroup, Hom)>,
    pub unit: Elem,
    pub m00: Table,
    pub m01: Table,
    pub m10: Table,
}

/// The quadratic pair algebra of a crossed module. The bimodule property of
/// `∂` and the Peiffer identity `∂(s₁)·s₂ = s₁·∂(s₂)` are checked on
/// generators first, then the full validation runs.
pub fn build_from_crossed_module(cm: CrossedModule) -> Result<GradedQpa> {
    let degrees = cm
        .degrees
        .into_iter()
        .map(|(c0, c1, d)| crossed_degree(c0, c1, d))
        .collect::<Result<Vec<_>>>()?;
    let qpa = GradedQpa {
        name: cm.name,
        degrees,
        products: Products { m00: cm.m00, m01: cm.m01, m10: cm.m10, mee: Table::new() },
        unit: cm.unit,
    };
    qpa.validate()?;
    peiffer_precheck(&qpa)?;
    validate_qpa(&qpa)?;
    Ok(qpa)
}

fn peiffer_precheck(b: &GradedQpa) -> Result<()> {
    let act = b.action();
    let top = b.truncation();
    let d = &b.degrees;
    let fail = |clause: &str, ins: Vec<String>, l: String, r: String| Error::Validation {
        law_id: "A4".into(),
        witness: crate::report::Witness::new(ins, l, r).clause(clause).to_string(),
    };
    for p in 0..=top {
        for q in 0..=(top - p) {
            let t = &d[p + q];
            for i in 0..d[p].c1.rank() {
                let s1 = d[p].c1.generator(i);
                for j in 0..d[q].c1.rank() {
                    let s2 = d[q].c1.generator(j);
                    let l = act.x_s(p, &d[p].d(&s1), q, &s2);
                    let r = act.s_x(p, &s1, q, &d[q].d(&s2));
                    if l != r {
                        return Err(fail(
                            "∂(s₁)·s₂ = s₁·∂(s₂)",
                            vec![d[p].c1.format(&s1), d[q].c1.format(&s2)],
                            t.c1.format(&l),
                            t.c1.format(&r),
                        ));
                    }
                }
                for j in 0..d[q].c0.rank() {
                    let x = d[q].c0.generator(j);
                    let l = t.d(&act.s_x(p, &s1, q, &x));
                    let r = act.x_y(p, &d[p].d(&s1), q, &x);
                    if l != r {
                        return Err(fail(
                            "∂(s·x) = ∂(s)·x",
                            vec![d[p].c1.format(&s1), d[q].c0.format(&x)],
                            t.c0.format(&l),
                            t.c0.format(&r),
                        ));
                    }
                }
            }
            for i in 0..d[p].c0.rank() {
                let x = d[p].c0.generator(i);
                for j in 0..d[q].c1.rank() {
                    let s = d[q].c1.generator(j);
                    let l = t.d(&act.x_s(p, &x, q, &s));
                    let r = act.x_y(p, &x, q, &d[q].d(&s));
                    if l != r {
                        return Err(fail(
                            "∂(x·s) = x·∂(s)",
                            vec![d[p].c0.format(&x), d[q].c1.format(&s)],
                            t.c0.format(&l),
                            t.c0.format(&r),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// A bilinear table from integer rows: `rows[i][j]` is the value on the
/// generator pair `(i, j)`.
pub fn bilinear(tgt: &AbelianGroup, rows: &[&[&[i64]]]) -> Bilinear {
    Bilinear { table: rows.iter().map(|r| r.iter().map(|v| tgt.from_ints(v)).collect()).collect() }
}

fn identity_left(g: &AbelianGroup) -> Bilinear {
    Bilinear { table: vec![(0..g.rank()).map(|j| g.generator(j)).collect()] }
}

fn identity_right(g: &AbelianGroup) -> Bilinear {
    Bilinear { table: (0..g.rank()).map(|i| vec![g.generator(i)]).collect() }
}

/// Unit products `1·g = g` and `g·1 = g` on every level of every degree.
fn unit_products(degrees: &[(AbelianGroup, AbelianGroup, Hom)]) -> (Table, Table, Table) {
    let (mut m00, mut m01, mut m10) = (Table::new(), Table::new(), Table::new());
    for (n, (c0, c1, _)) in degrees.iter().enumerate() {
        m00.insert((0, n), identity_left(c0));
        m00.insert((n, 0), identity_right(c0));
        if c1.rank() > 0 {
            m01.insert((0, n), identity_left(c1));
            m10.insert((n, 0), identity_right(c1));
        }
    }
    (m00, m01, m10)
}

/// Degree-0 model of the sphere: `C₀ = ℤ`, `C₁ = ℤ/2`, `C_ee = ℤ`, `∂ = 0`,
/// `H(n) = binom(n,2)`, `P` reduction mod 2.
pub fn zsigma() -> Instance {
    let c0 = AbelianGroup::cyclic(&[0], &["1"]);
    let c1 = AbelianGroup::cyclic(&[2], &["eta"]);
    let cee = AbelianGroup::cyclic(&[0], &["e"]);
    let boundary = Hom::from_ints(&c0, &[&[0]]);
    let h = QuadraticMap { values: vec![ints(&[0])], pairing: Bilinear { table: vec![vec![ints(&[1])]] } };
    let p = Hom::from_ints(&c1, &[&[1]]);
    let m = Qpm::new(c0.clone(), c1.clone(), cee.clone(), boundary, h, p).expect("zsigma carriers");
    let one = |g: &AbelianGroup| bilinear(g, &[&[&[1]]]);
    let products = Products {
        m00: Table::from([((0, 0), one(&c0))]),
        m01: Table::from([((0, 0), one(&c1))]),
        m10: Table::from([((0, 0), one(&c1))]),
        mee: Table::from([((0, 0), one(&cee))]),
    };
    let qpa = GradedQpa { name: "zsigma".into(), degrees: vec![m], products, unit: ints(&[1]) };
    let einfty = EinftyData::sign(&qpa);
    Instance { qpa, einfty: Some(einfty) }
}

/// Crossed module data of the small algebra with `x² = y = ∂v`, `xy = yx = z`,
/// `∂p = z`, `∂q = 0`, `v·x = p`, `x·v = p + q`, coefficients `ℤ/k`
/// (`k = 0` for `ℤ`).
pub fn lambda_crossed_module(k: u64) -> CrossedModule {
    let g = |names: &[&str]| AbelianGroup::cyclic(&vec![k; names.len()], names);
    let t = AbelianGroup::trivial();
    let (y, z) = (g(&["y"]), g(&["z"]));
    let degrees = vec![
        (g(&["1"]), t.clone(), Hom { images: vec![] }),
        (g(&["x"]), t, Hom { images: vec![] }),
        (y.clone(), g(&["v"]), Hom::from_ints(&y, &[&[1]])),
        (z.clone(), g(&["p", "q"]), Hom::from_ints(&z, &[&[1], &[0]])),
    ];
    let (mut m00, mut m01, mut m10) = unit_products(&degrees);
    m00.insert((1, 1), bilinear(&degrees[2].0, &[&[&[1]]]));
    m00.insert((1, 2), bilinear(&degrees[3].0, &[&[&[1]]]));
    m00.insert((2, 1), bilinear(&degrees[3].0, &[&[&[1]]]));
    m01.insert((1, 2), bilinear(&degrees[3].1, &[&[&[1, 1]]]));
    m10.insert((2, 1), bilinear(&degrees[3].1, &[&[&[1, 0]]]));
    let name = if k == 0 { "lambda-z".to_string() } else { format!("lambda-z{k}") };
    CrossedModule { name, degrees, unit: ints(&[1]), m00, m01, m10 }
}

pub fn lambda(k: u64) -> Result<Instance> {
    if k == 1 {
        return Err(Error::Unsupported("coefficients ℤ/1".into()));
    }
    Ok(Instance::plain(build_from_crossed_module(lambda_crossed_module(k))?))
}

/// `lambda(k)` with sign actions and `x⌣₁x = 2v`, `y⌣₁x = 2q`, `x⌣₁y = -2q`.
/// Over `ℤ/3` this is an E∞ structure; over `ℤ` it violates the cup-one laws.
pub fn lambda_einfty(k: u64) -> Result<Instance> {
    let mut inst = lambda(k)?;
    let d = &inst.qpa.degrees;
    let mut data = EinftyData::sign(&inst.qpa);
    data.cupone.insert((1, 1), bilinear(&d[2].c1, &[&[&[2]]]));
    data.cupone.insert((2, 1), bilinear(&d[3].c1, &[&[&[0, 2]]]));
    data.cupone.insert((1, 2), bilinear(&d[3].c1, &[&[&[0, -2]]]));
    data.validate(&inst.qpa)?;
    inst.qpa.name = if k == 0 { "lambda-z-einfty-negative".into() } else { format!("lambda-z{k}-einfty") };
    inst.einfty = Some(data);
    Ok(inst)
}

/// `ℤ` in degree 0 with only the unit.
pub fn trivial() -> Instance {
    let c0 = AbelianGroup::cyclic(&[0], &["1"]);
    let degrees = vec![(c0.clone(), AbelianGroup::trivial(), Hom { images: vec![] })];
    let (m00, m01, m10) = unit_products(&degrees);
    let cm = CrossedModule { name: "trivial".into(), degrees, unit: ints(&[1]), m00, m01, m10 };
    Instance::plain(build_from_crossed_module(cm).expect("trivial algebra is valid"))
}

/// `ℤ[u]/(u³)` with `|u| = 1`, zero differential and no level 1.
pub fn poly_u3() -> Instance {
    let t = AbelianGroup::trivial();
    let degrees: Vec<_> = ["1", "u", "u2"]
        .iter()
        .map(|n| (AbelianGroup::cyclic(&[0], &[n]), t.clone(), Hom { images: vec![] }))
        .collect();
    let (mut m00, m01, m10) = unit_products(&degrees);
    m00.insert((1, 1), bilinear(&degrees[2].0, &[&[&[1]]]));
    let cm = CrossedModule { name: "poly-u3".into(), degrees, unit: ints(&[1]), m00, m01, m10 };
    Instance::plain(build_from_crossed_module(cm).expect("truncated polynomial ring is valid"))
}

/// Names accepted by [`builtin`]; `lambda-z<k>` works for any `k >= 2`.
pub const BUILTINS: &[&str] =
    &["zsigma", "lambda-z", "lambda-z3", "lambda-z3-einfty", "lambda-z-einfty-negative", "trivial", "poly-u3"];

pub fn builtin(name: &str) -> Result<Instance> {
    match name {
        "zsigma" => Ok(zsigma()),
        "lambda-z" => lambda(0),
        "lambda-z3-einfty" => lambda_einfty(3),
        "lambda-z-einfty-negative" => lambda_einfty(0),
        "trivial" => Ok(trivial()),
        "poly-u3" => Ok(poly_u3()),
        other => match other.strip_prefix("lambda-z").and_then(|k| k.parse::<u64>().ok()) {
            Some(k) if k >= 2 => lambda(k),
            _ => Err(Error::Invalid(format!("unknown built-in instance '{name}'"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpa::check_module_axioms;
    use crate::report::{all_pass, find, Status};

    #[test]
    fn zsigma_passes_everything() {
        let inst = zsigma();
        validate(&inst).unwrap();
        let b = Bounds::default().with_window(20);
        let r = check_qpa_axioms(&inst.qpa, &b);
        assert!(all_pass(&r), "{r:?}");
        let r = check_module_axioms(&inst.qpa.as_module(), &inst.qpa, &b);
        assert!(all_pass(&r), "{r:?}");
    }

    #[test]
    fn tampered_h_fails_hm_at_one_one() {
        let mut b = zsigma().qpa;
        // H(n) = n²: value 1 on the generator, crossed effect 2
        b.degrees[0].h = QuadraticMap { values: vec![ints(&[1])], pairing: Bilinear { table: vec![vec![ints(&[2])]] } };
        let r = check_qpa_axioms(&b, &Bounds::default().with_window(3));
        let hm = find(&r, "A7").unwrap();
        assert_eq!(hm.status, Status::Fail);
        let w = hm.witness.as_ref().unwrap();
        assert_eq!(w.inputs, vec!["1".to_string(), "1".to_string()]);
    }

    #[test]
    fn lambda_variants_pass() {
        for k in [0, 2, 3, 5] {
            let inst = lambda(k).unwrap();
            let r = check_qpa_axioms(&inst.qpa, &Bounds::default().with_window(4));
            assert!(all_pass(&r), "k = {k}: {r:?}");
        }
        assert!(lambda(1).is_err());
    }

    #[test]
    fn builtins_load() {
        for name in BUILTINS {
            let inst = builtin(name).unwrap();
            validate(&inst).unwrap();
            assert_eq!(inst.name(), *name);
        }
        assert!(builtin("lambda-z7").is_ok());
        assert!(builtin("nope").is_err());
    }

    #[test]
    fn peiffer_violation_is_rejected() {
        // Z[e]/(e²), ∂s = e, ∂t = 0, e·s = t and everything else zero:
        // ∂ is a bimodule map but ∂(s)·s = t while s·∂(s) = 0.
        let c0 = AbelianGroup::cyclic(&[0, 0], &["1", "e"]);
        let c1 = AbelianGroup::cyclic(&[0, 0], &["s", "t"]);
        let boundary = Hom::from_ints(&c0, &[&[0, 1], &[0, 0]]);
        let m00 = Table::from([((0, 0), bilinear(&c0, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]))]);
        let m01 = Table::from([((0, 0), bilinear(&c1, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]))]);
        let m10 = Table::from([((0, 0), bilinear(&c1, &[&[&[1, 0], &[0, 0]], &[&[0, 1], &[0, 0]]]))]);
        let cm = CrossedModule { name: "bad".into(), degrees: vec![(c0, c1, boundary)], unit: ints(&[1, 0]), m00, m01, m10 };
        match build_from_crossed_module(cm) {
            Err(Error::Validation { law_id, witness }) => {
                assert_eq!(law_id, "A4");
                assert!(witness.contains("(s, s)"), "{witness}");
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn polynomial_truncation_is_valid() {
        let inst = poly_u3();
        assert_eq!(inst.qpa.truncation(), 2);
        assert!(all_pass(&check_qpa_axioms(&inst.qpa, &Bounds::default().with_window(5))));
    }
}
