//! JSON instance files.
//!
//! ```text
//! { "name": ..., "truncation": D,
//!   "degrees": [ { "n": 0,
//!                  "C0": {"orders": [...], "names": [...]}, "C1": ..., "Cee": ...,
//!                  "boundary": [image of each C1 generator in C0 coordinates],
//!                  "H_gen": [H of each C0 generator],
//!                  "H_pairing": [[crossed effect of generator pairs]],
//!                  "P": [image of each Cee generator] }, ... ],
//!   "unit": [...],
//!   "products": { "m00": [{"left": p, "right": q, "table": [[value]]}], "m01": ..., "m10": ..., "mee": ... },
//!   "actions": [ {"n": n, "perm0": [matrix per sᵢ], "perm1": [...], "track0": [...]} ],   (optional)
//!   "cupone": [{"left": p, "right": q, "table": ...}] }                                    (optional)
//! ```
//!
//! Orders use `0` for `ℤ`. Integers are JSON numbers when they fit in 53
//! bits and decimal strings otherwise.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use super::{validate, Instance};
use crate::einfty::{DegreeAction, EinftyData};
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Bilinear, Elem, Hom, QuadraticMap};
use crate::qpa::{GradedQpa, Products, Table};
use crate::qpm::Qpm;

const SAFE: i64 = (1 << 53) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Int(BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if (-SAFE..=SAFE).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Int;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Int, E> {
                v.trim().parse::<BigInt>().map(Int).map_err(|_| E::custom(format!("'{v}' is not an integer")))
            }
        }
        d.deserialize_any(V)
    }
}

type Vector = Vec<Int>;
type Matrix = Vec<Vector>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CarrierFile {
    orders: Vector,
    names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DegreeFile {
    n: usize,
    #[serde(rename = "C0")]
    c0: CarrierFile,
    #[serde(rename = "C1")]
    c1: CarrierFile,
    #[serde(rename = "Cee")]
    cee: CarrierFile,
    boundary: Matrix,
    #[serde(rename = "H_gen")]
    h_gen: Matrix,
    #[serde(rename = "H_pairing")]
    h_pairing: Vec<Matrix>,
    #[serde(rename = "P")]
    p: Matrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntry {
    left: usize,
    right: usize,
    table: Vec<Matrix>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ProductsFile {
    #[serde(default)]
    m00: Vec<TableEntry>,
    #[serde(default)]
    m01: Vec<TableEntry>,
    #[serde(default)]
    m10: Vec<TableEntry>,
    #[serde(default)]
    mee: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionFile {
    n: usize,
    perm0: Vec<Matrix>,
    perm1: Vec<Matrix>,
    track0: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    name: String,
    truncation: usize,
    degrees: Vec<DegreeFile>,
    #[serde(default)]
    unit: Option<Vector>,
    #[serde(default)]
    products: ProductsFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    actions: Option<Vec<ActionFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cupone: Option<Vec<TableEntry>>,
}

fn vector(v: &Elem) -> Vector {
    v.iter().cloned().map(Int).collect()
}

fn matrix(rows: &[Elem]) -> Matrix {
    rows.iter().map(vector).collect()
}

fn elem(v: Vector) -> Elem {
    v.into_iter().map(|i| i.0).collect()
}

fn carrier_out(g: &AbelianGroup) -> CarrierFile {
    CarrierFile { orders: g.orders().iter().cloned().map(Int).collect(), names: g.names().to_vec() }
}

fn carrier_in(c: CarrierFile, what: &str) -> Result<AbelianGroup> {
    AbelianGroup::new(c.orders.into_iter().map(|i| i.0).collect(), c.names).map_err(|e| Error::Invalid(format!("{what}: {e}")))
}

fn table_out(t: &Table) -> Vec<TableEntry> {
    t.iter()
        .map(|(&(left, right), b)| TableEntry { left, right, table: b.table.iter().map(|r| matrix(r)).collect() })
        .collect()
}

/// Entries are reduced into the target carrier so that files may use any
/// integer representative.
fn table_in(entries: Vec<TableEntry>, what: &str, target: impl Fn(usize) -> Option<AbelianGroup>) -> Result<Table> {
    let mut t = Table::new();
    for e in entries {
        let tgt = target(e.left + e.right)
            .ok_or_else(|| Error::Invalid(format!("{what} ({}, {}): lands above the truncation", e.left, e.right)))?;
        let table = e.table.into_iter().map(|r| r.into_iter().map(|v| reduce_in(&tgt, elem(v), what)).collect()).collect::<Result<_>>()?;
        if t.insert((e.left, e.right), Bilinear { table }).is_some() {
            return Err(Error::Invalid(format!("{what} ({}, {}) given twice", e.left, e.right)));
        }
    }
    Ok(t)
}

fn reduce_in(g: &AbelianGroup, v: Elem, what: &str) -> Result<Elem> {
    if v.len() != g.rank() {
        return Err(Error::Invalid(format!("{what}: vector of length {} in a carrier of rank {}", v.len(), g.rank())));
    }
    Ok(g.reduce(v))
}

fn rows_in(g: &AbelianGroup, m: Matrix, what: &str) -> Result<Vec<Elem>> {
    m.into_iter().map(|v| reduce_in(g, elem(v), what)).collect()
}

/// Serializes an instance; the output is deterministic.
pub fn to_json(inst: &Instance) -> String {
    let b = &inst.qpa;
    let degrees = b
        .degrees
        .iter()
        .enumerate()
        .map(|(n, m)| DegreeFile {
            n,
            c0: carrier_out(&m.c0),
            c1: carrier_out(&m.c1),
            cee: carrier_out(&m.cee),
            boundary: matrix(&m.boundary.images),
            h_gen: matrix(&m.h.values),
            h_pairing: m.h.pairing.table.iter().map(|r| matrix(r)).collect(),
            p: matrix(&m.p.images),
        })
        .collect();
    let products = ProductsFile {
        m00: table_out(&b.products.m00),
        m01: table_out(&b.products.m01),
        m10: table_out(&b.products.m10),
        mee: table_out(&b.products.mee),
    };
    let (actions, cupone) = match &inst.einfty {
        None => (None, None),
        Some(d) => (
            Some(
                d.actions
                    .iter()
                    .enumerate()
                    .map(|(n, a)| ActionFile {
                        n,
                        perm0: a.perm0.iter().map(|h| matrix(&h.images)).collect(),
                        perm1: a.perm1.iter().map(|h| matrix(&h.images)).collect(),
                        track0: a.track0.iter().map(|h| matrix(&h.images)).collect(),
                    })
                    .collect(),
            ),
            Some(table_out(&d.cupone)),
        ),
    };
    let file = InstanceFile {
        name: b.name.clone(),
        truncation: b.truncation(),
        degrees,
        unit: Some(vector(&b.unit)),
        products,
        actions,
        cupone,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("instance serializes");
    s.push('\n');
    s
}

/// Parses and validates an instance from JSON text.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let inst = parse_unchecked(text)?;
    validate(&inst)?;
    Ok(inst)
}

/// Reads, parses and validates an instance file.
pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let text = std::fs::read_to_string(path.as_ref()).map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_instance(&text)
}

/// Parsing without the axiom suites, for loading deliberately broken
/// fixtures in tests. Shapes are still checked.
#[doc(hidden)]
pub fn parse_unchecked(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    if file.degrees.is_empty() {
        let mut t = super::trivial();
        t.qpa.name = file.name;
        return Ok(t);
    }
    if file.truncation + 1 != file.degrees.len() {
        return Err(Error::Invalid(format!(
            "truncation {} but {} degrees listed",
            file.truncation,
            file.degrees.len()
        )));
    }
    let mut degrees = Vec::with_capacity(file.degrees.len());
    for (i, d) in file.degrees.into_iter().enumerate() {
        if d.n != i {
            return Err(Error::Invalid(format!("degree entry {i} has n = {}", d.n)));
        }
        let what = |s: &str| format!("degree {i} {s}");
        let c0 = carrier_in(d.c0, &what("C0"))?;
        let c1 = carrier_in(d.c1, &what("C1"))?;
        let cee = carrier_in(d.cee, &what("Cee"))?;
        let boundary = Hom { images: rows_in(&c0, d.boundary, &what("boundary"))? };
        let p = Hom { images: rows_in(&c1, d.p, &what("P"))? };
        let values = rows_in(&cee, d.h_gen, &what("H_gen"))?;
        let pairing = Bilinear {
            table: d.h_pairing.into_iter().map(|r| rows_in(&cee, r, &what("H_pairing"))).collect::<Result<_>>()?,
        };
        degrees.push(Qpm::new(c0, c1, cee, boundary, QuadraticMap { values, pairing }, p).map_err(|e| match e {
            Error::Invalid(m) => Error::Invalid(format!("degree {i}: {m}")),
            other => other,
        })?);
    }
    let level = |f: fn(&Qpm) -> &AbelianGroup| {
        let ds = &degrees;
        move |n: usize| ds.get(n).map(|m| f(m).clone())
    };
    let products = Products {
        m00: table_in(file.products.m00, "m00", level(|m| &m.c0))?,
        m01: table_in(file.products.m01, "m01", level(|m| &m.c1))?,
        m10: table_in(file.products.m10, "m10", level(|m| &m.c1))?,
        mee: table_in(file.products.mee, "mee", level(|m| &m.cee))?,
    };
    let unit = match file.unit {
        Some(u) => reduce_in(&degrees[0].c0, elem(u), "unit")?,
        None if degrees[0].c0.rank() > 0 => degrees[0].c0.generator(0),
        None => return Err(Error::Invalid("no unit given and B₀,₀ is trivial".into())),
    };
    let einfty = match (file.actions, file.cupone) {
        (None, None) => None,
        (actions, cupone) => {
            let actions = match actions {
                None => return Err(Error::Invalid("cup-one products given without actions".into())),
                Some(a) => a,
            };
            let mut out = Vec::with_capacity(actions.len());
            for (i, a) in actions.into_iter().enumerate() {
                if a.n != i {
                    return Err(Error::Invalid(format!("action entry {i} has n = {}", a.n)));
                }
                let m = degrees
                    .get(i)
                    .ok_or_else(|| Error::Invalid(format!("actions given for degree {i} above the truncation")))?;
                let homs = |ms: Vec<Matrix>, g: &AbelianGroup, what: &str| -> Result<Vec<Hom>> {
                    ms.into_iter().map(|mm| Ok(Hom { images: rows_in(g, mm, what)? })).collect()
                };
                out.push(DegreeAction {
                    perm0: homs(a.perm0, &m.c0, "perm0")?,
                    perm1: homs(a.perm1, &m.c1, "perm1")?,
                    track0: homs(a.track0, &m.c1, "track0")?,
                });
            }
            let cupone = table_in(cupone.unwrap_or_default(), "cupone", level(|m| &m.c1))?;
            Some(EinftyData { actions: out, cupone })
        }
    };
    let qpa = GradedQpa { name: file.name, degrees, products, unit };
    qpa.validate()?;
    if let Some(d) = &einfty {
        d.validate(&qpa)?;
    }
    Ok(Instance { qpa, einfty })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{builtin, BUILTINS};

    #[test]
    fn builtins_round_trip() {
        for name in BUILTINS {
            let inst = builtin(name).unwrap();
            let text = to_json(&inst);
            let back = parse_instance(&text).unwrap();
            assert_eq!(back, inst, "{name}");
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn large_integers_become_strings() {
        let s = serde_json::to_string(&Int(BigInt::from(1u64 << 60))).unwrap();
        assert_eq!(s, format!("\"{}\"", 1u64 << 60));
        let s = serde_json::to_string(&Int(BigInt::from(-5))).unwrap();
        assert_eq!(s, "-5");
        let back: Int = serde_json::from_str("\"123456789012345678901234567890\"").unwrap();
        assert_eq!(back.0.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_instance("{\n  \"name\": \"x\",\n  \"truncation\": oops }") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_degrees_is_trivial_algebra() {
        let inst = parse_instance(r#"{"name": "empty", "truncation": 0, "degrees": []}"#).unwrap();
        assert_eq!(inst.qpa.truncation(), 0);
        assert_eq!(inst.qpa.degrees[0].c0.rank(), 1);
    }

    #[test]
    fn ill_defined_h_on_torsion_names_the_generator() {
        // C0 = Z/4 with H(g) = 1 and (g|g) = 0 in Cee = Z: H(g + 4g) = 5 ≠ 1.
        let text = r#"{"name": "bad-h", "truncation": 0, "degrees": [{"n": 0,
            "C0": {"orders": [4], "names": ["g"]}, "C1": {"orders": [], "names": []},
            "Cee": {"orders": [0], "names": ["e"]}, "boundary": [], "H_gen": [[1]],
            "H_pairing": [[[0]]], "P": [[]]}], "unit": [1],
            "products": {"m00": [{"left": 0, "right": 0, "table": [[[1]]]}]}}"#;
        match parse_instance(text) {
            Err(Error::Invalid(m)) => assert!(m.contains('g'), "{m}"),
            other => panic!("{other:?}"),
        }
    }
}
