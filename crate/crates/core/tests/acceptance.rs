//! Acceptance run: one line per criterion, exit status nonzero only when a
//! criterion fails that is not a documented expected failure.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use qpa_core::check::check_instance;
use qpa_core::einfty::{check_comm_toda_laws, lor2_check, Lift, Squares};
use qpa_core::enumerate::Bounds;
use qpa_core::groups::Elem;
use qpa_core::instances::{builtin, parse_instance, random_finite_crossed_module, to_json, Instance, BUILTINS};
use qpa_core::qpa::{property_h, Brackets};
use qpa_core::report::{find, LawReport, Status};
use qpa_core::trackgroup::{factorial, verify_track_laws, TrackElem};

type Verdict = Result<String, String>;

struct Run {
    unexpected: usize,
}

impl Run {
    fn criterion(&mut self, id: &str, what: &str, expect_fail: bool, f: impl FnOnce() -> Verdict) {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        let (tag, detail) = match (&v, expect_fail) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Err(d), true) => ("FAIL (expected)", d.clone()),
            (Ok(d), true) => {
                self.unexpected += 1;
                ("PASS (unexpected)", d.clone())
            }
            (Err(d), false) => {
                self.unexpected += 1;
                ("FAIL", d.clone())
            }
        };
        println!("[{tag}] {id}: {what} -- {detail} ({secs:.1}s)");
    }
}

fn need(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Every listed id present and passing (vacuous allowed only when `vacuous_ok`).
fn all_listed(reports: &[LawReport], ids: &[&str], vacuous_ok: bool) -> Result<u64, String> {
    let mut tuples = 0;
    for id in ids {
        let r = find(reports, id).ok_or_else(|| format!("{id} missing"))?;
        match r.status {
            Status::Pass => {}
            Status::Vacuous if vacuous_ok => {}
            s => {
                let w = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                return Err(format!("{id} {s} {w}"));
            }
        }
        tuples += r.tuples_checked;
    }
    Ok(tuples)
}

fn ids<'a>(list: &'a [&'static str]) -> impl Fn(&str) -> bool + 'a {
    move |id| list.contains(&id)
}

fn load(name: &str) -> Instance {
    builtin(name).expect("built-in instance")
}

fn c1_tracks() -> Verdict {
    let reports = verify_track_laws(6).map_err(|e| e.to_string())?;
    let want = ["TG-ORDER", "TG-REL", "TG-CLIFFORD", "TG-CAMBIO", "TG-RECHO1", "TG-RECHO2"];
    let n = all_listed(&reports, &want, false)?;
    for r in &reports {
        need(r.status == Status::Pass, format!("{} {}", r.law_id, r.status))?;
    }
    let cl = find(&reports, "TG-CLIFFORD").unwrap().tuples_checked;
    Ok(format!("{} track laws, {cl} Clifford products, {n} checks in the listed laws", reports.len()))
}

/// Size of the subgroup generated by the `tᵢ` and `ω`, by breadth-first
/// closure under right multiplication.
fn closure(n: usize) -> usize {
    let mut gens: Vec<TrackElem> = (1..n).map(|i| TrackElem::generator(n, i).unwrap()).collect();
    gens.push(TrackElem::omega(n));
    let mut seen = HashSet::from([TrackElem::identity(n)]);
    let mut frontier = vec![TrackElem::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(g).unwrap();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

fn c2_orders() -> Verdict {
    for n in 1..=6 {
        let size = closure(n);
        need(size == 2 * factorial(n), format!("|Σ̃{n}| = {size}"))?;
    }
    let t = TrackElem::shuffle_lift(2, 2).map_err(|e| e.to_string())?;
    let sq = t.mul(&t).map_err(|e| e.to_string())?;
    need(sq == TrackElem::omega(4), format!("τ̂₂,₂² = {sq}"))?;
    Ok("|Σ̃n| = 2·n! for n ≤ 6, τ̂₂,₂² = w".into())
}

const QPM_QPA: &[&str] = &[
    "M1", "M2", "M3", "M4", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "A8", "A9", "L1", "L2", "L3",
];

fn c3_zsigma() -> Verdict {
    let inst = load("zsigma");
    let b = Bounds::default().with_window(50);
    let reports = check_instance(&inst, &b, &ids(QPM_QPA));
    let n = all_listed(&reports, QPM_QPA, false)?;
    let e = inst.einfty().map_err(|e| e.to_string())?.ok_or("zsigma has no E∞ data")?;
    let sq = Squares::new(e).map_err(|e| e.to_string())?;
    let ring = sq.ring();
    let (h0, h1) = (ring.h0(0), ring.h1(0));
    need(h0.orders().len() == 1 && h0.orders()[0] == 0.into(), format!("h0 orders {:?}", h0.orders()))?;
    need(h1.orders().len() == 1 && h1.orders()[0] == 2.into(), format!("h1 orders {:?}", h1.orders()))?;
    let sq1 = |k: i64| sq.sq1(0, &h0.from_ints(&[k]), Lift::TauHat).map_err(|e| e.to_string());
    need(sq1(1)? == h1.from_ints(&[0]), "Sq1(1) ≠ 0")?;
    need(sq1(2)? == h1.from_ints(&[1]), "Sq1(2) ≠ η")?;
    for a in -25..=25i64 {
        let want = h1.from_ints(&[a * a]);
        need(sq1(2 * a)? == want, format!("Sq1({}) ≠ {}²·η", 2 * a, a))?;
    }
    let comm = check_comm_toda_laws(e, Lift::TauHat, &b);
    let m = all_listed(&comm, &["T11", "T12"], false)?;
    let pairs = 101 * 101;
    for id in ["T11", "T12"] {
        let r = find(&comm, id).unwrap();
        need(r.tuples_checked >= pairs && r.skipped == 0, format!("{id} checked {} of {pairs} pairs", r.tuples_checked))?;
    }
    Ok(format!("{n} qpm/qpa tuples at |n| ≤ 50, h = (ℤ, ℤ/2), Sq1 values exact, T11/T12 on {m} pairs"))
}

fn c4_lambda_z() -> Verdict {
    let inst = load("lambda-z");
    let br = Brackets::algebra(&inst.qpa).map_err(|e| e.to_string())?;
    let h0 = br.ring.h0(1);
    let x = h0.from_ints(&[1]);
    need(h0.names() == ["x".to_string()], format!("h0 in degree 1 is {:?}", h0.names()))?;
    let m = br.bracket(1, &x, 1, &x, 1, &x).map_err(|e| e.to_string())?;
    let g = &m.group;
    need(m.indeterminacy().is_empty(), "nonzero indeterminacy")?;
    need(g.format(m.representative()) == "q", format!("representative {}", g.format(m.representative())))?;
    let listed: BTreeSet<Elem> = m.coset.elements(g, 64).ok_or("coset not listable")?.into_iter().collect();
    let oracle = br.oracle(1, &x, 1, &x, 1, &x, &Bounds::default().with_window(3)).map_err(|e| e.to_string())?;
    need(listed == oracle, format!("solver {listed:?} vs oracle {oracle:?}"))?;
    let toda = br.check_toda_laws(&Bounds::default().with_window(3));
    let n = all_listed(&toda, &["T1", "T2", "T3", "T4", "T5"], false)?;
    Ok(format!("⟨x,x,x⟩ = {{q}} by solver and oracle; T1-T5 on {n} tuples"))
}

const EINFTY_LAWS: &[&str] = &["EQUI", "LC", "C1C", "C1+", "C1M", "C1E", "O1", "O2", "O3", "O4", "O5", "O6", "T7", "T8", "T9"];

fn c5_lambda_z3() -> Verdict {
    let inst = load("lambda-z3-einfty");
    let b = Bounds::default();
    let reports = check_instance(&inst, &b, &ids(EINFTY_LAWS));
    let n = all_listed(&reports, EINFTY_LAWS, false)?;
    for id in EINFTY_LAWS {
        let r = find(&reports, id).unwrap();
        need(r.note.is_none() || !r.note.as_deref().unwrap().contains("sampled"), format!("{id} was sampled"))?;
    }
    let br = Brackets::algebra(&inst.qpa).map_err(|e| e.to_string())?;
    let h0 = br.ring.h0(1);
    let (x, x2) = (h0.from_ints(&[1]), h0.from_ints(&[2]));
    let m = br.bracket(1, &x, 1, &x, 1, &x).map_err(|e| e.to_string())?;
    let g = &m.group;
    need(g.format(m.representative()) == "q" && m.indeterminacy().is_empty(), format!("⟨x,x,x⟩ = {}", m.coset.format(g)))?;
    let other = br.bracket(1, &x, 1, &x, 1, &x2).map_err(|e| e.to_string())?;
    need(m.coset.intersects(g, &other.coset.neg(g)), "T9 intersection at (x, x) is empty")?;

    let neg = load("lambda-z-einfty-negative");
    let r = check_instance(&neg, &b.with_window(3), &ids(&["O6"]));
    let o6 = find(&r, "O6").ok_or("O6 missing")?;
    need(o6.status == Status::Fail, "negative control passes O6")?;
    let w = o6.witness.as_ref().unwrap();
    need(w.inputs == ["x", "x", "x"], format!("negative control witness {w}"))?;
    Ok(format!("{n} tuples exhaustive; ⟨x,x,x⟩ = {{q}}; negative control fails O6 at {w}"))
}

fn equipped() -> Vec<(&'static str, Instance)> {
    BUILTINS
        .iter()
        .map(|n| (*n, load(n)))
        .filter(|(n, i)| *n != "lambda-z-einfty-negative" && matches!(i.einfty(), Ok(Some(_))))
        .collect()
}

const COMM: &[&str] = &["T7", "T8", "T9", "T10", "T11", "T12", "MAS", "MAS3", "MAS4"];

fn c6a_lor2_tauhat() -> Verdict {
    let b = Bounds::default().with_window(20);
    let mut names = vec![];
    for (name, inst) in equipped() {
        let e = inst.einfty().unwrap().unwrap();
        let r = lor2_check(e, &b);
        need(r.status == Status::Pass, format!("LOR2 on {name}: {:?}", r.witness))?;
        let comm = check_comm_toda_laws(e, Lift::TauHat, &b);
        all_listed(&comm, COMM, true).map_err(|m| format!("{name}: {m}"))?;
        names.push(name);
    }
    Ok(format!("LOR2 and T7-T12 under τ̂ on {}", names.join(", ")))
}

fn c6b_omega() -> Verdict {
    let b = Bounds::default().with_window(20);
    let mut failures = vec![];
    for (name, inst) in equipped() {
        let e = inst.einfty().unwrap().unwrap();
        let comm = check_comm_toda_laws(e, Lift::Omega, &b);
        for id in COMM {
            let oid = format!("OMEGA-{id}");
            let r = find(&comm, &oid).ok_or(format!("{oid} missing"))?;
            if r.status == Status::Fail {
                failures.push(format!("{name} {oid} {}", r.witness.as_ref().unwrap()));
            }
        }
    }
    if failures.is_empty() {
        Ok("T7-T12 under the ω lift pass everywhere".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c7_fuzz() -> Verdict {
    const SUITES: &[&str] = &[
        "M1", "M2", "M3", "M4", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "WD", "A1", "A2", "A3", "A4", "A5", "A6",
        "A7", "A8", "A9", "L1", "L2", "L3", "H0", "H1", "K1", "MWD", "MA1", "MA2", "MA3", "MA4", "MA5", "MA6", "MA7",
        "MA8", "MA9", "ML1", "ML2", "ML3", "MH0", "MH1", "MK1", "PAIR",
    ];
    let b = Bounds::default().with_budget(2_000);
    let mut total = 0;
    for seed in 0..100 {
        let qpa = random_finite_crossed_module(seed, 3).map_err(|e| format!("seed {seed}: {e}"))?;
        let inst = Instance::plain(qpa);
        let reports = check_instance(&inst, &b, &ids(SUITES));
        total += all_listed(&reports, SUITES, true).map_err(|m| format!("seed {seed}: {m}"))?;
    }
    Ok(format!("100 seeds, {total} tuples"))
}

fn c8_determinism() -> Verdict {
    let b = Bounds::default().with_window(3).with_budget(2_000);
    for name in BUILTINS {
        let inst = load(name);
        let run = || serde_json::to_string(&check_instance(&inst, &b, &|_| true)).unwrap();
        need(run() == run(), format!("{name}: reports differ between runs"))?;
        let text = to_json(&inst);
        let back = parse_instance(&text).map_err(|e| format!("{name}: {e}"))?;
        need(to_json(&back) == text, format!("{name}: JSON does not round-trip"))?;
        let again = serde_json::to_string(&check_instance(&back, &b, &|_| true)).unwrap();
        need(again == run(), format!("{name}: reloaded instance reports differ"))?;
    }
    Ok(format!("{} built-ins byte-identical and round-tripped", BUILTINS.len()))
}

fn c9_property_h() -> Verdict {
    let b = Bounds::default().with_window(10);
    let z = property_h(&load("zsigma").qpa.degrees, &b).map_err(|e| e.to_string())?;
    let l = property_h(&load("lambda-z").qpa.degrees, &b).map_err(|e| e.to_string())?;
    need(z.iter().any(|x| !x), format!("zsigma {z:?}"))?;
    need(l.iter().all(|x| *x), format!("lambda {l:?}"))?;
    let t = check_instance(&load("zsigma"), &b, &|id| id.starts_with('T') && id.len() <= 3);
    let passed = t.iter().filter(|r| r.passed()).count();
    need(passed == t.len(), "a Toda law fails on zsigma")?;
    Ok(format!("zsigma {z:?}, lambda {l:?}, {passed} Toda laws pass on zsigma"))
}

fn main() -> ExitCode {
    let mut run = Run { unexpected: 0 };
    run.criterion("1", "track group laws for n ≤ 6", false, c1_tracks);
    run.criterion("2", "group orders and τ̂₂,₂² = ω", false, c2_orders);
    run.criterion("3", "zsigma axioms, homology and squares", false, c3_zsigma);
    run.criterion("4", "⟨x,x,x⟩ in lambda(ℤ) and T1-T5", false, c4_lambda_z);
    run.criterion("5", "lambda(ℤ/3) E∞ axioms and negative control", false, c5_lambda_z3);
    run.criterion("6a", "LOR2 and T7-T12 under τ̂", false, c6a_lor2_tauhat);
    run.criterion("6b", "T7-T12 under the ω lift", true, c6b_omega);
    run.criterion("7", "random crossed modules", false, c7_fuzz);
    run.criterion("8", "determinism and JSON round trip", false, c8_determinism);
    run.criterion("9", "property (H) detection", false, c9_property_h);
    if run.unexpected == 0 {
        println!("acceptance: all criteria as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} unexpected result(s)", run.unexpected);
        ExitCode::FAILURE
    }
}
