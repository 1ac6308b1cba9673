//! Whole-instance law runs. Laws are grouped into suites; a suite runs only
//! when at least one of its law ids is selected.

use crate::einfty::{self, Lift};
use crate::enumerate::Bounds;
use crate::error::Error;
use crate::instances::Instance;
use crate::qpa::{check_module_axioms, check_qpa_axioms, Brackets, HomologyRing};
use crate::report::{LawReport, LawRun, Outcome, Status, Witness};

/// A named group of laws with the ids it reports.
#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub ids: &'static [&'static str],
    /// Needs E∞ data.
    pub einfty: bool,
}

const fn suite(name: &'static str, ids: &'static [&'static str], einfty: bool) -> Suite {
    Suite { name, ids, einfty }
}

pub const SUITES: &[Suite] = &[
    suite("qpm", &["M1", "M2", "M3", "M4", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"], false),
    suite("qpa", &["WD", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "L1", "L2", "L3", "H0", "H1", "K1"], false),
    suite(
        "module",
        &["MWD", "MA1", "MA2", "MA3", "MA4", "MA5", "MA6", "MA7", "MA8", "MA9", "ML1", "ML2", "ML3", "MH0", "MH1", "MK1", "PAIR"],
        false,
    ),
    suite("homology", &["HR", "KB"], false),
    suite("toda", &["T1", "T2", "T3", "T4", "T5", "T6"], false),
    suite("module-toda", &["MT1", "MT2", "MT3", "MT4", "MT5"], false),
    suite("action", &["S2", "S3", "S4", "S5", "S6", "ADER", "TAUEL", "MAME", "EQD"], true),
    suite("equivariance", &["EQUI", "O1", "O2"], true),
    suite("cupone", &["LC", "C1C", "C1+", "C1M", "C1E", "O3", "O4", "O5", "O6"], true),
    suite("lor2", &["LOR2"], true),
    suite("comm", &["HC", "T7", "T8", "T9", "T10", "T11", "T12", "MAS", "MAS3", "MAS4", "SQ-REP"], true),
    suite(
        "comm-omega",
        &[
            "OMEGA-HC", "OMEGA-T7", "OMEGA-T8", "OMEGA-T9", "OMEGA-T10", "OMEGA-T11", "OMEGA-T12", "OMEGA-MAS",
            "OMEGA-MAS3", "OMEGA-MAS4", "OMEGA-SQ-REP",
        ],
        true,
    ),
];

/// Every law id, in report order.
pub fn all_law_ids() -> Vec<&'static str> {
    SUITES.iter().flat_map(|s| s.ids.iter().copied()).collect()
}

/// Combines reports sharing an id: counts add up, the first witness wins.
pub fn merge(reports: Vec<LawReport>) -> Vec<LawReport> {
    let mut out: Vec<LawReport> = Vec::new();
    for r in reports {
        match out.iter_mut().find(|o| o.law_id == r.law_id) {
            None => out.push(r),
            Some(o) => {
                o.tuples_checked += r.tuples_checked;
                o.skipped += r.skipped;
                o.status = match (o.status, r.status) {
                    (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                    (Status::Pass, _) | (_, Status::Pass) => Status::Pass,
                    _ => Status::Vacuous,
                };
                if o.witness.is_none() {
                    o.witness = r.witness;
                }
                if let Some(n) = r.note {
                    match &mut o.note {
                        Some(m) if m.split("; ").any(|x| x == n) => {}
                        Some(m) => {
                            m.push_str("; ");
                            m.push_str(&n);
                        }
                        None => o.note = Some(n),
                    }
                }
            }
        }
    }
    out
}

fn prefixed(mut reports: Vec<LawReport>, prefix: &str) -> Vec<LawReport> {
    for r in &mut reports {
        if r.law_id != "PAIR" {
            r.law_id = format!("{prefix}{}", r.law_id);
        }
    }
    reports
}

/// A failing report for each id of a suite that could not be set up.
fn setup_failure(s: &Suite, err: &Error) -> Vec<LawReport> {
    s.ids
        .iter()
        .map(|id| {
            let mut run = LawRun::new(*id, format!("{} suite", s.name));
            run.record(Outcome::Fails(Witness::new(vec![], err.to_string(), "a well-defined structure")));
            run.finish()
        })
        .collect()
}

fn run_suite(s: &Suite, inst: &Instance, b: &Bounds) -> Vec<LawReport> {
    let qpa = &inst.qpa;
    let e = match (s.einfty, inst.einfty()) {
        (false, _) => None,
        (true, Ok(Some(e))) => Some(e),
        (true, Ok(None)) => return vec![],
        (true, Err(err)) => return setup_failure(s, &err),
    };
    let attempt = || -> crate::Result<Vec<LawReport>> {
        Ok(match s.name {
            "qpm" => merge(
                qpa.degrees
                    .iter()
                    .enumerate()
                    .flat_map(|(n, m)| {
                        m.check_axioms(b).into_iter().map(move |mut r| {
                            if let Some(w) = &mut r.witness {
                                w.clause.get_or_insert_with(|| format!("degree {n}"));
                            }
                            r
                        })
                    })
                    .collect(),
            ),
            "qpa" => check_qpa_axioms(qpa, b),
            "module" => prefixed(check_module_axioms(&qpa.as_module(), qpa, b), "M"),
            "homology" => HomologyRing::algebra(qpa)?.check_laws(b),
            "toda" => Brackets::algebra(qpa)?.check_toda_laws(b),
            "module-toda" => {
                let m = qpa.as_module();
                Brackets::module(&m, qpa)?.check_toda_laws(b)
            }
            "action" => einfty::check_action_laws(e.unwrap(), b),
            "equivariance" => einfty::check_equivariance(e.unwrap(), b),
            "cupone" => einfty::check_cupone_laws(e.unwrap(), b),
            "lor2" => vec![einfty::lor2_check(e.unwrap(), b)],
            "comm" => einfty::check_comm_toda_laws(e.unwrap(), Lift::TauHat, b),
            "comm-omega" => einfty::check_comm_toda_laws(e.unwrap(), Lift::Omega, b),
            other => unreachable!("unknown suite {other}"),
        })
    };
    attempt().unwrap_or_else(|err| setup_failure(s, &err))
}

/// Runs every suite with a selected id and returns the selected reports in
/// suite order. E∞ suites are skipped on instances without E∞ data.
pub fn check_instance(inst: &Instance, b: &Bounds, select: &dyn Fn(&str) -> bool) -> Vec<LawReport> {
    let mut out = Vec::new();
    check_instance_with(inst, b, select, &mut |r| out.push(r.clone()));
    out
}

/// As [`check_instance`], handing each report to `emit` as soon as its
/// suite finishes.
pub fn check_instance_with(inst: &Instance, b: &Bounds, select: &dyn Fn(&str) -> bool, emit: &mut dyn FnMut(&LawReport)) {
    for s in SUITES {
        if !s.ids.iter().any(|id| select(id)) {
            continue;
        }
        for r in run_suite(s, inst, b).iter().filter(|r| select(&r.law_id)) {
            emit(r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::builtin;
    use crate::report::all_pass;

    #[test]
    fn suite_ids_match_reports() {
        let inst = builtin("lambda-z3-einfty").unwrap();
        let b = Bounds::default().with_window(2);
        let reports = check_instance(&inst, &b, &|_| true);
        let ids: Vec<&str> = reports.iter().map(|r| r.law_id.as_str()).collect();
        assert_eq!(ids, all_law_ids());
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn selection_limits_suites() {
        let inst = builtin("lambda-z-einfty-negative").unwrap();
        let b = Bounds::default().with_window(2);
        let r = check_instance(&inst, &b, &|id| id == "O6");
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Fail);
    }

    #[test]
    fn plain_instances_skip_einfty_suites() {
        let inst = builtin("lambda-z").unwrap();
        let r = check_instance(&inst, &Bounds::default().with_window(2), &|_| true);
        assert!(r.iter().all(|x| x.law_id != "LC"));
        assert!(all_pass(&r));
    }

    #[test]
    fn merge_keeps_first_witness() {
        let mut a = LawRun::new("X", "x");
        a.record(Outcome::Holds);
        let mut b = LawRun::new("X", "x");
        b.record(Outcome::Fails(Witness::new(vec!["1".into()], "a", "b")));
        let m = merge(vec![a.finish(), b.finish()]);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].status, Status::Fail);
        assert_eq!(m[0].tuples_checked, 2);
    }
}
