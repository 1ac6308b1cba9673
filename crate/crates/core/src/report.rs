//! Law reports and the tuple runner shared by every law suite.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{label_seed, tuples, Bounds, TupleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        })
    }
}

/// Inputs and the two disagreeing sides of a failed law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clause: Option<String>,
}

impl Witness {
    pub fn new(inputs: Vec<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Witness { inputs, lhs: lhs.into(), rhs: rhs.into(), clause: None }
    }

    pub fn clause(mut self, c: impl Into<String>) -> Self {
        self.clause = Some(c.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) : {} != {}", self.inputs.join(", "), self.lhs, self.rhs)?;
        if let Some(c) = &self.clause {
            write!(f, " [{c}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law_id: String,
    pub label: String,
    pub status: Status,
    pub tuples_checked: u64,
    #[serde(default)]
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Result of evaluating one law on one tuple.
#[derive(Clone, Debug)]
pub enum Outcome {
    Holds,
    /// The tuple does not meet the law's hypothesis.
    Skip,
    Fails(Witness),
}

impl Outcome {
    /// `Holds` when `lhs == rhs`, otherwise a failure built lazily.
    pub fn compare<T: PartialEq>(lhs: &T, rhs: &T, witness: impl FnOnce() -> Witness) -> Outcome {
        if lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Fails(witness())
        }
    }

    pub fn check(ok: bool, witness: impl FnOnce() -> Witness) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails(witness())
        }
    }
}

/// Accumulates outcomes for one law id. Evaluation stops at the first
/// failure; tuples are visited in a fixed order so the witness is stable.
#[derive(Clone, Debug)]
pub struct LawRun {
    law_id: String,
    label: String,
    checked: u64,
    skipped: u64,
    witness: Option<Witness>,
    notes: Vec<String>,
    sampled: bool,
}

const CHUNK: usize = 2048;

impl LawRun {
    pub fn new(law_id: impl Into<String>, label: impl Into<String>) -> Self {
        LawRun {
            law_id: law_id.into(),
            label: label.into(),
            checked: 0,
            skipped: 0,
            witness: None,
            notes: Vec::new(),
            sampled: false,
        }
    }

    pub fn id(&self) -> &str {
        &self.law_id
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn record(&mut self, o: Outcome) {
        if self.failed() {
            return;
        }
        match o {
            Outcome::Holds => self.checked += 1,
            Outcome::Skip => self.skipped += 1,
            Outcome::Fails(w) => {
                self.checked += 1;
                self.witness = Some(w);
            }
        }
    }

    /// Evaluates `f` on every tuple of `set`, in parallel chunks.
    pub fn run<F>(&mut self, set: &TupleSet, f: F)
    where
        F: Fn(&[u32]) -> Outcome + Sync,
    {
        self.run_items(set.len(), |i| f(set.get(i)));
    }

    /// Evaluates `f(i)` for `i in 0..n`.
    pub fn run_items<F>(&mut self, n: usize, f: F)
    where
        F: Fn(usize) -> Outcome + Sync,
    {
        let mut start = 0;
        while start < n && !self.failed() {
            let end = (start + CHUNK).min(n);
            let outs: Vec<Outcome> = (start..end).into_par_iter().map(&f).collect();
            for o in outs {
                self.record(o);
                if self.failed() {
                    break;
                }
            }
            start = end;
        }
    }

    /// Evaluates `f` on tuples drawn from `lists` (one list per variable)
    /// within the budget of `bounds`.
    pub fn run_over<T, F>(&mut self, lists: &[&[T]], bounds: &Bounds, f: F)
    where
        T: Sync,
        F: Fn(&[&T]) -> Outcome + Sync,
    {
        if self.failed() {
            return;
        }
        let sizes: Vec<usize> = lists.iter().map(|l| l.len()).collect();
        let salt = format!("{}:{:?}", self.law_id, sizes);
        let set = tuples(&sizes, bounds.budget, label_seed(bounds.seed, &salt));
        self.sampled |= !set.exhaustive;
        self.run(&set, |t| {
            let args: Vec<&T> = t.iter().zip(lists).map(|(&i, l)| &l[i as usize]).collect();
            f(&args)
        });
    }

    pub fn finish(mut self) -> LawReport {
        if self.sampled {
            self.notes.push("sampled within tuple budget".into());
        }
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.checked == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        LawReport {
            law_id: self.law_id,
            label: self.label,
            status,
            tuples_checked: self.checked,
            skipped: self.skipped,
            witness: self.witness,
            note: if self.notes.is_empty() { None } else { Some(self.notes.join("; ")) },
        }
    }
}

/// Whether every report in the slice passed (vacuous counts as passing).
pub fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::passed)
}

/// Finds a report by id.
pub fn find<'a>(reports: &'a [LawReport], id: &str) -> Option<&'a LawReport> {
    reports.iter().find(|r| r.law_id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_in_order_is_kept() {
        let mut run = LawRun::new("X", "x");
        run.run_items(10_000, |i| {
            if i % 3000 == 2999 {
                Outcome::Fails(Witness::new(vec![i.to_string()], "a", "b"))
            } else {
                Outcome::Holds
            }
        });
        let r = run.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.unwrap().inputs, vec!["2999".to_string()]);
        assert_eq!(r.tuples_checked, 3000);
    }

    #[test]
    fn only_skips_is_vacuous() {
        let mut run = LawRun::new("X", "x");
        run.run_items(5, |_| Outcome::Skip);
        let r = run.finish();
        assert_eq!(r.status, Status::Vacuous);
        assert_eq!(r.skipped, 5);
    }
}
