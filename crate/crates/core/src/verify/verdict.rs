use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::check::{Mismatch, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    UndefinedOrbit,
    Blowup,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
            Status::UndefinedOrbit => "undefined_orbit",
            Status::Blowup => "blowup",
        })
    }
}

/// Whether a check concerns a theorem, an open conjecture or a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Theorem,
    Conjecture,
    Counterexample,
}

/// Everything needed to replay a failing trial from the command line.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub poset: String,
    pub ring: String,
    pub seed: Option<u64>,
    pub labeling: Value,
    pub mismatch: Mismatch,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        json!({
            "poset": self.poset,
            "ring": self.ring,
            "seed": self.seed,
            "labeling": self.labeling,
            "identity": self.mismatch.identity,
            "location": self.mismatch.location,
            "left": crate::algebra::partial_to_json(&self.mismatch.left),
            "right": crate::algebra::partial_to_json(&self.mismatch.right),
        })
    }
}

/// What happened in one trial.
#[derive(Clone, Debug, PartialEq)]
pub enum TrialResult {
    Checked(Outcome),
    Undefined,
    Blowup,
}

/// Aggregate over all trials of one check; trial order is by seed.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub check: String,
    pub kind: CheckKind,
    pub status: Status,
    pub trials: usize,
    pub passed: usize,
    pub not_applicable: usize,
    pub undefined: usize,
    pub blowup: usize,
    pub failures: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(check: &str, kind: CheckKind) -> Self {
        Verdict {
            check: check.to_string(),
            kind,
            status: Status::NotApplicable,
            trials: 0,
            passed: 0,
            not_applicable: 0,
            undefined: 0,
            blowup: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Folds one trial in; `replay` builds the witness if the trial failed.
    pub fn record(&mut self, result: TrialResult, replay: impl FnOnce(Mismatch) -> Witness) {
        self.trials += 1;
        match result {
            TrialResult::Checked(Outcome::Pass) => self.passed += 1,
            TrialResult::Checked(Outcome::NotApplicable(_)) => self.not_applicable += 1,
            TrialResult::Checked(Outcome::Fail(m)) => self.failures.push(replay(*m)),
            TrialResult::Undefined => self.undefined += 1,
            TrialResult::Blowup => self.blowup += 1,
        }
        self.status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.passed > 0 {
            Status::Pass
        } else if self.undefined > 0 {
            Status::UndefinedOrbit
        } else if self.blowup > 0 {
            Status::Blowup
        } else {
            Status::NotApplicable
        };
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// One-line human summary. Conjecture passes never read as proofs.
    pub fn summary(&self) -> String {
        let counts = format!(
            "{} passed, {} undefined, {} blowup, {} n/a, {} failed",
            self.passed,
            self.undefined,
            self.blowup,
            self.not_applicable,
            self.failures.len()
        );
        match (self.kind, self.status) {
            (CheckKind::Conjecture, Status::Pass) => {
                format!("consistent with conjecture ({} trials; {counts})", self.passed)
            }
            (CheckKind::Conjecture, Status::Fail) => format!("COUNTEREXAMPLE to conjecture ({counts})"),
            (_, status) => format!("{status} ({} trials; {counts})", self.trials),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "status": self.status,
            "trials": self.trials,
            "passed": self.passed,
            "not_applicable": self.not_applicable,
            "undefined": self.undefined,
            "blowup": self.blowup,
            "summary": self.summary(),
            "notes": self.notes,
            "failures": self.failures.iter().map(Witness::to_json).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn witness(m: Mismatch) -> Witness {
        Witness { poset: "rect:1x1".into(), ring: "q".into(), seed: Some(1), labeling: Value::Null, mismatch: m }
    }

    #[test]
    fn status_precedence() {
        let mut v = Verdict::new("x", CheckKind::Theorem);
        assert_eq!(v.status, Status::NotApplicable);
        v.record(TrialResult::Blowup, witness);
        assert_eq!(v.status, Status::Blowup);
        v.record(TrialResult::Undefined, witness);
        assert_eq!(v.status, Status::UndefinedOrbit);
        v.record(TrialResult::Checked(Outcome::Pass), witness);
        assert_eq!(v.status, Status::Pass);
        v.record(TrialResult::Checked(Outcome::fail("id", "here", None, None)), witness);
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.failures.len(), 1);
        assert_eq!(v.trials, 4);
        let json = v.to_json();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["failures"][0]["seed"], 1);
    }

    #[test]
    fn conjecture_wording() {
        let mut v = Verdict::new("conj", CheckKind::Conjecture);
        v.record(TrialResult::Checked(Outcome::Pass), witness);
        assert!(v.summary().starts_with("consistent with conjecture (1 trials"));
        assert!(!v.summary().contains("proved"));
    }
}
