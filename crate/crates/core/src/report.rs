//! Structured pass/fail reports with per-check tallies and self-contained,
//! replayable counterexamples. A failing verification always carries enough
//! context to re-run the same check on the same instance.

use crate::graph::GraphDocument;
use crate::hypergraph::HypergraphDocument;
use crate::poly::IntPolynomial;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check: how many assertions ran, how many were vacuous (their
/// hypothesis never held), and whether any failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub checked: u64,
    pub vacuous: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub details: Option<serde_json::Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "status: {}",
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            }
        );
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        for check in &self.checks {
            let _ = write!(
                out,
                "  {}: {} (checked {}",
                check.name,
                match check.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                },
                check.checked
            );
            if check.vacuous > 0 {
                let _ = write!(out, ", vacuous {}", check.vacuous);
            }
            let _ = out.write_str(")");
            if let Some(note) = &check.note {
                let _ = write!(out, " - {note}");
            }
            let _ = out.write_str("\n");
        }
        if let Some(ce) = &self.counterexample {
            let _ = writeln!(
                out,
                "counterexample: {}",
                serde_json::to_string(ce).expect("counterexample serializes")
            );
        }
        out
    }
}

/// Self-contained failing instance; `kind` selects what to re-run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Counterexample {
    /// Two orderings yielding different polynomials.
    OrderIndependence {
        hypergraph: HypergraphDocument,
        polynomial: String,
        order_a: Vec<String>,
        order_b: Vec<String>,
        value_a: IntPolynomial,
        value_b: IntPolynomial,
    },
    /// A failed assertion while swapping two adjacent ranks of an ordering.
    Transposition {
        hypergraph: HypergraphDocument,
        order: Vec<String>,
        swap_rank: usize,
        check: String,
        witness: serde_json::Value,
    },
    /// A failed assertion in the exchange-lemma suite.
    Lemmas {
        hypergraph: HypergraphDocument,
        check: String,
        witness: serde_json::Value,
    },
    /// A failed Tutte cross-check on an ordinary graph.
    TutteSpecialization {
        graph: GraphDocument,
        check: String,
        witness: serde_json::Value,
    },
}

/// Running tally for one named check.
#[derive(Debug)]
pub(crate) struct Tally {
    name: &'static str,
    checked: u64,
    vacuous: u64,
    failed: bool,
    note: Option<String>,
}

impl Tally {
    pub fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            vacuous: 0,
            failed: false,
            note: None,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn record(&mut self, ok: bool) -> bool {
        self.checked += 1;
        if !ok {
            self.failed = true;
        }
        ok
    }

    pub fn record_vacuous(&mut self) {
        self.vacuous += 1;
    }

    pub fn set_note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn into_check(self) -> Check {
        Check {
            name: self.name.to_owned(),
            status: if self.failed {
                Status::Fail
            } else {
                Status::Pass
            },
            checked: self.checked,
            vacuous: self.vacuous,
            note: self.note,
        }
    }
}

/// Assembles a report from tallies plus an optional counterexample captured
/// at the first failure.
pub(crate) fn report_from_tallies(
    tallies: Vec<Tally>,
    counterexample: Option<Counterexample>,
    seed: Option<u64>,
    details: Option<serde_json::Value>,
) -> Report {
    let failed = tallies.iter().any(Tally::failed);
    Report {
        status: if failed { Status::Fail } else { Status::Pass },
        checks: tallies.into_iter().map(Tally::into_check).collect(),
        counterexample,
        seed,
        details,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_to_check() {
        let mut t = Tally::new("demo");
        assert!(t.record(true));
        t.record_vacuous();
        assert!(!t.record(false));
        let c = t.into_check();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.checked, 2);
        assert_eq!(c.vacuous, 1);
    }

    #[test]
    fn report_json_shape() {
        let report = report_from_tallies(vec![Tally::new("demo")], None, Some(7), None);
        let json = report.to_json();
        assert!(json.contains("\"status\":\"pass\""));
        assert!(json.contains("\"seed\":7"));
        assert!(!json.contains("counterexample"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
