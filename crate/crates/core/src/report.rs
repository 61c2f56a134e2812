//! Verification reports.

use serde::{Deserialize, Serialize};

/// Outcome of one axiom: pass, or fail with the least witness tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<String>>,
}

impl AxiomOutcome {
    pub fn pass(name: &str) -> Self {
        AxiomOutcome {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: &str, witness: Vec<String>) -> Self {
        AxiomOutcome {
            name: name.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    /// Pass when `witness` is `None`.
    pub fn from_witness(name: &str, witness: Option<Vec<String>>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    /// A boolean flag that is not a law: `true` carries no witness.
    pub fn flag(name: &str, value: bool, witness: Option<Vec<String>>) -> Self {
        AxiomOutcome {
            name: name.into(),
            pass: value,
            witness: if value { None } else { witness },
        }
    }
}

/// Structured outcome of an axiom suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub structure: String,
    /// `exhaustive` for finite carriers, `window-verified` for sampled windows.
    pub mode: String,
    pub axioms: Vec<AxiomOutcome>,
}

impl Report {
    pub fn new(structure: &str, window: bool) -> Self {
        Report {
            structure: structure.into(),
            mode: if window { "window-verified" } else { "exhaustive" }.into(),
            axioms: Vec::new(),
        }
    }

    pub fn push(&mut self, o: AxiomOutcome) {
        self.axioms.push(o);
    }

    pub fn extend(&mut self, other: Report) {
        self.axioms.extend(other.axioms);
    }

    pub fn get(&self, name: &str) -> Option<&AxiomOutcome> {
        self.axioms.iter().find(|a| a.name == name)
    }

    /// Verdict of the named axiom; panics when the axiom is absent.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("no axiom {name} in report"))
            .pass
    }

    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn all_pass_of(&self, names: &[&str]) -> bool {
        names.iter().all(|n| self.passed(n))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}
