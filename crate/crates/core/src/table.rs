//! Finite hyperstructure and system tables.

use std::collections::HashMap;

use crate::carrier::{ElementId, SubsetVal};
use crate::error::{Error, Result};

/// Finite hyperstructure: set-valued addition, single-valued multiplication.
///
/// `mul` is `None` for purely additive structures (multigroups); individual
/// entries are `None` when a product falls outside a sampled window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTable {
    pub name: String,
    pub labels: Vec<String>,
    pub zero: ElementId,
    pub one: Option<ElementId>,
    pub neg: Vec<ElementId>,
    pub add: Vec<SubsetVal>,
    pub mul: Option<Vec<Option<ElementId>>>,
}

impl HyperTable {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, a: ElementId, b: ElementId) -> &SubsetVal {
        &self.add[a * self.n() + b]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.mul.as_ref().and_then(|m| m[a * self.n() + b])
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Elementwise lifting `S ⊞ T = ∪ s ⊞ t`.
    pub fn add_sets(&self, s: &SubsetVal, t: &SubsetVal) -> SubsetVal {
        let mut out = Vec::new();
        for a in s.iter() {
            for b in t.iter() {
                out.extend(self.add(a, b).iter());
            }
        }
        SubsetVal::from_iter_unchecked(out)
    }

    pub fn neg_set(&self, s: &SubsetVal) -> SubsetVal {
        s.iter().map(|a| self.neg[a]).collect()
    }

    /// Setwise product `{st}`; `None` if some product is undefined.
    pub fn mul_sets(&self, s: &SubsetVal, t: &SubsetVal) -> Option<SubsetVal> {
        let mut out = Vec::new();
        for a in s.iter() {
            for b in t.iter() {
                out.push(self.mul(a, b)?);
            }
        }
        Some(SubsetVal::from_iter_unchecked(out))
    }

    pub fn set_label(&self, s: &SubsetVal) -> String {
        set_label(s, &self.labels)
    }

    /// Checks the invariants every loaded table must satisfy.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let fail = |axiom: &str, w: String| {
            Err(Error::Validation {
                axiom: axiom.into(),
                witness: w,
            })
        };
        if n == 0 {
            return fail("nonempty-carrier", "carrier is empty".into());
        }
        check_unique_labels(&self.labels)?;
        for a in 0..n {
            if self.neg[self.neg[a]] != a {
                return fail(
                    "neg-involution",
                    format!("neg(neg({})) = {}", self.labels[a], self.labels[self.neg[self.neg[a]]]),
                );
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("add-commutative", format!("({}, {})", self.labels[a], self.labels[b]));
                }
                if self.add(a, b).is_empty() {
                    return fail("add-nonempty", format!("({}, {})", self.labels[a], self.labels[b]));
                }
            }
            if self.add(a, self.zero) != &SubsetVal::singleton(a) {
                return fail(
                    "neutral-zero",
                    format!(
                        "{} + {} = {}",
                        self.labels[a],
                        self.labels[self.zero],
                        self.set_label(self.add(a, self.zero))
                    ),
                );
            }
            if self.has_mul() {
                if let Some(p) = self.mul(self.zero, a) {
                    if p != self.zero {
                        return fail(
                            "absorbing-zero",
                            format!("({}, {})", self.labels[self.zero], self.labels[a]),
                        );
                    }
                }
            }
        }
        Ok(())
    }
}

/// Surpassing relation specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurpassSpec {
    /// `b ⪯ b'` iff `b + c = b'` for a quasi-zero `c`.
    Circ,
    /// `b ⪯ b'` iff `b + c = b'` for some `c` in the given set.
    Ideal(Vec<ElementId>),
    /// Explicit list of related pairs.
    Explicit(Vec<(ElementId, ElementId)>),
    /// Set inclusion of the underlying subsets.
    Inclusion,
}

/// Finite triple with surpassing relation.
///
/// `add` entries are `None` when a sum leaves a sampled window; `mul` entries
/// are `None` when no product is defined (or it leaves the window).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemTable {
    pub name: String,
    pub labels: Vec<String>,
    pub zero: ElementId,
    pub one: Option<ElementId>,
    pub tangible: Vec<bool>,
    pub neg: Vec<ElementId>,
    pub add: Vec<Option<ElementId>>,
    pub mul: Vec<Option<ElementId>>,
    pub surpass: SurpassSpec,
    /// Materialized relation: `leq[a * n + b]` iff `a ⪯ b`.
    pub leq: Vec<bool>,
    /// Underlying subsets for inclusion-ordered systems.
    pub sets: Option<Vec<SubsetVal>>,
    /// True when the table is a finite window of an infinite family.
    pub window: bool,
}

impl SystemTable {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.add[a * self.n() + b]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.mul[a * self.n() + b]
    }

    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a]
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a * self.n() + b]
    }

    pub fn is_tangible(&self, a: ElementId) -> bool {
        self.tangible[a]
    }

    /// `𝒯₀`: tangibles together with zero, in id order.
    pub fn tangible0(&self) -> Vec<ElementId> {
        (0..self.n()).filter(|&a| a == self.zero || self.tangible[a]).collect()
    }

    pub fn tangibles(&self) -> Vec<ElementId> {
        (0..self.n()).filter(|&a| self.tangible[a]).collect()
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    /// `a (−) b`.
    pub fn sub(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.add(a, self.neg[b])
    }

    /// `b° = b (−) b`.
    pub fn circ(&self, b: ElementId) -> Option<ElementId> {
        self.sub(b, b)
    }

    /// Sum of a list of elements, left to right.
    pub fn sum(&self, items: &[ElementId]) -> Option<ElementId> {
        items.iter().try_fold(self.zero, |acc, &x| self.add(acc, x))
    }

    /// `m`-fold sum of `a`.
    pub fn multiple(&self, m: usize, a: ElementId) -> Option<ElementId> {
        (0..m).try_fold(self.zero, |acc, _| self.add(acc, a))
    }

    /// True when every product is defined.
    pub fn mul_total(&self) -> bool {
        self.mul.iter().all(|m| m.is_some())
    }

    /// Quasi-zeros `𝒜°` that lie in the carrier.
    pub fn quasi_zero_flags(&self) -> Vec<bool> {
        let mut out = vec![false; self.n()];
        for b in 0..self.n() {
            if let Some(c) = self.circ(b) {
                out[c] = true;
            }
        }
        out
    }

    /// Recomputes `leq` from `surpass`.
    pub fn materialize_leq(&mut self) -> Result<()> {
        self.leq = relation_for(self, &self.surpass)?;
        Ok(())
    }

    /// Structural checks performed at load time.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let fail = |axiom: &str, w: String| {
            Err(Error::Validation {
                axiom: axiom.into(),
                witness: w,
            })
        };
        if n == 0 {
            return fail("nonempty-carrier", "carrier is empty".into());
        }
        check_unique_labels(&self.labels)?;
        if self.tangible[self.zero] {
            return fail("zero-not-tangible", self.labels[self.zero].clone());
        }
        for a in 0..n {
            if self.neg[self.neg[a]] != a {
                return fail(
                    "neg-involution",
                    format!("neg(neg({})) = {}", self.labels[a], self.labels[self.neg[self.neg[a]]]),
                );
            }
            if self.add(a, self.zero) != Some(a) {
                return fail("neutral-zero", self.labels[a].clone());
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("add-commutative", format!("({}, {})", self.labels[a], self.labels[b]));
                }
            }
            if let Some(p) = self.mul(self.zero, a) {
                if p != self.zero {
                    return fail(
                        "absorbing-zero",
                        format!("({}, {})", self.labels[self.zero], self.labels[a]),
                    );
                }
            }
        }
        if let SurpassSpec::Explicit(_) = self.surpass {
            for a in 0..n {
                if !self.leq(a, a) {
                    return fail("surpass-reflexive", self.labels[a].clone());
                }
                for b in 0..n {
                    for c in 0..n {
                        if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                            return fail(
                                "surpass-transitive",
                                format!("({}, {}, {})", self.labels[a], self.labels[b], self.labels[c]),
                            );
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Relation matrix of `spec` over the carrier of `s`.
pub fn relation_for(s: &SystemTable, spec: &SurpassSpec) -> Result<Vec<bool>> {
    let n = s.n();
    let mut leq = vec![false; n * n];
    let by_members = |members: &[ElementId], leq: &mut Vec<bool>| {
        for a in 0..n {
            for &c in members {
                if let Some(b) = s.add(a, c) {
                    leq[a * n + b] = true;
                }
            }
        }
    };
    match spec {
        SurpassSpec::Circ => {
            let qz = s.quasi_zero_flags();
            let members: Vec<ElementId> = (0..n).filter(|&c| qz[c]).collect();
            by_members(&members, &mut leq);
        }
        SurpassSpec::Ideal(members) => {
            if let Some(&bad) = members.iter().find(|&&c| c >= n) {
                return Err(Error::Domain(format!("ideal member {bad} out of range")));
            }
            by_members(members, &mut leq);
        }
        SurpassSpec::Explicit(pairs) => {
            for &(a, b) in pairs {
                if a >= n || b >= n {
                    return Err(Error::Domain("explicit pair out of range".into()));
                }
                leq[a * n + b] = true;
            }
        }
        SurpassSpec::Inclusion => {
            let sets = s
                .sets
                .as_ref()
                .ok_or_else(|| Error::Domain("inclusion order needs underlying subsets".into()))?;
            for a in 0..n {
                for b in 0..n {
                    leq[a * n + b] = sets[a].is_subset(&sets[b]);
                }
            }
        }
    }
    Ok(leq)
}

fn check_unique_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if let Some(j) = seen.insert(l.as_str(), i) {
            return Err(Error::Validation {
                axiom: "unique-labels".into(),
                witness: format!("label {l} used by elements {j} and {i}"),
            });
        }
    }
    Ok(())
}

/// Label of a subset: the member label for singletons, `{a,b,..}` otherwise.
pub fn set_label(s: &SubsetVal, labels: &[String]) -> String {
    if s.len() == 1 {
        labels[s.members()[0]].clone()
    } else {
        let inner: Vec<&str> = s.iter().map(|a| labels[a].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Parses a set label produced by [`set_label`] into member labels.
pub fn parse_set_label(label: &str) -> Vec<String> {
    match label.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        Some("") => Vec::new(),
        Some(inner) => inner.split(',').map(|s| s.to_string()).collect(),
        None => vec![label.to_string()],
    }
}
