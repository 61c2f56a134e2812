//! Triples, surpassing relations, null sets, balance, classification, heights,
//! uniform presentations, the pre-order `≤`, fuzzy rings and preunits.

use std::collections::VecDeque;

use serde::Serialize;

use crate::carrier::{ElementId, SubsetVal};
use crate::error::{Error, Result};
use crate::report::{AxiomOutcome, Report};
use crate::table::{relation_for, SurpassSpec, SystemTable};

fn labels(s: &SystemTable, ids: &[ElementId]) -> Vec<String> {
    ids.iter().map(|&a| s.labels[a].clone()).collect()
}

/// `𝒜° = {b (−) b}` over the carrier.
pub fn quasi_zeros(s: &SystemTable) -> SubsetVal {
    let flags = s.quasi_zero_flags();
    (0..s.n()).filter(|&a| flags[a]).collect()
}

/// Elements reachable from `seed` by iterated addition inside the table.
pub fn additive_span(s: &SystemTable, seed: &[ElementId]) -> Vec<bool> {
    let n = s.n();
    let mut seen = vec![false; n];
    let mut queue: VecDeque<ElementId> = VecDeque::new();
    for &a in seed {
        if !seen[a] {
            seen[a] = true;
            queue.push_back(a);
        }
    }
    while let Some(b) = queue.pop_front() {
        for &a in seed {
            if let Some(c) = s.add(b, a) {
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

/// Triple axioms: negation map laws, generation of `𝒜` by `𝒯₀`, and
/// `𝒯₀ ∩ 𝒜° = {𝟘}`. Undefined window entries are skipped.
pub fn check_triple(s: &SystemTable) -> Report {
    let n = s.n();
    let mut r = Report::new(&s.name, s.window);
    let w = |ids: &[ElementId]| Some(labels(s, ids));
    let t = s.tangibles();

    let mut assoc = None;
    'a: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let (Some(ab), Some(bc)) = (s.add(a, b), s.add(b, c)) {
                    if let (Some(l), Some(rr)) = (s.add(ab, c), s.add(a, bc)) {
                        if l != rr {
                            assoc = w(&[a, b, c]);
                            break 'a;
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("add-associative", assoc));

    let comm = iproduct(n)
        .find(|&(a, b)| s.add(a, b) != s.add(b, a))
        .and_then(|(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("add-commutative", comm));

    let zn = (0..n).find(|&a| s.add(a, s.zero) != Some(a)).and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("zero-neutral", zn));

    let inv = (0..n).find(|&a| s.neg(s.neg(a)) != a).and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("neg-involution", inv));

    let negt = t
        .iter()
        .copied()
        .find(|&a| !s.is_tangible(s.neg(a)))
        .and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("neg-tangible", negt));

    let nadd = iproduct(n)
        .find(|&(a, b)| match (s.add(a, b), s.add(s.neg(a), s.neg(b))) {
            (Some(x), Some(y)) => s.neg(x) != y,
            _ => false,
        })
        .and_then(|(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("neg-additive", nadd));

    let mut nact = None;
    'b: for &a in &t {
        for b in 0..n {
            if let Some(ab) = s.mul(a, b) {
                let na = s.mul(s.neg(a), b);
                let nb = s.mul(a, s.neg(b));
                if na.is_some_and(|x| x != s.neg(ab)) || nb.is_some_and(|x| x != s.neg(ab)) {
                    nact = w(&[a, b]);
                    break 'b;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("neg-action", nact));

    let mut aassoc = None;
    'c: for &a in &t {
        for &a2 in &t {
            for b in 0..n {
                if let (Some(aa), Some(ab)) = (s.mul(a, a2), s.mul(a2, b)) {
                    if let (Some(l), Some(rr)) = (s.mul(aa, b), s.mul(a, ab)) {
                        if l != rr {
                            aassoc = w(&[a, a2, b]);
                            break 'c;
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("action-associative", aassoc));

    let mut dist = None;
    'd: for &a in &t {
        for b in 0..n {
            for c in 0..n {
                if let (Some(bc), Some(ab), Some(ac)) = (s.add(b, c), s.mul(a, b), s.mul(a, c)) {
                    if let (Some(l), Some(rr)) = (s.mul(a, bc), s.add(ab, ac)) {
                        if l != rr {
                            dist = w(&[a, b, c]);
                            break 'd;
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("action-distributive", dist));

    let unit = match s.one {
        Some(u) => (0..n)
            .find(|&b| s.mul(u, b).is_some_and(|x| x != b))
            .and_then(|b| w(&[b])),
        None => Some(vec!["no unit".to_string()]),
    };
    r.push(AxiomOutcome::from_witness("action-unit", unit));

    let absorb = t
        .iter()
        .copied()
        .find(|&a| s.mul(a, s.zero).is_some_and(|x| x != s.zero))
        .and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("action-absorbing", absorb));

    let closed = iproduct_of(&t)
        .find(|&(a, b)| s.mul(a, b).is_some_and(|x| x != s.zero && !s.is_tangible(x)))
        .and_then(|(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("tangible-mul-closed", closed));

    let span = additive_span(s, &s.tangible0());
    let gen = (0..n).find(|&a| !span[a]).and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("generation", gen));

    let qz = s.quasi_zero_flags();
    let disj = t.iter().copied().find(|&a| qz[a]).and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("tangible-quasizero-disjoint", disj));
    r
}

fn iproduct(n: usize) -> impl Iterator<Item = (ElementId, ElementId)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn iproduct_of(v: &[ElementId]) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
    v.iter().flat_map(move |&a| v.iter().map(move |&b| (a, b)))
}

/// True when `triple` report passes every axiom.
pub fn is_triple(s: &SystemTable) -> bool {
    check_triple(s).all_pass()
}

/// Decides `b1 ⪯ b2` for the given relation specification.
pub fn surpasses(s: &SystemTable, spec: &SurpassSpec, b1: ElementId, b2: ElementId) -> Result<bool> {
    let n = s.n();
    if b1 >= n || b2 >= n {
        return Err(Error::Domain("element out of range".into()));
    }
    Ok(match spec {
        SurpassSpec::Circ => quasi_zeros(s).iter().any(|c| s.add(b1, c) == Some(b2)),
        SurpassSpec::Ideal(members) => members.iter().any(|&c| s.add(b1, c) == Some(b2)),
        SurpassSpec::Explicit(pairs) => pairs.contains(&(b1, b2)),
        SurpassSpec::Inclusion => {
            let sets = s
                .sets
                .as_ref()
                .ok_or_else(|| Error::Domain("inclusion order needs underlying subsets".into()))?;
            sets[b1].is_subset(&sets[b2])
        }
    })
}

/// Relation of `⪯_I` for an ideal given by membership flags.
pub fn ideal_relation(s: &SystemTable, ideal: &[bool]) -> Vec<bool> {
    let members: Vec<ElementId> = (0..s.n()).filter(|&c| ideal[c]).collect();
    relation_for(s, &SurpassSpec::Ideal(members)).expect("members are in range")
}

/// `{b : 𝟘 ⪯ b}` for a relation matrix.
pub fn null_flags(s: &SystemTable, rel: &[bool]) -> Vec<bool> {
    let n = s.n();
    (0..n).map(|b| rel[s.zero * n + b]).collect()
}

/// `A_Null` of the system's own relation.
pub fn null_set(s: &SystemTable) -> SubsetVal {
    let f = null_flags(s, &s.leq);
    (0..s.n()).filter(|&a| f[a]).collect()
}

/// True when `𝒯₀` is uniquely quasi-negated over `ideal`:
/// `a (−) a' ∈ I` implies `a = a'` for `a, a' ∈ 𝒯₀`.
pub fn uniquely_quasi_negated_witness(
    s: &SystemTable,
    ideal: &[bool],
    over: &[ElementId],
) -> Option<(ElementId, ElementId)> {
    iproduct_of(over).find(|&(a, b)| a != b && s.sub(a, b).is_some_and(|c| ideal[c]))
}

/// Checks the surpassing relation laws for a relation matrix.
///
/// Axioms: `reflexive`, `transitive`, `add-compatible`, `action-compatible`,
/// `zero-below-circ` (a), `neg-monotone` (b), `tangible-equality` (c),
/// `strong` (d) and `system` (unique quasi-negation over `A_Null`).
pub fn check_surpassing_axioms(s: &SystemTable, rel: &[bool]) -> Report {
    let n = s.n();
    let le = |a: ElementId, b: ElementId| rel[a * n + b];
    let w = |ids: &[ElementId]| Some(labels(s, ids));
    let mut r = Report::new(&s.name, s.window);

    r.push(AxiomOutcome::from_witness(
        "reflexive",
        (0..n).find(|&a| !le(a, a)).and_then(|a| w(&[a])),
    ));

    let mut trans = None;
    'a: for a in 0..n {
        for b in (0..n).filter(|&b| le(a, b)) {
            for c in (0..n).filter(|&c| le(b, c)) {
                if !le(a, c) {
                    trans = w(&[a, b, c]);
                    break 'a;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("transitive", trans));

    let pairs: Vec<(ElementId, ElementId)> = iproduct(n).filter(|&(a, b)| le(a, b)).collect();
    let mut addc = None;
    'b: for &(a, a2) in &pairs {
        for &(b, b2) in &pairs {
            if let (Some(x), Some(y)) = (s.add(a, b), s.add(a2, b2)) {
                if !le(x, y) {
                    addc = w(&[a, a2, b, b2]);
                    break 'b;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("add-compatible", addc));

    let mut actc = None;
    'c: for a in s.tangibles() {
        for &(b, b2) in &pairs {
            if let (Some(x), Some(y)) = (s.mul(a, b), s.mul(a, b2)) {
                if !le(x, y) {
                    actc = w(&[a, b, b2]);
                    break 'c;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("action-compatible", actc));

    let zc = (0..n)
        .find(|&b| s.circ(b).is_some_and(|c| !le(s.zero, c)))
        .and_then(|b| w(&[b]));
    r.push(AxiomOutcome::from_witness("zero-below-circ", zc));

    let nm = pairs
        .iter()
        .find(|&&(a, b)| !le(s.neg(a), s.neg(b)))
        .and_then(|&(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("neg-monotone", nm));

    let t0 = s.tangible0();
    let te = iproduct_of(&t0)
        .find(|&(a, b)| a != b && le(a, b))
        .and_then(|(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("tangible-equality", te));

    let strong = pairs
        .iter()
        .find(|&&(b, a)| s.is_tangible(a) && b != a)
        .and_then(|&(b, a)| w(&[b, a]));
    r.push(AxiomOutcome::from_witness("strong", strong));

    let null = null_flags(s, rel);
    let sys = uniquely_quasi_negated_witness(s, &null, &t0).and_then(|(a, b)| w(&[a, b]));
    r.push(AxiomOutcome::from_witness("system", sys));
    r
}

/// Names of the axioms making a relation surpassing.
pub const SURPASSING_AXIOMS: [&str; 7] = [
    "reflexive",
    "transitive",
    "add-compatible",
    "action-compatible",
    "zero-below-circ",
    "neg-monotone",
    "tangible-equality",
];

pub fn is_surpassing(r: &Report) -> bool {
    r.all_pass_of(&SURPASSING_AXIOMS)
}

/// Ideal `I` used for balance; defaults to `A_Null`.
#[derive(Clone, Debug)]
pub struct BalanceContext {
    pub ideal: Vec<bool>,
}

impl BalanceContext {
    pub fn new(s: &SystemTable) -> Self {
        BalanceContext {
            ideal: null_flags(s, &s.leq),
        }
    }

    /// Uses the given members; fails unless `I ⊇ 𝒜°`.
    pub fn with_ideal(s: &SystemTable, members: &SubsetVal) -> Result<Self> {
        let mut ideal = vec![false; s.n()];
        for a in members.iter() {
            if a >= s.n() {
                return Err(Error::Domain(format!("ideal member {a} out of range")));
            }
            ideal[a] = true;
        }
        if let Some(c) = quasi_zeros(s).iter().find(|&c| !ideal[c]) {
            return Err(Error::Domain(format!("ideal misses the quasi-zero {}", s.labels[c])));
        }
        Ok(BalanceContext { ideal })
    }

    pub fn members(&self) -> SubsetVal {
        (0..self.ideal.len()).filter(|&a| self.ideal[a]).collect()
    }

    /// `b1 ∇ b2`, or `None` when `b1 (−) b2` leaves the window.
    pub fn balances(&self, s: &SystemTable, b1: ElementId, b2: ElementId) -> Option<bool> {
        s.sub(b1, b2).map(|c| self.ideal[c])
    }
}

/// `b1 ∇_I b2`, or `None` when `b1 (−) b2` leaves the window.
pub fn balances(ctx: &BalanceContext, s: &SystemTable, b1: ElementId, b2: ElementId) -> Option<bool> {
    ctx.balances(s, b1, b2)
}

/// Heights of all elements (`None` when not a sum of tangibles in the table).
pub fn heights(s: &SystemTable) -> Vec<Option<usize>> {
    let n = s.n();
    let t = s.tangibles();
    let mut h = vec![None; n];
    h[s.zero] = Some(0);
    let mut frontier = vec![s.zero];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &b in &frontier {
            for &a in &t {
                if let Some(c) = s.add(b, a) {
                    if h[c].is_none() {
                        h[c] = Some(level);
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    h
}

/// Minimal number of tangible summands of `c`.
pub fn height(s: &SystemTable, c: ElementId) -> Result<usize> {
    heights(s)[c].ok_or_else(|| Error::Domain(format!("{} is not a sum of tangibles", s.labels[c])))
}

/// A boolean property with a witness on the negative side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    pub witness: Option<Vec<String>>,
}

impl Flag {
    pub fn from_witness(w: Option<Vec<String>>) -> Self {
        Flag {
            value: w.is_none(),
            witness: w,
        }
    }

    pub fn and(self, other: Flag) -> Flag {
        if self.value {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
    /// Some tangibles are self-negated and others are not.
    Mixed,
}

/// Classification flags of a triple.
#[derive(Clone, Debug, Serialize)]
pub struct TripleProfile {
    pub kind: Kind,
    pub kind_witness: Option<Vec<String>>,
    pub bipotent: Flag,
    pub strongly_bipotent: Flag,
    pub uniquely_negated: Flag,
    pub metatangible: Flag,
    pub cancellative: Flag,
    pub shallow: Flag,
    pub circ_idempotent: Flag,
    pub geometric: Flag,
    pub strongly_geometric: Flag,
    pub regular: Flag,
    pub e: Option<String>,
    pub e_prime: Option<String>,
    /// Maximal height, or `None` when some element is not a sum of tangibles.
    pub height_bound: Option<usize>,
    pub height_witness: Option<String>,
}

impl TripleProfile {
    pub fn to_report(&self, s: &SystemTable) -> Report {
        let mut r = Report::new(&s.name, s.window);
        let kind = format!("{:?}", self.kind).to_lowercase();
        r.push(AxiomOutcome::flag(
            "second-kind",
            self.kind == Kind::Second,
            Some(vec![kind]),
        ));
        for (name, f) in [
            ("bipotent", &self.bipotent),
            ("strongly-bipotent", &self.strongly_bipotent),
            ("uniquely-negated", &self.uniquely_negated),
            ("metatangible", &self.metatangible),
            ("cancellative", &self.cancellative),
            ("shallow", &self.shallow),
            ("circ-idempotent", &self.circ_idempotent),
            ("geometric", &self.geometric),
            ("strongly-geometric", &self.strongly_geometric),
            ("regular", &self.regular),
        ] {
            r.push(AxiomOutcome::flag(name, f.value, f.witness.clone()));
        }
        let hb = self.height_bound.map(|h| h <= 3).unwrap_or(false);
        r.push(AxiomOutcome::flag(
            "height-at-most-3",
            hb,
            Some(vec![self
                .height_bound
                .map_or_else(|| "unbounded".to_string(), |h| h.to_string())]),
        ));
        r
    }
}

/// Tangibles `a, a'` with `a' ≠ (−)a` and `a + a' ∉ {a, a'}`.
pub fn bipotent_witness(s: &SystemTable) -> Option<(ElementId, ElementId)> {
    let t = s.tangibles();
    let w = iproduct_of(&t).find(|&(a, b)| b != s.neg(a) && s.add(a, b).is_some_and(|c| c != a && c != b));
    w
}

/// `a ∈ 𝒯` and `c1 ≠ c2` with `a c1 = a c2`.
pub fn cancellative(s: &SystemTable) -> Option<(ElementId, ElementId, ElementId)> {
    let n = s.n();
    for a in s.tangibles() {
        for c1 in 0..n {
            for c2 in c1 + 1..n {
                if let (Some(x), Some(y)) = (s.mul(a, c1), s.mul(a, c2)) {
                    if x == y {
                        return Some((a, c1, c2));
                    }
                }
            }
        }
    }
    None
}

/// `c = a + b` with `a ∈ 𝒯` forces `a = c` or `b = c` (strong: `a = b = c`).
pub fn irreducible_witness(s: &SystemTable, c: ElementId, strong: bool) -> Option<(ElementId, ElementId)> {
    for a in s.tangibles() {
        for b in 0..s.n() {
            if s.add(a, b) == Some(c) {
                let ok = if strong { a == c && b == c } else { a == c || b == c };
                if !ok {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

pub fn is_irreducible(s: &SystemTable, c: ElementId, strong: bool) -> bool {
    irreducible_witness(s, c, strong).is_none()
}

/// `e = 𝟙 (−) 𝟙` and `e' = e + 𝟙`.
pub fn e_elements(s: &SystemTable) -> (Option<ElementId>, Option<ElementId>) {
    let e = s.one.and_then(|u| s.circ(u));
    let ep = match (e, s.one) {
        (Some(e), Some(u)) => s.add(e, u),
        _ => None,
    };
    (e, ep)
}

/// Kind of the negation on tangibles.
pub fn kind(s: &SystemTable) -> (Kind, Option<Vec<String>>) {
    let t = s.tangibles();
    let fixed = t.iter().copied().find(|&a| s.neg(a) == a);
    let moved = t.iter().copied().find(|&a| s.neg(a) != a);
    match (fixed, moved) {
        (_, None) => (Kind::First, None),
        (None, Some(_)) => (Kind::Second, None),
        (Some(a), Some(b)) => (Kind::Mixed, Some(labels(s, &[a, b]))),
    }
}

/// `(−)`-regularity: for tangibles, `(−)a1 + a2 + a3 ⪰ 𝟘` and
/// `a1 + a2 + a3 ⪰ 𝟘` imply `a2 = (−)a3`.
pub fn regular_witness(s: &SystemTable) -> Option<(ElementId, ElementId, ElementId)> {
    let t = s.tangibles();
    let null = null_flags(s, &s.leq);
    for &a1 in &t {
        for &a2 in &t {
            for &a3 in &t {
                let p = s.sum(&[s.neg(a1), a2, a3]);
                let q = s.sum(&[a1, a2, a3]);
                if let (Some(p), Some(q)) = (p, q) {
                    if null[p] && null[q] && a2 != s.neg(a3) {
                        return Some((a1, a2, a3));
                    }
                }
            }
        }
    }
    None
}

/// Computes every classification flag by exhaustive scan.
pub fn classify(s: &SystemTable) -> TripleProfile {
    let w = |ids: &[ElementId]| Some(labels(s, ids));
    let (kind, kind_witness) = kind(s);
    let (e, ep) = e_elements(s);
    let bip = Flag::from_witness(bipotent_witness(s).and_then(|(a, b)| w(&[a, b])));
    let sb = bip.clone().and(match (e, ep) {
        (Some(e), Some(ep)) if e == ep => Flag::from_witness(None),
        (Some(e), Some(ep)) => Flag::from_witness(Some(vec![
            format!("e = {}", s.labels[e]),
            format!("e' = {}", s.labels[ep]),
        ])),
        _ => Flag::from_witness(Some(vec!["e or e' undefined".into()])),
    });
    let qz = s.quasi_zero_flags();
    let t = s.tangibles();
    let un = Flag::from_witness(uniquely_quasi_negated_witness(s, &qz, &t).and_then(|(a, b)| w(&[a, b])));
    let meta_sum = iproduct_of(&t)
        .find(|&(a, b)| b != s.neg(a) && s.add(a, b).is_some_and(|c| !s.is_tangible(c)))
        .and_then(|(a, b)| w(&[a, b]));
    let meta = un.clone().and(Flag::from_witness(meta_sum));
    let canc = Flag::from_witness(cancellative(s).and_then(|(a, c1, c2)| w(&[a, c1, c2])));
    let mut circs = vec![false; s.n()];
    for &a in &t {
        if let Some(c) = s.circ(a) {
            circs[c] = true;
        }
    }
    let shallow = Flag::from_witness(
        (0..s.n())
            .find(|&b| !(circs[b] || s.is_tangible(b) || b == s.zero))
            .and_then(|b| w(&[b])),
    );
    let ci = match e {
        Some(e) => match s.circ(e) {
            Some(ec) if ec == e => Flag::from_witness(None),
            Some(ec) => Flag::from_witness(Some(vec![
                format!("e = {}", s.labels[e]),
                format!("e° = {}", s.labels[ec]),
            ])),
            None => Flag::from_witness(Some(vec!["e° undefined".into()])),
        },
        None => Flag::from_witness(Some(vec!["e undefined".into()])),
    };
    let geo_w = |strong: bool| {
        t.iter().find_map(|&c| {
            irreducible_witness(s, c, strong)
                .map(|(a, b)| vec![s.labels[c].clone(), s.labels[a].clone(), s.labels[b].clone()])
        })
    };
    let geometric = Flag::from_witness(geo_w(false));
    let strongly_geometric = Flag::from_witness(geo_w(true));
    let regular = if kind == Kind::Second {
        Flag::from_witness(regular_witness(s).and_then(|(a, b, c)| w(&[a, b, c])))
    } else {
        Flag::from_witness(Some(vec![format!(
            "not of the second kind ({})",
            format!("{kind:?}").to_lowercase()
        )]))
    };
    let hs = heights(s);
    let (height_bound, height_witness) = match hs.iter().position(|h| h.is_none()) {
        Some(b) => (None, Some(s.labels[b].clone())),
        None => {
            let (i, m) = hs.iter().enumerate().max_by_key(|(_, h)| h.unwrap()).unwrap();
            (Some(m.unwrap()), Some(s.labels[i].clone()))
        }
    };
    TripleProfile {
        kind,
        kind_witness,
        bipotent: bip,
        strongly_bipotent: sb,
        uniquely_negated: un,
        metatangible: meta,
        cancellative: canc,
        shallow,
        circ_idempotent: ci,
        geometric,
        strongly_geometric,
        regular,
        e: e.map(|x| s.labels[x].clone()),
        e_prime: ep.map(|x| s.labels[x].clone()),
        height_bound,
        height_witness,
    }
}

/// `b = m·b_T` or `b = b_T°`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Multiple { m: usize, base: ElementId },
    Circ { base: ElementId },
}

impl Presentation {
    pub fn base(&self) -> ElementId {
        match self {
            Presentation::Multiple { base, .. } | Presentation::Circ { base } => *base,
        }
    }
}

/// Uniform presentation of a nonzero element of a bipotent cancellative
/// triple.
pub fn uniform_presentation(s: &SystemTable, b: ElementId) -> Result<Presentation> {
    if let Some((a, c)) = bipotent_witness(s) {
        return Err(Error::Unsupported(format!(
            "not (-)-bipotent: {} + {}",
            s.labels[a], s.labels[c]
        )));
    }
    if let Some((a, c1, c2)) = cancellative(s) {
        return Err(Error::Unsupported(format!(
            "not cancellative: {}·{} = {}·{}",
            s.labels[a], s.labels[c1], s.labels[a], s.labels[c2]
        )));
    }
    presentation_unchecked(s, b)
}

/// Uniform presentation without the hypothesis scan.
pub fn presentation_unchecked(s: &SystemTable, b: ElementId) -> Result<Presentation> {
    if b == s.zero {
        return Err(Error::Domain("zero has no uniform presentation".into()));
    }
    let m = height(s, b)?;
    let t = s.tangibles();
    if let Some(&a) = t.iter().find(|&&a| s.multiple(m, a) == Some(b)) {
        return Ok(Presentation::Multiple { m, base: a });
    }
    if m == 2 {
        if let Some(&a) = t.iter().find(|&&a| s.circ(a) == Some(b)) {
            return Ok(Presentation::Circ { base: a });
        }
    }
    Err(Error::Domain(format!("{} has no uniform presentation", s.labels[b])))
}

/// `c ≤ c'`: some `d` has `c + d = c'` or `(−)c + d = c'`.
pub fn preorder_leq(s: &SystemTable, c: ElementId, c2: ElementId) -> bool {
    (0..s.n()).any(|d| s.add(c, d) == Some(c2) || s.add(s.neg(c), d) == Some(c2))
}

/// Sub-triple generated by the (strongly) `𝒯`-irreducible tangibles.
pub fn irreducible_core(s: &SystemTable, strong: bool) -> Result<SystemTable> {
    let tp: Vec<ElementId> = s
        .tangibles()
        .into_iter()
        .filter(|&a| is_irreducible(s, a, strong))
        .collect();
    let mut seed = vec![s.zero];
    seed.extend(&tp);
    let keep = additive_span(s, &seed);
    sub_table(s, &keep, &tp, &format!("{}-core", s.name))
}

/// Restriction of a table to the elements flagged in `keep`, with tangibles
/// `tangible`. Entries leaving the subset become undefined.
pub fn sub_table(s: &SystemTable, keep: &[bool], tangible: &[ElementId], name: &str) -> Result<SystemTable> {
    let ids: Vec<ElementId> = (0..s.n()).filter(|&a| keep[a]).collect();
    let mut pos = vec![None; s.n()];
    for (i, &a) in ids.iter().enumerate() {
        pos[a] = Some(i);
    }
    let m = ids.len();
    let mut neg = Vec::with_capacity(m);
    for &a in &ids {
        neg.push(pos[s.neg(a)].ok_or_else(|| Error::Domain(format!("negation leaves the subset at {}", s.labels[a])))?);
    }
    let map = |x: Option<ElementId>| x.and_then(|y| pos[y]);
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    let mut pairs = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate() {
            add.push(map(s.add(a, b)));
            mul.push(map(s.mul(a, b)));
            if s.leq(a, b) {
                pairs.push((i, j));
            }
        }
    }
    let mut tflags = vec![false; m];
    for &a in tangible {
        if let Some(i) = pos[a] {
            tflags[i] = true;
        }
    }
    let mut t = SystemTable {
        name: name.into(),
        labels: ids.iter().map(|&a| s.labels[a].clone()).collect(),
        zero: pos[s.zero].expect("zero is kept"),
        one: s.one.and_then(|u| pos[u]),
        tangible: tflags,
        neg,
        add,
        mul,
        surpass: SurpassSpec::Explicit(pairs),
        leq: Vec::new(),
        sets: s.sets.as_ref().map(|v| ids.iter().map(|&a| v[a].clone()).collect()),
        window: s.window,
    };
    t.materialize_leq()?;
    Ok(t)
}

/// Fuzzy ring axioms for distinguished `ε` and ideal `K₀`.
///
/// Axioms: `mul-commutative-monoid`, `eps-square`, `eps-characterization`,
/// `fuzzy-3`, `fuzzy-4` and `coherent`.
pub fn check_fuzzy_ring(s: &SystemTable, eps: ElementId, k0: &SubsetVal) -> Result<Report> {
    let n = s.n();
    if !s.window && !s.mul_total() {
        return Err(Error::Precondition("multiplication must be total".into()));
    }
    let one = s.one.ok_or_else(|| Error::Precondition("no unit element".into()))?;
    let mut k = vec![false; n];
    for c in k0.iter() {
        if c >= n {
            return Err(Error::Domain(format!("ideal member {c} out of range")));
        }
        k[c] = true;
    }
    if k[one] {
        return Err(Error::Precondition(format!(
            "K0 contains the unit {}: not a proper ideal",
            s.labels[one]
        )));
    }
    if !k[s.zero] {
        return Err(Error::Precondition("K0 must contain zero".into()));
    }
    for a in k0.iter() {
        for b in 0..n {
            if k[b] && s.add(a, b).is_some_and(|c| !k[c]) {
                return Err(Error::Precondition(format!(
                    "K0 not closed under {} + {}",
                    s.labels[a], s.labels[b]
                )));
            }
            if s.mul(b, a).is_some_and(|c| !k[c]) {
                return Err(Error::Precondition(format!(
                    "K0 not an ideal at {}·{}",
                    s.labels[b], s.labels[a]
                )));
            }
        }
    }
    let w = |ids: &[ElementId]| Some(labels(s, ids));
    let mut r = Report::new(&s.name, s.window);

    let mut mono = None;
    'm: for a in 0..n {
        if s.mul(one, a).is_some_and(|x| x != a) {
            mono = w(&[one, a]);
            break;
        }
        for b in 0..n {
            if s.mul(a, b) != s.mul(b, a) {
                mono = w(&[a, b]);
                break 'm;
            }
            for c in 0..n {
                if let (Some(ab), Some(bc)) = (s.mul(a, b), s.mul(b, c)) {
                    if let (Some(x), Some(y)) = (s.mul(ab, c), s.mul(a, bc)) {
                        if x != y {
                            mono = w(&[a, b, c]);
                            break 'm;
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("mul-commutative-monoid", mono));

    r.push(AxiomOutcome::from_witness(
        "eps-square",
        match s.mul(eps, eps) {
            Some(x) if x == one => None,
            _ => w(&[eps]),
        },
    ));

    let units: Vec<ElementId> = (0..n).filter(|&a| (0..n).any(|b| s.mul(a, b) == Some(one))).collect();
    let char_w = (0..n)
        .find(|&a| {
            let rhs = units.contains(&a) && s.add(one, a).is_some_and(|c| k[c]);
            let defined = s.add(one, a).is_some();
            defined && ((a == eps) != rhs)
        })
        .and_then(|a| w(&[a]));
    r.push(AxiomOutcome::from_witness("eps-characterization", char_w));

    let kpairs: Vec<(ElementId, ElementId)> = iproduct(n)
        .filter(|&(a, b)| s.add(a, b).is_some_and(|c| k[c]))
        .collect();
    let mut f3 = None;
    'f3: for &(a1, a2) in &kpairs {
        for &(a3, a4) in &kpairs {
            let v = s
                .mul(a1, a3)
                .zip(s.mul(a2, a4).and_then(|x| s.mul(eps, x)))
                .and_then(|(x, y)| s.add(x, y));
            if v.is_some_and(|c| !k[c]) {
                f3 = w(&[a1, a2, a3, a4]);
                break 'f3;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("fuzzy-3", f3));

    let mut f4 = None;
    'f4: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    let lhs = s.add(a3, a4).and_then(|x| s.mul(a2, x)).and_then(|y| s.add(a1, y));
                    if !lhs.is_some_and(|c| k[c]) {
                        continue;
                    }
                    let rhs = s
                        .mul(a2, a3)
                        .zip(s.mul(a2, a4))
                        .and_then(|(x, y)| s.add(a1, x).and_then(|z| s.add(z, y)));
                    if rhs.is_some_and(|c| !k[c]) {
                        f4 = w(&[a1, a2, a3, a4]);
                        break 'f4;
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("fuzzy-4", f4));

    let mut seed = units.clone();
    seed.push(s.zero);
    let span = additive_span(s, &seed);
    r.push(AxiomOutcome::from_witness(
        "coherent",
        (0..n).find(|&a| !span[a]).and_then(|a| w(&[a])),
    ));
    Ok(r)
}

/// Multiplication induced by a preunit `u`:
/// `(Σ aᵢu)(Σ a'ⱼu) = Σ (aᵢa'ⱼ)u`. Returns the full table.
///
/// The stored `mul` of `s` is read only as the action of `𝒯`.
pub fn preunit_induced_mul(s: &SystemTable, u: ElementId) -> Result<Vec<ElementId>> {
    let n = s.n();
    let t = s.tangibles();
    let act = |a: ElementId, b: ElementId| -> Result<ElementId> {
        s.mul(a, b)
            .ok_or_else(|| Error::Domain(format!("action {}·{} undefined", s.labels[a], s.labels[b])))
    };
    let dom = |clause: &str, w: String| Error::Domain(format!("preunit {clause}: {w}"));
    // (1) au = ua
    for &a in &t {
        if act(a, u)? != act(u, a)? {
            return Err(dom("commutation", s.labels[a].clone()));
        }
    }
    // (2) au = a'u implies a = a'
    for &a in &t {
        for &b in &t {
            if a != b && act(a, u)? == act(b, u)? {
                return Err(dom("injectivity", format!("({}, {})", s.labels[a], s.labels[b])));
            }
        }
    }
    // (3) spanning, recording a presentation of each element
    let mut pres: Vec<Option<Vec<ElementId>>> = vec![None; n];
    pres[s.zero] = Some(Vec::new());
    let mut queue = VecDeque::from([s.zero]);
    let gens: Vec<(ElementId, ElementId)> = t.iter().map(|&a| Ok((a, act(a, u)?))).collect::<Result<_>>()?;
    while let Some(b) = queue.pop_front() {
        for &(a, au) in &gens {
            if let Some(c) = s.add(b, au) {
                if pres[c].is_none() {
                    let mut p = pres[b].clone().unwrap();
                    p.push(a);
                    pres[c] = Some(p);
                    queue.push_back(c);
                }
            }
        }
    }
    if let Some(b) = (0..n).find(|&b| pres[b].is_none()) {
        return Err(dom("spanning", s.labels[b].clone()));
    }
    let pres: Vec<Vec<ElementId>> = pres.into_iter().map(Option::unwrap).collect();
    let mut mul = vec![s.zero; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut acc = s.zero;
            for &a in &pres[x] {
                for &b in &pres[y] {
                    let ab = act(a, b)?;
                    let term = act(ab, u)?;
                    acc = s
                        .add(acc, term)
                        .ok_or_else(|| Error::Domain("induced product leaves the window".into()))?;
                }
            }
            mul[x * n + y] = acc;
        }
    }
    let m = |a: ElementId, b: ElementId| mul[a * n + b];
    for a in 0..n {
        if m(u, a) != a || m(a, u) != a {
            return Err(Error::Domain(format!(
                "induced product: {} is not a unit at {}",
                s.labels[u], s.labels[a]
            )));
        }
        for b in 0..n {
            for c in 0..n {
                if m(m(a, b), c) != m(a, m(b, c)) {
                    return Err(Error::Domain(format!(
                        "induced product not associative at ({}, {}, {})",
                        s.labels[a], s.labels[b], s.labels[c]
                    )));
                }
                if let Some(bc) = s.add(b, c) {
                    let l = s.add(m(a, b), m(a, c));
                    let r = s.add(m(b, a), m(c, a));
                    if l != Some(m(a, bc)) || r != Some(m(bc, a)) {
                        return Err(Error::Domain(format!(
                            "induced product not distributive at ({}, {}, {})",
                            s.labels[a], s.labels[b], s.labels[c]
                        )));
                    }
                }
            }
        }
    }
    Ok(mul)
}
