//! Executable lemma checks over finite tables and windows.
//!
//! Each check scans every instance its hypotheses allow and reports the
//! number of instances examined and the violating tuples.

use serde::Serialize;

use crate::carrier::ElementId;
use crate::systems::{
    bipotent_witness, cancellative, check_surpassing_axioms, classify, e_elements, heights, ideal_relation,
    is_irreducible, is_surpassing, kind, preorder_leq, presentation_unchecked, quasi_zeros,
    uniquely_quasi_negated_witness, BalanceContext, Kind,
};
use crate::table::SystemTable;

/// Outcome of one lemma on one structure.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaOutcome {
    pub lemma: String,
    pub structure: String,
    pub checked: usize,
    pub violations: Vec<Vec<String>>,
    /// Set when the hypotheses fail, so the lemma says nothing here.
    pub vacuous: Option<String>,
}

impl LemmaOutcome {
    fn new(lemma: &str, s: &SystemTable) -> Self {
        LemmaOutcome {
            lemma: lemma.into(),
            structure: s.name.clone(),
            checked: 0,
            violations: Vec::new(),
            vacuous: None,
        }
    }

    fn vacuous(mut self, why: &str) -> Self {
        self.vacuous = Some(why.into());
        self
    }

    fn check(&mut self, ok: bool, s: &SystemTable, ids: &[ElementId]) {
        self.checked += 1;
        if !ok && self.violations.len() < 16 {
            self.violations.push(ids.iter().map(|&a| s.labels[a].clone()).collect());
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Names accepted by [`run_lemma`].
pub const LEMMAS: [&str; 10] = [
    "nab4",
    "nablprec",
    "newsys",
    "biphom1",
    "ht2",
    "neg3",
    "leq-order0",
    "hyp0",
    "rev122-iii",
    "geom1",
];

pub fn run_lemma(name: &str, s: &SystemTable) -> Option<LemmaOutcome> {
    Some(match name {
        "nab4" => nab4(s),
        "nablprec" => nablprec(s),
        "newsys" => newsys(s),
        "biphom1" => biphom1(s),
        "ht2" => ht2(s),
        "neg3" => neg3(s),
        "leq-order0" => leq_order0(s),
        "hyp0" => hyp0(s),
        "rev122-iii" => rev122_iii(s),
        "geom1" => geom1(s),
        _ => return None,
    })
}

pub fn run_all(s: &SystemTable) -> Vec<LemmaOutcome> {
    LEMMAS.iter().map(|l| run_lemma(l, s).expect("known lemma")).collect()
}

/// `a₁ ∇ a₂` iff `a₁ = a₂` for tangibles when uniquely negated over `I`, and
/// `(b₁+b₂) ∇ b₃` iff `b₁ ∇ (b₃ (−) b₂)`.
pub fn nab4(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("nab4", s);
    let ctx = BalanceContext::new(s);
    if !is_submodule(s, &ctx.ideal) {
        return out.vacuous("A_Null is not a submodule containing the quasi-zeros");
    }
    let t = s.tangibles();
    if uniquely_quasi_negated_witness(s, &ctx.ideal, &t).is_none() {
        for &a in &t {
            for &b in &t {
                if let Some(bal) = ctx.balances(s, a, b) {
                    out.check(bal == (a == b), s, &[a, b]);
                }
            }
        }
    }
    let n = s.n();
    for b1 in 0..n {
        for b2 in 0..n {
            let Some(sum) = s.add(b1, b2) else { continue };
            for b3 in 0..n {
                let l = ctx.balances(s, sum, b3);
                let r = s.sub(b3, b2).and_then(|d| ctx.balances(s, b1, d));
                if let (Some(l), Some(r)) = (l, r) {
                    out.check(l == r, s, &[b1, b2, b3]);
                }
            }
        }
    }
    out
}

/// `b₁ ⪯_I b₂` implies `b₁ ∇_I b₂`, with `I = A_Null`.
pub fn nablprec(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("nablprec", s);
    let ctx = BalanceContext::new(s);
    if !is_submodule(s, &ctx.ideal) {
        return out.vacuous("A_Null is not a submodule containing the quasi-zeros");
    }
    let rel = ideal_relation(s, &ctx.ideal);
    let n = s.n();
    for a in 0..n {
        for b in 0..n {
            if rel[a * n + b] {
                if let Some(bal) = ctx.balances(s, a, b) {
                    out.check(bal, s, &[a, b]);
                }
            }
        }
    }
    out
}

/// True when `ideal` contains `𝒜°` and is closed under sums, negation and
/// the action of tangibles (where defined).
pub fn is_submodule(s: &SystemTable, ideal: &[bool]) -> bool {
    let n = s.n();
    if quasi_zeros(s).iter().any(|c| !ideal[c]) || !ideal[s.zero] {
        return false;
    }
    let t = s.tangibles();
    (0..n).filter(|&a| ideal[a]).all(|a| {
        ideal[s.neg(a)]
            && (0..n)
                .filter(|&b| ideal[b])
                .all(|b| s.add(a, b).is_none_or(|c| ideal[c]))
            && t.iter().all(|&x| s.mul(x, a).is_none_or(|c| ideal[c]))
    })
}

/// Candidate ideals: `𝒜° ∪ {𝟘}` and `A_Null`.
fn candidate_ideals(s: &SystemTable) -> Vec<Vec<bool>> {
    let mut v = Vec::new();
    let mut qz = vec![false; s.n()];
    for c in quasi_zeros(s).iter() {
        qz[c] = true;
    }
    qz[s.zero] = true;
    v.push(qz);
    v.push(BalanceContext::new(s).ideal);
    v
}

/// `⪯_I` is surpassing when `𝒯₀` is uniquely quasi-negated over `I`, and
/// the two sides of the equivalent conditions agree.
pub fn newsys(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("newsys", s);
    let t0 = s.tangible0();
    let t = s.tangibles();
    for ideal in candidate_ideals(s) {
        if !is_submodule(s, &ideal) {
            continue;
        }
        let a = uniquely_quasi_negated_witness(s, &ideal, &t0).is_none();
        let b = t.iter().all(|&x| !ideal[x]) && uniquely_quasi_negated_witness(s, &ideal, &t).is_none();
        let members: Vec<ElementId> = (0..s.n()).filter(|&c| ideal[c]).collect();
        out.check(a == b, s, &members);
        if a {
            let rel = ideal_relation(s, &ideal);
            out.check(is_surpassing(&check_surpassing_axioms(s, &rel)), s, &members);
        }
    }
    if out.checked == 0 {
        return out.vacuous("no candidate ideal is a submodule");
    }
    out
}

/// `a ⪯_I c` and `a' ⪯_I c'` imply `aa' ⪯_I cc'` on semiring windows.
pub fn biphom1(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("biphom1", s);
    let ideal = BalanceContext::new(s).ideal;
    if !is_submodule(s, &ideal) {
        return out.vacuous("A_Null is not a submodule containing the quasi-zeros");
    }
    if let Some(w) = distributivity_witness(s) {
        return out.vacuous(&format!("not a semiring: distributivity fails at {w}"));
    }
    let rel = ideal_relation(s, &ideal);
    let n = s.n();
    let pairs: Vec<(ElementId, ElementId)> = (0..n)
        .flat_map(|a| (0..n).map(move |c| (a, c)))
        .filter(|&(a, c)| rel[a * n + c])
        .collect();
    for &(a, c) in &pairs {
        for &(a2, c2) in &pairs {
            if let (Some(x), Some(y)) = (s.mul(a, a2), s.mul(c, c2)) {
                out.check(rel[x * n + y], s, &[a, c, a2, c2]);
            }
        }
    }
    out
}

/// First failure of `a(b + c) = ab + ac` over all defined entries.
fn distributivity_witness(s: &SystemTable) -> Option<String> {
    let n = s.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = s.add(b, c).map(|bc| s.mul(a, bc));
                let r = s.mul(a, b).zip(s.mul(a, c)).map(|(x, y)| s.add(x, y));
                if let (Some(Some(l)), Some(Some(r))) = (l, r) {
                    if l != r {
                        return Some(format!("({}, {}, {})", s.labels[a], s.labels[b], s.labels[c]));
                    }
                }
            }
        }
    }
    None
}

/// `∘`-idempotent bipotent triples: `a° + a° = a°`, height at most 3, height 3
/// only in the first kind; `e' ∈ {e, 𝟙}` forces `∘`-idempotence and
/// shallowness.
pub fn ht2(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("ht2", s);
    if bipotent_witness(s).is_some() {
        return out.vacuous("not (-)-bipotent");
    }
    let (Some(e), Some(ep)) = e_elements(s) else {
        return out.vacuous("e or e' undefined");
    };
    let p = classify(s);
    let circ_idem = s.circ(e) == Some(e);
    if circ_idem {
        for a in s.tangibles() {
            if let Some(c) = s.circ(a) {
                if let Some(cc) = s.add(c, c) {
                    out.check(cc == c, s, &[a]);
                }
            }
        }
        if !s.window {
            let hs = heights(s);
            let one = s.one.expect("e is defined");
            for (b, h) in hs.iter().enumerate() {
                if let Some(h) = h {
                    out.check(*h <= 3, s, &[b]);
                    if *h == 3 {
                        out.check(s.neg(one) == one, s, &[b]);
                    }
                }
            }
        }
    }
    if ep == e || Some(ep) == s.one {
        out.check(circ_idem, s, &[e, ep]);
        out.check(p.shallow.value, s, &[e, ep]);
    }
    if out.checked == 0 {
        return out.vacuous("not circ-idempotent and e' not in {e, 1}");
    }
    out
}

fn bip_canc(s: &SystemTable) -> Option<&'static str> {
    if bipotent_witness(s).is_some() {
        Some("not (-)-bipotent")
    } else if cancellative(s).is_some() {
        Some("not cancellative")
    } else {
        None
    }
}

fn tangible_parts(s: &SystemTable) -> Vec<Option<ElementId>> {
    (0..s.n())
        .map(|b| presentation_unchecked(s, b).ok().map(|p| p.base()))
        .collect()
}

/// For `b'_T ≠ (±) b_T`: either `b + b' = b` and `b (−) b' = b`, or
/// `b + b' = b'` and `b' (−) b = b'`.
pub fn neg3(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("neg3", s);
    if let Some(why) = bip_canc(s) {
        return out.vacuous(why);
    }
    let parts = tangible_parts(s);
    let n = s.n();
    for b in 0..n {
        for b2 in 0..n {
            let (Some(x), Some(y)) = (parts[b], parts[b2]) else {
                continue;
            };
            if y == x || y == s.neg(x) {
                continue;
            }
            let (Some(sum), Some(d1), Some(d2)) = (s.add(b, b2), s.sub(b, b2), s.sub(b2, b)) else {
                continue;
            };
            out.check((sum == b && d1 == b) || (sum == b2 && d2 == b2), s, &[b, b2]);
        }
    }
    out
}

/// `c ≤ c'` with `c_T ≠ (±) c'_T` forces `c + c' = c'`; in the second kind,
/// `c_T = (±) c'_T` forces `c' ∈ {c°, (±)c}`.
pub fn leq_order0(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("leq-order0", s);
    if let Some(why) = bip_canc(s) {
        return out.vacuous(why);
    }
    let parts = tangible_parts(s);
    let second = kind(s).0 == Kind::Second;
    let n = s.n();
    for c in 0..n {
        for c2 in 0..n {
            let (Some(x), Some(y)) = (parts[c], parts[c2]) else {
                continue;
            };
            if !preorder_leq(s, c, c2) {
                continue;
            }
            if y != x && y != s.neg(x) {
                if let Some(sum) = s.add(c, c2) {
                    out.check(sum == c2, s, &[c, c2]);
                }
            } else if second {
                out.check(Some(c2) == s.circ(c) || c2 == c || c2 == s.neg(c), s, &[c, c2]);
            }
        }
    }
    out
}

/// Metatangible systems of the second kind are `(−)`-regular.
pub fn hyp0(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("hyp0", s);
    let p = classify(s);
    if p.kind != Kind::Second {
        return out.vacuous("not of the second kind");
    }
    if !p.metatangible.value {
        return out.vacuous("not metatangible");
    }
    let one = s.one.unwrap_or(s.zero);
    out.check(p.regular.value, s, &[one]);
    out
}

/// A `(𝒯, (−))`-nontrivial triple is not both metatangible and strongly
/// geometric.
pub fn rev122_iii(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("rev122-iii", s);
    let Some(one) = s.one else {
        return out.vacuous("no unit");
    };
    if s.tangibles().iter().all(|&a| a == one || a == s.neg(one)) {
        return out.vacuous("(T,(-))-trivial");
    }
    let p = classify(s);
    out.check(!(p.metatangible.value && p.strongly_geometric.value), s, &[one]);
    out
}

/// When `𝒯` generates `(𝒜, +)`, every `𝒯`-irreducible element is in `𝒯₀`.
pub fn geom1(s: &SystemTable) -> LemmaOutcome {
    let mut out = LemmaOutcome::new("geom1", s);
    let span = crate::systems::additive_span(s, &s.tangible0());
    if span.iter().any(|&x| !x) {
        return out.vacuous("T does not generate A");
    }
    for c in 0..s.n() {
        if is_irreducible(s, c, false) {
            out.check(c == s.zero || s.is_tangible(c), s, &[c]);
        }
    }
    out
}
