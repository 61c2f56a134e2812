//! Passage between hyperrings and systems: the hypersystem of a hyperring,
//! recovery of a hyperring from `𝒯₀` via `⊞_∇`, the elimination properties,
//! and the order-defined hyperadditions `⊞_⪯` and `⊞_I`.

use std::collections::HashMap;

use crate::carrier::{closure_cap, closure_with_parents, ElementId, SubsetVal};
use crate::error::{Error, Result};
use crate::hyper::{
    check_double_distributivity, check_hypergroup, check_hyperring, check_regular_hypergroup, is_hyperring,
};
use crate::report::{AxiomOutcome, Report};
use crate::systems::{ideal_relation, null_flags, regular_witness, BalanceContext, Flag};
use crate::table::{set_label, HyperTable, SurpassSpec, SystemTable};

fn labels(s: &SystemTable, ids: &[ElementId]) -> Vec<String> {
    ids.iter().map(|&a| s.labels[a].clone()).collect()
}

/// Product used on the hypersystem of a hyperring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperProduct {
    /// `S₁S₂ = {s₁s₂}`, valid when the hyperring is doubly distributive.
    Setwise,
    /// `(⊞aᵢ)(⊞a′ⱼ) = ⊞ aᵢa′ⱼ` over the discovery presentation.
    Distributed,
    /// Setwise products that land in the carrier; the rest undefined.
    Partial,
}

/// The hypersystem `⟨ℋ⟩` of a hyperring: singletons closed under `⊞`,
/// tangibles the nonzero singletons, negation elementwise, `⪯` inclusion.
///
/// The singleton `{a}` receives id `a`. Without double distributivity the
/// product is the distributed one when `distributed` is set, and otherwise
/// only defined where the setwise product stays in the carrier.
pub fn hypersystem_of(h: &HyperTable, distributed: bool) -> Result<SystemTable> {
    let rep = check_hyperring(h);
    if !is_hyperring(&rep) {
        let bad = rep
            .axioms
            .iter()
            .find(|a| !a.pass)
            .map(|a| a.name.clone())
            .unwrap_or_default();
        return Err(Error::Precondition(format!("{} is not a hyperring ({bad})", h.name)));
    }
    let product = if check_double_distributivity(h).pass {
        HyperProduct::Setwise
    } else if distributed {
        HyperProduct::Distributed
    } else {
        HyperProduct::Partial
    };
    hypersystem_with(h, product)
}

/// [`hypersystem_of`] with an explicit product choice and no hyperring check.
pub fn hypersystem_with(h: &HyperTable, product: HyperProduct) -> Result<SystemTable> {
    let n = h.n();
    let seed: Vec<SubsetVal> = (0..n).map(SubsetVal::singleton).collect();
    let (sets, parents) = closure_with_parents(&seed, |s, t| h.add_sets(s, t), closure_cap())?;
    let m = sets.len();
    let index: HashMap<&SubsetVal, ElementId> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let find = |s: &SubsetVal| -> Result<ElementId> {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{} is not in the generated carrier", h.set_label(s))))
    };
    let mut add = Vec::with_capacity(m * m);
    for s in &sets {
        for t in &sets {
            add.push(Some(find(&h.add_sets(s, t))?));
        }
    }
    let neg = sets.iter().map(|s| find(&h.neg_set(s))).collect::<Result<Vec<_>>>()?;
    let mut mul = vec![None; m * m];
    if h.has_mul() {
        let atoms: Vec<Vec<ElementId>> = (0..m).map(|i| expand(i, &sets, &parents)).collect();
        for i in 0..m {
            for j in 0..m {
                let p = match product {
                    HyperProduct::Setwise => h.mul_sets(&sets[i], &sets[j]).and_then(|p| index.get(&p).copied()),
                    HyperProduct::Partial => h.mul_sets(&sets[i], &sets[j]).and_then(|p| index.get(&p).copied()),
                    HyperProduct::Distributed => distributed_product(h, &atoms[i], &atoms[j])
                        .map(|p| find(&p))
                        .transpose()?,
                };
                mul[i * m + j] = p;
            }
        }
    }
    let mut s = SystemTable {
        name: format!("<{}>", h.name),
        labels: sets.iter().map(|s| set_label(s, &h.labels)).collect(),
        zero: h.zero,
        one: h.one,
        tangible: (0..m).map(|i| i < n && i != h.zero).collect(),
        neg,
        add,
        mul,
        surpass: SurpassSpec::Inclusion,
        leq: Vec::new(),
        sets: Some(sets),
        window: false,
    };
    s.materialize_leq()?;
    Ok(s)
}

/// Singletons whose `⊞`-sum produced element `i` in discovery order.
fn expand(i: usize, sets: &[SubsetVal], parents: &[Option<(usize, usize)>]) -> Vec<ElementId> {
    match parents[i] {
        None => sets[i].members().to_vec(),
        Some((a, b)) => {
            let mut v = expand(a, sets, parents);
            v.extend(expand(b, sets, parents));
            v
        }
    }
}

fn distributed_product(h: &HyperTable, xs: &[ElementId], ys: &[ElementId]) -> Option<SubsetVal> {
    let mut acc = SubsetVal::singleton(h.zero);
    for &x in xs {
        for &y in ys {
            acc = h.add_sets(&acc, &SubsetVal::singleton(h.mul(x, y)?));
        }
    }
    Some(acc)
}

/// The three elimination properties plus faithful balancing.
#[derive(Clone, Debug)]
pub struct EliminationProfile {
    pub tangibly_balanced: Flag,
    pub balance_elimination: Flag,
    pub nabla_inversion_left: Flag,
    pub nabla_inversion_right: Flag,
    pub faithfully_balanced: Flag,
}

impl EliminationProfile {
    pub fn to_report(&self, s: &SystemTable) -> Report {
        let mut r = Report::new(&s.name, s.window);
        let f = |name: &str, fl: &Flag| AxiomOutcome::flag(name, fl.value, fl.witness.clone());
        r.push(f("tangibly-balanced", &self.tangibly_balanced));
        r.push(f("balance-elimination", &self.balance_elimination));
        r.push(f("nabla-inversion-left", &self.nabla_inversion_left));
        r.push(f("nabla-inversion-right", &self.nabla_inversion_right));
        r.push(f("faithfully-balanced", &self.faithfully_balanced));
        r
    }

    /// Tangibly balanced with tangible balance elimination.
    pub fn multiring_ready(&self) -> bool {
        self.tangibly_balanced.value && self.balance_elimination.value
    }

    pub fn hyperring_ready(&self) -> bool {
        self.multiring_ready() && self.nabla_inversion_left.value && self.nabla_inversion_right.value
    }
}

fn bal(ctx: &BalanceContext, s: &SystemTable, a: ElementId, b: ElementId) -> bool {
    ctx.balances(s, a, b) == Some(true)
}

/// Some `a ∈ 𝒯₀` balancing both `b1` and `b2`.
pub fn common_tangible(s: &SystemTable, ctx: &BalanceContext, b1: ElementId, b2: ElementId) -> Option<ElementId> {
    s.tangible0()
        .into_iter()
        .find(|&a| bal(ctx, s, a, b1) && bal(ctx, s, a, b2))
}

/// Least `(b1, b2)` with `b1 ∇ b2` and no `a ∈ 𝒯₀` balancing both.
pub fn tangibly_balanced_witness(s: &SystemTable, ctx: &BalanceContext) -> Option<(ElementId, ElementId)> {
    let n = s.n();
    (0..n)
        .flat_map(|b1| (0..n).map(move |b2| (b1, b2)))
        .find(|&(b1, b2)| bal(ctx, s, b1, b2) && common_tangible(s, ctx, b1, b2).is_none())
}

/// Least `(b1, a, b2)` with `a ∈ 𝒯₀`, `b1 ∇ a`, `a ∇ b2` and not `b1 ∇ b2`.
///
/// Pairs whose difference leaves a window are skipped.
pub fn balance_elimination_witness(s: &SystemTable, ctx: &BalanceContext) -> Option<(ElementId, ElementId, ElementId)> {
    let n = s.n();
    let t0 = s.tangible0();
    for b1 in 0..n {
        for &a in &t0 {
            if !bal(ctx, s, b1, a) {
                continue;
            }
            for b2 in 0..n {
                if bal(ctx, s, a, b2) && ctx.balances(s, b1, b2) == Some(false) {
                    return Some((b1, a, b2));
                }
            }
        }
    }
    None
}

/// Least `(a, b, a1)` violating left (or right) `∇`-inversion.
pub fn nabla_inversion_witness(
    s: &SystemTable,
    ctx: &BalanceContext,
    left: bool,
) -> Option<(ElementId, ElementId, ElementId)> {
    let n = s.n();
    let t0 = s.tangible0();
    let prod = |a: ElementId, b: ElementId| if left { s.mul(a, b) } else { s.mul(b, a) };
    for &a in &t0 {
        for b in 0..n {
            let Some(ab) = prod(a, b) else { continue };
            for &a1 in &t0 {
                if !bal(ctx, s, ab, a1) {
                    continue;
                }
                if !t0.iter().any(|&b2| prod(a, b2) == Some(a1) && bal(ctx, s, b, b2)) {
                    return Some((a, b, a1));
                }
            }
        }
    }
    None
}

/// `{a ∈ 𝒯 : a ∇ b}` for every element.
pub fn tangible_shadows(s: &SystemTable, ctx: &BalanceContext) -> Vec<SubsetVal> {
    let t = s.tangibles();
    (0..s.n())
        .map(|b| t.iter().copied().filter(|&a| bal(ctx, s, a, b)).collect())
        .collect()
}

/// Least `(b, b')` with `b ≠ b'` and equal tangible shadows.
pub fn faithfully_balanced_witness(s: &SystemTable, ctx: &BalanceContext) -> Option<(ElementId, ElementId)> {
    let sh = tangible_shadows(s, ctx);
    let mut seen: HashMap<&SubsetVal, ElementId> = HashMap::new();
    let mut best: Option<(ElementId, ElementId)> = None;
    for (b, v) in sh.iter().enumerate() {
        if let Some(&b0) = seen.get(v) {
            if best.is_none() {
                best = Some((b0, b));
            }
        } else {
            seen.insert(v, b);
        }
    }
    best
}

/// Exhaustive scan of the elimination properties.
pub fn elimination_profile(s: &SystemTable, ctx: &BalanceContext) -> EliminationProfile {
    let w2 = |p: Option<(ElementId, ElementId)>| Flag::from_witness(p.map(|(a, b)| labels(s, &[a, b])));
    let w3 =
        |p: Option<(ElementId, ElementId, ElementId)>| Flag::from_witness(p.map(|(a, b, c)| labels(s, &[a, b, c])));
    EliminationProfile {
        tangibly_balanced: w2(tangibly_balanced_witness(s, ctx)),
        balance_elimination: w3(balance_elimination_witness(s, ctx)),
        nabla_inversion_left: w3(nabla_inversion_witness(s, ctx, true)),
        nabla_inversion_right: w3(nabla_inversion_witness(s, ctx, false)),
        faithfully_balanced: w2(faithfully_balanced_witness(s, ctx)),
    }
}

fn operand_sum(s: &SystemTable, operands: &[ElementId]) -> Result<ElementId> {
    if let Some(&bad) = operands.iter().find(|&&a| a >= s.n()) {
        return Err(Error::Domain(format!("operand {bad} out of range")));
    }
    s.sum(operands)
        .ok_or_else(|| Error::Domain(format!("sum of {:?} leaves the window", labels(s, operands))))
}

/// `⊞_∇`: `{a ∈ 𝒯₀ : a ∇ Σ operands}`.
pub fn boxplus_nabla(s: &SystemTable, ctx: &BalanceContext, operands: &[ElementId]) -> Result<SubsetVal> {
    let b = operand_sum(s, operands)?;
    Ok(s.tangible0().into_iter().filter(|&a| bal(ctx, s, a, b)).collect())
}

/// `⊞` defined by a relation: `{a : a ⪯ Σ operands}` over `𝒯`, or over
/// `𝒯₀` when `with_zero` is set.
pub fn boxplus_order(s: &SystemTable, rel: &[bool], operands: &[ElementId], with_zero: bool) -> Result<SubsetVal> {
    let b = operand_sum(s, operands)?;
    let n = s.n();
    let pool = if with_zero { s.tangible0() } else { s.tangibles() };
    Ok(pool.into_iter().filter(|&a| rel[a * n + b]).collect())
}

/// Hyper table on `𝒯₀` with the given hyperaddition and the restricted product.
fn table_on_t0<F>(s: &SystemTable, name: String, mut plus: F) -> Result<HyperTable>
where
    F: FnMut(ElementId, ElementId) -> Result<SubsetVal>,
{
    let t0 = s.tangible0();
    let pos: HashMap<ElementId, ElementId> = t0.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let local = |a: ElementId| -> Result<ElementId> {
        pos.get(&a)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{} is not in 𝒯₀", s.labels[a])))
    };
    let k = t0.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in &t0 {
        for &b in &t0 {
            let sum = plus(a, b)?;
            add.push(sum.iter().map(local).collect::<Result<SubsetVal>>()?);
            mul.push(match s.mul(a, b) {
                Some(p) => Some(local(p)?),
                None => None,
            });
        }
    }
    let h = HyperTable {
        name,
        labels: labels(s, &t0),
        zero: local(s.zero)?,
        one: match s.one {
            Some(u) if pos.contains_key(&u) => Some(pos[&u]),
            _ => None,
        },
        neg: t0.iter().map(|&a| local(s.neg(a))).collect::<Result<_>>()?,
        add,
        mul: Some(mul),
    };
    Ok(h)
}

/// `Ψ`: the hyperring on `𝒯₀` with `⊞_∇` and the inherited product.
///
/// Refuses unless the system is tangibly balanced with tangible balance
/// elimination; the error carries the profile.
pub fn recover_hyperring(s: &SystemTable, ctx: &BalanceContext) -> Result<HyperTable> {
    let prof = elimination_profile(s, ctx);
    if !prof.multiring_ready() {
        return Err(Error::Precondition(format!(
            "elimination profile of {} fails: {}",
            s.name,
            prof.to_report(s).to_json()
        )));
    }
    table_on_t0(s, format!("psi({})", s.name), |a, b| boxplus_nabla(s, ctx, &[a, b]))
}

/// Inclusions `(b1⊞_∇b2)⊞_∇b3 ⊆ b1⊞_∇b2⊞_∇b3` and the reverse, over `𝒯₀³`.
pub fn check_closed_inclusions(s: &SystemTable, ctx: &BalanceContext) -> Result<Report> {
    let mut r = Report::new(&s.name, s.window);
    let t0 = s.tangible0();
    let mut fwd = None;
    let mut back = None;
    'outer: for &b1 in &t0 {
        for &b2 in &t0 {
            let Ok(first) = boxplus_nabla(s, ctx, &[b1, b2]) else {
                continue;
            };
            for &b3 in &t0 {
                let Ok(whole) = boxplus_nabla(s, ctx, &[b1, b2, b3]) else {
                    continue;
                };
                let mut left = SubsetVal::empty();
                let mut defined = true;
                for c in first.iter() {
                    match boxplus_nabla(s, ctx, &[c, b3]) {
                        Ok(x) => left = left.union(&x),
                        Err(_) => defined = false,
                    }
                }
                if !defined {
                    continue;
                }
                let w = || {
                    let mut v = labels(s, &[b1, b2, b3]);
                    v.push(set_label(&left, &s.labels));
                    v.push(set_label(&whole, &s.labels));
                    v
                };
                if fwd.is_none() && !left.is_subset(&whole) {
                    fwd = Some(w());
                }
                if back.is_none() && !whole.is_subset(&left) {
                    back = Some(w());
                }
                if fwd.is_some() && back.is_some() {
                    break 'outer;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("closed", fwd));
    r.push(AxiomOutcome::from_witness("closed2", back));
    Ok(r)
}

/// Compares `⊞_⪯` (over `𝒯₀`, with the system's own relation) and `⊞_∇`
/// on all pairs of `𝒯₀`; no outcome is presumed.
pub fn compare_boxplus(s: &SystemTable, ctx: &BalanceContext) -> Result<Report> {
    let mut r = Report::new(&s.name, s.window);
    let t0 = s.tangible0();
    let mut w = None;
    'outer: for &a in &t0 {
        for &b in &t0 {
            let (Ok(x), Ok(y)) = (boxplus_order(s, &s.leq, &[a, b], true), boxplus_nabla(s, ctx, &[a, b])) else {
                continue;
            };
            if x != y {
                let mut v = labels(s, &[a, b]);
                v.push(set_label(&x, &s.labels));
                v.push(set_label(&y, &s.labels));
                w = Some(v);
                break 'outer;
            }
        }
    }
    r.push(AxiomOutcome::flag("order-equals-nabla", w.is_none(), w));
    Ok(r)
}

/// The hyper table `⊞_I` on `𝒯₀` from the relation `⪯_I`.
pub fn order_hypergroup(s: &SystemTable, ideal: &[bool]) -> Result<HyperTable> {
    let rel = ideal_relation(s, ideal);
    table_on_t0(s, format!("order({})", s.name), |a, b| {
        boxplus_order(s, &rel, &[a, b], true)
    })
}

/// Conditions (1) to (3) for `⊞_I`; when they hold, the hypergroup axioms of
/// the resulting table are appended.
///
/// Universal quantifiers range over `𝒯`, the asserted elements over `𝒯₀`.
pub fn check_assumption_hyper1(s: &SystemTable, ideal: &[bool]) -> Result<Report> {
    let rel = ideal_relation(s, ideal);
    check_assumption_hyper1_rel(s, &rel)
}

/// [`check_assumption_hyper1`] for an arbitrary relation in place of `⪯_I`.
pub fn check_assumption_hyper1_rel(s: &SystemTable, rel: &[bool]) -> Result<Report> {
    let n = s.n();
    let le = |a: ElementId, b: ElementId| rel[a * n + b];
    let t = s.tangibles();
    let t0 = s.tangible0();
    let mut r = Report::new(&s.name, s.window);

    let mut w1 = None;
    'c1: for &a0 in &t {
        for &a1 in &t {
            let Some(b) = s.add(a0, a1) else { continue };
            if !t0.iter().any(|&a2| le(a2, b)) {
                w1 = Some(labels(s, &[a0, a1]));
                break 'c1;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("hyper1-nonempty", w1));

    let mut w2 = None;
    let mut w3 = None;
    for &a1 in &t {
        for &a2 in &t {
            for &a3 in &t {
                let Some(total) = s.sum(&[a1, a2, a3]) else { continue };
                let (s12, s23) = (s.add(a1, a2), s.add(a2, a3));
                for &ap in &t {
                    if !le(ap, total) {
                        continue;
                    }
                    if w2.is_none() {
                        let ok = s12.is_some_and(|s12| {
                            t0.iter()
                                .any(|&c| le(c, s12) && s.add(c, a3).is_some_and(|x| le(ap, x)))
                        });
                        if !ok {
                            w2 = Some(labels(s, &[ap, a1, a2, a3]));
                        }
                    }
                    if w3.is_none() {
                        let ok = s23.is_some_and(|s23| {
                            t0.iter()
                                .any(|&c| le(c, s23) && s.add(a1, c).is_some_and(|x| le(ap, x)))
                        });
                        if !ok {
                            w3 = Some(labels(s, &[ap, a1, a2, a3]));
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("hyper1-left", w2));
    r.push(AxiomOutcome::from_witness("hyper1-right", w3));
    if r.all_pass() {
        match table_on_t0(s, format!("order({})", s.name), |a, b| {
            boxplus_order(s, rel, &[a, b], true)
        }) {
            Ok(h) => r.extend(check_hypergroup(&h)),
            Err(e) => r.push(AxiomOutcome::fail("hyper1-table", vec![e.to_string()])),
        }
    }
    Ok(r)
}

/// In a hypersystem, `b1 ⊞ b2 ∈ A_Null` with `b1` tangible forces
/// `(−)b1 ∈ b2`, and `b2 = (−)b1` when `b2` is tangible as well.
pub fn check_strong_negation(s: &SystemTable) -> Result<Report> {
    let sets = s
        .sets
        .as_ref()
        .ok_or_else(|| Error::Unsupported("strong negation check needs a hypersystem".into()))?;
    let null = null_flags(s, &s.leq);
    let mut r = Report::new(&s.name, s.window);
    let mut contain = None;
    let mut equal = None;
    for b1 in s.tangibles() {
        for b2 in 0..s.n() {
            let Some(c) = s.add(b1, b2) else { continue };
            if !null[c] {
                continue;
            }
            let nb1 = s.neg(b1);
            if contain.is_none() && !sets[nb1].is_subset(&sets[b2]) {
                contain = Some(labels(s, &[b1, b2]));
            }
            if equal.is_none() && s.is_tangible(b2) && b2 != nb1 {
                equal = Some(labels(s, &[b1, b2]));
            }
        }
    }
    r.push(AxiomOutcome::from_witness("null-sum-contains-negative", contain));
    r.push(AxiomOutcome::from_witness("null-sum-tangible-is-negative", equal));
    Ok(r)
}

/// Retraction `ΨΦ(ℋ) = ℋ` under `a ↦ {a}`, faithfulness of `Φ(ℋ)`, and for
/// regular hyperfields the `(−)`-regularity of the hypersystem.
pub fn retraction_suite(h: &HyperTable) -> Result<Report> {
    let s = hypersystem_of(h, true)?;
    let ctx = BalanceContext::new(&s);
    let mut r = Report::new(&h.name, false);
    let prof = elimination_profile(&s, &ctx);
    r.push(AxiomOutcome::flag(
        "tangibly-balanced",
        prof.tangibly_balanced.value,
        prof.tangibly_balanced.witness.clone(),
    ));
    r.push(AxiomOutcome::flag(
        "balance-elimination",
        prof.balance_elimination.value,
        prof.balance_elimination.witness.clone(),
    ));
    let back = recover_hyperring(&s, &ctx)?;
    r.push(AxiomOutcome::from_witness("retraction", table_difference(h, &back)));
    r.push(AxiomOutcome::flag(
        "faithfully-balanced",
        prof.faithfully_balanced.value,
        prof.faithfully_balanced.witness,
    ));
    if check_regular_hypergroup(h)?.pass {
        let w = regular_witness(&s).map(|(a, b, c)| labels(&s, &[a, b, c]));
        r.push(AxiomOutcome::from_witness("hypersystem-regular", w));
    }
    Ok(r)
}

/// `A_Null ∪ {S : |S| ≥ k}` on a hypersystem.
pub fn null_or_large(s: &SystemTable, k: usize) -> Result<BalanceContext> {
    let sets = s
        .sets
        .as_ref()
        .ok_or_else(|| Error::Unsupported("size ideal needs a hypersystem".into()))?;
    let null = null_flags(s, &s.leq);
    let members: SubsetVal = (0..s.n()).filter(|&b| null[b] || sets[b].len() >= k).collect();
    BalanceContext::with_ideal(s, &members)
}

/// First entry where two hyper tables on the same labels differ.
pub fn table_difference(h: &HyperTable, g: &HyperTable) -> Option<Vec<String>> {
    if h.labels != g.labels {
        return Some(vec!["labels".into(), h.labels.join(" "), g.labels.join(" ")]);
    }
    if h.zero != g.zero || h.one != g.one {
        return Some(vec!["zero or one".into()]);
    }
    let n = h.n();
    for a in 0..n {
        if h.neg[a] != g.neg[a] {
            return Some(vec!["neg".into(), h.labels[a].clone()]);
        }
        for b in 0..n {
            if h.add(a, b) != g.add(a, b) {
                return Some(vec![
                    "add".into(),
                    h.labels[a].clone(),
                    h.labels[b].clone(),
                    h.set_label(h.add(a, b)),
                    g.set_label(g.add(a, b)),
                ]);
            }
            if h.has_mul() && h.mul(a, b) != g.mul(a, b) {
                return Some(vec!["mul".into(), h.labels[a].clone(), h.labels[b].clone()]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{krasner, signs};
    use crate::hyper::{prime_field, quotient_hyperring};
    use crate::systems::{check_surpassing_axioms, check_triple, is_surpassing};

    #[test]
    fn krasner_hypersystem_has_three_elements() {
        let s = hypersystem_of(&krasner(), false).unwrap();
        assert_eq!(s.labels, vec!["0", "1", "{0,1}"]);
        assert!(check_triple(&s).all_pass());
        assert!(is_surpassing(&check_surpassing_axioms(&s, &s.leq)));
    }

    #[test]
    fn signs_hypersystem_has_four_elements() {
        let s = hypersystem_of(&signs(), false).unwrap();
        assert_eq!(s.n(), 4);
        let ctx = BalanceContext::new(&s);
        let one = s.index_of("1").unwrap();
        let m = s.index_of("-1").unwrap();
        let r = boxplus_nabla(&s, &ctx, &[one, m]).unwrap();
        assert_eq!(r.len(), 3);
    }

    #[test]
    fn f11_mod_sign_closure_size() {
        let h = quotient_hyperring(&prime_field(11), &[1, 10]).unwrap();
        let s = hypersystem_of(&h, true).unwrap();
        assert_eq!(s.n(), 53);
    }

    #[test]
    fn zero_operand_is_neutral() {
        let s = hypersystem_of(&signs(), false).unwrap();
        let ctx = BalanceContext::new(&s);
        for a in s.tangible0() {
            assert_eq!(boxplus_nabla(&s, &ctx, &[a, s.zero]).unwrap(), SubsetVal::singleton(a));
        }
    }

    #[test]
    fn f11_large_ideal_profile() {
        let h = quotient_hyperring(&prime_field(11), &[1, 10]).unwrap();
        let s = hypersystem_of(&h, true).unwrap();
        let ctx = null_or_large(&s, 4).unwrap();
        let p = elimination_profile(&s, &ctx);
        assert_eq!(
            p.tangibly_balanced.witness,
            Some(vec!["{0,2}".to_string(), "{1,5}".to_string()])
        );
        let b1 = s.index_of("{0,2}").unwrap();
        let b2 = s.index_of("{1,5}").unwrap();
        assert!(ctx.balances(&s, b1, b2).unwrap());
        assert!(common_tangible(&s, &ctx, b1, b2).is_none());
        assert!(p.balance_elimination.value);
    }
}
