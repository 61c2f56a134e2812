//! Axiom verification for hypergroups, multirings, hyperrings and hyperfields,
//! plus the quotient construction `R/G`.

use crate::carrier::{closure_cap, closure_under, ElementId, SubsetVal};
use crate::error::{Error, Result};
use crate::report::{AxiomOutcome, Report};
use crate::table::HyperTable;

fn l(h: &HyperTable, a: ElementId) -> String {
    h.labels[a].clone()
}

fn labels(h: &HyperTable, ids: &[ElementId]) -> Vec<String> {
    ids.iter().map(|&a| l(h, a)).collect()
}

/// Hypergroup axioms: commutativity, set-associativity, neutral zero,
/// unique hypernegatives and reversibility.
pub fn check_hypergroup(h: &HyperTable) -> Report {
    let n = h.n();
    let mut r = Report::new(&h.name, false);

    let mut w = None;
    'ne: for a in 0..n {
        for b in 0..n {
            if h.add(a, b).is_empty() {
                w = Some(labels(h, &[a, b]));
                break 'ne;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("add-nonempty", w));

    let mut w = None;
    'comm: for a in 0..n {
        for b in 0..n {
            if h.add(a, b) != h.add(b, a) {
                w = Some(labels(h, &[a, b]));
                break 'comm;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("add-commutative", w));

    let mut w = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = h.add_sets(h.add(a, b), &SubsetVal::singleton(c));
                let right = h.add_sets(&SubsetVal::singleton(a), h.add(b, c));
                if left != right {
                    w = Some(labels(h, &[a, b, c]));
                    break 'assoc;
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("associativity", w));

    let w = (0..n)
        .find(|&a| h.add(a, h.zero) != &SubsetVal::singleton(a))
        .map(|a| labels(h, &[a]));
    r.push(AxiomOutcome::from_witness("neutral-zero", w));

    let w = (0..n).find_map(|a| {
        let xs: SubsetVal = (0..n).filter(|&x| h.add(a, x).contains(h.zero)).collect();
        (xs != SubsetVal::singleton(h.neg[a])).then(|| vec![l(h, a), h.set_label(&xs)])
    });
    r.push(AxiomOutcome::from_witness("unique-hypernegative", w));

    r.push(reversibility(h));
    r
}

/// `a₁ ∈ a₂ ⊞ a₃` iff `a₃ ∈ a₁ ⊞ (−a₂)`.
pub fn reversibility(h: &HyperTable) -> AxiomOutcome {
    let n = h.n();
    for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                let lhs = h.add(a2, a3).contains(a1);
                let rhs = h.add(a1, h.neg[a2]).contains(a3);
                if lhs != rhs {
                    return AxiomOutcome::fail("reversibility", labels(h, &[a1, a2, a3]));
                }
            }
        }
    }
    AxiomOutcome::pass("reversibility")
}

/// Hypergroup axioms plus the multiplicative laws of a hyperring and the
/// hyperfield flag.
pub fn check_hyperring(h: &HyperTable) -> Report {
    let mut r = check_hypergroup(h);
    let n = h.n();
    if !h.has_mul() {
        for name in [
            "mul-associative",
            "mul-commutative",
            "mul-unit",
            "absorbing-zero",
            "multiring-inclusion",
            "single-distributivity",
            "neg-is-minus-one",
            "hyperfield",
        ] {
            r.push(AxiomOutcome::fail(name, vec!["no multiplication".into()]));
        }
        return r;
    }
    let m = |a, b| h.mul(a, b);

    let mut w = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = m(a, b).and_then(|ab| m(ab, c));
                let right = m(b, c).and_then(|bc| m(a, bc));
                if let (Some(x), Some(y)) = (left, right) {
                    if x != y {
                        w = Some(labels(h, &[a, b, c]));
                        break 'assoc;
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("mul-associative", w));

    let mut w = None;
    'comm: for a in 0..n {
        for b in 0..n {
            if m(a, b) != m(b, a) {
                w = Some(labels(h, &[a, b]));
                break 'comm;
            }
        }
    }
    r.push(AxiomOutcome::from_witness("mul-commutative", w));

    let w = match h.one {
        None => Some(vec!["no unit".to_string()]),
        Some(one) => (0..n)
            .find(|&a| m(one, a) != Some(a) || m(a, one) != Some(a))
            .map(|a| labels(h, &[one, a])),
    };
    r.push(AxiomOutcome::from_witness("mul-unit", w));

    let w = (0..n)
        .find(|&a| matches!(m(h.zero, a), Some(p) if p != h.zero) || matches!(m(a, h.zero), Some(p) if p != h.zero))
        .map(|a| labels(h, &[h.zero, a]));
    r.push(AxiomOutcome::from_witness("absorbing-zero", w));

    let scale = |a: ElementId, s: &SubsetVal| -> Option<SubsetVal> {
        s.iter()
            .map(|x| m(a, x))
            .collect::<Option<Vec<_>>>()
            .map(SubsetVal::from_iter_unchecked)
    };

    let mut w = None;
    'inc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let (Some(left), Some(ab), Some(ac)) = (scale(a, h.add(b, c)), m(a, b), m(a, c)) {
                    if !left.is_subset(h.add(ab, ac)) {
                        w = Some(labels(h, &[a, b, c]));
                        break 'inc;
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("multiring-inclusion", w));

    // Length-2 sums first, then length 3 as a redundancy guard.
    let mut w = None;
    'd2: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let (Some(left), Some(ab), Some(ac)) = (scale(a, h.add(b, c)), m(a, b), m(a, c)) {
                    if &left != h.add(ab, ac) {
                        w = Some(labels(h, &[a, b, c]));
                        break 'd2;
                    }
                }
            }
        }
    }
    if w.is_none() {
        'd3: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let sum = h.add_sets(h.add(b, c), &SubsetVal::singleton(d));
                        let (Some(left), Some(ab), Some(ac), Some(ad)) = (scale(a, &sum), m(a, b), m(a, c), m(a, d))
                        else {
                            continue;
                        };
                        let right = h.add_sets(h.add(ab, ac), &SubsetVal::singleton(ad));
                        if left != right {
                            w = Some(labels(h, &[a, b, c, d]));
                            break 'd3;
                        }
                    }
                }
            }
        }
    }
    r.push(AxiomOutcome::from_witness("single-distributivity", w));

    let w = match h.one {
        None => Some(vec!["no unit".to_string()]),
        Some(one) => {
            let m1 = h.neg[one];
            (0..n)
                .find(|&a| matches!(m(m1, a), Some(p) if p != h.neg[a]))
                .map(|a| labels(h, &[a]))
        }
    };
    r.push(AxiomOutcome::from_witness("neg-is-minus-one", w));

    r.push(hyperfield_flag(h));
    r
}

/// Nonzero elements form a multiplicative group.
fn hyperfield_flag(h: &HyperTable) -> AxiomOutcome {
    let n = h.n();
    let Some(one) = h.one else {
        return AxiomOutcome::fail("hyperfield", vec!["no unit".into()]);
    };
    for a in 0..n {
        if a == h.zero {
            continue;
        }
        for b in 0..n {
            if b != h.zero && h.mul(a, b) == Some(h.zero) {
                return AxiomOutcome::fail("hyperfield", labels(h, &[a, b]));
            }
        }
        if !(0..n).any(|b| h.mul(a, b) == Some(one)) {
            return AxiomOutcome::fail("hyperfield", labels(h, &[a]));
        }
    }
    AxiomOutcome::pass("hyperfield")
}

/// True when every axiom of a hyperring holds (the hyperfield flag excluded).
pub fn is_hyperring(r: &Report) -> bool {
    r.axioms.iter().filter(|a| a.name != "hyperfield").all(|a| a.pass)
}

/// `(a₀⊞a₁)(a₀′⊞a₁′) = a₀a₀′ ⊞ a₁a₀′ ⊞ a₀a₁′ ⊞ a₁a₁′` for all quadruples.
pub fn check_double_distributivity(h: &HyperTable) -> AxiomOutcome {
    let n = h.n();
    if !h.has_mul() {
        return AxiomOutcome::fail("double-distributivity", vec!["no multiplication".into()]);
    }
    for a0 in 0..n {
        for a1 in 0..n {
            for b0 in 0..n {
                for b1 in 0..n {
                    let Some(left) = h.mul_sets(h.add(a0, a1), h.add(b0, b1)) else {
                        continue;
                    };
                    let (Some(p00), Some(p10), Some(p01), Some(p11)) =
                        (h.mul(a0, b0), h.mul(a1, b0), h.mul(a0, b1), h.mul(a1, b1))
                    else {
                        continue;
                    };
                    let s = h.add_sets(h.add(p00, p10), &SubsetVal::singleton(p01));
                    let right = h.add_sets(&s, &SubsetVal::singleton(p11));
                    if left != right {
                        return AxiomOutcome::fail(
                            "double-distributivity",
                            vec![
                                l(h, a0),
                                l(h, a1),
                                l(h, b0),
                                l(h, b1),
                                h.set_label(&left),
                                h.set_label(&right),
                            ],
                        );
                    }
                }
            }
        }
    }
    AxiomOutcome::pass("double-distributivity")
}

/// The submonoid of `𝒫*(ℋ)` generated by the singletons, in discovery order.
pub fn generated_submonoid(h: &HyperTable) -> Result<Vec<SubsetVal>> {
    let seed: Vec<SubsetVal> = (0..h.n()).map(SubsetVal::singleton).collect();
    closure_under(&seed, |s, t| h.add_sets(s, t), closure_cap())
}

/// `Some((−(S⊞T), (−S)⊞(−T)))` when negation fails to be additive on `S, T`.
pub fn morphism_defect(h: &HyperTable, s: &SubsetVal, t: &SubsetVal) -> Option<(SubsetVal, SubsetVal)> {
    let left = h.neg_set(&h.add_sets(s, t));
    let right = h.add_sets(&h.neg_set(s), &h.neg_set(t));
    (left != right).then_some((left, right))
}

/// Reversibility, additivity of `S ↦ −S` on the generated submonoid, and
/// whether the two verdicts agree.
pub fn check_reversibility_equivalence(h: &HyperTable) -> Result<Vec<AxiomOutcome>> {
    let rev = reversibility(h);
    let gen = generated_submonoid(h)?;
    let mut w = None;
    'm: for s in &gen {
        for t in &gen {
            if let Some((left, right)) = morphism_defect(h, s, t) {
                w = Some(vec![
                    h.set_label(s),
                    h.set_label(t),
                    h.set_label(&left),
                    h.set_label(&right),
                ]);
                break 'm;
            }
        }
    }
    let morph = AxiomOutcome::from_witness("neg-additive-on-generated", w);
    let agree = if rev.pass == morph.pass {
        AxiomOutcome::pass("rev1-agreement")
    } else {
        AxiomOutcome::fail(
            "rev1-agreement",
            vec![
                format!("reversibility={}", rev.pass),
                format!("additive={}", morph.pass),
            ],
        )
    };
    Ok(vec![rev, morph, agree])
}

/// Every `S ∈ ⟨ℋ⟩` containing some `a` and `−a` contains `0`.
pub fn check_regular_hypergroup(h: &HyperTable) -> Result<AxiomOutcome> {
    let gen = generated_submonoid(h)?;
    for s in &gen {
        if s.contains(h.zero) {
            continue;
        }
        if let Some(a) = s.iter().find(|&a| s.contains(h.neg[a])) {
            return Ok(AxiomOutcome::fail("regular", vec![h.set_label(s), l(h, a)]));
        }
    }
    Ok(AxiomOutcome::pass("regular"))
}

/// Finite commutative ring with single-valued tables.
#[derive(Clone, Debug)]
pub struct RingTable {
    pub name: String,
    pub labels: Vec<String>,
    pub zero: ElementId,
    pub one: ElementId,
    pub add: Vec<ElementId>,
    pub mul: Vec<ElementId>,
    pub neg: Vec<ElementId>,
}

impl RingTable {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a * self.n() + b]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.n() + b]
    }

    /// `ℤ/nℤ` with elements labelled `0..n-1`.
    pub fn zmod(n: usize) -> Self {
        assert!(n >= 1);
        RingTable {
            name: format!("Z/{n}"),
            labels: (0..n).map(|i| i.to_string()).collect(),
            zero: 0,
            one: 1 % n,
            add: (0..n * n).map(|i| (i / n + i % n) % n).collect(),
            mul: (0..n * n).map(|i| (i / n) * (i % n) % n).collect(),
            neg: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    /// As a hyper table with singleton sums.
    pub fn as_hyper(&self) -> HyperTable {
        HyperTable {
            name: self.name.clone(),
            labels: self.labels.clone(),
            zero: self.zero,
            one: Some(self.one),
            neg: self.neg.clone(),
            add: self.add.iter().map(|&c| SubsetVal::singleton(c)).collect(),
            mul: Some(self.mul.iter().map(|&c| Some(c)).collect()),
        }
    }
}

/// The prime field `F_p`.
pub fn prime_field(p: usize) -> RingTable {
    let mut r = RingTable::zmod(p);
    r.name = format!("F{p}");
    r
}

/// All subgroups of `F_p^×`, each sorted, ordered by size.
pub fn unit_subgroups(p: usize) -> Vec<Vec<ElementId>> {
    let order = p - 1;
    let gen = (1..p)
        .find(|&g| (1..order).all(|k| pow_mod(g, k, p) != 1))
        .expect("F_p^× is cyclic");
    (1..=order)
        .filter(|d| order.is_multiple_of(*d))
        .map(|d| {
            let step = order / d;
            let mut v: Vec<usize> = (0..d).map(|k| pow_mod(gen, k * step, p)).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

fn pow_mod(g: usize, k: usize, p: usize) -> usize {
    (0..k).fold(1 % p, |acc, _| acc * g % p)
}

/// The quotient hyperring `R/G` of a ring by a subgroup of its units.
///
/// Cosets are ordered and labelled by their least representative.
pub fn quotient_hyperring(r: &RingTable, g: &[ElementId]) -> Result<HyperTable> {
    let n = r.n();
    let gset: SubsetVal = g.iter().copied().collect();
    if gset.is_empty() || g.iter().any(|&x| x >= n) {
        return Err(Error::Domain("subgroup must be a nonempty set of ring elements".into()));
    }
    if !gset.contains(r.one) {
        return Err(Error::Domain("subgroup must contain 1".into()));
    }
    for a in gset.iter() {
        if !(0..n).any(|b| r.mul(a, b) == r.one && gset.contains(b)) {
            return Err(Error::Domain(format!("{} has no inverse in G", r.labels[a])));
        }
        for b in gset.iter() {
            if !gset.contains(r.mul(a, b)) {
                return Err(Error::Domain(format!("G not closed: {}·{}", r.labels[a], r.labels[b])));
            }
        }
    }
    let coset = |a: ElementId| -> SubsetVal { gset.iter().map(|x| r.mul(a, x)).collect() };
    let mut reps: Vec<ElementId> = Vec::new();
    let mut class = vec![usize::MAX; n];
    for a in 0..n {
        if class[a] == usize::MAX {
            let id = reps.len();
            reps.push(a);
            for x in coset(a).iter() {
                class[x] = id;
            }
        }
    }
    let k = reps.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            let mut s = Vec::new();
            for x in coset(a).iter() {
                for y in coset(b).iter() {
                    s.push(class[r.add(x, y)]);
                }
            }
            add.push(SubsetVal::from_iter_unchecked(s));
            mul.push(Some(class[r.mul(a, b)]));
        }
    }
    let glabel: Vec<&str> = gset.iter().map(|a| r.labels[a].as_str()).collect();
    Ok(HyperTable {
        name: format!("{}/{{{}}}", r.name, glabel.join(",")),
        labels: reps.iter().map(|&a| r.labels[a].clone()).collect(),
        zero: class[r.zero],
        one: Some(class[r.one]),
        neg: reps.iter().map(|&a| class[r.neg[a]]).collect(),
        add,
        mul: Some(mul),
    })
}
