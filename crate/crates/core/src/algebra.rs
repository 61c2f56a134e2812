//! Element-level interface shared by finite tables and symbolic families, and
//! tabulation of finite windows.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::carrier::{ElementId, SubsetVal};
use crate::table::{SurpassSpec, SystemTable};

/// Operations of a triple with surpassing relation on encoded elements.
///
/// Symbolic families are total; finite windows return `None` for results that
/// leave the window.
pub trait Algebra {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Product, or `None` when no product is defined.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn is_tangible(&self, a: &Self::Elem) -> bool;
    /// `a ⪯ b` in the family's own surpassing relation.
    fn surpasses(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn label(&self, a: &Self::Elem) -> String;

    /// `a ∈ A_Null`.
    fn in_null(&self, a: &Self::Elem) -> bool {
        self.surpasses(&self.zero(), a)
    }

    /// The pre-order `c ≤ c'` (`c + d = c'` or `(−)c + d = c'`), when decidable.
    fn preorder_leq(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<bool> {
        None
    }

    /// True when the action of tangibles is cancellative, when known.
    fn cancellative(&self) -> Option<bool> {
        None
    }

    /// True when `a + a' ∈ {a, a'}` for tangibles `a' ≠ (−)a`, when known.
    fn bipotent(&self) -> Option<bool> {
        None
    }
}

impl Algebra for SystemTable {
    type Elem = ElementId;

    fn name(&self) -> String {
        self.name.clone()
    }
    fn zero(&self) -> ElementId {
        self.zero
    }
    fn one(&self) -> Option<ElementId> {
        self.one
    }
    fn add(&self, a: &ElementId, b: &ElementId) -> Option<ElementId> {
        SystemTable::add(self, *a, *b)
    }
    fn neg(&self, a: &ElementId) -> ElementId {
        self.neg[*a]
    }
    fn mul(&self, a: &ElementId, b: &ElementId) -> Option<ElementId> {
        SystemTable::mul(self, *a, *b)
    }
    fn is_tangible(&self, a: &ElementId) -> bool {
        self.tangible[*a]
    }
    fn surpasses(&self, a: &ElementId, b: &ElementId) -> bool {
        self.leq(*a, *b)
    }
    fn label(&self, a: &ElementId) -> String {
        self.labels[*a].clone()
    }
    fn preorder_leq(&self, a: &ElementId, b: &ElementId) -> Option<bool> {
        Some(crate::systems::preorder_leq(self, *a, *b))
    }
    fn cancellative(&self) -> Option<bool> {
        Some(crate::systems::cancellative(self).is_none())
    }
    fn bipotent(&self) -> Option<bool> {
        Some(crate::systems::bipotent_witness(self).is_none())
    }
}

/// Builds the finite table of `alg` restricted to `elems`.
///
/// Sums and products leaving the window become `None`; the surpassing relation
/// is materialized explicitly from the family's own relation.
pub fn tabulate<A: Algebra>(alg: &A, elems: &[A::Elem], name: &str, window: bool) -> SystemTable {
    let n = elems.len();
    let index: HashMap<&A::Elem, ElementId> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let find = |e: Option<A::Elem>| e.and_then(|x| index.get(&x).copied());
    let zero = index[&alg.zero()];
    let one = alg.one().and_then(|o| index.get(&o).copied());
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut pairs = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            add.push(find(alg.add(a, b)));
            mul.push(find(alg.mul(a, b)));
            if alg.surpasses(a, b) {
                pairs.push((i, j));
            }
        }
    }
    let mut leq = vec![false; n * n];
    for &(i, j) in &pairs {
        leq[i * n + j] = true;
    }
    let neg = elems
        .iter()
        .map(|a| {
            index
                .get(&alg.neg(a))
                .copied()
                .expect("windows are closed under negation")
        })
        .collect();
    SystemTable {
        name: name.to_string(),
        labels: elems.iter().map(|e| alg.label(e)).collect(),
        zero,
        one,
        tangible: elems.iter().map(|e| alg.is_tangible(e)).collect(),
        neg,
        add,
        mul,
        surpass: SurpassSpec::Explicit(pairs),
        leq,
        sets: None,
        window,
    }
}

/// Elements reachable from `seed` under addition, in discovery order,
/// keeping only those accepted by `keep`. `keep` must describe a finite set.
pub fn additive_closure<A: Algebra>(alg: &A, seed: &[A::Elem], keep: impl Fn(&A::Elem) -> bool) -> Vec<A::Elem> {
    let mut items: Vec<A::Elem> = Vec::new();
    let mut seen: HashMap<A::Elem, ()> = HashMap::new();
    for s in seed {
        if keep(s) && seen.insert(s.clone(), ()).is_none() {
            items.push(s.clone());
        }
    }
    let mut i = 0;
    while i < items.len() {
        for j in 0..=i {
            if let Some(r) = alg.add(&items[j], &items[i]) {
                if keep(&r) && !seen.contains_key(&r) {
                    seen.insert(r.clone(), ());
                    items.push(r);
                }
            }
        }
        i += 1;
    }
    items
}

/// Support helper used by hypersystem-style tables.
pub fn singletons(n: usize) -> Vec<SubsetVal> {
    (0..n).map(SubsetVal::singleton).collect()
}
