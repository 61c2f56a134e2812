//! Constructions of new systems: symmetrization, layered extensions,
//! truncation, direct sums and convolution (polynomial and matrix) systems.

use std::collections::HashMap;

use crate::algebra::{tabulate, Algebra};
use crate::carrier::{ElementId, SubsetVal};
use crate::error::{Error, Result};
use crate::families::{fmt_q, Q};
use crate::systems::bipotent_witness;
use crate::table::{HyperTable, SurpassSpec, SystemTable};

/// Symmetrized triple `𝒜 × 𝒜`: pointwise addition, twist product, switch
/// negation, `𝒯 = (𝒯 × {𝟘}) ∪ ({𝟘} × 𝒯)` and `⪯_∘`.
pub fn symmetrize(a: &SystemTable) -> SystemTable {
    let n = a.n();
    let id = |x: ElementId, y: ElementId| x * n + y;
    let m = n * n;
    let twist = |p: ElementId, q: ElementId| -> Option<ElementId> {
        let (a0, a1, b0, b1) = (p / n, p % n, q / n, q % n);
        let x = a.add(a.mul(a0, b0)?, a.mul(a1, b1)?)?;
        let y = a.add(a.mul(a0, b1)?, a.mul(a1, b0)?)?;
        Some(id(x, y))
    };
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            add.push(a.add(p / n, q / n).zip(a.add(p % n, q % n)).map(|(x, y)| id(x, y)));
            mul.push(twist(p, q));
        }
    }
    let mut s = SystemTable {
        name: format!("sym({})", a.name),
        labels: (0..m)
            .map(|p| format!("({},{})", a.labels[p / n], a.labels[p % n]))
            .collect(),
        zero: id(a.zero, a.zero),
        one: a.one.map(|u| id(u, a.zero)),
        tangible: (0..m)
            .map(|p| {
                let (x, y) = (p / n, p % n);
                (a.is_tangible(x) && y == a.zero) || (x == a.zero && a.is_tangible(y))
            })
            .collect(),
        neg: (0..m).map(|p| id(p % n, p / n)).collect(),
        add,
        mul,
        surpass: SurpassSpec::Circ,
        leq: Vec::new(),
        sets: None,
        window: a.window,
    };
    s.materialize_leq().expect("circ relation is always in range");
    s
}

/// Symmetrization with the case-split addition for a bipotent `𝒯`:
/// carrier `{(𝟘,𝟘)} ∪ 𝒯_𝒜̂ ∪ 𝒯_𝒜̂°`.
pub fn symmetrize_bipotent(a: &SystemTable) -> Result<SystemTable> {
    let t = a.tangibles();
    for &x in &t {
        for &y in &t {
            if let Some(c) = a.add(x, y) {
                if c != x && c != y {
                    return Err(Error::Precondition(format!(
                        "tangibles are not a bipotent subsemigroup: {} + {} = {}",
                        a.labels[x], a.labels[y], a.labels[c]
                    )));
                }
            }
        }
    }
    // element ids: 0 zero, then (a,0), (0,a), (a,a) for each tangible
    let k = t.len();
    let z = a.zero;
    let pair = |e: ElementId| -> (ElementId, ElementId) {
        match e {
            0 => (z, z),
            e if e <= k => (t[e - 1], z),
            e if e <= 2 * k => (z, t[e - 1 - k]),
            e => (t[e - 1 - 2 * k], t[e - 1 - 2 * k]),
        }
    };
    let m = 1 + 3 * k;
    let lookup: HashMap<(ElementId, ElementId), ElementId> = (0..m).map(|e| (pair(e), e)).collect();
    let value = |e: ElementId| -> Option<ElementId> {
        let (x, y) = pair(e);
        if e == 0 {
            None
        } else if x == z {
            Some(y)
        } else {
            Some(x)
        }
    };
    let add = |p: ElementId, q: ElementId| -> Option<ElementId> {
        let (Some(u), Some(v)) = (value(p), value(q)) else {
            return Some(if p == 0 { q } else { p });
        };
        if u != v {
            let s = a.add(u, v)?;
            return Some(if s == u { p } else { q });
        }
        if p == q {
            Some(p)
        } else {
            lookup.get(&(u, u)).copied()
        }
    };
    let mul = |p: ElementId, q: ElementId| -> Option<ElementId> {
        let ((a0, a1), (b0, b1)) = (pair(p), pair(q));
        let x = a.add(a.mul(a0, b0)?, a.mul(a1, b1)?)?;
        let y = a.add(a.mul(a0, b1)?, a.mul(a1, b0)?)?;
        lookup.get(&(x, y)).copied()
    };
    let neg = (0..m)
        .map(|e| {
            let (x, y) = pair(e);
            lookup[&(y, x)]
        })
        .collect();
    let mut s = SystemTable {
        name: format!("sym'({})", a.name),
        labels: (0..m)
            .map(|e| {
                let (x, y) = pair(e);
                format!("({},{})", a.labels[x], a.labels[y])
            })
            .collect(),
        zero: 0,
        one: a.one.and_then(|u| lookup.get(&(u, z)).copied()),
        tangible: (0..m).map(|e| e >= 1 && e <= 2 * k).collect(),
        neg,
        add: (0..m * m).map(|i| add(i / m, i % m)).collect(),
        mul: (0..m * m).map(|i| mul(i / m, i % m)).collect(),
        surpass: SurpassSpec::Circ,
        leq: Vec::new(),
        sets: None,
        window: a.window,
    };
    s.materialize_leq()?;
    Ok(s)
}

/// Element of a layered extension: the adjoined zero or `(ℓ, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LayerElem {
    Zero,
    At(ElementId, Q),
}

/// Layered extension `L ⋊ 𝒢` over the ordered group `(ℚ, +)`.
///
/// Layers are the elements of `layers`; when `L`'s zero is excluded, a layer
/// sum equal to zero collapses to the adjoined zero.
#[derive(Clone, Debug)]
pub struct Layered {
    pub l: SystemTable,
    pub layers: Vec<ElementId>,
}

impl Layered {
    /// Uses every element of `L` as a layer, or every nonzero one.
    pub fn new(l: SystemTable, drop_zero: bool) -> Self {
        let layers = (0..l.n()).filter(|&x| !(drop_zero && x == l.zero)).collect();
        Layered { l, layers }
    }

    fn has_layer(&self, x: ElementId) -> bool {
        self.layers.contains(&x)
    }

    fn make(&self, x: ElementId, g: Q) -> Option<LayerElem> {
        if self.has_layer(x) {
            Some(LayerElem::At(x, g))
        } else if x == self.l.zero {
            Some(LayerElem::Zero)
        } else {
            None
        }
    }

    pub fn window(&self, grades: &[Q]) -> Vec<LayerElem> {
        let mut v = vec![LayerElem::Zero];
        for g in grades {
            for &x in &self.layers {
                v.push(LayerElem::At(x, *g));
            }
        }
        v
    }

    pub fn table(&self, grades: &[Q]) -> SystemTable {
        tabulate(self, &self.window(grades), &self.name(), true)
    }
}

impl Algebra for Layered {
    type Elem = LayerElem;

    fn name(&self) -> String {
        format!("layered({})", self.l.name)
    }
    fn zero(&self) -> LayerElem {
        LayerElem::Zero
    }
    fn one(&self) -> Option<LayerElem> {
        self.l.one.and_then(|u| self.make(u, Q::from_integer(0)))
    }
    fn add(&self, a: &LayerElem, b: &LayerElem) -> Option<LayerElem> {
        match (a, b) {
            (LayerElem::Zero, _) => Some(b.clone()),
            (_, LayerElem::Zero) => Some(a.clone()),
            (LayerElem::At(x, g), LayerElem::At(y, h)) => {
                if g > h {
                    Some(a.clone())
                } else if g < h {
                    Some(b.clone())
                } else {
                    self.make(self.l.add(*x, *y)?, *g)
                }
            }
        }
    }
    fn neg(&self, a: &LayerElem) -> LayerElem {
        match a {
            LayerElem::Zero => LayerElem::Zero,
            LayerElem::At(x, g) => LayerElem::At(self.l.neg(*x), *g),
        }
    }
    fn mul(&self, a: &LayerElem, b: &LayerElem) -> Option<LayerElem> {
        match (a, b) {
            (LayerElem::Zero, _) | (_, LayerElem::Zero) => Some(LayerElem::Zero),
            (LayerElem::At(x, g), LayerElem::At(y, h)) => self.make(self.l.mul(*x, *y)?, g + h),
        }
    }
    fn is_tangible(&self, a: &LayerElem) -> bool {
        matches!(a, LayerElem::At(x, _) if self.l.is_tangible(*x))
    }
    fn surpasses(&self, a: &LayerElem, b: &LayerElem) -> bool {
        let z = self.l.zero;
        match (a, b) {
            (LayerElem::Zero, LayerElem::Zero) => true,
            (LayerElem::Zero, LayerElem::At(y, _)) => self.l.leq(z, *y),
            (LayerElem::At(..), LayerElem::Zero) => false,
            (LayerElem::At(x, g), LayerElem::At(y, h)) => {
                (g < h && self.l.leq(z, *y)) || (g == h && self.l.leq(*x, *y))
            }
        }
    }
    fn label(&self, a: &LayerElem) -> String {
        match a {
            LayerElem::Zero => "0".into(),
            LayerElem::At(x, g) => format!("{}@{}", self.l.labels[*x], fmt_q(g)),
        }
    }
}

/// Layered extension of a hyperfield: `ℋ' ⋊ 𝒢` where equal-grade sums of
/// opposite layers spill to every lower grade.
pub fn layered_hyper(h: &HyperTable, grades: &[Q], drop_zero: bool) -> Result<HyperTable> {
    let mut g: Vec<Q> = grades.to_vec();
    g.sort();
    g.dedup();
    let layers: Vec<ElementId> = (0..h.n()).filter(|&x| !(drop_zero && x == h.zero)).collect();
    // id 0 is the adjoined zero; then grade-major (ℓ, a)
    let k = layers.len();
    let n = 1 + k * g.len();
    let id = |li: usize, gi: usize| 1 + gi * k + li;
    let pos: HashMap<ElementId, usize> = layers.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let coords = |e: ElementId| ((e - 1) % k, (e - 1) / k);
    let mut labels = vec!["0".to_string()];
    for gv in &g {
        for &x in &layers {
            labels.push(format!("{}@{}", h.labels[x], fmt_q(gv)));
        }
    }
    let lift = |set: &SubsetVal, gi: usize| -> Vec<ElementId> {
        set.iter()
            .map(|x| match pos.get(&x) {
                Some(&li) => id(li, gi),
                None => 0,
            })
            .collect()
    };
    let mut add = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let v: Vec<ElementId> = if a == 0 || b == 0 {
                vec![a.max(b)]
            } else {
                let ((la, ga), (lb, gb)) = (coords(a), coords(b));
                if ga != gb {
                    vec![if ga > gb { a } else { b }]
                } else {
                    let (x, y) = (layers[la], layers[lb]);
                    let sum = h.add(x, y);
                    if h.neg[x] != y {
                        lift(sum, ga)
                    } else {
                        let mut v: Vec<ElementId> = sum
                            .iter()
                            .filter(|&c| c != h.zero)
                            .filter_map(|c| pos.get(&c).map(|&li| id(li, ga)))
                            .collect();
                        for gi in 0..ga {
                            v.extend((0..k).map(|li| id(li, gi)));
                        }
                        v.push(0);
                        v
                    }
                }
            };
            add.push(SubsetVal::from_iter_unchecked(v));
        }
    }
    let mul = h.mul.as_ref().map(|_| {
        (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                if a == 0 || b == 0 {
                    return Some(0);
                }
                let ((la, ga), (lb, gb)) = (coords(a), coords(b));
                let p = h.mul(layers[la], layers[lb])?;
                let s = g[ga] + g[gb];
                let gi = g.iter().position(|x| *x == s)?;
                Some(match pos.get(&p) {
                    Some(&li) => id(li, gi),
                    None => 0,
                })
            })
            .collect()
    });
    let zero_grade = g.iter().position(|x| *x == Q::from_integer(0));
    let one = match (h.one, zero_grade) {
        (Some(u), Some(gi)) => pos.get(&u).map(|&li| id(li, gi)),
        _ => None,
    };
    let neg = (0..n)
        .map(|e| {
            if e == 0 {
                0
            } else {
                let (li, gi) = coords(e);
                match pos.get(&h.neg[layers[li]]) {
                    Some(&lj) => id(lj, gi),
                    None => 0,
                }
            }
        })
        .collect();
    let t = HyperTable {
        name: format!("layered-hyper({})", h.name),
        labels,
        zero: 0,
        one,
        neg,
        add,
        mul,
    };
    t.validate()?;
    Ok(t)
}

/// `ℕ` truncated at `m`: sums and products clipped at `m`, identity
/// negation, `𝒯 = {1}`, `⪯_∘`.
pub fn truncate_naturals(m: usize) -> Result<SystemTable> {
    if m == 0 {
        return Err(Error::Domain("truncation level must be positive".into()));
    }
    let n = m + 1;
    let mut s = SystemTable {
        name: format!("N/{m}"),
        labels: (0..n).map(|i| i.to_string()).collect(),
        zero: 0,
        one: Some(1),
        tangible: (0..n).map(|i| i == 1).collect(),
        neg: (0..n).collect(),
        add: (0..n * n).map(|i| Some((i / n + i % n).min(m))).collect(),
        mul: (0..n * n).map(|i| Some((i / n * (i % n)).min(m))).collect(),
        surpass: SurpassSpec::Circ,
        leq: Vec::new(),
        sets: None,
        window: false,
    };
    s.materialize_leq()?;
    Ok(s)
}

/// Layered `ℕ ⋊ ℚ` on a window with `𝒯 = {1} × 𝒢` and one of two explicit
/// relations on equal grades:
/// variant 1: `k₁ = k₂ = 1` or `2 ≤ k₁ ≤ k₂`;
/// variant 2: `k₁ = k₂`, or `k₁ = 1` and `k₂ ≥ 4`.
pub fn semidirect_naturals(bound: usize, grades: &[Q], variant: u8) -> Result<SystemTable> {
    let rule: fn(usize, usize) -> bool = match variant {
        1 => |k1, k2| (k1 == 1 && k2 == 1) || (2 <= k1 && k1 <= k2),
        2 => |k1, k2| k1 == k2 || (k1 == 1 && k2 >= 4),
        _ => return Err(Error::Domain(format!("unknown variant {variant}"))),
    };
    let lay = Layered::new(naturals(bound), true);
    let elems = lay.window(grades);
    let mut s = tabulate(&lay, &elems, &format!("semidirect-n{variant}"), true);
    let mut pairs = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let ok = match (a, b) {
                (LayerElem::Zero, LayerElem::Zero) => true,
                (LayerElem::At(k1, g1), LayerElem::At(k2, g2)) => g1 == g2 && rule(*k1, *k2),
                _ => false,
            };
            if ok {
                pairs.push((i, j));
            }
        }
    }
    s.surpass = SurpassSpec::Explicit(pairs);
    s.materialize_leq()?;
    Ok(s)
}

/// Window `{0, …, bound}` of `ℕ` with identity negation and `𝒯 = {1}`.
pub fn naturals(bound: usize) -> SystemTable {
    let n = bound + 1;
    let fit = |x: usize| (x <= bound).then_some(x);
    let mut s = SystemTable {
        name: format!("N<={bound}"),
        labels: (0..n).map(|i| i.to_string()).collect(),
        zero: 0,
        one: (bound >= 1).then_some(1),
        tangible: (0..n).map(|i| i == 1).collect(),
        neg: (0..n).collect(),
        add: (0..n * n).map(|i| fit(i / n + i % n)).collect(),
        mul: (0..n * n).map(|i| fit(i / n * (i % n))).collect(),
        surpass: SurpassSpec::Circ,
        leq: Vec::new(),
        sets: None,
        window: true,
    };
    s.materialize_leq().expect("circ relation is always in range");
    s
}

/// Choice of tangibles for a direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumOption {
    /// Diagonal copies of a common `𝒯` acting diagonally.
    Diagonal = 1,
    /// Disjoint union of the `𝒯_ℓ` acting on their own component.
    Disjoint = 2,
    /// Tuples over the `(𝒯_ℓ)₀`, acting componentwise.
    Product = 3,
}

impl SumOption {
    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(SumOption::Diagonal),
            2 => Ok(SumOption::Disjoint),
            3 => Ok(SumOption::Product),
            _ => Err(Error::Domain(format!("direct sum option must be 1, 2 or 3, got {k}"))),
        }
    }
}

/// Direct sum with componentwise addition, negation, product and `⪯`.
pub fn direct_sum(parts: &[SystemTable], option: SumOption) -> Result<SystemTable> {
    let sizes: Vec<usize> = parts.iter().map(|p| p.n()).collect();
    let m: usize = sizes.iter().product();
    if m > 4096 {
        return Err(Error::Resource(format!("direct sum has {m} elements")));
    }
    let decode = |mut e: ElementId| -> Vec<ElementId> {
        let mut v = vec![0; parts.len()];
        for i in (0..parts.len()).rev() {
            v[i] = e % sizes[i];
            e /= sizes[i];
        }
        v
    };
    let encode = |v: &[ElementId]| v.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x);
    let comps: Vec<Vec<ElementId>> = (0..m).map(decode).collect();
    let zip = |a: ElementId, b: ElementId, f: &dyn Fn(&SystemTable, ElementId, ElementId) -> Option<ElementId>| {
        let v: Option<Vec<ElementId>> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| f(p, comps[a][i], comps[b][i]))
            .collect();
        v.map(|v| encode(&v))
    };
    let tangible: Vec<bool> = comps
        .iter()
        .map(|c| {
            let nz: Vec<usize> = (0..parts.len()).filter(|&i| c[i] != parts[i].zero).collect();
            match option {
                SumOption::Diagonal => {
                    !parts.is_empty()
                        && parts
                            .iter()
                            .enumerate()
                            .all(|(i, p)| p.is_tangible(c[i]) && p.labels[c[i]] == parts[0].labels[c[0]])
                }
                SumOption::Disjoint => nz.len() == 1 && parts[nz[0]].is_tangible(c[nz[0]]),
                SumOption::Product => !nz.is_empty() && nz.iter().all(|&i| parts[i].is_tangible(c[i])),
            }
        })
        .collect();
    let zero = encode(&parts.iter().map(|p| p.zero).collect::<Vec<_>>());
    let one = parts
        .iter()
        .map(|p| p.one)
        .collect::<Option<Vec<_>>>()
        .map(|v| encode(&v));
    let mut leq = vec![false; m * m];
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if parts.iter().enumerate().all(|(i, p)| p.leq(comps[a][i], comps[b][i])) {
                leq[a * m + b] = true;
                pairs.push((a, b));
            }
        }
    }
    let labels = comps
        .iter()
        .map(|c| {
            let inner: Vec<&str> = parts.iter().enumerate().map(|(i, p)| p.labels[c[i]].as_str()).collect();
            format!("[{}]", inner.join(";"))
        })
        .collect();
    Ok(SystemTable {
        name: format!(
            "sum{}({})",
            option as u8,
            parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(",")
        ),
        labels,
        zero,
        one,
        tangible,
        neg: (0..m)
            .map(|a| {
                encode(
                    &parts
                        .iter()
                        .enumerate()
                        .map(|(i, p)| p.neg(comps[a][i]))
                        .collect::<Vec<_>>(),
                )
            })
            .collect(),
        add: (0..m * m).map(|i| zip(i / m, i % m, &|p, x, y| p.add(x, y))).collect(),
        mul: (0..m * m).map(|i| zip(i / m, i % m, &|p, x, y| p.mul(x, y))).collect(),
        surpass: SurpassSpec::Explicit(pairs),
        leq,
        sets: None,
        window: parts.iter().any(|p| p.window),
    })
}

/// Largest carrier tabulated by the convolution systems.
pub const TABULATE_LIMIT: usize = 4096;

/// Polynomial system over `A` in `nvars` variables, truncated at total degree
/// `degcap`. Elements are coefficient vectors indexed by [`PolySystem::monomials`].
#[derive(Clone, Debug)]
pub struct PolySystem {
    pub base: SystemTable,
    pub nvars: usize,
    pub degcap: usize,
    monomials: Vec<Vec<usize>>,
}

impl PolySystem {
    pub fn new(base: SystemTable, nvars: usize, degcap: usize) -> Self {
        let mut monomials = Vec::new();
        for d in 0..=degcap {
            let mut cur = vec![0; nvars];
            exponents(nvars, d, 0, &mut cur, &mut monomials);
        }
        PolySystem {
            base,
            nvars,
            degcap,
            monomials,
        }
    }

    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    /// Monomial `c·λ^e`.
    pub fn monomial(&self, c: ElementId, e: &[usize]) -> Option<Vec<ElementId>> {
        let i = self.monomials.iter().position(|m| m == e)?;
        let mut v = vec![self.base.zero; self.monomials.len()];
        v[i] = c;
        Some(v)
    }

    /// Convolution product; overflow past `degcap` is an error.
    pub fn try_mul(&self, f: &[ElementId], g: &[ElementId]) -> Result<Vec<ElementId>> {
        let b = &self.base;
        let mut out = vec![b.zero; self.monomials.len()];
        for (i, &x) in f.iter().enumerate() {
            if x == b.zero {
                continue;
            }
            for (j, &y) in g.iter().enumerate() {
                if y == b.zero {
                    continue;
                }
                let e: Vec<usize> = self.monomials[i]
                    .iter()
                    .zip(&self.monomials[j])
                    .map(|(a, c)| a + c)
                    .collect();
                let k = self
                    .monomials
                    .iter()
                    .position(|m| *m == e)
                    .ok_or_else(|| Error::Domain(format!("product exceeds degree cap {}", self.degcap)))?;
                let p = b
                    .mul(x, y)
                    .ok_or_else(|| Error::Domain("coefficient product leaves the window".into()))?;
                out[k] = b
                    .add(out[k], p)
                    .ok_or_else(|| Error::Domain("coefficient sum leaves the window".into()))?;
            }
        }
        Ok(out)
    }

    pub fn format(&self, f: &[ElementId]) -> String {
        Algebra::label(self, &f.to_vec())
    }

    /// Every coefficient vector, when the carrier is small enough.
    pub fn table(&self) -> Result<SystemTable> {
        let elems = all_vectors(self.base.n(), self.monomials.len())?;
        Ok(tabulate(self, &elems, &self.name(), true))
    }
}

fn exponents(nvars: usize, left: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i + 1 >= nvars {
        if nvars > 0 {
            cur[i] = left;
            out.push(cur.clone());
        } else if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for k in (0..=left).rev() {
        cur[i] = k;
        exponents(nvars, left - k, i + 1, cur, out);
    }
    cur[i] = 0;
}

fn all_vectors(base: usize, len: usize) -> Result<Vec<Vec<ElementId>>> {
    let total = (base as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if total > TABULATE_LIMIT as u128 {
        return Err(Error::Resource(format!(
            "{total} elements exceed the tabulation limit {TABULATE_LIMIT}"
        )));
    }
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..base).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

impl Algebra for PolySystem {
    type Elem = Vec<ElementId>;

    fn name(&self) -> String {
        format!("{}[x{}]<={}", self.base.name, self.nvars, self.degcap)
    }
    fn zero(&self) -> Vec<ElementId> {
        vec![self.base.zero; self.monomials.len()]
    }
    fn one(&self) -> Option<Vec<ElementId>> {
        self.monomial(self.base.one?, &vec![0; self.nvars])
    }
    fn add(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> Option<Vec<ElementId>> {
        f.iter().zip(g).map(|(&x, &y)| self.base.add(x, y)).collect()
    }
    fn neg(&self, f: &Vec<ElementId>) -> Vec<ElementId> {
        f.iter().map(|&x| self.base.neg(x)).collect()
    }
    fn mul(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> Option<Vec<ElementId>> {
        self.try_mul(f, g).ok()
    }
    fn is_tangible(&self, f: &Vec<ElementId>) -> bool {
        let nz: Vec<&ElementId> = f.iter().filter(|&&x| x != self.base.zero).collect();
        nz.len() == 1 && self.base.is_tangible(*nz[0])
    }
    fn surpasses(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> bool {
        f.iter().zip(g).all(|(&x, &y)| self.base.leq(x, y))
    }
    fn label(&self, f: &Vec<ElementId>) -> String {
        let terms: Vec<String> = f
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != self.base.zero)
            .map(|(i, &c)| {
                let mono: Vec<String> = self.monomials[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
                    .collect();
                if mono.is_empty() {
                    self.base.labels[c].clone()
                } else {
                    format!("{}*{}", self.base.labels[c], mono.join("*"))
                }
            })
            .collect();
        if terms.is_empty() {
            self.base.labels[self.base.zero].clone()
        } else {
            terms.join(" + ")
        }
    }
}

/// Matrix system `M_n(A)`: entrywise addition and negation, usual product,
/// tangibles with exactly one nonzero entry, which is tangible. With
/// `monomial` set, tangibles are instead the nonzero monomial matrices with
/// tangible entries.
#[derive(Clone, Debug)]
pub struct MatrixSystem {
    pub base: SystemTable,
    pub n: usize,
    pub monomial: bool,
}

impl MatrixSystem {
    pub fn new(base: SystemTable, n: usize) -> Self {
        MatrixSystem {
            base,
            n,
            monomial: false,
        }
    }

    pub fn identity(&self) -> Option<Vec<ElementId>> {
        let u = self.base.one?;
        Some(
            (0..self.n * self.n)
                .map(|i| if i / self.n == i % self.n { u } else { self.base.zero })
                .collect(),
        )
    }

    /// Matrix with a single entry `c` at `(i, j)`.
    pub fn unit_entry(&self, i: usize, j: usize, c: ElementId) -> Vec<ElementId> {
        let mut v = vec![self.base.zero; self.n * self.n];
        v[i * self.n + j] = c;
        v
    }

    pub fn all(&self) -> Result<Vec<Vec<ElementId>>> {
        all_vectors(self.base.n(), self.n * self.n)
    }

    pub fn table(&self) -> Result<SystemTable> {
        Ok(tabulate(self, &self.all()?, &self.name(), true))
    }

    /// `a ∈ 𝒯` and `c₁ ≠ c₂` with `a c₁ = a c₂`, scanning the whole carrier.
    pub fn noncancellative_witness(&self) -> Result<Option<[Vec<ElementId>; 3]>> {
        let all = self.all()?;
        for a in all.iter().filter(|a| self.is_tangible(a)) {
            let mut seen: HashMap<Vec<ElementId>, &Vec<ElementId>> = HashMap::new();
            for c in &all {
                if let Some(p) = self.mul(a, c) {
                    if let Some(prev) = seen.insert(p, c) {
                        return Ok(Some([a.clone(), prev.clone(), c.clone()]));
                    }
                }
            }
        }
        Ok(None)
    }
}

impl Algebra for MatrixSystem {
    type Elem = Vec<ElementId>;

    fn name(&self) -> String {
        format!("M{}({})", self.n, self.base.name)
    }
    fn zero(&self) -> Vec<ElementId> {
        vec![self.base.zero; self.n * self.n]
    }
    fn one(&self) -> Option<Vec<ElementId>> {
        self.identity()
    }
    fn add(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> Option<Vec<ElementId>> {
        f.iter().zip(g).map(|(&x, &y)| self.base.add(x, y)).collect()
    }
    fn neg(&self, f: &Vec<ElementId>) -> Vec<ElementId> {
        f.iter().map(|&x| self.base.neg(x)).collect()
    }
    fn mul(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> Option<Vec<ElementId>> {
        let n = self.n;
        let b = &self.base;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = b.zero;
                for k in 0..n {
                    acc = b.add(acc, b.mul(f[i * n + k], g[k * n + j])?)?;
                }
                out.push(acc);
            }
        }
        Some(out)
    }
    fn is_tangible(&self, f: &Vec<ElementId>) -> bool {
        let n = self.n;
        let nz: Vec<usize> = (0..n * n).filter(|&i| f[i] != self.base.zero).collect();
        if nz.is_empty() || !nz.iter().all(|&i| self.base.is_tangible(f[i])) {
            return false;
        }
        if !self.monomial {
            return nz.len() == 1;
        }
        let rows_ok = (0..n).all(|r| nz.iter().filter(|&&i| i / n == r).count() <= 1);
        let cols_ok = (0..n).all(|c| nz.iter().filter(|&&i| i % n == c).count() <= 1);
        rows_ok && cols_ok
    }
    fn surpasses(&self, f: &Vec<ElementId>, g: &Vec<ElementId>) -> bool {
        f.iter().zip(g).all(|(&x, &y)| self.base.leq(x, y))
    }
    fn label(&self, f: &Vec<ElementId>) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.base.labels[f[i * self.n + j]].as_str())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("[{}]", rows.join(";"))
    }
}

/// Layering of a second-kind `(−)`-bipotent triple `A` by `L`, on canonical
/// representatives: `(ℓ, (−)b) ≡ ((−)ℓ, b)` and `((𝟙 (−) 𝟙)ℓ, b) ≡ (ℓ, b°)`.
/// Grades are the classes `𝒯/(±)`, represented by the least id.
pub fn layered_second_kind(l: &SystemTable, a: &SystemTable) -> Result<SystemTable> {
    if let Some((x, y)) = bipotent_witness(a) {
        return Err(Error::Precondition(format!(
            "not (-)-bipotent: {} + {}",
            a.labels[x], a.labels[y]
        )));
    }
    if crate::systems::kind(a).0 != crate::systems::Kind::Second {
        return Err(Error::Precondition("grade triple must be of the second kind".into()));
    }
    let one = l
        .one
        .ok_or_else(|| Error::Precondition("layer triple needs a unit".into()))?;
    let e = l
        .circ(one)
        .ok_or_else(|| Error::Precondition("1 (-) 1 undefined in the layers".into()))?;
    let reps: Vec<ElementId> = a.tangibles().into_iter().filter(|&x| x <= a.neg(x)).collect();
    let layers: Vec<ElementId> = (0..l.n()).filter(|&x| x != l.zero).collect();
    let k = layers.len();
    let m = 1 + k * reps.len();
    let id = |li: usize, ri: usize| 1 + ri * k + li;
    let coords = |x: ElementId| ((x - 1) % k, (x - 1) / k);
    let lpos = |x: ElementId| layers.iter().position(|&y| y == x);
    let make = |ell: ElementId, ri: usize| -> Option<ElementId> {
        if ell == l.zero {
            Some(0)
        } else {
            lpos(ell).map(|li| id(li, ri))
        }
    };
    // canonical form of (ℓ, b) for b ∈ 𝒯 ∪ 𝒯°
    let canon = |ell: ElementId, b: ElementId| -> Option<ElementId> {
        if b == a.zero {
            return Some(0);
        }
        for (ri, &r) in reps.iter().enumerate() {
            if b == r {
                return make(ell, ri);
            }
            if b == a.neg(r) {
                return make(l.neg(ell), ri);
            }
            if a.circ(r) == Some(b) {
                return make(l.mul(e, ell)?, ri);
            }
        }
        None
    };
    let add = |x: ElementId, y: ElementId| -> Option<ElementId> {
        if x == 0 || y == 0 {
            return Some(x.max(y));
        }
        let ((lx, rx), (ly, ry)) = (coords(x), coords(y));
        if rx == ry {
            return make(l.add(layers[lx], layers[ly])?, rx);
        }
        let s = a.add(reps[rx], reps[ry])?;
        if s == reps[rx] {
            Some(x)
        } else {
            Some(y)
        }
    };
    let mul = |x: ElementId, y: ElementId| -> Option<ElementId> {
        if x == 0 || y == 0 {
            return Some(0);
        }
        let ((lx, rx), (ly, ry)) = (coords(x), coords(y));
        canon(l.mul(layers[lx], layers[ly])?, a.mul(reps[rx], reps[ry])?)
    };
    let dominates = |rx: usize, ry: usize| a.add(reps[rx], reps[ry]) == Some(reps[ry]) && rx != ry;
    let mut pairs = Vec::new();
    for x in 0..m {
        for y in 0..m {
            let ok = match (x, y) {
                (0, 0) => true,
                (0, y) => l.leq(l.zero, layers[coords(y).0]),
                (_, 0) => false,
                (x, y) => {
                    let ((lx, rx), (ly, ry)) = (coords(x), coords(y));
                    (dominates(rx, ry) && l.leq(l.zero, layers[ly])) || (rx == ry && l.leq(layers[lx], layers[ly]))
                }
            };
            if ok {
                pairs.push((x, y));
            }
        }
    }
    let mut labels = vec!["0".to_string()];
    for &r in &reps {
        for &x in &layers {
            labels.push(format!("{}@{}", l.labels[x], a.labels[r]));
        }
    }
    let mut s = SystemTable {
        name: format!("layered({},{})", l.name, a.name),
        labels,
        zero: 0,
        one: a.one.and_then(|u| canon(one, u)),
        tangible: (0..m).map(|x| x != 0 && l.is_tangible(layers[coords(x).0])).collect(),
        neg: (0..m)
            .map(|x| {
                if x == 0 {
                    0
                } else {
                    make(l.neg(layers[coords(x).0]), coords(x).1).unwrap_or(0)
                }
            })
            .collect(),
        add: (0..m * m).map(|i| add(i / m, i % m)).collect(),
        mul: (0..m * m).map(|i| mul(i / m, i % m)).collect(),
        surpass: SurpassSpec::Explicit(pairs),
        leq: Vec::new(),
        sets: None,
        window: l.window || a.window,
    };
    s.materialize_leq()?;
    Ok(s)
}

/// Image of `(ℓ, b)` in `L ⋊ 𝒯₀` under `(ℓ, m·b_T) ↦ (m·ℓ, b_T)` for a
/// first-kind bipotent `A`; `None` when `m·ℓ` leaves the layer table.
pub fn layer_quotient_image(
    l: &SystemTable,
    a: &SystemTable,
    ell: ElementId,
    b: ElementId,
) -> Option<(ElementId, ElementId)> {
    if b == a.zero {
        return Some((l.zero, a.zero));
    }
    let p = crate::systems::presentation_unchecked(a, b).ok()?;
    let (m, base) = match p {
        crate::systems::Presentation::Multiple { m, base } => (m, base),
        crate::systems::Presentation::Circ { base } => (2, base),
    };
    Some((l.multiple(m, ell)?, base))
}
