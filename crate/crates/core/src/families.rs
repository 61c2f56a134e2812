//! Concrete structures: finite hyperfields given by tables and the symbolic
//! families (supertropical, symmetrized max-plus, phase cones, triangle
//! intervals, ℕ̂, integers) with their sample windows.

use num_rational::Ratio;
use num_traits::Zero;

use crate::algebra::{additive_closure, tabulate, Algebra};
use crate::carrier::{ElementId, SubsetVal};
use crate::table::{relation_for, HyperTable, SurpassSpec, SystemTable};

/// Exact rational scalar.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integer grades `lo..=hi`.
pub fn grades(lo: i64, hi: i64) -> Vec<Q> {
    (lo..=hi).map(q).collect()
}

fn hyper_from_fn(
    name: &str,
    labels: Vec<String>,
    zero: ElementId,
    one: Option<ElementId>,
    neg: Vec<ElementId>,
    add: impl Fn(ElementId, ElementId) -> Vec<ElementId>,
    mul: Option<&dyn Fn(ElementId, ElementId) -> Option<ElementId>>,
) -> HyperTable {
    let n = labels.len();
    let mut a = Vec::with_capacity(n * n);
    let mut m = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            a.push(SubsetVal::from_iter_unchecked(add(x, y)));
            if let Some(f) = mul {
                m.push(f(x, y));
            }
        }
    }
    HyperTable {
        name: name.into(),
        labels,
        zero,
        one,
        neg,
        add: a,
        mul: mul.map(|_| m),
    }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Krasner hyperfield `{0, 1}` with `1 ⊞ 1 = {0, 1}`.
pub fn krasner() -> HyperTable {
    hyper_from_fn(
        "krasner",
        strs(&["0", "1"]),
        0,
        Some(1),
        vec![0, 1],
        |a, b| match (a, b) {
            (0, x) | (x, 0) => vec![x],
            _ => vec![0, 1],
        },
        Some(&|a, b| Some(a * b)),
    )
}

/// Hyperfield of signs `{0, 1, −1}` with `1 ⊞ −1 = {0, 1, −1}`.
pub fn signs() -> HyperTable {
    // ids: 0 ↦ 0, 1 ↦ 1, 2 ↦ −1
    let sign = |a: ElementId| -> i32 { [0, 1, -1][a] };
    let id = |s: i32| -> ElementId {
        match s {
            0 => 0,
            1 => 1,
            _ => 2,
        }
    };
    hyper_from_fn(
        "signs",
        strs(&["0", "1", "-1"]),
        0,
        Some(1),
        vec![0, 2, 1],
        |a, b| match (a, b) {
            (0, x) | (x, 0) => vec![x],
            (x, y) if x == y => vec![x],
            _ => vec![0, 1, 2],
        },
        Some(&|a, b| Some(id(sign(a) * sign(b)))),
    )
}

/// The multigroup `M = {0, 1, 2}` with `1 ⊞ 1 = {2}`, `1 ⊞ 2 = {0, 1}`,
/// `2 ⊞ 2 = {1, 2}` and `−1 = 2`.
pub fn viro_multigroup() -> HyperTable {
    hyper_from_fn(
        "viro-multigroup",
        strs(&["0", "1", "2"]),
        0,
        None,
        vec![0, 2, 1],
        |a, b| match (a.min(b), a.max(b)) {
            (0, x) => vec![x],
            (1, 1) => vec![2],
            (1, 2) => vec![0, 1],
            _ => vec![1, 2],
        },
        None,
    )
}

/// Weak phase hyperfield restricted to the `k`-th roots of unity (`k` even):
/// closed arcs, and `a ⊞ (−a)` is everything.
pub fn weak_phase(k: usize) -> HyperTable {
    assert!(k >= 2 && k.is_multiple_of(2), "weak phase grid needs an even k");
    // id 0 is zero; id 1 + j is the root at angle j/k
    let n = k + 1;
    let mut labels = vec!["0".to_string()];
    labels.extend((0..k).map(|j| format!("@{}", fmt_q(&qf(j as i64, k as i64)))));
    let neg = (0..n)
        .map(|a| if a == 0 { 0 } else { 1 + (a - 1 + k / 2) % k })
        .collect();
    hyper_from_fn(
        &format!("weak-phase-{k}"),
        labels,
        0,
        Some(1),
        neg,
        |a, b| {
            if a == 0 || b == 0 {
                return vec![a.max(b)];
            }
            let (i, j) = (a - 1, b - 1);
            if i == j {
                return vec![a];
            }
            let d = (j + k - i) % k;
            if d == k / 2 {
                return (0..n).collect();
            }
            let (start, len) = if d < k / 2 { (i, d) } else { (j, k - d) };
            (0..=len).map(|t| 1 + (start + t) % k).collect()
        },
        Some(&|a, b| Some(if a == 0 || b == 0 { 0 } else { 1 + (a - 1 + b - 1) % k })),
    )
}

/// Tropical hyperfield on a finite chain of grades (max convention):
/// `a ⊞ b = {max}` for `a ≠ b`, `a ⊞ a = [−∞, a]`.
pub fn tropical_hyperfield(gr: &[Q]) -> HyperTable {
    let mut g: Vec<Q> = gr.to_vec();
    g.sort();
    g.dedup();
    let n = g.len() + 1;
    let mut labels = vec!["-inf".to_string()];
    labels.extend(g.iter().map(fmt_q));
    let one = g.iter().position(|x| x.is_zero()).map(|i| i + 1);
    let gg = g.clone();
    let mul = move |a: ElementId, b: ElementId| -> Option<ElementId> {
        if a == 0 || b == 0 {
            return Some(0);
        }
        let s = gg[a - 1] + gg[b - 1];
        gg.iter().position(|x| *x == s).map(|i| i + 1)
    };
    hyper_from_fn(
        "tropical-hyperfield",
        labels,
        0,
        one,
        (0..n).collect(),
        |a, b| {
            if a == b {
                (0..=a).collect()
            } else {
                vec![a.max(b)]
            }
        },
        Some(&mul),
    )
}

/// Builds a finite system table from explicit closures over ids.
#[allow(clippy::too_many_arguments)]
pub fn system_from_fn(
    name: &str,
    labels: Vec<String>,
    zero: ElementId,
    one: Option<ElementId>,
    tangible: Vec<ElementId>,
    neg: Vec<ElementId>,
    add: impl Fn(ElementId, ElementId) -> Option<ElementId>,
    mul: impl Fn(ElementId, ElementId) -> Option<ElementId>,
    surpass: SurpassSpec,
) -> SystemTable {
    let n = labels.len();
    let mut t = vec![false; n];
    for a in tangible {
        t[a] = true;
    }
    let mut s = SystemTable {
        name: name.into(),
        labels,
        zero,
        one,
        tangible: t,
        neg,
        add: (0..n * n).map(|i| add(i / n, i % n)).collect(),
        mul: (0..n * n).map(|i| mul(i / n, i % n)).collect(),
        surpass,
        leq: Vec::new(),
        sets: None,
        window: false,
    };
    s.leq = relation_for(&s, &s.surpass).expect("explicit fixtures are in range");
    s
}

/// Sign semiring `L = {0, 1, −1, ∞}` with `1 + (−1) = ∞`.
pub fn sign_semiring() -> SystemTable {
    // ids: 0, 1, 2 = −1, 3 = ∞
    let sign = |a: ElementId| -> i32 { [0, 1, -1, 2][a] };
    system_from_fn(
        "sign-semiring",
        strs(&["0", "1", "-1", "inf"]),
        0,
        Some(1),
        vec![1, 2],
        vec![0, 2, 1, 3],
        |a, b| {
            Some(match (a, b) {
                (0, x) | (x, 0) => x,
                (x, y) if x == y => x,
                _ => 3,
            })
        },
        |a, b| {
            Some(match (sign(a), sign(b)) {
                (0, _) | (_, 0) => 0,
                (2, _) | (_, 2) => 3,
                (x, y) => {
                    if x * y == 1 {
                        1
                    } else {
                        2
                    }
                }
            })
        },
        SurpassSpec::Circ,
    )
}

/// Boolean semiring `{0, 1}` with identity negation and `𝒯 = {1}`.
pub fn boolean() -> SystemTable {
    system_from_fn(
        "boolean",
        strs(&["0", "1"]),
        0,
        Some(1),
        vec![1],
        vec![0, 1],
        |a, b| Some(a | b),
        |a, b| Some(a & b),
        SurpassSpec::Circ,
    )
}

/// Characteristic triple of the first kind: `{0, 1, 1°}` with `1 + 1 = 1°`.
pub fn characteristic_triple() -> SystemTable {
    system_from_fn(
        "characteristic-triple",
        strs(&["0", "1", "1o"]),
        0,
        Some(1),
        vec![1],
        vec![0, 1, 2],
        |a, b| {
            Some(match (a, b) {
                (0, x) | (x, 0) => x,
                _ => 2,
            })
        },
        |a, b| Some(if a == 0 || b == 0 { 0 } else { a.max(b) }),
        SurpassSpec::Circ,
    )
}

/// Supertropical semiring over `(ℚ, +)`: tangibles, ghosts and `−∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum St {
    Zero,
    Tan(Q),
    Ghost(Q),
}

impl St {
    pub fn value(&self) -> Option<Q> {
        match self {
            St::Zero => None,
            St::Tan(v) | St::Ghost(v) => Some(*v),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Supertropical;

impl Supertropical {
    pub fn window(grades: &[Q]) -> Vec<St> {
        let mut v = vec![St::Zero];
        v.extend(grades.iter().map(|g| St::Tan(*g)));
        v.extend(grades.iter().map(|g| St::Ghost(*g)));
        v
    }

    pub fn table(grades: &[Q]) -> SystemTable {
        tabulate(&Supertropical, &Self::window(grades), "supertropical", true)
    }
}

impl Algebra for Supertropical {
    type Elem = St;

    fn name(&self) -> String {
        "supertropical".into()
    }
    fn zero(&self) -> St {
        St::Zero
    }
    fn one(&self) -> Option<St> {
        Some(St::Tan(q(0)))
    }
    fn add(&self, a: &St, b: &St) -> Option<St> {
        Some(match (a.value(), b.value()) {
            (None, _) => b.clone(),
            (_, None) => a.clone(),
            (Some(x), Some(y)) if x > y => a.clone(),
            (Some(x), Some(y)) if x < y => b.clone(),
            (Some(x), _) => St::Ghost(x),
        })
    }
    fn neg(&self, a: &St) -> St {
        a.clone()
    }
    fn mul(&self, a: &St, b: &St) -> Option<St> {
        Some(match (a, b) {
            (St::Zero, _) | (_, St::Zero) => St::Zero,
            (St::Tan(x), St::Tan(y)) => St::Tan(x + y),
            _ => St::Ghost(a.value().unwrap() + b.value().unwrap()),
        })
    }
    fn is_tangible(&self, a: &St) -> bool {
        matches!(a, St::Tan(_))
    }
    fn surpasses(&self, a: &St, b: &St) -> bool {
        a == b
            || match b {
                St::Ghost(w) => a.value().is_none_or(|v| v <= *w),
                _ => false,
            }
    }
    fn label(&self, a: &St) -> String {
        match a {
            St::Zero => "-inf".into(),
            St::Tan(v) => fmt_q(v),
            St::Ghost(v) => format!("{}v", fmt_q(v)),
        }
    }
    fn preorder_leq(&self, a: &St, b: &St) -> Option<bool> {
        Some(match (a.value(), b.value()) {
            (None, _) => true,
            (_, None) => false,
            (Some(x), Some(y)) => x < y || (x == y && (matches!(a, St::Tan(_)) || matches!(b, St::Ghost(_)))),
        })
    }
    fn cancellative(&self) -> Option<bool> {
        Some(true)
    }
    fn bipotent(&self) -> Option<bool> {
        Some(true)
    }
}

/// Symmetrized max-plus semiring (bipotent variant), also the signed tropical
/// system: `Pos(a) = (a, −∞)`, `Neg(a) = (−∞, a)`, `Bal(a) = (a, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sm {
    Zero,
    Pos(Q),
    Neg(Q),
    Bal(Q),
}

impl Sm {
    pub fn value(&self) -> Option<Q> {
        match self {
            Sm::Zero => None,
            Sm::Pos(v) | Sm::Neg(v) | Sm::Bal(v) => Some(*v),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SymMaxPlus;

impl SymMaxPlus {
    pub fn window(grades: &[Q]) -> Vec<Sm> {
        let mut v = vec![Sm::Zero];
        v.extend(grades.iter().map(|g| Sm::Pos(*g)));
        v.extend(grades.iter().map(|g| Sm::Neg(*g)));
        v.extend(grades.iter().map(|g| Sm::Bal(*g)));
        v
    }

    pub fn table(grades: &[Q]) -> SystemTable {
        tabulate(&SymMaxPlus, &Self::window(grades), "symmetrized-maxplus", true)
    }
}

impl Algebra for SymMaxPlus {
    type Elem = Sm;

    fn name(&self) -> String {
        "symmetrized-maxplus".into()
    }
    fn zero(&self) -> Sm {
        Sm::Zero
    }
    fn one(&self) -> Option<Sm> {
        Some(Sm::Pos(q(0)))
    }
    fn add(&self, a: &Sm, b: &Sm) -> Option<Sm> {
        Some(match (a.value(), b.value()) {
            (None, _) => b.clone(),
            (_, None) => a.clone(),
            (Some(x), Some(y)) if x > y => a.clone(),
            (Some(x), Some(y)) if x < y => b.clone(),
            (Some(x), _) => {
                if a == b {
                    a.clone()
                } else {
                    Sm::Bal(x)
                }
            }
        })
    }
    fn neg(&self, a: &Sm) -> Sm {
        match a {
            Sm::Pos(v) => Sm::Neg(*v),
            Sm::Neg(v) => Sm::Pos(*v),
            _ => a.clone(),
        }
    }
    fn mul(&self, a: &Sm, b: &Sm) -> Option<Sm> {
        let (Some(x), Some(y)) = (a.value(), b.value()) else {
            return Some(Sm::Zero);
        };
        Some(match (a, b) {
            (Sm::Bal(_), _) | (_, Sm::Bal(_)) => Sm::Bal(x + y),
            (Sm::Pos(_), Sm::Pos(_)) | (Sm::Neg(_), Sm::Neg(_)) => Sm::Pos(x + y),
            _ => Sm::Neg(x + y),
        })
    }
    fn is_tangible(&self, a: &Sm) -> bool {
        matches!(a, Sm::Pos(_) | Sm::Neg(_))
    }
    fn surpasses(&self, a: &Sm, b: &Sm) -> bool {
        a == b
            || match b {
                Sm::Bal(w) => a.value().is_none_or(|v| v <= *w),
                _ => false,
            }
    }
    fn label(&self, a: &Sm) -> String {
        match a {
            Sm::Zero => "-inf".into(),
            Sm::Pos(v) => fmt_q(v),
            Sm::Neg(v) => format!("(-){}", fmt_q(v)),
            Sm::Bal(v) => format!("{}o", fmt_q(v)),
        }
    }
    fn preorder_leq(&self, a: &Sm, b: &Sm) -> Option<bool> {
        Some(match (a.value(), b.value()) {
            (None, _) => true,
            (_, None) => false,
            (Some(x), Some(y)) => x < y || (x == y && !(matches!(a, Sm::Bal(_)) && !matches!(b, Sm::Bal(_)))),
        })
    }
    fn cancellative(&self) -> Option<bool> {
        Some(true)
    }
    fn bipotent(&self) -> Option<bool> {
        Some(true)
    }
}

/// Max-plus semiring with identity negation and `𝒯 = ℚ` (not a triple).
#[derive(Clone, Debug, Default)]
pub struct MaxPlus;

impl MaxPlus {
    pub fn table(grades: &[Q]) -> SystemTable {
        let mut w = vec![None];
        w.extend(grades.iter().map(|g| Some(*g)));
        tabulate(&MaxPlus, &w, "max-plus", true)
    }
}

impl Algebra for MaxPlus {
    type Elem = Option<Q>;

    fn name(&self) -> String {
        "max-plus".into()
    }
    fn zero(&self) -> Option<Q> {
        None
    }
    fn one(&self) -> Option<Option<Q>> {
        Some(Some(q(0)))
    }
    fn add(&self, a: &Option<Q>, b: &Option<Q>) -> Option<Option<Q>> {
        Some(*a.max(b))
    }
    fn neg(&self, a: &Option<Q>) -> Option<Q> {
        *a
    }
    fn mul(&self, a: &Option<Q>, b: &Option<Q>) -> Option<Option<Q>> {
        Some(match (a, b) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        })
    }
    fn is_tangible(&self, a: &Option<Q>) -> bool {
        a.is_some()
    }
    fn surpasses(&self, a: &Option<Q>, b: &Option<Q>) -> bool {
        a <= b
    }
    fn label(&self, a: &Option<Q>) -> String {
        a.as_ref().map_or("-inf".into(), fmt_q)
    }
}

/// Angle in turns, reduced to `[0, 1)`.
fn turn(x: Q) -> Q {
    x - x.floor()
}

/// Phase hyperfield system: elements are the relative interiors of closed
/// convex cones of ℂ, intersected with `S¹ ∪ {0}`. Angles are in turns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cone {
    Zero,
    /// A single point of the circle.
    Ray(Q),
    /// Open arc starting at the angle, with the given span in `(0, 1/2)`.
    Arc(Q, Q),
    /// `{a, −a, 0}` with `a ∈ [0, 1/2)`.
    Line(Q),
    /// Open half circle starting at the angle.
    Half(Q),
    /// The whole hyperfield.
    Full,
}

impl Cone {
    fn generators(&self) -> Vec<Q> {
        let h = qf(1, 2);
        match self {
            Cone::Zero => vec![],
            Cone::Ray(a) => vec![*a],
            Cone::Arc(a, s) => vec![*a, turn(a + s)],
            Cone::Line(a) => vec![*a, turn(a + h)],
            Cone::Half(a) => vec![*a, turn(a + qf(1, 4)), turn(a + h)],
            Cone::Full => vec![q(0), qf(1, 3), qf(2, 3)],
        }
    }

    fn breakpoints(&self) -> Vec<Q> {
        let h = qf(1, 2);
        match self {
            Cone::Zero | Cone::Full => vec![],
            Cone::Ray(a) => vec![*a],
            Cone::Arc(a, s) => vec![*a, turn(a + s)],
            Cone::Line(a) | Cone::Half(a) => vec![*a, turn(a + h)],
        }
    }

    /// Membership of a point (`None` is zero).
    pub fn contains(&self, p: Option<Q>) -> bool {
        let h = qf(1, 2);
        match (self, p) {
            (Cone::Full, _) => true,
            (Cone::Zero, p) => p.is_none(),
            (Cone::Line(_), None) => true,
            (_, None) => false,
            (Cone::Ray(a), Some(x)) => *a == x,
            (Cone::Arc(a, s), Some(x)) => {
                let d = turn(x - a);
                d > q(0) && d < *s
            }
            (Cone::Line(a), Some(x)) => x == *a || x == turn(a + h),
            (Cone::Half(a), Some(x)) => {
                let d = turn(x - a);
                d > q(0) && d < h
            }
        }
    }

    /// Relative interior of the conic hull of the given directions.
    pub fn hull(dirs: &[Q]) -> Cone {
        let mut d: Vec<Q> = dirs.iter().map(|x| turn(*x)).collect();
        d.sort();
        d.dedup();
        let h = qf(1, 2);
        match d.len() {
            0 => return Cone::Zero,
            1 => return Cone::Ray(d[0]),
            _ => {}
        }
        let len = d.len();
        let mut best = 0;
        let mut gap = q(-1);
        for i in 0..len {
            let next = if i + 1 < len { d[i + 1] } else { d[0] + q(1) };
            let g = next - d[i];
            if g > gap {
                gap = g;
                best = i;
            }
        }
        let start = d[(best + 1) % len];
        if gap > h {
            Cone::Arc(start, q(1) - gap)
        } else if gap == h {
            if len == 2 {
                Cone::Line(d[0].min(d[1]))
            } else {
                Cone::Half(start)
            }
        } else {
            Cone::Full
        }
    }

    pub fn is_subset(&self, other: &Cone) -> bool {
        test_points(&[self.breakpoints(), other.breakpoints()].concat())
            .into_iter()
            .all(|p| !self.contains(p) || other.contains(p))
    }
}

/// Sample points that decide membership questions for sets whose boundaries
/// lie in `bps`: zero, each breakpoint and each midpoint between neighbours.
fn test_points(bps: &[Q]) -> Vec<Option<Q>> {
    let mut d: Vec<Q> = bps.iter().map(|x| turn(*x)).collect();
    d.push(q(0));
    d.sort();
    d.dedup();
    let mut out = vec![None];
    for i in 0..d.len() {
        out.push(Some(d[i]));
        let next = if i + 1 < d.len() { d[i + 1] } else { d[0] + q(1) };
        out.push(Some(turn((d[i] + next) / q(2))));
    }
    out
}

/// Phase system with the distributed product.
#[derive(Clone, Debug)]
pub struct Phase {
    /// Number of grid directions used by windows (even).
    pub k: usize,
}

impl Phase {
    pub fn new(k: usize) -> Self {
        assert!(k >= 2 && k.is_multiple_of(2), "phase grid needs an even k");
        Phase { k }
    }

    /// Closure of the grid points under addition.
    pub fn window(&self) -> Vec<Cone> {
        let mut seed = vec![Cone::Zero];
        seed.extend((0..self.k).map(|j| Cone::Ray(qf(j as i64, self.k as i64))));
        additive_closure(self, &seed, |_| true)
    }

    pub fn table(&self) -> SystemTable {
        let mut t = tabulate(self, &self.window(), &format!("phase-{}", self.k), true);
        // closed under all operations on the grid
        t.window = true;
        t
    }

    /// The setwise product `{st : s ∈ S, t ∈ T}`.
    pub fn setwise_product(&self, a: &Cone, b: &Cone) -> PointSet {
        let pa = pieces(a);
        let pb = pieces(b);
        let mut out = Vec::new();
        for x in &pa {
            for y in &pb {
                out.push(piece_mul(x, y));
            }
        }
        PointSet(out)
    }

    /// First point where the setwise and the distributed product differ.
    pub fn product_discrepancy(&self, a: &Cone, b: &Cone) -> Option<Option<Q>> {
        let set = self.setwise_product(a, b);
        let cone = self.mul(a, b).expect("phase product is total");
        let mut bps = cone.breakpoints();
        bps.extend(set.breakpoints());
        test_points(&bps)
            .into_iter()
            .find(|&p| set.contains(p) != cone.contains(p))
    }
}

impl Algebra for Phase {
    type Elem = Cone;

    fn name(&self) -> String {
        format!("phase-{}", self.k)
    }
    fn zero(&self) -> Cone {
        Cone::Zero
    }
    fn one(&self) -> Option<Cone> {
        Some(Cone::Ray(q(0)))
    }
    fn add(&self, a: &Cone, b: &Cone) -> Option<Cone> {
        Some(Cone::hull(&[a.generators(), b.generators()].concat()))
    }
    fn neg(&self, a: &Cone) -> Cone {
        let h = qf(1, 2);
        match a {
            Cone::Ray(x) => Cone::Ray(turn(x + h)),
            Cone::Arc(x, s) => Cone::Arc(turn(x + h), *s),
            Cone::Half(x) => Cone::Half(turn(x + h)),
            _ => a.clone(),
        }
    }
    fn mul(&self, a: &Cone, b: &Cone) -> Option<Cone> {
        if *a == Cone::Zero || *b == Cone::Zero {
            return Some(Cone::Zero);
        }
        let mut dirs = Vec::new();
        for x in a.generators() {
            for y in b.generators() {
                dirs.push(x + y);
            }
        }
        Some(Cone::hull(&dirs))
    }
    fn is_tangible(&self, a: &Cone) -> bool {
        matches!(a, Cone::Ray(_))
    }
    fn surpasses(&self, a: &Cone, b: &Cone) -> bool {
        a.is_subset(b)
    }
    fn label(&self, a: &Cone) -> String {
        match a {
            Cone::Zero => "0".into(),
            Cone::Ray(x) => format!("@{}", fmt_q(x)),
            Cone::Arc(x, s) => format!("arc({},{})", fmt_q(x), fmt_q(&turn(x + s))),
            Cone::Line(x) => format!("line({})", fmt_q(x)),
            Cone::Half(x) => format!("half({})", fmt_q(x)),
            Cone::Full => "all".into(),
        }
    }
}

/// A finite union of pieces of `S¹ ∪ {0}`.
#[derive(Clone, Debug)]
pub struct PointSet(pub Vec<Piece>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    Zero,
    Point(Q),
    /// Open arc with start and span in `(0, 1]`.
    Open(Q, Q),
    Circle,
}

fn pieces(c: &Cone) -> Vec<Piece> {
    match c {
        Cone::Zero => vec![Piece::Zero],
        Cone::Ray(a) => vec![Piece::Point(*a)],
        Cone::Arc(a, s) => vec![Piece::Open(*a, *s)],
        Cone::Line(a) => vec![Piece::Zero, Piece::Point(*a), Piece::Point(turn(a + qf(1, 2)))],
        Cone::Half(a) => vec![Piece::Open(*a, qf(1, 2))],
        Cone::Full => vec![Piece::Zero, Piece::Circle],
    }
}

fn piece_mul(x: &Piece, y: &Piece) -> Piece {
    match (x, y) {
        (Piece::Zero, _) | (_, Piece::Zero) => Piece::Zero,
        (Piece::Circle, _) | (_, Piece::Circle) => Piece::Circle,
        (Piece::Point(a), Piece::Point(b)) => Piece::Point(turn(a + b)),
        (Piece::Point(a), Piece::Open(b, s)) | (Piece::Open(b, s), Piece::Point(a)) => Piece::Open(turn(a + b), *s),
        (Piece::Open(a, s), Piece::Open(b, t)) => {
            if s + t > q(1) {
                Piece::Circle
            } else {
                Piece::Open(turn(a + b), s + t)
            }
        }
    }
}

impl PointSet {
    pub fn contains(&self, p: Option<Q>) -> bool {
        self.0.iter().any(|piece| match (piece, p) {
            (Piece::Zero, None) => true,
            (Piece::Point(a), Some(x)) => *a == x,
            (Piece::Open(a, s), Some(x)) => {
                let d = turn(x - a);
                d > q(0) && d < *s
            }
            (Piece::Circle, Some(_)) => true,
            _ => false,
        })
    }

    fn breakpoints(&self) -> Vec<Q> {
        let mut out = Vec::new();
        for p in &self.0 {
            match p {
                Piece::Point(a) => out.push(*a),
                Piece::Open(a, s) => {
                    out.push(*a);
                    out.push(turn(a + s));
                }
                _ => {}
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|p| match p {
                Piece::Zero => "0".into(),
                Piece::Point(a) => format!("@{}", fmt_q(a)),
                Piece::Open(a, s) => format!("arc({},{})", fmt_q(a), fmt_q(&turn(a + s))),
                Piece::Circle => "circle".into(),
            })
            .collect();
        format!("{{{}}}", parts.join(" u "))
    }
}

/// Hypersystem of the triangle hypergroup over `ℕ`: integer intervals
/// `[lo, hi]`, with `a ⊞ b = [|a − b|, a + b]`, identity negation and the
/// inclusion order. Only the unit acts multiplicatively.
#[derive(Clone, Debug)]
pub struct Triangle {
    /// Window bound on the upper endpoint.
    pub bound: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Triangle {
    pub fn window(&self) -> Vec<Interval> {
        let seed: Vec<Interval> = (0..=self.bound).map(|a| Interval { lo: a, hi: a }).collect();
        let b = self.bound;
        additive_closure(self, &seed, |x| x.hi <= b)
    }

    pub fn table(&self) -> SystemTable {
        tabulate(self, &self.window(), &format!("triangle-{}", self.bound), true)
    }
}

impl Algebra for Triangle {
    type Elem = Interval;

    fn name(&self) -> String {
        format!("triangle-{}", self.bound)
    }
    fn zero(&self) -> Interval {
        Interval { lo: 0, hi: 0 }
    }
    fn one(&self) -> Option<Interval> {
        Some(Interval { lo: 1, hi: 1 })
    }
    fn add(&self, a: &Interval, b: &Interval) -> Option<Interval> {
        let lo = if a.hi < b.lo {
            b.lo - a.hi
        } else {
            a.lo.saturating_sub(b.hi)
        };
        Some(Interval { lo, hi: a.hi + b.hi })
    }
    fn neg(&self, a: &Interval) -> Interval {
        *a
    }
    fn mul(&self, a: &Interval, b: &Interval) -> Option<Interval> {
        let zero = self.zero();
        let one = self.one().unwrap();
        if *a == zero || *b == zero {
            Some(zero)
        } else if *a == one {
            Some(*b)
        } else if *b == one {
            Some(*a)
        } else {
            None
        }
    }
    fn is_tangible(&self, a: &Interval) -> bool {
        a.lo == a.hi && a.lo > 0
    }
    fn surpasses(&self, a: &Interval, b: &Interval) -> bool {
        b.lo <= a.lo && a.hi <= b.hi
    }
    fn label(&self, a: &Interval) -> String {
        if a.lo == a.hi {
            a.lo.to_string()
        } else {
            format!("[{},{}]", a.lo, a.hi)
        }
    }
}

/// `ℕ̂ = ℕ × ℕ` with the twist product, switch negation and
/// `𝒯 = {(1,0), (0,1)}`.
#[derive(Clone, Debug)]
pub struct NHat {
    pub bound: u32,
}

impl NHat {
    pub fn window(&self) -> Vec<(u32, u32)> {
        let mut v = Vec::new();
        for m in 0..=self.bound {
            for n in 0..=self.bound {
                v.push((m, n));
            }
        }
        v.sort_by_key(|&(m, n)| (m + n, m, n));
        v
    }

    pub fn table(&self) -> SystemTable {
        tabulate(self, &self.window(), &format!("nhat-{}", self.bound), true)
    }
}

impl Algebra for NHat {
    type Elem = (u32, u32);

    fn name(&self) -> String {
        format!("nhat-{}", self.bound)
    }
    fn zero(&self) -> (u32, u32) {
        (0, 0)
    }
    fn one(&self) -> Option<(u32, u32)> {
        Some((1, 0))
    }
    fn add(&self, a: &(u32, u32), b: &(u32, u32)) -> Option<(u32, u32)> {
        Some((a.0 + b.0, a.1 + b.1))
    }
    fn neg(&self, a: &(u32, u32)) -> (u32, u32) {
        (a.1, a.0)
    }
    fn mul(&self, a: &(u32, u32), b: &(u32, u32)) -> Option<(u32, u32)> {
        Some((a.0 * b.0 + a.1 * b.1, a.0 * b.1 + a.1 * b.0))
    }
    fn is_tangible(&self, a: &(u32, u32)) -> bool {
        *a == (1, 0) || *a == (0, 1)
    }
    fn surpasses(&self, a: &(u32, u32), b: &(u32, u32)) -> bool {
        b.0 >= a.0 && b.1 >= a.1 && b.0 - a.0 == b.1 - a.1
    }
    fn label(&self, a: &(u32, u32)) -> String {
        format!("({},{})", a.0, a.1)
    }
    fn preorder_leq(&self, a: &(u32, u32), b: &(u32, u32)) -> Option<bool> {
        Some((a.0 <= b.0 && a.1 <= b.1) || (a.1 <= b.0 && a.0 <= b.1))
    }
}

/// The integers with `𝒯 = {±1}` and the equality (singleton inclusion) order.
#[derive(Clone, Debug)]
pub struct Integers {
    pub bound: i64,
}

impl Integers {
    /// `0, 1, −1, 2, −2, …` up to the bound.
    pub fn window(&self) -> Vec<i64> {
        let mut v = vec![0];
        for k in 1..=self.bound {
            v.push(k);
            v.push(-k);
        }
        v
    }

    pub fn table(&self) -> SystemTable {
        tabulate(self, &self.window(), "z-hyperfield", true)
    }
}

impl Algebra for Integers {
    type Elem = i64;

    fn name(&self) -> String {
        "z-hyperfield".into()
    }
    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> Option<i64> {
        Some(1)
    }
    fn add(&self, a: &i64, b: &i64) -> Option<i64> {
        Some(a + b)
    }
    fn neg(&self, a: &i64) -> i64 {
        -a
    }
    fn mul(&self, a: &i64, b: &i64) -> Option<i64> {
        Some(a * b)
    }
    fn is_tangible(&self, a: &i64) -> bool {
        a.abs() == 1
    }
    fn surpasses(&self, a: &i64, b: &i64) -> bool {
        a == b
    }
    fn label(&self, a: &i64) -> String {
        a.to_string()
    }
}
