//! Exhaustive isomorphism search between small finite structures.

use crate::carrier::ElementId;
use crate::table::{HyperTable, SystemTable};

/// Largest carriers for which the searches are attempted.
pub const ISO_LIMIT: usize = 12;
pub const HYPER_ISO_LIMIT: usize = 64;

/// A bijection `f` from the first carrier to the second preserving zero, one,
/// tangibles, negation, addition, multiplication and the surpassing relation.
pub fn find_isomorphism(a: &SystemTable, b: &SystemTable) -> Option<Vec<ElementId>> {
    let n = a.n();
    if n != b.n() || n > ISO_LIMIT || a.one.is_some() != b.one.is_some() {
        return None;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    f[a.zero] = b.zero;
    used[b.zero] = true;
    if let (Some(x), Some(y)) = (a.one, b.one) {
        if x == a.zero || y == b.zero {
            if (x == a.zero) != (y == b.zero) {
                return None;
            }
        } else {
            f[x] = y;
            used[y] = true;
        }
    }
    let order: Vec<ElementId> = (0..n).filter(|&x| f[x] == usize::MAX).collect();
    let fixed: Vec<ElementId> = (0..n).filter(|&x| f[x] != usize::MAX).collect();
    if !fixed.iter().all(|&x| sys_consistent(a, b, &f, x)) {
        return None;
    }
    if sys_search(a, b, &order, 0, &mut f, &mut used) {
        Some(f)
    } else {
        None
    }
}

pub fn isomorphic(a: &SystemTable, b: &SystemTable) -> bool {
    find_isomorphism(a, b).is_some()
}

fn sys_search(
    a: &SystemTable,
    b: &SystemTable,
    order: &[ElementId],
    k: usize,
    f: &mut [ElementId],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..b.n() {
        if used[y] || a.tangible[x] != b.tangible[y] {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if sys_consistent(a, b, f, x) && sys_search(a, b, order, k + 1, f, used) {
            return true;
        }
        f[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Checks every relation among `x` and the already assigned elements.
fn sys_consistent(a: &SystemTable, b: &SystemTable, f: &[ElementId], x: ElementId) -> bool {
    let m = |v: Option<ElementId>| v.map(|v| f[v]);
    let known = |v: Option<ElementId>| v.is_none_or(|v| f[v] != usize::MAX);
    let fx = f[x];
    if a.tangible[x] != b.tangible[fx] || a.leq(x, x) != b.leq(fx, fx) {
        return false;
    }
    let nx = a.neg(x);
    if f[nx] != usize::MAX && f[nx] != b.neg(fx) {
        return false;
    }
    for y in 0..a.n() {
        let fy = f[y];
        if fy == usize::MAX {
            continue;
        }
        if a.leq(x, y) != b.leq(fx, fy) || a.leq(y, x) != b.leq(fy, fx) {
            return false;
        }
        for (p, q) in [(x, y), (y, x)] {
            let (fp, fq) = (f[p], f[q]);
            let s = a.add(p, q);
            if known(s) && m(s) != b.add(fp, fq) {
                return false;
            }
            if s.is_none() && b.add(fp, fq).is_some() {
                return false;
            }
            let t = a.mul(p, q);
            if known(t) && m(t) != b.mul(fp, fq) {
                return false;
            }
            if t.is_none() && b.mul(fp, fq).is_some() {
                return false;
            }
        }
    }
    for z in 0..a.n() {
        let fz = f[z];
        if fz == usize::MAX {
            continue;
        }
        // images of sums and products landing on x
        for y in 0..a.n() {
            let fy = f[y];
            if fy == usize::MAX {
                continue;
            }
            if (a.add(z, y) == Some(x)) != (b.add(fz, fy) == Some(fx)) {
                return false;
            }
            if (a.mul(z, y) == Some(x)) != (b.mul(fz, fy) == Some(fx)) {
                return false;
            }
        }
    }
    true
}

/// A bijection between hyper tables preserving zero, one, negation, the
/// hyperaddition and the product.
pub fn find_hyper_isomorphism(a: &HyperTable, b: &HyperTable) -> Option<Vec<ElementId>> {
    let n = a.n();
    if n != b.n() || n > HYPER_ISO_LIMIT || a.has_mul() != b.has_mul() || a.one.is_some() != b.one.is_some() {
        return None;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    f[a.zero] = b.zero;
    used[b.zero] = true;
    if let (Some(x), Some(y)) = (a.one, b.one) {
        if f[x] != usize::MAX && f[x] != y {
            return None;
        }
        if f[x] == usize::MAX {
            if used[y] {
                return None;
            }
            f[x] = y;
            used[y] = true;
        }
    }
    let order: Vec<ElementId> = (0..n).filter(|&x| f[x] == usize::MAX).collect();
    if hyper_search(a, b, &order, 0, &mut f, &mut used) {
        Some(f)
    } else {
        None
    }
}

fn hyper_search(
    a: &HyperTable,
    b: &HyperTable,
    order: &[ElementId],
    k: usize,
    f: &mut [ElementId],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return hyper_complete(a, b, f);
    }
    let x = order[k];
    for y in 0..b.n() {
        if used[y] {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if hyper_consistent(a, b, f, x) && hyper_search(a, b, order, k + 1, f, used) {
            return true;
        }
        f[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Checks the relations among `x` and the already assigned elements.
fn hyper_consistent(a: &HyperTable, b: &HyperTable, f: &[ElementId], x: ElementId) -> bool {
    let fx = f[x];
    let nx = a.neg[x];
    if f[nx] != usize::MAX && f[nx] != b.neg[fx] {
        return false;
    }
    for y in 0..a.n() {
        let fy = f[y];
        if fy == usize::MAX {
            continue;
        }
        for (p, q) in [(x, y), (y, x)] {
            let (fp, fq) = (f[p], f[q]);
            let s = a.add(p, q);
            let t = b.add(fp, fq);
            if s.len() != t.len() || s.iter().any(|c| f[c] != usize::MAX && !t.contains(f[c])) {
                return false;
            }
            match (a.mul(p, q), b.mul(fp, fq)) {
                (None, None) => {}
                (Some(c), Some(d)) if f[c] == usize::MAX || f[c] == d => {}
                _ => return false,
            }
        }
    }
    true
}

fn hyper_complete(a: &HyperTable, b: &HyperTable, f: &[ElementId]) -> bool {
    let n = a.n();
    (0..n).all(|x| f[a.neg[x]] == b.neg[f[x]])
        && (0..n).all(|x| {
            (0..n).all(|y| {
                let img: crate::carrier::SubsetVal = a.add(x, y).iter().map(|c| f[c]).collect();
                img == *b.add(f[x], f[y]) && a.mul(x, y).map(|c| f[c]) == b.mul(f[x], f[y])
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, krasner, sign_semiring, signs};

    #[test]
    fn structure_is_isomorphic_to_itself() {
        let l = sign_semiring();
        assert!(isomorphic(&l, &l));
        assert!(!isomorphic(&l, &boolean()));
    }

    #[test]
    fn hyper_tables_match_themselves_only() {
        assert!(find_hyper_isomorphism(&signs(), &signs()).is_some());
        assert!(find_hyper_isomorphism(&signs(), &krasner()).is_none());
    }
}
