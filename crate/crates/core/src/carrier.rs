//! Element identifiers, canonical subsets and the power-set closure engine.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense index of a carrier element.
pub type ElementId = usize;

/// Default bound on the number of subsets a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// Closure cap, honouring the `HK_CLOSURE_CAP` environment override.
pub fn closure_cap() -> usize {
    std::env::var("HK_CLOSURE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CLOSURE_CAP)
}

/// Sorted, duplicate-free set of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SubsetVal(Vec<ElementId>);

impl SubsetVal {
    pub fn empty() -> Self {
        SubsetVal(Vec::new())
    }

    pub fn singleton(a: ElementId) -> Self {
        SubsetVal(vec![a])
    }

    /// Builds a subset from arbitrary ids without a carrier bound.
    pub fn from_iter_unchecked<I: IntoIterator<Item = ElementId>>(it: I) -> Self {
        let mut v: Vec<ElementId> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SubsetVal(v)
    }

    pub fn members(&self) -> &[ElementId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &SubsetVal) -> bool {
        self.0.iter().all(|a| other.contains(*a))
    }

    pub fn union(&self, other: &SubsetVal) -> SubsetVal {
        SubsetVal::from_iter_unchecked(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<ElementId> for SubsetVal {
    fn from_iter<I: IntoIterator<Item = ElementId>>(it: I) -> Self {
        SubsetVal::from_iter_unchecked(it)
    }
}

/// Sorts and deduplicates `raw`, rejecting ids outside a carrier of size `n`.
pub fn canonical_subset(raw: &[ElementId], n: usize) -> Result<SubsetVal> {
    if let Some(bad) = raw.iter().find(|&&a| a >= n) {
        return Err(Error::Domain(format!(
            "element id {bad} is not in a carrier of size {n}"
        )));
    }
    Ok(SubsetVal::from_iter_unchecked(raw.iter().copied()))
}

/// Least collection containing `seed` and closed under `step`.
///
/// Elements are returned in discovery order: seeds first, then the results of
/// `step(c[j], c[i])` for `i` in worklist order and `j <= i`.
pub fn closure_under<F>(seed: &[SubsetVal], mut step: F, cap: usize) -> Result<Vec<SubsetVal>>
where
    F: FnMut(&SubsetVal, &SubsetVal) -> SubsetVal,
{
    closure_with_parents(seed, |a, b| step(a, b), cap).map(|(c, _)| c)
}

/// Like [`closure_under`], also returning for each element the pair of indices
/// it was first produced from (`None` for seeds).
pub fn closure_with_parents<T, F>(
    seed: &[T],
    mut step: F,
    cap: usize,
) -> std::result::Result<(Vec<T>, Vec<Option<(usize, usize)>>), Error>
where
    T: Clone + Eq + std::hash::Hash + IntoSubsetWitness,
    F: FnMut(&T, &T) -> T,
{
    let mut items: Vec<T> = Vec::new();
    let mut parents = Vec::new();
    let mut index: HashMap<T, usize> = HashMap::new();
    for s in seed {
        if !index.contains_key(s) {
            index.insert(s.clone(), items.len());
            items.push(s.clone());
            parents.push(None);
        }
    }
    let mut i = 0;
    while i < items.len() {
        for j in 0..=i {
            let r = step(&items[j], &items[i]);
            if !index.contains_key(&r) {
                if items.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        partial: items.iter().map(|t| t.witness_subset()).collect(),
                    });
                }
                index.insert(r.clone(), items.len());
                items.push(r);
                parents.push(Some((j, i)));
            }
        }
        i += 1;
    }
    Ok((items, parents))
}

/// Conversion used to attach a partial closure to a cap error.
pub trait IntoSubsetWitness {
    fn witness_subset(&self) -> SubsetVal;
}

impl IntoSubsetWitness for SubsetVal {
    fn witness_subset(&self) -> SubsetVal {
        self.clone()
    }
}

impl IntoSubsetWitness for ElementId {
    fn witness_subset(&self) -> SubsetVal {
        SubsetVal::singleton(*self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sorts_and_dedups() {
        let s = canonical_subset(&[2, 0, 2, 1], 3).unwrap();
        assert_eq!(s.members(), &[0, 1, 2]);
        assert!(canonical_subset(&[], 3).unwrap().is_empty());
        assert!(matches!(canonical_subset(&[5], 3), Err(Error::Domain(_))));
    }

    #[test]
    fn closure_of_zero_is_fixpoint() {
        let seed = vec![SubsetVal::singleton(0)];
        let c = closure_under(&seed, |a, b| a.union(b), 10).unwrap();
        assert_eq!(c, seed);
    }

    #[test]
    fn closure_cap_reports_partial() {
        let seed: Vec<SubsetVal> = (0..4).map(SubsetVal::singleton).collect();
        match closure_under(&seed, |a, b| a.union(b), 6) {
            Err(Error::CapExceeded { partial, .. }) => assert_eq!(partial.len(), 6),
            other => panic!("expected cap error, got {other:?}"),
        }
    }
}
