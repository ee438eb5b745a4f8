//! Minimal entailing subsets of a belief base.
//!
//! An entailment set for a target sentence is a subset of the base that
//! entails the target while no proper subset of it does. These are the
//! building blocks for degrees of accessibility and for context slices.

use crate::error::Error;
use crate::formula::{canonicalize, Formula};
use crate::logic::{entails, BeliefBase};

/// Default cap on the base size for subset enumeration.
pub const MAX_ENUMERATION_BASE: usize = 16;

/// A minimal subset of a base entailing `target`.
///
/// Members are stored in base order. The empty set is a valid entailment set
/// exactly for tautological targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentSet {
    pub members: Vec<Formula>,
    pub target: Formula,
}

impl EntailmentSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Checks the three defining clauses directly: `x ⊆ base` (structural
/// membership), `x` entails the target, and no proper subset of `x` does.
///
/// Minimality only needs the immediate subsets: if any proper subset entailed
/// the target then by monotony so would some one-element-removed subset.
pub fn is_entailment_set(
    x: &[Formula],
    target: &Formula,
    base: &BeliefBase,
) -> Result<bool, Error> {
    let members: Vec<Formula> = x.iter().map(canonicalize).collect();
    if members.iter().any(|m| !base.contains(m)) {
        return Ok(false);
    }
    let as_base = BeliefBase::new(members.clone());
    if as_base.len() != members.len() {
        // duplicated member; not a set
        return Ok(false);
    }
    if !entails(&as_base, target)? {
        return Ok(false);
    }
    for skip in 0..members.len() {
        let without = BeliefBase::new(
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, f)| f.clone()),
        );
        if entails(&without, target)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates all entailment sets for `target` in the base.
///
/// Breadth-first by cardinality: supersets of an already-found set are never
/// minimal, so they are pruned. The result is ordered by cardinality, then by
/// member positions in the base. An unentailed target yields an empty list; a
/// tautological target yields exactly the empty entailment set.
pub fn entailment_sets_capped(
    base: &BeliefBase,
    target: &Formula,
    cap: usize,
) -> Result<Vec<EntailmentSet>, Error> {
    if base.len() > cap {
        return Err(Error::LimitExceeded {
            what: "entailment-set enumeration base",
            limit: cap,
            actual: base.len(),
        });
    }
    let target = canonicalize(target);
    if !entails(base, &target)? {
        return Ok(Vec::new());
    }

    let n = base.len();
    let sentences = base.sentences();
    let mut hits: Vec<u64> = Vec::new();

    // candidate subsets of size k, in lexicographic position order
    let mut current: Vec<Vec<usize>> = vec![Vec::new()];
    for _size in 0..=n {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for indices in &current {
            let mask: u64 = indices.iter().fold(0, |m, i| m | (1u64 << i));
            if hits.iter().any(|h| h & mask == *h) {
                continue;
            }
            let subset = BeliefBase::new(indices.iter().map(|&i| sentences[i].clone()));
            if entails(&subset, &target)? {
                hits.push(mask);
            } else {
                let start = indices.last().map_or(0, |&i| i + 1);
                for j in start..n {
                    let mut extended = indices.clone();
                    extended.push(j);
                    next.push(extended);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        current = next;
    }

    hits.sort_by_key(|&mask| (mask.count_ones(), mask));
    Ok(hits
        .into_iter()
        .map(|mask| EntailmentSet {
            members: (0..n)
                .filter(|i| mask & (1u64 << i) != 0)
                .map(|i| sentences[i].clone())
                .collect(),
            target: target.clone(),
        })
        .collect())
}

/// Enumerates entailment sets under the default cap.
pub fn entailment_sets(base: &BeliefBase, target: &Formula) -> Result<Vec<EntailmentSet>, Error> {
    entailment_sets_capped(base, target, MAX_ENUMERATION_BASE)
}
