//! Belief bases and the consequence operation.
//!
//! `entails` is the single decision procedure the rest of the crate builds
//! on: a splitting (DPLL-style) satisfiability check on the formula tree.
//! The independent truth-table oracle lives in [`crate::verifier`] and shares
//! nothing with this module beyond the [`Formula`] type.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::formula::{and, atom, canonicalize, not, or, Formula, Valuation};

/// Default cap on the combined atom universe of an entailment query.
pub const MAX_SOLVER_ATOMS: usize = 24;

/// Largest atom count for which all `2^(2^k)` semantic classes are enumerable.
pub const MAX_CLASS_ATOMS: usize = 4;

/// Largest universe representable as a 64-bit model mask.
pub const MAX_MASK_ATOMS: usize = 6;

/// A duplicate-free, ordered collection of canonical sentences.
///
/// The base denotes the belief set `Cn(base)`; membership of a sentence in
/// the belief set is decided by [`entails`]. Position in the base is the
/// deterministic tiebreak used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeliefBase {
    sentences: Vec<Formula>,
}

impl BeliefBase {
    /// Builds a base from sentences, canonicalizing and dropping duplicates
    /// while preserving first-occurrence order.
    pub fn new(sentences: impl IntoIterator<Item = Formula>) -> Self {
        let mut out: Vec<Formula> = Vec::new();
        for f in sentences {
            let c = canonicalize(&f);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        BeliefBase { sentences: out }
    }

    pub fn empty() -> Self {
        BeliefBase {
            sentences: Vec::new(),
        }
    }

    pub fn sentences(&self) -> &[Formula] {
        &self.sentences
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.sentences.iter()
    }

    /// Structural membership of the canonicalized sentence.
    pub fn contains(&self, f: &Formula) -> bool {
        self.position(f).is_some()
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        let c = canonicalize(f);
        self.sentences.iter().position(|s| *s == c)
    }

    /// The base with `f` appended if not already present.
    pub fn with(&self, f: &Formula) -> BeliefBase {
        let mut out = self.clone();
        let c = canonicalize(f);
        if !out.sentences.contains(&c) {
            out.sentences.push(c);
        }
        out
    }

    /// Atoms occurring anywhere in the base.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        for s in &self.sentences {
            set.extend(s.atoms());
        }
        set
    }

    /// The conjunction of all sentences; `true` for the empty base.
    pub fn conjunction(&self) -> Formula {
        let mut it = self.sentences.iter().cloned();
        match it.next() {
            None => Formula::Top,
            Some(first) => it.fold(first, and),
        }
    }
}

impl FromIterator<Formula> for BeliefBase {
    fn from_iter<T: IntoIterator<Item = Formula>>(iter: T) -> Self {
        BeliefBase::new(iter)
    }
}

// --- splitting solver ---

/// Substitutes a truth value for an atom and constant-folds bottom-up.
fn assign(f: &Formula, name: &str, value: bool) -> Formula {
    match f {
        Formula::Atom(a) => {
            if a == name {
                if value {
                    Formula::Top
                } else {
                    Formula::Bottom
                }
            } else {
                f.clone()
            }
        }
        Formula::Top | Formula::Bottom => f.clone(),
        Formula::Not(c) => fold_not(assign(c, name, value)),
        Formula::And(l, r) => fold_and(assign(l, name, value), assign(r, name, value)),
        Formula::Or(l, r) => fold_or(assign(l, name, value), assign(r, name, value)),
        Formula::Implies(l, r) => fold_implies(assign(l, name, value), assign(r, name, value)),
        Formula::Iff(l, r) => fold_iff(assign(l, name, value), assign(r, name, value)),
    }
}

fn fold_not(c: Formula) -> Formula {
    match c {
        Formula::Top => Formula::Bottom,
        Formula::Bottom => Formula::Top,
        Formula::Not(inner) => *inner,
        other => not(other),
    }
}

fn fold_and(l: Formula, r: Formula) -> Formula {
    match (l, r) {
        (Formula::Bottom, _) | (_, Formula::Bottom) => Formula::Bottom,
        (Formula::Top, x) | (x, Formula::Top) => x,
        (l, r) => and(l, r),
    }
}

fn fold_or(l: Formula, r: Formula) -> Formula {
    match (l, r) {
        (Formula::Top, _) | (_, Formula::Top) => Formula::Top,
        (Formula::Bottom, x) | (x, Formula::Bottom) => x,
        (l, r) => or(l, r),
    }
}

fn fold_implies(l: Formula, r: Formula) -> Formula {
    match (l, r) {
        (Formula::Bottom, _) => Formula::Top,
        (_, Formula::Top) => Formula::Top,
        (Formula::Top, x) => x,
        (x, Formula::Bottom) => fold_not(x),
        (l, r) => Formula::Implies(Box::new(l), Box::new(r)),
    }
}

fn fold_iff(l: Formula, r: Formula) -> Formula {
    match (l, r) {
        (Formula::Top, x) | (x, Formula::Top) => x,
        (Formula::Bottom, x) | (x, Formula::Bottom) => fold_not(x),
        (l, r) => Formula::Iff(Box::new(l), Box::new(r)),
    }
}

/// Picks the most frequent atom; ties go to the lexicographically smallest.
fn branch_atom(f: &Formula) -> Option<String> {
    fn count(f: &Formula, counts: &mut std::collections::BTreeMap<String, usize>) {
        match f {
            Formula::Atom(a) => *counts.entry(a.clone()).or_insert(0) += 1,
            Formula::Top | Formula::Bottom => {}
            Formula::Not(c) => count(c, counts),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                count(l, counts);
                count(r, counts);
            }
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    count(f, &mut counts);
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
        .map(|(name, _)| name)
}

/// Bottom-up constant folding; an atom-free formula folds to a constant.
fn const_fold(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Bottom => f.clone(),
        Formula::Not(c) => fold_not(const_fold(c)),
        Formula::And(l, r) => fold_and(const_fold(l), const_fold(r)),
        Formula::Or(l, r) => fold_or(const_fold(l), const_fold(r)),
        Formula::Implies(l, r) => fold_implies(const_fold(l), const_fold(r)),
        Formula::Iff(l, r) => fold_iff(const_fold(l), const_fold(r)),
    }
}

// expects a folded input; `assign` keeps intermediate formulas folded
fn satisfiable(f: Formula) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        other => {
            let atom = branch_atom(&other).expect("folded non-constant formula has an atom");
            satisfiable(assign(&other, &atom, true)) || satisfiable(assign(&other, &atom, false))
        }
    }
}

/// Decides whether every model of the base satisfies the goal, with an
/// explicit cap on the combined atom universe.
pub fn entails_capped(base: &BeliefBase, goal: &Formula, cap: usize) -> Result<bool, Error> {
    let mut atoms = base.atoms();
    atoms.extend(goal.atoms());
    if atoms.len() > cap {
        return Err(Error::LimitExceeded {
            what: "entailment atom universe",
            limit: cap,
            actual: atoms.len(),
        });
    }
    let query = const_fold(&and(base.conjunction(), not(canonicalize(goal))));
    Ok(!satisfiable(query))
}

/// Decides `Cn(base) ∋ goal` under the default atom cap.
pub fn entails(base: &BeliefBase, goal: &Formula) -> Result<bool, Error> {
    entails_capped(base, goal, MAX_SOLVER_ATOMS)
}

/// True iff the formula is a tautology, i.e. entailed by the empty base.
pub fn is_tautology(f: &Formula) -> Result<bool, Error> {
    entails(&BeliefBase::empty(), f)
}

/// True iff the base does not entail `false`.
pub fn is_consistent(base: &BeliefBase) -> Result<bool, Error> {
    Ok(!entails(base, &Formula::Bottom)?)
}

/// True iff the two bases have identical model sets over the union of their
/// atoms: each entails the conjunction of the other.
pub fn equivalent(base1: &BeliefBase, base2: &BeliefBase) -> Result<bool, Error> {
    Ok(entails(base1, &base2.conjunction())? && entails(base2, &base1.conjunction())?)
}

// --- finite universes and semantic classes ---

/// Default atom names used to pad a universe to a requested size.
const DEFAULT_ATOMS: [&str; 11] = ["p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"];

/// A declared, ordered, finite atom universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    atoms: Vec<String>,
}

impl Universe {
    /// Builds a universe from atom names (sorted, deduplicated).
    pub fn new(atoms: impl IntoIterator<Item = String>) -> Self {
        let set: BTreeSet<String> = atoms.into_iter().collect();
        Universe {
            atoms: set.into_iter().collect(),
        }
    }

    /// The first `k` default atom names: `p, q, r, ...`.
    pub fn default_of(k: usize) -> Self {
        Universe::new(
            DEFAULT_ATOMS
                .iter()
                .map(|s| s.to_string())
                .chain((1..).map(|i| format!("a{i}")))
                .take(k),
        )
    }

    /// Extends this universe with fresh default atoms until it has `k` atoms.
    /// Returns an error if it already has more than `k`.
    pub fn padded_to(&self, k: usize) -> Result<Universe, Error> {
        if self.atoms.len() > k {
            return Err(Error::LimitExceeded {
                what: "atom universe",
                limit: k,
                actual: self.atoms.len(),
            });
        }
        let mut atoms: BTreeSet<String> = self.atoms.iter().cloned().collect();
        let mut candidates = DEFAULT_ATOMS
            .iter()
            .map(|s| s.to_string())
            .chain((1..).map(|i| format!("a{i}")));
        while atoms.len() < k {
            let c = candidates.next().expect("infinite candidate names");
            atoms.insert(c);
        }
        Ok(Universe::new(atoms))
    }

    pub fn from_base(base: &BeliefBase) -> Self {
        Universe::new(base.atoms())
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Number of valuations, `2^len`.
    pub fn valuation_count(&self) -> u64 {
        1u64 << self.atoms.len()
    }

    /// The valuation encoded by bit pattern `v`: atom `i` is true iff bit `i`
    /// of `v` is set.
    pub fn valuation(&self, v: u64) -> Valuation {
        Valuation::new(
            self.atoms
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), (v >> i) & 1 == 1)),
        )
    }

    /// The all-ones model mask over this universe.
    pub fn full_mask(&self) -> u64 {
        if self.atoms.len() >= MAX_MASK_ATOMS {
            u64::MAX
        } else {
            (1u64 << self.valuation_count()) - 1
        }
    }

    fn check_mask_size(&self) -> Result<(), Error> {
        if self.atoms.len() > MAX_MASK_ATOMS {
            return Err(Error::LimitExceeded {
                what: "model-mask atom universe",
                limit: MAX_MASK_ATOMS,
                actual: self.atoms.len(),
            });
        }
        Ok(())
    }
}

/// Computes the model set of a formula over a universe as a bit mask:
/// bit `v` is set iff the valuation encoded by `v` satisfies the formula.
///
/// All atoms of the formula must lie in the universe.
pub fn models_mask(f: &Formula, u: &Universe) -> Result<u64, Error> {
    u.check_mask_size()?;
    let full = u.full_mask();
    fn go(f: &Formula, u: &Universe, full: u64) -> u64 {
        match f {
            Formula::Atom(name) => {
                let i = u
                    .index_of(name)
                    .unwrap_or_else(|| panic!("atom `{name}` is outside the declared universe"));
                let mut mask = 0u64;
                let n = u.valuation_count();
                for v in 0..n {
                    if (v >> i) & 1 == 1 {
                        mask |= 1u64 << v;
                    }
                }
                mask
            }
            Formula::Top => full,
            Formula::Bottom => 0,
            Formula::Not(c) => full & !go(c, u, full),
            Formula::And(l, r) => go(l, u, full) & go(r, u, full),
            Formula::Or(l, r) => go(l, u, full) | go(r, u, full),
            Formula::Implies(l, r) => (full & !go(l, u, full)) | go(r, u, full),
            Formula::Iff(l, r) => {
                let a = go(l, u, full);
                let b = go(r, u, full);
                full & !(a ^ b)
            }
        }
    }
    Ok(go(f, u, full))
}

/// Model mask of a whole base: the intersection of its sentences' masks.
pub fn base_models_mask(base: &BeliefBase, u: &Universe) -> Result<u64, Error> {
    let mut mask = u.full_mask();
    for s in base.iter() {
        mask &= models_mask(s, u)?;
    }
    Ok(mask)
}

/// One logical-equivalence class over a finite universe.
///
/// `truth_table` has bit `v` set iff valuation `v` satisfies the class; the
/// representative is the full-DNF formula over the universe's atoms (or
/// `false` for the empty class). Two formulas are logically equivalent over
/// the universe iff they map to the same truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticClass {
    pub truth_table: u64,
    pub representative: Formula,
}

/// The representative formula of the class with the given truth table:
/// a disjunction of minterms, `false` if the table is empty.
pub fn class_representative(truth_table: u64, u: &Universe) -> Formula {
    if truth_table == 0 {
        return Formula::Bottom;
    }
    let mut disjuncts: Vec<Formula> = Vec::new();
    for v in 0..u.valuation_count() {
        if (truth_table >> v) & 1 == 0 {
            continue;
        }
        let mut literals = u.atoms().iter().enumerate().map(|(i, a)| {
            if (v >> i) & 1 == 1 {
                atom(a)
            } else {
                not(atom(a))
            }
        });
        let first = literals.next().expect("universe is nonempty for minterms");
        let minterm = literals.fold(first, and);
        disjuncts.push(minterm);
    }
    let mut it = disjuncts.into_iter();
    let first = it.next().expect("nonzero table yields a minterm");
    it.fold(first, or)
}

/// Enumerates all `2^(2^k)` semantic classes over a universe of `k` atoms.
pub fn semantic_classes_over(u: &Universe) -> Result<Vec<SemanticClass>, Error> {
    if u.len() > MAX_CLASS_ATOMS {
        return Err(Error::LimitExceeded {
            what: "semantic-class atom universe",
            limit: MAX_CLASS_ATOMS,
            actual: u.len(),
        });
    }
    if u.is_empty() {
        return Ok(vec![
            SemanticClass {
                truth_table: 0,
                representative: Formula::Bottom,
            },
            SemanticClass {
                truth_table: 1,
                representative: Formula::Top,
            },
        ]);
    }
    let table_count: u64 = 1u64 << u.valuation_count();
    let mut out = Vec::with_capacity(table_count as usize);
    for table in 0..table_count {
        out.push(SemanticClass {
            truth_table: table,
            representative: class_representative(table, u),
        });
    }
    Ok(out)
}

/// Enumerates all semantic classes over the default `k`-atom universe.
pub fn semantic_classes(k: usize) -> Result<Vec<SemanticClass>, Error> {
    semantic_classes_over(&Universe::default_of(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{atom, implies, not, or};
    use crate::parse::parse;

    fn base(texts: &[&str]) -> BeliefBase {
        BeliefBase::new(texts.iter().map(|t| parse(t).unwrap()))
    }

    #[test]
    fn base_dedupes_canonically() {
        let b = base(&["p", "!!p", "q"]);
        assert_eq!(b.len(), 2);
        assert!(b.contains(&atom("p")));
        assert_eq!(b.position(&not(not(atom("p")))), Some(0));
    }

    #[test]
    fn modus_ponens_entails() {
        let b = base(&["p", "p -> q"]);
        assert!(entails(&b, &atom("q")).unwrap());
    }

    #[test]
    fn independent_atom_not_entailed() {
        let b = base(&["p"]);
        assert!(!entails(&b, &atom("q")).unwrap());
    }

    #[test]
    fn empty_base_entails_tautologies() {
        let taut = or(atom("p"), not(atom("p")));
        assert!(entails(&BeliefBase::empty(), &taut).unwrap());
        assert!(is_tautology(&taut).unwrap());
        assert!(!is_tautology(&atom("p")).unwrap());
    }

    #[test]
    fn consistency_checks() {
        assert!(!is_consistent(&base(&["p", "!p"])).unwrap());
        assert!(is_consistent(&base(&["p", "p -> q"])).unwrap());
    }

    #[test]
    fn inconsistent_base_entails_everything() {
        let b = base(&["p", "!p"]);
        assert!(entails(&b, &atom("z")).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&base(&["p & q"]), &base(&["p", "q"])).unwrap());
        assert!(!equivalent(&base(&["p"]), &base(&["p | q"])).unwrap());
        assert!(equivalent(&base(&["p -> q", "!q"]), &base(&["!p", "!q", "p -> q"])).unwrap());
    }

    #[test]
    fn solver_cap_is_enforced() {
        let sentences: Vec<Formula> = (0..30).map(|i| atom(&format!("a{i}"))).collect();
        let b = BeliefBase::new(sentences);
        let err = entails(&b, &atom("a0")).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { .. }));
    }

    #[test]
    fn class_counts() {
        assert_eq!(semantic_classes(1).unwrap().len(), 4);
        assert_eq!(semantic_classes(2).unwrap().len(), 16);
        assert_eq!(semantic_classes(3).unwrap().len(), 256);
        assert!(matches!(
            semantic_classes(5),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn class_representatives_match_their_tables() {
        let u = Universe::default_of(2);
        for class in semantic_classes_over(&u).unwrap() {
            assert_eq!(
                models_mask(&class.representative, &u).unwrap(),
                class.truth_table
            );
        }
    }

    #[test]
    fn k1_classes_are_bottom_p_notp_top() {
        let u = Universe::default_of(1);
        let classes = semantic_classes_over(&u).unwrap();
        assert_eq!(classes[0].representative, Formula::Bottom);
        assert_eq!(classes[1].representative, not(atom("p")));
        assert_eq!(classes[2].representative, atom("p"));
        // the full class is the two-minterm DNF, not Top
        assert_eq!(classes[3].representative, or(not(atom("p")), atom("p")));
    }

    #[test]
    fn masks_agree_with_solver_on_samples() {
        let u = Universe::default_of(3);
        let b = base(&["p -> q", "q -> r"]);
        let goal = implies(atom("p"), atom("r"));
        let bm = base_models_mask(&b, &u).unwrap();
        let gm = models_mask(&goal, &u).unwrap();
        assert_eq!(bm & !gm, 0);
        assert_eq!(entails(&b, &goal).unwrap(), bm & !gm == 0);
    }

    #[test]
    fn universe_padding_keeps_existing_atoms() {
        let u = Universe::new(["q".to_string(), "zeta".to_string()]);
        let padded = u.padded_to(4).unwrap();
        assert_eq!(padded.len(), 4);
        assert!(padded.index_of("q").is_some());
        assert!(padded.index_of("zeta").is_some());
        assert!(padded.index_of("p").is_some());
        assert!(u.padded_to(1).is_err());
    }
}
