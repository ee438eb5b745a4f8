//! Finite accessibility rankings and the ordering they generate.
//!
//! A ranked base assigns every base sentence an integer rank in a contiguous
//! range `[1, n]`: larger means more accessible (more recently acquired).
//! The degree of accessibility extends the ranking to every sentence of the
//! language: tautologies sit at `n`, derived sentences inherit a max-min
//! value over their entailment sets, sentences decided negatively share the
//! degree of their negation, and undetermined sentences sit at `0`.

use std::fmt;

use crate::entailment::entailment_sets;
use crate::error::Error;
use crate::formula::{canonicalize, negate, Formula};
use crate::logic::{
    entails, is_consistent, is_tautology, semantic_classes_over, BeliefBase, Universe,
};

/// A consistent belief base paired with a finite accessibility ranking.
///
/// The ranking is total on the base and defined nowhere else; every rank in
/// `[1, n]` is the rank of at least one sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedBase {
    base: BeliefBase,
    ranks: Vec<u32>,
    max_rank: u32,
}

impl RankedBase {
    /// Validates the ranking invariants and the consistency of the base.
    pub fn new(base: BeliefBase, ranks: Vec<u32>) -> Result<Self, Error> {
        if ranks.len() != base.len() {
            return Err(Error::InvalidRanking(format!(
                "{} ranks for {} sentences",
                ranks.len(),
                base.len()
            )));
        }
        let max_rank = ranks.iter().copied().max().unwrap_or(0);
        if !base.is_empty() {
            if ranks.contains(&0) {
                return Err(Error::InvalidRanking("ranks must start at 1".into()));
            }
            for level in 1..=max_rank {
                if !ranks.contains(&level) {
                    return Err(Error::InvalidRanking(format!(
                        "rank {level} is unused; range must be contiguous [1, {max_rank}]"
                    )));
                }
            }
        }
        if !is_consistent(&base)? {
            return Err(Error::InconsistentBase);
        }
        Ok(RankedBase {
            base,
            ranks,
            max_rank,
        })
    }

    /// Builds a ranked base from `(formula, rank)` pairs, preserving order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Formula, u32)>) -> Result<Self, Error> {
        let (formulas, ranks): (Vec<Formula>, Vec<u32>) = pairs.into_iter().unzip();
        let base = BeliefBase::new(formulas.clone());
        if base.len() != ranks.len() {
            return Err(Error::InvalidRanking(
                "duplicate sentence in ranked base".into(),
            ));
        }
        RankedBase::new(base, ranks)
    }

    pub fn base(&self) -> &BeliefBase {
        &self.base
    }

    /// The maximum rank `n`.
    pub fn n(&self) -> u32 {
        self.max_rank
    }

    /// The rank of a base sentence, if it is one.
    pub fn rank_of(&self, f: &Formula) -> Option<u32> {
        self.base.position(f).map(|i| self.ranks[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Formula, u32)> {
        self.base.iter().zip(self.ranks.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Restricts the ranking to a subset of the base, compressing ranks to a
    /// contiguous range while preserving their relative order.
    pub fn restriction(&self, subset: &[Formula]) -> Result<RankedBase, Error> {
        let mut pairs: Vec<(Formula, u32)> = Vec::new();
        for f in subset {
            let c = canonicalize(f);
            match self.rank_of(&c) {
                Some(r) => pairs.push((c, r)),
                None => {
                    return Err(Error::InvalidRanking(format!(
                        "`{c}` is not a base sentence"
                    )))
                }
            }
        }
        let normalized = normalize_ranks(&pairs);
        RankedBase::from_pairs(normalized)
    }
}

/// Compresses arbitrary positive ranks to a contiguous `[1, n]` range,
/// preserving order and ties.
pub fn normalize_ranks(pairs: &[(Formula, u32)]) -> Vec<(Formula, u32)> {
    let mut levels: Vec<u32> = pairs.iter().map(|(_, r)| *r).collect();
    levels.sort_unstable();
    levels.dedup();
    pairs
        .iter()
        .map(|(f, r)| {
            let compressed = levels.iter().position(|l| l == r).expect("rank present") as u32 + 1;
            (f.clone(), compressed)
        })
        .collect()
}

/// The degree of accessibility of a sentence: an integer in `[0, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub u32);

impl Degree {
    pub fn value(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Computes the degree of accessibility of `p`.
///
/// Case order matters: tautologies rank `n` even when they happen to sit in
/// the base; any other base sentence keeps its assigned rank regardless of
/// what it is entailed by (base sentences are acquired independently, so the
/// derived max-min does not apply to them). Derived sentences take the
/// maximum over their entailment sets of the minimum member rank; sentences
/// whose negation is decided inherit the negation's degree; undetermined
/// sentences sit at `0`.
pub fn degree(rb: &RankedBase, p: &Formula) -> Result<Degree, Error> {
    let p = canonicalize(p);
    if is_tautology(&p)? {
        return Ok(Degree(rb.n()));
    }
    if let Some(rank) = rb.rank_of(&p) {
        return Ok(Degree(rank));
    }
    if entails(rb.base(), &p)? {
        return Ok(Degree(derived_degree(rb, &p)?));
    }
    // the negation ladder repeats the first three cases for !p; a
    // contradictory p lands in the tautology case of its negation
    let neg = negate(&p);
    if is_tautology(&neg)? {
        return Ok(Degree(rb.n()));
    }
    if let Some(rank) = rb.rank_of(&neg) {
        return Ok(Degree(rank));
    }
    if entails(rb.base(), &neg)? {
        return Ok(Degree(derived_degree(rb, &neg)?));
    }
    Ok(Degree(0))
}

/// The max-min value over all entailment sets of an entailed, non-tautological
/// sentence. Every such set is nonempty, so the inner minimum is defined.
fn derived_degree(rb: &RankedBase, p: &Formula) -> Result<u32, Error> {
    let sets = entailment_sets(rb.base(), p)?;
    let mut best = 0;
    for set in &sets {
        let min = set
            .members
            .iter()
            .map(|m| rb.rank_of(m).expect("entailment-set member is in the base"))
            .min()
            .expect("entailment set of a non-tautology is nonempty");
        best = best.max(min);
    }
    Ok(best)
}

/// The generated ordering: `p ≤ q` iff `deg(p) ≤ deg(q)`.
pub fn leq_af(rb: &RankedBase, p: &Formula, q: &Formula) -> Result<bool, Error> {
    Ok(degree(rb, p)? <= degree(rb, q)?)
}

/// A set is as accessible as its least accessible element.
pub fn set_accessibility(rb: &RankedBase, set: &[Formula]) -> Result<Degree, Error> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut min = u32::MAX;
    for f in set {
        min = min.min(degree(rb, f)?.value());
    }
    Ok(Degree(min))
}

/// The upward slice of the base at a sentence's accessibility level.
///
/// `base_slice` holds the base sentences of rank at least `level`; membership
/// of an arbitrary sentence in the full cut is `degree ≥ level` together with
/// entailment by the base. Level `n + 1` denotes the empty slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub level: u32,
    pub base_slice: Vec<Formula>,
}

/// The base slice at a given level.
pub fn slice_at_level(rb: &RankedBase, level: u32) -> Vec<Formula> {
    rb.iter()
        .filter(|(_, r)| *r >= level)
        .map(|(f, _)| f.clone())
        .collect()
}

/// Cuts the base at the degree of `a`. Errors if `a` is undetermined.
pub fn cut_at(rb: &RankedBase, a: &Formula) -> Result<Cut, Error> {
    let level = degree(rb, a)?.value();
    if level == 0 {
        return Err(Error::UndeterminedSentence(canonicalize(a).to_string()));
    }
    Ok(Cut {
        level,
        base_slice: slice_at_level(rb, level),
    })
}

/// Membership of an arbitrary sentence in the full cut over the belief set:
/// ranked at least at the cut level and believed.
pub fn cut_contains(rb: &RankedBase, cut: &Cut, f: &Formula) -> Result<bool, Error> {
    Ok(degree(rb, f)?.value() >= cut.level && entails(rb.base(), f)?)
}

/// A base sentence excluded from a cut yet entailed by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadCutWitness {
    pub culprit: Formula,
}

/// A cut is bad when its slice entails a base sentence ranked below the cut
/// level. Returns the first witness in base order, if any.
pub fn is_bad_cut(rb: &RankedBase, cut: &Cut) -> Result<Option<BadCutWitness>, Error> {
    let slice = BeliefBase::new(cut.base_slice.clone());
    for (f, rank) in rb.iter() {
        if rank >= cut.level {
            continue;
        }
        if entails(&slice, f)? {
            return Ok(Some(BadCutWitness { culprit: f.clone() }));
        }
    }
    Ok(None)
}

/// Outcome of one postulate check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulateResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl PostulateResult {
    fn pass(name: &'static str, checked: u64) -> Self {
        PostulateResult {
            name,
            passed: true,
            checked,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, checked: u64, witness: String) -> Self {
        PostulateResult {
            name,
            passed: false,
            checked,
            counterexample: Some(witness),
        }
    }
}

/// Report of the five accessibility postulates over a finite universe sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulateReport {
    pub universe: Vec<String>,
    pub transitivity: PostulateResult,
    pub totality: PostulateResult,
    pub negation_symmetry: PostulateResult,
    pub bottom_stratum: PostulateResult,
    pub derived_rank: PostulateResult,
}

impl PostulateReport {
    pub fn passed(&self) -> bool {
        self.transitivity.passed
            && self.totality.passed
            && self.negation_symmetry.passed
            && self.bottom_stratum.passed
            && self.derived_rank.passed
    }

    pub fn results(&self) -> [&PostulateResult; 5] {
        [
            &self.transitivity,
            &self.totality,
            &self.negation_symmetry,
            &self.bottom_stratum,
            &self.derived_rank,
        ]
    }
}

/// The pairwise `≤` relation over a set of representatives, stored as one
/// bitset row per element.
///
/// `check_postulates` builds it from the degree table; tests can corrupt
/// individual entries to confirm the sweeps detect violations.
#[derive(Debug, Clone)]
pub struct OrderRelation {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl OrderRelation {
    pub fn from_degrees(degrees: &[u32]) -> Self {
        let n = degrees.len();
        let blocks = n.div_ceil(64);
        let mut rows = vec![vec![0u64; blocks]; n];
        for a in 0..n {
            for b in 0..n {
                if degrees[a] <= degrees[b] {
                    rows[a][b / 64] |= 1u64 << (b % 64);
                }
            }
        }
        OrderRelation { n, rows }
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] & (1u64 << (b % 64)) != 0
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        if value {
            self.rows[a][b / 64] |= 1u64 << (b % 64);
        } else {
            self.rows[a][b / 64] &= !(1u64 << (b % 64));
        }
    }

    /// Sweeps every triple: for all `a ≤ b`, the row of `b` must be contained
    /// in the row of `a`. Returns the first violating triple.
    pub fn transitivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.holds(a, b) {
                    continue;
                }
                for (block, (&rb, &ra)) in
                    self.rows[b].iter().zip(self.rows[a].iter()).enumerate()
                {
                    let missing = rb & !ra;
                    if missing != 0 {
                        let c = block * 64 + missing.trailing_zeros() as usize;
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Sweeps every pair for comparability.
    pub fn totality_counterexample(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.holds(a, b) && !self.holds(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Verifies the five postulates of the generated ordering over all semantic
/// classes of a `k`-atom universe containing the base's atoms.
///
/// Transitivity and totality sweep all representative triples and pairs of
/// the degree table. Negation symmetry compares each representative with its
/// negation. The bottom stratum check renders the undetermined-iff-minimal
/// postulate over a finite universe as `degree = 0` iff neither the sentence
/// nor its negation is entailed. The derived-rank check recomputes, for every
/// entailed non-base representative, the max-min value from the entailment
/// sets and compares it with the reported degree.
pub fn check_postulates(rb: &RankedBase, k: usize) -> Result<PostulateReport, Error> {
    let universe = Universe::from_base(rb.base()).padded_to(k)?;
    let classes = semantic_classes_over(&universe)?;
    let reps: Vec<&Formula> = classes.iter().map(|c| &c.representative).collect();

    let mut degrees: Vec<u32> = Vec::with_capacity(reps.len());
    for rep in &reps {
        degrees.push(degree(rb, rep)?.value());
    }

    let relation = OrderRelation::from_degrees(&degrees);
    let transitivity = match relation.transitivity_counterexample() {
        None => PostulateResult::pass("A1 transitivity", (reps.len() as u64).pow(3)),
        Some((a, b, c)) => PostulateResult::fail(
            "A1 transitivity",
            (reps.len() as u64).pow(3),
            format!(
                "({}) <= ({}) and ({}) <= ({}) but not ({}) <= ({})",
                reps[a], reps[b], reps[b], reps[c], reps[a], reps[c]
            ),
        ),
    };

    let totality = match relation.totality_counterexample() {
        None => PostulateResult::pass("A2 totality", (reps.len() as u64).pow(2)),
        Some((a, b)) => PostulateResult::fail(
            "A2 totality",
            (reps.len() as u64).pow(2),
            format!("({}) and ({}) are incomparable", reps[a], reps[b]),
        ),
    };

    let mut negation_symmetry = PostulateResult::pass("A3 negation symmetry", reps.len() as u64);
    for (i, rep) in reps.iter().enumerate() {
        let neg = negate(rep);
        let dn = degree(rb, &neg)?.value();
        if dn != degrees[i] {
            negation_symmetry = PostulateResult::fail(
                "A3 negation symmetry",
                reps.len() as u64,
                format!("deg({rep}) = {} but deg({neg}) = {dn}", degrees[i]),
            );
            break;
        }
    }

    let mut bottom_stratum = PostulateResult::pass("A4 bottom stratum", reps.len() as u64);
    for (i, rep) in reps.iter().enumerate() {
        let pos = entails(rb.base(), rep)?;
        let neg = entails(rb.base(), &negate(rep))?;
        let undetermined = !pos && !neg;
        if undetermined != (degrees[i] == 0) {
            bottom_stratum = PostulateResult::fail(
                "A4 bottom stratum",
                reps.len() as u64,
                format!(
                    "{rep}: undetermined = {undetermined} but degree = {}",
                    degrees[i]
                ),
            );
            break;
        }
    }

    let mut derived_checked = 0;
    let mut derived_rank = PostulateResult::pass("A5 derived rank", 0);
    for (i, rep) in reps.iter().enumerate() {
        if rb.base().contains(rep) || !entails(rb.base(), rep)? || is_tautology(rep)? {
            continue;
        }
        derived_checked += 1;
        let sets = entailment_sets(rb.base(), rep)?;
        let expected = sets
            .iter()
            .map(|s| {
                set_accessibility(rb, &s.members)
                    .map(|d| d.value())
                    .expect("derived entailment set is nonempty")
            })
            .max()
            .expect("entailed non-tautology has an entailment set");
        if expected != degrees[i] {
            derived_rank = PostulateResult::fail(
                "A5 derived rank",
                derived_checked,
                format!("{rep}: max-min = {expected} but degree = {}", degrees[i]),
            );
            break;
        }
    }
    if derived_rank.passed {
        derived_rank.checked = derived_checked;
    }

    Ok(PostulateReport {
        universe: universe.atoms().to_vec(),
        transitivity,
        totality,
        negation_symmetry,
        bottom_stratum,
        derived_rank,
    })
}
