//! Contexts: sub-bases sufficient for integrating evidence and deriving a
//! goal, their construction from entailment sets, effort-based selection,
//! and the verifiers for the context conditions.
//!
//! Verification semantics follow the base reformulation of the context
//! conditions: condition (1) compares the retracted base sentences of the
//! whole base and of the context slice, and condition (2) compares model
//! sets after reattaching the base sentences outside the slice. The closed
//! belief sets these represent are recovered by entailment queries.

use std::cmp::Ordering;

use crate::accessibility::{set_accessibility, slice_at_level, Degree, RankedBase};
use crate::entailment::{entailment_sets, EntailmentSet};
use crate::error::Error;
use crate::formula::{canonicalize, negate, Formula};
use crate::logic::{
    base_models_mask, entails, is_consistent, models_mask, semantic_classes_over, BeliefBase,
    Universe,
};
use crate::revision::{contract_selected, revise, SelectionPolicy};

/// The inquirer's objective: a disjunction of basic goals whose presupposition
/// is believed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Desideratum {
    basic_goals: Vec<Formula>,
    presupposition: Formula,
}

impl Desideratum {
    pub fn new(basic_goals: impl IntoIterator<Item = Formula>) -> Result<Self, Error> {
        let basic_goals: Vec<Formula> = basic_goals.into_iter().map(|g| canonicalize(&g)).collect();
        if basic_goals.is_empty() {
            return Err(Error::EmptyDesideratum);
        }
        let mut it = basic_goals.iter().cloned();
        let first = it.next().expect("nonempty");
        let presupposition = it.fold(first, crate::formula::or);
        Ok(Desideratum {
            basic_goals,
            presupposition,
        })
    }

    pub fn basic_goals(&self) -> &[Formula] {
        &self.basic_goals
    }

    pub fn presupposition(&self) -> &Formula {
        &self.presupposition
    }

    /// The presupposition must be one of the beliefs.
    pub fn holds_in(&self, base: &BeliefBase) -> Result<bool, Error> {
        entails(base, &self.presupposition)
    }

    /// All candidate goals: single basic goals and disjunctions of at most
    /// `n - 1` of them, basic-first, then fewest disjuncts, then index order.
    pub fn candidate_goals(&self) -> Vec<Goal> {
        let n = self.basic_goals.len();
        let max_size = if n == 1 { 1 } else { n - 1 };
        let mut out = Vec::new();
        for size in 1..=max_size {
            for indices in combinations(n, size) {
                out.push(Goal::from_disjuncts(
                    indices.iter().map(|&i| self.basic_goals[i].clone()),
                ));
            }
        }
        out
    }
}

/// Size-`k` index combinations of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            go(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A goal: one basic goal or a disjunction of several.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Goal {
    pub formula: Formula,
    pub disjuncts: Vec<Formula>,
}

impl Goal {
    /// Wraps a bare formula as a basic goal.
    pub fn basic(f: &Formula) -> Goal {
        let c = canonicalize(f);
        Goal {
            formula: c.clone(),
            disjuncts: vec![c],
        }
    }

    fn from_disjuncts(disjuncts: impl IntoIterator<Item = Formula>) -> Goal {
        let disjuncts: Vec<Formula> = disjuncts.into_iter().collect();
        let mut it = disjuncts.iter().cloned();
        let first = it.next().expect("goal has at least one disjunct");
        let formula = it.fold(first, crate::formula::or);
        Goal { formula, disjuncts }
    }

    pub fn is_basic(&self) -> bool {
        self.disjuncts.len() == 1
    }
}

/// A context: the sub-base relevant to integrating `evidence` and deriving
/// `goal`.
///
/// `neg_a_part` collects every entailment set of the evidence's negation;
/// `goal_part` is a set that together with the evidence minimally entails the
/// goal; `neg_goal_part` carries a derivation of the goal's negation when the
/// negation is believed. `base_slice` contains all three parts; the cut-based
/// route may put further sentences in the slice beyond the named parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub neg_a_part: Vec<Formula>,
    pub goal_part: Vec<Formula>,
    pub neg_goal_part: Vec<Formula>,
    pub base_slice: Vec<Formula>,
    pub evidence: Formula,
    pub goal: Goal,
}

impl Context {
    pub fn slice_base(&self) -> BeliefBase {
        BeliefBase::new(self.base_slice.clone())
    }

    /// The processing effort of this context.
    pub fn effort(&self, rb: &RankedBase) -> Result<EffortMeasure, Error> {
        let accessibility = if self.base_slice.is_empty() {
            None
        } else {
            Some(set_accessibility(rb, &self.base_slice)?)
        };
        Ok(EffortMeasure {
            accessibility,
            size: self.base_slice.len(),
        })
    }
}

/// Effort of accessing a context: its accessibility (the degree of its least
/// accessible sentence; an empty context costs nothing and ranks above all),
/// then its size. Lower effort = higher accessibility, then fewer sentences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EffortMeasure {
    pub accessibility: Option<Degree>,
    pub size: usize,
}

impl EffortMeasure {
    /// Preference order: `Greater` means preferred.
    pub fn preference(&self, other: &EffortMeasure) -> Ordering {
        let key = |m: &EffortMeasure| m.accessibility.map_or(u64::MAX, |d| d.value() as u64);
        key(self)
            .cmp(&key(other))
            .then_with(|| other.size.cmp(&self.size))
    }
}


/// All goals from the desideratum that the revision makes newly derivable:
/// not believed before, entailed afterwards.
pub fn achievable_goals(
    rb: &RankedBase,
    a: &Formula,
    d: &Desideratum,
    policy: SelectionPolicy,
) -> Result<Vec<Goal>, Error> {
    let a = canonicalize(a);
    if !is_consistent(&BeliefBase::new([a.clone()]))? {
        return Err(Error::InconsistentEvidence(a.to_string()));
    }
    let outcome = revise(rb, &a, policy)?;
    let mut out = Vec::new();
    for goal in d.candidate_goals() {
        if entails(rb.base(), &goal.formula)? {
            continue;
        }
        if entails(&outcome.new_base, &goal.formula)? {
            out.push(goal);
        }
    }
    Ok(out)
}

/// Orders candidate entailment sets the same way everywhere a witnessing
/// set is needed: maximal accessibility first, then smallest cardinality,
/// then base order.
fn pick_best_set<'a>(
    rb: &RankedBase,
    candidates: &'a [(Vec<Formula>, &EntailmentSet)],
) -> Result<Option<&'a Vec<Formula>>, Error> {
    let mut best: Option<(&Vec<Formula>, u64, usize, Vec<usize>)> = None;
    for (stripped, _) in candidates {
        let acc = if stripped.is_empty() {
            u64::MAX
        } else {
            set_accessibility(rb, stripped)?.value() as u64
        };
        let positions: Vec<usize> = stripped
            .iter()
            .map(|f| rb.base().position(f).unwrap_or(usize::MAX))
            .collect();
        let better = match &best {
            None => true,
            Some((_, bacc, bsize, bpos)) => acc
                .cmp(bacc)
                .then_with(|| bsize.cmp(&stripped.len()))
                .then_with(|| bpos.cmp(&positions))
                .is_gt(),
        };
        if better {
            best = Some((stripped, acc, stripped.len(), positions));
        }
    }
    Ok(best.map(|(s, _, _, _)| s))
}

/// Constructs the entailment-set context for deriving `g` from revising with
/// `a`.
///
/// The negation part is the union of all entailment sets of the evidence's
/// negation. The goal part is the most accessible, smallest set that together
/// with the evidence minimally entails the goal inside the revised base. When
/// the goal's negation is believed, a derivation of it joins the slice so the
/// context decides the goal the same way the whole base does.
pub fn construct_context(
    rb: &RankedBase,
    a: &Formula,
    g: &Goal,
    policy: SelectionPolicy,
) -> Result<Context, Error> {
    let a = canonicalize(a);
    if entails(rb.base(), &a)? {
        return Err(Error::AlreadyBelieved(a.to_string()));
    }
    if entails(rb.base(), &g.formula)? {
        return Err(Error::GoalAlreadyBelieved(g.formula.to_string()));
    }
    let outcome = revise(rb, &a, policy)?;
    if !entails(&outcome.new_base, &g.formula)? {
        return Err(Error::NoGoalDerivation {
            goal: g.formula.to_string(),
            evidence: a.to_string(),
        });
    }

    let neg_a_sets = entailment_sets(rb.base(), &negate(&a))?;
    let neg_a_part: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| neg_a_sets.iter().any(|s| s.members.contains(f)))
        .cloned()
        .collect();

    // X_G: strip the evidence from each minimal goal derivation in the
    // revised base; pick the best witnessing set
    let goal_sets = entailment_sets(&outcome.new_base, &g.formula)?;
    let candidates: Vec<(Vec<Formula>, &EntailmentSet)> = goal_sets
        .iter()
        .filter(|s| s.members.contains(&a))
        .map(|s| {
            let stripped: Vec<Formula> =
                s.members.iter().filter(|m| **m != a).cloned().collect();
            (stripped, s)
        })
        .collect();
    let goal_part: Vec<Formula> = match pick_best_set(rb, &candidates)? {
        Some(set) => set.clone(),
        None => {
            return Err(Error::NoGoalDerivation {
                goal: g.formula.to_string(),
                evidence: a.to_string(),
            })
        }
    };

    let mut slice: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| neg_a_part.contains(f) || goal_part.contains(f))
        .cloned()
        .collect();

    // believed negated goal: the context must decide the goal negatively too
    let mut neg_goal_part: Vec<Formula> = Vec::new();
    let neg_g = negate(&g.formula);
    if entails(rb.base(), &neg_g)? && !entails(&BeliefBase::new(slice.clone()), &neg_g)? {
        let neg_g_sets = entailment_sets(rb.base(), &neg_g)?;
        let candidates: Vec<(Vec<Formula>, &EntailmentSet)> = neg_g_sets
            .iter()
            .map(|s| (s.members.clone(), s))
            .collect();
        if let Some(set) = pick_best_set(rb, &candidates)? {
            neg_goal_part = set.clone();
            slice = rb
                .base()
                .iter()
                .filter(|f| {
                    neg_a_part.contains(f)
                        || goal_part.contains(f)
                        || neg_goal_part.contains(f)
                })
                .cloned()
                .collect();
        }
    }

    Ok(Context {
        neg_a_part,
        goal_part,
        neg_goal_part,
        base_slice: slice,
        evidence: a,
        goal: g.clone(),
    })
}

/// Flags for the context conditions on one (base, evidence, goal, context)
/// instance. Conditional flags are true when vacuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub condition1: bool,
    pub condition2: bool,
    pub non_empty_contracted_context: bool,
    pub goal_derived: bool,
    pub neg_goal_contained: bool,
    pub counterexamples: Vec<String>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.condition1
            && self.condition2
            && self.non_empty_contracted_context
            && self.goal_derived
            && self.neg_goal_contained
    }
}

/// Verifies the context conditions.
///
/// Condition (1): the contraction by the evidence's negation retracts exactly
/// the same base sentences from the slice as from the whole base. Condition
/// (2): revising inside the context and reattaching the sentences outside it
/// is model-equivalent to whole-base revision over the `k`-atom universe.
/// Then the conditional requirements: a nonempty contracted slice unless the
/// evidence alone yields the goal, goal derivation inside the revised
/// context, and containment of a believed negated goal.
pub fn verify_theorem1(
    rb: &RankedBase,
    a: &Formula,
    ctx: &Context,
    policy: SelectionPolicy,
    k: usize,
) -> Result<Theorem1Report, Error> {
    let a = canonicalize(a);
    let g = &ctx.goal.formula;
    let mut atoms = rb.base().atoms();
    atoms.extend(a.atoms());
    atoms.extend(g.atoms());
    let universe = Universe::new(atoms).padded_to(k)?;

    let slice_base = ctx.slice_base();
    let slice_rb = rb.restriction(&ctx.base_slice)?;
    let not_a = negate(&a);
    let mut counterexamples = Vec::new();

    // condition (1): equal retracted base sentences
    let (whole_contracted, _) = contract_selected(rb, &not_a, policy)?;
    let (slice_contracted, _) = contract_selected(&slice_rb, &not_a, policy)?;
    let whole_retracted: Vec<&Formula> = rb
        .base()
        .iter()
        .filter(|f| !whole_contracted.contains(f))
        .collect();
    let slice_retracted: Vec<&Formula> = slice_base
        .iter()
        .filter(|f| !slice_contracted.contains(f))
        .collect();
    let mut condition1 = true;
    for f in &whole_retracted {
        if !slice_retracted.contains(f) {
            condition1 = false;
            counterexamples.push(format!("retracted from the base but not the context: {f}"));
        }
    }
    for f in &slice_retracted {
        if !whole_retracted.contains(f) {
            condition1 = false;
            counterexamples.push(format!("retracted from the context but not the base: {f}"));
        }
    }

    // condition (2): models(K*_A) = models(K'*_A) ∩ models(base \ slice)
    let whole_outcome = revise(rb, &a, policy)?;
    let ctx_outcome = revise(&slice_rb, &a, policy)?;
    let lhs = base_models_mask(&whole_outcome.new_base, &universe)?;
    let mut rhs = base_models_mask(&ctx_outcome.new_base, &universe)?;
    for f in rb.base().iter() {
        if !slice_base.contains(f) {
            rhs &= models_mask(f, &universe)?;
        }
    }
    let condition2 = lhs == rhs;
    if !condition2 {
        let diff = lhs ^ rhs;
        let v = diff.trailing_zeros() as u64;
        counterexamples.push(format!(
            "models differ at valuation {}",
            universe.valuation(v)
        ));
    }

    // conditional requirements
    let evidence_alone = entails(&BeliefBase::new([a.clone()]), g)?;
    let non_empty_contracted_context = evidence_alone || !slice_contracted.is_empty();
    if !non_empty_contracted_context {
        counterexamples.push("contracted context is empty at base level".into());
    }

    let goal_derived = entails(&ctx_outcome.new_base, g)?;
    if !goal_derived {
        counterexamples.push(format!("goal {g} not derived inside the context"));
    }

    let neg_g = negate(g);
    let neg_goal_contained =
        !entails(rb.base(), &neg_g)? || entails(&slice_base, &neg_g)?;
    if !neg_goal_contained {
        counterexamples.push(format!("believed {neg_g} missing from the context"));
    }

    Ok(Theorem1Report {
        condition1,
        condition2,
        non_empty_contracted_context,
        goal_derived,
        neg_goal_contained,
        counterexamples,
    })
}

/// Flags for the monotony corollary on a context satisfying condition (1).
///
/// `revision_subset` compares the revision pair produced by the same policy
/// and evidence as the contraction (the Levi reading); the literal variant
/// revising both by the negation is reported alongside, skipped when the
/// negation is contradictory. `non_derivability` is skipped when the negation
/// is a tautology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corollary1Report {
    pub monotony: bool,
    pub revision_subset: bool,
    pub revision_subset_literal: Option<bool>,
    pub non_derivability: Option<bool>,
    pub counterexamples: Vec<String>,
}

impl Corollary1Report {
    pub fn passed(&self) -> bool {
        self.monotony && self.revision_subset && self.non_derivability.unwrap_or(true)
    }
}

/// Verifies the monotony corollary: the context's contraction and revision
/// stay inside the whole base's, and the contracted context together with the
/// sentences outside it cannot derive the evidence's negation.
pub fn verify_corollary1(
    rb: &RankedBase,
    a: &Formula,
    ctx: &Context,
    policy: SelectionPolicy,
    k: usize,
) -> Result<Corollary1Report, Error> {
    let a = canonicalize(a);
    let mut atoms = rb.base().atoms();
    atoms.extend(a.atoms());
    atoms.extend(ctx.goal.formula.atoms());
    let universe = Universe::new(atoms).padded_to(k)?;
    let classes = semantic_classes_over(&universe)?;

    let slice_base = ctx.slice_base();
    let slice_rb = rb.restriction(&ctx.base_slice)?;
    let not_a = negate(&a);
    let mut counterexamples = Vec::new();

    let (whole_contracted, _) = contract_selected(rb, &not_a, policy)?;
    let (slice_contracted, _) = contract_selected(&slice_rb, &not_a, policy)?;

    // a)1 monotony: Cn(slice⁻) ⊆ Cn(base⁻)
    let whole_mask = base_models_mask(&whole_contracted, &universe)?;
    let slice_mask = base_models_mask(&slice_contracted, &universe)?;
    let monotony = whole_mask & !slice_mask == 0;
    if !monotony {
        for class in &classes {
            let in_slice = slice_mask & !class.truth_table == 0;
            let in_whole = whole_mask & !class.truth_table == 0;
            if in_slice && !in_whole {
                counterexamples.push(format!(
                    "contracted context entails {} but the contracted base does not",
                    class.representative
                ));
                break;
            }
        }
    }

    // a)2, Levi reading: revising both by the evidence
    let whole_rev = revise(rb, &a, policy)?;
    let slice_rev = revise(&slice_rb, &a, policy)?;
    let whole_rev_mask = base_models_mask(&whole_rev.new_base, &universe)?;
    let slice_rev_mask = base_models_mask(&slice_rev.new_base, &universe)?;
    let revision_subset = whole_rev_mask & !slice_rev_mask == 0;
    if !revision_subset {
        counterexamples.push("revised context is not contained in the revised base".into());
    }

    // a)2, literal reading: revising both by the negation
    let revision_subset_literal = if is_consistent(&BeliefBase::new([not_a.clone()]))? {
        let whole_neg = revise(rb, &not_a, policy)?;
        let slice_neg = revise(&slice_rb, &not_a, policy)?;
        let wm = base_models_mask(&whole_neg.new_base, &universe)?;
        let sm = base_models_mask(&slice_neg.new_base, &universe)?;
        Some(wm & !sm == 0)
    } else {
        None
    };

    // b) the contracted context plus the outside sentences cannot derive ¬a
    let non_derivability = if crate::logic::is_tautology(&not_a)? {
        None
    } else {
        let mut union: Vec<Formula> = slice_contracted.sentences().to_vec();
        for f in rb.base().iter() {
            if !slice_base.contains(f) {
                union.push(f.clone());
            }
        }
        let holds = !entails(&BeliefBase::new(union), &not_a)?;
        if !holds {
            counterexamples
                .push("contracted context with outside sentences derives the negation".into());
        }
        Some(holds)
    };

    Ok(Corollary1Report {
        monotony,
        revision_subset,
        revision_subset_literal,
        non_derivability,
        counterexamples,
    })
}

/// Picks the candidate with the best effort: highest accessibility, then
/// smallest slice, with deterministic slice-order and part tiebreaks. The
/// result does not depend on the order of the candidate list.
pub fn select_optimal(rb: &RankedBase, candidates: &[Context]) -> Result<Context, Error> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let mut best: Option<(&Context, EffortMeasure, Vec<usize>, String)> = None;
    for ctx in candidates {
        let effort = ctx.effort(rb)?;
        let positions: Vec<usize> = ctx
            .base_slice
            .iter()
            .map(|f| rb.base().position(f).unwrap_or(usize::MAX))
            .collect();
        let parts_key = format!(
            "{:?}|{:?}|{:?}",
            ctx.neg_a_part, ctx.goal_part, ctx.neg_goal_part
        );
        let better = match &best {
            None => true,
            Some((_, beffort, bpos, bparts)) => effort
                .preference(beffort)
                .then_with(|| bpos.cmp(&positions))
                .then_with(|| bparts.cmp(&parts_key))
                .is_gt(),
        };
        if better {
            best = Some((ctx, effort, positions, parts_key));
        }
    }
    Ok(best.expect("nonempty candidates").0.clone())
}

/// Builds a context by scanning cuts from the most accessible level down.
///
/// At each level the slice is closed at base level (a bad cut pulls in the
/// sentences it entails) and the induced context is verified; the first
/// passing slice wins. Falls back to the entailment-set construction when no
/// cut qualifies.
pub fn context_from_cut(
    rb: &RankedBase,
    a: &Formula,
    g: &Goal,
    policy: SelectionPolicy,
    k: usize,
) -> Result<Context, Error> {
    let a = canonicalize(a);
    if entails(rb.base(), &a)? {
        return Err(Error::AlreadyBelieved(a.to_string()));
    }
    let eq3 = construct_context(rb, &a, g, policy)?;

    let neg_a_sets = entailment_sets(rb.base(), &negate(&a))?;
    let neg_a_union: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| neg_a_sets.iter().any(|s| s.members.contains(f)))
        .cloned()
        .collect();

    for level in (1..=rb.n()).rev() {
        let mut slice = slice_at_level(rb, level);
        // close at base level: a bad cut entails excluded base sentences
        loop {
            let slice_base = BeliefBase::new(slice.clone());
            let mut extended = false;
            for f in rb.base().iter() {
                if !slice.contains(f) && entails(&slice_base, f)? {
                    slice.push(f.clone());
                    extended = true;
                }
            }
            if !extended {
                break;
            }
        }
        let slice: Vec<Formula> = rb
            .base()
            .iter()
            .filter(|f| slice.contains(f))
            .cloned()
            .collect();

        let candidate = match induced_context(rb, &a, g, policy, &slice, &neg_a_union)? {
            Some(ctx) => ctx,
            None => continue,
        };
        let report = verify_theorem1(rb, &a, &candidate, policy, k)?;
        if report.passed() {
            return Ok(candidate);
        }
    }
    Ok(eq3)
}

/// Splits a cut slice into context parts, if the slice supports a goal
/// derivation.
fn induced_context(
    rb: &RankedBase,
    a: &Formula,
    g: &Goal,
    policy: SelectionPolicy,
    slice: &[Formula],
    neg_a_union: &[Formula],
) -> Result<Option<Context>, Error> {
    let slice_rb = rb.restriction(slice)?;
    let outcome = revise(&slice_rb, a, policy)?;
    if !entails(&outcome.new_base, &g.formula)? {
        return Ok(None);
    }
    let goal_sets = entailment_sets(&outcome.new_base, &g.formula)?;
    let candidates: Vec<(Vec<Formula>, &EntailmentSet)> = goal_sets
        .iter()
        .filter(|s| s.members.contains(a))
        .map(|s| {
            let stripped: Vec<Formula> = s.members.iter().filter(|m| *m != a).cloned().collect();
            (stripped, s)
        })
        .collect();
    let goal_part = match pick_best_set(rb, &candidates)? {
        Some(set) => set.clone(),
        None => return Ok(None),
    };
    let neg_a_part: Vec<Formula> = slice
        .iter()
        .filter(|f| neg_a_union.contains(f))
        .cloned()
        .collect();
    let neg_g = negate(&g.formula);
    let neg_goal_part: Vec<Formula> = if entails(rb.base(), &neg_g)? {
        let sets = entailment_sets(&BeliefBase::new(slice.to_vec()), &neg_g)?;
        let candidates: Vec<(Vec<Formula>, &EntailmentSet)> =
            sets.iter().map(|s| (s.members.clone(), s)).collect();
        pick_best_set(rb, &candidates)?.cloned().unwrap_or_default()
    } else {
        Vec::new()
    };
    Ok(Some(Context {
        neg_a_part,
        goal_part,
        neg_goal_part,
        base_slice: slice.to_vec(),
        evidence: canonicalize(a),
        goal: g.clone(),
    }))
}

/// Reattaches the outside of a context: the disjunction-free remainder used
/// by the equivalence checks.
pub fn outside_sentences(rb: &RankedBase, ctx: &Context) -> Vec<Formula> {
    rb.base()
        .iter()
        .filter(|f| !ctx.base_slice.contains(f))
        .cloned()
        .collect()
}

/// Convenience: the model-equivalence half of condition (2) for external
/// callers that only need the boolean.
pub fn equivalent_effects(
    rb: &RankedBase,
    a: &Formula,
    ctx: &Context,
    policy: SelectionPolicy,
    k: usize,
) -> Result<bool, Error> {
    let report = verify_theorem1(rb, a, ctx, policy, k)?;
    Ok(report.condition2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::atom;
    use crate::parse::parse;

    fn rb(pairs: &[(&str, u32)]) -> RankedBase {
        RankedBase::from_pairs(pairs.iter().map(|(t, r)| (parse(t).unwrap(), *r))).unwrap()
    }

    fn fm(t: &str) -> Formula {
        parse(t).unwrap()
    }

    fn texts(fs: &[Formula]) -> Vec<String> {
        fs.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn desideratum_enumeration_and_order() {
        let d = Desideratum::new([fm("g1"), fm("g2"), fm("g3")]).unwrap();
        assert_eq!(d.presupposition().to_string(), "g1 | g2 | g3");
        let goals = d.candidate_goals();
        let shapes: Vec<(usize, String)> = goals
            .iter()
            .map(|g| (g.disjuncts.len(), g.formula.to_string()))
            .collect();
        assert_eq!(
            shapes,
            vec![
                (1, "g1".to_string()),
                (1, "g2".to_string()),
                (1, "g3".to_string()),
                (2, "g1 | g2".to_string()),
                (2, "g1 | g3".to_string()),
                (2, "g2 | g3".to_string()),
            ]
        );
    }

    #[test]
    fn two_goal_desideratum_has_no_proper_disjunctions() {
        let d = Desideratum::new([fm("!p"), fm("p")]).unwrap();
        assert_eq!(d.candidate_goals().len(), 2);
    }

    #[test]
    fn achievable_goals_minimal_case() {
        let r = rb(&[("p", 1), ("p -> q", 2)]);
        let d = Desideratum::new([fm("!p"), fm("p")]).unwrap();
        let goals =
            achievable_goals(&r, &fm("!q"), &d, SelectionPolicy::default()).unwrap();
        assert_eq!(goals.len(), 1);
        assert_eq!(goals[0].formula, fm("!p"));
    }

    #[test]
    fn no_goals_when_evidence_already_believed() {
        let r = rb(&[("p", 1), ("p -> q", 2)]);
        let d = Desideratum::new([fm("!p"), fm("p")]).unwrap();
        let goals = achievable_goals(&r, &fm("q"), &d, SelectionPolicy::default()).unwrap();
        assert!(goals.is_empty());
    }

    #[test]
    fn no_goals_when_all_already_believed() {
        let r = rb(&[("p", 1), ("p -> q", 2)]);
        let d = Desideratum::new([fm("p"), fm("q")]).unwrap();
        let goals = achievable_goals(&r, &fm("s"), &d, SelectionPolicy::default()).unwrap();
        assert!(goals.is_empty());
    }

    #[test]
    fn running_example_context() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let ctx = construct_context(&r, &fm("!q"), &g, SelectionPolicy::default()).unwrap();
        assert_eq!(texts(&ctx.neg_a_part), vec!["p", "p -> q"]);
        assert_eq!(texts(&ctx.goal_part), vec!["p -> q"]);
        assert_eq!(texts(&ctx.base_slice), vec!["p", "p -> q"]);
        assert!(!ctx.base_slice.contains(&atom("s")));
    }

    #[test]
    fn empty_negation_part_when_negation_unbelieved() {
        let r = rb(&[("s", 1), ("s -> t", 2)]);
        let g = Goal::basic(&fm("t & u"));
        // u is not decided; !u is not entailed, so nothing anchors retraction
        let ctx = construct_context(&r, &fm("u"), &g, SelectionPolicy::default()).unwrap();
        assert!(ctx.neg_a_part.is_empty());
        assert_eq!(texts(&ctx.base_slice), vec!["s", "s -> t"]);
        assert_eq!(ctx.base_slice, ctx.goal_part);
    }

    #[test]
    fn already_believed_evidence_is_an_error() {
        let r = rb(&[("p", 1)]);
        let g = Goal::basic(&fm("q"));
        assert!(matches!(
            construct_context(&r, &fm("p"), &g, SelectionPolicy::default()),
            Err(Error::AlreadyBelieved(_))
        ));
    }

    #[test]
    fn running_example_verifies() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let ctx = construct_context(&r, &a, &g, SelectionPolicy::default()).unwrap();
        let report = verify_theorem1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(report.passed(), "{report:?}");

        let corollary = verify_corollary1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(corollary.passed(), "{corollary:?}");
        assert_eq!(corollary.revision_subset_literal, Some(true));
    }

    #[test]
    fn whole_base_context_verifies_trivially() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let ctx = Context {
            neg_a_part: vec![fm("p"), fm("p -> q")],
            goal_part: vec![fm("p -> q")],
            neg_goal_part: vec![],
            base_slice: r.base().sentences().to_vec(),
            evidence: a.clone(),
            goal: g,
        };
        let report = verify_theorem1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn stripped_context_fails_condition_one() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let ctx = Context {
            neg_a_part: vec![fm("p -> q")],
            goal_part: vec![fm("p -> q")],
            neg_goal_part: vec![],
            base_slice: vec![fm("p -> q")],
            evidence: a.clone(),
            goal: g,
        };
        let report = verify_theorem1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(!report.condition1);
        assert!(!report.counterexamples.is_empty());
    }

    #[test]
    fn optimal_selection_prefers_accessibility_then_size() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let small = construct_context(&r, &a, &g, SelectionPolicy::default()).unwrap();
        let whole = Context {
            base_slice: r.base().sentences().to_vec(),
            ..small.clone()
        };
        let picked = select_optimal(&r, &[whole.clone(), small.clone()]).unwrap();
        assert_eq!(picked.base_slice, small.base_slice);
        let picked_flipped = select_optimal(&r, &[small.clone(), whole]).unwrap();
        assert_eq!(picked_flipped.base_slice, small.base_slice);
    }

    #[test]
    fn cut_route_falls_back_to_construction() {
        let r = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let ctx = context_from_cut(&r, &a, &g, SelectionPolicy::default(), 3).unwrap();
        // level-2 cut {p -> q} fails condition (1); level-1 cut is the base
        assert_eq!(ctx.base_slice.len(), 3);
        let eq3 = construct_context(&r, &a, &g, SelectionPolicy::default()).unwrap();
        let picked = select_optimal(&r, &[ctx, eq3.clone()]).unwrap();
        assert_eq!(picked.base_slice, eq3.base_slice);
    }

    #[test]
    fn cut_route_extends_bad_cuts_before_checking() {
        // the level-3 cut {p & q} is bad (it entails the excluded p); the
        // closed slice {p & q, p} qualifies while s stays outside
        let r = rb(&[("p & q", 3), ("p", 2), ("s", 1)]);
        let g = Goal::basic(&fm("p & !q"));
        let a = fm("!q");
        let ctx = context_from_cut(&r, &a, &g, SelectionPolicy::default(), 3).unwrap();
        assert_eq!(texts(&ctx.base_slice), vec!["p & q", "p"]);
    }

    #[test]
    fn cut_route_returns_top_stratum_when_it_suffices() {
        let r = rb(&[("s", 1), ("p", 2), ("p -> q", 3)]);
        let g = Goal::basic(&fm("!p"));
        let a = fm("!q");
        let ctx = context_from_cut(&r, &a, &g, SelectionPolicy::default(), 3).unwrap();
        assert_eq!(texts(&ctx.base_slice), vec!["p", "p -> q"]);
    }

    #[test]
    fn believed_negated_goal_joins_the_slice() {
        // base believes !g via a derivation unrelated to the evidence
        let r = rb(&[("g1 -> t", 1), ("!t", 2), ("u", 1)]);
        let g = Goal::basic(&fm("g1"));
        let a = fm("g1");
        // evidence g1 is not believed (base entails !g1), goal equals evidence
        let ctx = construct_context(&r, &a, &g, SelectionPolicy::default()).unwrap();
        let slice_base = ctx.slice_base();
        assert!(entails(&slice_base, &fm("!g1")).unwrap());
        let report = verify_theorem1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn augmentation_restores_the_negated_goal() {
        // the base believes !g1 through sentences the evidence's negation
        // never touches; without the augmentation the slice would leave the
        // believed !g1 behind
        let r = rb(&[("!g1 | !h", 1), ("h", 1), ("!h -> g1", 1)]);
        let g = Goal::basic(&fm("g1"));
        let a = fm("!h");
        let ctx = construct_context(&r, &a, &g, SelectionPolicy::default()).unwrap();
        assert!(!ctx.neg_goal_part.is_empty());
        assert!(entails(&ctx.slice_base(), &fm("!g1")).unwrap());
        let report = verify_theorem1(&r, &a, &ctx, SelectionPolicy::default(), 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn empty_candidates_error() {
        let r = rb(&[("p", 1)]);
        assert!(matches!(
            select_optimal(&r, &[]),
            Err(Error::EmptyCandidates)
        ));
    }
}
