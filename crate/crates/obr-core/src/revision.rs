//! Base change operations: expansion, remainders, accessibility-guided
//! partial meet contraction, revision via the Levi identity, and the
//! post-revision ranking adjustment.

use crate::accessibility::{degree, normalize_ranks, Degree, RankedBase};
use crate::entailment::MAX_ENUMERATION_BASE;
use crate::error::Error;
use crate::formula::{canonicalize, negate, Formula};
use crate::logic::{
    entails, equivalent, is_consistent, is_tautology, semantic_classes_over, BeliefBase, Universe,
};

/// A maximal subset of a base that fails to entail a target sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remainder {
    pub sentences: Vec<Formula>,
}

impl Remainder {
    pub fn as_base(&self) -> BeliefBase {
        BeliefBase::new(self.sentences.clone())
    }
}

/// How contraction chooses among remainders.
///
/// The default selects the remainders whose retracted complement is least
/// accessible and intersects them: contraction gives up the cheapest-to-lose
/// sentences. Measuring the complement rather than the remainder itself keeps
/// the choice independent of sentences no remainder could lose, which is what
/// makes contraction inside a context agree with whole-base contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionPolicy {
    #[default]
    AccessibilityPartialMeet,
    FullMeet,
    MaxichoiceFirst,
}

impl SelectionPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            SelectionPolicy::AccessibilityPartialMeet => "accessibility-partial-meet",
            SelectionPolicy::FullMeet => "full-meet",
            SelectionPolicy::MaxichoiceFirst => "maxichoice-first",
        }
    }

    pub fn parse(name: &str) -> Option<SelectionPolicy> {
        match name {
            "accessibility-partial-meet" | "access" | "partial-meet" => {
                Some(SelectionPolicy::AccessibilityPartialMeet)
            }
            "full-meet" | "full" => Some(SelectionPolicy::FullMeet),
            "maxichoice-first" | "maxichoice" => Some(SelectionPolicy::MaxichoiceFirst),
            _ => None,
        }
    }
}

/// Enumerates all maximal non-entailing subsets of the base.
///
/// A tautological target has no such subsets: the list is empty and
/// contraction handles the limiting case. An unentailed target yields the
/// base itself. Results are ordered by descending cardinality, then by
/// member positions.
pub fn remainders_capped(
    base: &BeliefBase,
    target: &Formula,
    cap: usize,
) -> Result<Vec<Remainder>, Error> {
    if base.len() > cap {
        return Err(Error::LimitExceeded {
            what: "remainder enumeration base",
            limit: cap,
            actual: base.len(),
        });
    }
    let target = canonicalize(target);
    if is_tautology(&target)? {
        return Ok(Vec::new());
    }
    if !entails(base, &target)? {
        return Ok(vec![Remainder {
            sentences: base.sentences().to_vec(),
        }]);
    }

    let n = base.len();
    let sentences = base.sentences();
    // descending-cardinality scan; keep subsets not entailing the target and
    // not contained in an already-kept one
    let mut kept: Vec<u64> = Vec::new();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..(1u64 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in (0..=n).rev() {
        for &mask in &by_size[size] {
            if kept.iter().any(|k| mask & k == mask) {
                continue;
            }
            let subset = BeliefBase::new(
                (0..n)
                    .filter(|i| mask & (1u64 << i) != 0)
                    .map(|i| sentences[i].clone()),
            );
            if !entails(&subset, &target)? {
                kept.push(mask);
            }
        }
    }
    kept.sort_by_key(|&mask| (std::cmp::Reverse(mask.count_ones()), mask));
    Ok(kept
        .into_iter()
        .map(|mask| Remainder {
            sentences: (0..n)
                .filter(|i| mask & (1u64 << i) != 0)
                .map(|i| sentences[i].clone())
                .collect(),
        })
        .collect())
}

/// Remainders under the default enumeration cap.
pub fn remainders(base: &BeliefBase, target: &Formula) -> Result<Vec<Remainder>, Error> {
    remainders_capped(base, target, MAX_ENUMERATION_BASE)
}

/// The accessibility of the complement a remainder gives up: the minimum
/// degree over the retracted sentences, or `None` when nothing is retracted.
fn retraction_cost(rb: &RankedBase, remainder: &Remainder) -> Result<Option<Degree>, Error> {
    let retracted: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| !remainder.sentences.contains(f))
        .cloned()
        .collect();
    if retracted.is_empty() {
        return Ok(None);
    }
    let mut min = u32::MAX;
    for f in &retracted {
        min = min.min(degree(rb, f)?.value());
    }
    Ok(Some(Degree(min)))
}

/// Applies the selection policy to a nonempty remainder list, returning the
/// selected remainders in their original order.
fn select_remainders(
    rb: &RankedBase,
    all: &[Remainder],
    policy: SelectionPolicy,
) -> Result<Vec<Remainder>, Error> {
    if all.is_empty() || policy == SelectionPolicy::FullMeet {
        return Ok(all.to_vec());
    }
    let mut costs: Vec<Option<Degree>> = Vec::with_capacity(all.len());
    for r in all {
        costs.push(retraction_cost(rb, r)?);
    }
    // cheapest retraction = lowest accessibility given up; a vacuous
    // remainder (nothing retracted) is always the unique best
    let best = costs
        .iter()
        .min_by_key(|c| c.map_or(0, |d| d.value() + 1))
        .copied()
        .expect("nonempty remainder list");
    let selected: Vec<Remainder> = all
        .iter()
        .zip(costs.iter())
        .filter(|(_, c)| **c == best)
        .map(|(r, _)| r.clone())
        .collect();
    match policy {
        SelectionPolicy::AccessibilityPartialMeet => Ok(selected),
        SelectionPolicy::MaxichoiceFirst => Ok(vec![selected[0].clone()]),
        SelectionPolicy::FullMeet => unreachable!(),
    }
}

/// Contraction with the selected remainders exposed.
pub fn contract_selected(
    rb: &RankedBase,
    target: &Formula,
    policy: SelectionPolicy,
) -> Result<(BeliefBase, Vec<Remainder>), Error> {
    let target = canonicalize(target);
    if is_tautology(&target)? {
        // limiting case: nothing can stop entailing a tautology
        return Ok((rb.base().clone(), Vec::new()));
    }
    let all = remainders(rb.base(), &target)?;
    let selected = select_remainders(rb, &all, policy)?;
    let intersection: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| selected.iter().all(|r| r.sentences.contains(f)))
        .cloned()
        .collect();
    Ok((BeliefBase::new(intersection), selected))
}

/// Partial meet contraction: the intersection of the selected remainders.
/// Contracting by a tautology returns the base unchanged.
pub fn contract(
    rb: &RankedBase,
    target: &Formula,
    policy: SelectionPolicy,
) -> Result<BeliefBase, Error> {
    Ok(contract_selected(rb, target, policy)?.0)
}

/// Expansion: the base with the sentence appended, no consistency upkeep.
pub fn expand(base: &BeliefBase, a: &Formula) -> BeliefBase {
    base.with(a)
}

/// The full outcome of one revision step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevisionOutcome {
    pub new_base: BeliefBase,
    pub retracted: Vec<Formula>,
    pub added: Formula,
    pub selected: Vec<Remainder>,
    pub new_ranking: RankedBase,
}

/// Revision via the Levi identity: contract by the negation, then expand.
///
/// The ranking is adjusted afterwards: new evidence enters at the most
/// accessible level, survivors keep their ranks, and the whole ranking is
/// renormalized to a contiguous range.
pub fn revise(
    rb: &RankedBase,
    a: &Formula,
    policy: SelectionPolicy,
) -> Result<RevisionOutcome, Error> {
    let a = canonicalize(a);
    if !is_consistent(&BeliefBase::new([a.clone()]))? {
        return Err(Error::InconsistentEvidence(a.to_string()));
    }
    let (contracted, selected) = contract_selected(rb, &negate(&a), policy)?;
    let new_base = expand(&contracted, &a);
    let retracted: Vec<Formula> = rb
        .base()
        .iter()
        .filter(|f| !new_base.contains(f))
        .cloned()
        .collect();
    let new_ranking = adjust_ranking(rb, &a, &new_base)?;
    Ok(RevisionOutcome {
        new_base,
        retracted,
        added: a,
        selected,
        new_ranking,
    })
}

/// Adjusts the ranking after a revision that produced `new_base`.
///
/// The evidence gets the provisional rank `n + 1` (strictly above every
/// survivor, even if it already sat in the base); surviving sentences keep
/// their old ranks; retracted sentences leave the ranking's domain and pick
/// up derived degrees on later queries. Ranks are then compressed back to a
/// contiguous `[1, n']`.
pub fn adjust_ranking(
    rb: &RankedBase,
    a: &Formula,
    new_base: &BeliefBase,
) -> Result<RankedBase, Error> {
    let a = canonicalize(a);
    let provisional: Vec<(Formula, u32)> = new_base
        .iter()
        .map(|f| {
            if *f == a {
                (f.clone(), rb.n() + 1)
            } else {
                let rank = rb
                    .rank_of(f)
                    .expect("non-evidence sentence of the revised base survives from the old base");
                (f.clone(), rank)
            }
        })
        .collect();
    RankedBase::from_pairs(normalize_ranks(&provisional))
}

/// Folds `revise` over a list of evidence, threading the adjusted ranking.
pub fn revise_sequence(
    rb: &RankedBase,
    evidence: &[Formula],
    policy: SelectionPolicy,
) -> Result<Vec<RevisionOutcome>, Error> {
    let mut current = rb.clone();
    let mut outcomes = Vec::with_capacity(evidence.len());
    for (step, a) in evidence.iter().enumerate() {
        let outcome = revise(&current, a, policy).map_err(|e| Error::SequenceStep {
            step: step + 1,
            source: Box::new(e),
        })?;
        current = outcome.new_ranking.clone();
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

/// Result of checking one AGM postulate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgmResult {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl AgmResult {
    fn pass(name: &'static str) -> Self {
        AgmResult {
            name,
            passed: true,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        AgmResult {
            name,
            passed: false,
            counterexample: Some(witness),
        }
    }
}

/// Report over the six basic AGM postulates, plus the two supplementary
/// postulates which are observed but carry no pass/fail weight here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgmReport {
    pub closure: AgmResult,
    pub success: AgmResult,
    pub inclusion: AgmResult,
    pub vacuity: AgmResult,
    pub consistency: AgmResult,
    pub extensionality: AgmResult,
    pub superexpansion_info: AgmResult,
    pub subexpansion_info: AgmResult,
}

impl AgmReport {
    /// The six basic postulates; the supplementary pair is informational.
    pub fn passed(&self) -> bool {
        self.closure.passed
            && self.success.passed
            && self.inclusion.passed
            && self.vacuity.passed
            && self.consistency.passed
            && self.extensionality.passed
    }

    pub fn results(&self) -> [&AgmResult; 8] {
        [
            &self.closure,
            &self.success,
            &self.inclusion,
            &self.vacuity,
            &self.consistency,
            &self.extensionality,
            &self.superexpansion_info,
            &self.subexpansion_info,
        ]
    }
}

/// Verifies the basic AGM postulates for a single revision over all semantic
/// classes of a `k`-atom universe containing the inputs' atoms.
pub fn check_agm(rb: &RankedBase, a: &Formula, k: usize) -> Result<AgmReport, Error> {
    let a = canonicalize(a);
    let mut atoms = rb.base().atoms();
    atoms.extend(a.atoms());
    let universe = Universe::new(atoms).padded_to(k)?;
    let classes = semantic_classes_over(&universe)?;

    let outcome = revise(rb, &a, SelectionPolicy::AccessibilityPartialMeet)?;
    let revised = &outcome.new_base;
    let expanded = expand(rb.base(), &a);

    // closure: adjoining an already-entailed sentence must not change the
    // belief set (idempotence of the consequence operation on K*)
    let mut closure = AgmResult::pass("closure");
    let stride = (classes.len() / 8).max(1);
    'closure: for class in classes.iter().step_by(stride) {
        if !entails(revised, &class.representative)? {
            continue;
        }
        let extended = expand(revised, &class.representative);
        for probe in &classes {
            if entails(&extended, &probe.representative)?
                != entails(revised, &probe.representative)?
            {
                closure = AgmResult::fail(
                    "closure",
                    format!("{} via {}", probe.representative, class.representative),
                );
                break 'closure;
            }
        }
    }

    let success = if entails(revised, &a)? {
        AgmResult::pass("success")
    } else {
        AgmResult::fail("success", format!("{a} not entailed after revision"))
    };

    let mut inclusion = AgmResult::pass("inclusion");
    for class in &classes {
        if entails(revised, &class.representative)? && !entails(&expanded, &class.representative)?
        {
            inclusion = AgmResult::fail("inclusion", class.representative.to_string());
            break;
        }
    }

    let vacuity = if entails(rb.base(), &negate(&a))? {
        AgmResult::pass("vacuity (not applicable)")
    } else if equivalent(revised, &expanded)? {
        AgmResult::pass("vacuity")
    } else {
        AgmResult::fail(
            "vacuity",
            "revision differs from expansion although the negation was not believed".into(),
        )
    };

    let consistency = if is_consistent(revised)? {
        AgmResult::pass("consistency")
    } else {
        AgmResult::fail("consistency", "revised base is inconsistent".into())
    };

    // extensionality: a structurally different but equivalent input must give
    // an equivalent belief set
    let variant = crate::formula::and(a.clone(), Formula::Top);
    let outcome_variant = revise(rb, &variant, SelectionPolicy::AccessibilityPartialMeet)?;
    let extensionality = if equivalent(revised, &outcome_variant.new_base)? {
        AgmResult::pass("extensionality")
    } else {
        AgmResult::fail(
            "extensionality",
            format!("revising by {a} and by {variant} diverge"),
        )
    };

    // supplementary postulates, observed over a deterministic sample of
    // conjunction partners
    let mut superexpansion = AgmResult::pass("superexpansion (informational)");
    let mut subexpansion = AgmResult::pass("subexpansion (informational)");
    for class in classes.iter().step_by(stride) {
        let b = &class.representative;
        let conj = crate::formula::and(a.clone(), b.clone());
        if !is_consistent(&BeliefBase::new([conj.clone()]))? {
            continue;
        }
        let both = revise(rb, &conj, SelectionPolicy::AccessibilityPartialMeet)?;
        let stepwise = expand(revised, b);
        if superexpansion.passed {
            for probe in &classes {
                if entails(&both.new_base, &probe.representative)?
                    && !entails(&stepwise, &probe.representative)?
                {
                    superexpansion = AgmResult::fail(
                        "superexpansion (informational)",
                        format!("partner {b}: {}", probe.representative),
                    );
                    break;
                }
            }
        }
        if subexpansion.passed && !entails(revised, &negate(b))? {
            for probe in &classes {
                if entails(&stepwise, &probe.representative)?
                    && !entails(&both.new_base, &probe.representative)?
                {
                    subexpansion = AgmResult::fail(
                        "subexpansion (informational)",
                        format!("partner {b}: {}", probe.representative),
                    );
                    break;
                }
            }
        }
    }

    Ok(AgmReport {
        closure,
        success,
        inclusion,
        vacuity,
        consistency,
        extensionality,
        superexpansion_info: superexpansion,
        subexpansion_info: subexpansion,
    })
}
