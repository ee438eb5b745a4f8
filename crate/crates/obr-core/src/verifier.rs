//! Brute-force oracles and seeded theorem sweeps.
//!
//! The oracles here share nothing with the solver or the entailment-set
//! enumerator beyond the [`Formula`] type: entailment is decided by full
//! truth-table evaluation and entailment sets come from enumerating every
//! subset. The sweeps draw deterministic random instances from a seed and
//! replay the theorem checks against the library implementation.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::accessibility::{check_postulates, degree, is_bad_cut, slice_at_level, Cut, RankedBase};
use crate::context::{achievable_goals, construct_context, verify_corollary1, verify_theorem1, Desideratum, Goal};
use crate::entailment::entailment_sets;
use crate::error::Error;
use crate::formula::{and, atom, canonicalize, iff, implies, negate, not, or, Formula};
use crate::logic::{entails, is_consistent, semantic_classes_over, BeliefBase, Universe};
use crate::revision::{check_agm, revise, SelectionPolicy};

/// Default cap on the oracle's atom universe.
pub const MAX_ORACLE_ATOMS: usize = 6;

/// Default cap on the brute-force subset enumeration.
pub const MAX_BRUTE_BASE: usize = 12;

/// Truth-table entailment: evaluates the base and the goal under every
/// valuation of their combined atom universe.
pub fn tt_entails(base: &BeliefBase, goal: &Formula) -> Result<bool, Error> {
    let mut atoms = base.atoms();
    atoms.extend(goal.atoms());
    let atoms: Vec<String> = atoms.into_iter().collect();
    if atoms.len() > MAX_ORACLE_ATOMS {
        return Err(Error::LimitExceeded {
            what: "oracle atom universe",
            limit: MAX_ORACLE_ATOMS,
            actual: atoms.len(),
        });
    }
    for bits in 0u64..(1u64 << atoms.len()) {
        let lookup = |name: &str| {
            let i = atoms.iter().position(|a| a == name).expect("atom in universe");
            (bits >> i) & 1 == 1
        };
        if base.iter().all(|s| tt_eval(s, &lookup)) && !tt_eval(goal, &lookup) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn tt_eval(f: &Formula, lookup: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Atom(name) => lookup(name),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(c) => !tt_eval(c, lookup),
        Formula::And(l, r) => tt_eval(l, lookup) && tt_eval(r, lookup),
        Formula::Or(l, r) => tt_eval(l, lookup) || tt_eval(r, lookup),
        Formula::Implies(l, r) => !tt_eval(l, lookup) || tt_eval(r, lookup),
        Formula::Iff(l, r) => tt_eval(l, lookup) == tt_eval(r, lookup),
    }
}

fn tt_tautology(f: &Formula) -> Result<bool, Error> {
    tt_entails(&BeliefBase::empty(), f)
}

/// Enumerates all minimal entailing subsets by checking every one of the
/// `2^|base|` subsets with the truth-table oracle, then discarding subsets
/// that strictly contain another hit.
pub fn brute_entailment_sets(
    base: &BeliefBase,
    target: &Formula,
) -> Result<Vec<Vec<Formula>>, Error> {
    if base.len() > MAX_BRUTE_BASE {
        return Err(Error::LimitExceeded {
            what: "brute-force enumeration base",
            limit: MAX_BRUTE_BASE,
            actual: base.len(),
        });
    }
    let target = canonicalize(target);
    let n = base.len();
    let sentences = base.sentences();
    let mut entailing: Vec<u64> = Vec::new();
    for mask in 0..(1u64 << n) {
        let subset = BeliefBase::new(
            (0..n)
                .filter(|i| mask & (1u64 << i) != 0)
                .map(|i| sentences[i].clone()),
        );
        if tt_entails(&subset, &target)? {
            entailing.push(mask);
        }
    }
    let minimal: Vec<u64> = entailing
        .iter()
        .copied()
        .filter(|&m| !entailing.iter().any(|&o| o != m && o & m == o))
        .collect();
    let mut sorted = minimal;
    sorted.sort_by_key(|&m| (m.count_ones(), m));
    Ok(sorted
        .into_iter()
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1u64 << i) != 0)
                .map(|i| sentences[i].clone())
                .collect()
        })
        .collect())
}

/// Recomputes a degree of accessibility from the definition using only the
/// truth-table oracle and the brute-force subset enumeration.
pub fn oracle_degree(rb: &RankedBase, p: &Formula) -> Result<u32, Error> {
    let p = canonicalize(p);
    if tt_tautology(&p)? {
        return Ok(rb.n());
    }
    if let Some(rank) = rb.rank_of(&p) {
        return Ok(rank);
    }
    if tt_entails(rb.base(), &p)? {
        return oracle_derived(rb, &p);
    }
    let neg = negate(&p);
    if tt_tautology(&neg)? {
        return Ok(rb.n());
    }
    if let Some(rank) = rb.rank_of(&neg) {
        return Ok(rank);
    }
    if tt_entails(rb.base(), &neg)? {
        return oracle_derived(rb, &neg);
    }
    Ok(0)
}

fn oracle_derived(rb: &RankedBase, p: &Formula) -> Result<u32, Error> {
    let sets = brute_entailment_sets(rb.base(), p)?;
    Ok(sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|m| rb.rank_of(m).expect("member has a rank"))
                .min()
                .expect("nonempty set for a non-tautology")
        })
        .max()
        .expect("entailed sentence has an entailment set"))
}

/// One verified case of a property sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCaseResult {
    pub property: String,
    pub instance: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Sweep configuration: instance-generation bounds.
#[derive(Debug, Clone, Copy)]
pub struct SweepCaps {
    pub max_sentences: usize,
    pub max_atoms: usize,
    pub max_rank: u32,
    /// Fraction of bases seeded with a conjunction ranked above one of its
    /// own conjuncts, the shape that produces bad cuts.
    pub bad_cut_bias: f64,
}

impl Default for SweepCaps {
    fn default() -> Self {
        SweepCaps {
            max_sentences: 8,
            max_atoms: 3,
            max_rank: 4,
            bad_cut_bias: 0.4,
        }
    }
}

/// The sweepable properties.
pub const PROPERTIES: [&str; 8] = [
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "corollary1",
    "agm",
    "def9",
    "oracle-agreement",
];

/// Runs a seeded sweep of the named property. Identical seeds and caps give
/// identical results.
pub fn sweep(
    property: &str,
    trials: u32,
    seed: u64,
    caps: &SweepCaps,
) -> Result<Vec<PropertyCaseResult>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let check: fn(&mut ChaCha8Rng, &SweepCaps) -> Result<CaseOutcome, Error> =
        match property {
            "theorem1" => check_theorem1_case,
            "theorem2" => check_theorem2_case,
            "theorem3" => check_theorem3_case,
            "theorem4" => check_theorem4_case,
            "corollary1" => check_corollary1_case,
            "agm" => check_agm_case,
            "def9" => check_def9_case,
            "oracle-agreement" => check_oracle_case,
            other => return Err(Error::UnknownProperty(other.to_string())),
        };
    let mut out = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let (instance, passed, counterexample) = check(&mut rng, caps)?;
        out.push(PropertyCaseResult {
            property: property.to_string(),
            instance,
            passed,
            counterexample,
        });
    }
    Ok(out)
}

// --- instance generation ---

pub mod gen {
    //! Deterministic random instances for the sweeps.

    use super::*;

    /// A random formula over the first `atoms` default atom names.
    pub fn formula(rng: &mut ChaCha8Rng, atoms: usize, depth: usize) -> Formula {
        let u = Universe::default_of(atoms);
        let leaf = |rng: &mut ChaCha8Rng| {
            let i = rng.gen_range(0..atoms);
            atom(&u.atoms()[i])
        };
        if depth == 0 || rng.gen_bool(0.3) {
            let f = leaf(rng);
            if rng.gen_bool(0.3) {
                return not(f);
            }
            return f;
        }
        let l = formula(rng, atoms, depth - 1);
        let r = formula(rng, atoms, depth - 1);
        match rng.gen_range(0..5) {
            0 => and(l, r),
            1 => or(l, r),
            2 => implies(l, r),
            3 => iff(l, r),
            _ => not(l),
        }
    }

    /// A consistent ranked base within the caps, occasionally seeded with a
    /// conjunction ranked above one of its own conjuncts.
    pub fn ranked_base(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> RankedBase {
        loop {
            let count = rng.gen_range(2..=caps.max_sentences);
            let mut pairs: Vec<(Formula, u32)> = Vec::new();
            let with_bad_cut = rng.gen_bool(caps.bad_cut_bias);
            if with_bad_cut {
                let conjunct = formula(rng, caps.max_atoms, 1);
                let partner = formula(rng, caps.max_atoms, 1);
                let low = rng.gen_range(1..=caps.max_rank.saturating_sub(1).max(1));
                let high = rng.gen_range(low + 1..=caps.max_rank.max(low + 1));
                pairs.push((conjunct.clone(), low));
                pairs.push((and(conjunct, partner), high));
            }
            while pairs.len() < count {
                let f = formula(rng, caps.max_atoms, 2);
                let rank = rng.gen_range(1..=caps.max_rank);
                pairs.push((f, rank));
            }
            let normalized = crate::accessibility::normalize_ranks(&pairs);
            match RankedBase::from_pairs(normalized) {
                Ok(rb) if rb.len() >= 2 => return rb,
                _ => continue,
            }
        }
    }

    /// Consistent evidence, biased toward sentences whose negation the base
    /// believes so revisions actually retract something.
    pub fn evidence(rng: &mut ChaCha8Rng, rb: &RankedBase, caps: &SweepCaps) -> Formula {
        for _ in 0..64 {
            let f = formula(rng, caps.max_atoms, 2);
            let f = canonicalize(&f);
            if !is_consistent(&BeliefBase::new([f.clone()])).unwrap_or(false) {
                continue;
            }
            let negated = entails(rb.base(), &negate(&f)).unwrap_or(false);
            if negated || rng.gen_bool(0.3) {
                return f;
            }
        }
        atom("p")
    }

    /// A desideratum whose presupposition the base believes: a split of a
    /// believed sentence, or a complementary pair.
    pub fn desideratum(rng: &mut ChaCha8Rng, rb: &RankedBase, caps: &SweepCaps) -> Desideratum {
        if rng.gen_bool(0.5) {
            let g = formula(rng, caps.max_atoms, 1);
            return Desideratum::new([g.clone(), negate(&g)]).expect("two goals");
        }
        // split a believed sentence psi into psi & chi and psi & !chi
        for _ in 0..16 {
            let idx = rng.gen_range(0..rb.len());
            let psi = rb.base().sentences()[idx].clone();
            let chi = formula(rng, caps.max_atoms, 1);
            let d = Desideratum::new([and(psi.clone(), chi.clone()), and(psi, negate(&chi))])
                .expect("two goals");
            if d.holds_in(rb.base()).unwrap_or(false) {
                return d;
            }
        }
        let g = formula(rng, caps.max_atoms, 1);
        Desideratum::new([g.clone(), negate(&g)]).expect("two goals")
    }

    /// An instance admitting a goal: a ranked base, consistent unbelieved
    /// evidence, and an achievable goal picked from a desideratum.
    pub fn goal_instance(
        rng: &mut ChaCha8Rng,
        caps: &SweepCaps,
    ) -> (RankedBase, Formula, Goal) {
        loop {
            let rb = ranked_base(rng, caps);
            let a = evidence(rng, &rb, caps);
            if entails(rb.base(), &a).unwrap_or(true) {
                continue;
            }
            let d = desideratum(rng, &rb, caps);
            let goals = match achievable_goals(&rb, &a, &d, SelectionPolicy::default()) {
                Ok(gs) => gs,
                Err(_) => continue,
            };
            if let Some(goal) = goals.into_iter().next() {
                return (rb, a, goal);
            }
        }
    }

    /// Serializes a ranked base in the `.obr` line format.
    pub fn describe_base(rb: &RankedBase) -> String {
        rb.iter()
            .map(|(f, r)| format!("{r} : {f}"))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn describe_instance(rb: &RankedBase, extra: &[(&str, String)]) -> String {
    let mut s = gen::describe_base(rb);
    for (key, value) in extra {
        s.push_str(&format!(" | {key} = {value}"));
    }
    s
}

// --- per-property checks ---

type CaseOutcome = (String, bool, Option<String>);

/// Part i of the context conditions, checked on arbitrary sub-bases: every
/// subset of the base satisfying condition (1) must satisfy condition (2).
fn check_theorem1_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    use crate::context::Context;
    let rb = gen::ranked_base(rng, caps);
    let a = gen::evidence(rng, &rb, caps);
    let instance = describe_instance(&rb, &[("a", a.to_string())]);
    let policy = SelectionPolicy::default();
    let goal = Goal::basic(&Formula::Top);

    let n = rb.len();
    // all sub-bases for small bases, a seeded sample otherwise
    let masks: Vec<u64> = if n <= 5 {
        (0..(1u64 << n)).collect()
    } else {
        (0..32).map(|_| rng.gen_range(0..(1u64 << n))).collect()
    };
    for mask in masks {
        let slice: Vec<Formula> = (0..n)
            .filter(|i| mask & (1u64 << i) != 0)
            .map(|i| rb.base().sentences()[i].clone())
            .collect();
        let ctx = Context {
            neg_a_part: Vec::new(),
            goal_part: Vec::new(),
            neg_goal_part: Vec::new(),
            base_slice: slice,
            evidence: a.clone(),
            goal: goal.clone(),
        };
        let report = verify_theorem1(&rb, &a, &ctx, policy, caps.max_atoms)?;
        if report.condition1 && !report.condition2 {
            return Ok((
                instance,
                false,
                Some(format!(
                    "sub-base {:?} satisfies condition (1) but not condition (2)",
                    ctx.base_slice.iter().map(|f| f.to_string()).collect::<Vec<_>>()
                )),
            ));
        }
    }
    Ok((instance, true, None))
}

/// The entailment-set construction must satisfy all context conditions.
fn check_theorem2_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let (rb, a, goal) = gen::goal_instance(rng, caps);
    let instance = describe_instance(
        &rb,
        &[("a", a.to_string()), ("g", goal.formula.to_string())],
    );
    let policy = SelectionPolicy::default();
    let ctx = match construct_context(&rb, &a, &goal, policy) {
        Ok(ctx) => ctx,
        Err(e) => return Ok((instance, false, Some(format!("construction failed: {e}")))),
    };
    let report = verify_theorem1(&rb, &a, &ctx, policy, caps.max_atoms)?;
    if report.passed() {
        Ok((instance, true, None))
    } else {
        Ok((instance, false, Some(format!("{report:?}"))))
    }
}

/// Every cut without a bad-cut witness must be deductively closed: a sentence
/// entailed by the slice has at least the cut's degree.
fn check_theorem3_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let rb = gen::ranked_base(rng, caps);
    let instance = describe_instance(&rb, &[]);
    let universe = Universe::from_base(rb.base()).padded_to(caps.max_atoms)?;
    let classes = semantic_classes_over(&universe)?;
    for level in 1..=rb.n() {
        let cut = Cut {
            level,
            base_slice: slice_at_level(&rb, level),
        };
        if is_bad_cut(&rb, &cut)?.is_some() {
            continue;
        }
        let slice = BeliefBase::new(cut.base_slice.clone());
        for class in &classes {
            if entails(&slice, &class.representative)?
                && degree(&rb, &class.representative)?.value() < level
            {
                return Ok((
                    instance,
                    false,
                    Some(format!(
                        "level {level}: {} entailed by the slice but ranked below it",
                        class.representative
                    )),
                ));
            }
        }
    }
    Ok((instance, true, None))
}

/// The generated ordering must satisfy the five accessibility postulates.
fn check_theorem4_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let rb = gen::ranked_base(rng, caps);
    let instance = describe_instance(&rb, &[]);
    let report = check_postulates(&rb, caps.max_atoms)?;
    if report.passed() {
        Ok((instance, true, None))
    } else {
        let failing: Vec<String> = report
            .results()
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("{}: {}", r.name, r.counterexample.as_deref().unwrap_or("")))
            .collect();
        Ok((instance, false, Some(failing.join("; "))))
    }
}

/// The monotony corollary on entailment-set contexts.
fn check_corollary1_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let (rb, a, goal) = gen::goal_instance(rng, caps);
    let instance = describe_instance(
        &rb,
        &[("a", a.to_string()), ("g", goal.formula.to_string())],
    );
    let policy = SelectionPolicy::default();
    let ctx = match construct_context(&rb, &a, &goal, policy) {
        Ok(ctx) => ctx,
        Err(e) => return Ok((instance, false, Some(format!("construction failed: {e}")))),
    };
    let t1 = verify_theorem1(&rb, &a, &ctx, policy, caps.max_atoms)?;
    if !t1.condition1 {
        return Ok((instance, false, Some("condition (1) precondition failed".into())));
    }
    let report = verify_corollary1(&rb, &a, &ctx, policy, caps.max_atoms)?;
    if report.passed() {
        Ok((instance, true, None))
    } else {
        Ok((instance, false, Some(format!("{report:?}"))))
    }
}

/// The basic AGM postulates for a random revision.
fn check_agm_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let rb = gen::ranked_base(rng, caps);
    let a = gen::evidence(rng, &rb, caps);
    let instance = describe_instance(&rb, &[("a", a.to_string())]);
    let report = check_agm(&rb, &a, caps.max_atoms)?;
    if report.passed() {
        Ok((instance, true, None))
    } else {
        let failing: Vec<String> = report
            .results()
            .iter()
            .filter(|r| !r.passed && !r.name.contains("informational"))
            .map(|r| format!("{}: {}", r.name, r.counterexample.as_deref().unwrap_or("")))
            .collect();
        Ok((instance, false, Some(failing.join("; "))))
    }
}

/// The ranking adjustment: evidence strictly on top, surviving order kept,
/// retracted degrees agreeing with the oracle recomputation.
fn check_def9_case(rng: &mut ChaCha8Rng, caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let rb = gen::ranked_base(rng, caps);
    let a = gen::evidence(rng, &rb, caps);
    let instance = describe_instance(&rb, &[("a", a.to_string())]);
    let outcome = revise(&rb, &a, SelectionPolicy::default())?;
    let new = &outcome.new_ranking;

    let a_rank = new.rank_of(&outcome.added).expect("evidence is in the new base");
    for (f, r) in new.iter() {
        if *f != outcome.added && r >= a_rank {
            return Ok((
                instance,
                false,
                Some(format!("{f} at rank {r} is not below the evidence at {a_rank}")),
            ));
        }
    }

    let survivors: Vec<&Formula> = rb
        .base()
        .iter()
        .filter(|f| new.base().contains(f) && **f != outcome.added)
        .collect();
    for x in &survivors {
        for y in &survivors {
            let before = rb.rank_of(x).unwrap() < rb.rank_of(y).unwrap();
            let after = new.rank_of(x).unwrap() < new.rank_of(y).unwrap();
            if before != after {
                return Ok((
                    instance,
                    false,
                    Some(format!("survivors {x} and {y} changed relative order")),
                ));
            }
        }
    }

    for f in &outcome.retracted {
        let implemented = degree(new, f)?.value();
        let oracle = oracle_degree(new, f)?;
        if implemented != oracle {
            return Ok((
                instance,
                false,
                Some(format!(
                    "retracted {f}: degree {implemented} but oracle recomputes {oracle}"
                )),
            ));
        }
    }
    Ok((instance, true, None))
}

/// Solver versus truth-table oracle on a random base and goal.
fn check_oracle_case(rng: &mut ChaCha8Rng, _caps: &SweepCaps) -> Result<CaseOutcome, Error> {
    let atoms = rng.gen_range(1..=MAX_ORACLE_ATOMS);
    let count = rng.gen_range(0..=4);
    let base = BeliefBase::new((0..count).map(|_| gen::formula(rng, atoms, 2)));
    let goal = gen::formula(rng, atoms, 3);
    let instance = format!(
        "base = {:?} | goal = {goal}",
        base.iter().map(|f| f.to_string()).collect::<Vec<_>>()
    );
    let fast = entails(&base, &goal)?;
    let slow = tt_entails(&base, &goal)?;
    if fast == slow {
        Ok((instance, true, None))
    } else {
        Ok((
            instance,
            false,
            Some(format!("solver says {fast}, truth table says {slow}")),
        ))
    }
}

/// Also verify the library enumerator against the brute-force one; used by
/// the acceptance suite alongside the named sweeps.
pub fn entailment_sets_agree(
    base: &BeliefBase,
    target: &Formula,
) -> Result<Option<String>, Error> {
    let implemented: Vec<Vec<Formula>> = entailment_sets(base, target)?
        .into_iter()
        .map(|s| s.members)
        .collect();
    let oracle = brute_entailment_sets(base, target)?;
    let mut a = implemented.clone();
    let mut b = oracle.clone();
    a.sort();
    b.sort();
    if a == b {
        Ok(None)
    } else {
        Ok(Some(format!(
            "enumerator found {} sets, oracle found {}",
            implemented.len(),
            oracle.len()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn base(texts: &[&str]) -> BeliefBase {
        BeliefBase::new(texts.iter().map(|t| parse(t).unwrap()))
    }

    fn rb(pairs: &[(&str, u32)]) -> RankedBase {
        RankedBase::from_pairs(pairs.iter().map(|(t, r)| (parse(t).unwrap(), *r))).unwrap()
    }

    #[test]
    fn oracle_entailment_basics() {
        assert!(tt_entails(&base(&["p", "p -> q"]), &parse("q").unwrap()).unwrap());
        assert!(!tt_entails(&BeliefBase::empty(), &parse("p").unwrap()).unwrap());
        assert!(tt_entails(&BeliefBase::empty(), &parse("p | !p").unwrap()).unwrap());
    }

    #[test]
    fn oracle_cap() {
        let b = base(&["p | q | r | s | t | u | v"]);
        assert!(matches!(
            tt_entails(&b, &parse("p").unwrap()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn brute_sets_match_hand_computation() {
        let b = base(&["p", "q", "p -> r", "q -> r"]);
        let sets = brute_entailment_sets(&b, &parse("r").unwrap()).unwrap();
        let texts: Vec<Vec<String>> = sets
            .iter()
            .map(|s| s.iter().map(|f| f.to_string()).collect())
            .collect();
        assert_eq!(texts, vec![vec!["p", "p -> r"], vec!["q", "q -> r"]]);

        assert_eq!(
            brute_entailment_sets(&base(&["p"]), &parse("p").unwrap()).unwrap(),
            vec![vec![parse("p").unwrap()]]
        );
        assert!(brute_entailment_sets(&base(&["p"]), &parse("q").unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn oracle_degree_matches_definition_cases() {
        let r = rb(&[("p", 1), ("p -> q", 2)]);
        assert_eq!(oracle_degree(&r, &parse("q").unwrap()).unwrap(), 1);
        assert_eq!(oracle_degree(&r, &parse("p | !p").unwrap()).unwrap(), 2);
        assert_eq!(oracle_degree(&r, &parse("r").unwrap()).unwrap(), 0);
        assert_eq!(oracle_degree(&r, &parse("!q").unwrap()).unwrap(), 1);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let caps = SweepCaps::default();
        let first = sweep("oracle-agreement", 50, 7, &caps).unwrap();
        let second = sweep("oracle-agreement", 50, 7, &caps).unwrap();
        assert_eq!(first, second);
        assert!(first.iter().all(|c| c.passed));
    }

    #[test]
    fn unknown_property_is_an_error() {
        assert!(matches!(
            sweep("theorem5", 1, 0, &SweepCaps::default()),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn small_theorem_sweeps_pass() {
        let caps = SweepCaps::default();
        for property in ["theorem2", "theorem3", "theorem4", "corollary1", "agm", "def9"] {
            let results = sweep(property, 8, 42, &caps).unwrap();
            for case in &results {
                assert!(
                    case.passed,
                    "{property} failed on {}: {:?}",
                    case.instance, case.counterexample
                );
            }
        }
    }

    #[test]
    fn generated_bases_sometimes_have_bad_cuts() {
        let caps = SweepCaps::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut found = false;
        for _ in 0..40 {
            let r = gen::ranked_base(&mut rng, &caps);
            for level in 1..=r.n() {
                let cut = Cut {
                    level,
                    base_slice: slice_at_level(&r, level),
                };
                if is_bad_cut(&r, &cut).unwrap().is_some() {
                    found = true;
                }
            }
        }
        assert!(found, "generator bias never produced a bad cut");
    }
}
