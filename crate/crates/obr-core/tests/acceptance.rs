//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them).
//!
//! Run as `cargo test -p obr-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use obr_core::formula::{atom, not};
use obr_core::logic::semantic_classes_over;
use obr_core::revision::SelectionPolicy;
use obr_core::verifier::{entailment_sets_agree, gen, oracle_degree, tt_entails};
use obr_core::{
    construct_context, degree, entails, parse, sweep, verify_theorem1, BeliefBase, Formula, Goal,
    RankedBase, SweepCaps, Universe,
};

fn report(criterion: &str, passed: bool, details: &str) {
    println!(
        "criterion {criterion}: {} — {details}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {details}");
}

fn rb(pairs: &[(&str, u32)]) -> RankedBase {
    RankedBase::from_pairs(pairs.iter().map(|(t, r)| (parse(t).unwrap(), *r))).unwrap()
}

#[test]
fn criterion_01_oracle_agreement() {
    let start = Instant::now();

    // exhaustive: every representative of the 256 three-atom classes as a
    // goal, against eight fixed two-sentence bases over two atoms
    let universe = Universe::default_of(3);
    let classes = semantic_classes_over(&universe).unwrap();
    let bases: Vec<BeliefBase> = [
        ["p", "q"],
        ["p", "p -> q"],
        ["p", "!q"],
        ["p | q", "!p"],
        ["p -> q", "q -> p"],
        ["p & q", "p | q"],
        ["!p", "!q"],
        ["p <-> q", "p"],
    ]
    .iter()
    .map(|texts| BeliefBase::new(texts.iter().map(|t| parse(t).unwrap())))
    .collect();
    assert_eq!(classes.len(), 256);
    let mut exhaustive = 0u64;
    for base in &bases {
        for class in &classes {
            let fast = entails(base, &class.representative).unwrap();
            let slow = tt_entails(base, &class.representative).unwrap();
            assert_eq!(
                fast, slow,
                "mismatch on base {base:?} goal {}",
                class.representative
            );
            exhaustive += 1;
        }
    }

    // exhaustive over two atoms: every class pair as premise and goal
    let two = Universe::default_of(2);
    let two_classes = semantic_classes_over(&two).unwrap();
    let mut pairs = 0u64;
    for left in &two_classes {
        let premise = BeliefBase::new([left.representative.clone()]);
        for right in &two_classes {
            assert_eq!(
                entails(&premise, &right.representative).unwrap(),
                tt_entails(&premise, &right.representative).unwrap(),
                "mismatch on {} |- {}",
                left.representative,
                right.representative
            );
            pairs += 1;
        }
    }

    // randomized: ten thousand seeded cases over up to six atoms
    let results = sweep("oracle-agreement", 10_000, 7, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();
    let elapsed = start.elapsed();

    report(
        "1 (oracle agreement)",
        failures.is_empty() && elapsed <= Duration::from_secs(60),
        &format!(
            "{exhaustive} exhaustive + {pairs} two-atom pairs + {} random cases, {} mismatches, {elapsed:?}",
            results.len(),
            failures.len()
        ),
    );
}

#[test]
fn criterion_02_entailment_set_completeness() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let caps = SweepCaps {
        max_sentences: 10,
        max_atoms: 4,
        ..SweepCaps::default()
    };
    let mut mismatches = 0;
    let trials = 500;
    for _ in 0..trials {
        let base = BeliefBase::new((0..10).map(|_| gen::formula(&mut rng, caps.max_atoms, 2)));
        let target = gen::formula(&mut rng, caps.max_atoms, 2);
        if entailment_sets_agree(&base, &target).unwrap().is_some() {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        "2 (entailment-set completeness)",
        mismatches == 0 && elapsed <= Duration::from_secs(120),
        &format!("{trials} seeded bases, {mismatches} mismatches, {elapsed:?}"),
    );
}

#[test]
fn criterion_03_theorem4_postulates() {
    let results = sweep("theorem4", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();
    report(
        "3 (accessibility postulates, A1 over all representative triples)",
        failures.is_empty(),
        &format!("{} ranked bases, {} failures", results.len(), failures.len()),
    );
}

#[test]
fn criterion_04_theorem3_cut_closure() {
    let results = sweep("theorem3", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();

    // the pinned bad-cut construction must be detected with its witness
    let bad = rb(&[("p & q", 2), ("p", 1)]);
    let cut = obr_core::cut_at(&bad, &parse("p & q").unwrap()).unwrap();
    let witness = obr_core::is_bad_cut(&bad, &cut).unwrap();
    let witness_found = witness.as_ref().map(|w| w.culprit.clone()) == Some(atom("p"));

    report(
        "4 (cut closure + bad-cut detection)",
        failures.is_empty() && witness_found,
        &format!(
            "{} generated cuts closed, witness for {{p & q @2, p @1}}: {:?}",
            results.len(),
            witness.map(|w| w.culprit.to_string())
        ),
    );
}

#[test]
fn criterion_05_theorem2_construction() {
    let start = Instant::now();
    let results = sweep("theorem2", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();
    let elapsed = start.elapsed();
    for f in &failures {
        eprintln!("theorem2 failure: {} | {:?}", f.instance, f.counterexample);
    }
    report(
        "5 (entailment-set contexts satisfy the context conditions)",
        failures.is_empty() && elapsed <= Duration::from_secs(600),
        &format!(
            "{} goal-admitting instances, {} failures, {elapsed:?}",
            results.len(),
            failures.len()
        ),
    );
}

#[test]
fn criterion_06_corollary1_monotony() {
    let results = sweep("corollary1", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();
    report(
        "6 (monotony corollary on the criterion-5 instances)",
        failures.is_empty(),
        &format!("{} instances, {} failures", results.len(), failures.len()),
    );
}

#[test]
fn criterion_07_agm_postulates() {
    let results = sweep("agm", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();

    // supplementary postulates are observed, not asserted
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let caps = SweepCaps::default();
    let mut k7_holds = 0;
    let mut k8_holds = 0;
    let observed = 25;
    for _ in 0..observed {
        let base = gen::ranked_base(&mut rng, &caps);
        let evidence = gen::evidence(&mut rng, &base, &caps);
        let agm = obr_core::check_agm(&base, &evidence, caps.max_atoms).unwrap();
        if agm.superexpansion_info.passed {
            k7_holds += 1;
        }
        if agm.subexpansion_info.passed {
            k8_holds += 1;
        }
    }

    report(
        "7 (basic AGM postulates)",
        failures.is_empty(),
        &format!(
            "{} revisions, {} failures; informational K*7 {k7_holds}/{observed}, K*8 {k8_holds}/{observed}",
            results.len(),
            failures.len()
        ),
    );
}

#[test]
fn criterion_08_ranking_adjustment() {
    let results = sweep("def9", 500, 42, &SweepCaps::default()).unwrap();
    let failures: Vec<_> = results.iter().filter(|c| !c.passed).collect();
    report(
        "8 (ranking adjustment: evidence on top, order kept, oracle degrees)",
        failures.is_empty(),
        &format!("{} revisions, {} violations", results.len(), failures.len()),
    );
}

#[test]
fn criterion_09_effort_reduction() {
    // regenerate the criterion-5 instance stream and measure context sizes
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let caps = SweepCaps::default();
    let trials = 500;
    let mut slice_total = 0usize;
    let mut base_total = 0usize;
    let mut equivalent_effects = 0usize;
    for _ in 0..trials {
        let (base, evidence, goal) = gen::goal_instance(&mut rng, &caps);
        let ctx =
            construct_context(&base, &evidence, &goal, SelectionPolicy::default()).unwrap();
        slice_total += ctx.base_slice.len();
        base_total += base.len();
        let t1 = verify_theorem1(&base, &evidence, &ctx, SelectionPolicy::default(), caps.max_atoms)
            .unwrap();
        if t1.condition2 {
            equivalent_effects += 1;
        }
    }
    let mean_slice = slice_total as f64 / trials as f64;
    let mean_base = base_total as f64 / trials as f64;
    report(
        "9 (effort reduction + equivalent effects)",
        mean_slice < mean_base && equivalent_effects == trials,
        &format!(
            "mean context size {mean_slice:.2} vs mean base size {mean_base:.2}; \
             condition (2) on {equivalent_effects}/{trials}"
        ),
    );
}

#[test]
fn criterion_10_worked_example_regression() {
    let base = rb(&[("p", 1), ("p -> q", 2), ("s", 1)]);
    let evidence = parse("!q").unwrap();
    let goal = Goal::basic(&parse("!p").unwrap());

    // degree(q) = 1, recomputed by the oracle
    let deg_q = degree(&base, &atom("q")).unwrap().value();
    let deg_q_oracle = oracle_degree(&base, &atom("q")).unwrap();

    // revision retracts p and keeps {p -> q, s}
    let outcome = obr_core::revise(&base, &evidence, SelectionPolicy::default()).unwrap();
    let retracted_ok = outcome.retracted == vec![atom("p")];
    let kept_ok = outcome.new_base.sentences()
        == [
            parse("p -> q").unwrap(),
            parse("s").unwrap(),
            parse("!q").unwrap(),
        ];

    // independent check of the retraction: brute-force remainders via the
    // truth-table oracle
    let mut brute_remainders: Vec<Vec<Formula>> = Vec::new();
    let sentences = base.base().sentences();
    for mask in 0u32..8 {
        let subset: Vec<Formula> = (0..3)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| sentences[i].clone())
            .collect();
        if !tt_entails(&BeliefBase::new(subset.clone()), &atom("q")).unwrap() {
            brute_remainders.push(subset);
        }
    }
    brute_remainders = brute_remainders
        .iter()
        .filter(|r| {
            !brute_remainders
                .iter()
                .any(|o| o.len() > r.len() && r.iter().all(|f| o.contains(f)))
        })
        .cloned()
        .collect();
    let expected_remainder: Vec<Formula> = vec![parse("p -> q").unwrap(), parse("s").unwrap()];
    let remainder_oracle_ok = brute_remainders.contains(&expected_remainder);

    // context slice is {p, p -> q}; s stays outside
    let ctx = construct_context(&base, &evidence, &goal, SelectionPolicy::default()).unwrap();
    let slice_ok = ctx.base_slice == vec![atom("p"), parse("p -> q").unwrap()];

    // all context-condition flags pass
    let t1 = verify_theorem1(&base, &evidence, &ctx, SelectionPolicy::default(), 3).unwrap();

    // cross-check the degree value against a by-hand truth-table argument:
    // {p, p -> q} is the single minimal q-entailing subset
    let q_sets = obr_core::brute_entailment_sets(base.base(), &atom("q")).unwrap();
    let hand_sets_ok = q_sets == vec![vec![atom("p"), parse("p -> q").unwrap()]];

    let effort = ctx.effort(&base).unwrap();
    let effort_ok = effort.accessibility.map(|d| d.value()) == Some(1) && effort.size == 2;

    report(
        "10 (worked example regression)",
        deg_q == 1
            && deg_q_oracle == 1
            && retracted_ok
            && kept_ok
            && remainder_oracle_ok
            && slice_ok
            && t1.passed()
            && hand_sets_ok
            && effort_ok,
        &format!(
            "degree(q)={deg_q} (oracle {deg_q_oracle}); retracted {:?}; slice {:?}; flags {t1:?}",
            outcome
                .retracted
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>(),
            ctx.base_slice
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
        ),
    );
}

#[test]
fn acceptance_extra_worked_example_closure() {
    // the adjusted ranking of the running two-sentence example, end to end
    let base = rb(&[("p", 1), ("p -> q", 2)]);
    let outcome = obr_core::revise(&base, &parse("!q").unwrap(), SelectionPolicy::default())
        .unwrap();
    assert_eq!(
        outcome.new_ranking.rank_of(&parse("p -> q").unwrap()),
        Some(1)
    );
    assert_eq!(outcome.new_ranking.rank_of(&parse("!q").unwrap()), Some(2));
    // the retracted p now has the derived degree of its negation
    assert_eq!(degree(&outcome.new_ranking, &atom("p")).unwrap().value(), 1);
    assert_eq!(oracle_degree(&outcome.new_ranking, &atom("p")).unwrap(), 1);
    // and !p is genuinely derived: {p -> q, !q} is its only entailment set
    let sets = obr_core::brute_entailment_sets(&outcome.new_base, &not(atom("p"))).unwrap();
    assert_eq!(
        sets,
        vec![vec![parse("p -> q").unwrap(), parse("!q").unwrap()]]
    );
}
