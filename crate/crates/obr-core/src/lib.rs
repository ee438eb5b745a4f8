//! Optimal belief revision over finite propositional belief bases.
//!
//! The crate models belief states as accessibility-ranked bases: every base
//! sentence carries an integer rank, larger meaning more accessible. On top
//! of that sit the degree of accessibility for arbitrary sentences, cuts and
//! bad-cut detection, AGM revision via the Levi identity with an
//! accessibility-guided selection, context construction from entailment
//! sets, effort-based optimal-context selection, and the post-revision
//! ranking adjustment for iterated revision.
//!
//! Everything is verifiable at desk scale: [`verifier`] holds truth-table and
//! subset-enumeration oracles that share no code with the decision
//! procedures they check, plus seeded sweeps for the structural theorems.
//!
//! All operations are pure functions of immutable values; nothing here holds
//! interior mutability, so values can be shared freely across threads.

pub mod accessibility;
pub mod context;
pub mod entailment;
pub mod error;
pub mod formula;
pub mod logic;
pub mod parse;
pub mod revision;
pub mod verifier;

pub use accessibility::{
    cut_at, cut_contains, degree, is_bad_cut, leq_af, set_accessibility, BadCutWitness, Cut,
    Degree, PostulateReport, RankedBase,
};
pub use context::{
    achievable_goals, construct_context, context_from_cut, select_optimal, verify_corollary1,
    verify_theorem1, Context, Corollary1Report, Desideratum, EffortMeasure, Goal, Theorem1Report,
};
pub use entailment::{entailment_sets, is_entailment_set, EntailmentSet};
pub use error::{Error, ParseError};
pub use formula::{canonicalize, negate, Formula, Valuation};
pub use logic::{
    entails, equivalent, is_consistent, is_tautology, semantic_classes, BeliefBase, SemanticClass,
    Universe,
};
pub use parse::parse;
pub use revision::{
    adjust_ranking, check_agm, contract, expand, remainders, revise, revise_sequence, AgmReport,
    Remainder, RevisionOutcome, SelectionPolicy,
};
pub use verifier::{
    brute_entailment_sets, oracle_degree, sweep, tt_entails, PropertyCaseResult, SweepCaps,
};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_shareable<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        assert_shareable::<Formula>();
        assert_shareable::<BeliefBase>();
        assert_shareable::<RankedBase>();
        assert_shareable::<Context>();
        assert_shareable::<RevisionOutcome>();
        assert_shareable::<Error>();
    }
}
