//! Shared fixtures for the benchmarks.

use obr_core::{parse, BeliefBase, Formula, RankedBase};

/// The running three-sentence example base.
pub fn small_base() -> RankedBase {
    ranked(&[("p", 1), ("p -> q", 2), ("s", 1)])
}

/// A wider base with several derivation routes and an irrelevant tail.
pub fn medium_base() -> RankedBase {
    ranked(&[
        ("p", 1),
        ("q", 2),
        ("p -> r", 2),
        ("q -> r", 3),
        ("r -> s", 1),
        ("t", 3),
        ("t -> u", 2),
        ("v", 1),
    ])
}

pub fn ranked(pairs: &[(&str, u32)]) -> RankedBase {
    RankedBase::from_pairs(
        pairs
            .iter()
            .map(|(text, rank)| (parse(text).unwrap(), *rank)),
    )
    .expect("valid fixture base")
}

pub fn base(texts: &[&str]) -> BeliefBase {
    BeliefBase::new(texts.iter().map(|t| parse(t).unwrap()))
}

pub fn formula(text: &str) -> Formula {
    parse(text).unwrap()
}
