//! The propositional language: formulas, canonical form, and valuations.

use std::collections::BTreeSet;
use std::fmt;

/// A propositional sentence.
///
/// Atom names match `[a-z][a-z0-9_]*`; `Top` and `Bottom` are the constants
/// `true` and `false`. Structural equality after [`canonicalize`] is the
/// identity used throughout: base membership, deduplication, and retraction
/// bookkeeping all compare canonical trees, never semantic classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Top,
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

pub fn atom(name: &str) -> Formula {
    Formula::Atom(name.to_string())
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

pub fn iff(a: Formula, b: Formula) -> Formula {
    Formula::Iff(Box::new(a), Box::new(b))
}

impl Formula {
    /// Collects the atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms(&self, set: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                set.insert(name.clone());
            }
            Formula::Top | Formula::Bottom => {}
            Formula::Not(child) => child.collect_atoms(set),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                l.collect_atoms(set);
                r.collect_atoms(set);
            }
        }
    }

    /// True if the formula is exactly an atom, `Top`, or `Bottom`.
    pub fn is_literal_shaped(&self) -> bool {
        matches!(
            self,
            Formula::Atom(_) | Formula::Top | Formula::Bottom | Formula::Not(_)
        )
    }
}

/// Rewrites a formula to canonical form.
///
/// Canonicalization eliminates double negation and folds negated constants
/// (`!true` to `false`, `!false` to `true`); nothing else. In particular no
/// commutativity or absorption rewriting happens, so `p & q` and `q & p`
/// stay distinct sentences. The rewrite is idempotent.
pub fn canonicalize(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Bottom => f.clone(),
        Formula::Not(child) => match canonicalize(child) {
            Formula::Not(inner) => *inner,
            Formula::Top => Formula::Bottom,
            Formula::Bottom => Formula::Top,
            other => not(other),
        },
        Formula::And(l, r) => and(canonicalize(l), canonicalize(r)),
        Formula::Or(l, r) => or(canonicalize(l), canonicalize(r)),
        Formula::Implies(l, r) => implies(canonicalize(l), canonicalize(r)),
        Formula::Iff(l, r) => iff(canonicalize(l), canonicalize(r)),
    }
}

/// Canonical negation: `negate(!p)` is `p`, not `!!p`.
pub fn negate(f: &Formula) -> Formula {
    canonicalize(&not(f.clone()))
}

// Printer precedence levels. Higher binds tighter.
const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_NOT: u8 = 5;
const PREC_ATOM: u8 = 6;

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Formula {
    // `->` and `<->` print right-associatively, `&` and `|` left-associatively,
    // mirroring the parser so that print/parse round-trips structurally.
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = match self {
            Formula::Iff(_, _) => PREC_IFF,
            Formula::Implies(_, _) => PREC_IMPLIES,
            Formula::Or(_, _) => PREC_OR,
            Formula::And(_, _) => PREC_AND,
            Formula::Not(_) => PREC_NOT,
            _ => PREC_ATOM,
        };
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(name) => write!(f, "{name}")?,
            Formula::Top => write!(f, "true")?,
            Formula::Bottom => write!(f, "false")?,
            Formula::Not(child) => {
                write!(f, "!")?;
                child.fmt_prec(f, PREC_NOT)?;
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, PREC_AND)?;
                write!(f, " & ")?;
                r.fmt_prec(f, PREC_AND + 1)?;
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, PREC_OR)?;
                write!(f, " | ")?;
                r.fmt_prec(f, PREC_OR + 1)?;
            }
            Formula::Implies(l, r) => {
                l.fmt_prec(f, PREC_IMPLIES + 1)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, PREC_IMPLIES)?;
            }
            Formula::Iff(l, r) => {
                l.fmt_prec(f, PREC_IFF + 1)?;
                write!(f, " <-> ")?;
                r.fmt_prec(f, PREC_IFF)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A total truth assignment over a declared finite atom universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    assignment: Vec<(String, bool)>,
}

impl Valuation {
    /// Builds a valuation from `(atom, value)` pairs; atoms are kept sorted.
    pub fn new(pairs: impl IntoIterator<Item = (String, bool)>) -> Self {
        let mut assignment: Vec<(String, bool)> = pairs.into_iter().collect();
        assignment.sort_by(|a, b| a.0.cmp(&b.0));
        assignment.dedup_by(|a, b| a.0 == b.0);
        Valuation { assignment }
    }

    /// Looks up an atom. Panics if the atom is outside the declared universe;
    /// valuations are total by construction.
    pub fn value(&self, name: &str) -> bool {
        self.assignment
            .binary_search_by(|(a, _)| a.as_str().cmp(name))
            .map(|i| self.assignment[i].1)
            .unwrap_or_else(|_| panic!("atom `{name}` is outside the declared universe"))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.assignment.iter().map(|(a, _)| a.as_str())
    }

    /// Evaluates a formula under this valuation.
    pub fn eval(&self, f: &Formula) -> bool {
        match f {
            Formula::Atom(name) => self.value(name),
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Not(child) => !self.eval(child),
            Formula::And(l, r) => self.eval(l) && self.eval(r),
            Formula::Or(l, r) => self.eval(l) || self.eval(r),
            Formula::Implies(l, r) => !self.eval(l) || self.eval(r),
            Formula::Iff(l, r) => self.eval(l) == self.eval(r),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(a, v)| format!("{a}={}", if *v { "1" } else { "0" }))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
