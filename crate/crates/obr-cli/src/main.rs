//! `obr`: optimal belief revision over accessibility-ranked bases.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 inconsistent or
//! semantically invalid input, 4 cap exceeded, 5 property-check failure.

mod files;
mod output;
mod repl;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use obr_core::revision::SelectionPolicy;
use obr_core::{
    achievable_goals, construct_context, context_from_cut, cut_at, degree, is_bad_cut, leq_af,
    parse, revise, revise_sequence, select_optimal, sweep, verify_theorem1, Error, Goal,
    RankedBase, SweepCaps,
};

/// Default exhaustive-check cap on the atom universe.
const DEFAULT_MAX_ATOMS: usize = 3;

/// A failure with the exit code it maps to.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: String) -> Self {
        CliError { code, message }
    }

    pub fn usage(message: String) -> Self {
        CliError::new(1, message)
    }

    pub fn parse(message: String) -> Self {
        CliError::new(2, message)
    }

    pub fn inconsistent(message: String) -> Self {
        CliError::new(3, message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::LimitExceeded { .. } => 4,
            Error::UnknownProperty(_) => 1,
            Error::SequenceStep { source, .. } => CliError::from((**source).clone()).code,
            _ => 3,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<obr_core::ParseError> for CliError {
    fn from(e: obr_core::ParseError) -> Self {
        CliError::new(2, e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "obr",
    version,
    about = "Optimal belief revision over accessibility-ranked belief bases",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Remainder selection policy
    #[arg(long, global = true, default_value = "accessibility-partial-meet")]
    policy: String,

    /// Exhaustive-check cap on the atom universe (env: OBR_MAX_ATOMS)
    #[arg(long, global = true)]
    max_atoms: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BaseArg {
    /// Ranked-base file (.obr)
    #[arg(short = 'b', long = "base")]
    base: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form
    Parse { formula: String },

    /// Degree of accessibility of a sentence
    Degree {
        #[command(flatten)]
        base: BaseArg,
        formula: String,
    },

    /// Compare two sentences under the generated ordering
    Order {
        #[command(flatten)]
        base: BaseArg,
        left: String,
        right: String,
    },

    /// The upward slice at a sentence's level, with bad-cut detection
    Cut {
        #[command(flatten)]
        base: BaseArg,
        formula: String,
    },

    /// Construct a context for integrating evidence and deriving a goal
    Context {
        #[command(flatten)]
        base: BaseArg,
        evidence: String,
        /// Goal formula; defaults to the best achievable desideratum goal
        #[arg(long)]
        goal: Option<String>,
        /// Desideratum file: basic goals, one per line
        #[arg(long)]
        desideratum: Option<PathBuf>,
        /// Construction route
        #[arg(long, default_value = "construction", value_parser = ["construction", "cut", "optimal"])]
        route: String,
        /// Also verify the context conditions and report the flags
        #[arg(long)]
        check: bool,
    },

    /// Revise the base with new evidence (Levi identity + ranking adjustment)
    Revise {
        #[command(flatten)]
        base: BaseArg,
        evidence: String,
        /// Write the revised ranked base to a file
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Iterate revision over an evidence file, one formula per line
    Iterate {
        #[command(flatten)]
        base: BaseArg,
        evidence_file: PathBuf,
        /// Write the final ranked base to a file
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run a seeded property sweep
    Verify {
        /// One of: theorem1, theorem2, theorem3, theorem4, corollary1, agm,
        /// def9, oracle-agreement
        property: String,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },

    /// Interactive exploration
    Repl {
        #[arg(short = 'b', long = "base")]
        base: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            e.print().ok();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn resolve_max_atoms(cli: &Cli) -> Result<usize, CliError> {
    if let Some(k) = cli.max_atoms {
        return Ok(k);
    }
    match std::env::var("OBR_MAX_ATOMS") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::usage(format!("OBR_MAX_ATOMS=`{text}` is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_ATOMS),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let policy = SelectionPolicy::parse(&cli.policy)
        .ok_or_else(|| CliError::usage(format!("unknown policy `{}`", cli.policy)))?;
    let max_atoms = resolve_max_atoms(&cli)?;
    let json = cli.json;

    match cli.command {
        Command::Parse { formula } => {
            let f = parse(&formula)?;
            if json {
                println!("{}", json!({ "formula": f.to_string() }));
            } else {
                println!("{f}");
            }
        }

        Command::Degree { base, formula } => {
            let rb = files::load_ranked_base(&base.base)?;
            let f = parse(&formula)?;
            let d = degree(&rb, &f)?;
            if json {
                println!("{}", json!({ "degree": d.value() }));
            } else {
                println!("{d}");
            }
        }

        Command::Order { base, left, right } => {
            let rb = files::load_ranked_base(&base.base)?;
            let l = parse(&left)?;
            let r = parse(&right)?;
            let dl = degree(&rb, &l)?;
            let dr = degree(&rb, &r)?;
            let leq = leq_af(&rb, &l, &r)?;
            let geq = leq_af(&rb, &r, &l)?;
            if json {
                println!(
                    "{}",
                    json!({ "order": {
                        "left": l.to_string(),
                        "right": r.to_string(),
                        "leftDegree": dl.value(),
                        "rightDegree": dr.value(),
                        "leq": leq,
                        "geq": geq,
                    }})
                );
            } else {
                println!("deg({l}) = {dl}, deg({r}) = {dr}");
                println!("{l} <=_af {r}: {leq}");
                println!("{r} <=_af {l}: {geq}");
            }
        }

        Command::Cut { base, formula } => {
            let rb = files::load_ranked_base(&base.base)?;
            let f = parse(&formula)?;
            let cut = cut_at(&rb, &f)?;
            let witness = is_bad_cut(&rb, &cut)?;
            if json {
                println!(
                    "{}",
                    json!({ "cut": {
                        "level": cut.level,
                        "slice": cut.base_slice.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "badCut": witness.as_ref().map(|w| json!({"culprit": w.culprit.to_string()})),
                    }})
                );
            } else {
                let slice: Vec<String> = cut.base_slice.iter().map(|s| s.to_string()).collect();
                println!("level {}: {{{}}}", cut.level, slice.join(", "));
                match witness {
                    Some(w) => println!("bad cut: entails excluded `{}`", w.culprit),
                    None => println!("not a bad cut"),
                }
            }
        }

        Command::Context {
            base,
            evidence,
            goal,
            desideratum,
            route,
            check,
        } => {
            let rb = files::load_ranked_base(&base.base)?;
            let a = parse(&evidence)?;
            let goal = resolve_goal(&rb, &a, goal.as_deref(), desideratum.as_deref(), policy)?;
            let ctx = match route.as_str() {
                "construction" => construct_context(&rb, &a, &goal, policy)?,
                "cut" => context_from_cut(&rb, &a, &goal, policy, max_atoms)?,
                "optimal" => {
                    let eq3 = construct_context(&rb, &a, &goal, policy)?;
                    let cut = context_from_cut(&rb, &a, &goal, policy, max_atoms)?;
                    select_optimal(&rb, &[eq3, cut])?
                }
                _ => unreachable!("clap restricts the route values"),
            };
            let report = if check {
                Some(verify_theorem1(&rb, &a, &ctx, policy, max_atoms)?)
            } else {
                None
            };
            if json {
                let mut value = output::context_to_json(&ctx, &rb);
                if let Some(report) = &report {
                    value["conditions"] = json!({
                        "condition1": report.condition1,
                        "condition2": report.condition2,
                        "nonEmptyContractedContext": report.non_empty_contracted_context,
                        "goalDerived": report.goal_derived,
                        "negGoalContained": report.neg_goal_contained,
                    });
                }
                println!("{}", json!({ "context": value }));
            } else {
                print!("{}", output::context_to_text(&ctx, &rb));
                if let Some(report) = &report {
                    println!(
                        "conditions: {}",
                        if report.passed() {
                            "pass".to_string()
                        } else {
                            format!("FAIL {report:?}")
                        }
                    );
                }
            }
        }

        Command::Revise {
            base,
            evidence,
            out,
        } => {
            let rb = files::load_ranked_base(&base.base)?;
            let a = parse(&evidence)?;
            let outcome = revise(&rb, &a, policy)?;
            if let Some(path) = out {
                files::save_ranked_base(&path, &outcome.new_ranking)?;
            }
            if json {
                println!("{}", json!({ "revision": output::revision_to_json(&outcome) }));
            } else {
                print!("{}", output::revision_to_text(&outcome));
            }
        }

        Command::Iterate {
            base,
            evidence_file,
            out,
        } => {
            let rb = files::load_ranked_base(&base.base)?;
            let evidence = files::load_formula_lines(&evidence_file)?;
            let outcomes = revise_sequence(&rb, &evidence, policy)?;
            if let Some(path) = out {
                let last = outcomes.last().map(|o| &o.new_ranking).unwrap_or(&rb);
                files::save_ranked_base(&path, last)?;
            }
            if json {
                let steps: Vec<serde_json::Value> =
                    outcomes.iter().map(output::revision_to_json).collect();
                println!("{}", json!({ "steps": steps }));
            } else {
                for (i, outcome) in outcomes.iter().enumerate() {
                    println!("step {}:", i + 1);
                    print!("{}", output::revision_to_text(outcome));
                }
            }
        }

        Command::Verify {
            property,
            trials,
            seed,
        } => {
            let caps = SweepCaps {
                max_atoms,
                ..SweepCaps::default()
            };
            let results = sweep(&property, trials, seed, &caps)?;
            let passes = results.iter().filter(|c| c.passed).count();
            if json {
                println!("{}", json!({ "verify": output::verify_to_json(&property, &results) }));
            } else {
                println!("{property}: {passes}/{} pass", results.len());
                for case in results.iter().filter(|c| !c.passed) {
                    println!(
                        "  FAIL {} — {}",
                        case.instance,
                        case.counterexample.as_deref().unwrap_or("")
                    );
                }
            }
            if passes != results.len() {
                return Ok(5);
            }
        }

        Command::Repl { base } => {
            let initial = match base {
                Some(path) => Some(files::load_ranked_base(&path)?),
                None => None,
            };
            repl::run(initial, policy, max_atoms)?;
        }
    }
    Ok(0)
}

/// Resolves the goal: an explicit formula, or the best achievable goal of a
/// desideratum.
fn resolve_goal(
    rb: &RankedBase,
    a: &obr_core::Formula,
    goal: Option<&str>,
    desideratum: Option<&std::path::Path>,
    policy: SelectionPolicy,
) -> Result<Goal, CliError> {
    if let Some(text) = goal {
        return Ok(Goal::basic(&parse(text)?));
    }
    let path = desideratum.ok_or_else(|| {
        CliError::usage("context needs --goal <formula> or --desideratum <file>".to_string())
    })?;
    let d = files::load_desideratum(path)?;
    if !d.holds_in(rb.base())? {
        return Err(CliError::inconsistent(format!(
            "presupposition `{}` is not believed",
            d.presupposition()
        )));
    }
    let goals = achievable_goals(rb, a, &d, policy)?;
    goals.into_iter().next().ok_or_else(|| {
        CliError::inconsistent("no achievable goal for this evidence and desideratum".to_string())
    })
}
