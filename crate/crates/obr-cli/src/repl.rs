//! Interactive exploration loop.
//!
//! The session keeps the initial base and the list of revision steps;
//! replaying the steps from the initial base always reproduces the current
//! state, which is what makes `undo` exact.

use std::io::{self, BufRead, Write};
use std::path::Path;

use obr_core::revision::SelectionPolicy;
use obr_core::{
    achievable_goals, construct_context, cut_at, degree, is_bad_cut, leq_af, parse, revise,
    verify_theorem1, Desideratum, Formula, Goal, RankedBase, RevisionOutcome,
};

use crate::files;
use crate::output;
use crate::CliError;

struct Step {
    evidence: Formula,
    policy: SelectionPolicy,
    outcome: RevisionOutcome,
}

pub struct Session {
    initial: Option<RankedBase>,
    current: Option<RankedBase>,
    steps: Vec<Step>,
    desideratum: Option<Desideratum>,
    policy: SelectionPolicy,
    max_atoms: usize,
}

impl Session {
    pub fn new(initial: Option<RankedBase>, policy: SelectionPolicy, max_atoms: usize) -> Self {
        Session {
            current: initial.clone(),
            initial,
            steps: Vec::new(),
            desideratum: None,
            policy,
            max_atoms,
        }
    }

    fn base(&self) -> Result<&RankedBase, CliError> {
        self.current
            .as_ref()
            .ok_or_else(|| CliError::usage("no base loaded; use `load <file>`".to_string()))
    }

    fn replay(&self) -> Result<RankedBase, CliError> {
        let mut rb = self
            .initial
            .clone()
            .ok_or_else(|| CliError::usage("no base loaded".to_string()))?;
        for step in &self.steps {
            let outcome = revise(&rb, &step.evidence, step.policy)?;
            rb = outcome.new_ranking;
        }
        Ok(rb)
    }
}

const HELP: &str = "\
commands:
  load <file>             load a ranked base (.obr)
  base                    show the current ranked base
  degree <formula>        degree of accessibility
  order <f> ; <g>         compare two sentences under the generated ordering
  cut <formula>           upward slice at the sentence's level, bad-cut check
  revise <formula>        revise by new evidence (adjusts the ranking)
  undo                    undo the last revision
  goals <evidence>        achievable goals for the loaded desideratum
  context <evidence> ; <goal>   entailment-set context for evidence and goal
  desideratum <file>      load basic goals, one per line
  policy <name>           accessibility-partial-meet | full-meet | maxichoice-first
  save <file>             write the current ranked base
  history                 list the revisions applied so far
  help                    this text
  quit                    leave the repl";

pub fn run(
    initial: Option<RankedBase>,
    policy: SelectionPolicy,
    max_atoms: usize,
) -> Result<(), CliError> {
    let mut session = Session::new(initial, policy, max_atoms);
    let stdin = io::stdin();
    let mut out = io::stdout();
    writeln!(out, "obr repl; `help` lists commands").ok();
    loop {
        write!(out, "obr> ").ok();
        out.flush().ok();
        let mut line = String::new();
        if stdin.lock().read_line(&mut line).unwrap_or(0) == 0 {
            break;
        }
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match dispatch(&mut session, line) {
            Ok(ReplControl::Continue) => {}
            Ok(ReplControl::Quit) => break,
            Err(e) => writeln!(out, "error: {}", e.message).unwrap_or(()),
        }
    }
    Ok(())
}

enum ReplControl {
    Continue,
    Quit,
}

fn dispatch(session: &mut Session, line: &str) -> Result<ReplControl, CliError> {
    let (command, rest) = match line.split_once(char::is_whitespace) {
        Some((c, r)) => (c, r.trim()),
        None => (line, ""),
    };
    match command {
        "quit" | "exit" => return Ok(ReplControl::Quit),
        "help" => println!("{HELP}"),
        "load" => {
            let rb = files::load_ranked_base(Path::new(rest))?;
            session.initial = Some(rb.clone());
            session.current = Some(rb);
            session.steps.clear();
            println!("loaded {} sentences", session.base()?.len());
        }
        "base" => {
            print!("{}", files::render_ranked_base(session.base()?));
        }
        "degree" => {
            let f = parse(rest)?;
            println!("{}", degree(session.base()?, &f)?);
        }
        "order" => {
            let (left_text, right_text) = rest
                .split_once(';')
                .ok_or_else(|| CliError::usage("order takes `<f> ; <g>`".to_string()))?;
            let left = parse(left_text)?;
            let right = parse(right_text)?;
            let rb = session.base()?;
            let dl = degree(rb, &left)?;
            let dr = degree(rb, &right)?;
            let leq = leq_af(rb, &left, &right)?;
            let geq = leq_af(rb, &right, &left)?;
            println!("deg({left}) = {dl}, deg({right}) = {dr}");
            println!("{left} <=_af {right}: {leq}");
            println!("{right} <=_af {left}: {geq}");
        }
        "cut" => {
            let f = parse(rest)?;
            let rb = session.base()?;
            let cut = cut_at(rb, &f)?;
            let slice: Vec<String> = cut.base_slice.iter().map(|s| s.to_string()).collect();
            println!("level {}: {{{}}}", cut.level, slice.join(", "));
            match is_bad_cut(rb, &cut)? {
                Some(witness) => println!("bad cut: entails excluded `{}`", witness.culprit),
                None => println!("not a bad cut"),
            }
        }
        "revise" => {
            let evidence = parse(rest)?;
            let outcome = revise(session.base()?, &evidence, session.policy)?;
            print!("{}", output::revision_to_text(&outcome));
            session.current = Some(outcome.new_ranking.clone());
            session.steps.push(Step {
                evidence,
                policy: session.policy,
                outcome,
            });
        }
        "undo" => {
            if session.steps.pop().is_none() {
                return Err(CliError::usage("nothing to undo".to_string()));
            }
            session.current = Some(session.replay()?);
            println!("undone; {} revisions remain", session.steps.len());
        }
        "goals" => {
            let evidence = parse(rest)?;
            let d = session
                .desideratum
                .as_ref()
                .ok_or_else(|| CliError::usage("no desideratum loaded".to_string()))?;
            let goals = achievable_goals(session.base()?, &evidence, d, session.policy)?;
            if goals.is_empty() {
                println!("no achievable goals");
            }
            for g in goals {
                println!("{}", g.formula);
            }
        }
        "context" => {
            let (evidence_text, goal_text) = rest
                .split_once(';')
                .ok_or_else(|| CliError::usage("context takes `<evidence> ; <goal>`".to_string()))?;
            let evidence = parse(evidence_text)?;
            let goal = Goal::basic(&parse(goal_text)?);
            let rb = session.base()?;
            let ctx = construct_context(rb, &evidence, &goal, session.policy)?;
            print!("{}", output::context_to_text(&ctx, rb));
            let report = verify_theorem1(rb, &evidence, &ctx, session.policy, session.max_atoms)?;
            println!(
                "context conditions: {}",
                if report.passed() { "pass" } else { "FAIL" }
            );
        }
        "desideratum" => {
            session.desideratum = Some(files::load_desideratum(Path::new(rest))?);
            let d = session.desideratum.as_ref().expect("just set");
            println!("presupposition: {}", d.presupposition());
        }
        "policy" => match SelectionPolicy::parse(rest) {
            Some(p) => {
                session.policy = p;
                println!("policy: {}", p.name());
            }
            None => return Err(CliError::usage(format!("unknown policy `{rest}`"))),
        },
        "save" => {
            files::save_ranked_base(Path::new(rest), session.base()?)?;
            println!("saved");
        }
        "history" => {
            if session.steps.is_empty() {
                println!("no revisions yet");
            }
            for (i, step) in session.steps.iter().enumerate() {
                let retracted: Vec<String> = step
                    .outcome
                    .retracted
                    .iter()
                    .map(|f| f.to_string())
                    .collect();
                println!(
                    "{}. revise {} (retracted: {{{}}})",
                    i + 1,
                    step.evidence,
                    retracted.join(", ")
                );
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown command `{other}`; try `help`"
            )))
        }
    }
    Ok(ReplControl::Continue)
}
