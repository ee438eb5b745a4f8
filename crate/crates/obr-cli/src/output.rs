//! Text and JSON rendering with stable keys.

use serde_json::{json, Value};

use obr_core::{Context, PropertyCaseResult, RankedBase, RevisionOutcome};

pub fn formulas_to_json(fs: &[obr_core::Formula]) -> Value {
    Value::Array(fs.iter().map(|f| json!(f.to_string())).collect())
}

pub fn ranking_to_json(rb: &RankedBase) -> Value {
    Value::Array(
        rb.iter()
            .map(|(f, r)| json!({"rank": r, "formula": f.to_string()}))
            .collect(),
    )
}

pub fn revision_to_json(outcome: &RevisionOutcome) -> Value {
    let retained: Vec<&obr_core::Formula> = outcome
        .new_base
        .iter()
        .filter(|f| **f != outcome.added)
        .collect();
    json!({
        "retained": retained.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "retracted": outcome.retracted.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "added": outcome.added.to_string(),
        "ranking": ranking_to_json(&outcome.new_ranking),
    })
}

pub fn revision_to_text(outcome: &RevisionOutcome) -> String {
    let mut out = String::new();
    let retained: Vec<String> = outcome
        .new_base
        .iter()
        .filter(|f| **f != outcome.added)
        .map(|f| f.to_string())
        .collect();
    let retracted: Vec<String> = outcome.retracted.iter().map(|f| f.to_string()).collect();
    out.push_str(&format!("added:     {}\n", outcome.added));
    out.push_str(&format!("retained:  {{{}}}\n", retained.join(", ")));
    out.push_str(&format!("retracted: {{{}}}\n", retracted.join(", ")));
    out.push_str("ranking:\n");
    for (f, r) in outcome.new_ranking.iter() {
        out.push_str(&format!("  {r} : {f}\n"));
    }
    out
}

pub fn context_to_json(ctx: &Context, rb: &RankedBase) -> Value {
    let effort = ctx.effort(rb).expect("effort of a constructed context");
    json!({
        "negA": formulas_to_json(&ctx.neg_a_part),
        "goal": formulas_to_json(&ctx.goal_part),
        "negGoal": formulas_to_json(&ctx.neg_goal_part),
        "slice": formulas_to_json(&ctx.base_slice),
        "effort": {
            "accessibility": effort.accessibility.map(|d| d.value()),
            "size": effort.size,
        },
    })
}

pub fn context_to_text(ctx: &Context, rb: &RankedBase) -> String {
    let effort = ctx.effort(rb).expect("effort of a constructed context");
    let fmt = |fs: &[obr_core::Formula]| {
        fs.iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::new();
    out.push_str(&format!("evidence:  {}\n", ctx.evidence));
    out.push_str(&format!("goal:      {}\n", ctx.goal.formula));
    out.push_str(&format!("negA part: {{{}}}\n", fmt(&ctx.neg_a_part)));
    out.push_str(&format!("goal part: {{{}}}\n", fmt(&ctx.goal_part)));
    if !ctx.neg_goal_part.is_empty() {
        out.push_str(&format!("negG part: {{{}}}\n", fmt(&ctx.neg_goal_part)));
    }
    out.push_str(&format!("slice:     {{{}}}\n", fmt(&ctx.base_slice)));
    out.push_str(&format!(
        "effort:    accessibility {}, size {}\n",
        effort
            .accessibility
            .map_or("none".to_string(), |d| d.to_string()),
        effort.size
    ));
    out
}

pub fn verify_to_json(property: &str, results: &[PropertyCaseResult]) -> Value {
    let passes = results.iter().filter(|c| c.passed).count();
    let failures: Vec<Value> = results
        .iter()
        .filter(|c| !c.passed)
        .map(|c| {
            json!({
                "instance": c.instance,
                "counterexample": c.counterexample,
            })
        })
        .collect();
    json!({
        "property": property,
        "trials": results.len(),
        "passes": passes,
        "failures": failures,
    })
}
