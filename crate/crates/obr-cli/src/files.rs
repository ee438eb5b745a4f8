//! Flat-file formats: ranked bases (`.obr`), desiderata, and evidence lists.

use std::fs;
use std::path::Path;

use obr_core::{parse, Desideratum, Formula, RankedBase};

use crate::CliError;

/// Loads a ranked base from the `.obr` line format: `<rank> : <formula>`,
/// `#` comments, blank lines ignored. Ranks must form a contiguous range
/// starting at 1.
pub fn load_ranked_base(path: &Path) -> Result<RankedBase, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut pairs: Vec<(Formula, u32)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (rank_text, formula_text) = line.split_once(':').ok_or_else(|| {
            CliError::parse(format!(
                "{}:{}: expected `<rank> : <formula>`",
                path.display(),
                lineno + 1
            ))
        })?;
        let rank: u32 = rank_text.trim().parse().map_err(|_| {
            CliError::parse(format!(
                "{}:{}: `{}` is not a rank",
                path.display(),
                lineno + 1,
                rank_text.trim()
            ))
        })?;
        let formula = parse(formula_text).map_err(|e| {
            CliError::parse(format!("{}:{}: {e}", path.display(), lineno + 1))
        })?;
        if pairs.iter().any(|(f, _)| *f == formula) {
            return Err(CliError::inconsistent(format!(
                "{}:{}: duplicate sentence `{formula}`",
                path.display(),
                lineno + 1
            )));
        }
        pairs.push((formula, rank));
    }
    RankedBase::from_pairs(pairs).map_err(CliError::from)
}

/// Writes a ranked base in the `.obr` line format, one sentence per line in
/// base order.
pub fn save_ranked_base(path: &Path, rb: &RankedBase) -> Result<(), CliError> {
    fs::write(path, render_ranked_base(rb))
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

pub fn render_ranked_base(rb: &RankedBase) -> String {
    let mut out = String::new();
    for (f, r) in rb.iter() {
        out.push_str(&format!("{r} : {f}\n"));
    }
    out
}

/// Loads one formula per line; `#` comments and blank lines ignored.
pub fn load_formula_lines(path: &Path) -> Result<Vec<Formula>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let formula = parse(line).map_err(|e| {
            CliError::parse(format!("{}:{}: {e}", path.display(), lineno + 1))
        })?;
        out.push(formula);
    }
    Ok(out)
}

/// Loads a desideratum file: basic goals, one per line.
pub fn load_desideratum(path: &Path) -> Result<Desideratum, CliError> {
    let goals = load_formula_lines(path)?;
    Desideratum::new(goals).map_err(CliError::from)
}
