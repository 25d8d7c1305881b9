//! Subcommand implementations.
//!
//! Each command returns an [`Outcome`] that fixes the process exit code:
//! `Pass` exits 0, `VerificationFailed` exits 1. Errors bubble up as
//! `anyhow` errors and exit 2 (usage or domain problems), matching the
//! treatment clap gives malformed flags.

use std::fs;
use std::path::Path;

use abc_trees::analysis::{constant_table, monotonicity_scan, GridSpec, PropFunction};
use abc_trees::enumerate::labeled_trees_with_degrees;
use abc_trees::greedy::{degree_sequences, greedy_tree};
use abc_trees::io::{format_tree, parse_tree};
use abc_trees::transforms::{apply, find_configuration, verify_all, TransformKind};
use abc_trees::{abc_index, minimal_abc_properties, CheckStatus, DegreeSequence, Tree};
use anyhow::{bail, Context, Result};

use crate::config::{OutputFormat, RunConfig, TOOL_VERSION};
use crate::report::build_report;
use crate::runner::{run_brute, run_dsearch, search_payload};
use crate::store::{ResultStore, StoreRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::VerificationFailed => 1,
        }
    }

    fn from_ok(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::VerificationFailed
        }
    }
}

fn read_tree(path: &Path) -> Result<Tree> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_tree(&text).with_context(|| format!("in {}", path.display()))
}

fn stamp(cfg: &RunConfig, kind: &str, payload: serde_json::Value) -> StoreRecord {
    StoreRecord {
        tool_version: TOOL_VERSION.to_string(),
        config_hash: cfg.hash(),
        kind: kind.to_string(),
        payload,
    }
}

pub fn index(tree: &Path) -> Result<Outcome> {
    let t = read_tree(tree)?;
    let abc = abc_index(&t)?;
    println!("{:.6}", abc.value);
    Ok(Outcome::Pass)
}

/// Shared tail of `brute` and `dsearch`: record the result, then print it
/// in the requested format.
fn finish_search(
    cfg: &RunConfig,
    result: &abc_trees::enumerate::SearchResult,
) -> Result<Outcome> {
    let payload = search_payload(result);
    let store = ResultStore::resolve(cfg.out.clone());
    store.append(&stamp(cfg, &cfg.command, serde_json::to_value(&payload)?))?;
    match cfg.format {
        OutputFormat::Text => {
            println!("n {}", payload.n);
            println!("abc_min {:.6}", payload.abc_min);
            println!("examined {}", payload.examined);
            println!("minimizers {}", payload.trees.len());
            for seq in &payload.trees {
                println!("canonical {seq}");
            }
            println!("properties {}", payload.properties);
            println!("store {}", store.path().display());
        }
        OutputFormat::Json => println!("{}", serde_json::to_string(&payload)?),
        OutputFormat::Csv => {
            println!("n,abc_min,examined,minimizers,properties");
            println!(
                "{},{:.10},{},{},{}",
                payload.n,
                payload.abc_min,
                payload.examined,
                payload.trees.len(),
                payload.properties
            );
        }
    }
    Ok(Outcome::Pass)
}

pub fn brute(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.n.context("brute needs --n")?;
    let result = run_brute(n, cfg.jobs, cfg.force)?;
    finish_search(cfg, &result)
}

pub fn dsearch(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.n.context("dsearch needs --n")?;
    let result = run_dsearch(n, cfg.force)?;
    finish_search(cfg, &result)
}

pub fn greedy(degrees: &[usize]) -> Result<Outcome> {
    let ds = DegreeSequence::new(degrees.to_vec())?;
    if !ds.realizable_as_tree() {
        bail!("degree sequence {:?} is not realizable as a tree", ds.as_slice());
    }
    let built = greedy_tree(&ds)?;
    let abc = abc_index(&built.tree)?;
    println!("abc_index {:.6}", abc.value);
    print!("{}", format_tree(&built.tree));
    Ok(Outcome::Pass)
}

pub fn props(tree: &Path) -> Result<Outcome> {
    let t = read_tree(tree)?;
    let report = minimal_abc_properties(&t);
    for (name, status) in &report.checks {
        match status {
            CheckStatus::Pass => println!("{name}: pass"),
            CheckStatus::Fail { witness } => println!("{name}: FAIL ({witness})"),
            CheckStatus::NotApplicable { reason } => println!("{name}: n/a ({reason})"),
        }
    }
    Ok(Outcome::from_ok(report.all_pass()))
}

pub fn transform(kind: &str, tree: &Path, out: Option<&Path>) -> Result<Outcome> {
    let kind: TransformKind = kind.parse()?;
    let t = read_tree(tree)?;
    let locations = find_configuration(&t, kind);
    let Some(loc) = locations.first() else {
        bail!("no {kind} configuration in {}", tree.display());
    };
    let outcome = apply(&t, kind, *loc)?;
    let summary = serde_json::json!({
        "kind": kind,
        "location": loc,
        "delta_exact": outcome.delta_exact,
        "delta_closed_form": outcome.delta_closed_form,
        "bound_kind": outcome.bound_kind,
        "after": format_tree(&outcome.tree),
    });
    println!("{summary}");
    if let Some(path) = out {
        fs::write(path, format_tree(&outcome.tree))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Outcome::Pass)
}

pub fn verify_constants(cfg: &RunConfig) -> Result<Outcome> {
    let store = ResultStore::resolve(cfg.out.clone());
    let rows = constant_table()?;
    let mut ok = true;
    for row in &rows {
        println!(
            "{}: expected {} computed {:.7} error {:.2e} tolerance {:.0e} {}",
            row.id,
            row.expected,
            row.computed,
            row.abs_error,
            row.tolerance,
            if row.pass() { "PASS" } else { "FAIL" }
        );
        ok &= row.pass();
        store.append(&stamp(cfg, "constant", serde_json::to_value(row)?))?;
    }
    Ok(Outcome::from_ok(ok))
}

pub fn verify_propositions(cfg: &RunConfig) -> Result<Outcome> {
    let store = ResultStore::resolve(cfg.out.clone());
    let grid = GridSpec::default();
    let mut ok = true;
    for id in PropFunction::ALL {
        let report = monotonicity_scan(id, &grid)?;
        println!(
            "{id}: examined {} violations {} {}",
            report.examined,
            report.violations.len(),
            if report.all_ok() { "PASS" } else { "FAIL" }
        );
        for violation in report.violations.iter().take(5) {
            println!("  {violation}");
        }
        ok &= report.all_ok();
        store.append(&stamp(cfg, "scan", serde_json::to_value(&report)?))?;
    }
    Ok(Outcome::from_ok(ok))
}

pub fn verify_transforms(cfg: &RunConfig) -> Result<Outcome> {
    let store = ResultStore::resolve(cfg.out.clone());
    let mut ok = true;
    for report in verify_all(cfg.seed) {
        println!(
            "{}: examined {} max_delta {:.6e} {}",
            report.kind,
            report.examined,
            report.max_delta,
            if report.all_ok() { "PASS" } else { "FAIL" }
        );
        for violation in report.violations.iter().take(5) {
            println!("  {violation}");
        }
        ok &= report.all_ok();
        store.append(&stamp(cfg, "sweep", serde_json::to_value(&report)?))?;
    }
    Ok(Outcome::from_ok(ok))
}

/// Check the greedy construction against every labeled tree of every
/// realizable degree sequence, order by order.
pub fn verify_greedy(cfg: &RunConfig) -> Result<Outcome> {
    let store = ResultStore::resolve(cfg.out.clone());
    let n_max = cfg.n.context("verify greedy needs --n")?;
    let mut ok = true;
    for n in 4..=n_max {
        let mut sequences = 0usize;
        let mut labeled = 0u64;
        let mut worst_gap = f64::NEG_INFINITY;
        let mut violations = 0usize;
        for cand in degree_sequences(n, false)? {
            sequences += 1;
            let greedy_value = abc_index(&greedy_tree(&cand.ds)?.tree)?.value;
            for t in labeled_trees_with_degrees(&cand.ds)? {
                labeled += 1;
                let gap = greedy_value - abc_index(&t)?.value;
                worst_gap = worst_gap.max(gap);
                if gap > cfg.tol {
                    violations += 1;
                }
            }
        }
        println!(
            "n={n}: sequences {sequences} labeled {labeled} worst_gap {worst_gap:.3e} {}",
            if violations == 0 { "PASS" } else { "FAIL" }
        );
        ok &= violations == 0;
        store.append(&stamp(
            cfg,
            "greedy",
            serde_json::json!({
                "n": n,
                "sequences": sequences,
                "labeled": labeled,
                "worst_gap": worst_gap,
                "violations": violations,
            }),
        ))?;
    }
    Ok(Outcome::from_ok(ok))
}

pub fn report(range: Option<(usize, usize)>, out: Option<&Path>) -> Result<Outcome> {
    let store = ResultStore::resolve(None);
    let records = store.load()?;
    let table = build_report(&records, range)?;
    match out {
        Some(path) => fs::write(path, &table)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{table}"),
    }
    Ok(Outcome::Pass)
}

/// Parse `A..B` as an inclusive order range.
pub fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (lo, hi) = text
        .split_once("..")
        .with_context(|| format!("range {text:?} is not of the form A..B"))?;
    let lo: usize = lo.trim().parse().with_context(|| format!("bad range start {lo:?}"))?;
    let hi = hi.trim().strip_prefix('=').unwrap_or(hi.trim());
    let hi: usize = hi.trim().parse().with_context(|| format!("bad range end {hi:?}"))?;
    if lo > hi {
        bail!("empty range {text:?}");
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse_inclusively() {
        assert_eq!(parse_range("10..20").unwrap(), (10, 20));
        assert_eq!(parse_range("10..=20").unwrap(), (10, 20));
        assert_eq!(parse_range("7..7").unwrap(), (7, 7));
        assert!(parse_range("20..10").is_err());
        assert!(parse_range("ten").is_err());
    }
}
