//! Exhaustive comparison of the switching rook polynomial with the
//! h-polynomial, shape by shape.

mod checkpoint;
pub mod dataset;
mod report;

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{satisfies_sharp, satisfies_sharp_prime, MonomialOrder};
use crate::convex::recursive_h;
use crate::deadline::Deadline;
use crate::enumerate::{enumerate, Kind};
use crate::grid::CellCollection;
use crate::hilbert::h_polynomial_with_order;
use crate::poly::IntPolynomial;
use crate::switch::switch_class_counts;
use crate::{Error, Result};

pub use checkpoint::Checkpoint;
pub use dataset::{read_dataset, read_dataset_from, write_dataset, write_dataset_to};
pub use report::{format_outcome, format_record, parse_record};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub canonical_key: String,
    pub rank: usize,
    pub kind: Kind,
    pub switching: IntPolynomial,
    pub h: IntPolynomial,
    pub rook_number: usize,
    pub deg_h: usize,
    pub simple: bool,
    pub sharp: bool,
    pub sharp_prime: bool,
    pub match_poly: bool,
    pub match_reg: bool,
    pub elapsed_ms: u64,
}

impl VerificationRecord {
    pub fn is_counterexample(&self) -> bool {
        !(self.match_poly && self.match_reg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Verified(VerificationRecord),
    Timeout {
        canonical_key: String,
        rank: usize,
        kind: Kind,
        elapsed_ms: u64,
    },
}

impl Outcome {
    pub fn key(&self) -> &str {
        match self {
            Outcome::Verified(r) => &r.canonical_key,
            Outcome::Timeout { canonical_key, .. } => canonical_key,
        }
    }
}

/// Which secondary checks ran on a shape.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct CrossChecks {
    convex: bool,
    factored: bool,
}

/// Compares both sides for one shape, cross-checking against the convex
/// recursion and the factorisation over weak components when they apply.
pub fn verify_shape(p: &CellCollection, kind: Kind, deadline: &Deadline) -> Result<VerificationRecord> {
    verify_shape_checked(p, kind, deadline).map(|(r, _)| r)
}

fn verify_shape_checked(
    p: &CellCollection,
    kind: Kind,
    deadline: &Deadline,
) -> Result<(VerificationRecord, CrossChecks)> {
    let start = Instant::now();
    let key = p.canonical();
    let (switching, rook_number) = sides_switch(&key, deadline)?;
    let h = h_polynomial_with_order(&key, MonomialOrder::Rev, deadline)?.h_poly;
    let mut checks = CrossChecks::default();

    match recursive_h(&key) {
        Ok(rh) if rh != h => {
            return Err(Error::Invariant(format!(
                "convex recursion gives {rh}, pipeline {h} for {key}"
            )));
        }
        Ok(_) => checks.convex = true,
        Err(Error::NotConvex | Error::ConditionFails) => {}
        Err(e) => return Err(e),
    }

    let comps = key.weak_components();
    if comps.len() > 1 {
        let mut hs = IntPolynomial::one();
        let mut rs = IntPolynomial::one();
        for c in &comps {
            hs = hs * h_polynomial_with_order(c, MonomialOrder::Rev, deadline)?.h_poly;
            rs = rs * sides_switch(c, deadline)?.0;
        }
        if hs != h || rs != switching {
            return Err(Error::Invariant(format!("weak components do not factor for {key}")));
        }
        checks.factored = true;
    }

    let deg_h = h.degree();
    let record = VerificationRecord {
        canonical_key: key.format(),
        rank: key.rank(),
        kind,
        match_poly: switching == h,
        match_reg: rook_number == deg_h,
        switching,
        h,
        rook_number,
        deg_h,
        simple: key.is_simple(),
        sharp: satisfies_sharp(&key),
        sharp_prime: satisfies_sharp_prime(&key),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok((record, checks))
}

fn sides_switch(p: &CellCollection, deadline: &Deadline) -> Result<(IntPolynomial, usize)> {
    let counts = switch_class_counts(p, deadline)?;
    Ok((counts.polynomial(), counts.per_level.len() - 1))
}

#[derive(Debug, Clone)]
pub struct Config {
    pub kind: Kind,
    pub rank: usize,
    pub jobs: usize,
    /// Shapes to verify instead of the enumeration.
    pub dataset: Option<PathBuf>,
    pub per_shape_timeout: Option<Duration>,
    /// Stop between chunks once this much time has passed.
    pub budget: Option<Duration>,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub chunk_size: usize,
}

impl Config {
    pub fn new(kind: Kind, rank: usize) -> Self {
        Config {
            kind,
            rank,
            jobs: 1,
            dataset: None,
            per_shape_timeout: Some(Duration::from_secs(60)),
            budget: None,
            checkpoint: None,
            resume: false,
            chunk_size: 64,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub matches: usize,
    pub counterexamples: Vec<String>,
    pub timeouts: Vec<String>,
    pub convex_checked: usize,
    pub factor_checked: usize,
    /// False when the budget ran out; the checkpoint then holds the position.
    pub complete: bool,
}

/// Shapes to verify, sorted by canonical key.
pub fn work_list(config: &Config) -> Result<Vec<CellCollection>> {
    let mut shapes: Vec<CellCollection> = match &config.dataset {
        None => enumerate(config.kind, config.rank).collect(),
        Some(path) => {
            let raw = read_dataset(path)?;
            let mut out = Vec::with_capacity(raw.len());
            for (idx, p) in raw.into_iter().enumerate() {
                if p.rank() != config.rank || !config.kind.admits(&p) {
                    return Err(Error::Dataset {
                        path: path.clone(),
                        line: idx + 1,
                        source: Box::new(Error::InvalidArgument(format!(
                            "not a {} of rank {}",
                            config.kind, config.rank
                        ))),
                    });
                }
                out.push(p.canonical());
            }
            out
        }
    };
    shapes.sort_by_cached_key(CellCollection::format);
    shapes.dedup();
    Ok(shapes)
}

/// Runs the comparison, writing one line per shape to `sink` followed by the
/// summary lines.
pub fn run<W: Write>(config: &Config, sink: &mut W) -> Result<Summary> {
    let started = Instant::now();
    let shapes = work_list(config)?;
    let mut summary = Summary {
        total: shapes.len(),
        ..Summary::default()
    };
    let mut next = 0;
    if config.resume {
        let path = config
            .checkpoint
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("resume needs a checkpoint path".into()))?;
        let cp = Checkpoint::load(path)?;
        cp.check_matches(config, &shapes)?;
        next = cp.next_index;
        summary = cp.summary;
        summary.total = shapes.len();
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let chunk = config.chunk_size.max(1);

    while next < shapes.len() {
        if config.budget.is_some_and(|b| started.elapsed() >= b) {
            break;
        }
        let end = (next + chunk).min(shapes.len());
        let results: Vec<Result<(Outcome, CrossChecks)>> =
            pool.install(|| shapes[next..end].par_iter().map(|p| run_one(p, config)).collect());
        for r in results {
            let (outcome, checks) = r?;
            writeln!(sink, "{}", format_outcome(&outcome))?;
            tally(&mut summary, &outcome, checks);
        }
        sink.flush()?;
        next = end;
        if let Some(path) = &config.checkpoint {
            Checkpoint::new(config, &shapes, next, summary.clone()).save(path)?;
        }
    }

    summary.complete = next == shapes.len();
    if summary.complete {
        writeln!(
            sink,
            "# convex-recursion cross-checks {}; weak-component factorisations {}; timeouts {}",
            summary.convex_checked,
            summary.factor_checked,
            summary.timeouts.len()
        )?;
        if summary.counterexamples.is_empty() {
            writeln!(sink, "OK {}", summary.verified)?;
        } else {
            writeln!(sink, "COUNTEREXAMPLES {}", summary.counterexamples.len())?;
        }
    } else {
        if let Some(path) = &config.checkpoint {
            Checkpoint::new(config, &shapes, next, summary.clone()).save(path)?;
        }
        writeln!(sink, "# INCOMPLETE {next}/{}", shapes.len())?;
    }
    sink.flush()?;
    Ok(summary)
}

/// Runs with the report written to `report` (appending when resuming).
pub fn run_to_file(config: &Config, report: &std::path::Path) -> Result<Summary> {
    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .append(config.resume)
        .truncate(!config.resume)
        .open(report)?;
    let mut w = std::io::BufWriter::new(file);
    run(config, &mut w)
}

fn run_one(p: &CellCollection, config: &Config) -> Result<(Outcome, CrossChecks)> {
    let start = Instant::now();
    let deadline = config.per_shape_timeout.map_or_else(Deadline::none, Deadline::after);
    match verify_shape_checked(p, config.kind, &deadline) {
        Ok((rec, checks)) => Ok((Outcome::Verified(rec), checks)),
        Err(Error::Timeout) => Ok((
            Outcome::Timeout {
                canonical_key: p.format(),
                rank: p.rank(),
                kind: config.kind,
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
            CrossChecks::default(),
        )),
        Err(e) => Err(e),
    }
}

fn tally(summary: &mut Summary, outcome: &Outcome, checks: CrossChecks) {
    match outcome {
        Outcome::Verified(rec) => {
            summary.verified += 1;
            if rec.is_counterexample() {
                summary.counterexamples.push(rec.canonical_key.clone());
            } else {
                summary.matches += 1;
            }
        }
        Outcome::Timeout { canonical_key, .. } => summary.timeouts.push(canonical_key.clone()),
    }
    summary.convex_checked += checks.convex as usize;
    summary.factor_checked += checks.factored as usize;
}

/// Convenience wrapper returning the summary only.
pub fn test_conjecture(kind: Kind, rank: usize, jobs: usize) -> Result<Summary> {
    let mut config = Config::new(kind, rank);
    config.jobs = jobs;
    run(&config, &mut std::io::sink())
}
