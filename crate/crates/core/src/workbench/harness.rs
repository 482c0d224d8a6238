//! Conjecture harness: classify, compute the height and search for a König
//! certificate on every enumerated instance, one JSON line per instance.
//!
//! The log is append-only. On restart the canonical forms already present
//! are skipped, and the summary is always recomputed from the log itself.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate, EnumerationConfig};
use crate::algebra::{Budget, OrderSpec};
use crate::configurations::{closed_path_sequence, is_prime_closed_path};
use crate::dimension::dimension_report;
use crate::error::{Error, Result};
use crate::koenig::{search_certificate, verify_certificate_with_height, KoenigCertificate, SearchLimits, SearchOutcome};
use crate::lattice::Cell;
use crate::par::{self, Execution};
use crate::polyomino::Polyomino;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HeightOutcome {
    Computed { value: usize, order: String },
    Budget { order: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum KoenigOutcome {
    Found { h: usize, certificate: KoenigCertificate },
    Exhausted { h: usize },
    Budget { what: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessRecord {
    pub cells: Vec<Cell>,
    pub rank: usize,
    pub vertex_count: usize,
    pub simple: bool,
    pub thin: bool,
    pub closed_path: bool,
    /// primality criterion, closed paths only
    pub prime: Option<bool>,
    pub height: HeightOutcome,
    pub koenig: KoenigOutcome,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl HarnessRecord {
    pub fn polyomino(&self) -> Result<Polyomino> {
        Polyomino::build(self.cells.iter().copied())
    }

    pub fn height_matches(&self) -> Option<bool> {
        match self.height {
            HeightOutcome::Computed { value, .. } => Some(value == self.rank),
            HeightOutcome::Budget { .. } => None,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self.height, HeightOutcome::Budget { .. }) || matches!(self.koenig, KoenigOutcome::Budget { .. })
    }

    /// A height mismatch or a failed König search on a non-simple thin
    /// instance.
    pub fn is_witness(&self) -> bool {
        !self.simple
            && self.thin
            && (self.height_matches() == Some(false) || matches!(self.koenig, KoenigOutcome::Exhausted { .. }))
    }

    /// Re-derives everything checkable without a Gröbner computation and
    /// lists the inconsistencies (empty when the record is sound).
    pub fn consistency_errors(&self) -> Vec<String> {
        let mut errs = Vec::new();
        let p = match self.polyomino() {
            Ok(p) => p,
            Err(e) => return vec![format!("cells do not form a polyomino: {e}")],
        };
        let closed = closed_path_sequence(&p).is_some();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                errs.push(what.to_string());
            }
        };
        check(p.rank() == self.rank, "rank");
        check(p.vertices().len() == self.vertex_count, "vertex count");
        check(p.is_simple() == self.simple, "simple flag");
        check(p.is_thin() == self.thin, "thin flag");
        check(closed == self.closed_path, "closed-path flag");
        check(!closed || self.vertex_count == 2 * self.rank, "closed path with |V| != 2 rank");
        check(self.prime == is_prime_closed_path(&p).ok(), "prime flag");
        if let KoenigOutcome::Found { h, certificate } = &self.koenig {
            let expected = match (&self.height, closed) {
                (_, true) => Some(self.rank),
                (HeightOutcome::Computed { value, .. }, false) => Some(*value),
                _ => None,
            };
            check(expected == Some(*h), "certificate size differs from the height");
            check(verify_certificate_with_height(&p, certificate, *h).passed(), "certificate fails verification");
        }
        errs
    }
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub enumeration: EnumerationConfig,
    pub budget: Budget,
    pub search: SearchLimits,
    pub chunk_size: usize,
    /// Off by default so repeated runs give byte-identical logs.
    pub timestamps: bool,
    pub execution: Execution,
}

impl HarnessConfig {
    pub fn new(enumeration: EnumerationConfig) -> Self {
        HarnessConfig {
            enumeration,
            budget: Budget::from_env(),
            search: SearchLimits::default(),
            chunk_size: 64,
            timestamps: false,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessSummary {
    pub tested: usize,
    pub height_matches: usize,
    pub height_mismatches: usize,
    pub koenig_found: usize,
    pub koenig_exhausted: usize,
    pub budgets: usize,
    pub witnesses: Vec<HarnessRecord>,
}

pub fn evaluate(p: &Polyomino, config: &HarnessConfig) -> HarnessRecord {
    let order = OrderSpec::Lex1;
    let closed = closed_path_sequence(p).is_some();
    let height = match dimension_report(p, &order, config.budget) {
        Ok(r) => HeightOutcome::Computed { value: r.height, order: order.id() },
        Err(_) => HeightOutcome::Budget { order: order.id() },
    };
    let h = match (&height, closed) {
        (_, true) => Some(p.rank()),
        (HeightOutcome::Computed { value, .. }, false) => Some(*value),
        _ => None,
    };
    let koenig = match h {
        None => KoenigOutcome::Budget { what: "height".into() },
        Some(h) => match search_certificate(p, h, config.search) {
            Ok(SearchOutcome::Found { certificate, .. }) => KoenigOutcome::Found { h, certificate },
            Ok(SearchOutcome::Exhausted { .. }) => KoenigOutcome::Exhausted { h },
            Err(e) => KoenigOutcome::Budget { what: e.to_string() },
        },
    };
    let timestamp = config
        .timestamps
        .then(|| std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    HarnessRecord {
        cells: p.cells().to_vec(),
        rank: p.rank(),
        vertex_count: p.vertices().len(),
        simple: p.is_simple(),
        thin: p.is_thin(),
        closed_path: closed,
        prime: is_prime_closed_path(p).ok(),
        height,
        koenig,
        tool_version: TOOL_VERSION.to_string(),
        timestamp,
    }
}

/// Reads a log; a missing file is an empty log.
pub fn load_log(path: &Path) -> Result<Vec<HarnessRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| Error::CorruptLog { line: i + 1, message: e.to_string() })?;
        out.push(rec);
    }
    Ok(out)
}

pub fn summarize(records: &[HarnessRecord]) -> HarnessSummary {
    let mut s = HarnessSummary { tested: records.len(), ..Default::default() };
    for r in records {
        match r.height_matches() {
            Some(true) => s.height_matches += 1,
            Some(false) => s.height_mismatches += 1,
            None => {}
        }
        match r.koenig {
            KoenigOutcome::Found { .. } => s.koenig_found += 1,
            KoenigOutcome::Exhausted { .. } => s.koenig_exhausted += 1,
            KoenigOutcome::Budget { .. } => {}
        }
        if r.is_budget() {
            s.budgets += 1;
        }
        if r.is_witness() {
            s.witnesses.push(r.clone());
        }
    }
    s
}

/// Runs the harness, appending new records to `log`, and summarizes the
/// whole log afterwards.
pub fn run_harness(config: &HarnessConfig, log: &Path) -> Result<HarnessSummary> {
    let done: HashSet<Vec<Cell>> = load_log(log)?.into_iter().map(|r| r.cells).collect();
    let todo: Vec<Polyomino> = enumerate(&config.enumeration, config.execution)
        .into_iter()
        .filter(|p| !done.contains(p.cells()))
        .collect();
    let file = OpenOptions::new().create(true).append(true).open(log)?;
    let mut out = BufWriter::new(file);
    for chunk in todo.chunks(config.chunk_size.max(1)) {
        let records = par::map(chunk, config.execution, |p| evaluate(p, config));
        for r in records {
            serde_json::to_writer(&mut out, &r)?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
    }
    drop(out);
    Ok(summarize(&load_log(log)?))
}
