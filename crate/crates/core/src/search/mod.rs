//! Exhaustive engines: structure verification, classification of long
//! idempotent-sum free sequences, and exact computation of `Smo`, `Ŝmo`
//! and `I(Z/nZ)` at small parameters.
//!
//! All engines shard their enumeration by the smallest element of the
//! sequence. Shards are independent; their results are merged in shard
//! order with order-insensitive reducers, so every result is identical for
//! any worker count.

mod explore;
mod invariants;
mod verify;
mod walk;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use explore::{explore_open_problem, ExplorationRow};
pub use invariants::{
    compute_index_invariant, compute_smo, compute_smo_hat, default_smo_cap, default_smo_hat_cap,
};
pub use verify::{verify_classification_lemma, verify_structure_theorem, LemmaCase};

/// Default limit on enumerated sequences (or visited search nodes).
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// At most this many witnesses / counterexamples are kept in a report,
/// the smallest in canonical order.
pub const REPORT_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub workers: usize,
    pub budget: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    pub(crate) fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R> {
        if self.workers == 0 {
            return Err(Error::Domain("worker count must be positive".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(job))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Smo,
    SmoHat,
    Index,
}

impl InvariantKind {
    /// Operation name used in cache keys.
    pub fn op_name(self) -> &'static str {
        match self {
            InvariantKind::Smo => "smo",
            InvariantKind::SmoHat => "smo_hat",
            InvariantKind::Index => "index",
        }
    }
}

/// Value of an extremal invariant with the longest "bad" sequences found.
///
/// `frontier_hit` is set when the enumeration still found members of the
/// searched class at `search_cap`, so longer ones may exist and `value` is
/// only a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub which: InvariantKind,
    pub k: Option<u32>,
    pub n: u32,
    pub value: u32,
    pub witnesses: Vec<String>,
    pub witness_count: u64,
    pub search_cap: u32,
    pub frontier_hit: bool,
}

impl InvariantResult {
    pub fn is_exact(&self) -> bool {
        !self.frontier_hit
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub sequence: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationKind {
    StructureTheorem,
    ClassificationLemma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: VerificationKind,
    pub k: u32,
    pub n: u32,
    pub min_length: u32,
    pub max_length: u32,
    pub total_sequences: u64,
    pub free_sequences: u64,
    pub converse_checked: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub case_tallies: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.counterexample_count == 0
    }
}

/// Bounded, sorted collection of sequences at the current best length.
#[derive(Debug, Clone, Default)]
pub(crate) struct Extremes {
    pub best: Option<usize>,
    pub count: u64,
    pub kept: std::collections::BTreeSet<Vec<u32>>,
}

impl Extremes {
    pub fn record(&mut self, terms: &[u32]) {
        let len = terms.len();
        match self.best {
            Some(b) if b > len => return,
            Some(b) if b == len => {}
            _ => {
                self.best = Some(len);
                self.count = 0;
                self.kept.clear();
            }
        }
        self.count += 1;
        self.kept.insert(terms.to_vec());
        if self.kept.len() > REPORT_LIMIT {
            self.kept.pop_last();
        }
    }

    pub fn merge(&mut self, other: Extremes) {
        match (self.best, other.best) {
            (_, None) => {}
            (None, _) => *self = other,
            (Some(a), Some(b)) if b > a => *self = other,
            (Some(a), Some(b)) if b < a => {}
            _ => {
                self.count += other.count;
                self.kept.extend(other.kept);
                while self.kept.len() > REPORT_LIMIT {
                    self.kept.pop_last();
                }
            }
        }
    }
}
