//! Command-line front end: classify sequences, run the exhaustive
//! verifications and invariant searches, sweep parameter grids, and emit
//! JSON / CSV / text reports with an optional on-disk cache.
//!
//! Exit status: 0 success, 1 a counterexample was found, 2 invalid input,
//! 3 a search was refused by the budget guardrail.
//!
//! The report schema is frozen in `docs/report-schema.md`.

pub mod cache;
pub mod grid;
pub mod render;
pub mod sweep;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use idemsum_core::bounds::{is_open_regime, structure_length_bound};
use idemsum_core::search::{default_smo_cap, default_smo_hat_cap, DEFAULT_BUDGET};
use idemsum_core::{
    classify, compute_index_invariant, compute_smo, compute_smo_hat, explore_open_problem, generate_family,
    verify_classification_lemma, verify_structure_theorem, ClassificationReport, ExplorationRow, Family,
    InvariantKind, InvariantResult, SearchConfig, SemigroupParams, Sequence,
};

pub use cache::{Cache, CacheKey};
pub use render::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),

    #[error("{0}")]
    Budget(String),

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("cannot render report: {0}")]
    Output(String),
}

impl CliError {
    pub fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            message: err.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            _ => EXIT_INVALID,
        }
    }
}

impl From<idemsum_core::Error> for CliError {
    fn from(e: idemsum_core::Error) -> Self {
        match e {
            idemsum_core::Error::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Smo,
    SmoHat,
    Index,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Classify one sequence over C(k;n).
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Index multiset, e.g. `2,4` or `1^3,5`.
        #[arg(long = "seq", allow_hyphen_values = true)]
        sequence: String,
    },
    /// Check that long idempotent-sum free sequences are exactly the
    /// smooth ones, for every length from the structure bound up to
    /// `--max-length` (default: bound + 3).
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_length: Option<u32>,
    },
    /// Classify every long idempotent-sum free sequence for k > n into
    /// the five known shapes.
    Search {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Compute Smo, Ŝmo (smo-hat) or the index invariant I(Z/nZ).
    Invariant {
        #[arg(long, value_enum)]
        which: Which,
        /// Required for smo and smo-hat.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: u32,
        /// Search length cap (smo / smo-hat only).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Exact Smo / Ŝmo in the regime k > n ≥ 3 with ⌈k/n⌉n even.
    Explore {
        /// Comma-separated `k:n` pairs.
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Table of Ŝmo / Smo over a grid of (k, n).
    Sweep {
        #[command(flatten)]
        grid: grid::GridArgs,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Build a named witness sequence and classify it.
    Family {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// One of remark-v, case-ii, case-iii:<z>, case-iv, case-v,
        /// small-w, large-v, large-w.
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "idemsum",
    version,
    about = "Idempotent-sum free sequences over cyclic semigroups C(k;n)"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,

    /// Output format (default: csv for sweep, json otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Directory for cached search results.
    #[arg(long, global = true, env = "IDEMSUM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Largest search space (sequences or search nodes) to attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

/// Exit status and the text destined for stdout / stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: CliError) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Classification plus the family it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    #[serde(flatten)]
    pub classification: ClassificationReport,
}

pub(crate) fn params(k: u32, n: u32) -> Result<SemigroupParams, CliError> {
    Ok(SemigroupParams::new(k, n)?)
}

/// Everything a command needs besides its own arguments.
pub struct Context {
    pub search: SearchConfig,
    pub cache: Cache,
}

impl Context {
    pub fn from_config(config: &RunConfig) -> Self {
        Context {
            search: SearchConfig {
                workers: config.workers as usize,
                budget: config.budget,
            },
            cache: Cache::new(config.cache_dir.clone()),
        }
    }

    pub fn invariant(
        &self,
        which: Which,
        k: Option<u32>,
        n: u32,
        cap: Option<u32>,
    ) -> Result<InvariantResult, CliError> {
        match which {
            Which::Index => {
                if cap.is_some() {
                    return Err(CliError::Invalid(
                        "--cap does not apply to the index invariant".into(),
                    ));
                }
                if n == 0 {
                    return Err(CliError::Invalid("n must be at least 1".into()));
                }
                // the group Z/nZ is walked as C(1;n)
                let key = CacheKey {
                    op: InvariantKind::Index.op_name(),
                    k: 1,
                    n,
                    cap: n,
                };
                self.cache
                    .get_or_compute(key, || Ok(compute_index_invariant(n, &self.search)?))
            }
            Which::Smo | Which::SmoHat => {
                let k = k.ok_or_else(|| CliError::Invalid("--k is required for smo and smo-hat".into()))?;
                let p = params(k, n)?;
                let (kind, cap) = if which == Which::Smo {
                    (InvariantKind::Smo, cap.unwrap_or_else(|| default_smo_cap(p)))
                } else {
                    (
                        InvariantKind::SmoHat,
                        cap.unwrap_or_else(|| default_smo_hat_cap(p)),
                    )
                };
                let key = CacheKey {
                    op: kind.op_name(),
                    k,
                    n,
                    cap,
                };
                self.cache.get_or_compute(key, || {
                    Ok(match kind {
                        InvariantKind::Smo => compute_smo(p, Some(cap), &self.search)?,
                        _ => compute_smo_hat(p, Some(cap), &self.search)?,
                    })
                })
            }
        }
    }
}

fn emit<T: Serialize>(report: &T, format: Format, code: u8) -> Result<Outcome, CliError> {
    Ok(Outcome {
        code,
        stdout: render::render(report, format)?,
        stderr: String::new(),
    })
}

fn parse_pairs(text: &str) -> Result<Vec<(u32, u32)>, CliError> {
    grid::parse_pairs(text).map_err(CliError::Invalid)
}

fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let ctx = Context::from_config(config);
    let format = config.format.unwrap_or(match config.command {
        Command::Sweep { .. } => Format::Csv,
        _ => Format::Json,
    });
    match &config.command {
        Command::Classify { k, n, sequence } => {
            let p = params(*k, *n)?;
            let seq = Sequence::parse(p, sequence)?;
            emit(&classify(&seq)?, format, EXIT_OK)
        }
        Command::Verify { k, n, max_length } => {
            let p = params(*k, *n)?;
            let max = max_length.unwrap_or_else(|| structure_length_bound(p) + 3);
            let key = CacheKey {
                op: "structure",
                k: *k,
                n: *n,
                cap: max,
            };
            let report = ctx
                .cache
                .get_or_compute(key, || Ok(verify_structure_theorem(p, max, &ctx.search)?))?;
            let code = if report.holds() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            emit(&report, format, code)
        }
        Command::Search { k, n } => {
            let p = params(*k, *n)?;
            let key = CacheKey {
                op: "classification",
                k: *k,
                n: *n,
                cap: p.threshold() + p.n() - 1,
            };
            let report = ctx
                .cache
                .get_or_compute(key, || Ok(verify_classification_lemma(p, &ctx.search)?))?;
            let code = if report.holds() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            emit(&report, format, code)
        }
        Command::Invariant { which, k, n, cap } => {
            let result = ctx.invariant(*which, *k, *n, *cap)?;
            let mut out = emit(&result, format, EXIT_OK)?;
            if result.frontier_hit {
                out.stderr = format!(
                    "note: the search did not close at cap {}; the value is only a lower bound\n",
                    result.search_cap
                );
            }
            Ok(out)
        }
        Command::Explore { pairs, cap } => {
            let pairs = parse_pairs(pairs)?;
            for &(k, n) in &pairs {
                let p = params(k, n)?;
                if !is_open_regime(p) {
                    return Err(CliError::Invalid(format!(
                        "{p} is outside the regime k > n >= 3 with ⌈k/n⌉n even"
                    )));
                }
            }
            let mut rows: Vec<ExplorationRow> = Vec::new();
            for (k, n) in pairs {
                let key = CacheKey {
                    op: "explore",
                    k,
                    n,
                    cap: cap.unwrap_or(0),
                };
                let row: ExplorationRow = ctx.cache.get_or_compute(key, || {
                    let mut rows = explore_open_problem(&[(k, n)], *cap, &ctx.search)?;
                    Ok(rows.remove(0))
                })?;
                rows.push(row);
            }
            let code = if rows.iter().all(|r| r.within_bounds) {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            emit(&rows, format, code)
        }
        Command::Sweep { grid, cap } => {
            let pairs = grid.pairs().map_err(CliError::Invalid)?;
            let rows = sweep::sweep(&ctx, &pairs, *cap)?;
            Ok(Outcome {
                code: EXIT_OK,
                stdout: sweep::render_rows(&rows, format)?,
                stderr: String::new(),
            })
        }
        Command::Family { k, n, name } => {
            let p = params(*k, *n)?;
            let family: Family = name
                .parse()
                .map_err(|e: idemsum_core::Error| CliError::Invalid(e.to_string()))?;
            let seq = generate_family(p, family)?;
            if seq.is_empty() {
                return Err(CliError::Invalid(format!("family {family} is empty for {p}")));
            }
            let report = FamilyReport {
                family: family.to_string(),
                classification: classify(&seq)?,
            };
            emit(&report, format, EXIT_OK)
        }
    }
}

/// Runs one command and returns its exit status and output.
pub fn run(config: &RunConfig) -> Outcome {
    execute(config).unwrap_or_else(Outcome::error)
}
