//! Exhaustive, pruned search for extension records over `{2,3}` starts.
//!
//! For each length `n` the search enumerates starting sequences of `n` 2's
//! and 3's, extends each until the first appended 1, and records `mu(n)`,
//! the maximal pre-1 length, together with every achieving start found.
//!
//! Three enumeration modes:
//!
//! * `Full` — all `2^n` starts; `mu(n)` is an unconditional maximum.
//! * `Lemma1` — only starts containing no contiguous fourth power `W^4`.
//!   Any start breaking the record strictly (`mu(n) > mu(n-1)+1`) is
//!   quadruple-free, so `mu(n)` is taken as the larger of `mu(n-1)+1` and
//!   the best enumerated value. Achievers of strict jumps are complete;
//!   ties at `mu(n-1)+1` may be under-enumerated and are flagged.
//! * `Conjectural` — additionally drops starts with two adjacent 3's, an
//!   empirically observed but unproven property of record holders.
//!
//! Levels are split into subtree tasks rooted at fixed-depth prefixes; tasks
//! run on a worker pool and merge deterministically in enumeration order, so
//! results are independent of worker count and scheduling. Completed tasks
//! can be journaled to a checkpoint file and skipped on resume.

mod checkpoint;
mod level;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::curl::curl_scan;
use crate::{extend_until_one, Seq, Symbol};

pub use checkpoint::{config_digest, Checkpoint};
use level::{run_level, LevelOutcome};

/// Enumeration mode for [`mu_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    Full,
    Lemma1,
    Conjectural,
}

impl Pruning {
    pub fn as_str(self) -> &'static str {
        match self {
            Pruning::Full => "full",
            Pruning::Lemma1 => "lemma1",
            Pruning::Conjectural => "conjectural",
        }
    }
}

impl fmt::Display for Pruning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pruning {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        match text {
            "full" => Ok(Pruning::Full),
            "lemma1" => Ok(Pruning::Lemma1),
            "conjectural" => Ok(Pruning::Conjectural),
            other => Err(format!("unknown pruning mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n_max: usize,
    pub pruning: Pruning,
    /// Extension cap per candidate. Any candidate hitting it aborts the
    /// whole search with [`SearchError::CapExhausted`].
    pub cap: usize,
    /// Skip extending a start whose last symbol equals the curling number of
    /// the preceding prefix; such a start is dominated by the shorter one.
    pub prefix_skip: bool,
    pub workers: usize,
    pub checkpoint_path: Option<PathBuf>,
    /// Stop (with a resumable checkpoint) after completing this many subtree
    /// tasks. `None` runs to completion.
    pub task_budget: Option<u64>,
}

impl SearchConfig {
    pub fn new(n_max: usize) -> Self {
        SearchConfig {
            n_max,
            pruning: Pruning::Lemma1,
            cap: 1_000_000,
            prefix_skip: true,
            workers: 1,
            checkpoint_path: None,
            task_budget: None,
        }
    }
}

/// One row of the record table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordRow {
    pub n: usize,
    pub mu: usize,
    /// True only for bundled table rows that are lower bounds; search
    /// results at searched lengths are exact under their mode's assumptions.
    pub is_lower_bound: bool,
    /// True iff `mu(n) > mu(n-1) + 1` (false for `n = 1`).
    pub jump: bool,
    /// Achieving starts found under the mode's enumeration, in DFS order
    /// (children 2 before 3). Empty if only the `mu(n-1)+1` baseline was
    /// attained and no enumerated start reached it.
    pub record_starts: Vec<Seq>,
    /// Whether `record_starts` is provably the complete achiever set. Pruned
    /// modes can under-enumerate ties at `mu(n-1)+1`; strict jumps under
    /// `Lemma1` are complete because record-breakers are quadruple-free.
    pub records_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RecordTable {
    pub rows: Vec<RecordRow>,
}

impl RecordTable {
    pub fn row(&self, n: usize) -> Option<&RecordRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn mu(&self, n: usize) -> Option<usize> {
        self.row(n).map(|r| r.mu)
    }

    /// Lengths with a strict record jump.
    pub fn jumps(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.jump).map(|r| r.n).collect()
    }

    /// CSV rendering, schema `n,mu,is_lower_bound,jump,num_records`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,mu,is_lower_bound,jump,num_records\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n,
                r.mu,
                r.is_lower_bound,
                r.jump,
                r.record_starts.len()
            ));
        }
        out
    }

    /// JSON object mapping each `n` to its record starts as `{2,3}` digit
    /// strings, e.g. `{"4": ["2323"]}`.
    pub fn records_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for r in &self.rows {
            let starts: Vec<serde_json::Value> = r
                .record_starts
                .iter()
                .map(|s| {
                    serde_json::Value::String(
                        s.digit_string().expect("record starts are single-digit"),
                    )
                })
                .collect();
            map.insert(r.n.to_string(), serde_json::Value::Array(starts));
        }
        serde_json::Value::Object(map).to_string()
    }
}

/// Work counters for one searched length.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub n: usize,
    /// Prefix-tree nodes entered (starts and their ancestors that passed the
    /// mode's filter).
    pub nodes: u64,
    /// Starts actually extended to their first 1.
    pub extended: u64,
    /// Children rejected for completing a fourth power.
    pub pruned_w4: u64,
    /// Children rejected by the conjectural no-adjacent-3's filter.
    pub pruned_conjectural: u64,
    /// Leaf evaluations skipped by the prefix-skip shortcut.
    pub skipped: u64,
}

/// Aggregate work counters for a whole search.
#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub candidates_extended: u64,
    pub pruned_w4: u64,
    pub pruned_conjectural: u64,
    pub pruned_prefix_skip: u64,
    pub elapsed: Duration,
    /// Per-length breakdown. On a resumed run, counters cover only the work
    /// done by this process; tasks replayed from a checkpoint contribute
    /// nothing.
    pub per_level: Vec<LevelStats>,
}

impl SearchStats {
    fn absorb(&mut self, level: LevelStats) {
        self.nodes_visited += level.nodes;
        self.candidates_extended += level.extended;
        self.pruned_w4 += level.pruned_w4;
        self.pruned_conjectural += level.pruned_conjectural;
        self.pruned_prefix_skip += level.skipped;
        self.per_level.push(level);
    }
}

#[derive(Debug)]
pub enum SearchOutcome {
    Finished { table: RecordTable, stats: SearchStats },
    /// The task budget ran out; the checkpoint (if configured) holds the
    /// frontier and a rerun with the same config will continue.
    Suspended { stats: SearchStats },
}

impl SearchOutcome {
    pub fn finished(self) -> Option<(RecordTable, SearchStats)> {
        match self {
            SearchOutcome::Finished { table, stats } => Some((table, stats)),
            SearchOutcome::Suspended { .. } => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error(
        "start {start} exceeded the extension cap of {cap} appended terms; \
         either the cap is too small or this start is conjecture-relevant"
    )]
    CapExhausted { start: Seq, cap: usize },
    #[error("mu({n}) = {mu} fell below mu({prev_n}) + 1 = {expected}; record table is inconsistent")]
    Monotonicity { n: usize, mu: usize, prev_n: usize, expected: usize },
    #[error("checkpoint has unsupported header {found:?}")]
    CheckpointVersion { found: String },
    #[error("checkpoint was written by a different search config (digest {found} != {expected})")]
    CheckpointConfigMismatch { found: String, expected: String },
    #[error("checkpoint corrupt at line {line}: {msg}")]
    CheckpointCorrupt { line: usize, msg: String },
    #[error("checkpoint I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// True iff appending `c` to the quadruple-free sequence `s` keeps it free
/// of contiguous fourth powers. Only suffixes of `s·c` need inspection: a
/// new `W^4` must end at the appended symbol, so the check is exactly
/// `k(s·c) <= 3`.
pub fn is_quadruple_free_after_append(s: &Seq, c: Symbol) -> bool {
    let mut buf = Vec::with_capacity(s.len() + 1);
    buf.extend_from_slice(s.terms());
    buf.push(c);
    curl_scan(&buf).0 <= 3
}

/// Number of `{2,3}` strings of length `n` containing no contiguous fourth
/// power, counted by DFS with the incremental suffix filter.
pub fn count_quadruple_free(n: usize) -> u64 {
    fn walk(buf: &mut Vec<Symbol>, depth_left: usize) -> u64 {
        if depth_left == 0 {
            return 1;
        }
        let mut total = 0;
        for c in [2, 3] {
            buf.push(c);
            if curl_scan(buf).0 <= 3 {
                total += walk(buf, depth_left - 1);
            }
            buf.pop();
        }
        total
    }
    walk(&mut Vec::with_capacity(n), n)
}

/// Check a claimed record: does `s` extend to exactly `claimed_mu` terms
/// before the first appended 1?
pub fn verify_record(s: &Seq, claimed_mu: usize, cap: usize) -> Result<bool, SearchError> {
    let ext = extend_until_one(s, cap).map_err(|e| match e {
        crate::Error::EmptySequence => SearchError::InvalidConfig("empty start".into()),
        crate::Error::ZeroCap => SearchError::InvalidConfig("cap must be positive".into()),
        other => SearchError::InvalidConfig(other.to_string()),
    })?;
    if ext.hit_cap {
        return Err(SearchError::CapExhausted { start: s.clone(), cap });
    }
    Ok(ext.pre_one_len == claimed_mu)
}

/// Run the record search up to `config.n_max`.
///
/// Returns the full table of `mu(n)`, achieving starts, and work statistics.
/// With a checkpoint path configured, completed subtree tasks are journaled
/// as the search runs and replayed on resume; a resumed run finishes with a
/// table bit-identical to an uninterrupted one.
pub fn mu_search(config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    validate(config)?;
    let started = Instant::now();

    let checkpoint = match &config.checkpoint_path {
        Some(path) => Some(if path.exists() {
            Checkpoint::load(path, config)?
        } else {
            Checkpoint::create(path, config)?
        }),
        None => None,
    };

    let mut budget = config.task_budget;
    let mut stats = SearchStats::default();
    let mut table = RecordTable::default();
    let mut prev_mu: Option<usize> = None;

    for n in 1..=config.n_max {
        let outcome = run_level(n, config, checkpoint.as_ref(), &mut budget)?;
        let level = match outcome {
            LevelOutcome::Done { best, achievers, stats: level_stats } => {
                stats.absorb(level_stats);
                (best, achievers)
            }
            LevelOutcome::Suspended { stats: level_stats } => {
                stats.absorb(level_stats);
                stats.elapsed = started.elapsed();
                return Ok(SearchOutcome::Suspended { stats });
            }
        };
        let (found, achievers) = level;

        let mu = match (config.pruning, prev_mu) {
            (Pruning::Full, _) | (_, None) => found,
            (_, Some(prev)) => found.max(prev + 1),
        };
        if let Some(prev) = prev_mu {
            if mu < prev + 1 {
                return Err(SearchError::Monotonicity {
                    n,
                    mu,
                    prev_n: n - 1,
                    expected: prev + 1,
                });
            }
        }
        let jump = prev_mu.is_some_and(|prev| mu > prev + 1);
        let record_starts = if found == mu { achievers } else { Vec::new() };
        // No string shorter than 4 symbols contains a fourth power, so tiny
        // levels are complete even under Lemma 1 pruning.
        let records_complete = match config.pruning {
            Pruning::Full => true,
            Pruning::Lemma1 => jump || n <= 3,
            Pruning::Conjectural => false,
        };
        table.rows.push(RecordRow {
            n,
            mu,
            is_lower_bound: false,
            jump,
            record_starts,
            records_complete,
        });
        prev_mu = Some(mu);
    }

    stats.elapsed = started.elapsed();
    Ok(SearchOutcome::Finished { table, stats })
}

fn validate(config: &SearchConfig) -> Result<(), SearchError> {
    if config.n_max == 0 {
        return Err(SearchError::InvalidConfig("n_max must be at least 1".into()));
    }
    if config.cap == 0 {
        return Err(SearchError::InvalidConfig("cap must be positive".into()));
    }
    if config.workers == 0 {
        return Err(SearchError::InvalidConfig("workers must be at least 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
