//! Per-length enumeration: task splitting, subtree DFS, extension scoring.

use std::sync::atomic::{AtomicBool, AtomicI64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::curl::curl_scan;
use crate::extend::{extend_in_place, ExtendOutcome};
use crate::{Seq, Symbol};

use super::checkpoint::Checkpoint;
use super::{LevelStats, Pruning, SearchConfig, SearchError};

/// Subtree tasks are rooted at prefixes of this depth (or at the leaves for
/// shorter levels): at most 2^10 tasks per level, plenty to keep a worker
/// pool busy while keeping checkpoints small.
const TASK_DEPTH: usize = 10;

pub(super) enum LevelOutcome {
    Done { best: usize, achievers: Vec<Seq>, stats: LevelStats },
    Suspended { stats: LevelStats },
}

struct TaskResult {
    best: usize,
    achievers: Vec<Seq>,
    stats: LevelStats,
}

pub(super) fn run_level(
    n: usize,
    config: &SearchConfig,
    checkpoint: Option<&Checkpoint>,
    budget: &mut Option<u64>,
) -> Result<LevelOutcome, SearchError> {
    let mut stats = LevelStats { n, ..LevelStats::default() };
    let tasks = enumerate_prefixes(n, config.pruning, &mut stats);

    // Seed results with journaled tasks; the rest go to the pool.
    let mut results: Vec<Option<TaskResult>> = Vec::with_capacity(tasks.len());
    let mut pending: Vec<usize> = Vec::new();
    for (i, prefix) in tasks.iter().enumerate() {
        match checkpoint.and_then(|c| c.lookup(n, prefix)) {
            Some(stored) => results.push(Some(TaskResult {
                best: stored.best,
                achievers: stored.achievers.clone(),
                stats: LevelStats::default(),
            })),
            None => {
                results.push(None);
                pending.push(i);
            }
        }
    }

    let suspended = AtomicBool::new(false);
    if !pending.is_empty() {
        let slots: Vec<Mutex<Option<TaskResult>>> =
            results.iter_mut().map(|r| Mutex::new(r.take())).collect();
        let cursor = AtomicUsize::new(0);
        let stop = AtomicBool::new(false);
        let first_error: Mutex<Option<SearchError>> = Mutex::new(None);
        let remaining = AtomicI64::new(match *budget {
            Some(b) => b.min(i64::MAX as u64) as i64,
            None => i64::MAX,
        });
        let workers = config.workers.min(pending.len());

        let worker_loop = || loop {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            let slot = cursor.fetch_add(1, Ordering::Relaxed);
            if slot >= pending.len() {
                break;
            }
            if remaining.fetch_sub(1, Ordering::Relaxed) <= 0 {
                suspended.store(true, Ordering::Relaxed);
                break;
            }
            let task = pending[slot];
            match run_task(&tasks[task], n, config) {
                Ok(result) => {
                    if let Some(ck) = checkpoint {
                        if let Err(e) =
                            ck.append_task(n, &tasks[task], result.best, &result.achievers)
                        {
                            let mut guard = first_error.lock().unwrap();
                            if guard.is_none() {
                                *guard = Some(e);
                            }
                            stop.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                    *slots[task].lock().unwrap() = Some(result);
                }
                Err(e) => {
                    let mut guard = first_error.lock().unwrap();
                    if guard.is_none() {
                        *guard = Some(e);
                    }
                    stop.store(true, Ordering::Relaxed);
                    break;
                }
            }
        };
        if workers == 1 {
            // Inline: no thread machinery, and usable on targets without
            // thread support (the wasm demo).
            worker_loop();
        } else {
            std::thread::scope(|scope| {
                for _ in 0..workers {
                    scope.spawn(worker_loop);
                }
            });
        }

        if let Some(e) = first_error.into_inner().unwrap() {
            return Err(e);
        }
        results = slots.into_iter().map(|m| m.into_inner().unwrap()).collect();
        if let Some(b) = budget {
            *b = remaining.load(Ordering::Relaxed).max(0) as u64;
        }
    }

    if suspended.load(Ordering::Relaxed) {
        // Absorb what finished; the checkpoint already journals it.
        for result in results.into_iter().flatten() {
            stats.add(&result.stats);
        }
        return Ok(LevelOutcome::Suspended { stats });
    }

    // Deterministic merge in enumeration order, independent of which worker
    // finished which task when.
    let mut best = 0usize;
    let mut achievers: Vec<Seq> = Vec::new();
    for result in results.into_iter() {
        let result = result.expect("all tasks completed");
        stats.add(&result.stats);
        if result.best > best {
            best = result.best;
            achievers = result.achievers;
        } else if result.best == best && best > 0 {
            achievers.extend(result.achievers);
        }
    }
    Ok(LevelOutcome::Done { best, achievers, stats })
}

impl LevelStats {
    fn add(&mut self, other: &LevelStats) {
        self.nodes += other.nodes;
        self.extended += other.extended;
        self.pruned_w4 += other.pruned_w4;
        self.pruned_conjectural += other.pruned_conjectural;
        self.skipped += other.skipped;
    }
}

/// All mode-filter-passing prefixes of depth `min(n, TASK_DEPTH)`, in DFS
/// order with child 2 before child 3. Nodes on the enumerated paths are
/// counted here; nodes below the prefixes are counted by the tasks.
fn enumerate_prefixes(n: usize, pruning: Pruning, stats: &mut LevelStats) -> Vec<Seq> {
    fn walk(
        buf: &mut Vec<Symbol>,
        depth: usize,
        pruning: Pruning,
        stats: &mut LevelStats,
        out: &mut Vec<Seq>,
    ) {
        if buf.len() == depth {
            out.push(Seq::from(buf.as_slice()));
            return;
        }
        for c in [2, 3] {
            if !admit_child(buf, c, pruning, stats) {
                continue;
            }
            walk(buf, depth, pruning, stats, out);
            buf.pop();
        }
    }
    let depth = n.min(TASK_DEPTH);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(depth);
    walk(&mut buf, depth, pruning, stats, &mut out);
    out
}

/// Try to push `c`; returns false (buffer untouched) when the mode's filter
/// rejects the child. On success the child is counted and left on `buf`.
fn admit_child(buf: &mut Vec<Symbol>, c: Symbol, pruning: Pruning, stats: &mut LevelStats) -> bool {
    if pruning == Pruning::Conjectural && c == 3 && buf.last() == Some(&3) {
        stats.pruned_conjectural += 1;
        return false;
    }
    buf.push(c);
    if pruning != Pruning::Full && curl_scan(buf).0 > 3 {
        stats.pruned_w4 += 1;
        buf.pop();
        return false;
    }
    stats.nodes += 1;
    true
}

fn run_task(prefix: &Seq, n: usize, config: &SearchConfig) -> Result<TaskResult, SearchError> {
    let mut run = SubtreeRun {
        n,
        pruning: config.pruning,
        cap: config.cap,
        prefix_skip: config.prefix_skip,
        buf: Vec::with_capacity(n + 64),
        k_stack: Vec::with_capacity(n),
        best: 0,
        achievers: Vec::new(),
        stats: LevelStats::default(),
    };
    for d in 0..prefix.len() {
        run.buf.push(prefix[d]);
        run.k_stack.push(curl_scan(&run.buf).0);
    }
    run.descend()?;
    Ok(TaskResult { best: run.best, achievers: run.achievers, stats: run.stats })
}

struct SubtreeRun {
    n: usize,
    pruning: Pruning,
    cap: usize,
    prefix_skip: bool,
    /// Current path; extensions temporarily grow it past depth `n`.
    buf: Vec<Symbol>,
    /// `k_stack[d-1]` = curling number of `buf[..d]`.
    k_stack: Vec<u32>,
    best: usize,
    achievers: Vec<Seq>,
    stats: LevelStats,
}

impl SubtreeRun {
    fn descend(&mut self) -> Result<(), SearchError> {
        if self.buf.len() == self.n {
            return self.evaluate_leaf();
        }
        for c in [2, 3] {
            if !admit_child(&mut self.buf, c, self.pruning, &mut self.stats) {
                continue;
            }
            self.k_stack.push(curl_scan(&self.buf).0);
            self.descend()?;
            self.k_stack.pop();
            self.buf.pop();
        }
        Ok(())
    }

    fn evaluate_leaf(&mut self) -> Result<(), SearchError> {
        let n = self.n;
        // If the last symbol is what the recurrence would have appended to
        // the first n-1 anyway, this start's run is a tail of one already
        // scored at length n-1 and cannot set a record at length n.
        if self.prefix_skip && n >= 2 && self.k_stack[n - 2] == self.buf[n - 1] {
            self.stats.skipped += 1;
            return Ok(());
        }
        self.stats.extended += 1;
        match extend_in_place(&mut self.buf, self.cap) {
            ExtendOutcome::PreOne(pre_one_len) => {
                if pre_one_len > self.best {
                    self.best = pre_one_len;
                    self.achievers.clear();
                    self.achievers.push(Seq::from(&self.buf[..n]));
                } else if pre_one_len == self.best {
                    self.achievers.push(Seq::from(&self.buf[..n]));
                }
                self.buf.truncate(n);
                Ok(())
            }
            ExtendOutcome::CapHit => {
                Err(SearchError::CapExhausted { start: Seq::from(&self.buf[..n]), cap: self.cap })
            }
        }
    }
}
