//! Amortized incremental curling numbers for append-only streams.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::Symbol;

/// Incremental curling-number engine.
///
/// Recomputing `k(S)` from scratch is `O(|S|)` per appended term, which is
/// quadratic over a stream and hopeless past ~10^5 terms. This engine tracks,
/// per candidate period `p`, the run of trailing positions `i` with
/// `s[i] == s[i-p]`; then `k(S) = 1 + max_p floor(run(p) / p)`.
///
/// A period only contributes once its run reaches `p`, and a run grows by at
/// most one per appended term, so a period whose run is currently `f` cannot
/// matter for the next `p - f` terms. Dormant periods therefore sit in a
/// calendar keyed by the sequence length at which they could next matter and
/// are rescanned only then. Periods whose run has reached `p/2` ("near") or
/// `p` ("live") are instead tracked exactly at `O(1)` per term; repetitions
/// of exponent 1.5 ending at a common position are rare, which keeps both
/// sets small. Net cost in practice: a few heap operations plus a couple of
/// comparisons per appended term.
pub(crate) struct IncrementalCurler {
    seq: Vec<Symbol>,
    /// `(due_len, period)`: rescan `period` once the length reaches `due_len`.
    calendar: BinaryHeap<Reverse<(usize, usize)>>,
    /// Periods with current run in `[p/2, p)`, tracked exactly as `(p, run)`.
    near: Vec<(usize, usize)>,
    /// Periods with current run `>= p`; these determine `k`.
    live: Vec<(usize, usize)>,
}

impl IncrementalCurler {
    pub fn new() -> Self {
        IncrementalCurler {
            seq: Vec::new(),
            calendar: BinaryHeap::new(),
            near: Vec::new(),
            live: Vec::new(),
        }
    }

    pub fn seq(&self) -> &[Symbol] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    /// Curling number of the current (nonempty) sequence.
    pub fn k(&self) -> u32 {
        debug_assert!(!self.seq.is_empty());
        1 + self.live.iter().map(|&(p, run)| (run / p) as u32).max().unwrap_or(0)
    }

    pub fn append(&mut self, c: Symbol) {
        self.seq.push(c);
        let n = self.seq.len();

        // Extend or retire exactly-tracked runs against the new symbol.
        let mut i = 0;
        while i < self.live.len() {
            let (p, run) = self.live[i];
            if self.seq[n - 1] == self.seq[n - 1 - p] {
                self.live[i].1 = run + 1;
                i += 1;
            } else {
                self.live.swap_remove(i);
                self.calendar.push(Reverse((n + p, p)));
            }
        }
        let mut i = 0;
        while i < self.near.len() {
            let (p, run) = self.near[i];
            if self.seq[n - 1] == self.seq[n - 1 - p] {
                if run + 1 >= p {
                    self.near.swap_remove(i);
                    self.live.push((p, run + 1));
                } else {
                    self.near[i].1 = run + 1;
                    i += 1;
                }
            } else {
                self.near.swap_remove(i);
                self.calendar.push(Reverse((n + p, p)));
            }
        }

        // Period n/2 becomes a candidate for the first time at length n.
        if n.is_multiple_of(2) {
            self.scan(n / 2);
        }
        // Rescan periods whose silence window has elapsed.
        while let Some(&Reverse((due, p))) = self.calendar.peek() {
            if due > n {
                break;
            }
            self.calendar.pop();
            self.scan(p);
        }
    }

    /// Measure the trailing match run for period `p` from scratch and file
    /// the period under live/near/calendar accordingly.
    fn scan(&mut self, p: usize) {
        let n = self.seq.len();
        let limit = n - p;
        let mut run = 0usize;
        while run < limit && self.seq[n - 1 - run] == self.seq[n - 1 - run - p] {
            run += 1;
        }
        if run >= p {
            self.live.push((p, run));
        } else if 2 * run >= p {
            self.near.push((p, run));
        } else {
            self.calendar.push(Reverse((n + (p - run), p)));
        }
    }
}
