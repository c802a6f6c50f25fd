//! Bundled table of known extension records over `{2,3}` starts.
//!
//! The data file carries, for each start length `n` up to 80, the best known
//! pre-1 extension length `mu(n)` (exact up to 52, lower bounds marked
//! beyond), plus every known record-jumping starting sequence. Values beyond
//! the reach of a desk search are verified one sequence at a time with
//! [`verify_record`]: a single extension run confirms each claimed length
//! exactly.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::search::{verify_record, SearchError};
use crate::Seq;

#[derive(Debug, Clone)]
pub struct MuEntry {
    pub n: usize,
    pub mu: usize,
    /// True for values that are only lower bounds (conjectured exact).
    pub is_lower_bound: bool,
}

#[derive(Debug, Clone)]
pub struct KnownRecord {
    pub n: usize,
    pub start: Seq,
    /// False for lengths where the jump list is exhaustively known, true
    /// where it rests on the unproven no-adjacent-3's pruning.
    pub conjectured: bool,
}

#[derive(Debug)]
pub struct Tables {
    pub mu: Vec<MuEntry>,
    pub records: Vec<KnownRecord>,
}

#[derive(Deserialize)]
struct RawTables {
    mu: Vec<(usize, usize, bool)>,
    records: Vec<RawRecord>,
}

#[derive(Deserialize)]
struct RawRecord {
    n: usize,
    start: String,
    conjectured: bool,
}

/// The bundled tables, parsed once.
pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let raw: RawTables = serde_json::from_str(include_str!("../data/records.json"))
            .expect("bundled records data parses");
        let mu = raw
            .mu
            .into_iter()
            .map(|(n, mu, is_lower_bound)| MuEntry { n, mu, is_lower_bound })
            .collect();
        let records = raw
            .records
            .into_iter()
            .map(|r| KnownRecord {
                n: r.n,
                start: r.start.parse().expect("bundled record starts parse"),
                conjectured: r.conjectured,
            })
            .collect();
        Tables { mu, records }
    })
}

impl Tables {
    pub fn mu(&self, n: usize) -> Option<&MuEntry> {
        self.mu.iter().find(|e| e.n == n)
    }

    pub fn record(&self, n: usize) -> Option<&KnownRecord> {
        self.records.iter().find(|r| r.n == n)
    }

    /// Lengths at which the record jumps (`mu(n) > mu(n-1) + 1`), i.e. the
    /// lengths carrying a record start.
    pub fn jump_lengths(&self) -> Vec<usize> {
        self.records.iter().map(|r| r.n).collect()
    }

    /// Internal consistency of the bundled data: between jumps `mu` rises by
    /// exactly 1, every jump length carries a start of the right shape, and
    /// exact values precede lower bounds.
    pub fn structural_check(&self) -> Result<(), String> {
        let jumps = self.jump_lengths();
        for pair in self.mu.windows(2) {
            let (prev, cur) = (&pair[0], &pair[1]);
            if cur.n != prev.n + 1 {
                return Err(format!("mu table skips from n={} to n={}", prev.n, cur.n));
            }
            if prev.is_lower_bound && !cur.is_lower_bound {
                return Err(format!("exact value at n={} after a lower bound", cur.n));
            }
            let jump = cur.mu > prev.mu + 1;
            if jump != jumps.contains(&cur.n) {
                return Err(format!(
                    "jump list disagrees with mu table at n={} (mu {} -> {})",
                    cur.n, prev.mu, cur.mu
                ));
            }
            if !jump && cur.mu != prev.mu + 1 {
                return Err(format!("mu(n) fell at n={}", cur.n));
            }
        }
        for record in &self.records {
            if record.start.len() != record.n {
                return Err(format!("record start at n={} has wrong length", record.n));
            }
            if !record.start.is_two_three() {
                return Err(format!("record start at n={} leaves the {{2,3}} alphabet", record.n));
            }
            if record.n > 1 && record.start[0] != 2 {
                return Err(format!("record start at n={} does not start with 2", record.n));
            }
            if self.mu(record.n).is_none() {
                return Err(format!("record start at n={} has no mu row", record.n));
            }
        }
        Ok(())
    }
}

/// Outcome of replaying one bundled record start.
#[derive(Debug, Clone)]
pub struct RecordCheck {
    pub n: usize,
    pub claimed_mu: usize,
    pub conjectured: bool,
    pub ok: bool,
}

/// Re-extend every bundled record start and compare against its claimed
/// `mu`. Each check is a single run of the recurrence.
pub fn verify_known_records(cap: usize) -> Result<Vec<RecordCheck>, SearchError> {
    let tables = tables();
    let mut out = Vec::with_capacity(tables.records.len());
    for record in &tables.records {
        let claimed = tables
            .mu(record.n)
            .unwrap_or_else(|| panic!("no mu row for record at n={}", record.n))
            .mu;
        let ok = verify_record(&record.start, claimed, cap)?;
        out.push(RecordCheck { n: record.n, claimed_mu: claimed, conjectured: record.conjectured, ok });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data_is_structurally_sound() {
        tables().structural_check().expect("bundled tables consistent");
        assert_eq!(tables().mu.len(), 80);
        assert_eq!(tables().records.len(), 15);
    }

    #[test]
    fn known_values() {
        let t = tables();
        assert_eq!(t.mu(12).unwrap().mu, 124);
        assert_eq!(t.mu(48).unwrap().mu, 179);
        assert!(!t.mu(52).unwrap().is_lower_bound);
        assert!(t.mu(53).unwrap().is_lower_bound);
        assert_eq!(t.mu(77).unwrap().mu, 250);
        assert_eq!(
            t.jump_lengths(),
            vec![1, 2, 4, 6, 8, 9, 10, 11, 14, 19, 22, 48, 68, 76, 77]
        );
        assert_eq!(t.record(4).unwrap().start, "2323".parse().unwrap());
    }

    #[test]
    fn small_records_replay() {
        for check in verify_known_records(1_000_000).unwrap().iter().filter(|c| c.n <= 14) {
            assert!(check.ok, "record at n={} does not replay", check.n);
        }
    }
}
