//! Text checkpoint journal for the record search.
//!
//! Layout: a version header, a digest of the result-determining config
//! fields, then one `task` line per completed subtree, e.g.
//!
//! ```text
//! curling-mu-checkpoint v1
//! config 91c4f2a07d6e3b58
//! task 12 2232232322 124 223223232232,...
//! ```
//!
//! A `task` line records the level, the subtree's root prefix, the best
//! pre-1 length found in it (0 when every leaf was skipped), and the starts
//! achieving that best as comma-joined digit strings (`-` when none).
//! Resuming replays these lines and re-runs only the missing subtrees; a
//! resumed search finishes with a table bit-identical to an uninterrupted
//! one. Lines are appended and flushed as tasks complete, so a file cut
//! short by a crash loses at most the line being written; a torn final line
//! is reported as corruption rather than silently dropped.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{LineWriter, Write};
use std::path::Path;
use std::sync::Mutex;

use crate::Seq;

use super::{SearchConfig, SearchError};

const HEADER: &str = "curling-mu-checkpoint v1";

/// Digest of the config fields that determine search results. Worker count,
/// task budget, and the checkpoint path itself deliberately don't
/// participate: they change scheduling, never the table.
pub fn config_digest(config: &SearchConfig) -> String {
    let canonical = format!(
        "n_max={};pruning={};cap={};prefix_skip={}",
        config.n_max, config.pruning, config.cap, config.prefix_skip
    );
    // FNV-1a, stable across builds and platforms.
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in canonical.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

pub(crate) struct StoredTask {
    pub best: usize,
    pub achievers: Vec<Seq>,
}

/// An open checkpoint: the journaled tasks plus an append handle.
pub struct Checkpoint {
    done: HashMap<(usize, String), StoredTask>,
    writer: Mutex<LineWriter<File>>,
}

impl Checkpoint {
    /// Start a fresh checkpoint file for `config`.
    pub fn create(path: &Path, config: &SearchConfig) -> Result<Self, SearchError> {
        let mut file = File::create(path)?;
        writeln!(file, "{HEADER}")?;
        writeln!(file, "config {}", config_digest(config))?;
        file.flush()?;
        Ok(Checkpoint { done: HashMap::new(), writer: Mutex::new(LineWriter::new(file)) })
    }

    /// Load an existing checkpoint and verify it belongs to `config`.
    pub fn load(path: &Path, config: &SearchConfig) -> Result<Self, SearchError> {
        let content = std::fs::read_to_string(path)?;
        let mut lines = content.lines().enumerate();

        let header = lines.next().map(|(_, l)| l).ok_or_else(|| corrupt(1, "missing header"))?;
        if header != HEADER {
            return Err(SearchError::CheckpointVersion { found: header.to_string() });
        }

        let config_line =
            lines.next().map(|(_, l)| l).ok_or_else(|| corrupt(2, "missing config line"))?;
        let expected = config_digest(config);
        match config_line.strip_prefix("config ") {
            Some(found) if found == expected => {}
            Some(found) => {
                return Err(SearchError::CheckpointConfigMismatch {
                    found: found.to_string(),
                    expected,
                })
            }
            None => return Err(corrupt(2, "expected a config line")),
        }

        let mut done = HashMap::new();
        for (idx, line) in lines {
            if line.is_empty() {
                continue;
            }
            let (n, prefix, task) = parse_task_line(line, idx + 1)?;
            done.insert((n, prefix), task);
        }

        let file = OpenOptions::new().append(true).open(path)?;
        Ok(Checkpoint { done, writer: Mutex::new(LineWriter::new(file)) })
    }

    pub(crate) fn lookup(&self, n: usize, prefix: &Seq) -> Option<&StoredTask> {
        let key = (n, prefix.digit_string().expect("search prefixes are digits"));
        self.done.get(&key)
    }

    /// Journal one completed subtree. Writes are serialized and flushed.
    pub(crate) fn append_task(
        &self,
        n: usize,
        prefix: &Seq,
        best: usize,
        achievers: &[Seq],
    ) -> Result<(), SearchError> {
        let rendered = if achievers.is_empty() {
            "-".to_string()
        } else {
            achievers
                .iter()
                .map(|s| s.digit_string().expect("achievers are digits"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let prefix = prefix.digit_string().expect("search prefixes are digits");
        let mut writer = self.writer.lock().unwrap();
        writeln!(writer, "task {n} {prefix} {best} {rendered}")?;
        writer.flush()?;
        Ok(())
    }
}

fn corrupt(line: usize, msg: &str) -> SearchError {
    SearchError::CheckpointCorrupt { line, msg: msg.to_string() }
}

fn parse_task_line(
    line: &str,
    line_no: usize,
) -> Result<(usize, String, StoredTask), SearchError> {
    let mut fields = line.split(' ');
    if fields.next() != Some("task") {
        return Err(corrupt(line_no, "expected a task line"));
    }
    let n: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| corrupt(line_no, "bad level"))?;
    let prefix = fields.next().ok_or_else(|| corrupt(line_no, "missing prefix"))?.to_string();
    if prefix.parse::<Seq>().is_err() {
        return Err(corrupt(line_no, "bad prefix"));
    }
    let best: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| corrupt(line_no, "bad best length"))?;
    let achievers_field = fields.next().ok_or_else(|| corrupt(line_no, "missing achievers"))?;
    if fields.next().is_some() {
        return Err(corrupt(line_no, "trailing fields"));
    }
    let achievers = if achievers_field == "-" {
        Vec::new()
    } else {
        achievers_field
            .split(',')
            .map(|item| item.parse::<Seq>().map_err(|_| corrupt(line_no, "bad achiever")))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok((n, prefix, StoredTask { best, achievers }))
}
