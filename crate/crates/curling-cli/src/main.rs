//! `curling` — curling numbers, run-to-one extensions, record search over
//! `{2,3}` starts, and the self-describing sequences from seed 1.
//!
//! Identical flags produce byte-identical stdout; progress and statistics go
//! to stderr. Exit codes: 0 success, 1 failed verification or divergence,
//! 2 usage error, 3 extension cap exhausted, 4 checkpoint error.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use curling::gijswijt::{self, Rule};
use curling::search::{self, mu_search, Pruning, SearchConfig, SearchError, SearchOutcome};
use curling::{extend_until_one, records, tail_compose, Seq};

const DEFAULT_CAP: usize = 1_000_000;

#[derive(Parser)]
#[command(name = "curling", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the curling number and witness decomposition of a sequence.
    Curl(SeqArgs),
    /// Extend a sequence until the first appended 1 and print the run.
    Extend {
        #[command(flatten)]
        seq: SeqArgs,
        /// Maximum number of appended terms.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Tail-compose: prefix a start by its own pre-1 extension and re-extend.
    Compose {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Search for extension records over {2,3} starts of length 1..=n.
    Mu {
        /// Largest start length to search.
        #[arg(long)]
        n: usize,
        /// Enumeration mode: full, lemma1 (quadruple-free), or conjectural
        /// (also no adjacent 3's).
        #[arg(long, default_value = "lemma1")]
        pruning: Pruning,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Skip starts whose last symbol the recurrence would have appended
        /// anyway.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        prefix_skip: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Journal completed subtrees here; an existing file is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Suspend after this many subtree tasks (requires --checkpoint to
        /// be useful).
        #[arg(long)]
        task_budget: Option<u64>,
        /// Stdout format: csv table or json record-start map.
        #[arg(long, value_enum, default_value_t = MuFormat::Csv)]
        format: MuFormat,
        /// Also write the CSV table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the record-start JSON map to this file.
        #[arg(long)]
        records_json: Option<PathBuf>,
    },
    /// Replay the bundled table of known records and verify each one.
    Records {
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Stream terms of the sequence generated from a seed (default seed 1,
    /// Gijswijt's sequence), or locate the first occurrence of a value.
    Gijswijt {
        /// Number of terms to emit.
        #[arg(long, required_unless_present = "target")]
        count: Option<usize>,
        /// k appends the curling number; h appends max(k, 2).
        #[arg(long, value_enum, default_value_t = RuleArg::K)]
        rule: RuleArg,
        /// Seed as a digit string.
        #[arg(long, default_value = "1")]
        seed: String,
        /// Report the 1-based index of the first term equal to this value
        /// instead of streaming terms.
        #[arg(long, conflicts_with = "count")]
        target: Option<u32>,
        /// Scan horizon for --target.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// plain: one space-separated line; lines: one term per line;
        /// bfile: "index term" per line.
        #[arg(long, value_enum, default_value_t = StreamFormat::Plain)]
        format: StreamFormat,
    },
    /// Check that extensions of {2,3} starts continue into Gijswijt's
    /// sequence after their first 1.
    Splice {
        /// Check a single start...
        #[arg(long, conflicts_with = "max_len")]
        seq: Option<String>,
        /// ...or sweep every {2,3} start of length 1..=max-len.
        #[arg(long, conflicts_with = "seq")]
        max_len: Option<usize>,
        /// Number of post-1 terms to compare.
        #[arg(long, default_value_t = 500)]
        extra: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write any divergence here; such a finding would be of real
        /// mathematical interest.
        #[arg(long)]
        findings: Option<PathBuf>,
    },
    /// Count quadruple-free {2,3} strings of each length up to n.
    CountQf {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SeqArgs {
    /// Sequence as an unseparated digit string, e.g. 2323.
    #[arg(long)]
    seq: Option<String>,
    /// Sequence as comma-separated integers, for terms outside 0..=9.
    #[arg(long)]
    csv_seq: Option<String>,
}

impl SeqArgs {
    fn parse(&self) -> Result<Seq, CliError> {
        let parsed = match (&self.seq, &self.csv_seq) {
            (Some(digits), None) => Seq::from_str(digits),
            (None, Some(csv)) => Seq::parse_csv(csv),
            _ => unreachable!("clap enforces exactly one"),
        };
        parsed.map_err(|e| CliError::usage(e.to_string()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    K,
    H,
}

impl From<RuleArg> for Rule {
    fn from(arg: RuleArg) -> Rule {
        match arg {
            RuleArg::K => Rule::K,
            RuleArg::H => Rule::H,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum StreamFormat {
    Plain,
    Lines,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MuFormat {
    Csv,
    Json,
}

struct CliError {
    kind: &'static str,
    msg: String,
    code: u8,
}

impl CliError {
    fn usage(msg: String) -> Self {
        CliError { kind: "usage", msg, code: 2 }
    }

    fn failed(msg: String) -> Self {
        CliError { kind: "verification_failed", msg, code: 1 }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        if err.kind() == io::ErrorKind::BrokenPipe {
            // Downstream closed the pipe (e.g. `| head`); not a failure.
            CliError { kind: "pipe", msg: String::new(), code: 0 }
        } else {
            CliError { kind: "io", msg: err.to_string(), code: 1 }
        }
    }
}

impl From<curling::Error> for CliError {
    fn from(err: curling::Error) -> Self {
        match err {
            curling::Error::CapExhausted { .. } => {
                CliError { kind: "cap_exhausted", msg: err.to_string(), code: 3 }
            }
            other => CliError::usage(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(err: SearchError) -> Self {
        let (kind, code) = match &err {
            SearchError::CapExhausted { .. } => ("cap_exhausted", 3),
            SearchError::CheckpointVersion { .. }
            | SearchError::CheckpointConfigMismatch { .. }
            | SearchError::CheckpointCorrupt { .. }
            | SearchError::Io(_) => ("checkpoint", 4),
            SearchError::InvalidConfig(_) => ("usage", 2),
            SearchError::Monotonicity { .. } => ("monotonicity", 1),
        };
        CliError { kind, msg: err.to_string(), code }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) if err.code == 0 => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error kind={} msg={:?}", err.kind, err.msg);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Curl(seq) => {
            let s = seq.parse()?;
            let w = curling::curling_number(&s)?;
            writeln!(out, "k={} period={} prefix_len={}", w.k, w.period, w.prefix_len)?;
            Ok(())
        }
        Command::Extend { seq, cap } => {
            let s = seq.parse()?;
            let r = extend_until_one(&s, cap)?;
            if r.hit_cap {
                return Err(curling::Error::CapExhausted { cap }.into());
            }
            writeln!(out, "{}", r.final_seq)?;
            writeln!(out, "pre_one_len={} steps={}", r.pre_one_len, r.steps)?;
            Ok(())
        }
        Command::Compose { seq, cap } => {
            let s = seq.parse()?;
            let first = extend_until_one(&s, cap)?;
            if first.hit_cap {
                return Err(curling::Error::CapExhausted { cap }.into());
            }
            let r = tail_compose(&s, cap)?;
            if r.hit_cap {
                return Err(curling::Error::CapExhausted { cap }.into());
            }
            writeln!(
                out,
                "t_len={} start_len={} pre_one_len={}",
                first.pre_one_len,
                first.pre_one_len + s.len(),
                r.pre_one_len
            )?;
            Ok(())
        }
        Command::Mu {
            n,
            pruning,
            cap,
            prefix_skip,
            workers,
            checkpoint,
            task_budget,
            format,
            out: file_out,
            records_json,
        } => {
            let config = SearchConfig {
                n_max: n,
                pruning,
                cap,
                prefix_skip,
                workers,
                checkpoint_path: checkpoint,
                task_budget,
            };
            match mu_search(&config)? {
                SearchOutcome::Finished { table, stats } => {
                    let csv = table.to_csv();
                    match format {
                        MuFormat::Csv => write!(out, "{csv}")?,
                        MuFormat::Json => writeln!(out, "{}", table.records_json())?,
                    }
                    if let Some(path) = file_out {
                        std::fs::write(path, &csv)?;
                    }
                    if let Some(path) = records_json {
                        std::fs::write(path, table.records_json())?;
                    }
                    eprintln!(
                        "stats nodes={} extended={} pruned_w4={} skipped={} elapsed={:.3}s",
                        stats.nodes_visited,
                        stats.candidates_extended,
                        stats.pruned_w4,
                        stats.pruned_prefix_skip,
                        stats.elapsed.as_secs_f64()
                    );
                }
                SearchOutcome::Suspended { stats } => {
                    writeln!(out, "suspended=true")?;
                    eprintln!(
                        "stats nodes={} extended={} elapsed={:.3}s (task budget exhausted; rerun to resume)",
                        stats.nodes_visited,
                        stats.candidates_extended,
                        stats.elapsed.as_secs_f64()
                    );
                }
            }
            Ok(())
        }
        Command::Records { cap } => {
            records::tables()
                .structural_check()
                .map_err(|msg| CliError::failed(format!("bundled table inconsistent: {msg}")))?;
            writeln!(out, "table-structure ok")?;
            let mut failures = 0usize;
            let checks = records::verify_known_records(cap)?;
            for check in &checks {
                let tag = if check.conjectured { " conjectured" } else { "" };
                if check.ok {
                    writeln!(out, "ok n={} mu={}{}", check.n, check.claimed_mu, tag)?;
                } else {
                    failures += 1;
                    writeln!(out, "FAIL n={} claimed={}{}", check.n, check.claimed_mu, tag)?;
                }
            }
            writeln!(out, "checked={} failures={failures}", checks.len())?;
            if failures > 0 {
                out.flush()?;
                return Err(CliError::failed(format!("{failures} record(s) failed to replay")));
            }
            Ok(())
        }
        Command::Gijswijt { count, rule, seed, target, cap, format } => {
            let seed: Seq = seed.parse::<Seq>().map_err(|e| CliError::usage(e.to_string()))?;
            let rule = Rule::from(rule);
            if let Some(target) = target {
                let hit = gijswijt::first_occurrence(rule, &seed, target, cap)?;
                match hit.index {
                    Some(index) => writeln!(out, "target={target} index={index} found=true")?,
                    None => writeln!(out, "target={target} found=false scanned={cap}")?,
                }
                return Ok(());
            }
            let count = count.expect("clap requires count without target");
            if count == 0 {
                return Err(CliError::usage("--count must be at least 1".into()));
            }
            let terms = gijswijt::generate(rule, &seed, count)?;
            match format {
                StreamFormat::Plain => writeln!(out, "{terms}")?,
                StreamFormat::Lines => {
                    for c in terms.iter() {
                        writeln!(out, "{c}")?;
                    }
                }
                StreamFormat::Bfile => {
                    for (i, c) in terms.iter().enumerate() {
                        writeln!(out, "{} {c}", i + 1)?;
                    }
                }
            }
            Ok(())
        }
        Command::Splice { seq, max_len, extra, cap, findings } => {
            let mut divergences = Vec::new();
            let mut checked = 0usize;
            match (seq, max_len) {
                (Some(digits), None) => {
                    let s: Seq = digits.parse().map_err(|e: curling::Error| {
                        CliError::usage(e.to_string())
                    })?;
                    if !s.is_two_three() {
                        return Err(CliError::usage("splice starts must be over {2,3}".into()));
                    }
                    checked += 1;
                    let outcome = gijswijt::splice_check(&s, extra, cap)?;
                    writeln!(out, "start={digits} matches={}", outcome.matches)?;
                    divergences.extend(outcome.divergence);
                }
                (None, Some(max_len)) => {
                    for len in 1..=max_len {
                        let mut failures = 0usize;
                        for bits in 0u64..(1 << len) {
                            let terms: Vec<u32> =
                                (0..len).map(|i| 2 + ((bits >> i) & 1) as u32).collect();
                            let s = Seq::new(terms);
                            checked += 1;
                            let outcome = gijswijt::splice_check(&s, extra, cap)?;
                            if !outcome.matches {
                                failures += 1;
                                divergences.extend(outcome.divergence);
                            }
                        }
                        writeln!(out, "len={len} checked={} failures={failures}", 1u64 << len)?;
                    }
                }
                _ => return Err(CliError::usage("provide exactly one of --seq or --max-len".into())),
            }
            writeln!(out, "total checked={checked} divergences={}", divergences.len())?;
            if !divergences.is_empty() {
                let mut report = String::new();
                for d in &divergences {
                    use std::fmt::Write as _;
                    let _ = writeln!(
                        report,
                        "start={} offset={} continued={} gijswijt={}",
                        d.start.digit_string().unwrap_or_else(|| d.start.to_string()),
                        d.offset,
                        d.continued,
                        d.gijswijt
                    );
                }
                if let Some(path) = findings {
                    std::fs::write(&path, &report)?;
                    eprintln!("findings written to {}", path.display());
                } else {
                    eprint!("{report}");
                }
                out.flush()?;
                return Err(CliError::failed(format!(
                    "{} divergence(s) from Gijswijt's sequence",
                    divergences.len()
                )));
            }
            Ok(())
        }
        Command::CountQf { n } => {
            if n == 0 {
                return Err(CliError::usage("--n must be at least 1".into()));
            }
            for len in 1..=n {
                writeln!(out, "{len} {}", search::count_quadruple_free(len))?;
            }
            Ok(())
        }
    }
}
