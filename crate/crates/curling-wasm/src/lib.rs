//! wasm-bindgen bindings for the browser demo page in `www/`.
//!
//! Every export returns a JSON string — `{"error": "..."}` on bad input —
//! so the page needs no custom marshalling and the functions stay callable
//! (and tested) on native targets.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use curling::gijswijt::{self, Rule};
use curling::search::{mu_search, SearchConfig, SearchOutcome};
use curling::{extend_until_one, records, Seq};

/// Hard ceiling for the in-browser record search; a level-22 search is a
/// couple of seconds of single-threaded work, which is as much as a click
/// should cost.
const MAX_LIVE_SEARCH: usize = 22;

fn err(msg: impl Into<String>) -> String {
    #[derive(Serialize)]
    struct ErrorBody {
        error: String,
    }
    serde_json::to_string(&ErrorBody { error: msg.into() }).unwrap()
}

fn ok(value: impl Serialize) -> String {
    serde_json::to_string(&value).unwrap()
}

/// Extend a digit-string sequence until its first appended 1.
#[wasm_bindgen]
pub fn extend_run(seq_digits: &str, cap: u32) -> String {
    #[derive(Serialize)]
    struct Body {
        start_len: usize,
        terms: Vec<u32>,
        pre_one_len: usize,
        steps: usize,
        hit_cap: bool,
    }
    let s: Seq = match seq_digits.parse() {
        Ok(s) => s,
        Err(e) => return err(e.to_string()),
    };
    if cap == 0 {
        return err("cap must be positive");
    }
    match extend_until_one(&s, cap as usize) {
        Ok(r) => ok(Body {
            start_len: s.len(),
            terms: r.final_seq.terms().to_vec(),
            pre_one_len: r.pre_one_len,
            steps: r.steps,
            hit_cap: r.hit_cap,
        }),
        Err(e) => err(e.to_string()),
    }
}

/// First `count` terms of the k- or h-rule stream from a digit-string seed.
#[wasm_bindgen]
pub fn sequence_terms(rule: &str, seed_digits: &str, count: u32) -> String {
    #[derive(Serialize)]
    struct Body {
        terms: Vec<u32>,
    }
    let rule = match rule {
        "k" => Rule::K,
        "h" => Rule::H,
        other => return err(format!("unknown rule {other:?} (use \"k\" or \"h\")")),
    };
    let seed: Seq = match seed_digits.parse() {
        Ok(s) => s,
        Err(e) => return err(e.to_string()),
    };
    if count == 0 || count > 2_000_000 {
        return err("count must be between 1 and 2000000");
    }
    match gijswijt::generate(rule, &seed, count as usize) {
        Ok(terms) => ok(Body { terms: terms.into_terms() }),
        Err(e) => err(e.to_string()),
    }
}

#[derive(Serialize)]
struct CurveRow {
    n: usize,
    mu: usize,
    jump: bool,
    starts: Vec<String>,
}

/// Run the quadruple-free-pruned record search live up to `n_max`.
#[wasm_bindgen]
pub fn mu_curve(n_max: u32) -> String {
    #[derive(Serialize)]
    struct Body {
        rows: Vec<CurveRow>,
    }
    let n_max = n_max as usize;
    if n_max == 0 || n_max > MAX_LIVE_SEARCH {
        return err(format!("n_max must be between 1 and {MAX_LIVE_SEARCH}"));
    }
    let config = SearchConfig::new(n_max);
    match mu_search(&config) {
        Ok(SearchOutcome::Finished { table, .. }) => ok(Body {
            rows: table
                .rows
                .into_iter()
                .map(|r| CurveRow {
                    n: r.n,
                    mu: r.mu,
                    jump: r.jump,
                    starts: r
                        .record_starts
                        .iter()
                        .filter_map(|s| s.digit_string())
                        .collect(),
                })
                .collect(),
        }),
        Ok(SearchOutcome::Suspended { .. }) => unreachable!("no budget configured"),
        Err(e) => err(e.to_string()),
    }
}

/// The bundled table of known records up to length 80, for the context
/// curve behind the live search.
#[wasm_bindgen]
pub fn known_mu() -> String {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        mu: usize,
        lower_bound: bool,
        record: Option<String>,
    }
    #[derive(Serialize)]
    struct Body {
        rows: Vec<Row>,
    }
    let tables = records::tables();
    ok(Body {
        rows: tables
            .mu
            .iter()
            .map(|e| Row {
                n: e.n,
                mu: e.mu,
                lower_bound: e.is_lower_bound,
                record: tables.record(e.n).and_then(|r| r.start.digit_string()),
            })
            .collect(),
    })
}
