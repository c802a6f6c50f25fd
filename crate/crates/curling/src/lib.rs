//! Curling numbers and the sequences they generate.
//!
//! The curling number `k(S)` of a finite nonempty sequence `S` is the largest
//! `k` such that `S` can be split as `X Y^k` with `Y` nonempty. Repeatedly
//! appending `k(S)` to `S` drives every sequence we know of to a 1; this crate
//! provides the machinery to compute curling numbers, run those extensions,
//! search exhaustively for the longest pre-1 extensions achievable by starts
//! made of 2's and 3's, and stream the self-describing sequences obtained from
//! the seed 1 (OEIS A090822 and its never-below-2 variant A091787).
//!
//! The main entry points:
//!
//! * [`curling_number`] / [`curling_number_naive`] — optimized and
//!   definitional computations of `k(S)` with an explicit witness.
//! * [`extend_until_one`] and [`tail_compose`] — run the append-`k` recurrence.
//! * [`search::mu_search`] — pruned, parallel, checkpointable record search
//!   over `{2,3}` starting sequences.
//! * [`gijswijt::Generator`] — streaming generation of A090822/A091787 at
//!   millions of terms.
//! * [`records`] — the bundled table of known records and its verification.

mod curl;
mod engine;
mod error;
mod extend;
pub mod gijswijt;
pub mod records;
pub mod search;
mod seq;

pub use curl::{curling_number, curling_number_naive, CurlingWitness};
pub use error::Error;
pub use extend::{extend_step, extend_until_one, tail_compose, ExtensionResult};
pub use seq::{Seq, Symbol};
