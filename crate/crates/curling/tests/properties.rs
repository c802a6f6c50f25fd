//! Property tests over the library invariants, plus a few structural checks
//! that don't fit a single module.

use proptest::prelude::*;

use curling::gijswijt::{self, Rule};
use curling::search::{mu_search, verify_record, SearchConfig, SearchOutcome};
use curling::{curling_number, curling_number_naive, extend_step, Seq};

proptest! {
    /// The optimized route agrees with the definitional oracle, and its
    /// witness decomposes the sequence.
    #[test]
    fn optimized_matches_naive(terms in prop::collection::vec(1u32..=5, 1..200)) {
        let s = Seq::new(terms);
        let naive = curling_number_naive(&s).unwrap();
        let fast = curling_number(&s).unwrap();
        prop_assert_eq!(naive, fast);
        prop_assert!(fast.validates(&s));
    }

    /// Append locality: the witness always describes a suffix, so its blocks
    /// end exactly at the appended symbol.
    #[test]
    fn witness_is_a_suffix_decomposition(
        terms in prop::collection::vec(1u32..=4, 1..120),
        c in 1u32..=4,
    ) {
        let mut v = terms;
        v.push(c);
        let s = Seq::new(v);
        let w = curling_number(&s).unwrap();
        prop_assert_eq!(w.prefix_len + w.k as usize * w.period, s.len());
        prop_assert!(w.validates(&s));
    }

    /// One recurrence step appends exactly one term, at least 1, and leaves
    /// the existing terms untouched.
    #[test]
    fn extension_grows_one_at_a_time(terms in prop::collection::vec(1u32..=4, 1..80)) {
        let s = Seq::new(terms);
        let next = extend_step(&s).unwrap();
        prop_assert_eq!(next.len(), s.len() + 1);
        prop_assert!(next[s.len()] >= 1);
        prop_assert_eq!(&next[..s.len()], s.terms());
    }

    /// Shorter generator runs are prefixes of longer ones.
    #[test]
    fn generated_streams_are_prefix_stable(
        a in 1usize..250,
        b in 1usize..250,
        seed in prop::collection::vec(1u32..=3, 1..5),
        h_rule in proptest::bool::ANY,
    ) {
        let rule = if h_rule { Rule::H } else { Rule::K };
        let seed = Seq::new(seed);
        let (small, large) = (a.min(b), a.max(b));
        let short = gijswijt::generate(rule, &seed, small).unwrap();
        let long = gijswijt::generate(rule, &seed, large).unwrap();
        prop_assert_eq!(short.terms(), &long[..small]);
    }

    /// The h rule never emits a term below 2 after the seed.
    #[test]
    fn h_rule_dominates_two(seed in prop::collection::vec(1u32..=3, 1..5), count in 5usize..200) {
        let seed_len = seed.len();
        let s = gijswijt::generate(Rule::H, &Seq::new(seed), count.max(seed_len)).unwrap();
        prop_assert!(s[seed_len..].iter().all(|&c| c >= 2));
    }
}

/// Every record row of a search is internally consistent: starts have the
/// row's length, stay in the {2,3} alphabet, and re-extend to exactly mu.
#[test]
fn record_rows_replay() {
    let table = match mu_search(&SearchConfig::new(10)).unwrap() {
        SearchOutcome::Finished { table, .. } => table,
        SearchOutcome::Suspended { .. } => unreachable!(),
    };
    for row in &table.rows {
        for start in &row.record_starts {
            assert_eq!(start.len(), row.n);
            assert!(start.is_two_three());
            assert!(verify_record(start, row.mu, 1_000_000).unwrap(), "row n={}", row.n);
        }
    }
}

/// Generated terms are the oracle's curling numbers of their prefixes,
/// spot-checked at 10^3 pseudorandom positions per rule.
#[test]
fn generated_terms_match_oracle_at_random_positions() {
    let mut state = 0x00c0ffeeu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let horizon = 2_500;
    for rule in [Rule::K, Rule::H] {
        let s = gijswijt::generate(rule, &Seq::new(vec![1]), horizon).unwrap();
        for _ in 0..1_000 {
            let i = 1 + (next() % (horizon as u64 - 1)) as usize;
            let k = curling_number_naive(&Seq::from(&s[..i])).unwrap().k;
            let expect = match rule {
                Rule::K => k,
                Rule::H => k.max(2),
            };
            assert_eq!(s[i], expect, "{rule:?} term {}", i + 1);
        }
    }
}

/// Core values are plain data: shareable and transferable across workers.
#[test]
fn values_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<Seq>();
    check::<curling::CurlingWitness>();
    check::<curling::ExtensionResult>();
    check::<curling::search::RecordTable>();
    check::<curling::search::SearchStats>();
    check::<gijswijt::Generator>();
}
