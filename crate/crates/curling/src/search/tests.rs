use super::*;
use crate::curling_number_naive;

fn seq(text: &str) -> Seq {
    text.parse().unwrap()
}

fn finished(config: &SearchConfig) -> (RecordTable, SearchStats) {
    mu_search(config).unwrap().finished().expect("search ran to completion")
}

/// mu(n) for n = 1..12 over {2,3} starts.
const MU_12: [usize; 12] = [1, 4, 5, 8, 9, 14, 15, 66, 68, 70, 123, 124];

#[test]
fn mu_through_12_lemma1() {
    let (table, stats) = finished(&SearchConfig::new(12));
    let got: Vec<usize> = table.rows.iter().map(|r| r.mu).collect();
    assert_eq!(got, MU_12);
    assert_eq!(table.jumps(), vec![2, 4, 6, 8, 9, 10, 11]);
    assert_eq!(stats.per_level.len(), 12);
}

#[test]
fn record_rows_through_12() {
    let (table, _) = finished(&SearchConfig::new(12));
    // Both length-1 starts reach exactly one term before the 1.
    let row1 = table.row(1).unwrap();
    assert_eq!(row1.record_starts, vec![seq("2"), seq("3")]);
    assert!(!row1.jump);
    assert!(row1.records_complete);
    // Strict jumps have the unique starts from the known table.
    for (n, start) in [(2, "22"), (4, "2323"), (6, "222322"), (8, "23222323")] {
        let row = table.row(n).unwrap();
        assert!(row.jump, "n={n} should be a jump");
        assert!(row.records_complete);
        assert_eq!(row.record_starts, vec![seq(start)], "n={n}");
    }
    assert!(table.rows.iter().all(|r| !r.is_lower_bound));
}

#[test]
fn modes_agree_through_10() {
    let mut config = SearchConfig::new(10);
    let (lemma1, _) = finished(&config);
    config.pruning = Pruning::Full;
    let (full, _) = finished(&config);
    config.pruning = Pruning::Conjectural;
    let (conjectural, _) = finished(&config);
    for n in 1..=10 {
        assert_eq!(full.mu(n), lemma1.mu(n), "full vs lemma1 at n={n}");
        assert_eq!(full.mu(n), conjectural.mu(n), "full vs conjectural at n={n}");
    }
    // Full mode also sees every achiever; pruned modes may see fewer on ties
    // but must agree on strict jumps.
    for n in [2, 4, 6, 8] {
        assert_eq!(full.row(n).unwrap().record_starts, lemma1.row(n).unwrap().record_starts);
    }
}

#[test]
fn prefix_skip_does_not_change_results() {
    let mut config = SearchConfig::new(10);
    config.prefix_skip = false;
    let (plain, plain_stats) = finished(&config);
    config.prefix_skip = true;
    let (skipping, skip_stats) = finished(&config);
    for (a, b) in plain.rows.iter().zip(&skipping.rows) {
        assert_eq!(a, b);
    }
    assert!(skip_stats.pruned_prefix_skip > 0);
    assert!(skip_stats.candidates_extended < plain_stats.candidates_extended);
}

#[test]
fn worker_count_does_not_change_results() {
    let mut config = SearchConfig::new(12);
    let (one, _) = finished(&config);
    config.workers = 4;
    let (four, _) = finished(&config);
    assert_eq!(one.rows, four.rows);
}

#[test]
fn csv_and_json_rendering() {
    let (table, _) = finished(&SearchConfig::new(4));
    let csv = table.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,mu,is_lower_bound,jump,num_records"));
    assert_eq!(lines.next(), Some("1,1,false,false,2"));
    assert!(csv.lines().any(|l| l == "4,8,false,true,1"));
    let json: serde_json::Value = serde_json::from_str(&table.records_json()).unwrap();
    assert_eq!(json["4"], serde_json::json!(["2323"]));
}

#[test]
fn extended_counts_match_quadruple_free_enumeration() {
    let mut config = SearchConfig::new(9);
    config.prefix_skip = false;
    let (_, stats) = finished(&config);
    for level in &stats.per_level {
        assert_eq!(
            level.extended,
            count_quadruple_free(level.n),
            "level {} extension count",
            level.n
        );
    }
    let total: u64 = (1..=9).map(count_quadruple_free).sum();
    assert_eq!(stats.candidates_extended, total);
}

#[test]
fn quadruple_free_counts_small() {
    // Brute force over all strings, testing every prefix with the naive
    // oracle; a fourth power must end somewhere, giving k >= 4 there.
    fn brute(n: usize) -> u64 {
        let mut count = 0;
        for bits in 0u32..(1 << n) {
            let terms: Vec<Symbol> = (0..n).map(|i| 2 + ((bits >> i) & 1)).collect();
            let free = (1..=n).all(|i| {
                curling_number_naive(&Seq::from(&terms[..i])).unwrap().k < 4
            });
            if free {
                count += 1;
            }
        }
        count
    }
    for n in 1..=10 {
        assert_eq!(count_quadruple_free(n), brute(n), "n={n}");
    }
    assert_eq!(count_quadruple_free(1), 2);
    assert_eq!(count_quadruple_free(4), 14);
}

#[test]
fn quadruple_free_append_examples() {
    assert!(!is_quadruple_free_after_append(&seq("222"), 2));
    // k(2323232) = 3 with period 2: still quadruple-free.
    assert!(is_quadruple_free_after_append(&seq("232323"), 2));
    assert!(is_quadruple_free_after_append(&seq("223"), 2));
}

#[test]
fn verify_record_examples() {
    assert!(verify_record(&seq("2323"), 8, 1_000_000).unwrap());
    assert!(!verify_record(&seq("2323"), 9, 1_000_000).unwrap());
}

#[test]
fn cap_exhaustion_names_the_offending_start() {
    let mut config = SearchConfig::new(2);
    config.cap = 1;
    match mu_search(&config) {
        Err(SearchError::CapExhausted { start, cap: 1 }) => assert_eq!(start, seq("22")),
        other => panic!("expected cap exhaustion, got {other:?}"),
    }
}

#[test]
fn invalid_configs_are_rejected() {
    assert!(matches!(
        mu_search(&SearchConfig::new(0)),
        Err(SearchError::InvalidConfig(_))
    ));
    let mut config = SearchConfig::new(3);
    config.cap = 0;
    assert!(matches!(mu_search(&config), Err(SearchError::InvalidConfig(_))));
    let mut config = SearchConfig::new(3);
    config.workers = 0;
    assert!(matches!(mu_search(&config), Err(SearchError::InvalidConfig(_))));
}

mod checkpointing {
    use super::*;

    fn temp_path(name: &str) -> std::path::PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!("curling-test-{}-{name}", std::process::id()));
        path
    }

    #[test]
    fn interrupted_search_resumes_to_identical_table() {
        let path = temp_path("resume");
        let _ = std::fs::remove_file(&path);
        let mut config = SearchConfig::new(12);
        config.checkpoint_path = Some(path.clone());
        config.task_budget = Some(5);

        let mut suspensions = 0;
        let resumed = loop {
            match mu_search(&config).unwrap() {
                SearchOutcome::Finished { table, .. } => break table,
                SearchOutcome::Suspended { .. } => suspensions += 1,
            }
        };
        assert!(suspensions > 0, "budget of 5 tasks should suspend at least once");

        let oneshot = finished(&SearchConfig::new(12)).0;
        assert_eq!(resumed, oneshot);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn immediate_resume_is_identical() {
        let path = temp_path("noop");
        let _ = std::fs::remove_file(&path);
        let mut config = SearchConfig::new(8);
        config.checkpoint_path = Some(path.clone());
        let (first, _) = finished(&config);
        // Everything journaled; the rerun replays without extending anything.
        let (second, stats) = finished(&config);
        assert_eq!(first, second);
        assert_eq!(stats.candidates_extended, 0);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn altered_config_is_rejected() {
        let path = temp_path("mismatch");
        let _ = std::fs::remove_file(&path);
        let mut config = SearchConfig::new(6);
        config.checkpoint_path = Some(path.clone());
        finished(&config);
        config.cap += 1;
        match mu_search(&config) {
            Err(SearchError::CheckpointConfigMismatch { .. }) => {}
            other => panic!("expected config mismatch, got {other:?}"),
        }
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn corrupt_and_foreign_files_are_rejected() {
        let path = temp_path("corrupt");
        std::fs::write(&path, "not a checkpoint\n").unwrap();
        let mut config = SearchConfig::new(4);
        config.checkpoint_path = Some(path.clone());
        match mu_search(&config) {
            Err(SearchError::CheckpointVersion { .. }) => {}
            other => panic!("expected version error, got {other:?}"),
        }

        let digest = config_digest(&config);
        std::fs::write(
            &path,
            format!("curling-mu-checkpoint v1\nconfig {digest}\ntask oops\n"),
        )
        .unwrap();
        match mu_search(&config) {
            Err(SearchError::CheckpointCorrupt { line: 3, .. }) => {}
            other => panic!("expected corruption at line 3, got {other:?}"),
        }
        std::fs::remove_file(&path).unwrap();
    }
}
