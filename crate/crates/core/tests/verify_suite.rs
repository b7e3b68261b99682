use gaussnet_core::verify::{all_passed, check_distribution, run_all, run_selected, Gate, VerifyConfig};

#[test]
fn identical_config_gives_identical_reports() {
    let cfg = VerifyConfig::new(11, 40).unwrap();
    assert_eq!(run_all(&cfg), run_all(&cfg));
}

#[test]
fn different_seeds_draw_different_instances() {
    let a = run_selected(&VerifyConfig::new(1, 30).unwrap(), Some("xi.two_path")).unwrap();
    let b = run_selected(&VerifyConfig::new(2, 30).unwrap(), Some("xi.two_path")).unwrap();
    assert_ne!(a[0].deviation, b[0].deviation);
}

#[test]
fn small_suite_passes() {
    let outcomes = run_all(&VerifyConfig::new(42, 60).unwrap());
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.pass).collect();
    assert!(all_passed(&outcomes), "{failed:?}");
    assert!(outcomes.iter().any(|o| o.gate == Gate::Informational));
}

#[test]
fn chain_of_eight_at_seed_seven() {
    let out = check_distribution(&VerifyConfig::new(7, 200).unwrap(), 8).unwrap();
    assert!(out.pass && out.deviation <= 1e-8, "{out:?}");
}

#[test]
fn filter_selects_groups_and_checks() {
    let cfg = VerifyConfig::new(3, 5).unwrap();
    assert_eq!(run_selected(&cfg, Some("blocks")).unwrap().len(), 5);
    assert_eq!(run_selected(&cfg, Some("blocks.block_determinant")).unwrap().len(), 1);
    assert!(run_selected(&cfg, Some("blocks.nothing")).is_err());
    assert!(run_selected(&cfg, Some("bogus")).is_err());
    assert!(VerifyConfig::new(3, 0).is_err());
}

#[test]
fn failing_outcomes_replay_from_their_counterexample() {
    let mut cfg = VerifyConfig::new(5, 10).unwrap();
    cfg.tolerances.insert("mixing.lambda_law".into(), -1.0);
    let out = &run_selected(&cfg, Some("mixing.lambda_law")).unwrap()[0];
    assert!(!out.pass);
    let ce = out.counterexample.as_ref().unwrap();
    assert!(ce.case < 10);
    assert!(ce.params.contains_key("theta"));
}
