//! End-to-end harness runs over the default universe.

use sigma_verify::{check_theorems, reproduce_paper_artifacts, Universe, DEFAULT_MAX_CARD};

#[test]
fn merged_theorem_suite_passes_on_the_default_universe() {
    let report = check_theorems(&Universe::default_universe(), DEFAULT_MAX_CARD).unwrap();
    assert!(report.passed(), "{}", report.render_text());
    // Every declared check ran at least once.
    assert!(report.counts().iter().all(|(_, n)| *n > 0));
    // Reruns see the same counts (seeded randomness, fixed iteration).
    let again = check_theorems(&Universe::default_universe(), DEFAULT_MAX_CARD).unwrap();
    assert_eq!(report.counts(), again.counts());
}

#[test]
fn golden_suite_passes() {
    let report = reproduce_paper_artifacts();
    assert!(report.passed(), "{}", report.render_text());
}
