use std::time::Instant;

use ginv_core::fixtures::{run_suite, SuiteConfig};

#[test]
fn suite_passes_at_default_cutoff() {
    let start = Instant::now();
    let checks = run_suite(&SuiteConfig::default());
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} / {}: {}", c.fixture, c.claim, c.detail))
        .collect();
    eprintln!("{} checks in {:?}", checks.len(), start.elapsed());
    assert!(failed.is_empty(), "{failed:#?}");
}
