//! End-to-end acceptance run: one line per criterion, all must pass.

use arc_ic_core::suite::acceptance_suite;

#[test]
fn acceptance() {
    let results = acceptance_suite();
    let mut failed = false;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<24} {}", r.name, r.detail);
        failed |= !r.passed;
    }
    assert!(!failed, "at least one acceptance criterion failed");
}
