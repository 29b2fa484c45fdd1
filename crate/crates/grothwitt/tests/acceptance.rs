//! End-to-end acceptance run: every criterion, one report line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! full table; any failing criterion fails the test with its report.

#[test]
fn acceptance() {
    let outcomes = grothwitt::verify::run_all();
    assert_eq!(outcomes.len(), 11);
    let mut failures = Vec::new();
    for outcome in &outcomes {
        println!("{}", outcome.line());
        if !outcome.passed {
            failures.push(outcome.line());
        }
    }
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}
