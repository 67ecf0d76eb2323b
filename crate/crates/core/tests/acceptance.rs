//! One line per numbered criterion; time limits live in `selftest::CRITERIA`.

use std::io::Write;

use braidlab::selftest::{run_all, CRITERIA};

/// Criteria whose stated expectation does not hold, with the observed reason.
/// Each entry is still run and printed; it must fail in exactly the recorded way.
const KNOWN_UNATTAINABLE: &[(u8, &str)] = &[(
    7,
    "a1^-1 a2^-1 a1 a2 equals s8 s7^-1, the inverse of the stated s7 s8^-1; \
     only s7 (in a1) and s8 (in a2) fail to commute",
)];

#[test]
fn acceptance_criteria() {
    let outcomes = run_all();
    assert_eq!(outcomes.len(), CRITERIA.len());
    // the raw handle is not captured by the harness, so the lines show in every run
    let mut err = std::io::stderr().lock();
    let mut unexpected = Vec::new();
    for o in &outcomes {
        writeln!(err, "{}", o.line()).unwrap();
        match KNOWN_UNATTAINABLE.iter().find(|(id, _)| *id == o.id) {
            Some((_, why)) if !o.passed() => writeln!(err, "             known: {why}").unwrap(),
            _ if !o.passed() => unexpected.push(o.id),
            _ => {}
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}

#[test]
fn known_failure_is_exactly_the_commutator_clause() {
    let o = braidlab::selftest::run(7).unwrap();
    assert!(o.detail.starts_with("first word -> []"), "{}", o.detail);
    assert!(o.detail.contains("equals s7 s8^-1: false"), "{}", o.detail);
    assert!(o.detail.contains("equals s8 s7^-1: true"), "{}", o.detail);
}
