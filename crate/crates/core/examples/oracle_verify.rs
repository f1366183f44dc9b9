//! Check the resolvent formulas against the cross-ratio model.

use quintic_fields::oracle::identity_suite;

fn main() {
    let report = identity_suite(7, 50);
    for r in &report.identities {
        println!(
            "{:<24} {:>4} checked  {}",
            r.name,
            r.checked,
            if r.passed() { "ok" } else { "FAILED" }
        );
    }
}
