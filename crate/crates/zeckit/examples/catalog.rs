//! Running the shipped identity catalog. One entry is a known misprint kept
//! on purpose (flagged `erratum`); the checker must refute it, and does.
//!
//!     cargo run --example catalog

use zeckit::catalog::{builtin, check_all, CheckStatus, DEFAULT_SPAN};

fn main() -> zeckit::Result<()> {
    let entries = builtin();
    let report = check_all(&entries, DEFAULT_SPAN)?;

    for (entry, checked) in entries.iter().zip(&report.entries) {
        let pattern = entry.pattern()?;
        let mark = match checked.status {
            CheckStatus::Ok => "ok ",
            CheckStatus::ErratumDetected => "err",
            CheckStatus::Failed => "BAD",
        };
        print!("[{mark}] {:<5} {pattern}", entry.label);
        if let Some(w) = &checked.witness {
            print!("  <- n = {}: {} != {}", w.n, w.lhs, w.rhs);
        }
        println!();
    }

    println!(
        "\n{} entries: {} ok, {} erratum detected, {} failed",
        report.total, report.ok, report.errata_detected, report.failed
    );
    assert!(report.all_as_expected());
    Ok(())
}
