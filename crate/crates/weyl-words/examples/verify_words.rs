//! Re-check every distinguished reflection word in every type through
//! rank 8: palindromic, reduced (letter count equals the inversion-set
//! size), and equal to the right reflection as a matrix. Exits nonzero
//! if anything fails, so this doubles as a smoke test.

use std::process::ExitCode;

use weyl_words::cartan::all_labels;
use weyl_words::verify::verify_all;

fn main() -> ExitCode {
    let mut checked = 0;
    let mut failed = 0;
    for label in all_labels() {
        let report = verify_all(label);
        let status = if report.passed() { "ok" } else { "FAIL" };
        println!("{label:>3}: {}/{} {status}", report.checked, report.total);
        for failure in &report.failures {
            println!(
                "     {} {}: {}",
                failure.root, failure.reason, failure.detail
            );
        }
        checked += report.checked;
        failed += report.failures.len();
    }
    println!("\n{checked} reflections checked, {failed} failures");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
