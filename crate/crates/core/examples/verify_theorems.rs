//! Run every statement check over the corpus and print the summary, then
//! repeat with an injected fault to show the harness catches it.
//!
//!     cargo run --release --example verify_theorems -- 8

use gndb::codec::report::scan_summary;
use gndb::enumerate::{verify_theorems, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let report = verify_theorems(&VerifyConfig::new(n_max))?;
    print!("{}", scan_summary(&report, 10));
    println!("clean: {}", report.is_clean());

    let faulty = verify_theorems(&VerifyConfig { inject_fault: true, ..VerifyConfig::new(n_max.min(4)) })?;
    println!("with injected fault: {} violations", faulty.violations.len());
    Ok(())
}
