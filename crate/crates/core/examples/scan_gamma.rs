//! Scan the generated corpus for 3-GNDB graphs with a fixed gamma.
//!
//!     cargo run --release --example scan_gamma -- 2

use gndb::enumerate::{scan, ScanConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gamma: usize = std::env::args().nth(1).map_or(Ok(1), |s| s.parse())?;
    let report = scan(&ScanConfig::new(8, &[3]).gamma(gamma))?;
    println!("3-GNDB graphs with gamma={gamma} on at most 8 vertices: {}", report.matches.len());
    for m in &report.matches {
        println!("  {} n={} edges={} diameter={}", m.graph6, m.n, m.edges, m.diameter);
    }
    let examined = report.corpus_size();
    let classified: usize = report.corpus.iter().map(|c| c.classified).sum();
    println!("examined {examined} graphs, {classified} reached full classification");
    Ok(())
}
