//! Certificates carry enough to re-check a finding from its graph6 string.
//!
//!     cargo run --example certificate_replay

use gndb::enumerate::{verify_theorems, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify_theorems(&VerifyConfig::new(6))?;
    println!("k=1 carve-outs (NDB graphs that are not bipartite):");
    for cert in &report.carve_outs {
        println!("  {} [{}] reproduces: {}", cert.graph6, cert.predicate, cert.replay()?);
    }
    let faulty = verify_theorems(&VerifyConfig { inject_fault: true, ..VerifyConfig::new(3) })?;
    if let Some(cert) = faulty.violations.first() {
        println!("injected violation {} on edge {:?} reproduces: {}", cert.graph6, cert.edge, cert.replay()?);
        let mut honest = cert.clone();
        honest.injected = false;
        println!("same certificate without the fault reproduces: {}", honest.replay()?);
    }
    Ok(())
}
