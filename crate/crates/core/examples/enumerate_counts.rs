//! Count connected graphs up to isomorphism by vertex count.
//!
//!     cargo run --release --example enumerate_counts -- 8 2

use std::time::Instant;

use gndb::enumerate::{connected_graphs_upto, CONNECTED_CLASS_COUNTS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n_max: usize = args.next().map_or(Ok(7), |s| s.parse())?;
    let jobs: usize = args.next().map_or(Ok(1), |s| s.parse())?;
    let start = Instant::now();
    let levels = connected_graphs_upto(n_max, jobs)?;
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        let ok = if level.len() == CONNECTED_CLASS_COUNTS[n] { "ok" } else { "MISMATCH" };
        println!("n={n}: {:>7} classes  {ok}", level.len());
    }
    println!("{:.2}s with {jobs} job(s)", start.elapsed().as_secs_f64());
    Ok(())
}
