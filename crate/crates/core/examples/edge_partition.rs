//! Print W-set sizes and the D-table for every edge of a graph, and check
//! the D-table sum identity against the direct ratio test.
//!
//!     cargo run --example edge_partition -- bipartite:2,6 3

use gndb::balance::{check_sum_identity, edge_partition, is_consistent_edge};
use gndb::families::FamilySpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec: FamilySpec = args.next().unwrap_or_else(|| "cycle:6".into()).parse()?;
    let k: u32 = args.next().map_or(Ok(1), |s| s.parse())?;
    let g = spec.build()?;
    let dm = g.distances();
    println!("{spec}: n={} diameter={}", g.n(), dm.diameter()?);
    for (a, b) in g.edges() {
        let eb = edge_partition(&g, &dm, a, b)?;
        let table: Vec<String> = eb.d_table.iter().map(|(&(i, j), &c)| format!("D[{i},{j}]={c}")).collect();
        println!(
            "  {a}-{b}: |W_ab|={} |W_ba|={} eq={}  identity(k={k})={} ratio={}  {}",
            eb.w_ab,
            eb.w_ba,
            eb.eq_count,
            check_sum_identity(&eb, k),
            is_consistent_edge(&eb, k),
            table.join(" ")
        );
    }
    Ok(())
}
