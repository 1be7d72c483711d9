//! Parse an adjacency list, classify it, and emit it back.
//!
//!     cargo run --example adjlist

use gndb::codec::{adjlist, graph6};
use gndb::classify;

const PETERSEN: &str = "\
0: 1 4 5
1: 0 2 6
2: 1 3 7
3: 2 4 8
4: 3 0 9
5: 0 7 8
6: 1 8 9
7: 2 5 9
8: 3 5 6
9: 4 6 7
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = adjlist::parse(PETERSEN, None)?;
    let class = classify(&g, &[1, 2, 3])?;
    println!("Petersen graph: {} ({} edges)", graph6::encode(&g), g.edge_count());
    println!("  DB={} NDB γ={:?} 2-GNDB={:?} 3-GNDB={:?}", class.is_db, class.ndb_gamma, class.gamma(2), class.gamma(3));
    print!("{}", adjlist::emit(&g));
    match adjlist::parse("0: 1\n1: 1\n", None) {
        Ok(_) => println!("self loop accepted?"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
