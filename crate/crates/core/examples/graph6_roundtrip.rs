//! Encode and decode graph6, including a graph in the long size form, and
//! show how malformed strings are reported.
//!
//!     cargo run --example graph6_roundtrip

use gndb::codec::graph6;
use gndb::families::{complete, complete_bipartite, path};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for g in [complete(3)?, complete(4)?, path(5)?, complete_bipartite(31, 32)?] {
        let code = graph6::encode(&g);
        let back = graph6::decode(&code)?;
        let shown = if code.len() > 24 { format!("{}… ({} bytes)", &code[..16], code.len()) } else { code.clone() };
        println!("n={:<2} edges={:<4} {shown:<28} round-trip={}", g.n(), g.edge_count(), back == g);
    }
    for bad in ["", "C~~", "C", "Bx", "~~??????"] {
        match graph6::decode(bad) {
            Ok(g) => println!("{bad:?}: unexpectedly decoded n={}", g.n()),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}
