//! Canonical forms are unchanged by relabeling; automorphism generators and
//! orbits come out of the same search.
//!
//!     cargo run --example canonical_form

use gndb::families::{complete_bipartite, cycle};
use gndb::graph::{are_isomorphic, canonical_form, canonical_labeling};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = complete_bipartite(2, 6)?;
    let shuffled = g.relabel(&[7, 3, 0, 5, 1, 6, 2, 4]);
    println!("K_{{2,6}} canonical: {}", String::from_utf8(canonical_form(&g))?);
    println!("relabeled canonical: {}", String::from_utf8(canonical_form(&shuffled))?);
    println!("isomorphic: {}", are_isomorphic(&g, &shuffled));

    let c6 = cycle(6)?;
    let canon = canonical_labeling(&c6);
    println!("C_6 automorphism generators: {}", canon.automorphisms().len());
    for perm in canon.automorphisms() {
        println!("  {perm:?}");
    }
    println!("C_6 orbits: {:?}", canon.orbits());
    println!("C_6 vs K_{{3,3}} minus a matching isomorphic: {}", {
        let mut h = complete_bipartite(3, 3)?;
        h = gndb::Graph::from_edges(6, h.edges().filter(|&(u, v)| v != u + 3))?;
        are_isomorphic(&c6, &h)
    });
    Ok(())
}
