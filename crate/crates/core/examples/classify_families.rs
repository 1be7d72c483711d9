//! Classify a few named families for k = 1, 2, 3.
//!
//!     cargo run --example classify_families

use gndb::classify;
use gndb::families::FamilySpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = ["complete:4", "cycle:5", "cycle:6", "path:3", "star:3", "bipartite:2,4", "bipartite:2,6", "bipartite:3,9"];
    println!("{:<14} {:>3} {:>5} {:>7} {:>9}", "family", "n", "DB", "NDB γ", "k-GNDB");
    for spec in specs {
        let g = spec.parse::<FamilySpec>()?.build()?;
        let class = classify(&g, &[1, 2, 3])?;
        let gndb: Vec<String> = (1..=3)
            .filter_map(|k| class.gamma(k).map(|gamma| format!("{k}:γ={gamma}")))
            .collect();
        println!(
            "{:<14} {:>3} {:>5} {:>7} {:>9}",
            spec,
            g.n(),
            class.is_db,
            class.ndb_gamma.map_or("-".into(), |x| x.to_string()),
            if gndb.is_empty() { "-".into() } else { gndb.join(" ") }
        );
    }
    Ok(())
}
