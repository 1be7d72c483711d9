//! Text formats: graph6, adjacency lists, and report documents.

pub mod adjlist;
pub mod graph6;
pub mod report;

use crate::graph::Graph;

/// Reads newline-separated graph6 strings. Blank lines and a leading
/// `>>graph6<<` header are accepted; line numbers are 1-based in errors.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, graph6::Graph6Error)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r').trim()))
        .filter(|(_, line)| !line.is_empty() && *line != graph6::HEADER)
        .map(|(no, line)| graph6::decode(line).map_err(|e| (no, e)))
        .collect()
}

pub fn write_graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&graph6::encode(g));
        out.push('\n');
    }
    out
}
