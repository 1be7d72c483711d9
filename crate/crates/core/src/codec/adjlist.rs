//! Line-oriented adjacency lists: `v: u1 u2 ...`.
//!
//! Blank lines and `#` comments are ignored, edges are symmetrized and
//! repeated mentions collapse. Without an explicit order, `n` is one more
//! than the largest vertex id mentioned.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjListError {
    #[error("line {line}: expected `vertex: neighbors`")]
    MissingColon { line: usize },
    #[error("line {line}: `{token}` is not a vertex id")]
    NonInteger { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("no vertices")]
    Empty,
    #[error("vertex count {0} outside 1..=64")]
    Order(usize),
}

pub fn parse(text: &str, n: Option<usize>) -> Result<Graph, AdjListError> {
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, tail) = content
            .split_once(':')
            .ok_or(AdjListError::MissingColon { line })?;
        let id = |token: &str| -> Result<usize, AdjListError> {
            let v = token.parse::<usize>().map_err(|_| AdjListError::NonInteger {
                line,
                token: token.to_string(),
            })?;
            if let Some(n) = n {
                if v >= n {
                    return Err(AdjListError::VertexOutOfRange { line, vertex: v, n });
                }
            }
            Ok(v)
        };
        let v = id(head.trim())?;
        max_id = max_id.max(Some(v));
        for token in tail.split_whitespace() {
            let u = id(token)?;
            if u == v {
                return Err(AdjListError::SelfLoop { line, vertex: v });
            }
            max_id = max_id.max(Some(u));
            edges.push((v, u));
        }
    }
    let n = match n {
        Some(n) => n,
        None => max_id.map(|m| m + 1).ok_or(AdjListError::Empty)?,
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(AdjListError::Order(n));
    }
    Ok(Graph::from_edges(n, edges).expect("ids validated above"))
}

/// One line per vertex, including isolated ones, so `parse(emit(g), None)`
/// recovers `g` exactly.
pub fn emit(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        out.push_str(&v.to_string());
        out.push(':');
        for u in g.neighbors(v).expect("in range") {
            out.push(' ');
            out.push_str(&u.to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_with_order() {
        let g = parse("0: 1\n1: 2", Some(3)).unwrap();
        assert_eq!(g, families::path(3).unwrap());
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse("0: 1 1\n1: 0", None).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn comments_and_blanks() {
        let g = parse("# a triangle\n\n0: 1 2  # spoke\n1: 2\n", None).unwrap();
        assert_eq!(g, families::complete(3).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(parse("0: 0", None), Err(AdjListError::SelfLoop { line: 1, vertex: 0 }));
        assert_eq!(
            parse("0: x", None),
            Err(AdjListError::NonInteger { line: 1, token: "x".into() })
        );
        assert_eq!(
            parse("0: 3", Some(3)),
            Err(AdjListError::VertexOutOfRange { line: 1, vertex: 3, n: 3 })
        );
        assert_eq!(parse("0 1", None), Err(AdjListError::MissingColon { line: 1 }));
        assert_eq!(parse("# nothing\n", None), Err(AdjListError::Empty));
        assert_eq!(parse("0: 64", None), Err(AdjListError::Order(65)));
    }

    #[test]
    fn emit_keeps_isolated_vertices() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let text = emit(&g);
        assert_eq!(text, "0: 1\n1: 0\n2:\n3:\n");
        assert_eq!(parse(&text, None).unwrap(), g);
    }
}
