//! graph6 encoding.
//!
//! A graph6 string is the size field `N(n)` followed by the upper triangle
//! of the adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),...`,
//! packed six bits per byte (most significant first), each byte offset by
//! 63 and the final group zero-padded on the right.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("vertex count {0} is not supported (need 1..=64)")]
    UnsupportedOrder(usize),
    #[error("8-byte size field (n >= 258048) is not supported")]
    ExtendedSize,
    #[error("size field is not in its shortest form")]
    NonMinimalSize,
    #[error("truncated: expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} adjacency bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
}

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + bit_count(n).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let body = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    let (n, data) = if body[0] < 126 {
        ((body[0] - 63) as usize, &body[1..])
    } else {
        if body.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 3, found: body.len() - 1 });
        }
        if body[1] == 126 {
            return Err(Graph6Error::ExtendedSize);
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::NonMinimalSize);
        }
        (n, &body[4..])
    };
    if n == 0 || n > 64 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let bits = bit_count(n);
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: data.len() });
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = data[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut g = Graph::new(n).map_err(|_| Graph6Error::UnsupportedOrder(n))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}
