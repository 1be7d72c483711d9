//! Named graph families.
//!
//! Vertex numbering is fixed so golden graph6 strings stay stable:
//! `complete_bipartite(m, n)` puts the `m`-side on `0..m`; `cycle` and
//! `path` run `0-1-2-...`; `star(n)` is `complete_bipartite(1, n)` with
//! the center at 0.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::Result;
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameters out of range ({detail})")]
    OutOfRange { family: &'static str, detail: String },
    #[error("cannot parse family spec `{0}` (expected complete:N, bipartite:M,N, cycle:N, path:N or star:N)")]
    Syntax(String),
}

fn out_of_range(family: &'static str, detail: String) -> crate::error::Error {
    FamilyError::OutOfRange { family, detail }.into()
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(out_of_range("complete", format!("n={n}, need 1..=64")));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 || m + n > MAX_VERTICES {
        return Err(out_of_range("bipartite", format!("m={m}, n={n}, need m,n >= 1 and m+n <= 64")));
    }
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(out_of_range("cycle", format!("n={n}, need 3..=64")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(out_of_range("path", format!("n={n}, need 1..=64")));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Star with `n` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 || n >= MAX_VERTICES {
        return Err(out_of_range("star", format!("n={n}, need 1..=63")));
    }
    complete_bipartite(1, n)
}

/// Parsed CLI family spec such as `bipartite:2,6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Bipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Bipartite(m, n) => complete_bipartite(m, n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::Star(n) => star(n),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || FamilyError::Syntax(s.to_string());
        let (name, args) = s.trim().split_once(':').ok_or_else(syntax)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| syntax())?;
        match (name.trim(), nums.as_slice()) {
            ("complete", &[n]) => Ok(FamilySpec::Complete(n)),
            ("bipartite", &[m, n]) => Ok(FamilySpec::Bipartite(m, n)),
            ("cycle", &[n]) => Ok(FamilySpec::Cycle(n)),
            ("path", &[n]) => Ok(FamilySpec::Path(n)),
            ("star", &[n]) => Ok(FamilySpec::Star(n)),
            _ => Err(syntax()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Bipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
        }
    }
}
