//! Distance-balance classification of finite connected graphs.
//!
//! For an edge `ab` let `W_ab` be the vertices strictly closer to `a` than
//! to `b`. This crate classifies graphs as distance-balanced (DB), nicely
//! distance-balanced (NDB), generalized k-distance-balanced (k-GDB) and
//! generalized k-nicely distance-balanced (k-GNDB, with constant `gamma`),
//! and checks classification statements about these classes by scanning
//! every connected graph on up to nine vertices.
//!
//! ```
//! use gndb::{balance, families};
//!
//! let g = families::complete_bipartite(2, 6).unwrap();
//! let class = balance::classify(&g, &[3]).unwrap();
//! assert_eq!(class.gamma(3), Some(2));
//! ```
//!
//! Modules:
//! - [`graph`]: bitset graphs, distances, bipartiteness, canonical labeling
//! - [`balance`]: edge partitions, classification, statement predicates
//! - [`families`]: complete, complete bipartite, cycle, path, star
//! - [`enumerate`]: connected-graph generation, scans, verification runs
//! - [`codec`]: graph6, adjacency lists, report documents
//! - [`cli`]: the `gndb` command line

pub mod balance;
pub mod cli;
pub mod codec;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;

pub use balance::{classify, BalanceClass, EdgeBalance};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
