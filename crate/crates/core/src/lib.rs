//! Realizations of graph degree sequences and the polytope of their
//! fractional realizations.
//!
//! For a degree sequence `d = (d_1, ..., d_n)` the polytope `P(d)` lives in
//! one coordinate per unordered vertex pair and is cut out by the per-vertex
//! degree equalities together with the unit-hypercube bounds. Its integral
//! points are exactly the labeled realizations of `d`. This crate
//!
//! * tests graphicality and builds realizations ([`graphic`], [`realizations`]),
//! * enumerates and certifies the vertices of `P(d)` ([`polytope`]),
//! * finds blossom configurations ([`blossom`]),
//! * recognizes split, threshold and pseudo-split structure ([`structure`]),
//! * and decides whether every vertex of `P(d)` is integral, by four
//!   independent methods ([`decisive`]).
//!
//! Vertices are 0-based inside the library. The text formats in [`formats`]
//! use 1-based vertex ids.

pub mod blossom;
pub mod decisive;
mod error;
pub mod formats;
pub mod graph;
pub mod graphic;
pub mod labeling;
pub mod named;
pub mod polytope;
pub mod rank;
pub mod realizations;
pub mod sequence;
pub mod structure;

pub use error::{Error, Result};
pub use graph::LabeledGraph;
pub use labeling::{EdgeIndex, FractionalLabeling, Rational};
pub use sequence::DegreeSequence;

/// Size bounds for the exhaustive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest sequence length or vertex count an exhaustive operation accepts.
    pub max_n: usize,
}

impl Limits {
    pub const DEFAULT_MAX_N: usize = 8;

    pub fn new(max_n: usize) -> Self {
        Limits { max_n }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: Self::DEFAULT_MAX_N,
        }
    }
}
