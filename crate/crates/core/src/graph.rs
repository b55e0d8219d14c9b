//! Simple graphs on a labeled vertex set `{0, ..., n-1}`.

use std::fmt;

use crate::sequence::DegreeSequence;
use crate::{Error, Result};

/// Largest vertex count a [`LabeledGraph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`, stored as one neighbor
/// bitmask per vertex.
///
/// Equality is labeled equality: two graphs are equal iff they have the same
/// vertex count and the same edge set. Isomorphism is a separate question,
/// see [`crate::realizations::canonical_form`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl LabeledGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Domain(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(LabeledGraph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Domain(format!("repeated edge ({u}, {v})")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitmasks, validating symmetry and the
    /// absence of loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Domain(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let range = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for (v, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::Domain(format!("vertex {v} has a neighbor outside 0..{n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::Domain(format!("self-loop at vertex {v}")));
            }
            for u in mask_vertices(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::Domain(format!("adjacency not symmetric at ({u}, {v})")));
                }
            }
        }
        Ok(LabeledGraph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        if present {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        } else {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_vertices(self.adj[v])
    }

    /// Degree of `v`; errors if `v` is not a vertex.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::Domain(format!("vertex {v} outside 0..{}", self.n)));
        }
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degrees in vertex order (not sorted).
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// The degree sequence, sorted weakly decreasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence::new(d).expect("degrees of a simple graph form a valid sequence")
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = if u + 1 >= 64 { 0 } else { !((bit(u + 1)) - 1) };
            mask_vertices(self.adj[u] & above).map(move |v| (u, v))
        })
    }

    /// The subgraph induced by `w`, relabeled so that `w[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Self> {
        let mut seen = 0u64;
        for &v in w {
            if v >= self.n {
                return Err(Error::Domain(format!("vertex {v} outside 0..{}", self.n)));
            }
            if seen & bit(v) != 0 {
                return Err(Error::Domain(format!("vertex {v} listed twice")));
            }
            seen |= bit(v);
        }
        let mut h = Self::empty(w.len())?;
        for (i, &a) in w.iter().enumerate() {
            for (j, &b) in w.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    h.set_edge(i, j, true);
                }
            }
        }
        Ok(h)
    }

    /// Induced subgraph on the vertices of a bitmask, in increasing order.
    pub fn induced_by_mask(&self, mask: u64) -> Self {
        let w: Vec<usize> = mask_vertices(mask).collect();
        self.induced_subgraph(&w).expect("mask vertices are in range")
    }

    pub fn complement(&self) -> Self {
        let range = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & range & !bit(v))
            .collect();
        LabeledGraph { n: self.n, adj }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Domain("relabeling is not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut h = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            h.set_edge(perm[u], perm[v], true);
        }
        Ok(h)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + self.n, v + self.n)));
        Self::from_edges(n, edges)
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v, true);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}
