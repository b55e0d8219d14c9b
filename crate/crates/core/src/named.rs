//! Small named graphs. All constructors panic if the result would exceed
//! [`crate::graph::MAX_VERTICES`] vertices.

use crate::graph::LabeledGraph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> LabeledGraph {
    LabeledGraph::from_edges(n, edges).expect("named graph construction")
}

pub fn edgeless(n: usize) -> LabeledGraph {
    LabeledGraph::empty(n).expect("named graph construction")
}

pub fn complete(n: usize) -> LabeledGraph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> LabeledGraph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> LabeledGraph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The star `K_{1,m}` with center `0`.
pub fn star(m: usize) -> LabeledGraph {
    build(m + 1, (1..=m).map(|v| (0, v)))
}

/// `2K_2`: edges `0-1` and `2-3`.
pub fn two_k2() -> LabeledGraph {
    build(4, [(0, 1), (2, 3)])
}

/// The house, i.e. the complement of `P_5`.
pub fn house() -> LabeledGraph {
    path(5).complement()
}

/// `U`, the unique graph with degree sequence `(4,2,2,2,2,2)`: a triangle and
/// a four-cycle sharing vertex `0`.
pub fn u_graph() -> LabeledGraph {
    build(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)])
}

/// The complement of [`u_graph`], degree sequence `(3,3,3,3,3,1)`.
pub fn u_bar() -> LabeledGraph {
    u_graph().complement()
}

/// `K_2 + K_{1,m}`.
pub fn k2_plus_star(m: usize) -> LabeledGraph {
    complete(2)
        .disjoint_union(&star(m))
        .expect("named graph construction")
}

/// `(K_m + K_1) join 2K_1`, the complement of `K_2 + K_{1,m}`.
pub fn clique_join_form(m: usize) -> LabeledGraph {
    complete(m)
        .disjoint_union(&edgeless(1))
        .and_then(|g| g.join(&edgeless(2)))
        .expect("named graph construction")
}
