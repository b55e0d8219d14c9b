//! Split, threshold and pseudo-split recognition, the clique/independent-set
//! decomposition with an indecomposable core, and the special cores.
//!
//! A partition `V1, V2, V3` of the vertices is a *decomposition* when `V1` is
//! independent, `V2` is a clique, and every vertex of `V3` is adjacent to all
//! of `V2` and to none of `V1`. A graph is *decomposable* when it has a
//! decomposition with `V1 ∪ V2` and `V3` both nonempty.

use serde::Serialize;

use crate::graph::{bit, mask_vertices, LabeledGraph};
use crate::graphic::m_star;
use crate::realizations::{are_isomorphic, CANONICAL_MAX_N};
use crate::{named, Error, Result};

/// Hammer–Simeone test: with `m = max{i : d_i >= i - 1}` on the sorted
/// degrees, `g` is split iff `d_1 + ... + d_m = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &LabeledGraph) -> bool {
    let d = g.degree_sequence();
    let m = m_star(&d);
    let t = d.terms();
    t[..m].iter().sum::<usize>() == m * m.saturating_sub(1) + t[m..].iter().sum::<usize>()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `Some`.
fn first_subset<T>(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    fn rec<T>(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Option<T>) -> Option<T> {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..=n - (k - cur.len()) {
            cur.push(v);
            if let Some(t) = rec(n, k, v + 1, cur, f) {
                return Some(t);
            }
            cur.pop();
        }
        None
    }
    if k > n {
        return None;
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut f)
}

fn induced_degrees(g: &LabeledGraph, s: &[usize]) -> Vec<u32> {
    let mask = s.iter().fold(0u64, |m, &v| m | bit(v));
    s.iter().map(|&v| (g.neighbor_mask(v) & mask).count_ones()).collect()
}

/// Walks a 2-regular or path-shaped induced subgraph on `s` starting at
/// `start`.
fn walk(g: &LabeledGraph, s: &[usize], start: usize) -> Vec<usize> {
    let mask = s.iter().fold(0u64, |m, &v| m | bit(v));
    let mut out = vec![start];
    let mut seen = bit(start);
    let mut cur = start;
    while let Some(next) = mask_vertices(g.neighbor_mask(cur) & mask & !seen).next() {
        out.push(next);
        seen |= bit(next);
        cur = next;
    }
    out
}

/// An induced `2K2`, as `[a, b, c, d]` with edges `ab` and `cd`.
pub fn find_induced_2k2(g: &LabeledGraph) -> Option<Vec<usize>> {
    first_subset(g.order(), 4, |s| {
        if induced_degrees(g, s) != [1, 1, 1, 1] {
            return None;
        }
        let a = s[0];
        let b = *s.iter().find(|&&v| g.has_edge(a, v))?;
        let mut rest = s.iter().copied().filter(|&v| v != a && v != b);
        let (c, d) = (rest.next()?, rest.next()?);
        Some(vec![a, b, c, d])
    })
}

/// An induced `C4`, in cyclic order.
pub fn find_induced_c4(g: &LabeledGraph) -> Option<Vec<usize>> {
    first_subset(g.order(), 4, |s| {
        (induced_degrees(g, s) == [2, 2, 2, 2]).then(|| walk(g, s, s[0]))
    })
}

/// An induced `P4`, in path order.
pub fn find_induced_p4(g: &LabeledGraph) -> Option<Vec<usize>> {
    first_subset(g.order(), 4, |s| {
        let deg = induced_degrees(g, s);
        let mut sorted = deg.clone();
        sorted.sort_unstable();
        if sorted != [1, 1, 2, 2] {
            return None;
        }
        let end = s[deg.iter().position(|&x| x == 1)?];
        Some(walk(g, s, end))
    })
}

/// An induced `C5`, in cyclic order.
pub fn find_induced_c5(g: &LabeledGraph) -> Option<Vec<usize>> {
    first_subset(g.order(), 5, |s| {
        (induced_degrees(g, s) == [2; 5]).then(|| walk(g, s, s[0]))
    })
}

/// No induced `2K2`, `C4` or `P4`.
pub fn is_threshold(g: &LabeledGraph) -> bool {
    find_induced_2k2(g).is_none() && find_induced_c4(g).is_none() && find_induced_p4(g).is_none()
}

/// No induced `2K2` or `C4`.
pub fn is_pseudo_split(g: &LabeledGraph) -> bool {
    find_induced_2k2(g).is_none() && find_induced_c4(g).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Independent set.
    pub v1: Vec<usize>,
    /// Clique.
    pub v2: Vec<usize>,
    /// Core.
    pub v3: Vec<usize>,
    /// Whether the partition passed the adjacency checks.
    pub certified: bool,
}

impl Decomposition {
    /// Checks the adjacency requirements of a decomposition against `g`.
    pub fn is_valid_for(&self, g: &LabeledGraph) -> bool {
        let mask = |s: &[usize]| s.iter().fold(0u64, |m, &v| m | bit(v));
        let (m1, m2, m3) = (mask(&self.v1), mask(&self.v2), mask(&self.v3));
        let n = g.order();
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        let sizes = self.v1.len() + self.v2.len() + self.v3.len();
        sizes == n
            && m1 | m2 | m3 == all
            && self.v1.iter().all(|&v| g.neighbor_mask(v) & (m1 | m3) == 0)
            && self.v2.iter().all(|&v| (g.neighbor_mask(v) | bit(v)) & (m2 | m3) == m2 | m3)
    }
}

/// Vertices ordered by degree (descending), ties by ascending id.
fn by_degree(g: &LabeledGraph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    order
}

/// Sizes `(p, q)` of a decomposition of `g` whose clique is the `p` vertices
/// of largest degree and whose independent set is the `q` vertices of
/// smallest degree, maximizing `p + q` and then `p`; absent when `g` is
/// indecomposable.
///
/// For disjoint `A`, `B` with `|A| = p`, `|B| = q`, always
/// `sum_A d <= p(n - q - 1) + sum_B d`, with equality exactly when `A`, `B`
/// are the clique and independent set of a decomposition. The top-`p` and
/// bottom-`q` degree sets make the left side largest and the right smallest.
fn decomposition_sizes(g: &LabeledGraph) -> Option<(usize, usize)> {
    let n = g.order();
    let deg = g.degrees();
    let order = by_degree(g);
    let mut prefix = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        prefix[i + 1] = prefix[i] + deg[v];
    }
    let mut best = None;
    for total in (1..n).rev() {
        for p in (0..=total).rev() {
            let q = total - p;
            let top = prefix[p];
            let bottom = prefix[n] - prefix[n - q];
            if top == p * (n - q - 1) + bottom {
                best = Some((p, q));
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    best
}

/// Whether `g` has no decomposition with `V1 ∪ V2` and `V3` both nonempty.
pub fn is_indecomposable(g: &LabeledGraph) -> bool {
    decomposition_sizes(g).is_none()
}

/// The decomposition with an indecomposable core, built by repeatedly
/// splitting off the top-degree clique and bottom-degree independent set of
/// the current core. The result is checked before it is returned.
pub fn decompose(g: &LabeledGraph) -> Result<Decomposition> {
    if g.order() == 0 {
        return Err(Error::Domain("decompose needs at least one vertex".into()));
    }
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    let mut core: Vec<usize> = (0..g.order()).collect();
    loop {
        let h = g.induced_subgraph(&core)?;
        let Some((p, q)) = decomposition_sizes(&h) else {
            break;
        };
        let order = by_degree(&h);
        v2.extend(order[..p].iter().map(|&i| core[i]));
        v1.extend(order[order.len() - q..].iter().map(|&i| core[i]));
        let keep = &order[p..order.len() - q];
        let mut next: Vec<usize> = keep.iter().map(|&i| core[i]).collect();
        next.sort_unstable();
        core = next;
    }
    v1.sort_unstable();
    v2.sort_unstable();
    let mut d = Decomposition {
        v1,
        v2,
        v3: core,
        certified: false,
    };
    if !d.is_valid_for(g) || d.v3.is_empty() || !is_indecomposable(&g.induced_subgraph(&d.v3)?) {
        return Err(Error::InvariantViolation(format!("decomposition failed verification: {d:?}")));
    }
    d.certified = true;
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CoreTag {
    Split,
    Small,
    U,
    UBar,
    K2PlusStar,
    JoinForm,
    None,
}

/// Which allowed shape a core has; `m` is set for the two families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpecialCore {
    pub tag: CoreTag,
    pub m: Option<usize>,
}

impl SpecialCore {
    fn tagged(tag: CoreTag) -> Self {
        SpecialCore { tag, m: None }
    }

    pub fn is_allowed(&self) -> bool {
        self.tag != CoreTag::None
    }
}

/// Degree-sequence screen followed by an isomorphism test when the order is
/// small enough for canonical forms. Each candidate is the unique
/// realization of its degree sequence, so the screen alone is exact.
fn matches(g: &LabeledGraph, candidate: &LabeledGraph) -> Result<bool> {
    if g.degree_sequence() != candidate.degree_sequence() {
        return Ok(false);
    }
    if g.order() <= CANONICAL_MAX_N {
        return are_isomorphic(g, candidate);
    }
    Ok(true)
}

/// Classifies a graph against the allowed core shapes, testing in order:
/// fewer than six vertices, split, `U`, its complement, `K2 + K1,m`,
/// `(Km + K1) ∨ 2K1` (`m >= 3`).
pub fn classify_core(g: &LabeledGraph) -> Result<SpecialCore> {
    let n = g.order();
    if n < 6 {
        return Ok(SpecialCore::tagged(CoreTag::Small));
    }
    if is_split(g) {
        return Ok(SpecialCore::tagged(CoreTag::Split));
    }
    if n == 6 {
        if matches(g, &named::u_graph())? {
            return Ok(SpecialCore::tagged(CoreTag::U));
        }
        if matches(g, &named::u_bar())? {
            return Ok(SpecialCore::tagged(CoreTag::UBar));
        }
    }
    let m = n - 3;
    if matches(g, &named::k2_plus_star(m))? {
        return Ok(SpecialCore {
            tag: CoreTag::K2PlusStar,
            m: Some(m),
        });
    }
    if matches(g, &named::clique_join_form(m))? {
        return Ok(SpecialCore {
            tag: CoreTag::JoinForm,
            m: Some(m),
        });
    }
    Ok(SpecialCore::tagged(CoreTag::None))
}
