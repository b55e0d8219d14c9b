//! 2-switches, exhaustive enumeration of labeled realizations, and
//! isomorphism classes via a brute-force canonical form.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::check_bound;
use crate::graph::{bit, LabeledGraph};
use crate::graphic::{havel_hakimi, is_graphic};
use crate::sequence::DegreeSequence;
use crate::{Error, Limits, Result};

/// An alternating 4-cycle `a, b, c, d`: `ab` and `cd` are edges, `bc` and
/// `da` are non-edges. Applying it deletes `ab`, `cd` and adds `bc`, `da`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoSwitch {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoSwitch {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        TwoSwitch { a, b, c, d }
    }

    /// The switch that undoes this one.
    pub fn reversed(&self) -> Self {
        TwoSwitch::new(self.b, self.c, self.d, self.a)
    }

    fn distinct(&self) -> bool {
        let m = bit(self.a) | bit(self.b) | bit(self.c) | bit(self.d);
        m.count_ones() == 4
    }

    /// Whether the alternating pattern holds in `g`.
    pub fn applies_to(&self, g: &LabeledGraph) -> bool {
        let n = g.order();
        let TwoSwitch { a, b, c, d } = *self;
        a < n
            && b < n
            && c < n
            && d < n
            && self.distinct()
            && g.has_edge(a, b)
            && g.has_edge(c, d)
            && !g.has_edge(b, c)
            && !g.has_edge(d, a)
    }

    /// Lexicographically least of the four tuples describing the same switch.
    fn canonical(&self) -> Self {
        let TwoSwitch { a, b, c, d } = *self;
        [
            TwoSwitch::new(a, b, c, d),
            TwoSwitch::new(c, d, a, b),
            TwoSwitch::new(b, a, d, c),
            TwoSwitch::new(d, c, b, a),
        ]
        .into_iter()
        .min()
        .expect("nonempty")
    }
}

pub fn apply_two_switch(g: &LabeledGraph, s: &TwoSwitch) -> Result<LabeledGraph> {
    if !s.applies_to(g) {
        return Err(Error::Precondition(format!(
            "{s:?} is not an alternating 4-cycle of the graph"
        )));
    }
    let mut h = g.clone();
    h.set_edge(s.a, s.b, false);
    h.set_edge(s.c, s.d, false);
    h.set_edge(s.b, s.c, true);
    h.set_edge(s.d, s.a, true);
    Ok(h)
}

/// Every 2-switch available in `g`, one representative per switch.
pub fn find_alternating_4cycles(g: &LabeledGraph) -> Vec<TwoSwitch> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = BTreeSet::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(p, q) in &edges[x + 1..] {
            for (c, d) in [(p, q), (q, p)] {
                let s = TwoSwitch::new(a, b, c, d);
                if s.applies_to(g) {
                    out.insert(s.canonical());
                }
                let s = TwoSwitch::new(b, a, c, d);
                if s.applies_to(g) {
                    out.insert(s.canonical());
                }
            }
        }
    }
    out.into_iter().collect()
}

fn check_enumerable(d: &DegreeSequence, limits: &Limits) -> Result<()> {
    if !is_graphic(d) {
        return Err(Error::Domain(format!("({d}) is not graphic")));
    }
    check_bound(d.len(), limits.max_n)
}

/// Breadth-first search over 2-switches from the Havel–Hakimi realization.
/// Maps every reached realization to its 2-switch distance from the seed.
pub fn two_switch_distances(
    d: &DegreeSequence,
    limits: &Limits,
) -> Result<BTreeMap<LabeledGraph, usize>> {
    check_enumerable(d, limits)?;
    let seed = havel_hakimi(d)?;
    let mut visited = BTreeMap::new();
    visited.insert(seed.clone(), 0);
    let mut frontier = vec![seed];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next: Vec<LabeledGraph> = frontier
            .par_iter()
            .flat_map_iter(|g| {
                find_alternating_4cycles(g)
                    .into_iter()
                    .map(move |s| apply_two_switch(g, &s).expect("switch found in g"))
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        next.retain(|h| !visited.contains_key(h));
        for h in &next {
            visited.insert(h.clone(), depth);
        }
        frontier = next;
    }
    Ok(visited)
}

/// All labeled realizations of `d` (vertex `i` has degree `d_{i+1}`), sorted.
pub fn enumerate_labeled_realizations(
    d: &DegreeSequence,
    limits: &Limits,
) -> Result<Vec<LabeledGraph>> {
    Ok(two_switch_distances(d, limits)?.into_keys().collect())
}

/// Largest vertex count [`canonical_form`] accepts.
pub const CANONICAL_MAX_N: usize = 16;

/// An isomorphism-invariant key: the least adjacency encoding over all
/// degree-ordered relabelings.
///
/// The encoding lists the pairs in colexicographic order
/// `(0,1), (0,2), (1,2), (0,3), ...` and reads them as a binary number with
/// the first pair most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: u128,
}

#[inline]
fn colex_position(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> LabeledGraph {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut g = LabeledGraph::empty(self.n).expect("bounded by CANONICAL_MAX_N");
        for j in 1..self.n {
            for i in 0..j {
                if self.code >> (total - 1 - colex_position(i, j)) & 1 == 1 {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }
}

struct CanonSearch<'a> {
    g: &'a LabeledGraph,
    /// Required original degree for each new label.
    slot_degree: Vec<usize>,
    degrees: Vec<usize>,
    total: usize,
    best: Option<u128>,
    assigned: Vec<usize>,
    used: u64,
}

impl CanonSearch<'_> {
    /// `code` holds the bits of pairs among labels `0..assigned.len()`.
    fn extend(&mut self, code: u128) {
        let j = self.assigned.len();
        if j == self.g.order() {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        // bits fixed once label j is placed
        let shift = self.total - colex_position(0, j + 1);
        for v in 0..self.g.order() {
            if self.used & bit(v) != 0 || self.degrees[v] != self.slot_degree[j] {
                continue;
            }
            let mut c = code;
            for (i, &u) in self.assigned.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    c |= 1u128 << (self.total - 1 - colex_position(i, j));
                }
            }
            if self.best.is_some_and(|b| c >> shift > b >> shift) {
                continue;
            }
            self.assigned.push(v);
            self.used |= bit(v);
            self.extend(c);
            self.assigned.pop();
            self.used &= !bit(v);
        }
    }
}

/// Canonical form of `g` for `g.order() <= CANONICAL_MAX_N`.
///
/// New labels are handed out in order of weakly decreasing degree, and the
/// encoding is minimized over every such assignment by branch and bound.
pub fn canonical_form(g: &LabeledGraph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANONICAL_MAX_N {
        return Err(Error::ResourceLimit {
            n,
            max_n: CANONICAL_MAX_N,
        });
    }
    let degrees = g.degrees();
    let mut slot_degree = degrees.clone();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let total = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        g,
        slot_degree,
        degrees,
        total,
        best: None,
        assigned: Vec::with_capacity(n),
        used: 0,
    };
    search.extend(0);
    Ok(CanonicalForm {
        n,
        code: search.best.unwrap_or(0),
    })
}

pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    if g.order() != h.order() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// One canonical form per isomorphism class of realizations of `d`.
pub fn enumerate_isomorphism_classes(
    d: &DegreeSequence,
    limits: &Limits,
) -> Result<BTreeSet<CanonicalForm>> {
    let labeled = enumerate_labeled_realizations(d, limits)?;
    labeled.par_iter().map(canonical_form).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn seq(t: &[usize]) -> DegreeSequence {
        DegreeSequence::new(t.to_vec()).unwrap()
    }

    #[test]
    fn two_switch_on_2k2() {
        let g = named::two_k2();
        let s = TwoSwitch::new(0, 1, 2, 3);
        let h = apply_two_switch(&g, &s).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        assert_eq!(h.degree_sequence(), g.degree_sequence());
        assert_eq!(apply_two_switch(&h, &s.reversed()).unwrap(), g);
    }

    #[test]
    fn two_switch_rejects_wrong_pattern() {
        let g = named::two_k2();
        assert!(matches!(
            apply_two_switch(&g, &TwoSwitch::new(0, 2, 1, 3)),
            Err(Error::Precondition(_))
        ));
        assert!(apply_two_switch(&g, &TwoSwitch::new(0, 1, 1, 0)).is_err());
        assert!(apply_two_switch(&g, &TwoSwitch::new(0, 1, 2, 9)).is_err());
    }

    /// Exhaustive scan over ordered 4-tuples, grouped by the edge change.
    fn brute_force_switches(g: &LabeledGraph) -> BTreeSet<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
        let n = g.order();
        let norm = |x: usize, y: usize| (x.min(y), x.max(y));
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let s = TwoSwitch::new(a, b, c, d);
                        if s.applies_to(g) {
                            let mut del = vec![norm(a, b), norm(c, d)];
                            let mut add = vec![norm(b, c), norm(d, a)];
                            del.sort();
                            add.sort();
                            out.insert((del, add));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn alternating_cycles_match_exhaustive_scan() {
        let graphs = [
            named::complete(4),
            named::two_k2(),
            named::cycle(6),
            named::u_graph(),
            named::path(5),
            named::cycle(5),
        ];
        for g in &graphs {
            let found = find_alternating_4cycles(g);
            assert_eq!(found.len(), brute_force_switches(g).len(), "{g:?}");
            assert!(found.iter().all(|s| s.applies_to(g)));
        }
        assert!(find_alternating_4cycles(&named::complete(4)).is_empty());
        assert_eq!(find_alternating_4cycles(&named::two_k2()).len(), 2);
        assert!(!find_alternating_4cycles(&named::cycle(6)).is_empty());
    }

    #[test]
    fn realization_counts() {
        let l = Limits::default();
        assert_eq!(enumerate_labeled_realizations(&seq(&[1; 6]), &l).unwrap().len(), 15);
        assert_eq!(enumerate_labeled_realizations(&seq(&[2, 2, 2]), &l).unwrap().len(), 1);
        assert_eq!(
            enumerate_labeled_realizations(&seq(&[4, 3, 2, 2, 1]), &l).unwrap().len(),
            1
        );
    }

    #[test]
    fn enumeration_errors() {
        let l = Limits::default();
        assert!(matches!(
            enumerate_labeled_realizations(&seq(&[3, 3, 1, 1]), &l),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            enumerate_labeled_realizations(&seq(&[0; 9]), &l),
            Err(Error::ResourceLimit { n: 9, max_n: 8 })
        ));
        assert!(enumerate_labeled_realizations(&seq(&[0; 9]), &Limits::new(9)).is_ok());
    }

    #[test]
    fn isomorphism_class_counts() {
        let l = Limits::default();
        let classes = enumerate_isomorphism_classes(&seq(&[2; 6]), &l).unwrap();
        assert_eq!(classes.len(), 2);
        let c6 = canonical_form(&named::cycle(6)).unwrap();
        let two_k3 = canonical_form(&named::complete(3).disjoint_union(&named::complete(3)).unwrap()).unwrap();
        assert!(classes.contains(&c6) && classes.contains(&two_k3));

        let classes = enumerate_isomorphism_classes(&seq(&[4, 2, 2, 2, 2, 2]), &l).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes.contains(&canonical_form(&named::u_graph()).unwrap()));

        assert_eq!(enumerate_isomorphism_classes(&seq(&[1, 1]), &l).unwrap().len(), 1);
    }

    #[test]
    fn canonical_form_decodes_to_isomorphic_graph() {
        let g = named::u_graph();
        let f = canonical_form(&g).unwrap();
        let h = f.to_graph();
        assert_eq!(h.degree_sequence(), g.degree_sequence());
        assert_eq!(canonical_form(&h).unwrap(), f);
    }

    #[test]
    fn canonical_form_separates_non_isomorphic() {
        // same degree sequence (2,2,2,2,2,2), different graphs
        let a = named::cycle(6);
        let b = named::complete(3).disjoint_union(&named::complete(3)).unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(are_isomorphic(&named::house(), &named::path(5).complement()).unwrap());
        assert!(canonical_form(&named::edgeless(17)).is_err());
    }
}
