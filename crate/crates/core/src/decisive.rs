//! Decisive sequences: the forbidden catalog `B` and four independent
//! classifiers.
//!
//! A graphic sequence is decisive when every vertex of `P(d)` is integral.
//! The classifiers are
//!
//! * [`decisive_by_eg`]: arithmetic on the Erdős–Gallai inequalities, any `n`;
//! * [`decisive_by_structure`]: the core of one realization has an allowed shape;
//! * [`decisive_by_blossoms`]: no realization contains a `(3,3)`-blossom;
//! * [`decisive_by_b_free`]: realizations avoid every graph in `B`.
//!
//! `B` is the set of all six-vertex graphs whose degree sequence appears in
//! [`CATALOG_SEQUENCES`]. Since it contains every realization of each listed
//! sequence, induced membership reduces to a degree-list lookup.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::blossom::{find_integral_33_blossom, Blossom};
use crate::error::check_bound;
use crate::graph::LabeledGraph;
use crate::graphic::{eg_profile, havel_hakimi, is_graphic, EgProfile};
use crate::realizations::{enumerate_isomorphism_classes, enumerate_labeled_realizations, CanonicalForm};
use crate::sequence::DegreeSequence;
use crate::structure::{classify_core, decompose, Decomposition, SpecialCore};
use crate::{Error, Limits, Result};

/// The 24 degree sequences defining `B`.
pub const CATALOG_SEQUENCES: [[usize; 6]; 24] = [
    [1, 1, 1, 1, 1, 1],
    [3, 3, 2, 2, 1, 1],
    [4, 2, 2, 2, 1, 1],
    [4, 4, 3, 3, 2, 2],
    [2, 2, 1, 1, 1, 1],
    [3, 3, 2, 2, 2, 2],
    [4, 3, 2, 2, 2, 1],
    [4, 4, 3, 3, 3, 1],
    [2, 2, 2, 2, 1, 1],
    [3, 3, 3, 2, 2, 1],
    [4, 3, 3, 2, 2, 2],
    [4, 4, 3, 3, 3, 3],
    [2, 2, 2, 2, 2, 2],
    [3, 3, 3, 3, 1, 1],
    [4, 3, 3, 3, 2, 1],
    [4, 4, 4, 3, 3, 2],
    [3, 2, 2, 1, 1, 1],
    [3, 3, 3, 3, 2, 2],
    [4, 3, 3, 3, 3, 2],
    [4, 4, 4, 4, 3, 3],
    [3, 2, 2, 2, 2, 1],
    [3, 3, 3, 3, 3, 3],
    [4, 4, 2, 2, 2, 2],
    [4, 4, 4, 4, 4, 4],
];

/// Number of isomorphism classes in `B`.
pub const CATALOG_SIZE: usize = 70;

/// `B` with its defining sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenCatalog {
    pub sequences: Vec<DegreeSequence>,
    /// Isomorphism classes of realizations, per sequence.
    pub graphs: BTreeMap<DegreeSequence, Vec<CanonicalForm>>,
}

impl ForbiddenCatalog {
    pub fn len(&self) -> usize {
        self.graphs.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every graph of the catalog, grouped by sequence in catalog order.
    pub fn all_graphs(&self) -> impl Iterator<Item = (&DegreeSequence, &CanonicalForm)> {
        self.sequences
            .iter()
            .flat_map(move |s| self.graphs[s].iter().map(move |g| (s, g)))
    }
}

fn catalog_sequences() -> Result<Vec<DegreeSequence>> {
    CATALOG_SEQUENCES
        .iter()
        .map(|t| {
            let d = DegreeSequence::new(t.to_vec())?;
            if !is_graphic(&d) || d.sum() > 30 {
                return Err(Error::InvariantViolation(format!("catalog entry ({d}) is not graphic")));
            }
            Ok(d)
        })
        .collect()
}

/// Enumerates the isomorphism classes of realizations of every catalog
/// sequence and checks that there are [`CATALOG_SIZE`] of them.
pub fn build_catalog() -> Result<ForbiddenCatalog> {
    let sequences = catalog_sequences()?;
    let limits = Limits::new(6);
    let graphs = sequences
        .par_iter()
        .map(|d| Ok((d.clone(), enumerate_isomorphism_classes(d, &limits)?.into_iter().collect())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let catalog = ForbiddenCatalog { sequences, graphs };
    if catalog.sequences.len() != CATALOG_SEQUENCES.len() || catalog.len() != CATALOG_SIZE {
        return Err(Error::InvariantViolation(format!(
            "catalog has {} graphs over {} sequences, expected {CATALOG_SIZE} over 24",
            catalog.len(),
            catalog.sequences.len()
        )));
    }
    Ok(catalog)
}

/// Whether a sorted six-term degree list is a catalog sequence.
fn in_catalog(sorted: &[usize]) -> bool {
    CATALOG_SEQUENCES.iter().any(|s| s[..] == *sorted)
}

/// The lexicographically first six vertices of `g` inducing a member of `B`.
pub fn find_b_member(g: &LabeledGraph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 6 {
        return None;
    }
    let mut s = [0usize; 6];
    fn rec(g: &LabeledGraph, s: &mut [usize; 6], depth: usize, start: usize) -> bool {
        if depth == 6 {
            let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut deg: Vec<usize> = s
                .iter()
                .map(|&v| (g.neighbor_mask(v) & mask).count_ones() as usize)
                .collect();
            deg.sort_unstable_by(|a, b| b.cmp(a));
            return in_catalog(&deg);
        }
        for v in start..=g.order() - (6 - depth) {
            s[depth] = v;
            if rec(g, s, depth + 1, v + 1) {
                return true;
            }
        }
        false
    }
    rec(g, &mut s, 0, 0).then(|| s.to_vec())
}

/// No six vertices of `g` induce a member of `B`.
pub fn is_b_free(g: &LabeledGraph) -> bool {
    find_b_member(g).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    EgNumeric,
    Structure,
    BlossomSearch,
    BFree,
}

/// Which branch of the Erdős–Gallai criterion decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EgCondition {
    /// `k = m`: the sequence is split.
    Split,
    /// The core has at most five vertices.
    SmallCore,
    /// The core's degree list is one of the four special forms.
    SpecialTail,
    /// None of the above.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Eg {
        condition: EgCondition,
        k: usize,
        m: usize,
        /// `max{i > k : d_i >= k}`.
        ell: Option<usize>,
        /// `max{i > k : d_i > k}`, the index the criterion uses.
        core_end: Option<usize>,
        /// `(d_{k+1} - k, ..., d_core_end - k)`.
        tail: Vec<usize>,
    },
    Structure {
        realization: LabeledGraph,
        decomposition: Decomposition,
        core: SpecialCore,
    },
    Blossom {
        realization: LabeledGraph,
        blossom: Blossom,
    },
    BMember {
        realization: LabeledGraph,
        /// Six vertices inducing a member of `B`.
        vertices: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisiveVerdict {
    pub sequence: DegreeSequence,
    pub decisive: bool,
    pub method: Method,
    /// Always present on negative verdicts, and on every verdict from
    /// [`decisive_by_eg`] and [`decisive_by_structure`].
    pub witness: Option<Witness>,
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    if is_graphic(d) {
        Ok(())
    } else {
        Err(Error::Domain(format!("({d}) is not graphic")))
    }
}

/// Which of the special core degree lists `tail` is, if any.
pub fn special_tail(tail: &[usize]) -> bool {
    if tail == [3, 3, 3, 3, 3, 1] || tail == [4, 2, 2, 2, 2, 2] {
        return true;
    }
    let len = tail.len();
    if len < 6 {
        return false;
    }
    let m = len - 3;
    let star = tail[0] == m && tail[1..].iter().all(|&t| t == 1);
    let join = tail[len - 1] == 2 && tail[..len - 1].iter().all(|&t| t == m + 1);
    star || join
}

/// Erdős–Gallai criterion. With `k` the largest index whose inequality is
/// tight and `m = max{i : d_i >= i - 1}`, `d` is decisive iff `k = m`, or
/// the core `d_{k+1}, ..., d_e` (with `e` the last index whose term exceeds
/// `k`) has at most five terms or shifted by `-k` is one of
/// `(3,3,3,3,3,1)`, `(4,2,2,2,2,2)`, `(m, 1^(m+2))`, `((m+1)^(m+2), 2)`.
pub fn decisive_by_eg(d: &DegreeSequence) -> Result<DecisiveVerdict> {
    let EgProfile {
        k_star: k,
        m_star: m,
        ell_star,
        core_end,
        ..
    } = eg_profile(d)?;
    let tail: Vec<usize> = core_end
        .map(|e| (k + 1..=e).map(|i| d.term(i) - k).collect())
        .unwrap_or_default();
    let condition = if k == m {
        EgCondition::Split
    } else if core_end.is_some_and(|e| e - k <= 5) {
        EgCondition::SmallCore
    } else if core_end.is_some() && special_tail(&tail) {
        EgCondition::SpecialTail
    } else {
        EgCondition::Failed
    };
    Ok(DecisiveVerdict {
        sequence: d.clone(),
        decisive: condition != EgCondition::Failed,
        method: Method::EgNumeric,
        witness: Some(Witness::Eg {
            condition,
            k,
            m,
            ell: ell_star,
            core_end,
            tail,
        }),
    })
}

/// Decomposes the Havel–Hakimi realization and checks the shape of its core.
pub fn decisive_by_structure(d: &DegreeSequence, limits: &Limits) -> Result<DecisiveVerdict> {
    check_bound(d.len(), limits.max_n)?;
    require_graphic(d)?;
    let realization = havel_hakimi(d)?;
    if realization.order() == 0 {
        return Ok(DecisiveVerdict {
            sequence: d.clone(),
            decisive: true,
            method: Method::Structure,
            witness: None,
        });
    }
    let decomposition = decompose(&realization)?;
    let core = classify_core(&realization.induced_subgraph(&decomposition.v3)?)?;
    Ok(DecisiveVerdict {
        sequence: d.clone(),
        decisive: core.is_allowed(),
        method: Method::Structure,
        witness: Some(Witness::Structure {
            realization,
            decomposition,
            core,
        }),
    })
}

/// Searches every labeled realization for a `(3,3)`-blossom. The witness is
/// the first realization (in sorted order) that has one.
pub fn decisive_by_blossoms(d: &DegreeSequence, limits: &Limits) -> Result<DecisiveVerdict> {
    check_bound(d.len(), limits.max_n)?;
    require_graphic(d)?;
    let all = enumerate_labeled_realizations(d, limits)?;
    let hit = all
        .par_iter()
        .find_map_first(|g| find_integral_33_blossom(g).map(|b| (g.clone(), b)));
    Ok(DecisiveVerdict {
        sequence: d.clone(),
        decisive: hit.is_none(),
        method: Method::BlossomSearch,
        witness: hit.map(|(realization, blossom)| Witness::Blossom { realization, blossom }),
    })
}

/// Checks the Havel–Hakimi realization for an induced member of `B`. With
/// `exhaustive`, every labeled realization is checked as well and the two
/// answers must agree.
pub fn decisive_by_b_free(d: &DegreeSequence, limits: &Limits, exhaustive: bool) -> Result<DecisiveVerdict> {
    check_bound(d.len(), limits.max_n)?;
    require_graphic(d)?;
    let realization = havel_hakimi(d)?;
    let member = find_b_member(&realization);
    if exhaustive {
        let all_free = enumerate_labeled_realizations(d, limits)?
            .par_iter()
            .all(is_b_free);
        if all_free != member.is_none() {
            return Err(Error::InvariantViolation(format!(
                "B-freeness of ({d}) differs between one realization and all of them"
            )));
        }
    }
    Ok(DecisiveVerdict {
        sequence: d.clone(),
        decisive: member.is_none(),
        method: Method::BFree,
        witness: member.map(|vertices| Witness::BMember { realization, vertices }),
    })
}

/// Runs all four classifiers and fails if they disagree.
pub fn decisive_all(d: &DegreeSequence, limits: &Limits) -> Result<Vec<DecisiveVerdict>> {
    let verdicts = vec![
        decisive_by_eg(d)?,
        decisive_by_structure(d, limits)?,
        decisive_by_blossoms(d, limits)?,
        decisive_by_b_free(d, limits, true)?,
    ];
    if verdicts.iter().any(|v| v.decisive != verdicts[0].decisive) {
        return Err(Error::InvariantViolation(format!("classifiers disagree on ({d})")));
    }
    Ok(verdicts)
}

/// The catalog sequences `e` with `e ⪯ d`: some realization of `d` has six
/// vertices inducing a realization of `e`.
pub fn catalog_sequences_below(d: &DegreeSequence, limits: &Limits) -> Result<BTreeSet<DegreeSequence>> {
    check_bound(d.len(), limits.max_n)?;
    require_graphic(d)?;
    let found: Vec<BTreeSet<Vec<usize>>> = enumerate_labeled_realizations(d, limits)?
        .par_iter()
        .map(|g| {
            let mut hits = BTreeSet::new();
            six_subset_degree_lists(g, &mut |deg| {
                if in_catalog(deg) {
                    hits.insert(deg.to_vec());
                }
            });
            hits
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .map(DegreeSequence::new)
        .collect()
}

fn six_subset_degree_lists(g: &LabeledGraph, f: &mut dyn FnMut(&[usize])) {
    let n = g.order();
    if n < 6 {
        return;
    }
    fn rec(g: &LabeledGraph, mask: u64, depth: usize, start: usize, f: &mut dyn FnMut(&[usize])) {
        if depth == 6 {
            let mut deg: Vec<usize> = (0..g.order())
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| (g.neighbor_mask(v) & mask).count_ones() as usize)
                .collect();
            deg.sort_unstable_by(|a, b| b.cmp(a));
            f(&deg);
            return;
        }
        for v in start..=g.order() - (6 - depth) {
            rec(g, mask | 1 << v, depth + 1, v + 1, f);
        }
    }
    rec(g, 0, 0, 0, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::realizations::canonical_form;

    fn seq(t: &[usize]) -> DegreeSequence {
        DegreeSequence::new(t.to_vec()).unwrap()
    }

    #[test]
    fn catalog_has_seventy_graphs() {
        let c = build_catalog().unwrap();
        assert_eq!(c.sequences.len(), 24);
        assert_eq!(c.len(), 70);
        assert_eq!(c.graphs[&seq(&[2; 6])].len(), 2);
        assert_eq!(c.graphs[&seq(&[1; 6])].len(), 1);
        for (s, g) in c.all_graphs() {
            assert_eq!(g.order(), 6);
            assert_eq!(&g.to_graph().degree_sequence(), s);
        }
    }

    #[test]
    fn u_is_outside_the_catalog() {
        let c = build_catalog().unwrap();
        let u = canonical_form(&named::u_graph()).unwrap();
        assert!(c.all_graphs().all(|(_, g)| *g != u));
        assert_eq!(enumerate_isomorphism_classes(&seq(&[4, 2, 2, 2, 2, 2]), &Limits::default()).unwrap().len(), 1);
    }

    #[test]
    fn b_free_examples() {
        assert!(!is_b_free(&named::cycle(6)));
        assert!(is_b_free(&named::cycle(5)));
        assert!(is_b_free(&named::complete(6)));
        assert!(is_b_free(&named::u_graph()));
    }

    #[test]
    fn eg_examples() {
        let v = decisive_by_eg(&seq(&[2, 2, 1, 1])).unwrap();
        assert!(v.decisive);
        assert!(matches!(v.witness, Some(Witness::Eg { condition: EgCondition::Split, k: 2, .. })));

        let v = decisive_by_eg(&seq(&[2; 5])).unwrap();
        assert!(matches!(
            v.witness,
            Some(Witness::Eg { condition: EgCondition::SmallCore, k: 0, core_end: Some(5), .. })
        ));

        let v = decisive_by_eg(&seq(&[1; 6])).unwrap();
        assert!(!v.decisive);
        let Some(Witness::Eg { tail, .. }) = v.witness else { panic!() };
        assert_eq!(tail, vec![1; 6]);

        assert!(decisive_by_eg(&seq(&[3, 3, 1, 1])).is_err());
    }

    #[test]
    fn eg_uses_the_core_end() {
        // K1 join (C5 + K1)
        let d = seq(&[6, 3, 3, 3, 3, 3, 1]);
        assert!(decisive_by_eg(&d).unwrap().decisive);
        assert!(decisive_by_blossoms(&d, &Limits::default()).unwrap().decisive);
    }

    #[test]
    fn special_tails() {
        assert!(special_tail(&[3, 1, 1, 1, 1, 1]));
        assert!(special_tail(&[4, 4, 4, 4, 4, 2]));
        assert!(special_tail(&[5, 1, 1, 1, 1, 1, 1, 1]));
        assert!(!special_tail(&[2, 1, 1, 1, 1]));
        assert!(!special_tail(&[1; 6]));
    }

    #[test]
    fn structure_examples() {
        let l = Limits::default();
        let v = decisive_by_structure(&seq(&[5, 3, 3, 3, 3, 3]), &l).unwrap();
        assert!(v.decisive);
        let v = decisive_by_structure(&seq(&[2; 6]), &l).unwrap();
        assert!(!v.decisive);
        let v = decisive_by_structure(&seq(&[4, 2, 2, 2, 2, 2]), &l).unwrap();
        let Some(Witness::Structure { core, .. }) = v.witness else { panic!() };
        assert_eq!(core.tag, crate::structure::CoreTag::U);
    }

    #[test]
    fn blossom_examples() {
        let l = Limits::default();
        let v = decisive_by_blossoms(&seq(&[2; 6]), &l).unwrap();
        assert!(!v.decisive);
        let Some(Witness::Blossom { realization, blossom }) = v.witness else { panic!() };
        assert!(blossom.holds_in_graph(&realization));
        assert!(decisive_by_blossoms(&seq(&[4, 3, 2, 2, 1]), &l).unwrap().decisive);
        assert!(!decisive_by_blossoms(&seq(&[1; 6]), &l).unwrap().decisive);
    }

    #[test]
    fn b_free_classifier_examples() {
        let l = Limits::default();
        assert!(!decisive_by_b_free(&seq(&[2; 6]), &l, true).unwrap().decisive);
        assert!(decisive_by_b_free(&seq(&[5; 6]), &l, true).unwrap().decisive);
        for d in crate::graphic::graphic_sequences(5) {
            assert!(decisive_by_b_free(&d, &l, true).unwrap().decisive);
        }
    }

    #[test]
    fn all_methods_agree_on_threshold_sequence() {
        let v = decisive_all(&seq(&[4, 3, 2, 2, 1]), &Limits::default()).unwrap();
        assert!(v.iter().all(|v| v.decisive));
    }

    #[test]
    fn catalog_sequences_are_below_themselves() {
        let l = Limits::default();
        for t in CATALOG_SEQUENCES {
            let d = seq(&t);
            assert!(catalog_sequences_below(&d, &l).unwrap().contains(&d));
        }
        assert!(catalog_sequences_below(&seq(&[4, 3, 2, 2, 1]), &l).unwrap().is_empty());
    }
}
