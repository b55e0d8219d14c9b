//! The polytope `P(d)` of fractional realizations.
//!
//! A point of `P(d)` labels every vertex pair with a value in `[0, 1]` so that
//! the labels at each vertex `v` sum to `d_v`. A point is a vertex of `P(d)`
//! exactly when its nonintegral labels all equal `1/2` and the pairs carrying
//! them form vertex-disjoint odd cycles. [`is_vertex_by_structure`] tests that
//! description; [`is_vertex_by_rank`] tests the defining property directly
//! (the tight constraints have full rank) and serves as its oracle.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::blossom::{find_fractional_blossom, half_cycles, Blossom};
use crate::error::check_bound;
use crate::graph::{bit, mask_vertices, LabeledGraph};
use crate::graphic::{graphic_sequences, is_graphic};
use crate::labeling::{EdgeIndex, FractionalLabeling, Rational};
use crate::rank::rank;
use crate::sequence::DegreeSequence;
use crate::{Error, Limits, Result};

fn check_dimension(d: &DegreeSequence, x: &FractionalLabeling) -> Result<()> {
    if x.order() != d.len() {
        return Err(Error::Domain(format!(
            "labeling has {} coordinates but the sequence needs {}",
            x.values().len(),
            EdgeIndex::new(d.len()).len()
        )));
    }
    Ok(())
}

/// Whether `x` satisfies the degree conditions and the hypercube bounds of
/// `P(d)`, in exact arithmetic.
pub fn contains(d: &DegreeSequence, x: &FractionalLabeling) -> Result<bool> {
    check_dimension(d, x)?;
    let in_cube = x
        .values()
        .iter()
        .all(|v| *v >= Rational::zero() && *v <= Rational::one());
    Ok(in_cube
        && (0..d.len()).all(|v| x.vertex_sum(v) == Rational::from_integer(d.terms()[v] as i64)))
}

fn require_member(d: &DegreeSequence, x: &FractionalLabeling) -> Result<()> {
    if contains(d, x)? {
        Ok(())
    } else {
        Err(Error::Precondition("point is not in P(d)".into()))
    }
}

/// Structural vertex test: every nonintegral label is `1/2` and the
/// `1/2`-pairs form vertex-disjoint odd cycles.
pub fn is_vertex_by_structure(d: &DegreeSequence, x: &FractionalLabeling) -> Result<bool> {
    require_member(d, x)?;
    if !x.is_half_integral_unit() {
        return Ok(false);
    }
    let half_count = x.nonintegral_count();
    let cycles = half_cycles(x);
    let covered: usize = cycles.iter().map(Vec::len).sum();
    if covered != half_count {
        return Ok(false);
    }
    if d.sum() % 2 == 0 && cycles.len() % 2 == 1 {
        return Err(Error::InvariantViolation(
            "odd number of half-cycles at a point of P(d) with even degree sum".into(),
        ));
    }
    Ok(true)
}

/// The constraints of `P(d)` that hold with equality at a point: every degree
/// row, plus the row `x_ij` for each coordinate equal to `0` or `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightConstraintSystem {
    /// Coefficient rows over the coordinates in [`EdgeIndex`] order.
    pub rows: Vec<Vec<i64>>,
    /// Exact rank of `rows`.
    pub rank: usize,
}

impl TightConstraintSystem {
    pub fn at(d: &DegreeSequence, x: &FractionalLabeling) -> Result<Self> {
        require_member(d, x)?;
        let n = d.len();
        let idx = x.index();
        let dim = idx.len();
        let mut rows = Vec::with_capacity(n + dim);
        for v in 0..n {
            let mut row = vec![0; dim];
            for u in (0..n).filter(|&u| u != v) {
                row[idx.index(u, v)] = 1;
            }
            rows.push(row);
        }
        for (k, value) in x.values().iter().enumerate() {
            if value.is_zero() || value.is_one() {
                let mut row = vec![0; dim];
                row[k] = 1;
                rows.push(row);
            }
        }
        let rank = rank(&rows)?;
        Ok(TightConstraintSystem { rows, rank })
    }

    /// Whether the system pins down a single point.
    pub fn is_full_rank(&self, n: usize) -> bool {
        self.rank == EdgeIndex::new(n).len()
    }
}

/// Rank-based vertex test: the tight constraints at `x` have rank `C(n, 2)`.
pub fn is_vertex_by_rank(d: &DegreeSequence, x: &FractionalLabeling) -> Result<bool> {
    Ok(TightConstraintSystem::at(d, x)?.is_full_rank(d.len()))
}

/// A vertex of `P(d)` with its structure spelled out.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolytopeVertex {
    pub point: FractionalLabeling,
    /// Pairs labeled `1`.
    pub integral_part: Vec<(usize, usize)>,
    /// The odd cycles of `1/2`-pairs, as produced by [`half_cycles`].
    pub half_cycles: Vec<Vec<usize>>,
}

impl PolytopeVertex {
    fn from_point(point: FractionalLabeling) -> Self {
        let idx = point.index();
        let integral_part = point
            .values()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_one())
            .map(|(k, _)| idx.pair(k))
            .collect();
        let half_cycles = half_cycles(&point);
        PolytopeVertex {
            point,
            integral_part,
            half_cycles,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.half_cycles.is_empty()
    }
}

/// Labels stored as multiples of `1/2`.
fn from_halves(n: usize, halves: &[u8]) -> FractionalLabeling {
    let values = halves.iter().map(|&h| Rational::new(i64::from(h), 2)).collect();
    FractionalLabeling::from_values(n, values).expect("dimension matches")
}

/// Depth-first completion of the `free` coordinates with values drawn from
/// `allowed` (in halves) so that every vertex reaches `need` (in halves).
/// Pairs are assigned in the order given; a branch is cut as soon as some
/// vertex can no longer reach its demand or has overshot it.
struct Completion<'a> {
    idx: EdgeIndex,
    free: &'a [(usize, usize)],
    allowed: &'a [u8],
    need: Vec<i32>,
    /// Unassigned free pairs at each vertex.
    open: Vec<i32>,
    halves: Vec<u8>,
}

impl Completion<'_> {
    fn run(&mut self, pos: usize, out: &mut Vec<Vec<u8>>) {
        let max = i32::from(*self.allowed.iter().max().unwrap_or(&0));
        if pos == self.free.len() {
            if self.need.iter().all(|&r| r == 0) {
                out.push(self.halves.clone());
            }
            return;
        }
        let (i, j) = self.free[pos];
        self.open[i] -= 1;
        self.open[j] -= 1;
        for &a in self.allowed {
            let a32 = i32::from(a);
            let ni = self.need[i] - a32;
            let nj = self.need[j] - a32;
            if ni < 0 || nj < 0 || ni > self.open[i] * max || nj > self.open[j] * max {
                continue;
            }
            self.need[i] = ni;
            self.need[j] = nj;
            self.halves[self.idx.index(i, j)] = a;
            self.run(pos + 1, out);
            self.need[i] += a32;
            self.need[j] += a32;
        }
        self.halves[self.idx.index(i, j)] = 0;
        self.open[i] += 1;
        self.open[j] += 1;
    }
}

fn complete(
    n: usize,
    base: Vec<u8>,
    need: Vec<i32>,
    free: &[(usize, usize)],
    allowed: &[u8],
) -> Vec<Vec<u8>> {
    let mut open = vec![0; n];
    for &(i, j) in free {
        open[i] += 1;
        open[j] += 1;
    }
    let mut c = Completion {
        idx: EdgeIndex::new(n),
        free,
        allowed,
        need,
        open,
        halves: base,
    };
    let mut out = Vec::new();
    c.run(0, &mut out);
    out
}

fn check_graphic(d: &DegreeSequence) -> Result<()> {
    if is_graphic(d) {
        Ok(())
    } else {
        Err(Error::Domain(format!("({d}) is not graphic")))
    }
}

/// Every point of `P(d)` whose labels lie in `{0, 1/2, 1}`, in
/// lexicographic order of their halves vectors.
pub fn half_integral_points(d: &DegreeSequence, limits: &Limits) -> Result<Vec<FractionalLabeling>> {
    check_bound(d.len(), limits.max_n)?;
    let n = d.len();
    let idx = EdgeIndex::new(n);
    let free: Vec<_> = idx.pairs().collect();
    let need = d.terms().iter().map(|&t| 2 * t as i32).collect();
    let mut points = complete(n, vec![0; idx.len()], need, &free, &[0, 1, 2]);
    points.sort();
    Ok(points.iter().map(|h| from_halves(n, h)).collect())
}

/// Hamiltonian cycles on the vertex set `mask`, each starting at the least
/// vertex with its second vertex below its last.
fn cycles_on(mask: u64) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, left: u64, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if cur[1] < cur[cur.len() - 1] {
                out.push(cur.clone());
            }
            return;
        }
        for v in mask_vertices(left) {
            cur.push(v);
            rec(cur, left & !bit(v), out);
            cur.pop();
        }
    }
    let first = mask.trailing_zeros() as usize;
    let mut out = Vec::new();
    rec(&mut vec![first], mask & !bit(first), &mut out);
    out
}

/// Families of vertex-disjoint odd cycles (length at least 3) on the vertices
/// in `allowed`, with an even number of cycles, including the empty family.
/// Cycles within a family appear in increasing order of least vertex.
fn even_odd_cycle_families(allowed: u64) -> Vec<Vec<Vec<usize>>> {
    fn rec(allowed: u64, floor: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if cur.len() % 2 == 0 {
            out.push(cur.clone());
        }
        for m in mask_vertices(allowed) {
            if m < floor {
                continue;
            }
            let rest = allowed & !(bit(m + 1) - 1);
            let rest_vertices: Vec<usize> = mask_vertices(rest).collect();
            // subsets of the vertices above m with an even number of elements
            for sub in 0u64..(1u64 << rest_vertices.len()) {
                if sub.count_ones() < 2 || sub.count_ones() % 2 == 1 {
                    continue;
                }
                let mut set = bit(m);
                for (b, &v) in rest_vertices.iter().enumerate() {
                    if sub >> b & 1 == 1 {
                        set |= bit(v);
                    }
                }
                for c in cycles_on(set) {
                    cur.push(c);
                    rec(allowed & !set, m + 1, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(allowed, 0, &mut Vec::new(), &mut out);
    out
}

/// All vertices of `P(d)`.
///
/// For each even family of vertex-disjoint odd cycles, the cycle pairs get
/// `1/2` and the remaining pairs are completed with `0`/`1` labels meeting the
/// residual degrees. Every point produced is checked with
/// [`is_vertex_by_rank`]. Families are processed in parallel.
pub fn enumerate_vertices(d: &DegreeSequence, limits: &Limits) -> Result<BTreeSet<PolytopeVertex>> {
    check_bound(d.len(), limits.max_n)?;
    check_graphic(d)?;
    let n = d.len();
    let idx = EdgeIndex::new(n);
    // a cycle vertex takes 1 from its cycle and at most n - 3 from the rest
    let allowed = (0..n)
        .filter(|&v| d.terms()[v] >= 1 && d.terms()[v] + 2 <= n)
        .fold(0u64, |m, v| m | bit(v));
    let families = even_odd_cycle_families(allowed);
    let points: Vec<Vec<Vec<u8>>> = families
        .par_iter()
        .map(|family| {
            let mut base = vec![0u8; idx.len()];
            let mut need: Vec<i32> = d.terms().iter().map(|&t| 2 * t as i32).collect();
            for c in family {
                for i in 0..c.len() {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    base[idx.index(a, b)] = 1;
                    need[a] -= 1;
                    need[b] -= 1;
                }
            }
            let free: Vec<_> = idx.pairs().filter(|&(a, b)| base[idx.index(a, b)] == 0).collect();
            complete(n, base, need, &free, &[0, 2])
        })
        .collect();
    let mut out = BTreeSet::new();
    for halves in points.into_iter().flatten() {
        let point = from_halves(n, &halves);
        if !is_vertex_by_rank(d, &point)? {
            return Err(Error::InvariantViolation(format!(
                "enumerated point {point:?} is not a vertex of P({d})"
            )));
        }
        out.insert(PolytopeVertex::from_point(point));
    }
    Ok(out)
}

/// A coordinate that takes the same value at every vertex of `P(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedCoordinate {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dimension: usize,
    pub vertex_count: usize,
    pub forced: Vec<ForcedCoordinate>,
}

/// Affine dimension of the hull of `vertices` (all in the same `P(d)`), with
/// the coordinates constant across them.
pub fn dimension_of_vertices(vertices: &BTreeSet<PolytopeVertex>) -> Result<DimensionReport> {
    let Some(first) = vertices.iter().next() else {
        return Err(Error::Domain("empty vertex set".into()));
    };
    let scaled = |p: &FractionalLabeling| -> Vec<i64> {
        p.values().iter().map(|v| (*v * Rational::from_integer(2)).to_integer()).collect()
    };
    let base = scaled(&first.point);
    let rows: Vec<Vec<i64>> = vertices
        .iter()
        .skip(1)
        .map(|v| scaled(&v.point).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let dimension = rank(&rows)?;
    let idx = first.point.index();
    let forced = (0..idx.len())
        .filter(|&k| rows.iter().all(|r| r[k] == 0))
        .map(|k| {
            let (i, j) = idx.pair(k);
            ForcedCoordinate {
                i,
                j,
                value: first.point.values()[k],
            }
        })
        .collect();
    Ok(DimensionReport {
        dimension,
        vertex_count: vertices.len(),
        forced,
    })
}

/// Affine dimension of `P(d)`, computed from its vertices, and the forced
/// coordinates.
pub fn dimension(d: &DegreeSequence, limits: &Limits) -> Result<DimensionReport> {
    dimension_of_vertices(&enumerate_vertices(d, limits)?)
}

/// The course of a [`blossom_round`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rounding {
    pub graph: LabeledGraph,
    /// The fractional blossoms replaced, in order.
    pub steps: Vec<Blossom>,
    /// Nonintegral coordinate count before each step and after the last.
    pub nonintegral_counts: Vec<usize>,
}

/// [`blossom_round`] with its trace.
pub fn blossom_round_traced(d: &DegreeSequence, x: &FractionalLabeling) -> Result<Rounding> {
    if !is_vertex_by_structure(d, x)? {
        return Err(Error::Precondition("point is not a vertex of P(d)".into()));
    }
    let mut x = x.clone();
    let mut steps = Vec::new();
    let mut counts = vec![x.nonintegral_count()];
    while let Some(b) = find_fractional_blossom(&x)? {
        b.integral_counterpart().write_integral(&mut x);
        let count = x.nonintegral_count();
        if count >= *counts.last().expect("nonempty") {
            return Err(Error::InvariantViolation("rounding step did not reduce half-edges".into()));
        }
        counts.push(count);
        steps.push(b);
    }
    let graph = x
        .to_graph()
        .ok_or_else(|| Error::InvariantViolation("rounding left nonintegral labels".into()))?;
    if graph.degrees() != d.terms() {
        return Err(Error::InvariantViolation("rounding changed the degrees".into()));
    }
    Ok(Rounding {
        graph,
        steps,
        nonintegral_counts: counts,
    })
}

/// Rounds a vertex of `P(d)` to a realization of `d` by repeatedly replacing
/// a fractional blossom with the integral blossom on the same vertices whose
/// `v1w1` value is flipped. Each step removes both half-cycles of the blossom.
pub fn blossom_round(d: &DegreeSequence, x: &FractionalLabeling) -> Result<LabeledGraph> {
    Ok(blossom_round_traced(d, x)?.graph)
}

/// Shrinks the `v`-tour of an integral blossom in `g` to three vertices by
/// switching the alternating even cycle `v2 ... vk` where needed. Degrees
/// are unchanged and the other tour is untouched.
fn shrink_tour(g: &mut LabeledGraph, tour: &[usize], polarity: bool) -> Vec<usize> {
    let k = tour.len();
    if k == 3 {
        return tour.to_vec();
    }
    let (v2, vk) = (tour[1], tour[k - 1]);
    if g.has_edge(v2, vk) != polarity {
        let cycle = &tour[1..];
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let present = g.has_edge(a, b);
            g.set_edge(a, b, !present);
        }
    }
    vec![tour[0], v2, vk]
}

/// Rounds a fractional vertex of `P(d)` and returns a realization together
/// with an integral `(3,3)`-blossom it contains.
pub fn blossom_certificate(d: &DegreeSequence, x: &FractionalLabeling) -> Result<(LabeledGraph, Blossom)> {
    let rounding = blossom_round_traced(d, x)?;
    let Some(last) = rounding.steps.last() else {
        return Err(Error::Precondition("vertex is already integral".into()));
    };
    let integral = last.integral_counterpart();
    let mut g = rounding.graph;
    let p = integral.polarity() == 1;
    let v = shrink_tour(&mut g, integral.v_tour(), p);
    let w = shrink_tour(&mut g, integral.w_tour(), p);
    let b = Blossom::new(v, w, integral.polarity(), integral.kind())?;
    if !b.holds_in_graph(&g) || g.degrees() != d.terms() {
        return Err(Error::InvariantViolation("blossom certificate does not validate".into()));
    }
    Ok((g, b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyPair {
    pub d: DegreeSequence,
    pub e: DegreeSequence,
    pub dim_d: usize,
    pub dim_e: usize,
    /// `dim P(d) <= dim P(e)`.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MajorizationSurvey {
    pub n: usize,
    pub sequences: usize,
    pub pairs: Vec<SurveyPair>,
    /// Indices into `pairs` with `dim P(d) > dim P(e)`.
    pub violations: Vec<usize>,
}

/// For every ordered pair `(d, e)` of graphic sequences of length `n` with
/// equal sums and `d` majorizing `e`, records both dimensions and flags the
/// pairs with `dim P(d) > dim P(e)`.
pub fn majorization_dimension_survey(n: usize, limits: &Limits) -> Result<MajorizationSurvey> {
    check_bound(n, limits.max_n)?;
    let seqs = graphic_sequences(n);
    let dims: Vec<usize> = seqs
        .par_iter()
        .map(|d| dimension(d, limits).map(|r| r.dimension))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for (a, d) in seqs.iter().enumerate() {
        for (b, e) in seqs.iter().enumerate() {
            if d.sum() == e.sum() && d.majorizes(e) {
                pairs.push(SurveyPair {
                    d: d.clone(),
                    e: e.clone(),
                    dim_d: dims[a],
                    dim_e: dims[b],
                    consistent: dims[a] <= dims[b],
                });
            }
        }
    }
    let violations = pairs
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.consistent)
        .map(|(i, _)| i)
        .collect();
    Ok(MajorizationSurvey {
        n,
        sequences: seqs.len(),
        pairs,
        violations,
    })
}

/// Splits a `{0, 1/2, 1}`-point whose `1/2`-pairs do not form disjoint odd
/// cycles into two distinct integral points of `P(d)` with `x` as their
/// midpoint. Both agree with `x` on every tight constraint, which refutes
/// `x` being a vertex.
#[cfg(test)]
pub(crate) fn even_cycle_perturbation(x: &FractionalLabeling) -> Option<(FractionalLabeling, FractionalLabeling)> {
    use crate::labeling::half;
    let n = x.order();
    let mut adj = vec![Vec::new(); n];
    for (a, b) in x.index().pairs() {
        if x.get(a, b) == half() {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    // a closed trail of even length through the 1/2-pairs
    let cycles = half_cycles(x);
    let in_odd_cycle: u64 = cycles.iter().flatten().fold(0, |m, &v| m | bit(v));
    let start = (0..n).find(|&v| !adj[v].is_empty() && in_odd_cycle & bit(v) == 0)?;
    let trail = euler_circuit(&adj, start);
    let even = even_closed_subtrail(&trail)?;
    let mut plus = x.clone();
    let mut minus = x.clone();
    for (t, w) in even.windows(2).enumerate() {
        let up = t % 2 == 0;
        plus.set(w[0], w[1], if up { Rational::one() } else { Rational::zero() });
        minus.set(w[0], w[1], if up { Rational::zero() } else { Rational::one() });
    }
    Some((plus, minus))
}

/// Hierholzer's algorithm on the component of `start`; returns the vertex
/// sequence with the start repeated at the end.
#[cfg(test)]
fn euler_circuit(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut remaining: Vec<Vec<usize>> = adj.to_vec();
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(&v) = stack.last() {
        if let Some(u) = remaining[v].pop() {
            let pos = remaining[u].iter().position(|&w| w == v).expect("symmetric");
            remaining[u].swap_remove(pos);
            stack.push(u);
        } else {
            out.push(v);
            stack.pop();
        }
    }
    out
}

/// A closed subtrail of even length, found by splitting at repeated vertices.
#[cfg(test)]
fn even_closed_subtrail(trail: &[usize]) -> Option<Vec<usize>> {
    let len = trail.len() - 1;
    if len % 2 == 0 && len >= 4 {
        return Some(trail.to_vec());
    }
    for i in 0..len {
        for j in i + 1..len {
            if trail[i] == trail[j] {
                let inner = &trail[i..=j];
                let mut outer = trail[..=i].to_vec();
                outer.extend_from_slice(&trail[j + 1..]);
                return even_closed_subtrail(inner).or_else(|| even_closed_subtrail(&outer));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::half;
    use crate::named;
    use crate::realizations::enumerate_labeled_realizations;

    fn seq(t: &[usize]) -> DegreeSequence {
        DegreeSequence::new(t.to_vec()).unwrap()
    }

    fn two_half_triangles() -> FractionalLabeling {
        let mut x = FractionalLabeling::zeros(6);
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            x.set(a, b, half());
        }
        x
    }

    /// Half-valued C4 on 1234 with 1-edges 13 and 24 (1-based).
    fn half_c4() -> FractionalLabeling {
        let mut x = FractionalLabeling::zeros(4);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            x.set(a, b, half());
        }
        x.set(0, 2, Rational::one());
        x.set(1, 3, Rational::one());
        x
    }

    #[test]
    fn membership() {
        let ones = seq(&[1; 6]);
        assert!(contains(&ones, &two_half_triangles()).unwrap());
        assert!(contains(&seq(&[0; 4]), &FractionalLabeling::zeros(4)).unwrap());
        let mut x = FractionalLabeling::zeros(2);
        x.set(0, 1, Rational::new(3, 2));
        assert!(!contains(&seq(&[1, 1]), &x).unwrap());
        assert!(contains(&seq(&[1, 1]), &FractionalLabeling::zeros(3)).is_err());
    }

    #[test]
    fn vertex_tests_agree_on_examples() {
        let ones = seq(&[1; 6]);
        let x = two_half_triangles();
        assert!(is_vertex_by_structure(&ones, &x).unwrap());
        assert!(is_vertex_by_rank(&ones, &x).unwrap());

        let twos = seq(&[2; 4]);
        let y = half_c4();
        assert!(!is_vertex_by_structure(&twos, &y).unwrap());
        assert!(!is_vertex_by_rank(&twos, &y).unwrap());

        let g = named::cycle(4);
        let z = FractionalLabeling::from_graph(&g);
        assert!(is_vertex_by_structure(&twos, &z).unwrap());
        assert!(is_vertex_by_rank(&twos, &z).unwrap());

        assert!(is_vertex_by_rank(&ones, &FractionalLabeling::zeros(6)).is_err());
    }

    #[test]
    fn midpoint_of_an_edge_is_not_a_vertex() {
        let d = seq(&[2, 2, 1, 1]);
        let vs: Vec<_> = enumerate_vertices(&d, &Limits::default()).unwrap().into_iter().collect();
        assert_eq!(vs.len(), 2);
        let mid: Vec<Rational> = vs[0]
            .point
            .values()
            .iter()
            .zip(vs[1].point.values())
            .map(|(a, b)| (a + b) * half())
            .collect();
        let mid = FractionalLabeling::from_values(4, mid).unwrap();
        assert!(!is_vertex_by_rank(&d, &mid).unwrap());
        assert!(!is_vertex_by_structure(&d, &mid).unwrap());
    }

    #[test]
    fn census_of_ones() {
        let vs = enumerate_vertices(&seq(&[1; 6]), &Limits::default()).unwrap();
        assert_eq!(vs.len(), 25);
        assert_eq!(vs.iter().filter(|v| !v.is_integral()).count(), 10);
        for v in &vs {
            assert_eq!(v.half_cycles.len() % 2, 0);
        }
    }

    #[test]
    fn threshold_sequence_is_a_point() {
        let d = seq(&[4, 3, 2, 2, 1]);
        let vs = enumerate_vertices(&d, &Limits::default()).unwrap();
        assert_eq!(vs.len(), 1);
        let r = dimension(&d, &Limits::default()).unwrap();
        assert_eq!(r.dimension, 0);
        assert!(is_vertex_by_rank(&d, &vs.iter().next().unwrap().point).unwrap());
    }

    #[test]
    fn forced_coordinates() {
        let r = dimension(&seq(&[2, 2, 1, 1]), &Limits::default()).unwrap();
        assert_eq!(r.dimension, 1);
        assert_eq!(
            r.forced,
            vec![
                ForcedCoordinate { i: 0, j: 1, value: Rational::one() },
                ForcedCoordinate { i: 2, j: 3, value: Rational::zero() },
            ]
        );
        assert_eq!(dimension(&seq(&[0, 0, 0]), &Limits::default()).unwrap().dimension, 0);
    }

    #[test]
    fn enumeration_errors() {
        assert!(matches!(
            enumerate_vertices(&seq(&[3, 3, 1, 1]), &Limits::default()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            enumerate_vertices(&seq(&[1; 6]), &Limits::new(5)),
            Err(Error::ResourceLimit { n: 6, max_n: 5 })
        ));
    }

    #[test]
    fn integral_vertices_are_the_realizations() {
        for n in 0..=6 {
            for d in graphic_sequences(n) {
                let vs = enumerate_vertices(&d, &Limits::default()).unwrap();
                let integral: BTreeSet<LabeledGraph> =
                    vs.iter().filter_map(|v| v.point.to_graph()).collect();
                let real: BTreeSet<LabeledGraph> =
                    enumerate_labeled_realizations(&d, &Limits::default()).unwrap().into_iter().collect();
                assert_eq!(integral, real, "{d:?}");
            }
        }
    }

    #[test]
    fn vertices_match_half_integral_points_passing_the_rank_test() {
        for n in 0..=5 {
            for d in graphic_sequences(n) {
                let vs: BTreeSet<FractionalLabeling> = enumerate_vertices(&d, &Limits::default())
                    .unwrap()
                    .into_iter()
                    .map(|v| v.point)
                    .collect();
                let by_rank: BTreeSet<FractionalLabeling> = half_integral_points(&d, &Limits::default())
                    .unwrap()
                    .into_iter()
                    .filter(|x| is_vertex_by_rank(&d, x).unwrap())
                    .collect();
                assert_eq!(vs, by_rank, "{d:?}");
            }
        }
    }

    #[test]
    fn non_vertices_split_along_even_trails() {
        for n in 0..=5 {
            for d in graphic_sequences(n) {
                for x in half_integral_points(&d, &Limits::default()).unwrap() {
                    if is_vertex_by_structure(&d, &x).unwrap() {
                        assert!(even_cycle_perturbation(&x).is_none());
                        continue;
                    }
                    let (p, m) = even_cycle_perturbation(&x).expect("non-vertex has an even trail");
                    assert_ne!(p, m);
                    assert!(contains(&d, &p).unwrap() && contains(&d, &m).unwrap());
                    let mid: Vec<Rational> =
                        p.values().iter().zip(m.values()).map(|(a, b)| (a + b) * half()).collect();
                    assert_eq!(mid, x.values());
                }
            }
        }
    }

    #[test]
    fn rounding_two_half_triangles() {
        let d = seq(&[1; 6]);
        let r = blossom_round_traced(&d, &two_half_triangles()).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert_eq!(r.nonintegral_counts, vec![6, 0]);
        assert_eq!(r.graph.degrees(), vec![1; 6]);

        let g = named::cycle(5);
        let x = FractionalLabeling::from_graph(&g);
        assert_eq!(blossom_round(&seq(&[2; 5]), &x).unwrap(), g);
        assert!(blossom_round(&seq(&[2; 4]), &half_c4()).is_err());
    }

    #[test]
    fn rounding_every_fractional_vertex_up_to_seven() {
        for n in 6..=7 {
            for d in graphic_sequences(n) {
                for v in enumerate_vertices(&d, &Limits::default()).unwrap() {
                    if v.is_integral() {
                        continue;
                    }
                    let g = blossom_round(&d, &v.point).unwrap();
                    assert_eq!(g.degrees(), d.terms());
                    let (h, b) = blossom_certificate(&d, &v.point).unwrap();
                    assert_eq!(b.size(), (3, 3));
                    assert!(b.holds_in_graph(&h));
                }
            }
        }
    }

    #[test]
    fn survey_small() {
        let s = majorization_dimension_survey(4, &Limits::default()).unwrap();
        let pair = s
            .pairs
            .iter()
            .find(|p| p.d == seq(&[3, 1, 1, 1]) && p.e == seq(&[2, 2, 1, 1]))
            .unwrap();
        assert_eq!((pair.dim_d, pair.dim_e), (0, 1));
        assert!(s.pairs.iter().filter(|p| p.d == p.e).all(|p| p.consistent));
    }
}
