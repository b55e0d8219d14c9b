//! Fractional and integral `(k, l)`-blossoms.
//!
//! A blossom joins two odd tours `v_1 ... v_k` and `w_1 ... w_l` through the
//! pair `v_1 w_1`. Its pair sequence is
//!
//! ```text
//! v1v2, v2v3, ..., vkv1, v1w1, w1w2, ..., wlw1
//! ```
//!
//! In a fractional blossom the tour pairs carry `1/2` and `v1w1` carries `0`
//! or `1`. In an integral blossom the whole sequence alternates between `0`
//! and `1`. In a simple graph, edges play the role of `1` and non-edges the
//! role of `0`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::{bit, mask_vertices, LabeledGraph};
use crate::labeling::{half, FractionalLabeling, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlossomKind {
    Fractional,
    Integral,
}

/// A `(k, l)`-blossom occurrence. `v_tour[0]` is `v_1` and `w_tour[0]` is
/// `w_1`; `polarity` is the value of the pair `v_1 w_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Blossom {
    v_tour: Vec<usize>,
    w_tour: Vec<usize>,
    polarity: u8,
    kind: BlossomKind,
}

impl Blossom {
    /// Checks the shape: both tours odd with at least three vertices, all
    /// vertices distinct, polarity `0` or `1`.
    pub fn new(v_tour: Vec<usize>, w_tour: Vec<usize>, polarity: u8, kind: BlossomKind) -> Result<Self> {
        for tour in [&v_tour, &w_tour] {
            if tour.len() < 3 || tour.len() % 2 == 0 {
                return Err(Error::Domain(format!(
                    "blossom tours must be odd with at least 3 vertices, got {}",
                    tour.len()
                )));
            }
        }
        let mut all: Vec<usize> = v_tour.iter().chain(&w_tour).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("blossom vertices must be distinct".into()));
        }
        if polarity > 1 {
            return Err(Error::Domain(format!("polarity must be 0 or 1, got {polarity}")));
        }
        Ok(Blossom {
            v_tour,
            w_tour,
            polarity,
            kind,
        })
    }

    pub fn v_tour(&self) -> &[usize] {
        &self.v_tour
    }

    pub fn w_tour(&self) -> &[usize] {
        &self.w_tour
    }

    pub fn polarity(&self) -> u8 {
        self.polarity
    }

    pub fn kind(&self) -> BlossomKind {
        self.kind
    }

    /// `(k, l)`.
    pub fn size(&self) -> (usize, usize) {
        (self.v_tour.len(), self.w_tour.len())
    }

    fn max_vertex(&self) -> usize {
        self.v_tour.iter().chain(&self.w_tour).copied().max().unwrap_or(0)
    }

    /// The `k + l + 1` pairs in sequence order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let tour = |t: &[usize]| -> Vec<(usize, usize)> {
            (0..t.len()).map(|i| (t[i], t[(i + 1) % t.len()])).collect()
        };
        let mut out = tour(&self.v_tour);
        out.push((self.v_tour[0], self.w_tour[0]));
        out.extend(tour(&self.w_tour));
        out
    }

    /// Value the integral pattern requires at sequence position `t`.
    fn integral_value(&self, t: usize) -> u8 {
        let k = self.v_tour.len();
        if (t + k) % 2 == 0 {
            self.polarity
        } else {
            1 - self.polarity
        }
    }

    /// Whether the integral alternation holds in `g`.
    pub fn holds_in_graph(&self, g: &LabeledGraph) -> bool {
        self.kind == BlossomKind::Integral
            && self.max_vertex() < g.order()
            && self
                .pairs()
                .iter()
                .enumerate()
                .all(|(t, &(a, b))| u8::from(g.has_edge(a, b)) == self.integral_value(t))
    }

    /// Whether the pattern of this blossom's kind holds in `x`.
    pub fn holds_in_labeling(&self, x: &FractionalLabeling) -> bool {
        if self.max_vertex() >= x.order() {
            return false;
        }
        let k = self.v_tour.len();
        let value = |b: u8| Rational::from_integer(i64::from(b));
        self.pairs().iter().enumerate().all(|(t, &(a, b))| {
            let got = x.get(a, b);
            match self.kind {
                BlossomKind::Integral => got == value(self.integral_value(t)),
                BlossomKind::Fractional if t == k => got == value(self.polarity),
                BlossomKind::Fractional => got == half(),
            }
        })
    }

    /// The integral blossom on the same vertices whose `v1w1` value is the
    /// opposite of this fractional blossom's.
    pub fn integral_counterpart(&self) -> Blossom {
        Blossom {
            v_tour: self.v_tour.clone(),
            w_tour: self.w_tour.clone(),
            polarity: 1 - self.polarity,
            kind: BlossomKind::Integral,
        }
    }

    /// Writes the integral alternation of this blossom into `x`.
    pub(crate) fn write_integral(&self, x: &mut FractionalLabeling) {
        for (t, (a, b)) in self.pairs().into_iter().enumerate() {
            x.set(a, b, Rational::from_integer(i64::from(self.integral_value(t))));
        }
    }
}

/// Exhaustive search for a `(3,3)`-blossom in a simple graph.
///
/// Tuples `(v1, w1, v2, v3, w2, w3)` are scanned in lexicographic order
/// subject to `v1 < w1`, `v2 < v3` and `w2 < w3`; the polarity is whatever
/// `v1w1` is in `g`. Returns the first hit.
pub fn find_integral_33_blossom(g: &LabeledGraph) -> Option<Blossom> {
    let n = g.order();
    if n < 6 {
        return None;
    }
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    // vertices x != c with x~c exactly when wanted == 1
    let side = |c: usize, wanted: u8| -> u64 {
        let nb = g.neighbor_mask(c);
        (if wanted == 1 { nb } else { !nb & all }) & !bit(c)
    };
    let tour_pairs = |c: usize, p: u8, avoid: u64| -> Vec<(usize, usize)> {
        let cand = side(c, 1 - p) & !avoid;
        let mut out = Vec::new();
        for x in mask_vertices(cand) {
            let above = cand & !(bit(x + 1).wrapping_sub(1));
            for y in mask_vertices(above & !bit(x)) {
                if u8::from(g.has_edge(x, y)) == p {
                    out.push((x, y));
                }
            }
        }
        out
    };
    for v1 in 0..n {
        for w1 in v1 + 1..n {
            let p = u8::from(g.has_edge(v1, w1));
            let centers = bit(v1) | bit(w1);
            for (v2, v3) in tour_pairs(v1, p, centers) {
                let used = centers | bit(v2) | bit(v3);
                if let Some(&(w2, w3)) = tour_pairs(w1, p, used).first() {
                    return Some(Blossom {
                        v_tour: vec![v1, v2, v3],
                        w_tour: vec![w1, w2, w3],
                        polarity: p,
                        kind: BlossomKind::Integral,
                    });
                }
            }
        }
    }
    None
}

struct TourSearch<'a> {
    g: &'a LabeledGraph,
    k: usize,
    l: usize,
    polarity: u8,
    used: u64,
    v: Vec<usize>,
    w: Vec<usize>,
}

impl TourSearch<'_> {
    fn value(&self, t: usize) -> bool {
        let p = if (t + self.k) % 2 == 0 {
            self.polarity
        } else {
            1 - self.polarity
        };
        p == 1
    }

    /// Extends `tour` (which already holds its first vertex) to `len`
    /// vertices. Sequence positions start at `offset`. Calls `done` on
    /// every closed tour; stops when it returns true.
    fn extend_tour(&mut self, second_tour: bool) -> bool {
        let (len, offset) = if second_tour {
            (self.l, self.k + 1)
        } else {
            (self.k, 0)
        };
        let tour = if second_tour { &self.w } else { &self.v };
        let have = tour.len();
        let last = tour[have - 1];
        let first = tour[0];
        if have == len {
            // closing pair
            if self.g.has_edge(last, first) != self.value(offset + len - 1) {
                return false;
            }
            // reflection symmetry: second vertex below the last one
            if tour[1] > last {
                return false;
            }
            return if second_tour { true } else { self.extend_tour(true) };
        }
        let want = self.value(offset + have - 1);
        for x in 0..self.g.order() {
            if self.used & bit(x) != 0 || self.g.has_edge(last, x) != want {
                continue;
            }
            self.used |= bit(x);
            if second_tour {
                self.w.push(x);
            } else {
                self.v.push(x);
            }
            if self.extend_tour(second_tour) {
                return true;
            }
            if second_tour {
                self.w.pop();
            } else {
                self.v.pop();
            }
            self.used &= !bit(x);
        }
        false
    }
}

/// Exhaustive depth-first search for an integral `(k, l)`-blossom in a
/// simple graph, extending alternating paths one vertex at a time.
///
/// Candidates are ordered as `(v1, w1, v2, ..., vk, w2, ..., wl)`, with
/// `v2 < vk`, `w2 < wl`, and `v1 < w1` when `k == l`. For `k = l = 3` this is
/// the same order as [`find_integral_33_blossom`].
pub fn find_integral_blossom_general(g: &LabeledGraph, k: usize, l: usize) -> Result<Option<Blossom>> {
    for t in [k, l] {
        if t < 3 || t % 2 == 0 {
            return Err(Error::Domain(format!(
                "blossom tour lengths must be odd and at least 3, got {t}"
            )));
        }
    }
    let n = g.order();
    if k + l > n {
        return Ok(None);
    }
    for v1 in 0..n {
        for w1 in 0..n {
            if w1 == v1 || (k == l && w1 < v1) {
                continue;
            }
            let mut s = TourSearch {
                g,
                k,
                l,
                polarity: u8::from(g.has_edge(v1, w1)),
                used: bit(v1) | bit(w1),
                v: vec![v1],
                w: vec![w1],
            };
            if s.extend_tour(false) {
                return Ok(Some(Blossom {
                    v_tour: s.v,
                    w_tour: s.w,
                    polarity: s.polarity,
                    kind: BlossomKind::Integral,
                }));
            }
        }
    }
    Ok(None)
}

/// Components of the `1/2`-pairs of `x` that are odd cycles, each listed as
/// a tour starting at its least vertex and continuing to that vertex's
/// smaller neighbor. Sorted by least vertex.
pub fn half_cycles(x: &FractionalLabeling) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut nb = vec![0u64; n];
    for (a, b) in x.index().pairs() {
        if x.get(a, b) == half() {
            nb[a] |= bit(b);
            nb[b] |= bit(a);
        }
    }
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..n {
        if seen & bit(start) != 0 || nb[start] == 0 {
            continue;
        }
        // collect the component
        let mut comp = bit(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in mask_vertices(nb[u] & !comp) {
                comp |= bit(v);
                stack.push(v);
            }
        }
        seen |= comp;
        let size = comp.count_ones() as usize;
        let is_cycle = mask_vertices(comp).all(|v| nb[v].count_ones() == 2);
        if !is_cycle || size % 2 == 0 {
            continue;
        }
        let mut tour = vec![start];
        let mut prev = start;
        let mut cur = nb[start].trailing_zeros() as usize;
        while cur != start {
            tour.push(cur);
            let next = (nb[cur] & !bit(prev)).trailing_zeros() as usize;
            prev = cur;
            cur = next;
        }
        out.push(tour);
    }
    out
}

/// A fractional blossom across the two odd `1/2`-cycles of `x` that contain
/// the smallest vertex ids, joined through the least cross pair (their two
/// least vertices). Absent when `x` has fewer than two odd `1/2`-cycles.
pub fn find_fractional_blossom(x: &FractionalLabeling) -> Result<Option<Blossom>> {
    if !x.is_half_integral_unit() {
        return Err(Error::Domain("labels must all be 0, 1/2 or 1".into()));
    }
    let cycles = half_cycles(x);
    let [first, second, ..] = cycles.as_slice() else {
        return Ok(None);
    };
    let join = x.get(first[0], second[0]);
    debug_assert!(join.is_zero() || join.is_one());
    Ok(Some(Blossom {
        v_tour: first.clone(),
        w_tour: second.clone(),
        polarity: u8::from(join.is_one()),
        kind: BlossomKind::Fractional,
    }))
}
