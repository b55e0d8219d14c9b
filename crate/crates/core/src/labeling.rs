//! Pair coordinates and exact-rational labelings of the complete graph.

use std::fmt;

use num_traits::{One, Zero};

use crate::graph::LabeledGraph;
use crate::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub(crate) fn half() -> Rational {
    Rational::new(1, 2)
}

/// Bijection between unordered pairs `{i, j}` (`i < j`) of `0..n` and the
/// coordinates `0..n(n-1)/2`, in lexicographic pair order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeIndex {
    n: usize,
}

impl EdgeIndex {
    pub fn new(n: usize) -> Self {
        EdgeIndex { n }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of coordinates, `C(n, 2)`.
    pub fn len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate of the pair `{i, j}`; the arguments may come in either order.
    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(i != j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// The pair `(i, j)`, `i < j`, at coordinate `k`.
    pub fn pair(&self, k: usize) -> (usize, usize) {
        debug_assert!(k < self.len());
        let mut i = 0;
        let mut start = 0;
        loop {
            let row = self.n - i - 1;
            if k < start + row {
                return (i, i + 1 + (k - start));
            }
            start += row;
            i += 1;
        }
    }

    /// All pairs in coordinate order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }
}

/// A rational label on every pair of `0..n`, i.e. a point of `R^{C(n,2)}`
/// with lexicographically indexed coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FractionalLabeling {
    n: usize,
    values: Vec<Rational>,
}

impl FractionalLabeling {
    /// All labels zero.
    pub fn zeros(n: usize) -> Self {
        FractionalLabeling {
            n,
            values: vec![Rational::zero(); EdgeIndex::new(n).len()],
        }
    }

    /// Builds a labeling from coordinates in [`EdgeIndex`] order.
    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = EdgeIndex::new(n).len();
        if values.len() != expected {
            return Err(Error::Domain(format!(
                "expected {expected} coordinates for n = {n}, got {}",
                values.len()
            )));
        }
        Ok(FractionalLabeling { n, values })
    }

    /// The characteristic vector of a graph.
    pub fn from_graph(g: &LabeledGraph) -> Self {
        let mut x = Self::zeros(g.order());
        for (u, v) in g.edges() {
            x.set(u, v, Rational::one());
        }
        x
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> EdgeIndex {
        EdgeIndex::new(self.n)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.values[self.index().index(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let k = self.index().index(i, j);
        self.values[k] = value;
    }

    /// Sum of the labels on pairs incident with `v`.
    pub fn vertex_sum(&self, v: usize) -> Rational {
        (0..self.n)
            .filter(|&u| u != v)
            .map(|u| self.get(u, v))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn total(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |a, &b| a + b)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Whether every label is one of `0`, `1/2`, `1`.
    pub fn is_half_integral_unit(&self) -> bool {
        self.values
            .iter()
            .all(|v| v.is_zero() || v.is_one() || *v == half())
    }

    pub fn nonintegral_count(&self) -> usize {
        self.values.iter().filter(|v| !v.is_integer()).count()
    }

    /// Pairs `(i, j)`, `i < j`, carrying a nonintegral label.
    pub fn nonintegral_pairs(&self) -> Vec<(usize, usize)> {
        let idx = self.index();
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_integer())
            .map(|(k, _)| idx.pair(k))
            .collect()
    }

    /// The graph of pairs labeled exactly `1`, if every label is `0` or `1`.
    pub fn to_graph(&self) -> Option<LabeledGraph> {
        let idx = self.index();
        let mut edges = Vec::new();
        for (k, v) in self.values.iter().enumerate() {
            if v.is_one() {
                edges.push(idx.pair(k));
            } else if !v.is_zero() {
                return None;
            }
        }
        LabeledGraph::from_edges(self.n, edges).ok()
    }
}

impl fmt::Debug for FractionalLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FractionalLabeling(n={}, {{", self.n)?;
        let mut first = true;
        for (k, v) in self.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, j) = self.index().pair(k);
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}{}: {}", i + 1, j + 1, v)?;
        }
        write!(f, "}})")
    }
}
