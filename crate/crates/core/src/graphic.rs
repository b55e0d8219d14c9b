//! Graphicality, the Erdős–Gallai inequalities and their distinguished
//! indices, and Havel–Hakimi realizations.

use serde::Serialize;

use crate::graph::LabeledGraph;
use crate::sequence::DegreeSequence;
use crate::{Error, Result};

/// Both sides of every Erdős–Gallai inequality of a sequence, with the
/// indices derived from them. All indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgProfile {
    /// `lhs[k] = d_1 + ... + d_k` for `k = 0..=n`.
    pub lhs: Vec<usize>,
    /// `rhs[k] = k(k-1) + sum_{i>k} min(k, d_i)` for `k = 0..=n`.
    pub rhs: Vec<usize>,
    /// Every `k` with `lhs[k] == rhs[k]`; always contains `0`.
    pub equality_set: Vec<usize>,
    /// Largest element of `equality_set`.
    pub k_star: usize,
    /// `max{i : d_i >= i - 1}` (`0` for the empty sequence).
    pub m_star: usize,
    /// `max{i > k_star : d_i >= k_star}`, absent when no such `i` exists.
    pub ell_star: Option<usize>,
    /// `max{i > k_star : d_i > k_star}`, absent when no such `i` exists.
    ///
    /// Positions `k_star + 1 ..= core_end` are exactly the vertices outside
    /// the top-`k_star` clique that have a neighbor beyond it. This differs
    /// from `ell_star` only when some term after `k_star` equals `k_star`.
    pub core_end: Option<usize>,
}

/// Evaluates both sides of the `k`th Erdős–Gallai inequality.
fn eg_sides(d: &[usize], k: usize) -> (usize, usize) {
    let lhs = d[..k].iter().sum();
    let rhs = k * k.saturating_sub(1) + d[k..].iter().map(|&t| t.min(k)).sum::<usize>();
    (lhs, rhs)
}

/// Whether an arbitrary list of nonnegative integers is graphic. The list
/// need not be sorted and may contain terms larger than `n - 1`.
pub fn is_graphic_list(terms: &[usize]) -> bool {
    let n = terms.len();
    if terms.iter().any(|&t| t >= n.max(1)) {
        return false;
    }
    let mut d = terms.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    (1..=n).all(|k| {
        let (l, r) = eg_sides(&d, k);
        l <= r
    })
}

/// Whether `d` is the degree sequence of a simple graph: even sum and all
/// Erdős–Gallai inequalities.
pub fn is_graphic(d: &DegreeSequence) -> bool {
    is_graphic_list(d.terms())
}

/// `max{i : d_i >= i - 1}`, 1-based.
pub fn m_star(d: &DegreeSequence) -> usize {
    d.terms()
        .iter()
        .enumerate()
        .filter(|&(i, &t)| t + 1 >= i + 1)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

pub fn eg_profile(d: &DegreeSequence) -> Result<EgProfile> {
    if !is_graphic(d) {
        return Err(Error::Domain(format!("({d}) is not graphic")));
    }
    let terms = d.terms();
    let n = terms.len();
    let (lhs, rhs): (Vec<_>, Vec<_>) = (0..=n).map(|k| eg_sides(terms, k)).unzip();
    let equality_set: Vec<usize> = (0..=n).filter(|&k| lhs[k] == rhs[k]).collect();
    let k_star = *equality_set.last().expect("k = 0 is always tight");
    let last_after = |pred: &dyn Fn(usize) -> bool| {
        (k_star + 1..=n).filter(|&i| pred(d.term(i))).max()
    };
    Ok(EgProfile {
        ell_star: last_after(&|t| t >= k_star),
        core_end: last_after(&|t| t > k_star),
        m_star: m_star(d),
        lhs,
        rhs,
        equality_set,
        k_star,
    })
}

/// Havel–Hakimi realization of a weakly decreasing graphic sequence; vertex
/// `i` receives degree `d_{i+1}`.
///
/// Each step takes the unprocessed vertex of largest residual degree and
/// joins it to the unprocessed vertices of next-largest residual degree.
/// Residual ties are broken by ascending vertex id.
pub fn havel_hakimi(d: &DegreeSequence) -> Result<LabeledGraph> {
    if !is_graphic(d) {
        return Err(Error::Domain(format!("({d}) is not graphic")));
    }
    havel_hakimi_unchecked(d.terms())
}

fn havel_hakimi_unchecked(terms: &[usize]) -> Result<LabeledGraph> {
    let n = terms.len();
    let mut g = LabeledGraph::empty(n)?;
    let mut residual = terms.to_vec();
    let mut open: Vec<usize> = (0..n).collect();
    while let Some(pos) = (0..open.len()).max_by(|&a, &b| {
        residual[open[a]]
            .cmp(&residual[open[b]])
            .then(open[b].cmp(&open[a]))
    }) {
        let v = open.remove(pos);
        let need = residual[v];
        residual[v] = 0;
        let mut targets = open.clone();
        targets.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        if need > targets.len() || targets[..need].iter().any(|&u| residual[u] == 0) {
            return Err(Error::InvariantViolation(
                "Havel–Hakimi ran out of residual degree on a graphic input".into(),
            ));
        }
        for &u in &targets[..need] {
            g.set_edge(v, u, true);
            residual[u] -= 1;
        }
    }
    Ok(g)
}

/// Havel–Hakimi realization of an unsorted list, labeled so that caller
/// vertex `i` has degree `terms[i]`.
pub fn havel_hakimi_list(terms: &[usize]) -> Result<LabeledGraph> {
    if !is_graphic_list(terms) {
        return Err(Error::Domain("sequence is not graphic".into()));
    }
    let (d, order) = DegreeSequence::sorted(terms)?;
    let g = havel_hakimi_unchecked(d.terms())?;
    // sorted position i is caller vertex order[i]
    g.relabel(&order)
}

/// All weakly decreasing sequences of length `n` with terms in `0..n`
/// (terms `0` when `n <= 1`), in lexicographically decreasing order.
pub fn sequences(n: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            out.push(DegreeSequence::new(cur.clone()).expect("bounded and decreasing"));
            return;
        }
        for t in (0..=cap).rev() {
            cur.push(t);
            rec(n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.saturating_sub(1), &mut Vec::with_capacity(n), &mut out);
    out
}

/// All graphic sequences of length `n`.
pub fn graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    sequences(n).into_iter().filter(is_graphic).collect()
}
