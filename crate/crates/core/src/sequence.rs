use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A weakly decreasing list of nonnegative integers with every term at most
/// `n - 1`, where `n` is the number of terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    terms: Vec<usize>,
}

impl DegreeSequence {
    /// Wraps an already weakly decreasing list.
    pub fn new(terms: Vec<usize>) -> Result<Self> {
        if let Some(i) = terms.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "sequence is not weakly decreasing at position {}",
                i + 2
            )));
        }
        let n = terms.len();
        if let Some(&t) = terms.iter().find(|&&t| t >= n.max(1)) {
            return Err(Error::Domain(format!(
                "term {t} exceeds n - 1 = {}",
                n.saturating_sub(1)
            )));
        }
        Ok(DegreeSequence { terms })
    }

    /// Sorts an arbitrary list into weakly decreasing order.
    ///
    /// Returns the sequence together with `order`, where `order[i]` is the
    /// caller's index of the term now at position `i`. Ties keep the caller's
    /// relative order.
    pub fn sorted(terms: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut order: Vec<usize> = (0..terms.len()).collect();
        order.sort_by(|&a, &b| terms[b].cmp(&terms[a]).then(a.cmp(&b)));
        let sorted = order.iter().map(|&i| terms[i]).collect();
        Ok((Self::new(sorted)?, order))
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.terms.iter().sum()
    }

    /// `d_i` with the 1-based index used in the literature.
    #[inline]
    pub fn term(&self, i: usize) -> usize {
        self.terms[i - 1]
    }

    /// Whether `self` majorizes `other`: equal length and sum, and every
    /// prefix sum of `self` is at least the matching prefix sum of `other`.
    pub fn majorizes(&self, other: &DegreeSequence) -> bool {
        if self.len() != other.len() || self.sum() != other.sum() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        self.terms.iter().zip(&other.terms).all(|(&x, &y)| {
            a += x;
            b += y;
            a >= b
        })
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
