//! Fractional labelings: one `i j p/q` line per pair, 1-based; pairs not
//! listed are `0`. A value may also be written as an integer.

use num_traits::Zero;

use super::{bad_token, vertex_id};
use crate::labeling::{FractionalLabeling, Rational};
use crate::{Error, Result};

fn parse_value(token: &str, line: usize) -> Result<Rational> {
    let bad = || bad_token("label", token, line);
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Reads a labeling of the pairs of `1..=n`.
pub fn parse_labeling(text: &str, n: usize) -> Result<FractionalLabeling> {
    let mut x = FractionalLabeling::zeros(n);
    let mut seen = vec![false; x.index().len()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), Some(v), None) = (tokens.next(), tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(bad_token("labeling line", trimmed, line));
        };
        let (u, w) = (vertex_id(a, n, line)?, vertex_id(b, n, line)?);
        if u == w {
            return Err(Error::Domain(format!("line {line}: loop `{trimmed}`")));
        }
        let k = x.index().index(u, w);
        if seen[k] {
            return Err(Error::Domain(format!("line {line}: repeated pair `{trimmed}`")));
        }
        seen[k] = true;
        x.set(u, w, parse_value(v, line)?);
    }
    Ok(x)
}

/// Writes the nonzero labels in pair order.
pub fn to_labeling_text(x: &FractionalLabeling) -> String {
    let mut out = String::new();
    for (k, v) in x.values().iter().enumerate() {
        if !v.is_zero() {
            let (i, j) = x.index().pair(k);
            out.push_str(&format!("{} {} {}\n", i + 1, j + 1, v));
        }
    }
    out
}
