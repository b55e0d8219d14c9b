//! Edge lists: `n` on the first line, then one `i j` pair per line, 1-based.
//! Blank lines are ignored.

use super::{bad_token, vertex_id};
use crate::graph::{LabeledGraph, MAX_VERTICES};
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((first, header)) = lines.next() else {
        return Err(Error::Domain("edge list is empty".into()));
    };
    let n: usize = header.parse().map_err(|_| bad_token("vertex count", header, first))?;
    if n > MAX_VERTICES {
        return Err(Error::Domain(format!(
            "line {first}: vertex count {n} exceeds {MAX_VERTICES}"
        )));
    }
    let mut g = LabeledGraph::empty(n)?;
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(bad_token("edge line", text, line));
        };
        let (u, v) = (vertex_id(a, n, line)?, vertex_id(b, n, line)?);
        if u == v {
            return Err(Error::Domain(format!("line {line}: loop `{text}`")));
        }
        if g.has_edge(u, v) {
            return Err(Error::Domain(format!("line {line}: repeated edge `{text}`")));
        }
        g.set_edge(u, v, true);
    }
    Ok(g)
}

pub fn to_edge_list(g: &LabeledGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
