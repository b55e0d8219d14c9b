//! graph6: the size `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per
//! byte, most significant bit first, each byte offset by 63.

use crate::graph::{LabeledGraph, MAX_VERTICES};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Domain(format!("graph6: {}", msg.into()))
}

fn sextet(b: u8, pos: usize) -> Result<u64> {
    if (63..=126).contains(&b) {
        Ok(u64::from(b - 63))
    } else {
        Err(err(format!("byte `{}` at offset {pos} is outside 63..=126", b.escape_ascii())))
    }
}

/// Reads one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<LabeledGraph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (n, body) = match bytes {
        [] => return Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated 8-byte size field"));
            }
            let mut n = 0u64;
            for (i, &b) in rest[..6].iter().enumerate() {
                n = n << 6 | sextet(b, i + 2)?;
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated 4-byte size field"));
            }
            let mut n = 0u64;
            for (i, &b) in rest[..3].iter().enumerate() {
                n = n << 6 | sextet(b, i + 1)?;
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (sextet(*first, 0)?, rest),
    };
    if n > MAX_VERTICES as u64 {
        return Err(err(format!("n = {n} exceeds {MAX_VERTICES} vertices")));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let offset = bytes.len() - body.len();
    let mut g = LabeledGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6], offset + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1], offset + expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Writes `g` in graph6 without header or newline.
pub fn to_graph6(g: &LabeledGraph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
