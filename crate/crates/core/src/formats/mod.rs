//! Text formats. Vertex ids are 1-based in every text format and 0-based in
//! the library. Parse errors name the offending token.

mod edge_list;
mod graph6;
mod labeling;
mod sequence;

pub use edge_list::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};
pub use labeling::{parse_labeling, to_labeling_text};
pub use sequence::parse_degree_sequence;

use crate::Error;

fn bad_token(what: &str, token: &str, line: usize) -> Error {
    Error::Domain(format!("line {line}: invalid {what} `{token}`"))
}

/// Parses a 1-based vertex id and checks it against `n`.
fn vertex_id(token: &str, n: usize, line: usize) -> crate::Result<usize> {
    match token.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        _ => Err(Error::Domain(format!(
            "line {line}: vertex `{token}` is not in 1..={n}"
        ))),
    }
}
