//! Degree sequences: comma-separated nonnegative integers.

use crate::{Error, Result};

/// Reads the terms in the order given. Whitespace around terms is ignored;
/// an empty or blank string is the empty sequence.
pub fn parse_degree_sequence(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Domain(format!("invalid degree `{tok}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!(parse_degree_sequence("4,3, 2,2,1").unwrap(), vec![4, 3, 2, 2, 1]);
        assert_eq!(parse_degree_sequence(" ").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_degree_sequence("1,2").unwrap(), vec![1, 2]);
    }

    #[test]
    fn errors_name_the_token() {
        let e = parse_degree_sequence("1,x,2").unwrap_err().to_string();
        assert!(e.contains("`x`"), "{e}");
        assert!(parse_degree_sequence("1,,2").is_err());
        assert!(parse_degree_sequence("-1").is_err());
    }
}
