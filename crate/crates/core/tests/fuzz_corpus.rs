//! Replays the checked-in fuzz seeds through the round-trip properties the
//! fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use degpoly::formats::{
    parse_degree_sequence, parse_edge_list, parse_graph6, parse_labeling, to_edge_list, to_graph6,
    to_labeling_text,
};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn graph6_seeds_round_trip() {
    let mut parsed = 0;
    for data in seeds("graph6") {
        if let Ok(g) = parse_graph6(std::str::from_utf8(&data).unwrap()) {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn edge_list_seeds_round_trip() {
    for data in seeds("edge_list") {
        let g = parse_edge_list(std::str::from_utf8(&data).unwrap()).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn labeling_seeds_round_trip() {
    for data in seeds("labeling") {
        let (&n, rest) = data.split_first().unwrap();
        let n = usize::from(n % 12);
        let x = parse_labeling(std::str::from_utf8(rest).unwrap(), n).unwrap();
        assert_eq!(parse_labeling(&to_labeling_text(&x), n).unwrap(), x);
    }
}

#[test]
fn degree_sequence_seeds_parse() {
    for data in seeds("degree_sequence") {
        parse_degree_sequence(std::str::from_utf8(&data).unwrap()).unwrap();
    }
}
