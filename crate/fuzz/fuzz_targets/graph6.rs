#![no_main]

use degpoly::formats::{parse_graph6, to_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph6(s) {
        let again = parse_graph6(&to_graph6(&g)).expect("encoder output must parse");
        assert_eq!(g, again);
    }
});
