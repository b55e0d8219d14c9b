#![no_main]

use degpoly::formats::parse_degree_sequence;
use degpoly::DegreeSequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(terms) = parse_degree_sequence(s) {
        if let Ok(d) = DegreeSequence::new(terms) {
            let _ = degpoly::graphic::is_graphic(&d);
        }
    }
});
