#![no_main]

use degpoly::formats::{parse_labeling, to_labeling_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = usize::from(n % 12);
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(x) = parse_labeling(s, n) {
        assert_eq!(parse_labeling(&to_labeling_text(&x), n).unwrap(), x);
    }
});
