#![no_main]

use coxangle::{parse_spec, render_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = parse_spec(text) {
        let rendered = render_spec(&doc.payload);
        let again = parse_spec(&rendered).expect("rendered spec parses");
        assert_eq!(again.payload, doc.payload);
    }
});
