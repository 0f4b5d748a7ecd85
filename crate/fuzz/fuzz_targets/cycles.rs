#![no_main]

use coxangle::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<Permutation>() {
        let again: Permutation = p.to_string().parse().expect("display parses");
        assert_eq!(again, p);
        assert!(p.compose(&p.inverse()).is_identity());
    }
});
