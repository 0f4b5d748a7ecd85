#![no_main]

use coxangle::{group_order, CoxeterDiagram};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(name) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = CoxeterDiagram::builtin(name) {
        let ranks: usize = d.component_types().iter().map(|c| c.positions.len()).sum();
        assert_eq!(ranks, d.rank());
        let _ = group_order(&d);
    }
});
