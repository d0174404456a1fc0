#![no_main]

//! Interval representations as `[l_num, l_den, r_num, r_den]` rows.

use libfuzzer_sys::fuzz_target;
use treeflip_core::graph::{validate_interval, IntervalRepresentation};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rep) = serde_json::from_str::<IntervalRepresentation>(s) else {
        return;
    };
    let text = serde_json::to_string(&rep).expect("representation serializes");
    assert_eq!(serde_json::from_str::<IntervalRepresentation>(&text).unwrap(), rep);
    if rep.len() <= 64 {
        let g = rep.intersection_graph();
        let _ = validate_interval(&g, &rep);
        let _ = rep.by_right();
    }
});
