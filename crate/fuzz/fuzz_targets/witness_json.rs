#![no_main]

//! Witness files, replayed against a fixed 4-cycle with a chord.

use libfuzzer_sys::fuzz_target;
use treeflip_core::graph::{Graph, LeafConstraint, SpanningTree};
use treeflip_core::instance::parse_witness;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(w) = parse_witness(s) else {
        return;
    };
    let text = serde_json::to_string(&w).expect("witness serializes");
    assert_eq!(parse_witness(&text).expect("witness reparses"), w);
    let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
    let t1 = SpanningTree::from_pairs(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let t2 = SpanningTree::from_pairs(&g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let _ = w.validate(&g, &t1, &t2, None);
    let _ = w.validate(&g, &t1, &t2, Some(&LeafConstraint::at_least(3)));
});
