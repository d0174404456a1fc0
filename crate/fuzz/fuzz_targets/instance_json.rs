#![no_main]

//! Instance files: anything that loads must survive a write/read cycle.

use libfuzzer_sys::fuzz_target;
use treeflip_core::instance::Instance;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = Instance::from_json(s) {
        let again = Instance::from_json(&inst.to_json()).expect("written instance reloads");
        assert_eq!(again, inst);
    }
});
