#![no_main]
use libfuzzer_sys::fuzz_target;
use zagreb_core::graph::parse_graph6;

fuzz_target!(|text: &str| {
    let _ = parse_graph6(text);
});
