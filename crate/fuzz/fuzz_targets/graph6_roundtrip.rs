#![no_main]
use libfuzzer_sys::fuzz_target;
use zagreb_core::graph::parse_graph6;

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_graph6(text) {
        let encoded = g.to_graph6();
        assert_eq!(parse_graph6(&encoded).unwrap(), g);
        assert_eq!(parse_graph6(&encoded).unwrap().to_graph6(), encoded);
    }
});
