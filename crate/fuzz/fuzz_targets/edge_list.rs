#![no_main]
use libfuzzer_sys::fuzz_target;
use zagreb_core::graph::{parse_edge_list, parse_graph6};

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_edge_list(text) {
        let degrees = g.degrees();
        assert_eq!(degrees.iter().sum::<usize>(), 2 * g.size());
        assert!(g.edges().all(|(u, v)| u != v && g.is_adjacent(v, u)));
        assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
    }
});
