//! The three 8-vertex example graphs, transcribed from their drawing.

use crate::graph::{parse_edge_list, Graph};

pub const G1_EDGES: &str = "\
n 8
1 2
1 5
1 7
1 8
2 5
2 6
2 7
2 8
3 7
3 8
4 5
4 6
4 7
4 8
5 6
5 7
5 8
6 8
7 8
";

pub const G2_EDGES: &str = "\
n 8
1 3
1 7
1 8
2 3
2 5
2 6
2 7
3 4
3 5
3 6
3 8
4 5
4 7
5 6
5 7
";

pub const G3_EDGES: &str = "\
n 8
1 7
1 8
2 3
2 4
2 5
2 6
2 7
3 4
3 5
3 7
3 8
4 8
5 6
6 7
6 8
7 8
";

/// `(name, graph)` for each example graph.
pub fn example_graphs() -> [(&'static str, Graph); 3] {
    let parse = |text| parse_edge_list(text).expect("embedded edge list");
    [
        ("G1", parse(G1_EDGES)),
        ("G2", parse(G2_EDGES)),
        ("G3", parse(G3_EDGES)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_degrees() {
        let [(_, g1), (_, g2), (_, g3)] = example_graphs();
        assert_eq!((g1.order(), g1.size()), (8, 19));
        assert_eq!((g2.order(), g2.size()), (8, 15));
        assert_eq!((g3.order(), g3.size()), (8, 16));
        assert_eq!(g1.degree_sequence().as_slice(), &[7, 6, 6, 5, 4, 4, 4, 2]);
        assert_eq!(g2.degree_sequence().as_slice(), &[6, 5, 4, 4, 3, 3, 3, 2]);
        assert_eq!(g3.degree_sequence().as_slice(), &[5, 5, 5, 5, 4, 3, 3, 2]);
        assert!(g1.is_connected() && g2.is_connected() && g3.is_connected());
    }
}
