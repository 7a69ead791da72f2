//! Simple undirected graphs and the degree data derived from them.
//!
//! Vertex labels are 0-based inside the library. Parsers and printed output
//! use 1-based labels, and sorted-degree positions are always 1-based
//! (`d_1 = Δ` through `d_n = δ`).

mod degree;
mod edgelist;
mod enumerate;
mod graph6;

pub use degree::{DegreeSequence, GammaClass, GammaPattern, RelPos};
pub use edgelist::parse_edge_list;
pub use enumerate::{canonical_mask, enumerate_graphs, CorpusChunk, CorpusSpec, HARD_MAX_ORDER};
pub use graph6::{encode_graph6, parse_graph6};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: loop not allowed ({label} {label})")]
    Loop { line: usize, label: usize },
    #[error("line {line}: cannot parse {token:?}: {reason}")]
    Parse {
        line: usize,
        token: String,
        reason: &'static str,
    },
    #[error("vertex label {label} out of range 1..={n}")]
    Range { label: usize, n: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    Graph6Format { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("invalid gamma class ({i}, {j}) for n = {n}: need 1 <= i < j <= n")]
    GammaParameter { i: usize, j: usize, n: usize },
    #[error("order {requested} exceeds the supported limit {limit}")]
    Capacity { requested: usize, limit: usize },
    #[error("invalid corpus: {0}")]
    Corpus(String),
}

/// Largest order a [`Graph`] may have; adjacency is stored densely.
pub const MAX_ORDER: usize = 4096;

/// A finite simple graph: symmetric, irreflexive adjacency on `n >= 1` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::Capacity {
                requested: n,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
            m: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from 0-based edges. Duplicate edges collapse; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::Range { label: x + 1, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop {
                    line: 0,
                    label: u + 1,
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `C_n` on vertices 0..n (n >= 3).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.m += 1;
        }
    }

    /// Order `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size `m`.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&a| a)
            .count()
    }

    /// Degrees in vertex-label order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v * self.n + u])
    }

    /// Edges as 0-based `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.adj[u * self.n + v])
                .map(move |v| (u, v))
        })
    }

    /// Unordered pairs `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.adj[u * self.n + v])
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[u * n + v] = u != v && !self.adj[u * n + v];
            }
        }
        Graph {
            n,
            adj,
            m: n * (n - 1) / 2 - self.m,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("n >= 1");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}
