//! Exhaustive enumeration of small simple graphs.
//!
//! A graph on `n` vertices is identified with a bitmask over the
//! `n(n-1)/2` vertex pairs, bit `j(j-1)/2 + i` standing for the pair
//! `i < j` (the graph6 bit order). Labeled enumeration walks the masks in
//! increasing order. Isomorphism classes are represented by their
//! canonical mask: the minimum mask over all relabelings that list vertices
//! by a degree-based invariant, which is the brute-force minimum restricted
//! to an isomorphism-invariant vertex partition.

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Orders above this are never enumerated, whatever the configured guard.
pub const HARD_MAX_ORDER: usize = 9;

/// Which graphs a corpus contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub dedup_isomorphic: bool,
    pub min_degree_positive: bool,
}

impl CorpusSpec {
    pub fn labeled(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            n_min,
            n_max,
            connected_only: true,
            dedup_isomorphic: false,
            min_degree_positive: true,
        }
    }

    pub fn dedup(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            dedup_isomorphic: true,
            ..CorpusSpec::labeled(n_min, n_max)
        }
    }

    pub fn all(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            n_min,
            n_max,
            connected_only: false,
            dedup_isomorphic: false,
            min_degree_positive: false,
        }
    }

    pub fn validate(&self, limit: usize) -> Result<(), GraphError> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(GraphError::Corpus(format!(
                "need 1 <= n_min <= n_max, got n_min = {}, n_max = {}",
                self.n_min, self.n_max
            )));
        }
        let limit = limit.min(HARD_MAX_ORDER);
        if self.n_max > limit {
            return Err(GraphError::Capacity {
                requested: self.n_max,
                limit,
            });
        }
        Ok(())
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.min_degree_positive || g.min_degree() > 0)
            && (!self.connected_only || g.is_connected())
    }

    /// Splits the corpus into independently iterable pieces, in corpus order.
    pub fn chunks(&self, limit: usize) -> Result<Vec<CorpusChunk>, GraphError> {
        self.validate(limit)?;
        let mut out = Vec::new();
        for n in self.n_min..=self.n_max {
            if self.dedup_isomorphic {
                let classes = isomorphism_classes(n);
                let step = classes.len().div_ceil(64).max(1);
                let mut start = 0;
                while start < classes.len() {
                    let end = (start + step).min(classes.len());
                    out.push(CorpusChunk {
                        spec: *self,
                        n,
                        source: Source::Classes {
                            masks: Arc::clone(&classes),
                            range: start..end,
                        },
                    });
                    start = end;
                }
            } else {
                let total = 1u64 << pair_count(n);
                let step = (total / 256).max(1);
                let mut start = 0;
                while start < total {
                    let end = (start + step).min(total);
                    out.push(CorpusChunk {
                        spec: *self,
                        n,
                        source: Source::Labeled(start..end),
                    });
                    start = end;
                }
            }
        }
        Ok(out)
    }
}

/// A contiguous slice of a corpus.
#[derive(Debug, Clone)]
pub struct CorpusChunk {
    spec: CorpusSpec,
    n: usize,
    source: Source,
}

#[derive(Debug, Clone)]
enum Source {
    Labeled(Range<u64>),
    Classes {
        masks: Arc<Vec<u64>>,
        range: Range<usize>,
    },
}

impl CorpusChunk {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graphs(&self) -> Box<dyn Iterator<Item = Graph> + Send + '_> {
        let n = self.n;
        let spec = self.spec;
        match &self.source {
            Source::Labeled(range) => Box::new(
                range
                    .clone()
                    .map(move |mask| from_mask(n, mask))
                    .filter(move |g| spec.accepts(g)),
            ),
            Source::Classes { masks, range } => Box::new(
                masks[range.clone()]
                    .iter()
                    .map(move |&mask| from_mask(n, mask))
                    .filter(move |g| spec.accepts(g)),
            ),
        }
    }
}

/// Every graph of the corpus, in corpus order: by `n`, then by mask
/// (canonical mask when deduplicating).
pub fn enumerate_graphs(
    spec: &CorpusSpec,
    limit: usize,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    let chunks = spec.chunks(limit)?;
    Ok(chunks
        .into_iter()
        .flat_map(|c| c.graphs().collect::<Vec<_>>()))
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_bit(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (j * (j - 1) / 2 + i) as u32
}

pub(crate) fn from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
fn to_mask(g: &Graph) -> u64 {
    g.edges().fold(0, |m, (i, j)| m | 1 << pair_bit(i, j))
}

/// Canonical mask of `g`: equal for two graphs iff they are isomorphic.
///
/// Panics if `g` has more than 11 vertices (the mask would not fit in 64 bits).
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.order();
    assert!(pair_count(n) <= 64, "canonical_mask supports n <= 11");
    let deg = g.degrees();
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
        nd.sort_unstable_by(|a, b| b.cmp(a));
        (deg[v], nd)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[b].cmp(&keys[a]).then(a.cmp(&b)));

    // cells of equal key, as ranges of `order`
    let mut cells: Vec<Range<usize>> = Vec::new();
    let mut start = 0;
    for p in 1..=n {
        if p == n || keys[order[p]] != keys[order[start]] {
            cells.push(start..p);
            start = p;
        }
    }
    for c in &cells {
        order[c.clone()].sort_unstable();
    }

    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        for b in 1..n {
            for a in 0..b {
                if g.is_adjacent(order[a], order[b]) {
                    mask |= 1 << pair_bit(a, b);
                }
            }
        }
        best = best.min(mask);

        let mut advanced = false;
        for c in cells.iter().rev() {
            if next_permutation(&mut order[c.clone()]) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            return best;
        }
    }
}

/// Lexicographic successor. Returns `false` and leaves the slice sorted
/// ascending once the last permutation has been passed.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Canonical masks of all graphs on `n` vertices, sorted ascending.
///
/// Built by extension: every graph on `n` vertices is some `(n-1)`-vertex
/// graph plus one vertex, so adding each neighbourhood subset to each
/// class representative of order `n-1` reaches every class.
fn isomorphism_classes(n: usize) -> Arc<Vec<u64>> {
    static CACHE: [OnceLock<Arc<Vec<u64>>>; HARD_MAX_ORDER + 1] =
        [const { OnceLock::new() }; HARD_MAX_ORDER + 1];
    CACHE[n]
        .get_or_init(|| {
            if n == 1 {
                return Arc::new(vec![0]);
            }
            let smaller = isomorphism_classes(n - 1);
            let mut found = BTreeSet::new();
            for &mask in smaller.iter() {
                let base = from_mask(n - 1, mask);
                for nbhd in 0u32..(1 << (n - 1)) {
                    let mut g = Graph::empty(n).expect("n >= 1");
                    for (u, v) in base.edges() {
                        g.add_edge(u, v);
                    }
                    for u in 0..n - 1 {
                        if nbhd >> u & 1 == 1 {
                            g.add_edge(u, n - 1);
                        }
                    }
                    found.insert(canonical_mask(&g));
                }
            }
            Arc::new(found.into_iter().collect())
        })
        .clone()
}
