use serde::{Deserialize, Serialize};

use super::GraphError;

/// Vertex degrees sorted non-increasingly: `d_1 = Δ >= d_2 >= ... >= d_n = δ`.
///
/// Positions passed to [`DegreeSequence::get`] and friends are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts an arbitrary degree list. Graphicality is not checked.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        assert!(!degrees.is_empty(), "degree sequence of an empty graph");
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `d_pos` for `1 <= pos <= n`.
    pub fn get(&self, pos: usize) -> usize {
        self.degrees[pos - 1]
    }

    pub fn max(&self) -> usize {
        self.degrees[0]
    }

    pub fn second(&self) -> usize {
        self.get(2.min(self.len()))
    }

    /// `d_{n-1}`.
    pub fn second_min(&self) -> usize {
        self.get(self.len().saturating_sub(1).max(1))
    }

    pub fn min(&self) -> usize {
        self.degrees[self.len() - 1]
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// `m`, from the handshake lemma.
    pub fn edge_count(&self) -> usize {
        self.degree_sum() / 2
    }

    /// Whether `d_i = d_{i+1} = ... = d_j`.
    pub fn in_gamma(&self, class: GammaClass) -> Result<bool, GraphError> {
        let n = self.len();
        if class.i == 0 || class.i >= class.j || class.j > n {
            return Err(GraphError::GammaParameter {
                i: class.i,
                j: class.j,
                n,
            });
        }
        Ok(self.run_constant(class.i, class.j))
    }

    pub fn is_regular(&self) -> bool {
        self.max() == self.min()
    }

    fn run_constant(&self, i: usize, j: usize) -> bool {
        // sorted, so the endpoints decide
        self.get(i) == self.get(j)
    }

    /// Membership flags for the classes that show up in the equality statements.
    pub fn named_gamma_flags(&self) -> Vec<(GammaPattern, bool)> {
        GammaPattern::NAMED
            .iter()
            .map(|p| (*p, p.holds(self)))
            .collect()
    }
}

/// `Γ_{i,j}`: graphs whose sorted degrees are constant on positions `i..=j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaClass {
    pub i: usize,
    pub j: usize,
}

impl GammaClass {
    pub fn new(i: usize, j: usize) -> Self {
        GammaClass { i, j }
    }
}

/// A position counted from the front (`Start(1)` is `d_1`) or from the back
/// (`End(0)` is `d_n`, `End(2)` is `d_{n-2}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelPos {
    Start(usize),
    End(usize),
}

impl RelPos {
    pub fn resolve(self, n: usize) -> Option<usize> {
        match self {
            RelPos::Start(p) if p >= 1 && p <= n => Some(p),
            RelPos::End(k) if k < n => Some(n - k),
            _ => None,
        }
    }
}

impl std::fmt::Display for RelPos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelPos::Start(p) => write!(f, "{p}"),
            RelPos::End(0) => write!(f, "n"),
            RelPos::End(k) => write!(f, "n-{k}"),
        }
    }
}

/// A Γ class written relative to `n`, such as `Γ_{2,n-1}`.
///
/// When the resolved range has a single position (for example `Γ_{2,n-1}`
/// at `n = 3`) the condition `d_i = ... = d_j` is a tautology and
/// [`GammaPattern::holds`] returns `true`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaPattern {
    pub start: RelPos,
    pub end: RelPos,
}

impl GammaPattern {
    pub const fn new(start: RelPos, end: RelPos) -> Self {
        GammaPattern { start, end }
    }

    pub const REGULAR: GammaPattern = GammaPattern::new(RelPos::Start(1), RelPos::End(0));

    pub const NAMED: [GammaPattern; 10] = [
        GammaPattern::REGULAR,
        GammaPattern::new(RelPos::Start(2), RelPos::End(1)),
        GammaPattern::new(RelPos::Start(1), RelPos::End(1)),
        GammaPattern::new(RelPos::Start(2), RelPos::End(0)),
        GammaPattern::new(RelPos::Start(1), RelPos::End(2)),
        GammaPattern::new(RelPos::Start(3), RelPos::End(0)),
        GammaPattern::new(RelPos::Start(3), RelPos::End(1)),
        GammaPattern::new(RelPos::Start(2), RelPos::End(2)),
        GammaPattern::new(RelPos::Start(3), RelPos::End(2)),
        GammaPattern::new(RelPos::Start(1), RelPos::End(3)),
    ];

    /// `None` when a position falls outside `1..=n` or the range is reversed.
    pub fn resolve(&self, n: usize) -> Option<(usize, usize)> {
        let i = self.start.resolve(n)?;
        let j = self.end.resolve(n)?;
        (i <= j).then_some((i, j))
    }

    pub fn holds(&self, ds: &DegreeSequence) -> bool {
        match self.resolve(ds.len()) {
            Some((i, j)) if i < j => ds.run_constant(i, j),
            Some(_) => true,
            None => false,
        }
    }
}

impl std::fmt::Display for GammaPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Γ_{{{},{}}}", self.start, self.end)
    }
}
