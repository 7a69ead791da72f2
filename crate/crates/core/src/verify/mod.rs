//! Exhaustive verification campaigns over graph corpora.
//!
//! Each property produces a [`VerificationReport`]. Checks that depend on
//! the degree sequence alone run once per distinct sequence; the report
//! names the smallest graph6 string carrying that sequence.

mod checks;
pub mod examples;
mod table1;
pub mod transcribe;

pub use checks::{
    check_amhm_chain, check_dominance, check_equality_iff, check_identities, check_spectral,
    check_validity, dominance_claims, find_incomparability_witnesses, DominanceClaim, Side,
    DEFAULT_ALPHAS,
};
pub use table1::{reproduce_table1, Classification, Discrepancy, Table1, Table1Row};

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{CorpusSpec, DegreeSequence, Graph, GraphError};
use crate::scalar::Scalar;

/// Enumeration guard used when nothing else is configured.
pub const DEFAULT_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PropertyId {
    #[serde(rename = "P1_validity")]
    P1Validity,
    #[serde(rename = "P2_equality_iff")]
    P2EqualityIff,
    #[serde(rename = "P3_dominance")]
    P3Dominance,
    #[serde(rename = "P4_identities")]
    P4Identities,
    #[serde(rename = "P5_incomparability")]
    P5Incomparability,
    #[serde(rename = "P6_amhm_chain")]
    P6AmhmChain,
    #[serde(rename = "P7_table1")]
    P7Table1,
}

impl PropertyId {
    pub const ALL: [PropertyId; 7] = [
        PropertyId::P1Validity,
        PropertyId::P2EqualityIff,
        PropertyId::P3Dominance,
        PropertyId::P4Identities,
        PropertyId::P5Incomparability,
        PropertyId::P6AmhmChain,
        PropertyId::P7Table1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::P1Validity => "P1_validity",
            PropertyId::P2EqualityIff => "P2_equality_iff",
            PropertyId::P3Dominance => "P3_dominance",
            PropertyId::P4Identities => "P4_identities",
            PropertyId::P5Incomparability => "P5_incomparability",
            PropertyId::P6AmhmChain => "P6_amhm_chain",
            PropertyId::P7Table1 => "P7_table1",
        }
    }

    /// Existential properties pass when witnesses are found.
    pub fn is_existential(self) -> bool {
        self == PropertyId::P5Incomparability
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = String;

    /// Accepts `P3`, `p3`, `P3_dominance` or `dominance`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        PropertyId::ALL
            .into_iter()
            .find(|p| {
                let full = p.as_str();
                let (short, name) = full.split_once('_').expect("underscore");
                s.eq_ignore_ascii_case(full) || s.eq_ignore_ascii_case(short) || s == name
            })
            .ok_or_else(|| format!("unknown property {s:?} (expected P1..P7)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Every failure is a documented disagreement with a stated claim.
    Finding,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Finding => "finding",
            Status::Fail => "fail",
        })
    }
}

/// Whether a failed check disagrees with a stated claim or with our own
/// arithmetic, decided by re-evaluating the independent transcription.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Triage {
    ClaimFalsified,
    ImplementationBug,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub bound: String,
    pub lhs: Option<Scalar>,
    pub rhs: Option<Scalar>,
    pub context: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triage: Option<Triage>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub claim: String,
    pub detail: String,
}

/// A union of corpus specifications, swept in order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Corpus {
    pub parts: Vec<CorpusSpec>,
}

impl Corpus {
    pub fn single(spec: CorpusSpec) -> Self {
        Corpus { parts: vec![spec] }
    }

    /// Connected graphs with `δ >= 1`: labeled for `3 <= n <= 6`, one per
    /// isomorphism class for `n = 7`.
    pub fn standard() -> Self {
        Corpus {
            parts: vec![CorpusSpec::labeled(3, 6), CorpusSpec::dedup(7, 7)],
        }
    }

    pub fn validate(&self, limit: usize) -> Result<(), GraphError> {
        self.parts.iter().try_for_each(|p| p.validate(limit))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub property: PropertyId,
    pub corpus: Option<Corpus>,
    pub graphs_checked: usize,
    pub degree_sequences: usize,
    pub checks: usize,
    /// Hypothesis-not-met counts keyed by reason.
    pub skipped: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<Witness>,
    pub status: Status,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table1>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "property         {}", self.property);
        let _ = writeln!(out, "status           {}", self.status);
        let _ = writeln!(out, "graphs checked   {}", self.graphs_checked);
        let _ = writeln!(out, "degree sequences {}", self.degree_sequences);
        let _ = writeln!(out, "checks           {}", self.checks);
        let skipped: usize = self.skipped.values().sum();
        let _ = writeln!(out, "skipped          {skipped}");
        for (reason, count) in &self.skipped {
            let _ = writeln!(out, "  {count:>8}  {reason}");
        }
        if let Some(table) = &self.table {
            out.push_str(&table.to_text());
        }
        if !self.violations.is_empty() {
            let _ = writeln!(out, "violations       {}", self.violations.len());
            let rows: Vec<[String; 5]> = self
                .violations
                .iter()
                .map(|v| {
                    [
                        v.graph6.clone(),
                        v.bound.clone(),
                        v.lhs.as_ref().map_or("-".into(), |s| s.to_string()),
                        v.rhs.as_ref().map_or("-".into(), |s| s.to_string()),
                        match v.triage {
                            Some(t) => format!("{} ({t:?})", v.context),
                            None => v.context.clone(),
                        },
                    ]
                })
                .collect();
            out.push_str(&align(&["graph6", "bound", "lhs", "rhs", "context"], &rows));
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses        {}", self.witnesses.len());
            let rows: Vec<[String; 3]> = self
                .witnesses
                .iter()
                .map(|w| [w.claim.clone(), w.graph6.clone(), w.detail.clone()])
                .collect();
            out.push_str(&align(&["claim", "graph6", "detail"], &rows));
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

pub(crate) fn align<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::from("  ");
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == N {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                s.push_str(cell);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(|c| c.as_str()).collect());
    }
    out
}

/// Counters and findings gathered by one worker.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checks: usize,
    pub skipped: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<Witness>,
}

impl Tally {
    pub fn skip(&mut self, reason: impl Into<String>) {
        *self.skipped.entry(reason.into()).or_default() += 1;
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self.witnesses.extend(other.witnesses);
        self
    }
}

/// Distinct degree sequences of a sweep with their smallest graph6.
pub(crate) type Sequences = BTreeMap<Vec<usize>, String>;

pub(crate) struct Sweep {
    pub graphs: usize,
    pub sequences: Sequences,
    pub tally: Tally,
}

/// Visits every corpus graph in parallel, collecting distinct degree
/// sequences and running `per_graph` on each graph.
pub(crate) fn sweep<F>(corpus: &Corpus, limit: usize, per_graph: F) -> Result<Sweep, GraphError>
where
    F: Fn(&Graph, &str, &mut Tally) + Sync,
{
    corpus.validate(limit)?;
    let mut chunks = Vec::new();
    for part in &corpus.parts {
        chunks.extend(part.chunks(limit)?);
    }
    let (graphs, sequences, tally) = chunks
        .par_iter()
        .map(|chunk| {
            let mut tally = Tally::default();
            let mut seqs = Sequences::new();
            let mut count = 0;
            for g in chunk.graphs() {
                count += 1;
                let code = g.to_graph6();
                let key = g.degree_sequence().as_slice().to_vec();
                match seqs.get_mut(&key) {
                    Some(best) if *best <= code => {}
                    Some(best) => *best = code.clone(),
                    None => {
                        seqs.insert(key, code.clone());
                    }
                }
                per_graph(&g, &code, &mut tally);
            }
            (count, seqs, tally)
        })
        .reduce(
            || (0, Sequences::new(), Tally::default()),
            |(c1, mut s1, t1), (c2, s2, t2)| {
                for (k, code) in s2 {
                    match s1.get_mut(&k) {
                        Some(best) if *best <= code => {}
                        Some(best) => *best = code,
                        None => {
                            s1.insert(k, code);
                        }
                    }
                }
                (c1 + c2, s1, t1.merge(t2))
            },
        );
    Ok(Sweep {
        graphs,
        sequences,
        tally,
    })
}

/// Runs `per_sequence` once for every distinct degree sequence, in parallel.
pub(crate) fn per_sequence<F>(sequences: &Sequences, f: F) -> Tally
where
    F: Fn(&DegreeSequence, &str, &mut Tally) + Sync,
{
    let entries: Vec<(&Vec<usize>, &String)> = sequences.iter().collect();
    entries
        .par_iter()
        .map(|(degrees, code)| {
            let mut tally = Tally::default();
            f(
                &DegreeSequence::from_degrees((*degrees).clone()),
                code,
                &mut tally,
            );
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

/// Assembles a report with deterministic ordering and the status rule:
/// universal properties pass without violations, a failure made only of
/// falsified stated claims is a finding.
pub(crate) fn finish(
    property: PropertyId,
    corpus: Option<Corpus>,
    graphs: usize,
    sequences: usize,
    mut tally: Tally,
    notes: Vec<String>,
) -> VerificationReport {
    tally
        .violations
        .sort_by(|a, b| (&a.graph6, &a.bound, &a.context).cmp(&(&b.graph6, &b.bound, &b.context)));
    tally
        .witnesses
        .sort_by(|a, b| (&a.claim, &a.graph6).cmp(&(&b.claim, &b.graph6)));
    let status = if tally.violations.is_empty() {
        Status::Pass
    } else if tally
        .violations
        .iter()
        .all(|v| v.triage == Some(Triage::ClaimFalsified))
    {
        Status::Finding
    } else {
        Status::Fail
    };
    VerificationReport {
        property,
        corpus,
        graphs_checked: graphs,
        degree_sequences: sequences,
        checks: tally.checks,
        skipped: tally.skipped,
        violations: tally.violations,
        witnesses: tally.witnesses,
        status,
        notes,
        table: None,
    }
}

/// Runs one property with its default parameters.
pub fn run_property(
    property: PropertyId,
    corpus: &Corpus,
    limit: usize,
) -> Result<VerificationReport, GraphError> {
    use crate::bounds::BoundId;
    match property {
        PropertyId::P1Validity => check_validity(corpus, BoundId::ALL, &DEFAULT_ALPHAS, limit),
        PropertyId::P2EqualityIff => check_equality_iff(corpus, &checks::EQUALITY_IDS, limit),
        PropertyId::P3Dominance => check_dominance(corpus, &dominance_claims(), limit),
        PropertyId::P4Identities => check_identities(corpus, limit),
        PropertyId::P5Incomparability => find_incomparability_witnesses(
            corpus,
            &[BoundId::CorZte2, BoundId::CorZ2te1, BoundId::CorZ2te2],
            true,
            limit,
        ),
        PropertyId::P6AmhmChain => check_amhm_chain(corpus, limit),
        PropertyId::P7Table1 => Ok(reproduce_table1()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_parse() {
        assert_eq!("P3".parse::<PropertyId>().unwrap(), PropertyId::P3Dominance);
        assert_eq!("p1".parse::<PropertyId>().unwrap(), PropertyId::P1Validity);
        assert_eq!(
            "P7_table1".parse::<PropertyId>().unwrap(),
            PropertyId::P7Table1
        );
        assert_eq!(
            "identities".parse::<PropertyId>().unwrap(),
            PropertyId::P4Identities
        );
        assert!("P8".parse::<PropertyId>().is_err());
    }

    #[test]
    fn sweep_counts_and_representatives() {
        let s = sweep(&Corpus::single(CorpusSpec::labeled(3, 4)), 8, |_, _, t| {
            t.checks += 1
        })
        .unwrap();
        assert_eq!(s.graphs, 4 + 38);
        assert_eq!(s.tally.checks, 42);
        // P3 and K3 at n = 3, six sequences at n = 4
        assert_eq!(s.sequences.len(), 2 + 6);
        assert_eq!(s.sequences[&vec![2, 2, 2]], "Bw");
    }

    #[test]
    fn guard_is_enforced() {
        let err = sweep(&Corpus::single(CorpusSpec::labeled(3, 9)), 8, |_, _, _| {}).err();
        assert!(matches!(
            err,
            Some(GraphError::Capacity {
                requested: 9,
                limit: 8
            })
        ));
    }
}
