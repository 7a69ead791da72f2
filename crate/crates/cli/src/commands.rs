use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;
use zagreb_core::bounds::{
    best_bound, evaluate, evaluate_all_specs, BoundError, BoundId, BoundValue, Direction,
};
use zagreb_core::graph::{
    enumerate_graphs, parse_edge_list, parse_graph6, CorpusSpec, Graph, GraphError, HARD_MAX_ORDER,
};
use zagreb_core::indices::{general_zagreb, summarize, IndexValue};
use zagreb_core::scalar::{parse_rational, rational_to_f64, Scalar};
use zagreb_core::verify::{
    reproduce_table1, run_property, Corpus, PropertyId, VerificationReport, DEFAULT_MAX_ORDER,
};

use crate::error::{exit, CliError};
use crate::output::{aligned, approx, decimal, exact, Document, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

/// Reads one graph from a file, or from stdin for `-`.
pub fn read_graph(input: &Path, format: InputFormat) -> Result<Graph, CliError> {
    let text = if input == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", input.display())))?
    };
    Ok(match format {
        InputFormat::Edgelist => parse_edge_list(&text)?,
        InputFormat::Graph6 => parse_graph6(&text)?,
    })
}

/// Enumeration guard from `ZB_MAX_N`, clamped to the hard cap.
pub fn order_limit() -> Result<usize, CliError> {
    match std::env::var("ZB_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_ORDER),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(|v| v.min(HARD_MAX_ORDER))
            .map_err(|_| CliError::input(format!("ZB_MAX_N: invalid order {s:?}"))),
    }
}

fn index_name(v: &IndexValue) -> String {
    let kind = serde_json::to_value(v.kind).expect("unit variant");
    kind.as_str().expect("string").to_string()
}

pub fn compute(graph: &Graph, alphas: &[f64], out: OutputFormat) -> Result<Document, CliError> {
    let s = summarize(graph, alphas)?;
    if out == OutputFormat::Json {
        return Ok(Document::json(&s));
    }
    let mut values: Vec<&IndexValue> = s.general.iter().collect();
    values.extend([&s.m1, &s.m2, &s.f]);
    values.extend(s.id.iter().chain(&s.modified_m1));
    values.extend([
        &s.m1_coindex,
        &s.m2_coindex,
        &s.f_coindex,
        &s.spectral_radius,
    ]);

    let degrees = s
        .degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let mut rows = vec![
        vec!["n".into(), String::new(), s.n.to_string(), s.n.to_string()],
        vec!["m".into(), String::new(), s.m.to_string(), s.m.to_string()],
        vec!["degrees".into(), String::new(), degrees.clone(), degrees],
    ];
    let last = if out == OutputFormat::Csv {
        approx
    } else {
        decimal
    };
    for v in values {
        rows.push(vec![
            index_name(v),
            v.alpha.map(|a| a.to_string()).unwrap_or_default(),
            exact(&v.value),
            last(&v.value),
        ]);
    }
    Ok(match out {
        OutputFormat::Csv => Document::csv(&["index", "alpha", "exact", "approx"], &rows),
        _ => Document(aligned(&["index", "alpha", "exact", "decimal"], &rows)),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Selection {
    Ids(Vec<BoundId>),
    AllPairs,
    Best,
}

impl Selection {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "all-pairs" => Ok(Selection::AllPairs),
            "best" => Ok(Selection::Best),
            list => list
                .split(',')
                .map(|t| t.trim().parse::<BoundId>().map_err(CliError::from))
                .collect::<Result<_, _>>()
                .map(Selection::Ids),
        }
    }
}

#[derive(Debug, Serialize)]
struct BoundRow {
    id: BoundId,
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<Direction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    actual: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equality_predicted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

impl BoundRow {
    fn evaluated(graph: &Graph, b: BoundValue) -> Self {
        let mut row = BoundRow {
            id: b.id,
            label: b.label(),
            target: Some(b.target.to_string()),
            direction: Some(b.direction),
            value: None,
            actual: None,
            slack: None,
            tight: None,
            equality_predicted: b.equality_predicted,
            skipped: None,
        };
        match b.target.actual(graph) {
            Ok(actual) => {
                row.slack = Some(b.slack(&actual));
                row.tight = Some(b.tight(&actual));
                row.actual = Some(actual);
            }
            Err(e) => row.skipped = Some(e.to_string()),
        }
        row.value = Some(b.value);
        row
    }

    fn skipped(id: BoundId, reason: String) -> Self {
        BoundRow {
            id,
            label: id.as_str().to_string(),
            target: None,
            direction: None,
            value: None,
            actual: None,
            slack: None,
            tight: None,
            equality_predicted: None,
            skipped: Some(reason),
        }
    }

    fn cells(&self, csv: bool) -> Vec<String> {
        let opt =
            |s: &Option<Scalar>, f: fn(&Scalar) -> String| s.as_ref().map(f).unwrap_or_default();
        let flag = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
        let direction = self
            .direction
            .map(|d| match d {
                Direction::Lower => "lower",
                Direction::Upper => "upper",
            })
            .unwrap_or_default();
        let shown = if csv { approx } else { decimal };
        vec![
            self.label.clone(),
            self.target.clone().unwrap_or_default(),
            direction.to_string(),
            opt(&self.value, exact),
            opt(&self.value, shown),
            opt(&self.actual, shown),
            self.slack.map(|s| s.to_string()).unwrap_or_default(),
            flag(self.tight),
            flag(self.equality_predicted),
            self.skipped.clone().unwrap_or_default(),
        ]
    }
}

pub fn bounds(
    graph: &Graph,
    alpha: f64,
    selection: &Selection,
    out: OutputFormat,
) -> Result<Document, CliError> {
    general_zagreb(graph, alpha)?;
    let ds = graph.degree_sequence();
    let rows: Vec<BoundRow> = match selection {
        Selection::AllPairs => evaluate_all_specs(&ds, alpha)?
            .into_iter()
            .map(|b| BoundRow::evaluated(graph, b))
            .collect(),
        Selection::Best => vec![BoundRow::evaluated(graph, best_bound(&ds, alpha)?)],
        Selection::Ids(ids) => {
            let mut rows = Vec::new();
            for &id in ids {
                match evaluate(&ds, id, alpha) {
                    Ok(values) => {
                        rows.extend(values.into_iter().map(|b| BoundRow::evaluated(graph, b)))
                    }
                    Err(e @ (BoundError::Hypothesis(_) | BoundError::Domain(_))) => {
                        rows.push(BoundRow::skipped(id, e.to_string()))
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            rows
        }
    };
    let header = [
        "bound",
        "target",
        "direction",
        "exact",
        if out == OutputFormat::Csv {
            "approx"
        } else {
            "decimal"
        },
        "actual",
        "slack",
        "tight",
        "equality_predicted",
        "skipped",
    ];
    Ok(match out {
        OutputFormat::Json => Document::json(&rows),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.cells(true)).collect();
            Document::csv(&header, &cells)
        }
        OutputFormat::Text => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.cells(false)).collect();
            Document(aligned(&header, &cells))
        }
    })
}

/// Corpus flags shared by `verify` and `enumerate`.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct CorpusFlags {
    /// Smallest order.
    #[arg(long)]
    pub nmin: Option<usize>,
    /// Largest order.
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Keep connected graphs only.
    #[arg(long, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    pub connected: Option<bool>,
    /// One graph per isomorphism class.
    #[arg(long, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    pub dedup: Option<bool>,
    /// Keep graphs without isolated vertices only.
    #[arg(long = "min-degree", num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    pub min_degree: Option<bool>,
}

impl CorpusFlags {
    fn is_empty(&self) -> bool {
        self.nmin.is_none()
            && self.nmax.is_none()
            && self.connected.is_none()
            && self.dedup.is_none()
            && self.min_degree.is_none()
    }

    fn spec(&self, n_min: usize, n_max: usize, filtered: bool) -> CorpusSpec {
        let n_min = self.nmin.unwrap_or(n_min);
        CorpusSpec {
            n_min,
            n_max: self.nmax.unwrap_or(n_max.max(n_min)),
            connected_only: self.connected.unwrap_or(filtered),
            dedup_isomorphic: self.dedup.unwrap_or(false),
            min_degree_positive: self.min_degree.unwrap_or(filtered),
        }
    }
}

pub fn parse_properties(tokens: &[String]) -> Result<Vec<PropertyId>, CliError> {
    let mut out = Vec::new();
    for t in tokens.iter().flat_map(|t| t.split(',')) {
        if t.trim().is_empty() {
            continue;
        }
        let p = t.parse::<PropertyId>().map_err(CliError::input)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    if out.is_empty() {
        out = PropertyId::ALL.to_vec();
    }
    Ok(out)
}

/// Runs every property; `Ok` carries the document and the exit status.
pub fn verify(
    flags: &CorpusFlags,
    properties: &[PropertyId],
    out: OutputFormat,
    limit: usize,
) -> Result<(Document, u8), CliError> {
    let corpus = if flags.is_empty() {
        Corpus::standard()
    } else {
        Corpus::single(flags.spec(3, 7, true))
    };
    corpus.validate(limit)?;
    let reports = properties
        .iter()
        .map(|&p| run_property(p, &corpus, limit))
        .collect::<Result<Vec<VerificationReport>, GraphError>>()?;
    let code = if reports.iter().all(|r| r.passed()) {
        exit::OK
    } else {
        exit::FAILURE
    };
    let doc = match out {
        OutputFormat::Json => Document::json(&reports),
        OutputFormat::Text => Document(
            reports
                .iter()
                .map(|r| r.to_text())
                .collect::<Vec<_>>()
                .join("\n"),
        ),
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            let scalar = |s: &Option<Scalar>| s.as_ref().map(|s| s.to_string()).unwrap_or_default();
            for r in &reports {
                let p = r.property.to_string();
                let status = r.status.to_string();
                rows.push(vec![
                    p.clone(),
                    status.clone(),
                    "summary".into(),
                    String::new(),
                    String::new(),
                    r.graphs_checked.to_string(),
                    r.checks.to_string(),
                    format!("{} violations", r.violations.len()),
                ]);
                for v in &r.violations {
                    rows.push(vec![
                        p.clone(),
                        status.clone(),
                        "violation".into(),
                        v.graph6.clone(),
                        v.bound.clone(),
                        scalar(&v.lhs),
                        scalar(&v.rhs),
                        v.context.clone(),
                    ]);
                }
                for w in &r.witnesses {
                    rows.push(vec![
                        p.clone(),
                        status.clone(),
                        "witness".into(),
                        w.graph6.clone(),
                        w.claim.clone(),
                        String::new(),
                        String::new(),
                        w.detail.clone(),
                    ]);
                }
                for n in &r.notes {
                    let mut row = vec![p.clone(), status.clone(), "note".into()];
                    row.extend(std::iter::repeat_n(String::new(), 4));
                    row.push(n.clone());
                    rows.push(row);
                }
            }
            Document::csv(
                &[
                    "property", "status", "kind", "graph6", "bound", "lhs", "rhs", "context",
                ],
                &rows,
            )
        }
    };
    Ok((doc, code))
}

pub fn reproduce(out: OutputFormat) -> (Document, u8) {
    let report = reproduce_table1();
    let table = report.table.as_ref().expect("table");
    let code = if table.explained() {
        exit::OK
    } else {
        exit::FAILURE
    };
    let doc = match out {
        OutputFormat::Json => Document::json(&report),
        OutputFormat::Text => {
            let mut s = report.to_text();
            if code == exit::OK {
                s.push_str("every difference from print is explained\n");
            }
            Document(s)
        }
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            for r in &table.rows {
                let p = r.printed_params;
                let c = r.computed_params;
                rows.push(vec![
                    r.graph.clone(),
                    "params".into(),
                    format!("{},{},{},{}", p[0], p[1], p[2], p[3]),
                    format!("{},{},{},{}", c[0], c[1], c[2], c[3]),
                    String::new(),
                    String::new(),
                ]);
                rows.push(vec![
                    r.graph.clone(),
                    "M1".into(),
                    r.printed_m1.to_string(),
                    r.computed_m1.clone(),
                    parse_rational(&r.computed_m1)
                        .map(|q| rational_to_f64(&q).to_string())
                        .unwrap_or_default(),
                    String::new(),
                ]);
                for (i, id) in table.columns.iter().enumerate() {
                    let note = table
                        .discrepancies
                        .iter()
                        .find(|d| d.graph == r.graph && d.column == id.as_str())
                        .map(|d| d.explanation.clone())
                        .unwrap_or_default();
                    rows.push(vec![
                        r.graph.clone(),
                        id.as_str().into(),
                        r.printed[i].to_string(),
                        r.computed[i].clone(),
                        r.computed_decimal[i].to_string(),
                        note,
                    ]);
                }
            }
            Document::csv(
                &[
                    "graph",
                    "column",
                    "printed",
                    "exact",
                    "approx",
                    "discrepancy",
                ],
                &rows,
            )
        }
    };
    (doc, code)
}

pub fn enumerate(
    flags: &CorpusFlags,
    output: Option<&PathBuf>,
    limit: usize,
) -> Result<(), CliError> {
    let spec = flags.spec(1, 1, false);
    let mut text = String::new();
    for g in enumerate_graphs(&spec, limit)? {
        text.push_str(&g.to_graph6());
        text.push('\n');
    }
    Document(text).write_to(output.map(PathBuf::as_path))
}
