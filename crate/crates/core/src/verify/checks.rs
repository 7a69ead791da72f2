use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use super::examples::example_graphs;
use super::transcribe::transcribed;
use super::{
    finish, per_sequence, sweep, Corpus, PropertyId, Tally, Triage, VerificationReport, Violation,
    Witness,
};
use crate::bounds::{
    baseline_bound, coindex_forms, evaluate, general_zagreb_lower_bound, m2_lower_bound,
    named_bound, nordhaus_gaddum_forms, spectral_lower_bound, BoundError, BoundId, BoundValue,
    Direction, Family, KernelSpec, Target,
};
use crate::graph::{DegreeSequence, Graph, GraphError, RelPos};
use crate::indices::{self, coindex_identity_rhs, general_zagreb_of, IndexError, SpectralSettings};
use crate::scalar::{int, rat, Rational, Scalar};

/// Exponents swept by the validity campaign.
pub const DEFAULT_ALPHAS: [f64; 4] = [-2.0, -1.0, 1.0, 2.0];

/// Named corollaries with a stated equality characterization.
pub(crate) const EQUALITY_IDS: [BoundId; 10] = [
    BoundId::CorZte2,
    BoundId::CorZ2te1,
    BoundId::CorZ2te2,
    BoundId::CorZr31,
    BoundId::CorZr32,
    BoundId::CorXu4,
    BoundId::CorZ24degree,
    BoundId::Mm1Pair,
    BoundId::Mm1One,
    BoundId::Mm1Two,
];

fn skip_reason(label: &str, err: &BoundError) -> Option<String> {
    match err {
        BoundError::Hypothesis(_) => Some(format!("{label}: hypothesis not met")),
        BoundError::Domain(IndexError::IsolatedVertex { .. }) => Some(format!("{label}: δ = 0")),
        _ => None,
    }
}

/// Skips on unmet hypotheses, records anything else as a defect.
fn record_error(tally: &mut Tally, code: &str, label: &str, err: BoundError) {
    match skip_reason(label, &err) {
        Some(reason) => tally.skip(reason),
        None => tally.violations.push(Violation {
            graph6: code.to_string(),
            bound: label.to_string(),
            lhs: None,
            rhs: None,
            context: format!("evaluation failed: {err}"),
            triage: Some(Triage::ImplementationBug),
        }),
    }
}

/// Whether the kernel value agrees with the independent transcription.
fn transcription_agrees(ds: &DegreeSequence, b: &BoundValue) -> bool {
    match (transcribed(ds, b.id), b.value.as_exact()) {
        (Some(t), Some(v)) => &t == v,
        _ => false,
    }
}

fn check_bound(
    tally: &mut Tally,
    code: &str,
    ds: Option<&DegreeSequence>,
    b: &BoundValue,
    actual: &Scalar,
) {
    tally.checks += 1;
    if b.holds(actual) {
        return;
    }
    let triage = match ds {
        Some(ds) if b.id.family() == Family::Corollary && transcription_agrees(ds, b) => {
            Triage::ClaimFalsified
        }
        _ => Triage::ImplementationBug,
    };
    tally.violations.push(Violation {
        graph6: code.to_string(),
        bound: b.label(),
        lhs: Some(b.value.clone()),
        rhs: Some(actual.clone()),
        context: format!(
            "{} bound on {} violated",
            match b.direction {
                Direction::Lower => "lower",
                Direction::Upper => "upper",
            },
            b.target
        ),
        triage: Some(triage),
    });
}

fn complement_degrees(ds: &DegreeSequence) -> DegreeSequence {
    let n = ds.len();
    DegreeSequence::from_degrees(ds.as_slice().iter().map(|&d| n - 1 - d).collect())
}

/// True value of a target computable from degrees alone, straight from its
/// definition.
fn from_degrees(target: &Target, ds: &DegreeSequence) -> Option<Result<Scalar, IndexError>> {
    let both = |e: f64| -> Result<Scalar, IndexError> {
        let a = general_zagreb_of(ds, e)?;
        let b = general_zagreb_of(&complement_degrees(ds), e)?;
        Ok(match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Scalar::Exact(x + y),
            (a, b) => Scalar::approx(a.to_f64() + b.to_f64()),
        })
    };
    match *target {
        Target::Zagreb { exponent } => Some(general_zagreb_of(ds, exponent)),
        Target::FirstComplementSum => Some(both(2.0)),
        Target::ForgottenComplementSum => Some(both(3.0)),
        _ => None,
    }
}

fn theorem_label(id: BoundId, alpha: f64) -> String {
    format!("{id}[a={alpha}]")
}

/// Bound validity: every selected bound against the true index.
///
/// Theorem ids expand to every admissible (removed, pair) instance at each
/// exponent in `alphas`; `base_randic_diff` and `app_coindex` are also
/// swept over `alphas`. Degree-determined targets are checked once per
/// distinct degree sequence, the rest on every graph.
pub fn check_validity(
    corpus: &Corpus,
    ids: &[BoundId],
    alphas: &[f64],
    limit: usize,
) -> Result<VerificationReport, GraphError> {
    let apps: Vec<BoundId> = ids
        .iter()
        .copied()
        .filter(|id| id.family() == Family::Application)
        .collect();
    let spectral = apps.contains(&BoundId::AppSpectral);
    let settings = SpectralSettings::default();

    let s = sweep(corpus, limit, |g, code, tally| {
        let ds = g.degree_sequence();
        if spectral {
            check_spectral_graph(g, code, &ds, &settings, tally);
        }
        for &id in &apps {
            let alphas: &[f64] = if id == BoundId::AppCoindex {
                alphas
            } else {
                &[1.0]
            };
            for (i, &alpha) in alphas.iter().enumerate() {
                let rows = match evaluate(&ds, id, alpha) {
                    Ok(rows) => rows,
                    Err(e) => {
                        record_error(tally, code, &theorem_label(id, alpha), e);
                        continue;
                    }
                };
                for b in rows {
                    // the coindex remark rows repeat for every exponent
                    if i > 0 && b.spec.is_none() {
                        continue;
                    }
                    if from_degrees(&b.target, &ds).is_some() {
                        continue;
                    }
                    match b.target.actual(g) {
                        Ok(actual) => check_bound(tally, code, None, &b, &actual),
                        Err(e) => record_error(tally, code, &b.label(), e.into()),
                    }
                }
            }
        }
    })?;

    let tally = per_sequence(&s.sequences, |ds, code, tally| {
        for &id in ids {
            match id.family() {
                Family::Theorem => {
                    let r = id.removed_count().expect("theorem");
                    for &alpha in alphas {
                        let specs = KernelSpec::all(alpha, ds.len(), r);
                        if specs.is_empty() {
                            tally.skip(format!("{}: hypothesis not met", theorem_label(id, alpha)));
                        }
                        for spec in specs {
                            validity_row(
                                tally,
                                code,
                                ds,
                                general_zagreb_lower_bound(ds, &spec),
                                &theorem_label(id, alpha),
                            );
                        }
                    }
                }
                Family::Corollary => {
                    validity_row(tally, code, ds, named_bound(ds, id), id.as_str())
                }
                Family::Baseline if id == BoundId::BaseRandicDiff => {
                    for &alpha in alphas {
                        let b = baseline_bound(ds, id, alpha);
                        validity_row(tally, code, ds, b, &theorem_label(id, alpha));
                    }
                }
                Family::Baseline => {
                    validity_row(tally, code, ds, baseline_bound(ds, id, 1.0), id.as_str())
                }
                Family::Application => {
                    // evaluation errors were already recorded per graph
                    let alphas: &[f64] = if id == BoundId::AppCoindex {
                        alphas
                    } else {
                        &[1.0]
                    };
                    for &alpha in alphas {
                        for b in evaluate(ds, id, alpha).unwrap_or_default() {
                            if from_degrees(&b.target, ds).is_some() {
                                validity_row(tally, code, ds, Ok(b), id.as_str());
                            }
                        }
                    }
                }
            }
        }
    });

    let mut notes = Vec::new();
    if spectral {
        notes.push(format!(
            "spectral radius by power iteration: abs_tol {:e}, residual_tol {:e}",
            settings.abs_tol, settings.residual_tol
        ));
    }
    Ok(finish(
        PropertyId::P1Validity,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        s.tally.merge(tally),
        notes,
    ))
}

fn validity_row(
    tally: &mut Tally,
    code: &str,
    ds: &DegreeSequence,
    bound: Result<BoundValue, BoundError>,
    label: &str,
) {
    let b = match bound {
        Ok(b) => b,
        Err(e) => return record_error(tally, code, label, e),
    };
    match from_degrees(&b.target, ds).expect("degree-determined target") {
        Ok(actual) => check_bound(tally, code, Some(ds), &b, &actual),
        Err(e) => record_error(tally, code, &b.label(), e.into()),
    }
}

/// `λ_1` must converge and satisfy `λ_1 >= sqrt(M1/n)` for the true `M1`.
fn check_spectral_graph(
    g: &Graph,
    code: &str,
    ds: &DegreeSequence,
    settings: &SpectralSettings,
    tally: &mut Tally,
) {
    tally.checks += 1;
    let lambda = match indices::spectral_radius(g, settings) {
        Ok(v) => v.value,
        Err(e) => {
            tally.violations.push(Violation {
                graph6: code.to_string(),
                bound: "spectral_radius".into(),
                lhs: None,
                rhs: None,
                context: e.to_string(),
                triage: Some(Triage::ImplementationBug),
            });
            return;
        }
    };
    let m1 = general_zagreb_of(ds, 2.0)
        .ok()
        .and_then(|v| v.as_exact().cloned())
        .expect("M1 is exact");
    let floor = Scalar::sqrt_of(m1 / int(ds.len() as i64));
    if floor.compare(&lambda) == Ordering::Greater {
        tally.violations.push(Violation {
            graph6: code.to_string(),
            bound: "sqrt(M1/n)".into(),
            lhs: Some(floor),
            rhs: Some(lambda),
            context: "lower bound on lambda_1 violated".into(),
            triage: Some(Triage::ImplementationBug),
        });
    }
}

/// Convergence and the `sqrt(M1/n)` floor for the spectral radius alone.
pub fn check_spectral(corpus: &Corpus, limit: usize) -> Result<VerificationReport, GraphError> {
    let settings = SpectralSettings::default();
    let s = sweep(corpus, limit, |g, code, tally| {
        check_spectral_graph(g, code, &g.degree_sequence(), &settings, tally)
    })?;
    Ok(finish(
        PropertyId::P1Validity,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        s.tally,
        vec!["lambda_1 >= sqrt(M1/n) with power-iteration convergence".into()],
    ))
}

/// Positions other than the removed ones and the pair; equality in the
/// kernel holds iff the degrees there coincide.
fn rest_positions(spec: &KernelSpec, n: usize) -> Vec<usize> {
    (1..=n)
        .filter(|p| !spec.removed.contains(p) && *p != spec.pair.0 && *p != spec.pair.1)
        .collect()
}

fn kernel_condition(ds: &DegreeSequence, spec: &KernelSpec) -> bool {
    let rest = rest_positions(spec, ds.len());
    rest.windows(2).all(|w| ds.get(w[0]) == ds.get(w[1]))
}

fn rel(p: usize, n: usize) -> String {
    if p <= n / 2 {
        p.to_string()
    } else if p == n {
        "n".into()
    } else {
        format!("n-{}", n - p)
    }
}

/// The class on which the kernel attains equality, written with symbolic `n`.
fn derived_condition(id: BoundId) -> String {
    let n = 20;
    let layout = id.layout().expect("named corollary");
    let at = |p: RelPos| p.resolve(n).expect("large n");
    let removed: Vec<usize> = layout.removed.iter().map(|&p| at(p)).collect();
    let spec = KernelSpec::new(layout.alpha, &removed, at(layout.pair.0), at(layout.pair.1));
    let rest = rest_positions(&spec, n);
    format!(
        "Gamma_{{{},{}}}",
        rel(rest[0], n),
        rel(*rest.last().expect("non-empty"), n)
    )
}

fn stated_names(id: BoundId) -> String {
    id.stated_equality_classes()
        .unwrap_or_default()
        .iter()
        .map(|c| {
            let f = |p: RelPos| match p {
                RelPos::Start(i) => i.to_string(),
                RelPos::End(0) => "n".into(),
                RelPos::End(k) => format!("n-{k}"),
            };
            format!("Gamma_{{{},{}}}", f(c.start), f(c.end))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Equality characterizations in both directions.
///
/// For each id, equality in the bound must coincide with membership in
/// the stated union of Γ classes. A mismatch is triaged against the
/// transcription and the kernel's own equality condition: when both
/// agree with the computed values, the stated characterization is
/// what fails.
pub fn check_equality_iff(
    corpus: &Corpus,
    ids: &[BoundId],
    limit: usize,
) -> Result<VerificationReport, GraphError> {
    let s = sweep(corpus, limit, |_, _, _| {})?;
    let tally = per_sequence(&s.sequences, |ds, code, tally| {
        for &id in ids {
            let b = match named_bound(ds, id) {
                Ok(b) => b,
                Err(e) => {
                    record_error(tally, code, id.as_str(), e);
                    continue;
                }
            };
            let actual = match from_degrees(&b.target, ds).expect("Zagreb target") {
                Ok(v) => v,
                Err(e) => {
                    record_error(tally, code, id.as_str(), e.into());
                    continue;
                }
            };
            tally.checks += 1;
            let equal = b.tight(&actual);
            let stated = b.equality_predicted.unwrap_or(false);
            if equal == stated {
                continue;
            }
            let spec = b.spec.as_ref().expect("kernel spec");
            let sound = transcription_agrees(ds, &b) && kernel_condition(ds, spec) == equal;
            tally.violations.push(Violation {
                graph6: code.to_string(),
                bound: id.as_str().into(),
                lhs: Some(b.value.clone()),
                rhs: Some(actual),
                context: if equal {
                    "equality holds outside every stated class".into()
                } else {
                    "stated class member with strict inequality".into()
                },
                triage: Some(if sound {
                    Triage::ClaimFalsified
                } else {
                    Triage::ImplementationBug
                }),
            });
        }
    });

    let mut per_id: BTreeMap<&str, usize> = BTreeMap::new();
    for v in &tally.violations {
        *per_id.entry(v.bound.as_str()).or_default() += 1;
    }
    let mut notes = Vec::new();
    for &id in ids {
        if let Some(count) = per_id.get(id.as_str()) {
            notes.push(format!(
                "{id}: {count} counterexample sequence(s); stated classes [{}], equality holds exactly on {}",
                stated_names(id),
                derived_condition(id)
            ));
        }
    }
    Ok(finish(
        PropertyId::P2EqualityIff,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        tally,
        notes,
    ))
}

/// One side of a dominance comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Side {
    /// A named corollary or a baseline at its own exponent.
    Bound { id: BoundId, alpha: f64 },
    /// The pair instance on the extreme positions `(1, n)`.
    PairExtreme { alpha: f64 },
    /// An application bound for `target` with `via` as the M1 source.
    Applied {
        app: BoundId,
        target: Target,
        via: BoundId,
    },
}

impl Side {
    fn eval(&self, ds: &DegreeSequence) -> Result<BoundValue, BoundError> {
        match self {
            Side::Bound { id, alpha } => match id.family() {
                Family::Corollary => named_bound(ds, *id),
                _ => baseline_bound(ds, *id, *alpha),
            },
            Side::PairExtreme { alpha } => {
                let n = ds.len();
                if n < 3 {
                    return Err(BoundError::Hypothesis("pair bound needs n >= 3".into()));
                }
                general_zagreb_lower_bound(ds, &KernelSpec::extreme(*alpha, 0, n))
            }
            Side::Applied { app, target, via } => {
                let m1 = Side::Bound {
                    id: *via,
                    alpha: 1.0,
                }
                .eval(ds)?;
                match app {
                    BoundId::AppM2 => m2_lower_bound(ds, &m1),
                    BoundId::AppSpectral => spectral_lower_bound(ds, &m1),
                    BoundId::AppNg | BoundId::AppCoindex => {
                        let forms = if *app == BoundId::AppNg {
                            nordhaus_gaddum_forms(ds)
                        } else {
                            coindex_forms(ds)
                        };
                        forms
                            .iter()
                            .find(|f| f.target == *target)
                            .ok_or_else(|| {
                                BoundError::Parameter(format!("{app} has no {target} form"))
                            })?
                            .substitute(*app, &m1)
                    }
                    other => Err(BoundError::Parameter(format!(
                        "{other} is not an application"
                    ))),
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Side::Bound { id, alpha } if *id == BoundId::BaseRandicDiff => {
                format!("{id}[a={alpha}]")
            }
            Side::Bound { id, .. } => id.to_string(),
            Side::PairExtreme { alpha } => format!("thm1[a={alpha}; pair=1,n]"),
            Side::Applied { app, target, via } => format!("{app}[{target}; via={via}]"),
        }
    }
}

/// `stronger` is never a worse estimate than `weaker`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceClaim {
    pub stronger: Side,
    pub weaker: Side,
}

impl DominanceClaim {
    pub fn name(&self) -> String {
        format!("{} vs {}", self.stronger.label(), self.weaker.label())
    }
}

fn named(id: BoundId) -> Side {
    Side::Bound { id, alpha: 1.0 }
}

fn applied(app: BoundId, target: Target, via: BoundId) -> Side {
    Side::Applied { app, target, via }
}

/// Every stated "stronger than" claim.
pub fn dominance_claims() -> Vec<DominanceClaim> {
    use BoundId::*;
    let claim = |stronger, weaker| DominanceClaim { stronger, weaker };
    let mut out = vec![
        claim(named(CorZte2), named(BaseXu2)),
        claim(named(CorZr31), named(BaseAvg)),
        claim(named(CorZr32), named(BaseAvg1)),
        claim(named(CorXu4), named(BaseXu1)),
        claim(named(CorZ24degree), named(BaseXu3)),
    ];
    for alpha in DEFAULT_ALPHAS {
        out.push(claim(
            Side::PairExtreme { alpha },
            Side::Bound {
                id: BaseRandicDiff,
                alpha,
            },
        ));
    }
    out.extend([
        claim(named(Mm1Pair), named(BaseM26)),
        claim(named(Mm1One), named(BaseM27)),
        claim(named(Mm1Two), named(BaseM28)),
        claim(named(Mm1Two), named(BaseM29)),
        claim(
            applied(AppM2, Target::SecondZagreb, CorZr31),
            applied(AppM2, Target::SecondZagreb, BaseAvg),
        ),
        claim(
            applied(AppM2, Target::SecondZagreb, CorZr32),
            applied(AppM2, Target::SecondZagreb, BaseAvg1),
        ),
        claim(
            applied(AppSpectral, Target::SpectralRadius, CorZ24degree),
            applied(AppSpectral, Target::SpectralRadius, BaseXu3),
        ),
        claim(
            applied(AppNg, Target::FirstComplementSum, CorZte2),
            applied(AppNg, Target::FirstComplementSum, BaseDasNg),
        ),
        claim(
            applied(AppNg, Target::SecondComplementSum, CorZte2),
            applied(AppNg, Target::SecondComplementSum, BaseDasNg),
        ),
        claim(
            applied(AppNg, Target::ForgottenComplementSum, CorZte2),
            applied(AppNg, Target::ForgottenComplementSum, BaseXu2),
        ),
        claim(
            applied(AppCoindex, Target::SecondCoindexSum, CorZte2),
            applied(AppCoindex, Target::SecondCoindexSum, BaseDasNg),
        ),
        claim(
            applied(AppCoindex, Target::FirstCoindex, CorZte2),
            applied(AppCoindex, Target::FirstCoindex, BaseXu2),
        ),
        claim(
            applied(AppCoindex, Target::CoindexSum { exponent: 3.0 }, CorZte2),
            applied(AppCoindex, Target::CoindexSum { exponent: 3.0 }, BaseXu2),
        ),
    ]);
    out
}

/// Dominance claims, checked once per distinct degree sequence. Upper
/// bounds dominate by being smaller.
pub fn check_dominance(
    corpus: &Corpus,
    claims: &[DominanceClaim],
    limit: usize,
) -> Result<VerificationReport, GraphError> {
    let s = sweep(corpus, limit, |_, _, _| {})?;
    let tally = per_sequence(&s.sequences, |ds, code, tally| {
        for claim in claims {
            let name = claim.name();
            let (a, b) = match (claim.stronger.eval(ds), claim.weaker.eval(ds)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    record_error(tally, code, &name, e);
                    continue;
                }
            };
            tally.checks += 1;
            let wanted = match a.direction {
                Direction::Lower => Ordering::Less,
                Direction::Upper => Ordering::Greater,
            };
            if a.value.compare(&b.value) == wanted {
                tally.violations.push(Violation {
                    graph6: code.to_string(),
                    bound: name,
                    lhs: Some(a.value),
                    rhs: Some(b.value),
                    context: "claimed stronger bound is weaker here".into(),
                    triage: None,
                });
            }
        }
    });
    Ok(finish(
        PropertyId::P3Dominance,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        tally,
        Vec::new(),
    ))
}

fn push_identity(tally: &mut Tally, code: &str, name: &str, lhs: Scalar, rhs: Scalar) {
    tally.checks += 1;
    let equal = match (lhs.as_exact(), rhs.as_exact()) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    if !equal {
        tally.violations.push(Violation {
            graph6: code.to_string(),
            bound: name.to_string(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            context: "identity fails".into(),
            triage: Some(Triage::ImplementationBug),
        });
    }
}

/// Exponents for the index/coindex identity.
const IDENTITY_ALPHAS: [i32; 5] = [-1, 0, 1, 2, 3];

/// Index/coindex and complement identities with exact equality. Both sides
/// are computed from their definitions on the graph and its complement.
pub fn check_identities(corpus: &Corpus, limit: usize) -> Result<VerificationReport, GraphError> {
    let s = sweep(corpus, limit, |g, code, tally| {
        let ds = g.degree_sequence();
        for k in IDENTITY_ALPHAS {
            let name = format!("coindex_sum[a={k}]");
            if ds.min() == 0 && k - 1 < 0 {
                tally.skip(format!("{name}: δ = 0"));
                continue;
            }
            let lhs = Target::CoindexSum { exponent: k as f64 }.actual(g);
            let rhs = coindex_identity_rhs(&ds, k);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => push_identity(tally, code, &name, l, Scalar::Exact(r)),
                (Err(e), _) | (_, Err(e)) => record_error(tally, code, &name, e.into()),
            }
        }
        let m1 = general_zagreb_of(&ds, 2.0)
            .ok()
            .and_then(|v| v.as_exact().cloned())
            .expect("M1 is exact");
        for form in nordhaus_gaddum_forms(&ds)
            .iter()
            .chain(coindex_forms(&ds).iter())
        {
            let name = format!("identity[{}]", form.target);
            match form.target.actual(g) {
                Ok(lhs) => push_identity(tally, code, &name, lhs, Scalar::Exact(form.at(&m1))),
                Err(e) => record_error(tally, code, &name, e.into()),
            }
        }
    })?;
    Ok(finish(
        PropertyId::P4Identities,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        s.tally,
        Vec::new(),
    ))
}

fn exact_named(ds: &DegreeSequence, id: BoundId) -> Option<Scalar> {
    named_bound(ds, id).ok().map(|b| b.value)
}

/// Searches for graphs on which each bound beats each other one.
///
/// With `include_examples`, the three example graphs are tried first and
/// every direction they witness is reported. Corpus witnesses are added
/// for any direction still open, taking the smallest graph6.
pub fn find_incomparability_witnesses(
    corpus: &Corpus,
    ids: &[BoundId],
    include_examples: bool,
    limit: usize,
) -> Result<VerificationReport, GraphError> {
    let directions: Vec<(BoundId, BoundId)> = ids
        .iter()
        .flat_map(|&a| ids.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    let claim = |a: BoundId, b: BoundId| format!("{a} > {b}");
    let detail =
        |a: BoundId, va: &Scalar, b: BoundId, vb: &Scalar| format!("{a} = {va}, {b} = {vb}");

    let mut tally = Tally::default();
    let mut open: Vec<(BoundId, BoundId)> = directions.clone();
    let mut notes = Vec::new();
    if include_examples {
        let mut covered = 0;
        for (name, g) in example_graphs() {
            let ds = g.degree_sequence();
            let code = g.to_graph6();
            for &(a, b) in &directions {
                if let (Some(va), Some(vb)) = (exact_named(&ds, a), exact_named(&ds, b)) {
                    if va.compare(&vb) == Ordering::Greater {
                        tally.witnesses.push(Witness {
                            graph6: code.clone(),
                            claim: claim(a, b),
                            detail: format!("{name}: {}", detail(a, &va, b, &vb)),
                        });
                        if let Some(i) = open.iter().position(|d| *d == (a, b)) {
                            open.remove(i);
                            covered += 1;
                        }
                    }
                }
            }
        }
        notes.push(format!(
            "example graphs witness {covered} of {} directions",
            directions.len()
        ));
    }

    let s = sweep(corpus, limit, |_, _, _| {})?;
    if !open.is_empty() {
        let found = per_sequence(&s.sequences, |ds, code, t| {
            for &(a, b) in &open {
                if let (Some(va), Some(vb)) = (exact_named(ds, a), exact_named(ds, b)) {
                    t.checks += 1;
                    if va.compare(&vb) == Ordering::Greater {
                        t.witnesses.push(Witness {
                            graph6: code.to_string(),
                            claim: claim(a, b),
                            detail: detail(a, &va, b, &vb),
                        });
                    }
                }
            }
        });
        tally.checks += found.checks;
        let mut best: BTreeMap<String, Witness> = BTreeMap::new();
        for w in found.witnesses {
            match best.get(&w.claim) {
                Some(cur) if cur.graph6 <= w.graph6 => {}
                _ => {
                    best.insert(w.claim.clone(), w);
                }
            }
        }
        open.retain(|&(a, b)| !best.contains_key(&claim(a, b)));
        tally.witnesses.extend(best.into_values());
    }
    for (a, b) in open {
        tally.violations.push(Violation {
            graph6: String::new(),
            bound: claim(a, b),
            lhs: None,
            rhs: None,
            context: "no witness found".into(),
            triage: None,
        });
    }
    Ok(finish(
        PropertyId::P5Incomparability,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        tally,
        notes,
    ))
}

/// `ID - 1/Δ >= (n-1)²/(2m-Δ)` and `ID - 1/Δ - 1/δ >= (n-2)²/(2m-Δ-δ)`
/// whenever `δ > 0` and the denominator is positive.
pub fn check_amhm_chain(corpus: &Corpus, limit: usize) -> Result<VerificationReport, GraphError> {
    let s = sweep(corpus, limit, |_, _, _| {})?;
    let tally = per_sequence(&s.sequences, |ds, code, tally| {
        if ds.min() == 0 {
            tally.skip("amhm: δ = 0");
            return;
        }
        let n = ds.len() as i64;
        let id_index: Rational = ds.as_slice().iter().map(|&d| rat(1, d as i64)).sum();
        let (dmax, dmin) = (ds.max() as i64, ds.min() as i64);
        let two_m = ds.degree_sum() as i64;
        let mut one = |name: &str, lhs: Rational, count: i64, denom: i64| {
            let denom = int(denom);
            if !denom.is_positive() || count <= 0 {
                tally.skip(format!("{name}: denominator not positive"));
                return;
            }
            tally.checks += 1;
            let rhs = int(count * count) / denom;
            if lhs < rhs {
                tally.violations.push(Violation {
                    graph6: code.to_string(),
                    bound: name.to_string(),
                    lhs: Some(Scalar::Exact(lhs)),
                    rhs: Some(Scalar::Exact(rhs)),
                    context: "AM-HM inequality fails".into(),
                    triage: Some(Triage::ImplementationBug),
                });
            }
        };
        let less_max = &id_index - rat(1, dmax);
        one("amhm_one", less_max.clone(), n - 1, two_m - dmax);
        if n >= 3 {
            one(
                "amhm_two",
                less_max - rat(1, dmin),
                n - 2,
                two_m - dmax - dmin,
            );
        }
    });
    Ok(finish(
        PropertyId::P6AmhmChain,
        Some(corpus.clone()),
        s.graphs,
        s.sequences.len(),
        tally,
        Vec::new(),
    ))
}
