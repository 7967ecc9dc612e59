//! One function per subcommand. Each returns the text to print and the exit
//! code; nothing here touches the process directly.

use std::collections::BTreeMap;

use gutsbound::{
    assemble_hungry, classify_triple, corollary_bound, euler_mirrored_disk, euler_sphere,
    is_incompressible, minimum_positive_bound, v8, volume_bound, BoundCase, BoundOutcome,
    CaseMinimum, LabelPolicy, SideConfiguration, SweepSurface, TangleWord,
};
use serde::Serialize;

use crate::document::{parse_orbifold, NamedOrbifold, ProblemDocument, Surface, Violations};
use crate::report::{align, Report, SideSummary, Witness};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 3;

/// Sweep cap used when `GUTSBOUND_MAX_LABEL` is unset.
pub const DEFAULT_SWEEP_CAP: u32 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub format: Format,
    pub digits: usize,
}

#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code: EXIT_INVALID,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize") + "\n"
}

fn render(report: Report, style: Style) -> Output {
    let stdout = match style.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(style.digits),
    };
    Output {
        stdout,
        stderr: String::new(),
        code: report.exit_code(),
    }
}

/// Runs `f`, turning collected violations into an invalid report.
fn document_command(
    command: &str,
    text: &str,
    style: Style,
    f: impl FnOnce(&ProblemDocument, &LabelPolicy) -> Result<Report, Violations>,
) -> Output {
    let policy = LabelPolicy::default();
    let report = ProblemDocument::parse(text)
        .and_then(|doc| {
            doc.check_attestations()?;
            f(&doc, &policy)
        })
        .unwrap_or_else(|violations| Report::invalid(command, violations));
    render(report, style)
}

/// Resolves both fallible halves before giving up, so a report lists the
/// problems of both sides at once.
fn both<A, B>(a: Result<A, Violations>, b: Result<B, Violations>) -> Result<(A, B), Violations> {
    match (a, b) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        (a, b) => Err(a.err().into_iter().chain(b.err()).flatten().collect()),
    }
}

fn corollary_report(
    command: &str,
    doc: &ProblemDocument,
    policy: &LabelPolicy,
    d: gutsbound::MirroredDiskOrbifold,
) -> Result<Report, Violations> {
    if let Some(side1) = &doc.side1 {
        if !side1.is_regular_neighborhood() {
            return Err(vec![
                "side1: for a mirrored disk the second side is its regular neighborhood".into(),
            ]);
        }
    }
    let side0 = doc.side0.resolve(policy, "side0", d.double_quadruple())?;
    let neighborhood = SideConfiguration::regular_neighborhood(*side0.boundary())
        .map_err(|e| vec![format!("side1: {e}")])?;
    let outcome = corollary_bound(&d, &side0).map_err(|e| vec![e.to_string()])?;
    Ok(Report::from_outcome(
        command,
        d.to_string(),
        [&side0, &neighborhood],
        &outcome,
    ))
}

pub fn bound(text: &str, style: Style) -> Output {
    document_command("bound", text, style, |doc, policy| {
        match doc.surface.resolve(policy)? {
            Surface::MirroredDisk(d) => corollary_report("bound", doc, policy, d),
            Surface::Sphere(q) => {
                let side1 = doc
                    .side1
                    .as_ref()
                    .ok_or_else(|| vec!["side1: required for a sphere surface".to_string()]);
                let (side0, side1) = both(
                    doc.side0.resolve(policy, "side0", q),
                    side1.and_then(|s| s.resolve(policy, "side1", q)),
                )?;
                let outcome = volume_bound(&q, &side0, &side1).map_err(|e| vec![e.to_string()])?;
                Ok(Report::from_outcome(
                    "bound",
                    q.to_sphere().to_string(),
                    [&side0, &side1],
                    &outcome,
                ))
            }
        }
    })
}

pub fn corollary(text: &str, style: Style) -> Output {
    document_command("corollary", text, style, |doc, policy| {
        match doc.surface.resolve(policy)? {
            Surface::MirroredDisk(d) => corollary_report("corollary", doc, policy, d),
            Surface::Sphere(_) => Err(vec![
                "surface: corollary needs a mirrored_disk surface".into()
            ]),
        }
    })
}

pub fn hungry(text: &str, style: Style) -> Output {
    document_command("hungry", text, style, |doc, policy| {
        let surface = doc.surface.resolve(policy)?;
        let sigma = doc.sigma()?;
        let boundary = surface.quadruple();
        let glued = sigma.induced_permutation().apply(&boundary);
        let side1 = match (&surface, &doc.side1) {
            (Surface::MirroredDisk(_), None) => SideConfiguration::regular_neighborhood(glued)
                .map_err(|e| vec![format!("side1: {e}")]),
            (_, Some(s)) => s.resolve(policy, "side1", glued),
            (Surface::Sphere(_), None) => Err(vec!["side1: required for a sphere surface".into()]),
        };
        let (side0, side1) = both(doc.side0.resolve(policy, "side0", boundary), side1)?;
        let witness = Witness {
            surface: match surface {
                Surface::Sphere(q) => q.to_sphere().to_string(),
                Surface::MirroredDisk(d) => d.to_string(),
            },
            side0: Some(SideSummary::of(&side0)),
            side1: Some(SideSummary::of(&side1)),
            hungry: None,
        };
        if !is_incompressible(&side0, &side1) {
            return Ok(Report::from_outcome(
                "hungry",
                witness.surface,
                [&side0, &side1],
                &BoundOutcome::Compressible,
            ));
        }
        let form = assemble_hungry(surface.hungry(), &side0, &side1, sigma)
            .map_err(|e| vec![e.to_string()])?;
        Ok(Report::hungry("hungry", &form, witness))
    })
}

#[derive(Serialize)]
struct SweepRow {
    case: String,
    coefficient: String,
    numeric: String,
    #[serde(rename = "witness-labels")]
    witness_labels: String,
}

impl SweepRow {
    fn of(m: &CaseMinimum, digits: usize) -> Self {
        let labels: Vec<String> = m.formula_labels.iter().map(|l| l.to_string()).collect();
        SweepRow {
            case: m.case.to_string(),
            coefficient: m.coefficient.to_string(),
            numeric: format!("{:.digits$}", m.numeric_value),
            witness_labels: format!("{{{}}}", labels.join(",")),
        }
    }
}

#[derive(Serialize)]
struct SweepJson {
    label_max: u32,
    cases: Vec<SweepCaseJson>,
    global_minimum: SweepCaseJson,
}

#[derive(Serialize)]
struct SweepCaseJson {
    case: String,
    coefficient: String,
    numeric_value: f64,
    surface: String,
    side0: String,
    side1: String,
    witness_labels: Vec<u32>,
}

impl SweepCaseJson {
    fn of(m: &CaseMinimum) -> Self {
        SweepCaseJson {
            case: m.case.to_string(),
            coefficient: m.coefficient.to_string(),
            numeric_value: m.numeric_value,
            surface: match m.surface {
                SweepSurface::Sphere(q) => q.to_sphere().to_string(),
                SweepSurface::MirroredDisk(d) => d.to_string(),
            },
            side0: m.side0.to_string(),
            side1: m.side1.to_string(),
            witness_labels: m.formula_labels.iter().map(|l| l.get()).collect(),
        }
    }
}

pub fn sweep(label_max: u32, case: Option<BoundCase>, cap: u32, style: Style) -> Output {
    if label_max > cap {
        return Output::invalid(format!(
            "label maximum {label_max} exceeds the sweep cap {cap} (set GUTSBOUND_MAX_LABEL to raise it)"
        ));
    }
    if label_max < 3 {
        return Output::invalid("no positive bound; hypothesis violation");
    }
    let summary = match minimum_positive_bound(label_max) {
        Ok(s) => s,
        Err(e) => return Output::invalid(e.to_string()),
    };
    let keep = |c: BoundCase| case.is_none_or(|k| k == c);
    let rows: Vec<&CaseMinimum> = summary.per_case.iter().filter(|m| keep(m.case)).collect();
    let Some(global) = summary.global_minimum_by(keep) else {
        return Output::invalid(format!(
            "no positive bound for case {} with labels ≤ {label_max}",
            case.map(|c| c.to_string()).unwrap_or_default()
        ));
    };
    match style.format {
        Format::Json => Output::ok(json(&SweepJson {
            label_max,
            cases: rows.iter().map(|m| SweepCaseJson::of(m)).collect(),
            global_minimum: SweepCaseJson::of(global),
        })),
        Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for m in rows.iter().copied().chain([global]) {
                w.serialize(SweepRow::of(m, style.digits))
                    .expect("in-memory csv");
            }
            let bytes = w.into_inner().expect("in-memory csv");
            Output::ok(String::from_utf8(bytes).expect("csv is utf-8"))
        }
    }
}

pub fn euler(spec: &str, style: Style) -> Output {
    let orbifold = match parse_orbifold(spec, &LabelPolicy::default()) {
        Ok(o) => o,
        Err(v) => return Output::invalid(v.join("; ")),
    };
    let (name, chi, class) = match &orbifold {
        NamedOrbifold::Sphere(s) => {
            let class = match s.cone_orders() {
                &[p, q, r] => Some(classify_triple(p, q, r).to_string()),
                _ => None,
            };
            (s.to_string(), euler_sphere(s), class)
        }
        NamedOrbifold::MirroredDisk(d) => (d.to_string(), euler_mirrored_disk(d), None),
    };
    match style.format {
        Format::Json => {
            let mut map = BTreeMap::new();
            map.insert("orbifold", name);
            map.insert("euler_characteristic", chi.to_string());
            if let Some(c) = class {
                map.insert("turnover", c);
            }
            Output::ok(json(&map))
        }
        Format::Text => {
            let mut rows = vec![
                ("orbifold".to_string(), name),
                ("χ".to_string(), chi.to_string()),
            ];
            if let Some(c) = class {
                rows.push(("turnover".into(), c));
            }
            Output::ok(align(&rows))
        }
    }
}

pub fn classify(p: i64, q: i64, r: i64, style: Style) -> Output {
    let policy = LabelPolicy::default();
    let labels: Result<Vec<_>, _> = [p, q, r].into_iter().map(|x| policy.label(x)).collect();
    let labels = match labels {
        Ok(l) => l,
        Err(e) => return Output::invalid(e.to_string()),
    };
    let class = classify_triple(labels[0], labels[1], labels[2]).to_string();
    match style.format {
        Format::Json => {
            let mut map = BTreeMap::new();
            map.insert("turnover", format!("S2({p},{q},{r})"));
            map.insert("class", class);
            Output::ok(json(&map))
        }
        Format::Text => Output::ok(format!("{class}\n")),
    }
}

pub fn v8_value(digits: usize, style: Style) -> Output {
    let v = v8();
    match style.format {
        Format::Json => {
            let mut map = BTreeMap::new();
            map.insert("v8", v);
            Output::ok(json(&map))
        }
        Format::Text => Output::ok(format!("{v:.digits$}\n")),
    }
}

#[derive(Serialize)]
struct TanglePerm {
    word: String,
    reduced: String,
    permutation: String,
    /// `images[i]` is the final position of the point starting at `i + 1`.
    images: [usize; 4],
}

pub fn tangle_perm(word: &str, style: Style) -> Output {
    let w: TangleWord = match word.parse() {
        Ok(w) => w,
        Err(e) => return Output::invalid(e.to_string()),
    };
    let p = w.induced_permutation();
    let result = TanglePerm {
        word: w.to_string(),
        reduced: w.reduce().to_string(),
        permutation: p.to_string(),
        images: p.images().map(|i| i + 1),
    };
    match style.format {
        Format::Json => Output::ok(json(&result)),
        Format::Text => {
            let images: Vec<String> = result.images.iter().map(|i| i.to_string()).collect();
            Output::ok(align(&[
                ("word".into(), result.word),
                ("reduced".into(), result.reduced),
                ("permutation".into(), result.permutation),
                ("images".into(), images.join(" ")),
            ]))
        }
    }
}
