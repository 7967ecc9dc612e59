//! Reports printed by the document commands, in JSON or aligned text.

use std::fmt::Write as _;

use gutsbound::{
    guts_contribution, BoundOutcome, ExactRational, HungryForm, HungrySurface, LabelQuadruple,
    SideConfiguration, SideShape, VolumeBound,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Bound,
    Hungry,
    Compressible,
    Invalid,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Bound | Outcome::Hungry => 0,
            Outcome::Compressible => 2,
            Outcome::Invalid => 3,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Outcome::Bound => "bound",
            Outcome::Hungry => "hungry",
            Outcome::Compressible => "compressible",
            Outcome::Invalid => "invalid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SideSummary {
    pub shape: String,
    pub boundary: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contribution: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
}

impl SideSummary {
    pub fn of(side: &SideConfiguration) -> Self {
        let shape = match side.shape() {
            SideShape::Acylindrical => "acylindrical",
            SideShape::RationalTangle(_) => "rational_tangle",
            SideShape::NonsingularAnnulus { .. } => "nonsingular_annulus",
            SideShape::TwoTwoAnnuli { .. } => "two_two_annuli",
            SideShape::RegularNeighborhood => "regular_neighborhood",
        };
        let contribution = guts_contribution(side).ok();
        SideSummary {
            shape: shape.into(),
            boundary: raw(side.boundary()),
            contribution: contribution.map(|c| c.kind.to_string()),
            coefficient: contribution.map(|c| c.coefficient.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HungryWitness {
    pub surface: String,
    pub boundary: Vec<u32>,
    pub glued_boundary: Vec<u32>,
    pub sigma: String,
    pub reduced_sigma: String,
    /// Cycle notation on positions 1..4.
    pub permutation: String,
}

impl HungryWitness {
    pub fn of(form: &HungryForm) -> Self {
        let surface = match form.surface() {
            HungrySurface::Sphere4(q) => q.to_sphere().to_string(),
            HungrySurface::MirroredDisk(d) => d.to_string(),
        };
        let g = form.gluing();
        HungryWitness {
            surface,
            boundary: raw(form.boundary()),
            glued_boundary: raw(&form.glued_boundary()),
            sigma: g.sigma.to_string(),
            reduced_sigma: g.reduced.to_string(),
            permutation: g.induced_permutation.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub surface: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side0: Option<SideSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side1: Option<SideSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hungry: Option<HungryWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    #[serde(default)]
    pub theorem_case: Option<String>,
    /// Exact coefficient `q` in `Vol ≥ q·V8`, as `p/q`.
    #[serde(default)]
    pub coefficient: Option<String>,
    #[serde(default)]
    pub numeric_value: Option<f64>,
    #[serde(default)]
    pub violations: Vec<String>,
    #[serde(default)]
    pub witness: Option<Witness>,
}

fn raw(q: &LabelQuadruple) -> Vec<u32> {
    q.labels().iter().map(|l| l.get()).collect()
}

impl Report {
    pub fn invalid(command: &str, violations: Vec<String>) -> Self {
        Report {
            command: command.into(),
            outcome: Outcome::Invalid,
            theorem_case: None,
            coefficient: None,
            numeric_value: None,
            violations,
            witness: None,
        }
    }

    fn with_outcome(command: &str, outcome: Outcome, witness: Witness) -> Self {
        Report {
            command: command.into(),
            outcome,
            theorem_case: None,
            coefficient: None,
            numeric_value: None,
            violations: Vec::new(),
            witness: Some(witness),
        }
    }

    pub fn from_outcome(
        command: &str,
        surface: String,
        sides: [&SideConfiguration; 2],
        outcome: &BoundOutcome,
    ) -> Self {
        let witness = Witness {
            surface,
            side0: Some(SideSummary::of(sides[0])),
            side1: Some(SideSummary::of(sides[1])),
            hungry: None,
        };
        match outcome {
            BoundOutcome::Bound(b) => Report::bound(command, b, witness),
            BoundOutcome::Hungry(form) => Report::hungry(command, form, witness),
            BoundOutcome::Compressible => {
                Report::with_outcome(command, Outcome::Compressible, witness)
            }
        }
    }

    fn bound(command: &str, b: &VolumeBound, witness: Witness) -> Self {
        Report {
            theorem_case: Some(b.case.to_string()),
            coefficient: Some(b.coefficient.to_string()),
            numeric_value: Some(b.numeric_value),
            ..Report::with_outcome(command, Outcome::Bound, witness)
        }
    }

    pub fn hungry(command: &str, form: &HungryForm, witness: Witness) -> Self {
        Report::with_outcome(
            command,
            Outcome::Hungry,
            Witness {
                hungry: Some(HungryWitness::of(form)),
                ..witness
            },
        )
    }

    pub fn exit_code(&self) -> u8 {
        self.outcome.exit_code()
    }

    /// The coefficient parsed back into an exact rational.
    pub fn exact_coefficient(&self) -> Option<ExactRational> {
        self.coefficient.as_deref().and_then(|s| s.parse().ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self, digits: usize) -> String {
        let mut rows: Vec<(String, String)> =
            vec![("outcome".into(), self.outcome.as_str().into())];
        if let Some(case) = &self.theorem_case {
            rows.push(("case".into(), case.clone()));
        }
        if let Some(c) = &self.coefficient {
            rows.push(("coefficient".into(), format!("{c} · V8")));
        }
        if let Some(v) = self.numeric_value {
            rows.push(("volume ≥".into(), format!("{v:.digits$}")));
        }
        if let Some(w) = &self.witness {
            rows.push(("surface".into(), w.surface.clone()));
            for (name, side) in [("side0", &w.side0), ("side1", &w.side1)] {
                if let Some(s) = side {
                    let mut text = format!("{} {:?}", s.shape, s.boundary);
                    if let (Some(k), Some(c)) = (&s.contribution, &s.coefficient) {
                        let _ = write!(text, ", {k} = {c}");
                    }
                    rows.push((name.into(), text));
                }
            }
            if let Some(h) = &w.hungry {
                rows.push(("hungry surface".into(), h.surface.clone()));
                rows.push(("boundary".into(), format!("{:?}", h.boundary)));
                rows.push(("glued boundary".into(), format!("{:?}", h.glued_boundary)));
                rows.push(("sigma".into(), display_word(&h.sigma)));
                rows.push(("reduced sigma".into(), display_word(&h.reduced_sigma)));
                rows.push(("permutation".into(), h.permutation.clone()));
            }
        }
        for v in &self.violations {
            rows.push(("violation".into(), v.clone()));
        }
        align(&rows)
    }
}

fn display_word(w: &str) -> String {
    if w.is_empty() {
        "(empty)".into()
    } else {
        w.into()
    }
}

/// Two-column layout with the keys padded to a common width.
pub fn align(rows: &[(String, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
    out
}
