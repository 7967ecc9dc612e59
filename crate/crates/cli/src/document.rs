//! The JSON problem document and its conversion into library values.
//!
//! Positions in `pairing` are 1-based, matching how the four marked points
//! are numbered in the `labels` array.

use gutsbound::{
    ConeLabel, HungrySurface, IBundleSpec, IBundleType, LabelPolicy, LabelQuadruple,
    MirroredDiskOrbifold, Pairing, RegionFill, SideConfiguration, SideShape, SphereOrbifold,
    TangleKind, TangleWord,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub surface: SurfaceDoc,
    pub side0: SideDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side1: Option<SideDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    pub attestations: Attestations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceType {
    Sphere,
    MirroredDisk,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    #[serde(rename = "type")]
    pub kind: SurfaceType,
    pub labels: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingDoc {
    pub ab: [usize; 2],
    pub cd: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TangleDoc {
    TwoStrand,
    HShape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FillDoc {
    Acylindrical,
    SolidTorus,
    IBundle {
        #[serde(rename = "type")]
        kind: String,
        params: Vec<i64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SideDoc {
    Acylindrical {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<i64>>,
    },
    RationalTangle {
        tangle: TangleDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<i64>>,
    },
    NonsingularAnnulus {
        pairing: PairingDoc,
        core_label: i64,
        region_fill: FillDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<i64>>,
    },
    TwoTwoAnnuli {
        pairing: PairingDoc,
        n: u32,
        upper_fill: FillDoc,
        lower_fill: FillDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<i64>>,
    },
    RegularNeighborhood {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<i64>>,
    },
}

/// The theorem's standing hypotheses, asserted by whoever wrote the document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attestations {
    pub irreducible: bool,
    pub turnover_reduced: bool,
    pub atoroidal_sides: bool,
    pub hyperbolic_interior: bool,
}

impl Attestations {
    /// Names of the attestations that are false.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("irreducible", self.irreducible),
            ("turnover_reduced", self.turnover_reduced),
            ("atoroidal_sides", self.atoroidal_sides),
            ("hyperbolic_interior", self.hyperbolic_interior),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

/// Input problems are reported as a list of human-readable violations.
pub type Violations = Vec<String>;

fn labels(policy: &LabelPolicy, field: &str, raw: &[i64]) -> Result<Vec<ConeLabel>, Violations> {
    let mut out = Vec::with_capacity(raw.len());
    let mut errors = Vec::new();
    for (i, &v) in raw.iter().enumerate() {
        match policy.label(v) {
            Ok(l) => out.push(l),
            Err(e) => errors.push(format!("{field}[{i}]: {e}")),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}

fn quadruple(policy: &LabelPolicy, field: &str, raw: &[i64]) -> Result<LabelQuadruple, Violations> {
    let ls = labels(policy, field, raw)?;
    LabelQuadruple::from_slice(&ls).map_err(|e| vec![format!("{field}: {e}")])
}

/// The surface as given: a four-pointed sphere or a mirrored disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Surface {
    Sphere(LabelQuadruple),
    MirroredDisk(MirroredDiskOrbifold),
}

impl Surface {
    /// Positional labels the splitting surface presents to side 0.
    pub fn quadruple(&self) -> LabelQuadruple {
        match self {
            Surface::Sphere(q) => *q,
            Surface::MirroredDisk(d) => d.double_quadruple(),
        }
    }

    pub fn hungry(&self) -> HungrySurface {
        match self {
            Surface::Sphere(q) => HungrySurface::Sphere4(*q),
            Surface::MirroredDisk(d) => HungrySurface::MirroredDisk(*d),
        }
    }
}

impl SurfaceDoc {
    pub fn resolve(&self, policy: &LabelPolicy) -> Result<Surface, Violations> {
        match self.kind {
            SurfaceType::Sphere => Ok(Surface::Sphere(quadruple(
                policy,
                "surface.labels",
                &self.labels,
            )?)),
            SurfaceType::MirroredDisk => {
                let ls = labels(policy, "surface.labels", &self.labels)?;
                match ls.as_slice() {
                    &[a, b] => Ok(Surface::MirroredDisk(MirroredDiskOrbifold::new(a, b))),
                    _ => Err(vec![format!(
                        "surface.labels: a mirrored disk has 2 corner labels, found {}",
                        ls.len()
                    )]),
                }
            }
        }
    }
}

impl PairingDoc {
    fn resolve(&self, field: &str) -> Result<Pairing, Violations> {
        let zero = |p: [usize; 2]| -> Result<[usize; 2], Violations> {
            if p.iter().any(|&i| !(1..=4).contains(&i)) {
                return Err(vec![format!(
                    "{field}: positions must be in 1..=4, got {p:?}"
                )]);
            }
            Ok([p[0] - 1, p[1] - 1])
        };
        Pairing::new(zero(self.ab)?, zero(self.cd)?).map_err(|e| vec![format!("{field}: {e}")])
    }
}

impl FillDoc {
    fn resolve(&self, policy: &LabelPolicy, field: &str) -> Result<RegionFill, Violations> {
        match self {
            FillDoc::Acylindrical => Ok(RegionFill::AcylindricalRegion),
            FillDoc::SolidTorus => Ok(RegionFill::SolidTorusRegion),
            FillDoc::IBundle { kind, params } => {
                let kind: IBundleType = kind
                    .parse()
                    .map_err(|e| vec![format!("{field}.type: {e}")])?;
                let params = labels(policy, &format!("{field}.params"), params)?;
                IBundleSpec::new(kind, &params)
                    .map(RegionFill::IBundleRegion)
                    .map_err(|e| vec![format!("{field}: {e}")])
            }
        }
    }
}

impl SideDoc {
    pub fn labels(&self) -> Option<&[i64]> {
        match self {
            SideDoc::Acylindrical { labels }
            | SideDoc::RationalTangle { labels, .. }
            | SideDoc::NonsingularAnnulus { labels, .. }
            | SideDoc::TwoTwoAnnuli { labels, .. }
            | SideDoc::RegularNeighborhood { labels } => labels.as_deref(),
        }
    }

    pub fn is_regular_neighborhood(&self) -> bool {
        matches!(self, SideDoc::RegularNeighborhood { .. })
    }

    pub fn shape(&self, policy: &LabelPolicy, field: &str) -> Result<SideShape, Violations> {
        Ok(match self {
            SideDoc::Acylindrical { .. } => SideShape::Acylindrical,
            SideDoc::RationalTangle { tangle, .. } => SideShape::RationalTangle(match tangle {
                TangleDoc::TwoStrand => TangleKind::TwoStrand,
                TangleDoc::HShape => TangleKind::HShape,
            }),
            SideDoc::RegularNeighborhood { .. } => SideShape::RegularNeighborhood,
            SideDoc::NonsingularAnnulus {
                pairing,
                core_label,
                region_fill,
                ..
            } => SideShape::NonsingularAnnulus {
                pairing: pairing.resolve(&format!("{field}.pairing"))?,
                core_label: policy
                    .label(*core_label)
                    .map_err(|e| vec![format!("{field}.core_label: {e}")])?,
                region_fill: region_fill.resolve(policy, &format!("{field}.region_fill"))?,
            },
            SideDoc::TwoTwoAnnuli {
                pairing,
                n,
                upper_fill,
                lower_fill,
                ..
            } => SideShape::TwoTwoAnnuli {
                pairing: pairing.resolve(&format!("{field}.pairing"))?,
                n: *n,
                upper_fill: upper_fill.resolve(policy, &format!("{field}.upper_fill"))?,
                lower_fill: lower_fill.resolve(policy, &format!("{field}.lower_fill"))?,
            },
        })
    }

    /// Builds and validates the side. `default_boundary` is used unless the
    /// side lists its own positional labels.
    pub fn resolve(
        &self,
        policy: &LabelPolicy,
        field: &str,
        default_boundary: LabelQuadruple,
    ) -> Result<SideConfiguration, Violations> {
        let shape = self.shape(policy, field)?;
        let boundary = match self.labels() {
            Some(raw) => quadruple(policy, &format!("{field}.labels"), raw)?,
            None => default_boundary,
        };
        SideConfiguration::new(shape, boundary).map_err(|e| match e {
            gutsbound::GutsError::InvalidSide(report) => report
                .violations
                .iter()
                .map(|v| format!("{field}: {v}"))
                .collect(),
            other => vec![format!("{field}: {other}")],
        })
    }
}

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self, Violations> {
        serde_json::from_str(text).map_err(|e| vec![format!("document: {e}")])
    }

    /// Rejects documents whose hypotheses are not all attested.
    pub fn check_attestations(&self) -> Result<(), Violations> {
        let failed = self.attestations.failures();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(failed
                .into_iter()
                .map(|name| format!("attestations.{name} is false: hypothesis not met"))
                .collect())
        }
    }

    pub fn sigma(&self) -> Result<TangleWord, Violations> {
        match &self.sigma {
            None => Ok(TangleWord::empty()),
            Some(s) => s.parse().map_err(|e| vec![format!("sigma: {e}")]),
        }
    }
}

/// A 2-orbifold named on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum NamedOrbifold {
    Sphere(SphereOrbifold),
    MirroredDisk(MirroredDiskOrbifold),
}

/// Parses `S2(2,3,7)`, `S2(2,3,3,3)` or `D2*(3,5)`.
pub fn parse_orbifold(spec: &str, policy: &LabelPolicy) -> Result<NamedOrbifold, Violations> {
    let spec = spec.trim();
    let bad = || {
        vec![format!(
            "cannot parse {spec:?}; expected S2(n1,...) or D2*(n1,n2)"
        )]
    };
    let (head, rest) = spec.split_once('(').ok_or_else(bad)?;
    let body = rest.strip_suffix(')').ok_or_else(bad)?;
    let raw: Vec<i64> = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?
    };
    match head.trim() {
        "S2" => Ok(NamedOrbifold::Sphere(SphereOrbifold::new(labels(
            policy, "labels", &raw,
        )?))),
        "D2*" => match (SurfaceDoc {
            kind: SurfaceType::MirroredDisk,
            labels: raw,
        })
        .resolve(policy)?
        {
            Surface::MirroredDisk(d) => Ok(NamedOrbifold::MirroredDisk(d)),
            Surface::Sphere(_) => unreachable!(),
        },
        _ => Err(bad()),
    }
}
