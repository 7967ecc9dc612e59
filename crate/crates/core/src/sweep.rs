//! Exhaustive search for the smallest positive bound over all label
//! assignments up to a maximum.

use std::collections::BTreeMap;

use crate::engine::{
    corollary_bound, guts_contribution, volume_bound, BoundCase, BoundOutcome, ContributionKind,
};
use crate::error::{GutsError, Result};
use crate::ibundles::IBundleSpec;
use crate::orbifold::{label, ConeLabel, LabelQuadruple, MirroredDiskOrbifold, DEFAULT_MAX_LABEL};
use crate::rational::ExactRational;
use crate::splitting::{Pairing, RegionFill, SideConfiguration, SideShape};

/// One validated side for each contribution kind realizable on `boundary`.
pub fn witness_sides(boundary: &LabelQuadruple) -> Vec<SideConfiguration> {
    let two = ConeLabel::TWO;
    let mut candidates = vec![SideShape::Acylindrical];
    for pairing in Pairing::partitions() {
        let fill = RegionFill::IBundleRegion(IBundleSpec::type_iii(boundary.labels()));
        for region_fill in [RegionFill::AcylindricalRegion, fill] {
            candidates.push(SideShape::NonsingularAnnulus {
                pairing,
                core_label: two,
                region_fill,
            });
        }
    }
    for pairing in Pairing::all_oriented() {
        let [a, b] = pairing.ab_labels(boundary);
        let [c, d] = pairing.cd_labels(boundary);
        let uppers = if [a, b] == [two, two] {
            vec![RegionFill::SolidTorusRegion]
        } else {
            vec![
                RegionFill::AcylindricalRegion,
                RegionFill::IBundleRegion(IBundleSpec::type_v(a, b)),
            ]
        };
        for upper in &uppers {
            for lower in [
                RegionFill::AcylindricalRegion,
                RegionFill::IBundleRegion(IBundleSpec::type_v(c, d)),
            ] {
                candidates.push(SideShape::TwoTwoAnnuli {
                    pairing,
                    n: 1,
                    upper_fill: upper.clone(),
                    lower_fill: lower,
                });
            }
        }
    }

    let mut seen = BTreeMap::new();
    for shape in candidates {
        let Ok(side) = SideConfiguration::new(shape, *boundary) else {
            continue;
        };
        let kind = guts_contribution(&side)
            .expect("witnesses are never tangles")
            .kind;
        seen.entry(kind).or_insert(side);
    }
    seen.into_values().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SweepSurface {
    Sphere(LabelQuadruple),
    MirroredDisk(MirroredDiskOrbifold),
}

#[derive(Clone, PartialEq, Debug)]
pub struct CaseMinimum {
    pub case: BoundCase,
    pub coefficient: ExactRational,
    pub numeric_value: f64,
    pub surface: SweepSurface,
    pub side0: ContributionKind,
    pub side1: ContributionKind,
    /// The labels entering the case's formula, e.g. the pair `{2,3}` for
    /// case 5 or both pairs for case 4.
    pub formula_labels: Vec<ConeLabel>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SweepSummary {
    pub label_max: u32,
    /// Minimum per case, in case order.
    pub per_case: Vec<CaseMinimum>,
}

impl SweepSummary {
    /// Smallest coefficient among the cases accepted by `filter`. Ties go to
    /// theorem cases before corollary cases, then to the case that uses the
    /// fewest labels of the surface (the higher case number).
    pub fn global_minimum_by(&self, filter: impl Fn(BoundCase) -> bool) -> Option<&CaseMinimum> {
        self.per_case
            .iter()
            .filter(|m| filter(m.case))
            .min_by_key(|m| {
                let (corollary, k) = match m.case {
                    BoundCase::Theorem(k) => (false, k),
                    BoundCase::Corollary(k) => (true, k),
                };
                (m.coefficient, corollary, std::cmp::Reverse(k))
            })
    }

    pub fn global_minimum(&self) -> &CaseMinimum {
        self.global_minimum_by(|_| true)
            .expect("a successful sweep has at least one case")
    }

    pub fn case(&self, case: BoundCase) -> Option<&CaseMinimum> {
        self.per_case.iter().find(|m| m.case == case)
    }
}

fn pair_labels(kind: &ContributionKind) -> Vec<ConeLabel> {
    match kind {
        ContributionKind::PartialPair(p) => p.to_vec(),
        _ => Vec::new(),
    }
}

fn formula_labels(
    case: BoundCase,
    surface: &SweepSurface,
    k0: &ContributionKind,
    k1: &ContributionKind,
) -> Vec<ConeLabel> {
    match (case, surface) {
        (BoundCase::Theorem(1 | 3), SweepSurface::Sphere(q)) => q.sorted().to_vec(),
        (BoundCase::Theorem(2), SweepSurface::Sphere(q)) => {
            let mut v = q.sorted().to_vec();
            v.extend(pair_labels(k0));
            v.extend(pair_labels(k1));
            v
        }
        (BoundCase::Corollary(1), SweepSurface::MirroredDisk(d)) => vec![d.n1(), d.n2()],
        _ => {
            let mut v = pair_labels(k0);
            v.extend(pair_labels(k1));
            v
        }
    }
}

fn record(
    table: &mut BTreeMap<BoundCase, CaseMinimum>,
    outcome: &BoundOutcome,
    surface: SweepSurface,
    k0: ContributionKind,
    k1: ContributionKind,
) {
    let BoundOutcome::Bound(b) = outcome else {
        return;
    };
    if !b.coefficient.is_positive() {
        return;
    }
    if table
        .get(&b.case)
        .is_some_and(|m| m.coefficient <= b.coefficient)
    {
        return;
    }
    table.insert(
        b.case,
        CaseMinimum {
            case: b.case,
            coefficient: b.coefficient,
            numeric_value: b.numeric_value,
            surface,
            side0: k0,
            side1: k1,
            formula_labels: formula_labels(b.case, &surface, &k0, &k1),
        },
    );
}

/// Sweeps every sorted quadruple (and every mirrored disk) with labels in
/// `2..=label_max` and every realizable pair of side contributions.
pub fn minimum_positive_bound(label_max: u32) -> Result<SweepSummary> {
    if label_max < 3 {
        return Err(GutsError::HypothesisViolation(
            "no positive bound: with labels ≤ 2 the only surface is S2(2,2,2,2)".into(),
        ));
    }
    if label_max > DEFAULT_MAX_LABEL {
        return Err(GutsError::InvalidLabelCap(label_max));
    }
    let mut table = BTreeMap::new();

    for a in 2..=label_max {
        for b in a..=label_max {
            for c in b..=label_max {
                for d in c..=label_max {
                    if d == 2 {
                        continue;
                    }
                    let q = LabelQuadruple::new([label(a), label(b), label(c), label(d)]);
                    let sides = witness_sides(&q);
                    let kinds: Vec<_> = sides
                        .iter()
                        .map(|s| guts_contribution(s).unwrap().kind)
                        .collect();
                    for i in 0..sides.len() {
                        for j in i..sides.len() {
                            let out = volume_bound(&q, &sides[i], &sides[j])?;
                            record(
                                &mut table,
                                &out,
                                SweepSurface::Sphere(q),
                                kinds[i],
                                kinds[j],
                            );
                        }
                    }
                }
            }
        }
    }

    for n1 in 2..=label_max {
        for n2 in n1.max(3)..=label_max {
            let disk = MirroredDiskOrbifold::new(label(n1), label(n2));
            for side in witness_sides(&disk.double_quadruple()) {
                let kind = guts_contribution(&side).unwrap().kind;
                let out = corollary_bound(&disk, &side)?;
                record(
                    &mut table,
                    &out,
                    SweepSurface::MirroredDisk(disk),
                    kind,
                    ContributionKind::Empty,
                );
            }
        }
    }

    Ok(SweepSummary {
        label_max,
        per_case: table.into_values().collect(),
    })
}
