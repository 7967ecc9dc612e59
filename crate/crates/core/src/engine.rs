//! Guts contributions of each side and the combined volume lower bound.
//!
//! Each side of the splitting surface contributes a rational multiple of
//! `V8` to `−V8·χ(guts)`:
//!
//! * an acylindrical side (or an annulus cutting off an acylindrical region)
//!   contributes fully, `−χ(S)/2 = (2 − Σ 1/nᵢ)/2`;
//! * an upper or lower region beside `D²(2,2)` annuli that is acylindrical
//!   contributes `(1 − 1/a − 1/b)/2`, with `a, b` the labels of its pair;
//! * I-bundle regions, solid tori, and regular neighborhoods contribute
//!   nothing.
//!
//! The two contributions add; which theorem case applies depends only on the
//! kinds involved. Hyperbolic turnover boundary components are never counted,
//! so the bound always uses `χ(S)`.

use std::fmt;

use crate::error::{GutsError, Result};
use crate::numerics::v8;
use crate::orbifold::{ConeLabel, LabelQuadruple, MirroredDiskOrbifold};
use crate::rational::ExactRational;
use crate::splitting::{is_incompressible, RegionFill, SideConfiguration, SideShape};
use crate::tangle::{assemble_hungry, HungryForm, HungrySurface, Perm4, TangleWord};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ContributionKind {
    Full,
    /// Labels sorted ascending.
    PartialPair([ConeLabel; 2]),
    /// Upper pair then lower pair, each sorted.
    PartialBoth([[ConeLabel; 2]; 2]),
    Empty,
}

impl fmt::Display for ContributionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContributionKind::Full => f.write_str("full"),
            ContributionKind::PartialPair([a, b]) => write!(f, "partial({a},{b})"),
            ContributionKind::PartialBoth([[a, b], [c, d]]) => {
                write!(f, "partial({a},{b})+partial({c},{d})")
            }
            ContributionKind::Empty => f.write_str("empty"),
        }
    }
}

/// One side's share of the bound: `coefficient · V8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GutsContribution {
    pub kind: ContributionKind,
    pub coefficient: ExactRational,
}

/// `(2 − Σ 1/nᵢ)/2 = −χ(S)/2`.
pub fn full_coefficient(surface: &LabelQuadruple) -> ExactRational {
    let n = surface.labels().map(|l| i128::from(l.get()));
    let product: i128 = n.iter().product();
    let cofactors: i128 = n.iter().map(|&x| product / x).sum();
    ExactRational::new(2 * product - cofactors, 2 * product)
}

/// `(1 − 1/a − 1/b)/2 = −χ(S²(a,b,2,2))/2`.
pub fn partial_coefficient([a, b]: [ConeLabel; 2]) -> ExactRational {
    let (a, b) = (i128::from(a.get()), i128::from(b.get()));
    ExactRational::new(a * b - a - b, 2 * a * b)
}

pub fn guts_contribution(side: &SideConfiguration) -> Result<GutsContribution> {
    let boundary = side.boundary();
    let full = || GutsContribution {
        kind: ContributionKind::Full,
        coefficient: full_coefficient(boundary),
    };
    let empty = GutsContribution {
        kind: ContributionKind::Empty,
        coefficient: ExactRational::ZERO,
    };
    Ok(match side.shape() {
        SideShape::RationalTangle(_) => return Err(GutsError::CompressibleSide),
        SideShape::Acylindrical => full(),
        SideShape::RegularNeighborhood => empty,
        SideShape::NonsingularAnnulus { region_fill, .. } => match region_fill {
            RegionFill::AcylindricalRegion => full(),
            _ => empty,
        },
        SideShape::TwoTwoAnnuli {
            pairing,
            upper_fill,
            lower_fill,
            ..
        } => {
            let upper = (*upper_fill == RegionFill::AcylindricalRegion)
                .then(|| pairing.ab_labels(boundary));
            let lower = (*lower_fill == RegionFill::AcylindricalRegion)
                .then(|| pairing.cd_labels(boundary));
            match (upper, lower) {
                (Some(u), Some(l)) => GutsContribution {
                    kind: ContributionKind::PartialBoth([u, l]),
                    coefficient: partial_coefficient(u) + partial_coefficient(l),
                },
                (Some(p), None) | (None, Some(p)) => GutsContribution {
                    kind: ContributionKind::PartialPair(p),
                    coefficient: partial_coefficient(p),
                },
                (None, None) => empty,
            }
        }
    })
}

/// Which numbered bound applies: cases 1–5 for a four-pointed sphere,
/// cases 1–2 for a mirrored disk.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BoundCase {
    Theorem(u8),
    Corollary(u8),
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundCase::Theorem(k) => write!(f, "{k}"),
            BoundCase::Corollary(k) => write!(f, "C{k}"),
        }
    }
}

impl std::str::FromStr for BoundCase {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (corollary, digits) = match s.strip_prefix(['C', 'c']) {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let k: u8 = digits.parse().map_err(|_| format!("invalid case {s:?}"))?;
        match (corollary, k) {
            (false, 1..=5) => Ok(BoundCase::Theorem(k)),
            (true, 1..=2) => Ok(BoundCase::Corollary(k)),
            _ => Err(format!("invalid case {s:?}")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct VolumeBound {
    pub coefficient: ExactRational,
    pub case: BoundCase,
    /// `coefficient · V8`.
    pub numeric_value: f64,
}

impl VolumeBound {
    pub fn new(coefficient: ExactRational, case: BoundCase) -> Self {
        VolumeBound {
            coefficient,
            case,
            numeric_value: coefficient.to_f64() * v8(),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum BoundOutcome {
    Bound(VolumeBound),
    Hungry(Box<HungryForm>),
    Compressible,
}

impl BoundOutcome {
    pub fn bound(&self) -> Option<&VolumeBound> {
        match self {
            BoundOutcome::Bound(b) => Some(b),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Share {
    Full,
    Pair,
    Nothing,
}

fn share(kind: &ContributionKind) -> Share {
    match kind {
        ContributionKind::Full | ContributionKind::PartialBoth(_) => Share::Full,
        ContributionKind::PartialPair(_) => Share::Pair,
        ContributionKind::Empty => Share::Nothing,
    }
}

/// Theorem case for a pair of contribution kinds; `None` when both are empty.
pub fn theorem_case(k0: &ContributionKind, k1: &ContributionKind) -> Option<u8> {
    use Share::*;
    match (share(k0), share(k1)) {
        (Full, Full) => Some(1),
        (Full, Pair) | (Pair, Full) => Some(2),
        (Full, Nothing) | (Nothing, Full) => Some(3),
        (Pair, Pair) => Some(4),
        (Pair, Nothing) | (Nothing, Pair) => Some(5),
        (Nothing, Nothing) => None,
    }
}

/// Some permutation carrying `from` onto `to` positionally (labels must agree
/// as multisets).
pub fn matching_permutation(from: &LabelQuadruple, to: &LabelQuadruple) -> Option<Perm4> {
    let mut used = [false; 4];
    let mut images = [0usize; 4];
    for (i, image) in images.iter_mut().enumerate() {
        let j = (0..4).find(|&j| !used[j] && to.at(j) == from.at(i))?;
        used[j] = true;
        *image = j;
    }
    Perm4::from_images(images)
}

fn check_surface(surface: &LabelQuadruple, side: &SideConfiguration) -> Result<()> {
    if side.boundary().same_multiset(surface) {
        Ok(())
    } else {
        Err(GutsError::SurfaceMismatch {
            expected: surface.to_sphere().to_string(),
            found: side.boundary().to_string(),
        })
    }
}

pub fn volume_bound(
    surface: &LabelQuadruple,
    side0: &SideConfiguration,
    side1: &SideConfiguration,
) -> Result<BoundOutcome> {
    check_surface(surface, side0)?;
    check_surface(surface, side1)?;
    if !is_incompressible(side0, side1) {
        return Ok(BoundOutcome::Compressible);
    }
    if surface.is_pillowcase() {
        return Err(GutsError::HypothesisViolation(format!(
            "{surface} is Euclidean (χ = 0); its complement cannot carry a finite-volume hyperbolic structure"
        )));
    }
    let c0 = guts_contribution(side0)?;
    let c1 = guts_contribution(side1)?;
    match theorem_case(&c0.kind, &c1.kind) {
        Some(case) => Ok(BoundOutcome::Bound(VolumeBound::new(
            c0.coefficient + c1.coefficient,
            BoundCase::Theorem(case),
        ))),
        None => {
            // Put the regular neighborhood, if any, on the glued side.
            let (a, b) = if *side0.shape() == SideShape::RegularNeighborhood {
                (side1, side0)
            } else {
                (side0, side1)
            };
            let hungry_surface = match (b.shape(), surface.as_double()) {
                (SideShape::RegularNeighborhood, Some(d)) => HungrySurface::MirroredDisk(d),
                _ => HungrySurface::Sphere4(*surface),
            };
            let perm = matching_permutation(a.boundary(), b.boundary())
                .expect("sides share the surface multiset");
            let form = assemble_hungry(hungry_surface, a, b, TangleWord::realizing(&perm))?;
            Ok(BoundOutcome::Hungry(Box::new(form)))
        }
    }
}

/// Bound for a surface `D²₊(n₁,n₂)`: side 0 lies across the boundary
/// `S²(n₁,n₁,n₂,n₂)` of its regular neighborhood, which is the other side.
pub fn corollary_bound(
    d: &MirroredDiskOrbifold,
    side0: &SideConfiguration,
) -> Result<BoundOutcome> {
    let surface = d.double_quadruple();
    check_surface(&surface, side0)?;
    let neighborhood = SideConfiguration::regular_neighborhood(*side0.boundary())?;
    let outcome = volume_bound(&surface, side0, &neighborhood)?;
    Ok(match outcome {
        BoundOutcome::Bound(b) => {
            let case = match b.case {
                BoundCase::Theorem(3) => BoundCase::Corollary(1),
                BoundCase::Theorem(5) => BoundCase::Corollary(2),
                other => unreachable!("regular neighborhood contributes nothing, got case {other}"),
            };
            BoundOutcome::Bound(VolumeBound { case, ..b })
        }
        other => other,
    })
}
