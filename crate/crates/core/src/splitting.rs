//! Declared topology of one side `Q` of the splitting surface, validated
//! against the admissible essential-annulus configurations.
//!
//! Sides are not detected from a triangulation; the caller declares which
//! configuration occurs and the validator checks that the declaration is
//! consistent with the cone labels on the boundary.

use std::fmt;

use crate::error::{GutsError, Result};
use crate::ibundles::{boundary_labels, IBundleSpec};
use crate::orbifold::{ConeLabel, LabelQuadruple, SphereOrbifold};
use crate::tangle::Perm4;

/// Split of the four marked points (positions `0..4`) into two pairs. The
/// roles are ordered: `ab` is the "upper" pair and `cd` the "lower" one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pairing {
    ab: [usize; 2],
    cd: [usize; 2],
}

impl Pairing {
    pub fn new(ab: [usize; 2], cd: [usize; 2]) -> Result<Self> {
        let mut seen = [false; 4];
        for p in ab.into_iter().chain(cd) {
            if p >= 4 || seen[p] {
                return Err(GutsError::InvalidPairing(format!(
                    "{ab:?}/{cd:?} is not a split of positions 0..4 into two pairs"
                )));
            }
            seen[p] = true;
        }
        let sort = |[x, y]: [usize; 2]| [x.min(y), x.max(y)];
        Ok(Pairing {
            ab: sort(ab),
            cd: sort(cd),
        })
    }

    /// The three unordered splits, with `ab` containing position 0.
    pub fn partitions() -> [Pairing; 3] {
        [
            Pairing {
                ab: [0, 1],
                cd: [2, 3],
            },
            Pairing {
                ab: [0, 2],
                cd: [1, 3],
            },
            Pairing {
                ab: [0, 3],
                cd: [1, 2],
            },
        ]
    }

    /// All six role-ordered pairings.
    pub fn all_oriented() -> [Pairing; 6] {
        let [p, q, r] = Self::partitions();
        [p, p.swapped(), q, q.swapped(), r, r.swapped()]
    }

    pub fn ab(&self) -> [usize; 2] {
        self.ab
    }

    pub fn cd(&self) -> [usize; 2] {
        self.cd
    }

    pub fn swapped(&self) -> Pairing {
        Pairing {
            ab: self.cd,
            cd: self.ab,
        }
    }

    /// The same split after marked point `i` moves to position `perm.image(i)`.
    pub fn permuted(&self, perm: &Perm4) -> Pairing {
        let map = |[x, y]: [usize; 2]| [perm.image(x), perm.image(y)];
        Pairing::new(map(self.ab), map(self.cd)).expect("permutations preserve splits")
    }

    pub fn ab_labels(&self, boundary: &LabelQuadruple) -> [ConeLabel; 2] {
        sorted_pair(boundary.at(self.ab[0]), boundary.at(self.ab[1]))
    }

    pub fn cd_labels(&self, boundary: &LabelQuadruple) -> [ConeLabel; 2] {
        sorted_pair(boundary.at(self.cd[0]), boundary.at(self.cd[1]))
    }
}

fn sorted_pair(x: ConeLabel, y: ConeLabel) -> [ConeLabel; 2] {
    [x.min(y), x.max(y)]
}

fn is_two_two(pair: [ConeLabel; 2]) -> bool {
    pair == [ConeLabel::TWO; 2]
}

/// What fills a region cut off by the essential annuli.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RegionFill {
    AcylindricalRegion,
    IBundleRegion(IBundleSpec),
    SolidTorusRegion,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TangleKind {
    TwoStrand,
    HShape,
}

/// An unvalidated side description.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SideShape {
    /// No essential annuli.
    Acylindrical,
    /// An orbifold rational tangle; makes the surface compressible.
    RationalTangle(TangleKind),
    /// One nonsingular essential annulus around a singular loop of order
    /// `core_label`, cutting off a region `R` bounded by all four points.
    NonsingularAnnulus {
        pairing: Pairing,
        core_label: ConeLabel,
        region_fill: RegionFill,
    },
    /// One or two `D²(2,2)` annuli separating `ab` from `cd`, with a central
    /// arc labeled `n` (`n = 1` means no singular arc).
    TwoTwoAnnuli {
        pairing: Pairing,
        n: u32,
        upper_fill: RegionFill,
        lower_fill: RegionFill,
    },
    /// Closed regular neighborhood of a mirrored disk `D²₊(n₁,n₂)`; its
    /// boundary must be `{n₁,n₁,n₂,n₂}`.
    RegularNeighborhood,
}

impl SideShape {
    pub fn is_rational_tangle(&self) -> bool {
        matches!(self, SideShape::RationalTangle(_))
    }

    /// Relabels the marked points: the shape to use on `boundary.permuted(perm)`.
    pub fn permuted(&self, perm: &Perm4) -> SideShape {
        match self {
            SideShape::NonsingularAnnulus {
                pairing,
                core_label,
                region_fill,
            } => SideShape::NonsingularAnnulus {
                pairing: pairing.permuted(perm),
                core_label: *core_label,
                region_fill: region_fill.clone(),
            },
            SideShape::TwoTwoAnnuli {
                pairing,
                n,
                upper_fill,
                lower_fill,
            } => SideShape::TwoTwoAnnuli {
                pairing: pairing.permuted(perm),
                n: *n,
                upper_fill: upper_fill.clone(),
                lower_fill: lower_fill.clone(),
            },
            other => other.clone(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ViolationCode {
    /// A pair of boundary points labeled `{2,2}` would bound an essential torus.
    EssentialTorus,
    /// Both pairs are `{2,2}`: the surface itself is an orbifold torus.
    OrbifoldTorusSurface,
    TwistMustBeOne,
    TwistBelowOne,
    UpperFillMustBeSolidTorus,
    SolidTorusFillNotAllowed,
    FillBoundaryMismatch,
    NotADouble,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Violation {
    pub code: ViolationCode,
    pub message: String,
}

impl Violation {
    fn new(code: ViolationCode, message: impl Into<String>) -> Self {
        Violation {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn sorted(mut labels: [ConeLabel; 4]) -> [ConeLabel; 4] {
    labels.sort_unstable();
    labels
}

/// Receives violations as they are found. Returning `false` stops the check.
trait Sink {
    fn push(&mut self, code: ViolationCode, message: fmt::Arguments<'_>) -> bool;
}

impl Sink for ValidationReport {
    fn push(&mut self, code: ViolationCode, message: fmt::Arguments<'_>) -> bool {
        self.violations
            .push(Violation::new(code, message.to_string()));
        true
    }
}

/// Records only whether anything was violated.
struct FirstViolation(bool);

impl Sink for FirstViolation {
    fn push(&mut self, _: ViolationCode, _: fmt::Arguments<'_>) -> bool {
        self.0 = true;
        false
    }
}

fn check_fill(
    sink: &mut impl Sink,
    name: &str,
    fill: &RegionFill,
    required: [ConeLabel; 4],
) -> bool {
    let required = sorted(required);
    match fill {
        RegionFill::AcylindricalRegion => true,
        // Only an orbifold torus S²(2,2,2,2) bounds a solid orbifold torus.
        RegionFill::SolidTorusRegion if required.iter().any(|&l| l != ConeLabel::TWO) => sink.push(
            ViolationCode::SolidTorusFillNotAllowed,
            format_args!(
                "{name} region bounded by {} cannot be a solid orbifold torus",
                SphereOrbifold::new(required)
            ),
        ),
        RegionFill::SolidTorusRegion => true,
        RegionFill::IBundleRegion(spec) if boundary_labels(spec) != required => sink.push(
            ViolationCode::FillBoundaryMismatch,
            format_args!(
                "{name} fill {spec} has boundary {}, region requires {}",
                spec.boundary_cone_multiset(),
                SphereOrbifold::new(required)
            ),
        ),
        RegionFill::IBundleRegion(_) => true,
    }
}

macro_rules! emit {
    ($sink:expr, $code:expr, $($fmt:tt)+) => {
        if !$sink.push($code, format_args!($($fmt)+)) {
            return;
        }
    };
}

fn check_side(sink: &mut impl Sink, shape: &SideShape, boundary: &LabelQuadruple) {
    let two = ConeLabel::TWO;
    match shape {
        SideShape::Acylindrical | SideShape::RationalTangle(_) => {}
        SideShape::RegularNeighborhood => {
            if boundary.as_double().is_none() {
                emit!(
                    sink,
                    ViolationCode::NotADouble,
                    "regular neighborhood boundary must be {{n1,n1,n2,n2}}, got {boundary}"
                );
            }
        }
        SideShape::NonsingularAnnulus {
            pairing,
            region_fill,
            ..
        } => {
            for pair in [pairing.ab_labels(boundary), pairing.cd_labels(boundary)] {
                if is_two_two(pair) {
                    emit!(
                        sink,
                        ViolationCode::EssentialTorus,
                        "pair {{2,2}} beside a nonsingular annulus determines an essential torus"
                    );
                }
            }
            if *region_fill == RegionFill::SolidTorusRegion {
                emit!(
                    sink,
                    ViolationCode::SolidTorusFillNotAllowed,
                    "region beside a nonsingular annulus cannot be a solid orbifold torus"
                );
            } else {
                check_fill(sink, "region", region_fill, boundary.labels());
            }
        }
        SideShape::TwoTwoAnnuli {
            pairing,
            n,
            upper_fill,
            lower_fill,
        } => {
            let ab = pairing.ab_labels(boundary);
            let cd = pairing.cd_labels(boundary);
            if is_two_two(ab) && is_two_two(cd) {
                emit!(
                    sink,
                    ViolationCode::OrbifoldTorusSurface,
                    "both pairs are {{2,2}}: the splitting surface is an orbifold torus"
                );
                return;
            }
            // The pair required to differ from {2,2} is "cd"; accept either role order.
            let (ab, cd, upper, lower) = if is_two_two(cd) {
                (cd, ab, lower_fill, upper_fill)
            } else {
                (ab, cd, upper_fill, lower_fill)
            };
            if *n < 1 {
                emit!(
                    sink,
                    ViolationCode::TwistBelowOne,
                    "n must be at least 1, got {n}"
                );
            }
            if is_two_two(ab) {
                if *n != 1 {
                    emit!(
                        sink,
                        ViolationCode::TwistMustBeOne,
                        "n must be 1 when a pair is {{2,2}}, got {n}"
                    );
                }
                if *upper != RegionFill::SolidTorusRegion {
                    emit!(
                        sink,
                        ViolationCode::UpperFillMustBeSolidTorus,
                        "region beside the {{2,2}} pair must be a solid orbifold torus"
                    );
                }
            } else if !check_fill(sink, "upper", upper, [ab[0], ab[1], two, two]) {
                return;
            }
            check_fill(sink, "lower", lower, [cd[0], cd[1], two, two]);
        }
    }
}

/// Checks a declared side against the four boundary labels and lists every
/// violated constraint.
pub fn validate_side(shape: &SideShape, boundary: &LabelQuadruple) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_side(&mut report, shape, boundary);
    report
}

/// Same decision as [`validate_side`], without building messages.
pub fn is_valid_side(shape: &SideShape, boundary: &LabelQuadruple) -> bool {
    let mut seen = FirstViolation(false);
    check_side(&mut seen, shape, boundary);
    !seen.0
}

/// A side whose declaration passed [`validate_side`] against `boundary`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SideConfiguration {
    shape: SideShape,
    boundary: LabelQuadruple,
}

impl SideConfiguration {
    pub fn new(shape: SideShape, boundary: LabelQuadruple) -> Result<Self> {
        if !is_valid_side(&shape, &boundary) {
            return Err(GutsError::InvalidSide(validate_side(&shape, &boundary)));
        }
        Ok(SideConfiguration { shape, boundary })
    }

    pub fn acylindrical(boundary: LabelQuadruple) -> Self {
        SideConfiguration {
            shape: SideShape::Acylindrical,
            boundary,
        }
    }

    pub fn rational_tangle(kind: TangleKind, boundary: LabelQuadruple) -> Self {
        SideConfiguration {
            shape: SideShape::RationalTangle(kind),
            boundary,
        }
    }

    pub fn regular_neighborhood(boundary: LabelQuadruple) -> Result<Self> {
        Self::new(SideShape::RegularNeighborhood, boundary)
    }

    pub fn shape(&self) -> &SideShape {
        &self.shape
    }

    pub fn boundary(&self) -> &LabelQuadruple {
        &self.boundary
    }
}

pub fn is_incompressible(side0: &SideConfiguration, side1: &SideConfiguration) -> bool {
    !side0.shape.is_rational_tangle() && !side1.shape.is_rational_tangle()
}
