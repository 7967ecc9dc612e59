//! Cone labels, the 2-orbifolds that occur as splitting surfaces, and their
//! Euler characteristics.

use std::fmt;

use crate::error::{GutsError, Result};
use crate::rational::ExactRational;

/// Largest cone order accepted by default.
pub const DEFAULT_MAX_LABEL: u32 = 1_000_000;

/// Bounds on admissible cone orders. The cap keeps exact denominators small;
/// it may be lowered but never raised past [`DEFAULT_MAX_LABEL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelPolicy {
    max_label: u32,
}

impl LabelPolicy {
    pub fn new(max_label: u32) -> Result<Self> {
        if !(2..=DEFAULT_MAX_LABEL).contains(&max_label) {
            return Err(GutsError::InvalidLabelCap(max_label));
        }
        Ok(LabelPolicy { max_label })
    }

    pub fn max_label(&self) -> u32 {
        self.max_label
    }

    pub fn label(&self, value: i64) -> Result<ConeLabel> {
        if value < 2 {
            return Err(GutsError::ConeOrderTooSmall(value));
        }
        if value > i64::from(self.max_label) {
            return Err(GutsError::ConeOrderAboveCap {
                value,
                cap: self.max_label,
            });
        }
        Ok(ConeLabel(value as u32))
    }
}

impl Default for LabelPolicy {
    fn default() -> Self {
        LabelPolicy {
            max_label: DEFAULT_MAX_LABEL,
        }
    }
}

/// Order of a cone point or singular edge; always at least 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConeLabel(u32);

impl ConeLabel {
    pub const TWO: ConeLabel = ConeLabel(2);

    /// Validates against the default [`LabelPolicy`].
    pub fn new(value: i64) -> Result<Self> {
        LabelPolicy::default().label(value)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn reciprocal(self) -> ExactRational {
        ExactRational::unit_fraction(self.0)
    }
}

impl fmt::Display for ConeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<i64> for ConeLabel {
    type Error = GutsError;
    fn try_from(value: i64) -> Result<Self> {
        ConeLabel::new(value)
    }
}

/// Shorthand used throughout the tests and the sweep; panics on invalid input.
pub fn label(value: u32) -> ConeLabel {
    ConeLabel::new(i64::from(value)).expect("invalid cone label")
}

pub(crate) fn write_labels(f: &mut fmt::Formatter<'_>, labels: &[ConeLabel]) -> fmt::Result {
    for (i, l) in labels.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Orientable 2-orbifold with underlying space the sphere and the given cone
/// points. Stored as a multiset (sorted ascending).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SphereOrbifold {
    cone_orders: Vec<ConeLabel>,
}

impl SphereOrbifold {
    pub fn new(cone_orders: impl IntoIterator<Item = ConeLabel>) -> Self {
        let mut cone_orders: Vec<_> = cone_orders.into_iter().collect();
        cone_orders.sort_unstable();
        SphereOrbifold { cone_orders }
    }

    pub fn cone_orders(&self) -> &[ConeLabel] {
        &self.cone_orders
    }

    pub fn len(&self) -> usize {
        self.cone_orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cone_orders.is_empty()
    }

    pub fn euler_characteristic(&self) -> ExactRational {
        euler_sphere(self)
    }
}

impl fmt::Display for SphereOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S2(")?;
        write_labels(f, &self.cone_orders)?;
        f.write_str(")")
    }
}

/// The four marked points of a splitting surface `S²(n₁,n₂,n₃,n₄)` in a fixed
/// order. Positions (0-based) are what pairings and tangle words act on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LabelQuadruple([ConeLabel; 4]);

impl LabelQuadruple {
    pub fn new(labels: [ConeLabel; 4]) -> Self {
        LabelQuadruple(labels)
    }

    pub fn from_values(values: [u32; 4]) -> Result<Self> {
        let mut out = [ConeLabel::TWO; 4];
        for (slot, v) in out.iter_mut().zip(values) {
            *slot = ConeLabel::new(i64::from(v))?;
        }
        Ok(LabelQuadruple(out))
    }

    pub fn from_slice(labels: &[ConeLabel]) -> Result<Self> {
        let arr: [ConeLabel; 4] = labels.try_into().map_err(|_| GutsError::WrongArity {
            expected: 4,
            found: labels.len(),
        })?;
        Ok(LabelQuadruple(arr))
    }

    pub fn labels(&self) -> [ConeLabel; 4] {
        self.0
    }

    pub fn at(&self, position: usize) -> ConeLabel {
        self.0[position]
    }

    /// Labels sorted ascending; equal for quadruples with equal multisets.
    pub fn sorted(&self) -> [ConeLabel; 4] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    pub fn same_multiset(&self, other: &LabelQuadruple) -> bool {
        self.sorted() == other.sorted()
    }

    pub fn to_sphere(&self) -> SphereOrbifold {
        SphereOrbifold::new(self.0)
    }

    pub fn euler_characteristic(&self) -> ExactRational {
        euler_sphere(&self.to_sphere())
    }

    /// True when every label is 2, i.e. the surface is an orbifold torus.
    pub fn is_pillowcase(&self) -> bool {
        self.0.iter().all(|&l| l == ConeLabel::TWO)
    }

    /// If the multiset has the form `{x,x,y,y}`, the mirrored disk it doubles.
    pub fn as_double(&self) -> Option<MirroredDiskOrbifold> {
        let s = self.sorted();
        (s[0] == s[1] && s[2] == s[3]).then(|| MirroredDiskOrbifold::new(s[0], s[2]))
    }
}

impl fmt::Display for LabelQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S2(")?;
        write_labels(f, &self.0)?;
        f.write_str(")")
    }
}

/// Nonorientable `D²₊(n₁,n₂)`: a disk with mirrored boundary and two interior
/// cone points. The pair is unordered (stored ascending).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MirroredDiskOrbifold {
    n1: ConeLabel,
    n2: ConeLabel,
}

impl MirroredDiskOrbifold {
    pub fn new(a: ConeLabel, b: ConeLabel) -> Self {
        MirroredDiskOrbifold {
            n1: a.min(b),
            n2: a.max(b),
        }
    }

    pub fn n1(&self) -> ConeLabel {
        self.n1
    }

    pub fn n2(&self) -> ConeLabel {
        self.n2
    }

    pub fn euler_characteristic(&self) -> ExactRational {
        euler_mirrored_disk(self)
    }

    /// Boundary of a regular neighborhood, `S²(n₁,n₁,n₂,n₂)`.
    pub fn double(&self) -> SphereOrbifold {
        double_of_mirrored_disk(self)
    }

    pub fn double_quadruple(&self) -> LabelQuadruple {
        LabelQuadruple([self.n1, self.n1, self.n2, self.n2])
    }
}

impl fmt::Display for MirroredDiskOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D2*({},{})", self.n1, self.n2)
    }
}

/// `χ = 2 − Σ (1 − 1/nᵢ)`.
pub fn euler_sphere(s: &SphereOrbifold) -> ExactRational {
    s.cone_orders.iter().fold(ExactRational::TWO, |chi, n| {
        chi - (ExactRational::ONE - n.reciprocal())
    })
}

/// `χ = −1 + 1/n₁ + 1/n₂`.
pub fn euler_mirrored_disk(d: &MirroredDiskOrbifold) -> ExactRational {
    -ExactRational::ONE + d.n1.reciprocal() + d.n2.reciprocal()
}

pub fn double_of_mirrored_disk(d: &MirroredDiskOrbifold) -> SphereOrbifold {
    SphereOrbifold::new([d.n1, d.n1, d.n2, d.n2])
}

/// Geometry of a vertex (or turnover) with edge labels `p, q, r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TripleClass {
    Spherical,
    RigidEuclidean,
    Hyperbolic,
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleClass::Spherical => "spherical",
            TripleClass::RigidEuclidean => "rigid-euclidean",
            TripleClass::Hyperbolic => "hyperbolic",
        })
    }
}

pub fn classify_triple(p: ConeLabel, q: ConeLabel, r: ConeLabel) -> TripleClass {
    let sum = p.reciprocal() + q.reciprocal() + r.reciprocal();
    match sum.cmp(&ExactRational::ONE) {
        std::cmp::Ordering::Greater => TripleClass::Spherical,
        std::cmp::Ordering::Equal => TripleClass::RigidEuclidean,
        std::cmp::Ordering::Less => TripleClass::Hyperbolic,
    }
}
