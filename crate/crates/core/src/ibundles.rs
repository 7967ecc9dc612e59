//! The six orbifold I-bundles `(F × [−1,1]) / ((x,y) ∼ (φ(x),−y))` whose
//! boundary is a sphere with four cone points.
//!
//! | type | base `F`             | involution `φ`                    | boundary      |
//! |------|----------------------|-----------------------------------|---------------|
//! | I    | `S²(a,a,b,b)`        | reflection swapping like labels   | `{a,a,b,b}`   |
//! | II   | `S²(a,a,b,c)`        | reflection fixing `b`,`c`         | `{a,a,b,c}`   |
//! | III  | `S²(a,b,c,d)`        | reflection fixing all four        | `{a,b,c,d}`   |
//! | IV   | `D²(a,a)`            | reflection swapping the `a`s      | `{a,a,2,2}`   |
//! | V    | `D²(a,b)`            | reflection fixing `a`,`b`         | `{a,b,2,2}`   |
//! | VI   | `D²(a,b)`            | product bundle `F × I`            | `{a,a,b,b}`   |
//!
//! Specs are stored in a canonical parameter order so that equal bundles
//! compare equal.

use std::fmt;

use crate::error::{GutsError, Result};
use crate::orbifold::{write_labels, ConeLabel, SphereOrbifold};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IBundleType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl IBundleType {
    pub const ALL: [IBundleType; 6] = [
        IBundleType::I,
        IBundleType::II,
        IBundleType::III,
        IBundleType::IV,
        IBundleType::V,
        IBundleType::VI,
    ];

    pub fn arity(self) -> usize {
        match self {
            IBundleType::I | IBundleType::V | IBundleType::VI => 2,
            IBundleType::II => 3,
            IBundleType::III => 4,
            IBundleType::IV => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IBundleType::I => "I",
            IBundleType::II => "II",
            IBundleType::III => "III",
            IBundleType::IV => "IV",
            IBundleType::V => "V",
            IBundleType::VI => "VI",
        }
    }
}

impl fmt::Display for IBundleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IBundleType {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IBundleType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown I-bundle type {s:?}"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IBundleSpec {
    kind: IBundleType,
    // Unused trailing slots stay at 2, so the derived order matches the
    // order on parameter lists within each type.
    params: [ConeLabel; 4],
}

impl IBundleSpec {
    /// Parameters are read in the order of the table in the module docs
    /// (`II` is `(a, b, c)` with `a` the swapped pair) and then canonicalized.
    pub fn new(kind: IBundleType, params: &[ConeLabel]) -> Result<Self> {
        if params.len() != kind.arity() {
            return Err(GutsError::WrongArity {
                expected: kind.arity(),
                found: params.len(),
            });
        }
        let mut slots = [ConeLabel::TWO; 4];
        slots[..params.len()].copy_from_slice(params);
        let used = &mut slots[..params.len()];
        match kind {
            IBundleType::II => used[1..].sort_unstable(),
            IBundleType::IV => {}
            _ => used.sort_unstable(),
        }
        Ok(IBundleSpec {
            kind,
            params: slots,
        })
    }

    pub fn type_i(a: ConeLabel, b: ConeLabel) -> Self {
        Self::new(IBundleType::I, &[a, b]).unwrap()
    }

    pub fn type_ii(a: ConeLabel, b: ConeLabel, c: ConeLabel) -> Self {
        Self::new(IBundleType::II, &[a, b, c]).unwrap()
    }

    pub fn type_iii(labels: [ConeLabel; 4]) -> Self {
        Self::new(IBundleType::III, &labels).unwrap()
    }

    pub fn type_iv(a: ConeLabel) -> Self {
        Self::new(IBundleType::IV, &[a]).unwrap()
    }

    pub fn type_v(a: ConeLabel, b: ConeLabel) -> Self {
        Self::new(IBundleType::V, &[a, b]).unwrap()
    }

    pub fn type_vi(a: ConeLabel, b: ConeLabel) -> Self {
        Self::new(IBundleType::VI, &[a, b]).unwrap()
    }

    pub fn kind(&self) -> IBundleType {
        self.kind
    }

    pub fn params(&self) -> &[ConeLabel] {
        &self.params[..self.kind.arity()]
    }

    pub fn max_param(&self) -> ConeLabel {
        *self
            .params()
            .iter()
            .max()
            .expect("specs have at least one parameter")
    }

    pub fn boundary_cone_multiset(&self) -> SphereOrbifold {
        boundary_cone_multiset(self)
    }

    pub fn interior_singular_description(&self) -> SingularSummary {
        interior_singular_description(self)
    }
}

impl fmt::Display for IBundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        write_labels(f, self.params())?;
        f.write_str(")")
    }
}

pub fn boundary_cone_multiset(spec: &IBundleSpec) -> SphereOrbifold {
    SphereOrbifold::new(boundary_labels(spec))
}

/// The boundary multiset as a sorted array.
pub(crate) fn boundary_labels(spec: &IBundleSpec) -> [ConeLabel; 4] {
    let p = &spec.params;
    let two = ConeLabel::TWO;
    let mut labels = match spec.kind {
        IBundleType::I | IBundleType::VI => [p[0], p[0], p[1], p[1]],
        IBundleType::II => [p[0], p[0], p[1], p[2]],
        IBundleType::III => [p[0], p[1], p[2], p[3]],
        IBundleType::IV => [p[0], p[0], two, two],
        IBundleType::V => [p[0], p[1], two, two],
    };
    labels.sort_unstable();
    labels
}

/// Every spec with all parameters `≤ param_bound` whose boundary equals
/// `required`, sorted by type and parameters.
pub fn compatible_fills(required: &SphereOrbifold, param_bound: u32) -> Vec<IBundleSpec> {
    let Ok(&[w, x, y, z]) = <&[ConeLabel; 4]>::try_from(required.cone_orders()) else {
        return Vec::new();
    };
    let m = [w, x, y, z];
    let two = ConeLabel::TWO;
    let mut out = vec![IBundleSpec::type_iii(m)];

    if m[0] == m[1] && m[2] == m[3] {
        out.push(IBundleSpec::type_i(m[0], m[2]));
        out.push(IBundleSpec::type_vi(m[0], m[2]));
    }
    for i in 0..3 {
        if m[i] == m[i + 1] {
            let rest: Vec<_> = (0..4)
                .filter(|&j| j != i && j != i + 1)
                .map(|j| m[j])
                .collect();
            out.push(IBundleSpec::type_ii(m[i], rest[0], rest[1]));
        }
    }
    // m is sorted, so two 2s can only sit in front.
    if m[0] == two && m[1] == two {
        out.push(IBundleSpec::type_v(m[2], m[3]));
        if m[2] == m[3] {
            out.push(IBundleSpec::type_iv(m[2]));
        }
    }

    out.retain(|s| s.max_param().get() <= param_bound);
    out.sort();
    out.dedup();
    out
}

/// Where the fixed set of the reflection sits in the quotient. It is always
/// labeled 2; `vertices` counts trivalent vertices lying on it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReflectionLocus {
    /// Product bundle: no fixed set.
    Absent,
    /// Closed base: the fixed great circle becomes a closed order-2 loop.
    Circle { vertices: usize },
    /// Base with one boundary circle: an order-2 arc ending on the boundary.
    Arc { vertices: usize },
}

/// Combinatorial summary of the singular graph inside an I-bundle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularSummary {
    pub reflection_locus: ReflectionLocus,
    /// Edges running boundary-to-boundary without meeting a vertex, by label
    /// (the order-2 reflection arc is not repeated here).
    pub arcs: Vec<ConeLabel>,
    /// Trivalent vertices as label triples `(x, 2, 2)`.
    pub vertices: Vec<[ConeLabel; 3]>,
}

pub fn interior_singular_description(spec: &IBundleSpec) -> SingularSummary {
    let p = &spec.params;
    let two = ConeLabel::TWO;
    let vertex = |x: ConeLabel| [x, two, two];
    match spec.kind {
        IBundleType::I => SingularSummary {
            reflection_locus: ReflectionLocus::Circle { vertices: 0 },
            arcs: vec![p[0], p[1]],
            vertices: vec![],
        },
        IBundleType::II => SingularSummary {
            reflection_locus: ReflectionLocus::Circle { vertices: 2 },
            arcs: vec![p[0]],
            vertices: vec![vertex(p[1]), vertex(p[2])],
        },
        IBundleType::III => SingularSummary {
            reflection_locus: ReflectionLocus::Circle { vertices: 4 },
            arcs: vec![],
            vertices: p.iter().copied().map(vertex).collect(),
        },
        IBundleType::IV => SingularSummary {
            reflection_locus: ReflectionLocus::Arc { vertices: 0 },
            arcs: vec![p[0]],
            vertices: vec![],
        },
        IBundleType::V => SingularSummary {
            reflection_locus: ReflectionLocus::Arc { vertices: 2 },
            arcs: vec![],
            vertices: vec![vertex(p[0]), vertex(p[1])],
        },
        IBundleType::VI => SingularSummary {
            reflection_locus: ReflectionLocus::Absent,
            arcs: vec![p[0], p[1]],
            vertices: vec![],
        },
    }
}

/// All canonical specs with parameters in `2..=param_bound`.
pub fn all_specs(param_bound: u32) -> Vec<IBundleSpec> {
    let range = || (2..=param_bound).map(crate::orbifold::label);
    let mut out = Vec::new();
    for kind in IBundleType::ALL {
        let mut tuples: Vec<Vec<ConeLabel>> = vec![vec![]];
        for _ in 0..kind.arity() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    range().map(move |l| {
                        let mut t = t.clone();
                        t.push(l);
                        t
                    })
                })
                .collect();
        }
        out.extend(tuples.iter().map(|t| IBundleSpec::new(kind, t).unwrap()));
    }
    out.sort();
    out.dedup();
    out
}
