//! Hyperbolic volume lower bounds for 3-orbifolds with underlying space `S³`
//! that contain an essential `S²(n₁,n₂,n₃,n₄)` or `D²₊(n₁,n₂)`.
//!
//! The splitting surface cuts the orbifold into two sides. Each side is
//! declared by the caller ([`SideShape`]) and validated against the cone
//! labels on the surface. The guts of the split orbifold then give
//! `Vol ≥ q · V8` for an exact rational `q`; when the guts are empty the
//! orbifold is recorded as a [`HungryForm`] instead.
//!
//! ```
//! use gutsbound::{volume_bound, LabelQuadruple, SideConfiguration, ExactRational};
//!
//! let s = LabelQuadruple::from_values([2, 3, 3, 3]).unwrap();
//! let side = SideConfiguration::acylindrical(s);
//! let out = volume_bound(&s, &side, &side).unwrap();
//! assert_eq!(out.bound().unwrap().coefficient, ExactRational::new(1, 2));
//! ```

pub mod engine;
pub mod error;
pub mod ibundles;
pub mod numerics;
pub mod orbifold;
pub mod rational;
pub mod splitting;
pub mod sweep;
pub mod tangle;

pub use engine::{
    corollary_bound, guts_contribution, theorem_case, volume_bound, BoundCase, BoundOutcome,
    ContributionKind, GutsContribution, VolumeBound,
};
pub use error::{GutsError, Result};
pub use ibundles::{
    boundary_cone_multiset, compatible_fills, interior_singular_description, IBundleSpec,
    IBundleType, ReflectionLocus, SingularSummary,
};
pub use numerics::{lobachevsky, v8, Angle};
pub use orbifold::{
    classify_triple, double_of_mirrored_disk, euler_mirrored_disk, euler_sphere, ConeLabel,
    LabelPolicy, LabelQuadruple, MirroredDiskOrbifold, SphereOrbifold, TripleClass,
};
pub use rational::ExactRational;
pub use splitting::{
    is_incompressible, is_valid_side, validate_side, Pairing, RegionFill, SideConfiguration,
    SideShape, TangleKind, ValidationReport, Violation, ViolationCode,
};
pub use sweep::{minimum_positive_bound, witness_sides, CaseMinimum, SweepSummary, SweepSurface};
pub use tangle::{
    assemble_hungry, induced_permutation, reduce, GluingRecord, HungryForm, HungrySurface, Letter,
    Perm4, TangleWord,
};
