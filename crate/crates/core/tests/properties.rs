mod common;

use std::f64::consts::PI;

use gutsbound::engine::{full_coefficient, partial_coefficient};
use gutsbound::ibundles::all_specs;
use gutsbound::orbifold::label;
use gutsbound::*;
use proptest::prelude::*;

fn cone() -> impl Strategy<Value = ConeLabel> {
    prop_oneof![2u32..=7, 2u32..=1000].prop_map(label)
}

fn quadruple() -> impl Strategy<Value = LabelQuadruple> {
    prop::array::uniform4(cone()).prop_map(LabelQuadruple::new)
}

fn small_quadruple() -> impl Strategy<Value = LabelQuadruple> {
    prop::array::uniform4((2u32..=6).prop_map(label)).prop_map(LabelQuadruple::new)
}

fn perm() -> impl Strategy<Value = Perm4> {
    (0usize..24).prop_map(|i| Perm4::all()[i])
}

fn fill() -> impl Strategy<Value = RegionFill> {
    let specs = all_specs(6);
    prop_oneof![
        Just(RegionFill::AcylindricalRegion),
        Just(RegionFill::SolidTorusRegion),
        (0..specs.len()).prop_map(move |i| RegionFill::IBundleRegion(specs[i])),
    ]
}

fn pairing() -> impl Strategy<Value = Pairing> {
    (0usize..6).prop_map(|i| Pairing::all_oriented()[i])
}

fn shape() -> impl Strategy<Value = SideShape> {
    prop_oneof![
        Just(SideShape::Acylindrical),
        Just(SideShape::RegularNeighborhood),
        Just(SideShape::RationalTangle(TangleKind::TwoStrand)),
        (pairing(), 2u32..=6, fill()).prop_map(|(pairing, e, region_fill)| {
            SideShape::NonsingularAnnulus {
                pairing,
                core_label: label(e),
                region_fill,
            }
        }),
        (pairing(), 0u32..=3, fill(), fill()).prop_map(|(pairing, n, upper_fill, lower_fill)| {
            SideShape::TwoTwoAnnuli {
                pairing,
                n,
                upper_fill,
                lower_fill,
            }
        }),
    ]
}

fn letter() -> impl Strategy<Value = Letter> {
    (0usize..6).prop_map(|i| Letter::alphabet()[i])
}

fn word(max: usize) -> impl Strategy<Value = TangleWord> {
    prop::collection::vec(letter(), 0..=max).prop_map(TangleWord::new)
}

proptest! {
    #[test]
    fn euler_is_permutation_invariant(q in quadruple(), p in perm()) {
        prop_assert_eq!(q.euler_characteristic(), p.apply(&q).euler_characteristic());
    }

    #[test]
    fn euler_nonpositive_and_zero_only_for_pillowcase(q in quadruple()) {
        let chi = q.euler_characteristic();
        prop_assert!(!chi.is_positive());
        prop_assert_eq!(chi.is_zero(), q.is_pillowcase());
    }

    #[test]
    fn doubling_identity(a in cone(), b in cone()) {
        let d = MirroredDiskOrbifold::new(a, b);
        let two = ExactRational::TWO;
        prop_assert_eq!(two * euler_mirrored_disk(&d), euler_sphere(&double_of_mirrored_disk(&d)));
    }

    #[test]
    fn validator_is_permutation_equivariant(s in shape(), q in small_quadruple(), p in perm()) {
        let before = validate_side(&s, &q).ok();
        let after = validate_side(&s.permuted(&p), &p.apply(&q)).ok();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn validator_matches_oracle(s in shape(), q in small_quadruple()) {
        let report = validate_side(&s, &q);
        prop_assert_eq!(report.ok(), common::validator_oracle(&s, &q));
        prop_assert_eq!(report.ok(), is_valid_side(&s, &q));
    }

    #[test]
    fn partial_both_equals_full(q in quadruple(), i in 0usize..3) {
        let p = Pairing::partitions()[i];
        prop_assert_eq!(
            partial_coefficient(p.ab_labels(&q)) + partial_coefficient(p.cd_labels(&q)),
            full_coefficient(&q)
        );
    }

    #[test]
    fn coefficients_bounded_by_two(q in quadruple()) {
        prop_assume!(!q.is_pillowcase());
        for s0 in witness_sides(&q) {
            for s1 in witness_sides(&q) {
                if let BoundOutcome::Bound(b) = volume_bound(&q, &s0, &s1).unwrap() {
                    prop_assert!(b.coefficient.is_positive());
                    prop_assert!(b.coefficient <= ExactRational::TWO);
                    prop_assert!((b.numeric_value - b.coefficient.to_f64() * v8()).abs()
                        <= 1e-12 * b.numeric_value.abs());
                }
            }
        }
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(8), v in word(8)) {
        prop_assert_eq!(
            u.concat(&v).induced_permutation(),
            u.induced_permutation().then(&v.induced_permutation())
        );
        prop_assert_eq!(u.inverse().induced_permutation(), u.induced_permutation().inverse());
        prop_assert_eq!(u.induced_permutation().images(), common::simulate_word(&u));
    }

    #[test]
    fn reduction_is_idempotent_and_cancels_inverses(w in word(10)) {
        let r = w.reduce();
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.induced_permutation(), w.induced_permutation());
        prop_assert!(w.concat(&w.inverse()).reduce().is_empty());
    }

    #[test]
    fn lobachevsky_is_odd_and_periodic(theta in -10.0f64..10.0) {
        let tol = 1e-12;
        let f = |t: f64| lobachevsky(Angle::new(t).unwrap(), tol).unwrap();
        prop_assert!((f(-theta) + f(theta)).abs() < 2.0 * tol + 1e-13);
        prop_assert!((f(theta + PI) - f(theta)).abs() < 2.0 * tol + 1e-12);
    }
}

#[test]
fn classify_matches_floating_comparison() {
    for p in (2..=1000).step_by(7) {
        for q in (p..=1000).step_by(11) {
            for r in [2u32, 3, 4, 5, 6, 7, 10, 42, 97, 500, 1000] {
                let s = 1.0 / p as f64 + 1.0 / q as f64 + 1.0 / r as f64;
                if (s - 1.0).abs() <= 1e-9 {
                    continue;
                }
                let expected = if s > 1.0 {
                    TripleClass::Spherical
                } else {
                    TripleClass::Hyperbolic
                };
                assert_eq!(
                    classify_triple(label(p), label(q), label(r)),
                    expected,
                    "({p},{q},{r})"
                );
            }
        }
    }
    let euclidean = [(3, 3, 3), (2, 4, 4), (2, 3, 6)];
    for (p, q, r) in euclidean {
        assert_eq!(
            classify_triple(label(p), label(q), label(r)),
            TripleClass::RigidEuclidean
        );
    }
}

#[test]
fn compatible_fills_match_brute_force() {
    for bound in 2..=8u32 {
        let specs = all_specs(bound);
        for a in 2..=bound {
            for b in a..=bound {
                for c in b..=bound {
                    for d in c..=bound {
                        let required = SphereOrbifold::new([a, b, c, d].map(label));
                        let brute: Vec<_> = specs
                            .iter()
                            .filter(|s| common::spec_boundary_oracle(s) == vec![a, b, c, d])
                            .cloned()
                            .collect();
                        assert_eq!(
                            compatible_fills(&required, bound),
                            brute,
                            "{required} ≤ {bound}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn every_boundary_has_four_points() {
    for s in all_specs(8) {
        assert_eq!(s.boundary_cone_multiset().len(), 4);
    }
}

#[test]
fn downgrading_a_contribution_never_raises_the_bound() {
    for a in 2..=7 {
        for b in a..=7 {
            for c in b..=7 {
                for d in c..=7 {
                    let q = LabelQuadruple::from_values([a, b, c, d]).unwrap();
                    if q.is_pillowcase() {
                        continue;
                    }
                    let sides = witness_sides(&q);
                    let coef = |s0: &SideConfiguration, s1: &SideConfiguration| {
                        volume_bound(&q, s0, s1)
                            .unwrap()
                            .bound()
                            .map(|b| b.coefficient)
                            .unwrap_or(ExactRational::ZERO)
                    };
                    let rank = |s: &SideConfiguration| match guts_contribution(s).unwrap().kind {
                        ContributionKind::Full | ContributionKind::PartialBoth(_) => 2,
                        ContributionKind::PartialPair(_) => 1,
                        ContributionKind::Empty => 0,
                    };
                    for fixed in &sides {
                        for hi in &sides {
                            for lo in &sides {
                                if rank(hi) > rank(lo) {
                                    assert!(coef(fixed, hi) >= coef(fixed, lo), "{q}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn series_matches_quadrature_on_grid() {
    let tol = 1e-12;
    for i in 1..200 {
        let theta = (PI / 2.0) * i as f64 / 200.0;
        let series = lobachevsky(Angle::new(theta).unwrap(), tol).unwrap();
        let quad = common::lobachevsky_quadrature(theta);
        assert!(
            (series - quad).abs() < 10.0 * tol,
            "θ = {theta}: {series} vs {quad}"
        );
    }
}

#[test]
fn kernel_words_do_not_change_assembly() {
    let b = LabelQuadruple::from_values([3, 3, 5, 5]).unwrap();
    let fill = RegionFill::IBundleRegion(IBundleSpec::type_i(label(3), label(5)));
    let side = |pairing: Pairing, boundary| {
        SideConfiguration::new(
            SideShape::NonsingularAnnulus {
                pairing,
                core_label: label(2),
                region_fill: fill.clone(),
            },
            boundary,
        )
        .unwrap()
    };
    let side0 = side(Pairing::new([0, 2], [1, 3]).unwrap(), b);
    let kernels: Vec<TangleWord> = ["", "s1 s1", "s2' s2'", "s1 s2 s1 s2 s1 s2", "s3 s1 s3' s1'"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for sigma in ["", "s1", "s2", "s1 s3", "s2 s1 s3'"] {
        let sigma: TangleWord = sigma.parse().unwrap();
        for target in Perm4::all() {
            let b1 = target.apply(&b);
            let Ok(side1) = SideConfiguration::new(side0.shape().permuted(&target), b1) else {
                continue;
            };
            let base =
                assemble_hungry(HungrySurface::Sphere4(b), &side0, &side1, sigma.clone()).is_ok();
            for k in &kernels {
                assert!(k.induced_permutation().is_identity());
                let with_kernel =
                    assemble_hungry(HungrySurface::Sphere4(b), &side0, &side1, sigma.concat(k));
                assert_eq!(with_kernel.is_ok(), base);
            }
        }
    }
}

/// Per-case minima from the closed-form formulas, enumerating which
/// contribution kinds a boundary admits without building any sides.
fn formula_minima(label_max: u32) -> std::collections::BTreeMap<BoundCase, common::Q> {
    use common::{case_formula, expected_case, Q};
    let mut best: std::collections::BTreeMap<BoundCase, Q> = Default::default();
    let mut offer = |case: BoundCase, q: Q| {
        if q > Q::from_integer(0) {
            let e = best.entry(case).or_insert(q);
            if q < *e {
                *e = q;
            }
        }
    };
    let kinds_for = |v: [u32; 4]| {
        let mut ks = vec![ContributionKind::Full];
        if v != [2, 2, 2, 2] {
            ks.push(ContributionKind::Empty);
        }
        for [i, j] in [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]] {
            if [v[i], v[j]] != [2, 2] {
                ks.push(ContributionKind::PartialPair([label(v[i]), label(v[j])]));
            }
        }
        ks
    };
    for a in 2..=label_max {
        for b in a..=label_max {
            for c in b..=label_max {
                for d in c.max(if a == 2 && b == 2 && c == 2 { 3 } else { 2 })..=label_max {
                    let ks = kinds_for([a, b, c, d]);
                    for k0 in &ks {
                        for k1 in &ks {
                            if let Some(case) = expected_case(k0, k1) {
                                offer(
                                    BoundCase::Theorem(case),
                                    case_formula(case, [a, b, c, d], k0, k1),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    for n1 in 2..=label_max {
        for n2 in n1.max(3)..=label_max {
            let v = [n1, n1, n2, n2];
            for k0 in kinds_for(v) {
                match expected_case(&k0, &ContributionKind::Empty) {
                    Some(3) => offer(
                        BoundCase::Corollary(1),
                        case_formula(3, v, &k0, &ContributionKind::Empty),
                    ),
                    Some(5) => offer(
                        BoundCase::Corollary(2),
                        case_formula(5, v, &k0, &ContributionKind::Empty),
                    ),
                    _ => {}
                }
            }
        }
    }
    best
}

#[test]
fn sweep_minima_match_formula_enumeration() {
    let oracle = formula_minima(10);
    let summary = minimum_positive_bound(10).unwrap();
    let got: std::collections::BTreeMap<_, _> = summary
        .per_case
        .iter()
        .map(|m| (m.case, common::to_q(m.coefficient)))
        .collect();
    assert_eq!(got, oracle);

    let q = |n, d| common::Q::new(n, d);
    let pinned = [
        (BoundCase::Theorem(1), q(1, 6)),
        (BoundCase::Theorem(2), q(1, 6)),
        (BoundCase::Theorem(3), q(1, 12)),
        (BoundCase::Theorem(4), q(1, 6)),
        (BoundCase::Theorem(5), q(1, 12)),
        (BoundCase::Corollary(1), q(1, 6)),
        (BoundCase::Corollary(2), q(1, 12)),
    ];
    for (case, value) in pinned {
        assert_eq!(oracle[&case], value, "{case}");
    }
}
