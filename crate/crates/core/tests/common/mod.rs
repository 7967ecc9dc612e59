//! Independent oracles shared by the property and acceptance tests. Nothing
//! here calls into the implementation paths it is used to check.

#![allow(dead_code)]

use std::f64::consts::PI;

use gutsbound::{
    ContributionKind, IBundleSpec, IBundleType, LabelQuadruple, RegionFill, SideShape, TangleWord,
};
use num_rational::Ratio;

// ---------------------------------------------------------------- numerics

#[allow(clippy::too_many_arguments)]
fn simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `−∫₀^θ ln|2 sin t| dt` for `θ ∈ [0, π)`, splitting off the logarithmic
/// singularity: `ln(2 sin t) = ln(2t) + ln(sin t / t)`.
pub fn lobachevsky_quadrature(theta: f64) -> f64 {
    assert!((0.0..PI).contains(&theta));
    if theta == 0.0 {
        return 0.0;
    }
    let smooth = |t: f64| {
        if t < 1e-4 {
            -t * t / 6.0 - t.powi(4) / 180.0
        } else {
            (t.sin() / t).ln()
        }
    };
    let singular = theta * (2.0 * theta).ln() - theta;
    -(singular + adaptive_simpson(&smooth, 0.0, theta, 1e-15))
}

// ---------------------------------------------------------------- I-bundles

/// Base orbifold `F` and involution `φ` of an I-bundle, described directly.
pub struct Quotient {
    pub cones: Vec<u32>,
    pub has_boundary_circle: bool,
    pub twisted: bool,
    /// Pairs of cone indices exchanged by `φ`.
    pub swapped: Vec<(usize, usize)>,
}

pub fn quotient_of(spec: &IBundleSpec) -> Quotient {
    let p: Vec<u32> = spec.params().iter().map(|l| l.get()).collect();
    match spec.kind() {
        IBundleType::I => Quotient {
            cones: vec![p[0], p[0], p[1], p[1]],
            has_boundary_circle: false,
            twisted: true,
            swapped: vec![(0, 1), (2, 3)],
        },
        IBundleType::II => Quotient {
            cones: vec![p[0], p[0], p[1], p[2]],
            has_boundary_circle: false,
            twisted: true,
            swapped: vec![(0, 1)],
        },
        IBundleType::III => Quotient {
            cones: p.clone(),
            has_boundary_circle: false,
            twisted: true,
            swapped: vec![],
        },
        IBundleType::IV => Quotient {
            cones: vec![p[0], p[0]],
            has_boundary_circle: true,
            twisted: true,
            swapped: vec![(0, 1)],
        },
        IBundleType::V => Quotient {
            cones: vec![p[0], p[1]],
            has_boundary_circle: true,
            twisted: true,
            swapped: vec![],
        },
        IBundleType::VI => Quotient {
            cones: vec![p[0], p[1]],
            has_boundary_circle: true,
            twisted: false,
            swapped: vec![],
        },
    }
}

/// Boundary cone labels of `(F × [−1,1])/∼`, built from the pieces:
/// * product: `F×{−1} ∪ F×{1} ∪ ∂F×I` — two copies of the cones;
/// * twisted: `F×{±1}/∼ ≅ F` — one copy, plus, when `F` has a boundary
///   circle, `(∂F × I)/∼` where the reflection's two fixed points on `∂F`
///   become order-2 cone points.
pub fn quotient_boundary(q: &Quotient) -> Vec<u32> {
    for &(i, j) in &q.swapped {
        assert_eq!(
            q.cones[i], q.cones[j],
            "an involution only swaps equal labels"
        );
    }
    let mut out = q.cones.clone();
    if !q.twisted {
        out.extend(q.cones.iter().copied());
    } else if q.has_boundary_circle {
        out.extend([2, 2]);
    }
    out.sort_unstable();
    out
}

pub fn spec_boundary_oracle(spec: &IBundleSpec) -> Vec<u32> {
    quotient_boundary(&quotient_of(spec))
}

// ---------------------------------------------------------------- validator

fn raw_pair(b: &LabelQuadruple, idx: [usize; 2]) -> [u32; 2] {
    let x = b.at(idx[0]).get();
    let y = b.at(idx[1]).get();
    [x.min(y), x.max(y)]
}

fn region_with_twos(pair: [u32; 2]) -> [u32; 4] {
    let mut v = [pair[0], pair[1], 2, 2];
    v.sort_unstable();
    v
}

fn fill_fits(fill: &RegionFill, region: &[u32]) -> bool {
    match fill {
        RegionFill::AcylindricalRegion => true,
        RegionFill::SolidTorusRegion => region.iter().all(|&x| x == 2),
        RegionFill::IBundleRegion(spec) => BOUNDARIES.with(|cache| {
            cache
                .borrow_mut()
                .entry(*spec)
                .or_insert_with(|| spec_boundary_oracle(spec))
                .as_slice()
                == region
        }),
    }
}

thread_local! {
    static BOUNDARIES: std::cell::RefCell<std::collections::HashMap<IBundleSpec, Vec<u32>>> =
        Default::default();
}

/// Straight-line restatement of the annulus-configuration constraints.
pub fn validator_oracle(shape: &SideShape, b: &LabelQuadruple) -> bool {
    const TT: [u32; 2] = [2, 2];
    match shape {
        SideShape::Acylindrical | SideShape::RationalTangle(_) => true,
        SideShape::RegularNeighborhood => {
            let mut v = b.labels().map(|l| l.get());
            v.sort_unstable();
            v[0] == v[1] && v[2] == v[3]
        }
        SideShape::NonsingularAnnulus {
            pairing,
            region_fill,
            ..
        } => {
            let mut all = b.labels().map(|l| l.get());
            all.sort_unstable();
            raw_pair(b, pairing.ab()) != TT
                && raw_pair(b, pairing.cd()) != TT
                && *region_fill != RegionFill::SolidTorusRegion
                && fill_fits(region_fill, &all)
        }
        SideShape::TwoTwoAnnuli {
            pairing,
            n,
            upper_fill,
            lower_fill,
        } => {
            let ab = raw_pair(b, pairing.ab());
            let cd = raw_pair(b, pairing.cd());
            let oriented = |p: [u32; 2], q: [u32; 2], fp: &RegionFill, fq: &RegionFill| {
                q != TT
                    && if p == TT {
                        *n == 1 && *fp == RegionFill::SolidTorusRegion
                    } else {
                        fill_fits(fp, &region_with_twos(p))
                    }
                    && fill_fits(fq, &region_with_twos(q))
            };
            !(ab == TT && cd == TT)
                && *n >= 1
                && (oriented(ab, cd, upper_fill, lower_fill)
                    || oriented(cd, ab, lower_fill, upper_fill))
        }
    }
}

// ---------------------------------------------------------------- formulas

pub type Q = Ratio<i64>;

pub fn inv(n: u32) -> Q {
    Q::new(1, i64::from(n))
}

pub fn to_q(x: gutsbound::ExactRational) -> Q {
    Q::new(x.numerator() as i64, x.denominator() as i64)
}

fn pairs(kind: &ContributionKind) -> Vec<[u32; 2]> {
    match kind {
        ContributionKind::PartialPair(p) => vec![[p[0].get(), p[1].get()]],
        ContributionKind::PartialBoth(ps) => ps.iter().map(|p| [p[0].get(), p[1].get()]).collect(),
        _ => vec![],
    }
}

/// Case number read straight off the six-category list.
pub fn expected_case(k0: &ContributionKind, k1: &ContributionKind) -> Option<u8> {
    let full = |k: &ContributionKind| {
        matches!(k, ContributionKind::Full | ContributionKind::PartialBoth(_))
    };
    let pair = |k: &ContributionKind| matches!(k, ContributionKind::PartialPair(_));
    let empty = |k: &ContributionKind| matches!(k, ContributionKind::Empty);
    if full(k0) && full(k1) {
        Some(1)
    } else if (full(k0) && pair(k1)) || (pair(k0) && full(k1)) {
        Some(2)
    } else if (full(k0) && empty(k1)) || (empty(k0) && full(k1)) {
        Some(3)
    } else if pair(k0) && pair(k1) {
        Some(4)
    } else if (pair(k0) && empty(k1)) || (empty(k0) && pair(k1)) {
        Some(5)
    } else {
        None
    }
}

/// The bound coefficient `q` (`Vol ≥ q·V8`) from the numbered formula.
pub fn case_formula(case: u8, labels: [u32; 4], k0: &ContributionKind, k1: &ContributionKind) -> Q {
    let one = Q::from_integer(1);
    let two = Q::from_integer(2);
    let half = Q::new(1, 2);
    let chi: Q = labels.iter().map(|&n| inv(n)).sum::<Q>() - two;
    let mut ps = pairs(k0);
    ps.extend(pairs(k1));
    match case {
        1 => two - labels.iter().map(|&n| inv(n)).sum::<Q>(),
        2 => {
            let [a, b] = match (k0, k1) {
                (ContributionKind::PartialPair(p), _) | (_, ContributionKind::PartialPair(p)) => {
                    [p[0].get(), p[1].get()]
                }
                _ => panic!("case 2 has a partial-pair side"),
            };
            half * (-chi + one - inv(a) - inv(b))
        }
        3 => -half * chi,
        4 => {
            let [a, b] = ps[0];
            let [c, d] = ps[1];
            half * (two - inv(a) - inv(b) - inv(c) - inv(d))
        }
        5 => {
            let [a, b] = ps[0];
            half * (one - inv(a) - inv(b))
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------- tangles

/// Induced permutation by moving points around explicitly: `at[pos]` is the
/// point sitting at `pos`; returns `image[point] = final position`.
pub fn simulate_word(w: &TangleWord) -> [usize; 4] {
    let mut at = [0usize, 1, 2, 3];
    for l in w.letters() {
        let k = usize::from(l.generator());
        at.swap(k - 1, k);
    }
    let mut image = [0; 4];
    for (pos, &point) in at.iter().enumerate() {
        image[point] = pos;
    }
    image
}
