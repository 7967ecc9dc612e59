//! Lobachevsky function and the volume `V8` of the regular ideal octahedron.
//!
//! Used only to print floating values next to exact coefficients.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{GutsError, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: usize = 10_000;

#[derive(Clone, Copy, PartialEq, PartialOrd, Debug)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Angle(radians))
        } else {
            Err(GutsError::NonFiniteAngle)
        }
    }

    pub fn radians(&self) -> f64 {
        self.0
    }
}

const ZETA_TABLE_LEN: usize = 32;

/// `ζ(s)` for even `s ≥ 2` by Euler–Maclaurin summation with 20 explicit terms.
fn zeta_even(s: u32) -> f64 {
    const N: f64 = 20.0;
    // B_2j / (2j)!
    const BERNOULLI_OVER_FACTORIAL: [f64; 4] =
        [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0];
    let s = f64::from(s);
    let mut sum: f64 = (1..20).map(|k| (k as f64).powf(-s)).sum();
    sum += N.powf(1.0 - s) / (s - 1.0) + 0.5 * N.powf(-s);
    // rising = s (s+1) ... (s+2j-2)
    let mut rising = s;
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let j = j as f64 + 1.0;
        sum += b * rising * N.powf(-s - 2.0 * j + 1.0);
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    }
    sum
}

fn zeta_table() -> &'static [f64; ZETA_TABLE_LEN] {
    static TABLE: OnceLock<[f64; ZETA_TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| std::array::from_fn(|i| zeta_even(2 * (i as u32 + 1))))
}

/// `ζ(2n)`, `n ≥ 1`.
pub fn zeta_2n(n: usize) -> f64 {
    if n <= ZETA_TABLE_LEN {
        zeta_table()[n - 1]
    } else {
        1.0 + 4f64.powi(-(n as i32)) + 9f64.powi(-(n as i32))
    }
}

/// `Λ(θ) = −∫₀^θ ln|2 sin t| dt` to within `tolerance`.
pub fn lobachevsky(theta: Angle, tolerance: f64) -> Result<f64> {
    lobachevsky_with_cap(theta, tolerance, DEFAULT_MAX_TERMS)
}

pub fn lobachevsky_with_cap(theta: Angle, tolerance: f64, max_terms: usize) -> Result<f64> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(GutsError::InvalidTolerance);
    }
    // Λ is odd and π-periodic: reduce into (−π/2, π/2].
    let mut t = theta.0 - PI * (theta.0 / PI).round();
    if t <= -PI / 2.0 {
        t += PI;
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let ratio = (t / PI) * (t / PI);
    let mut value = t - t * (2.0 * t.abs()).ln();
    let mut power = t; // t^(2n+1) / π^(2n)
    for n in 1..=max_terms {
        power *= ratio;
        let nf = n as f64;
        let term = zeta_2n(n) * power / (nf * (2.0 * nf + 1.0));
        value += term;
        if term.abs() < tolerance / 10.0 {
            return Ok(value);
        }
    }
    Err(GutsError::NonConvergence(max_terms))
}

/// `V8 = 8 Λ(π/4) ≈ 3.66386`.
pub fn v8() -> f64 {
    static V8: OnceLock<f64> = OnceLock::new();
    *V8.get_or_init(|| {
        8.0 * lobachevsky(Angle(PI / 4.0), DEFAULT_TOLERANCE).expect("series converges at π/4")
    })
}
