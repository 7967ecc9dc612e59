//! Exact rationals over `i128`.
//!
//! Every quantity this crate produces (Euler characteristics, coefficients of
//! `V8`) is a short sum of unit fractions whose denominators divide the lcm of
//! at most four cone labels. With labels capped at `10^6` every intermediate
//! value fits comfortably in `i128`; overflow is treated as a bug and panics.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExactRational(Ratio<i128>);

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational(Ratio::new_raw(0, 1));
    pub const ONE: ExactRational = ExactRational(Ratio::new_raw(1, 1));
    pub const TWO: ExactRational = ExactRational(Ratio::new_raw(2, 1));

    /// Panics if `denominator` is zero.
    pub fn new(numerator: i128, denominator: i128) -> Self {
        ExactRational(Ratio::new(numerator, denominator))
    }

    pub fn from_integer(value: i128) -> Self {
        ExactRational(Ratio::from_integer(value))
    }

    /// `1/n`.
    pub fn unit_fraction(n: u32) -> Self {
        Self::new(1, i128::from(n))
    }

    pub fn numerator(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn half(self) -> Self {
        self * Self::new(1, 2)
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for ExactRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0.checked_add(&rhs.0).expect("exact rational overflow"))
    }
}

impl Sub for ExactRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ExactRational(self.0.checked_sub(&rhs.0).expect("exact rational overflow"))
    }
}

impl Mul for ExactRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0.checked_mul(&rhs.0).expect("exact rational overflow"))
    }
}

impl Neg for ExactRational {
    type Output = Self;
    fn neg(self) -> Self {
        ExactRational(-self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

/// Always `p/q`, including integers (`2/1`) and zero (`0/1`).
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational \"p/q\"")]
pub struct ParseRationalError(String);

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = num.parse().map_err(|_| err())?;
        let den: i128 = den.parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        Ok(Self::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let q = ExactRational::new(6, -8);
        assert_eq!(q.numerator(), -3);
        assert_eq!(q.denominator(), 4);
    }

    #[test]
    fn display_parse_roundtrip() {
        for q in [
            ExactRational::new(1, 12),
            ExactRational::ZERO,
            ExactRational::TWO,
            ExactRational::new(-23, 70),
        ] {
            assert_eq!(q.to_string().parse::<ExactRational>().unwrap(), q);
        }
        assert_eq!(
            "3".parse::<ExactRational>().unwrap(),
            ExactRational::from_integer(3)
        );
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x/2".parse::<ExactRational>().is_err());
    }

    #[test]
    fn large_label_sums_do_not_overflow() {
        let labels = [999_983u32, 999_979, 999_961, 999_959];
        let s: ExactRational = labels
            .iter()
            .map(|&n| ExactRational::unit_fraction(n))
            .sum();
        let t = ExactRational::TWO - s;
        let u = t + t.half() - ExactRational::unit_fraction(999_983);
        assert!(u.is_positive());
    }
}
