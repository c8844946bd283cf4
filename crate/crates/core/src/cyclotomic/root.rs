use std::fmt;

use serde::{Deserialize, Serialize};

use super::number_theory::{gcd, lcm};
use super::CycNumber;

/// ζ_order^exponent in lowest terms: gcd(exponent, order) = 1 and 1 is `(1, 0)`.
///
/// Ordering is by `(order, exponent)`, which is the canonical sort used for
/// multisets of roots throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u64,
    pub exponent: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, exponent: 0 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { order: 2, exponent: 1 };

    pub fn new(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        if k == 0 {
            return Self::ONE;
        }
        let g = gcd(k, n);
        RootOfUnity { order: n / g, exponent: k / g }
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(self, other: Self) -> Self {
        let n = lcm(self.order, other.order);
        let k = self.exponent * (n / self.order) + other.exponent * (n / other.order);
        Self::new(n, k as i64)
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.order, self.exponent as i64 * e.rem_euclid(self.order as i64) )
    }

    pub fn inverse(self) -> Self {
        Self::new(self.order, -(self.exponent as i64))
    }

    pub fn neg(self) -> Self {
        self.mul(Self::MINUS_ONE)
    }

    pub fn to_cyc(self) -> CycNumber {
        CycNumber::zeta(self.order, self.exponent as i64)
    }

    /// Floating point position on the unit circle; only used to prune searches.
    pub fn to_complex(self) -> (f64, f64) {
        let a = std::f64::consts::TAU * self.exponent as f64 / self.order as f64;
        (a.cos(), a.sin())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (4, 1) => write!(f, "i"),
            (4, 3) => write!(f, "-i"),
            (n, k) => write!(f, "zeta({n},{k})"),
        }
    }
}
