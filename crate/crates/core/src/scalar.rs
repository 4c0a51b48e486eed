//! Scalar abstractions shared by the exact and floating code paths.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Ordered field element usable by the finite summations (`f32`, `f64`,
/// and exact rationals).
pub trait Scalar: Clone + PartialOrd + Num + FromPrimitive + fmt::Debug {
    /// `⌊self⌋` for a non-negative value.
    fn floor_u64(&self) -> u64;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn floor_u64(&self) -> u64 {
        self.floor() as u64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn floor_u64(&self) -> u64 {
        self.floor() as u64
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigRational {
    fn floor_u64(&self) -> u64 {
        self.floor().to_integer().to_u64().unwrap_or(0)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Ratio<i64> {
    fn floor_u64(&self) -> u64 {
        self.floor().to_integer().max(0) as u64
    }
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// Exact rational with a power-of-two denominator, `num / 2^log2_den`,
/// kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    #[serde(with = "crate::json_int::u128_int")]
    pub num: u128,
    pub log2_den: u32,
}

impl Dyadic {
    pub fn new(num: u128, log2_den: u32) -> Self {
        if num == 0 {
            return Self { num: 0, log2_den: 0 };
        }
        let shift = num.trailing_zeros().min(log2_den);
        Self { num: num >> shift, log2_den: log2_den - shift }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / 2f64.powi(self.log2_den as i32)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(1u8) << self.log2_den)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.log2_den)
        }
    }
}

/// `r` as an exact rational, for feeding `f64` parameters to the exact
/// summation path.
pub fn rational_from_f64(r: f64) -> Option<BigRational> {
    BigRational::from_f64(r)
}
