//! Floating diagnostics of the proof chain: the truncated Parseval split,
//! its optimal radius, the weight-sum bound and the Cauchy–Schwarz step.
//!
//! Everything here is generic over the scalar. The radius-dependent pieces
//! need `sqrt`/`cbrt` and take any [`Float`]; the finite weight sum only
//! needs ordered field operations and also runs on exact rationals.

use num_traits::{Float, FromPrimitive};
use serde::{Deserialize, Serialize};

use crate::function::Spectrum;
use crate::scalar::Scalar;

fn cast<F: Float>(x: impl num_traits::ToPrimitive) -> F {
    F::from(x).expect("value representable in the float type")
}

/// `R* = (3·2^{3n}·I² / (16·E·|supp f̂|²))^{1/3}`, the radius at which the
/// two terms of the truncation bound coincide.
pub fn optimal_radius_from<F: Float>(n: u32, energy: F, influence: F, support: F) -> F {
    let scale: F = cast(2f64.powi(n as i32));
    let ratio = cast::<F>(3) * influence * influence / (cast::<F>(16) * energy * support * support);
    scale * ratio.cbrt()
}

/// The two sides of the truncated Parseval inequality at radius `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationBound<F> {
    /// `|A| / 2ⁿ`
    #[serde(rename = "lhs_float")]
    pub lhs: F,
    /// `|supp f̂| · √(R/3) · √(E / 2^{3n})`
    #[serde(rename = "term1_float")]
    pub term1: F,
    /// `I(f) / (4R)`
    #[serde(rename = "term2_float")]
    pub term2: F,
    pub holds: bool,
}

pub fn truncation_terms<F: Float>(
    n: u32,
    cardinality: F,
    energy: F,
    influence: F,
    support: F,
    radius: F,
) -> TruncationBound<F> {
    let domain: F = cast(2f64.powi(n as i32));
    let lhs = cardinality / domain;
    let term1 = support * (radius / cast(3)).sqrt() * (energy / (domain * domain * domain)).sqrt();
    let term2 = influence / (cast::<F>(4) * radius);
    TruncationBound { lhs, term1, term2, holds: lhs <= term1 + term2 }
}

/// `Σ_{s=1}^{⌊R⌋} (1 − s/R)²` against `R/3`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightSum<T> {
    pub sum: T,
    pub bound: T,
    pub holds: bool,
}

/// Evaluates the weight sum in `T`; exact when `T` is a rational type.
pub fn weight_sum<T: Scalar>(radius: &T) -> WeightSum<T> {
    let terms = radius.floor_u64();
    let one = T::one();
    let sum = (1..=terms).fold(T::zero(), |acc, s| {
        let s = T::from_u64(s).expect("term index representable");
        let w = one.clone() - s / radius.clone();
        acc + w.clone() * w
    });
    let bound = radius.clone() / T::from_u8(3).expect("3 representable");
    let holds = sum <= bound;
    WeightSum { sum, bound, holds }
}

/// Absolute slack allowed in the Cauchy–Schwarz comparison.
pub const CAUCHY_SLACK: f64 = 1e-12;

/// Both sides of
/// `Σ_{1≤|S|≤R} (1−|S|/R) f̂²(S) ≤ √(Σ_{1≤|S|≤R} (1−|S|/R)²) · √(Σ_S f̂⁴(S))`,
/// with the inner sums running over subsets `S`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CauchyStep<F> {
    #[serde(rename = "weighted_mass_float")]
    pub weighted_mass: F,
    #[serde(rename = "weight_norm_float")]
    pub weight_norm: F,
    #[serde(rename = "fourth_norm_float")]
    pub fourth_norm: F,
    pub holds: bool,
}

pub fn cauchy_step<F: Float + FromPrimitive>(spectrum: &Spectrum, radius: F) -> CauchyStep<F> {
    let domain: F = cast(2f64.powi(spectrum.n() as i32));
    let mut weighted_mass = F::zero();
    let mut weight_sq = F::zero();
    let mut fourth = F::zero();
    for (mask, &k) in spectrum.coeffs().iter().enumerate() {
        let hat = cast::<F>(k) / domain;
        let hat_sq = hat * hat;
        fourth = fourth + hat_sq * hat_sq;
        let size: F = cast(mask.count_ones());
        if mask != 0 && size <= radius {
            let w = F::one() - size / radius;
            weighted_mass = weighted_mass + w * hat_sq;
            weight_sq = weight_sq + w * w;
        }
    }
    let weight_norm = weight_sq.sqrt();
    let fourth_norm = fourth.sqrt();
    let slack: F = cast(CAUCHY_SLACK);
    let holds = weighted_mass <= weight_norm * fourth_norm + slack;
    CauchyStep { weighted_mass, weight_norm, fourth_norm, holds }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::function::{wht, BooleanFunction};

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs())
    }

    #[test]
    fn radius_examples() {
        let r: f64 = optimal_radius_from(3, 40.0, 1.5, 5.0);
        assert!(close(r, 0.6, 1e-12), "{r}");
        let r: f64 = optimal_radius_from(2, 8.0, 1.0, 2.0);
        assert!(close(r, 0.375f64.cbrt(), 1e-12));
        assert!(close(r, 0.7211, 1e-4));
        let doubled: f64 = optimal_radius_from(2, 8.0, 8.0 * 1.0, 2.0);
        assert!(close(doubled, 4.0 * r, 1e-12));
        let r32: f32 = optimal_radius_from(3, 40.0, 1.5, 5.0);
        assert!((r32 - 0.6).abs() < 1e-5);
    }

    #[test]
    fn truncation_examples() {
        let t = truncation_terms(3, 4.0, 40.0, 1.5, 5.0, 0.6);
        assert!(close(t.term1, 0.625, 1e-12));
        assert!(close(t.term2, 0.625, 1e-12));
        assert_eq!(t.lhs, 0.5);
        assert!(t.holds);

        let t = truncation_terms(2, 4.0, 64.0, 0.0, 1.0, 1.0);
        assert_eq!(t.lhs, 1.0);
        assert!(close(t.term1, (1.0f64 / 3.0).sqrt(), 1e-12));
        assert_eq!(t.term2, 0.0);
        assert!(!t.holds);

        let big = truncation_terms(3, 4.0, 40.0, 1.5, 5.0, 1e6);
        assert!(big.holds && big.term2 < 1e-6);
    }

    #[test]
    fn weight_sum_examples() {
        let w = weight_sum(&0.6f64);
        assert_eq!(w.sum, 0.0);
        assert!(close(w.bound, 0.2, 1e-15) && w.holds);
        let w = weight_sum(&2.0f64);
        assert_eq!(w.sum, 0.25);
        assert!(w.holds);
        let w = weight_sum(&10.0f64);
        assert!(close(w.sum, 2.85, 1e-12) && w.holds);
    }

    #[test]
    fn weight_sum_exact() {
        let ten = BigRational::from_integer(10.into());
        let w = weight_sum(&ten);
        assert_eq!(w.sum, BigRational::new(285.into(), 100.into()));
        assert_eq!(w.bound, BigRational::new(10.into(), 3.into()));
        assert!(w.holds);
        let w = weight_sum(&num_rational::Ratio::new(7i64, 2));
        // s = 1,2,3: (5/7)² + (3/7)² + (1/7)² = 35/49
        assert_eq!(w.sum, num_rational::Ratio::new(5, 7));
    }

    #[test]
    fn cauchy_examples() {
        let one = wht(&BooleanFunction::ones(2).unwrap());
        for r in [0.5, 1.0, 3.0] {
            let c = cauchy_step(&one, r);
            assert_eq!(c.weighted_mass, 0.0);
            assert!(c.holds);
        }
        let ball = wht(&BooleanFunction::from_points(3, &[0, 1, 2, 4]).unwrap());
        let c = cauchy_step(&ball, 2.0f64);
        assert!(close(c.weighted_mass, 3.0 / 32.0, 1e-12));
        assert!(close(c.weight_norm, 0.75f64.sqrt(), 1e-12));
        assert!(close(c.fourth_norm, (320.0f64 / 4096.0).sqrt(), 1e-12));
        assert!(c.holds);
    }
}
