//! Exact Fourier analysis of Boolean functions on F₂ⁿ.
//!
//! Functions are packed truth tables; spectra are integer Walsh–Hadamard
//! coefficients `k_S = 2ⁿ f̂(S)`, so Parseval, the energy identity and the
//! influence identity are checked as exact integer equations. On top of that
//! the crate evaluates the classical support inequality and the
//! energy–influence support bound, with generators, a local search for tight
//! instances and exhaustive enumeration at small `n`.

pub mod error;
pub mod exhaustive;
pub mod format;
pub mod function;
pub mod generators;
pub mod json_int;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod search;
pub mod stats;
pub mod uncertainty;

pub use error::{Error, Result};
pub use exhaustive::{enumerate, sampled, ExhaustiveSummary};
pub use function::{
    counting_convolution, fwht_in_place, inverse_wht, spectral_support, wht, xor_convolve, BooleanFunction, PointSet,
    Spectrum,
};
pub use generators::{GeneratorKind, GeneratorSpec};
pub use report::{analyze, AnalysisReport};
pub use rng::SplitMix64;
pub use scalar::{Dyadic, Scalar};
pub use search::{Annealing, Objective, SearchConfig, SearchTrace};
pub use stats::{
    energy_naive, energy_representation, energy_spectral, influence_counts, total_influence_spectral, EnergyValue,
    FunctionStats, InfluenceProfile,
};
pub use uncertainty::{
    classical_check, corollary_report, optimal_radius, theorem_check, truncation_bound, CorollaryReport,
    ExactComparison, Relation, TheoremReport,
};

/// Exact rational scalar for the finite summations.
pub type Rational = num_rational::BigRational;

pub type TruncationBound = uncertainty::proof::TruncationBound<f64>;
pub type TruncationBound32 = uncertainty::proof::TruncationBound<f32>;
pub type CauchyStep = uncertainty::proof::CauchyStep<f64>;
pub type WeightSum = uncertainty::proof::WeightSum<f64>;
pub type ExactWeightSum = uncertainty::proof::WeightSum<Rational>;

/// `Σ_{s=1}^{⌊R⌋}(1 − s/R)²` against `R/3` in `f64`.
pub fn weight_sum(radius: f64) -> WeightSum {
    uncertainty::proof::weight_sum(&radius)
}

/// The weight sum evaluated exactly at the rational value of `radius`.
pub fn weight_sum_exact(radius: &Rational) -> ExactWeightSum {
    uncertainty::proof::weight_sum(radius)
}

/// Whether the Cauchy–Schwarz step holds at radius `R`.
pub use uncertainty::cauchy_step_check;
