//! The support inequalities: the classical `|A|·|supp f̂| ≥ 2ⁿ`, the
//! energy–influence bound `3|A|³/(128 E(A)) ≤ I(f)·|supp f̂|²` and its
//! corollary for sets of prescribed energy exponent.
//!
//! Verdicts are exact: both sides are cleared of their power-of-two
//! denominators and compared as integers. Only the radius diagnostics in
//! [`proof`] use floating point.

pub mod proof;

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::stats::FunctionStats;
use proof::{cauchy_step, optimal_radius_from, truncation_terms, CauchyStep, TruncationBound};

/// Ordering of `lhs` relative to `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }
}

/// Cross-multiplied sides of an inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactComparison {
    #[serde(with = "crate::json_int::biguint_int")]
    pub lhs: BigUint,
    #[serde(with = "crate::json_int::biguint_int")]
    pub rhs: BigUint,
    pub relation: Relation,
    /// `rhs / lhs`; `None` stands for `+∞` (zero `lhs`).
    pub ratio_float: Option<f64>,
}

/// `a / b` for big integers without overflowing the float exponent range.
pub(crate) fn big_ratio(a: &BigUint, b: &BigUint) -> f64 {
    let shift = a.bits().max(b.bits()).saturating_sub(1000);
    let a = (a >> shift).to_f64().unwrap_or(f64::INFINITY);
    let b = (b >> shift).to_f64().unwrap_or(f64::INFINITY);
    a / b
}

impl ExactComparison {
    pub fn new(lhs: BigUint, rhs: BigUint) -> Self {
        let relation = lhs.cmp(&rhs).into();
        let ratio_float = (!lhs.is_zero()).then(|| big_ratio(&rhs, &lhs));
        Self { lhs, rhs, relation, ratio_float }
    }

    pub fn lhs_le_rhs(&self) -> bool {
        self.relation != Relation::Greater
    }

    pub fn lhs_ge_rhs(&self) -> bool {
        self.relation != Relation::Less
    }
}

fn big(x: impl Into<BigUint>) -> BigUint {
    x.into()
}

/// `3·|A|³·2ⁿ` versus `128·E(A)·D·|supp f̂|²` where `D = I(f)·2ⁿ`.
pub fn theorem_comparison(
    n: u32,
    cardinality: u64,
    energy: u128,
    influence_count: u64,
    support: u64,
) -> ExactComparison {
    let card = big(cardinality);
    let lhs = (big(3u8) * &card * &card * &card) << n as usize;
    let s = big(support);
    let rhs = big(128u8) * big(energy) * big(influence_count) * &s * &s;
    ExactComparison::new(lhs, rhs)
}

/// `|A|·|supp f̂|` versus `2ⁿ`.
pub fn classical_comparison(n: u32, cardinality: u64, support: u64) -> ExactComparison {
    ExactComparison::new(big(cardinality) * big(support), big(1u8) << n as usize)
}

/// Statistics and verdicts of the energy–influence inequality for one
/// function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: u32,
    pub cardinality: u64,
    #[serde(with = "crate::json_int::u128_int")]
    pub energy: u128,
    /// `D = I(f)·2ⁿ`
    pub influence_count: u64,
    pub spectral_support: u64,
    /// `3|A|³·2ⁿ` vs `128·E·D·|supp f̂|²`
    pub comparison: ExactComparison,
    /// Non-strict form `lhs ≤ rhs`.
    pub holds: bool,
    /// Strict form `lhs < rhs`.
    pub strict: bool,
    /// Constant function (`D = 0`); the bound is reported but not expected
    /// to hold.
    pub degenerate: bool,
    pub optimal_radius_float: Option<f64>,
    pub classical: ExactComparison,
}

impl FunctionStats {
    pub fn theorem_check(&self) -> Result<TheoremReport> {
        if self.cardinality == 0 {
            return Err(Error::EmptySupport);
        }
        let d = self.influence_count();
        let comparison = theorem_comparison(self.n, self.cardinality, self.energy, d, self.spectral_support);
        Ok(TheoremReport {
            n: self.n,
            cardinality: self.cardinality,
            energy: self.energy,
            influence_count: d,
            spectral_support: self.spectral_support,
            holds: comparison.lhs_le_rhs(),
            strict: comparison.relation == Relation::Less,
            comparison,
            degenerate: d == 0,
            optimal_radius_float: self.optimal_radius().ok(),
            classical: classical_comparison(self.n, self.cardinality, self.spectral_support),
        })
    }

    pub fn classical_check(&self) -> Result<ExactComparison> {
        if self.cardinality == 0 {
            return Err(Error::EmptySupport);
        }
        Ok(classical_comparison(self.n, self.cardinality, self.spectral_support))
    }

    pub fn total_influence_float(&self) -> f64 {
        self.influence.total().to_f64()
    }

    pub fn optimal_radius(&self) -> Result<f64> {
        if self.cardinality == 0 {
            return Err(Error::EmptySupport);
        }
        if self.is_constant() {
            return Err(Error::Degenerate);
        }
        Ok(optimal_radius_from(self.n, self.energy as f64, self.total_influence_float(), self.spectral_support as f64))
    }

    pub fn truncation_bound(&self, radius: f64) -> Result<TruncationBound<f64>> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::NonPositiveRadius(radius));
        }
        Ok(truncation_terms(
            self.n,
            self.cardinality as f64,
            self.energy as f64,
            self.total_influence_float(),
            self.spectral_support as f64,
            radius,
        ))
    }

    pub fn cauchy_step(&self, radius: f64) -> Result<CauchyStep<f64>> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::NonPositiveRadius(radius));
        }
        Ok(cauchy_step(&self.spectrum, radius))
    }

    pub fn corollary_report(&self) -> Result<CorollaryReport> {
        if self.cardinality < 2 {
            return Err(Error::SupportTooSmall(self.cardinality));
        }
        if self.is_constant() {
            return Err(Error::Degenerate);
        }
        let card = self.cardinality as f64;
        let dim = f64::from(self.n);
        let eta = (dim * self.energy as f64).ln() / card.ln() - 2.0;
        let exponent = 2.0 / (1.0 - eta);
        let implied = card / (self.spectral_support as f64).powf(exponent);
        let in_range = eta > 0.0 && eta < 1.0;
        let chain = in_range.then(|| {
            let c = big(self.cardinality);
            let s = big(self.spectral_support);
            ExactComparison::new(big(3u8) * &c * &c * &c, big(128u8) * big(self.energy) * big(self.n) * &s * &s)
        });
        Ok(CorollaryReport {
            eta_float: eta,
            exponent_float: finite(exponent),
            implied_constant_float: finite(implied),
            in_range,
            size_ratio_float: dim / card,
            chain_holds: chain.as_ref().map(ExactComparison::lhs_le_rhs),
            chain,
        })
    }
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Energy exponent `η` solving `E(A) = |A|^{2+η}/n` and the support bound
/// it implies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub eta_float: f64,
    /// `2/(1−η)`; `None` when `η = 1`.
    pub exponent_float: Option<f64>,
    /// `|A| / |supp f̂|^{2/(1−η)}`
    pub implied_constant_float: Option<f64>,
    /// `0 < η < 1`
    pub in_range: bool,
    /// `n/|A|`, the size condition's ratio.
    pub size_ratio_float: f64,
    /// `3|A|³` vs `128·E·n·|supp f̂|²`, i.e. the main bound with `I(f) ≤ n`
    /// substituted. Present only when `η` is in range.
    pub chain: Option<ExactComparison>,
    pub chain_holds: Option<bool>,
}

pub fn theorem_check(f: &BooleanFunction) -> Result<TheoremReport> {
    FunctionStats::of(f).theorem_check()
}

pub fn classical_check(f: &BooleanFunction) -> Result<ExactComparison> {
    FunctionStats::of(f).classical_check()
}

pub fn optimal_radius(f: &BooleanFunction) -> Result<f64> {
    FunctionStats::of(f).optimal_radius()
}

pub fn truncation_bound(f: &BooleanFunction, radius: f64) -> Result<TruncationBound<f64>> {
    FunctionStats::of(f).truncation_bound(radius)
}

/// Whether the Cauchy–Schwarz step holds within [`proof::CAUCHY_SLACK`].
pub fn cauchy_step_check(f: &BooleanFunction, radius: f64) -> Result<bool> {
    Ok(FunctionStats::of(f).cauchy_step(radius)?.holds)
}

pub fn corollary_report(f: &BooleanFunction) -> Result<CorollaryReport> {
    FunctionStats::of(f).corollary_report()
}
