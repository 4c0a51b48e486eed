//! One-stop analysis of a single function.

use serde::{Deserialize, Serialize};

use crate::function::BooleanFunction;
use crate::scalar::Dyadic;
use crate::stats::{energy_naive, energy_representation, FunctionStats};
use crate::uncertainty::proof::{CauchyStep, TruncationBound};
use crate::uncertainty::{CorollaryReport, ExactComparison, TheoremReport};

/// Energies from the two independent routines next to the spectral one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyCrossCheck {
    #[serde(with = "crate::json_int::u128_int")]
    pub naive: u128,
    #[serde(with = "crate::json_int::u128_int")]
    pub representation: u128,
    #[serde(with = "crate::json_int::u128_int")]
    pub spectral: u128,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: u32,
    pub cardinality: u64,
    #[serde(with = "crate::json_int::u128_int")]
    pub energy: u128,
    pub energy_cross_check: Option<EnergyCrossCheck>,
    /// `d_i` for coordinates `1..=n`.
    pub influence_counts: Vec<u64>,
    pub influences: Vec<Dyadic>,
    pub total_influence: Dyadic,
    pub total_influence_float: f64,
    pub spectral_support: u64,
    pub degenerate: bool,
    pub theorem: Option<TheoremReport>,
    pub classical: Option<ExactComparison>,
    pub corollary: Option<CorollaryReport>,
    pub optimal_radius_float: Option<f64>,
    pub truncation_at_optimum: Option<TruncationBound<f64>>,
    pub cauchy_at_optimum: Option<CauchyStep<f64>>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    /// Whether any asserted inequality failed (degenerate functions are
    /// exempt from the main bound).
    pub fn has_violation(&self) -> bool {
        let theorem = self.theorem.as_ref().is_some_and(|t| !t.degenerate && !t.holds);
        let classical = self.classical.as_ref().is_some_and(|c| !c.lhs_ge_rhs());
        let chain = self.corollary.as_ref().is_some_and(|c| c.chain_holds == Some(false));
        let cauchy = self.cauchy_at_optimum.as_ref().is_some_and(|c| !c.holds);
        let energy = self.energy_cross_check.as_ref().is_some_and(|e| !e.agree);
        theorem || classical || chain || cauchy || energy
    }
}

/// Computes every statistic and verdict for `f`. With `paranoid`, the
/// energy is recomputed by the naive and representation routines as well;
/// reported values are unchanged.
pub fn analyze(f: &BooleanFunction, paranoid: bool) -> AnalysisReport {
    let stats = FunctionStats::of(f);
    let mut warnings = Vec::new();

    let energy_cross_check = paranoid.then(|| {
        let support = f.support();
        let naive = energy_naive(&support).value;
        let representation = energy_representation(&support).value;
        let agree = naive == stats.energy && representation == stats.energy;
        if !agree {
            warnings.push(format!(
                "energy routines disagree: naive={naive} representation={representation} spectral={}",
                stats.energy
            ));
        }
        EnergyCrossCheck { naive, representation, spectral: stats.energy, agree }
    });

    if stats.cardinality == 0 {
        warnings.push("empty support: the support inequalities are undefined".into());
    } else if stats.is_constant() {
        warnings.push("constant function: zero influence, the energy bound is degenerate".into());
    }

    let radius = stats.optimal_radius().ok();
    let corollary = match stats.corollary_report() {
        Ok(c) => Some(c),
        Err(e) => {
            if stats.cardinality > 0 && !stats.is_constant() {
                warnings.push(format!("corollary not evaluated: {e}"));
            }
            None
        }
    };

    AnalysisReport {
        n: stats.n,
        cardinality: stats.cardinality,
        energy: stats.energy,
        energy_cross_check,
        influence_counts: stats.influence.d.clone(),
        influences: (0..stats.n as usize).map(|i| stats.influence.influence(i)).collect(),
        total_influence: stats.influence.total(),
        total_influence_float: stats.total_influence_float(),
        spectral_support: stats.spectral_support,
        degenerate: stats.is_constant(),
        theorem: stats.theorem_check().ok(),
        classical: stats.classical_check().ok(),
        corollary,
        optimal_radius_float: radius,
        truncation_at_optimum: radius.and_then(|r| stats.truncation_bound(r).ok()),
        cauchy_at_optimum: radius.and_then(|r| stats.cauchy_step(r).ok()),
        warnings,
    }
}
