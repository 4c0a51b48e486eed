//! Flat CSV rows for analysis reports and search traces.

use boolspec::search::SearchRecord;
use boolspec::AnalysisReport;

pub const ANALYSIS_HEADER: [&str; 23] = [
    "n",
    "cardinality",
    "energy",
    "influence_count",
    "total_influence_float",
    "spectral_support",
    "theorem_lhs",
    "theorem_rhs",
    "theorem_ratio_float",
    "theorem_holds",
    "theorem_strict",
    "degenerate",
    "classical_lhs",
    "classical_rhs",
    "eta_float",
    "exponent_float",
    "implied_constant_float",
    "eta_in_range",
    "size_ratio_float",
    "optimal_radius_float",
    "truncation_lhs_float",
    "truncation_term1_float",
    "truncation_term2_float",
];

fn float(x: Option<f64>) -> String {
    match x {
        Some(v) => v.to_string(),
        None => "inf".into(),
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn analysis_row(r: &AnalysisReport) -> Vec<String> {
    let theorem = r.theorem.as_ref();
    let corollary = r.corollary.as_ref();
    let truncation = r.truncation_at_optimum.as_ref();
    vec![
        r.n.to_string(),
        r.cardinality.to_string(),
        r.energy.to_string(),
        r.influence_counts.iter().sum::<u64>().to_string(),
        r.total_influence_float.to_string(),
        r.spectral_support.to_string(),
        opt(theorem.map(|t| &t.comparison.lhs)),
        opt(theorem.map(|t| &t.comparison.rhs)),
        theorem.map(|t| float(t.comparison.ratio_float)).unwrap_or_default(),
        opt(theorem.map(|t| t.holds)),
        opt(theorem.map(|t| t.strict)),
        r.degenerate.to_string(),
        opt(r.classical.as_ref().map(|c| &c.lhs)),
        opt(r.classical.as_ref().map(|c| &c.rhs)),
        opt(corollary.map(|c| c.eta_float)),
        corollary.map(|c| float(c.exponent_float)).unwrap_or_default(),
        corollary.map(|c| float(c.implied_constant_float)).unwrap_or_default(),
        opt(corollary.map(|c| c.in_range)),
        opt(corollary.map(|c| c.size_ratio_float)),
        opt(r.optimal_radius_float),
        opt(truncation.map(|t| t.lhs)),
        opt(truncation.map(|t| t.term1)),
        opt(truncation.map(|t| t.term2)),
    ]
}

pub const TRACE_HEADER: [&str; 5] = ["restart", "iteration", "cardinality", "objective_float", "accepted"];

pub fn trace_row(r: &SearchRecord) -> [String; 5] {
    [
        r.restart.to_string(),
        r.iteration.to_string(),
        r.cardinality.to_string(),
        float(r.objective_float),
        r.accepted.to_string(),
    ]
}
