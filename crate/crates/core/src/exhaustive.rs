//! Full enumeration of Boolean functions for small `n` (and seeded sampling
//! beyond), checking both support inequalities on every function.
//!
//! Work is split into contiguous chunks of truth tables; chunk tallies merge
//! associatively in table order, so the summary is independent of the
//! number of workers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::table_hex;
use crate::function::{check_dimension, BooleanFunction};
use crate::rng::SplitMix64;
use crate::search::Objective;
use crate::stats::{energy_naive, energy_representation, FunctionStats};
use crate::uncertainty::{classical_comparison, theorem_comparison, Relation};

/// Largest `n` for full enumeration (`2^{2ⁿ}` = 65,536 functions).
pub const MAX_EXHAUSTIVE_N: u32 = 4;

const CHUNK: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Coverage {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExhaustiveSummary {
    pub n: u32,
    pub coverage: Coverage,
    pub functions_checked: u64,
    pub constants: u64,
    /// Non-constant tables with `3|A|³·2ⁿ > 128·E·D·|supp f̂|²`, as hex.
    pub violations: Vec<String>,
    /// Non-constant tables where the bound holds with equality.
    pub equality_cases: Vec<String>,
    /// Minimum of `rhs/lhs` over non-constant tables with `|A| ≥ 2`.
    pub min_ratio: Option<Objective>,
    pub min_ratio_float: Option<f64>,
    pub argmin: Vec<String>,
    /// Nonzero tables with `|A|·|supp f̂| < 2ⁿ`.
    pub classical_violations: Vec<String>,
    /// Nonzero tables with `|A|·|supp f̂| = 2ⁿ`.
    pub classical_equality_cases: Vec<String>,
    /// Tables where the naive, representation and spectral energies differ.
    /// Only populated when cross-checking is requested.
    pub energy_mismatches: Vec<String>,
}

impl ExhaustiveSummary {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn classical_violation_count(&self) -> usize {
        self.classical_violations.len()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.classical_violations.is_empty() && self.energy_mismatches.is_empty()
    }
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    constants: u64,
    violations: Vec<String>,
    equality: Vec<String>,
    min: Option<Objective>,
    argmin: Vec<String>,
    classical_violations: Vec<String>,
    classical_equality: Vec<String>,
    energy_mismatches: Vec<String>,
}

impl Tally {
    fn observe(&mut self, f: &BooleanFunction, cross_check: bool) {
        self.checked += 1;
        let card = f.cardinality();
        if card == 0 {
            self.constants += 1;
            return;
        }
        let stats = FunctionStats::of(f);
        let hex = || table_hex(f);

        let classical = classical_comparison(stats.n, card, stats.spectral_support);
        match classical.relation {
            Relation::Less => self.classical_violations.push(hex()),
            Relation::Equal => self.classical_equality.push(hex()),
            Relation::Greater => {}
        }
        if cross_check {
            let support = f.support();
            let naive = energy_naive(&support).value;
            let rep = energy_representation(&support).value;
            if naive != stats.energy || rep != stats.energy {
                self.energy_mismatches.push(hex());
            }
        }
        if stats.is_constant() {
            self.constants += 1;
            return;
        }

        let d = stats.influence_count();
        let theorem = theorem_comparison(stats.n, card, stats.energy, d, stats.spectral_support);
        match theorem.relation {
            Relation::Greater => self.violations.push(hex()),
            Relation::Equal => self.equality.push(hex()),
            Relation::Less => {}
        }
        if card >= 2 {
            let obj = Objective::from_parts(stats.n, card, stats.energy, d, stats.spectral_support);
            match self.min.as_ref().map(|m| obj.cmp(m)) {
                None | Some(std::cmp::Ordering::Less) => {
                    self.min = Some(obj);
                    self.argmin = vec![hex()];
                }
                Some(std::cmp::Ordering::Equal) => self.argmin.push(hex()),
                Some(std::cmp::Ordering::Greater) => {}
            }
        }
    }

    /// Appends `later`, which covers tables after those in `self`.
    fn merge(mut self, later: Tally) -> Tally {
        self.checked += later.checked;
        self.constants += later.constants;
        self.violations.extend(later.violations);
        self.equality.extend(later.equality);
        self.classical_violations.extend(later.classical_violations);
        self.classical_equality.extend(later.classical_equality);
        self.energy_mismatches.extend(later.energy_mismatches);
        match (&self.min, later.min) {
            (_, None) => {}
            (None, Some(m)) => {
                self.min = Some(m);
                self.argmin = later.argmin;
            }
            (Some(cur), Some(m)) => match m.cmp(cur) {
                std::cmp::Ordering::Less => {
                    self.min = Some(m);
                    self.argmin = later.argmin;
                }
                std::cmp::Ordering::Equal => self.argmin.extend(later.argmin),
                std::cmp::Ordering::Greater => {}
            },
        }
        self
    }

    fn into_summary(self, n: u32, coverage: Coverage) -> ExhaustiveSummary {
        ExhaustiveSummary {
            n,
            coverage,
            functions_checked: self.checked,
            constants: self.constants,
            violations: self.violations,
            equality_cases: self.equality,
            min_ratio_float: self.min.as_ref().and_then(Objective::to_f64),
            min_ratio: self.min,
            argmin: self.argmin,
            classical_violations: self.classical_violations,
            classical_equality_cases: self.classical_equality,
            energy_mismatches: self.energy_mismatches,
        }
    }
}

fn chunked<F>(total: u64, make: F, cross_check: bool) -> Tally
where
    F: Fn(u64) -> BooleanFunction + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    let tallies: Vec<Tally> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut t = Tally::default();
            for i in c * CHUNK..((c + 1) * CHUNK).min(total) {
                t.observe(&make(i), cross_check);
            }
            t
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

/// Checks every function on `n ≤ 4` variables, in truth-table order.
pub fn enumerate(n: u32) -> Result<ExhaustiveSummary> {
    enumerate_with(n, false)
}

/// As [`enumerate`], optionally cross-checking the three energy routines.
pub fn enumerate_with(n: u32, cross_check: bool) -> Result<ExhaustiveSummary> {
    check_dimension(n)?;
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::UseSampledMode(n));
    }
    let total = 1u64 << (1u32 << n);
    let tally = chunked(
        total,
        |table| BooleanFunction::from_words(n, vec![table]).expect("table fits the domain"),
        cross_check,
    );
    Ok(tally.into_summary(n, Coverage::Exhaustive))
}

/// Uniform random truth table for sample `index` of a seeded run.
pub fn sample_table(n: u32, seed: u64, index: u64) -> BooleanFunction {
    let mut rng = SplitMix64::split(seed, index);
    let words = (1usize << n).div_ceil(64);
    let mut w: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
    if n < 6 {
        w[0] &= (1u64 << (1u32 << n)) - 1;
    }
    BooleanFunction::from_words(n, w).expect("masked table fits the domain")
}

/// The same checks on `samples` seeded random tables.
pub fn sampled(n: u32, samples: u64, seed: u64) -> Result<ExhaustiveSummary> {
    check_dimension(n)?;
    let tally = chunked(samples, |i| sample_table(n, seed, i), false);
    Ok(tally.into_summary(n, Coverage::Sampled { samples, seed }))
}

/// Runs `job` on a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool").install(job)
}
