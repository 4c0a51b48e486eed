//! Stochastic local search for sets that make the energy–influence bound
//! tight, i.e. that minimize `128·E·D·|supp f̂|² / (3·|A|³·2ⁿ)`.
//!
//! Moves flip the membership of one point. The statistics of the current
//! set are maintained incrementally: `Δd_i` in `O(n)`, `ΔE` in `O(|A|)`
//! through the representation counts, and the spectrum in `O(2ⁿ)`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{check_dimension, wht, BooleanFunction, PointSet};
use crate::generators::GeneratorSpec;
use crate::rng::SplitMix64;
use crate::stats::{influence_counts, representation_counts, FunctionStats};
use crate::uncertainty::{big_ratio, TheoremReport};

/// Tightness of one state as the exact pair `(128·E·D·|s|², 3·|A|³·2ⁿ)`.
/// Degenerate states (`|A| < 2` or constant) are `Infinite`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Finite {
        #[serde(with = "crate::json_int::biguint_int")]
        num: BigUint,
        #[serde(with = "crate::json_int::biguint_int")]
        den: BigUint,
    },
    Infinite,
}

impl Objective {
    pub fn from_parts(n: u32, cardinality: u64, energy: u128, influence_count: u64, support: u64) -> Self {
        if cardinality < 2 || influence_count == 0 {
            return Objective::Infinite;
        }
        let card = BigUint::from(cardinality);
        let s = BigUint::from(support);
        Objective::Finite {
            num: BigUint::from(128u8) * BigUint::from(energy) * BigUint::from(influence_count) * &s * &s,
            den: (BigUint::from(3u8) * &card * &card * &card) << n as usize,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Objective::Finite { .. })
    }

    /// `None` for an infinite objective.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Objective::Finite { num, den } => Some(big_ratio(num, den)),
            Objective::Infinite => None,
        }
    }
}

impl Ord for Objective {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Objective::Infinite, Objective::Infinite) => Ordering::Equal,
            (Objective::Infinite, _) => Ordering::Greater,
            (_, Objective::Infinite) => Ordering::Less,
            (Objective::Finite { num: a, den: b }, Objective::Finite { num: c, den: d }) => (a * d).cmp(&(c * b)),
        }
    }
}

impl PartialOrd for Objective {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Objective {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Objective {}

pub fn objective(f: &BooleanFunction) -> Objective {
    let s = FunctionStats::of(f);
    Objective::from_parts(s.n, s.cardinality, s.energy, s.influence_count(), s.spectral_support)
}

/// Flips the membership of one uniformly chosen point.
pub fn step(state: &PointSet, rng: &mut SplitMix64) -> PointSet {
    let x = rng.below(1 << state.n()) as usize;
    flip_point(state, x)
}

pub fn flip_point(state: &PointSet, x: usize) -> PointSet {
    let mut pts = state.points().to_vec();
    match pts.binary_search(&x) {
        Ok(i) => {
            pts.remove(i);
        }
        Err(i) => pts.insert(i, x),
    }
    PointSet::new(state.n(), pts).expect("flipped point stays in range")
}

const ABSENT: usize = usize::MAX;

/// Set statistics kept current under single-point flips.
#[derive(Debug, Clone)]
pub struct IncrementalStats {
    table: BooleanFunction,
    members: Vec<usize>,
    position: Vec<usize>,
    reps: Vec<u64>,
    energy: u128,
    d: Vec<u64>,
    spectrum: Vec<i64>,
    support: u64,
}

impl IncrementalStats {
    pub fn new(set: &PointSet) -> Self {
        let table = set.to_function();
        let mut position = vec![ABSENT; table.domain_size()];
        for (i, &x) in set.points().iter().enumerate() {
            position[x] = i;
        }
        let reps = representation_counts(set);
        let energy = reps.iter().map(|&r| u128::from(r) * u128::from(r)).sum();
        let spectrum = wht(&table);
        Self {
            d: influence_counts(&table).d,
            members: set.points().to_vec(),
            position,
            reps,
            energy,
            support: spectrum.support_size(),
            spectrum: spectrum.coeffs().to_vec(),
            table,
        }
    }

    pub fn n(&self) -> u32 {
        self.table.n()
    }

    pub fn cardinality(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn energy(&self) -> u128 {
        self.energy
    }

    pub fn influence_count(&self) -> u64 {
        self.d.iter().sum()
    }

    pub fn spectral_support(&self) -> u64 {
        self.support
    }

    pub fn objective(&self) -> Objective {
        Objective::from_parts(self.n(), self.cardinality(), self.energy, self.influence_count(), self.support)
    }

    pub fn to_point_set(&self) -> PointSet {
        self.table.support()
    }

    /// Toggles membership of `x`; applying it twice restores the state.
    pub fn flip(&mut self, x: usize) {
        let adding = !self.table.get(x);

        for (i, d) in self.d.iter_mut().enumerate() {
            // After the flip, x disagrees with its neighbour iff it agreed before.
            if self.table.get(x ^ (1 << i)) == adding {
                *d -= 2;
            } else {
                *d += 2;
            }
        }

        if adding {
            for &a in &self.members {
                let r = &mut self.reps[x ^ a];
                self.energy += 4 * u128::from(*r) + 4;
                *r += 2;
            }
            let r0 = &mut self.reps[0];
            self.energy += 2 * u128::from(*r0) + 1;
            *r0 += 1;
            self.position[x] = self.members.len();
            self.members.push(x);
        } else {
            let i = self.position[x];
            self.members.swap_remove(i);
            if let Some(&moved) = self.members.get(i) {
                self.position[moved] = i;
            }
            self.position[x] = ABSENT;
            let r0 = &mut self.reps[0];
            self.energy -= 2 * u128::from(*r0) - 1;
            *r0 -= 1;
            for &a in &self.members {
                let r = &mut self.reps[x ^ a];
                self.energy -= 4 * u128::from(*r) - 4;
                *r -= 2;
            }
        }

        let delta = if adding { 1 } else { -1 };
        for (mask, k) in self.spectrum.iter_mut().enumerate() {
            let before = *k != 0;
            *k += if (mask & x).count_ones().is_multiple_of(2) { delta } else { -delta };
            match (before, *k != 0) {
                (false, true) => self.support += 1,
                (true, false) => self.support -= 1,
                _ => {}
            }
        }

        self.table.flip(x);
    }

    /// Recomputes everything from the membership table. Returns whether the
    /// incremental values matched the fresh ones.
    pub fn refresh(&mut self) -> bool {
        let fresh = Self::new(&self.table.support());
        let matched = fresh.energy == self.energy
            && fresh.d == self.d
            && fresh.support == self.support
            && fresh.spectrum == self.spectrum
            && fresh.reps == self.reps
            && fresh.members.len() == self.members.len();
        *self = fresh;
        matched
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annealing {
    pub enabled: bool,
    pub initial_temperature: f64,
    /// Geometric cooling factor applied every iteration.
    pub cooling: f64,
}

impl Annealing {
    pub fn disabled() -> Self {
        Self { enabled: false, initial_temperature: 1.0, cooling: 0.99 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: u32,
    pub initial: GeneratorSpec,
    pub max_iterations: usize,
    pub restarts: usize,
    pub annealing: Annealing,
    pub seed: u64,
    /// Accepted steps between full recomputations of the statistics.
    pub recompute_interval: usize,
}

pub const DEFAULT_RECOMPUTE_INTERVAL: usize = 1024;

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        check_dimension(self.n)?;
        let bad = |msg: String| Err(Error::SearchConfig(msg));
        if self.initial.n != self.n {
            return bad(format!("initial generator has n={}, search has n={}", self.initial.n, self.n));
        }
        if self.restarts == 0 {
            return bad("restarts must be at least 1".into());
        }
        if self.recompute_interval == 0 {
            return bad("recompute interval must be at least 1".into());
        }
        let a = &self.annealing;
        if a.enabled && !(a.initial_temperature > 0.0 && a.initial_temperature.is_finite()) {
            return bad(format!("temperature must be positive, got {}", a.initial_temperature));
        }
        if a.enabled && !(a.cooling > 0.0 && a.cooling < 1.0) {
            return bad(format!("cooling factor must lie in (0,1), got {}", a.cooling));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub restart: usize,
    pub iteration: usize,
    /// `|A|` of the evaluated state.
    pub cardinality: u64,
    /// `None` for an infinite objective.
    pub objective_float: Option<f64>,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchTrace {
    pub records: Vec<SearchRecord>,
    pub best_restart: usize,
    pub best: PointSet,
    pub best_objective: Objective,
    /// Absent when the best state has empty support.
    pub best_report: Option<TheoremReport>,
}

struct RestartOutcome {
    records: Vec<SearchRecord>,
    best: PointSet,
    best_objective: Objective,
}

/// Whether to move from `current` to `candidate` at the given temperature.
fn accept(current: &Objective, candidate: &Objective, temperature: Option<f64>, rng: &mut SplitMix64) -> bool {
    if !current.is_finite() {
        // Nothing to preserve in a degenerate state.
        return true;
    }
    match candidate.cmp(current) {
        Ordering::Less => true,
        _ if !candidate.is_finite() => false,
        ordering => match temperature {
            None => false,
            Some(t) => {
                let (c, k) = (current.to_f64().unwrap_or(f64::INFINITY), candidate.to_f64().unwrap_or(f64::INFINITY));
                let delta = if ordering == Ordering::Equal { 0.0 } else { k.ln() - c.ln() };
                rng.next_f64() < (-delta / t).exp()
            }
        },
    }
}

fn run_restart(config: &SearchConfig, restart: usize) -> Result<RestartOutcome> {
    let mut rng = SplitMix64::split(config.seed, restart as u64);
    let initial = config.initial.with_seed(rng.next_u64()).generate()?.set;
    let mut state = IncrementalStats::new(&initial);
    let mut current = state.objective();
    let mut best = initial;
    let mut best_objective = current.clone();
    let mut records = Vec::with_capacity(config.max_iterations + 1);
    records.push(SearchRecord {
        restart,
        iteration: 0,
        cardinality: state.cardinality(),
        objective_float: current.to_f64(),
        accepted: true,
    });

    let domain = 1u64 << config.n;
    let mut temperature = config.annealing.enabled.then_some(config.annealing.initial_temperature);
    let mut since_refresh = 0;
    for iteration in 1..=config.max_iterations {
        let x = rng.below(domain) as usize;
        state.flip(x);
        let candidate = state.objective();
        let accepted = accept(&current, &candidate, temperature, &mut rng);
        records.push(SearchRecord {
            restart,
            iteration,
            cardinality: state.cardinality(),
            objective_float: candidate.to_f64(),
            accepted,
        });
        if accepted {
            if candidate < best_objective {
                best = state.to_point_set();
                best_objective = candidate.clone();
            }
            current = candidate;
            since_refresh += 1;
            if since_refresh == config.recompute_interval {
                since_refresh = 0;
                assert!(state.refresh(), "incremental statistics drifted from recomputation");
            }
        } else {
            state.flip(x);
        }
        if let Some(t) = temperature.as_mut() {
            *t *= config.annealing.cooling;
        }
    }
    Ok(RestartOutcome { records, best, best_objective })
}

/// Runs all restarts (in parallel) and keeps the minimum-objective best;
/// ties go to the lowest restart index.
pub fn run(config: &SearchConfig) -> Result<SearchTrace> {
    config.validate()?;
    let outcomes = (0..config.restarts).into_par_iter().map(|r| run_restart(config, r)).collect::<Result<Vec<_>>>()?;

    let best_restart = outcomes
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.best_objective.cmp(&b.best_objective))
        .map(|(i, _)| i)
        .expect("at least one restart");
    let mut records = Vec::with_capacity(outcomes.iter().map(|o| o.records.len()).sum());
    let mut best = None;
    for (i, outcome) in outcomes.into_iter().enumerate() {
        records.extend(outcome.records);
        if i == best_restart {
            best = Some((outcome.best, outcome.best_objective));
        }
    }
    let (best, best_objective) = best.expect("best restart present");
    let best_report = FunctionStats::of(&best.to_function()).theorem_check().ok();
    Ok(SearchTrace { records, best_restart, best, best_objective, best_report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorKind;
    use crate::stats::energy_naive;

    fn pair(num: u64, den: u64) -> Objective {
        Objective::Finite { num: num.into(), den: den.into() }
    }

    #[test]
    fn objective_examples() {
        let ball = BooleanFunction::from_points(3, &[0, 1, 2, 4]).unwrap();
        assert_eq!(objective(&ball).to_f64(), Some(1000.0));
        match objective(&ball) {
            Objective::Finite { num, den } => {
                assert_eq!(num, BigUint::from(1_536_000u32));
                assert_eq!(den, BigUint::from(1536u32));
            }
            Objective::Infinite => panic!("ball is not degenerate"),
        }
        let sub = BooleanFunction::from_points(3, &[0, 1, 2, 3]).unwrap();
        assert_eq!(objective(&sub), pair(262_144, 1536));
        assert!(objective(&sub) < objective(&ball));
        assert_eq!(objective(&BooleanFunction::ones(3).unwrap()), Objective::Infinite);
        assert_eq!(objective(&BooleanFunction::from_points(3, &[1]).unwrap()), Objective::Infinite);
    }

    #[test]
    fn objective_order_is_by_ratio() {
        assert_eq!(pair(2, 4), pair(1, 2));
        assert!(pair(1, 3) < pair(1, 2));
        assert!(pair(1_000_000, 1) < Objective::Infinite);
    }

    #[test]
    fn step_examples() {
        let mut rng = SplitMix64::new(4);
        let empty = PointSet::empty(3).unwrap();
        assert_eq!(step(&empty, &mut rng).len(), 1);
        let set = PointSet::new(4, vec![1, 5, 9]).unwrap();
        for x in 0..16 {
            assert_eq!(flip_point(&flip_point(&set, x), x), set);
        }
    }

    #[test]
    fn incremental_energy_matches_oracle() {
        let mut rng = SplitMix64::new(2024);
        for case in 0..100 {
            let n = 1 + (case % 8) as u32;
            let set = crate::generators::random_density(n, rng.next_f64(), rng.next_u64()).unwrap();
            let x = rng.below(1 << n) as usize;
            let mut inc = IncrementalStats::new(&set);
            let before = energy_naive(&set).value;
            inc.flip(x);
            let after = energy_naive(&flip_point(&set, x)).value;
            assert_eq!(inc.energy() as i128 - before as i128, after as i128 - before as i128);
            assert!(inc.refresh());
        }
    }

    #[test]
    fn incremental_matches_recomputation_after_every_step() {
        let mut rng = SplitMix64::new(9);
        let set = crate::generators::random_density(6, 0.3, 1).unwrap();
        let mut inc = IncrementalStats::new(&set);
        for _ in 0..300 {
            inc.flip(rng.below(64) as usize);
            let fresh = FunctionStats::of(&inc.to_point_set().to_function());
            assert_eq!(inc.energy(), fresh.energy);
            assert_eq!(inc.influence_count(), fresh.influence_count());
            assert_eq!(inc.spectral_support(), fresh.spectral_support);
            assert!(inc.refresh());
        }
    }

    fn config(n: u32, iters: usize, restarts: usize) -> SearchConfig {
        SearchConfig {
            n,
            initial: GeneratorSpec::new(n, GeneratorKind::RandomDensity { p: 0.5 }, 0),
            max_iterations: iters,
            restarts,
            annealing: Annealing::disabled(),
            seed: 5,
            recompute_interval: 1,
        }
    }

    #[test]
    fn zero_iterations_records_initial_state() {
        let t = run(&config(3, 0, 1)).unwrap();
        assert_eq!(t.records.len(), 1);
        assert!(t.records[0].accepted);
    }

    #[test]
    fn runs_are_deterministic_and_monotone() {
        let mut cfg = config(5, 400, 4);
        cfg.annealing = Annealing { enabled: true, initial_temperature: 0.5, cooling: 0.995 };
        let a = run(&cfg).unwrap();
        assert_eq!(a, run(&cfg).unwrap());
        for r in 0..4 {
            let mut best = f64::INFINITY;
            for rec in a.records.iter().filter(|rec| rec.restart == r && rec.accepted) {
                best = best.min(rec.objective_float.unwrap_or(f64::INFINITY));
            }
            if r == a.best_restart {
                assert_eq!(a.best_objective.to_f64(), Some(best));
            }
        }
        assert_eq!(objective(&a.best.to_function()), a.best_objective);
    }

    #[test]
    fn config_validation() {
        let mut cfg = config(3, 10, 1);
        cfg.restarts = 0;
        assert!(run(&cfg).is_err());
        let mut cfg = config(3, 10, 1);
        cfg.annealing = Annealing { enabled: true, initial_temperature: 0.0, cooling: 0.5 };
        assert!(cfg.validate().is_err());
        cfg.annealing = Annealing { enabled: true, initial_temperature: 1.0, cooling: 1.0 };
        assert!(cfg.validate().is_err());
        let mut cfg = config(3, 10, 1);
        cfg.initial.n = 4;
        assert!(cfg.validate().is_err());
    }
}
