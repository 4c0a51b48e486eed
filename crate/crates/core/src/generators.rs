//! Structured and random subsets of F₂ⁿ with known or extremal statistics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{check_dimension, PointSet};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    /// Codimension-`k` subspace fixing the top `k` coordinates to zero.
    CoordinateSubspace {
        k: u32,
    },
    AffineSubspace {
        basis: Vec<usize>,
        shift: usize,
    },
    HammingBall {
        center: usize,
        radius: u32,
    },
    RandomDensity {
        p: f64,
    },
    SidonGreedy {
        m: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub n: u32,
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub seed: u64,
}

/// A generated set; `flagged` marks a Sidon target that could not be reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub set: PointSet,
    pub flagged: bool,
}

impl GeneratorSpec {
    pub fn new(n: u32, kind: GeneratorKind, seed: u64) -> Self {
        Self { n, kind, seed }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..self.clone() }
    }

    pub fn generate(&self) -> Result<Generated> {
        let n = self.n;
        let exact = |set: Result<PointSet>| set.map(|set| Generated { set, flagged: false });
        match &self.kind {
            GeneratorKind::CoordinateSubspace { k } => exact(coordinate_subspace(n, *k)),
            GeneratorKind::AffineSubspace { basis, shift } => exact(affine_subspace(n, basis, *shift)),
            GeneratorKind::HammingBall { center, radius } => exact(hamming_ball(n, *center, *radius)),
            GeneratorKind::RandomDensity { p } => exact(random_density(n, *p, self.seed)),
            GeneratorKind::SidonGreedy { m } => sidon_greedy(n, *m, self.seed),
        }
    }
}

fn generator_error(msg: impl Into<String>) -> Error {
    Error::Generator(msg.into())
}

/// `{x : the top k coordinates of x are 0}`, i.e. `x < 2^{n−k}`.
pub fn coordinate_subspace(n: u32, k: u32) -> Result<PointSet> {
    check_dimension(n)?;
    if k > n {
        return Err(generator_error(format!("codimension k={k} exceeds n={n}")));
    }
    PointSet::new(n, (0..1usize << (n - k)).collect())
}

/// Reduces `v` against an echelon basis kept sorted by leading bit.
fn reduce(echelon: &[usize], mut v: usize) -> usize {
    for &b in echelon {
        v = v.min(v ^ b);
    }
    v
}

/// Whether the vectors are linearly independent over F₂.
pub fn is_independent(vectors: &[usize]) -> bool {
    let mut echelon: Vec<usize> = Vec::with_capacity(vectors.len());
    for &v in vectors {
        let r = reduce(&echelon, v);
        if r == 0 {
            return false;
        }
        echelon.push(r);
        echelon.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

/// `span(basis) ⊕ shift`.
pub fn affine_subspace(n: u32, basis: &[usize], shift: usize) -> Result<PointSet> {
    check_dimension(n)?;
    if let Some(&v) = basis.iter().chain(std::iter::once(&shift)).find(|&&v| v >> n != 0) {
        return Err(generator_error(format!("vector {v:#x} out of range for n={n}")));
    }
    if !is_independent(basis) {
        return Err(generator_error("basis vectors are linearly dependent"));
    }
    let mut points = Vec::with_capacity(1 << basis.len());
    let mut x = shift;
    points.push(x);
    // Gray-code walk over the span.
    for i in 1usize..1 << basis.len() {
        x ^= basis[i.trailing_zeros() as usize];
        points.push(x);
    }
    PointSet::new(n, points)
}

/// `{x : popcount(x ⊕ center) ≤ radius}`.
pub fn hamming_ball(n: u32, center: usize, radius: u32) -> Result<PointSet> {
    check_dimension(n)?;
    if radius > n {
        return Err(generator_error(format!("radius {radius} exceeds n={n}")));
    }
    if center >> n != 0 {
        return Err(generator_error(format!("center {center:#x} out of range for n={n}")));
    }
    let points = (0..1usize << n).filter(|&x| (x ^ center).count_ones() <= radius).collect();
    PointSet::new(n, points)
}

/// Includes each point independently with probability `p`, drawing one
/// SplitMix64 double per point in increasing point order.
pub fn random_density(n: u32, p: f64, seed: u64) -> Result<PointSet> {
    check_dimension(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(generator_error(format!("density p={p} outside [0,1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let points = (0..1usize << n).filter(|_| rng.next_f64() < p).collect();
    PointSet::new(n, points)
}

/// Greedy Sidon set: candidates in seeded random order, each kept when all
/// its XORs with the current members are unused differences.
pub fn sidon_greedy(n: u32, m: usize, seed: u64) -> Result<Generated> {
    check_dimension(n)?;
    if m < 2 {
        return Err(generator_error(format!("Sidon target size m={m} must be at least 2")));
    }
    let mut candidates: Vec<usize> = (0..1usize << n).collect();
    SplitMix64::new(seed).shuffle(&mut candidates);

    let mut used = vec![false; 1 << n];
    let mut members: Vec<usize> = Vec::with_capacity(m);
    for c in candidates {
        if members.len() == m {
            break;
        }
        if members.iter().all(|&a| !used[a ^ c]) {
            for &a in &members {
                used[a ^ c] = true;
            }
            members.push(c);
        }
    }
    let flagged = members.len() < m;
    Ok(Generated { set: PointSet::new(n, members)?, flagged })
}

/// Whether all XORs of distinct pairs are distinct.
pub fn is_sidon(set: &PointSet) -> bool {
    let mut seen = std::collections::HashSet::new();
    let pts = set.points();
    pts.iter().enumerate().all(|(i, &a)| pts[i + 1..].iter().all(|&b| seen.insert(a ^ b)))
}
