//! Additive energy and influence, each by independent algorithms that must
//! agree exactly.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::function::{wht, BooleanFunction, PointSet, Spectrum};
use crate::scalar::Dyadic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyAlgorithm {
    Naive,
    Representation,
    Spectral,
}

/// `E(A) = #{(a₁,a₂,a₃,a₄) ∈ A⁴ : a₁ ⊕ a₂ = a₃ ⊕ a₄}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnergyValue {
    #[serde(with = "crate::json_int::u128_int")]
    pub value: u128,
    pub algorithm: EnergyAlgorithm,
}

/// Counts triples `(a₁,a₂,a₃) ∈ A³` whose XOR lies in `A`. `O(|A|³)`;
/// this is the ground-truth oracle for the faster routines.
pub fn energy_naive(set: &PointSet) -> EnergyValue {
    let mut member = vec![0u8; 1 << set.n()];
    let pts = set.points();
    for &a in pts {
        member[a] = 1;
    }
    let card = pts.len() as u128;
    // (a₁,a₂) and (a₂,a₁) give the same XOR; the diagonal gives s = 0.
    let mut off_diagonal: u128 = 0;
    for (i, &a1) in pts.iter().enumerate() {
        for &a2 in &pts[i + 1..] {
            let s = a1 ^ a2;
            let hits: u64 = pts.iter().map(|&a3| u64::from(member[s ^ a3])).sum();
            off_diagonal += u128::from(hits);
        }
    }
    EnergyValue { value: card * card + 2 * off_diagonal, algorithm: EnergyAlgorithm::Naive }
}

/// `Σ_s r(s)²` with `r(s) = #{(a₁,a₂) ∈ A² : a₁ ⊕ a₂ = s}`, in `O(|A|²)`.
///
/// Uses a dense `2ⁿ` counter only when `|A|² > 2ⁿ`, a hash count otherwise.
pub fn energy_representation(set: &PointSet) -> EnergyValue {
    let pts = set.points();
    let pairs = pts.len() as u128 * pts.len() as u128;
    let value = if pairs > 1u128 << set.n() {
        representation_counts(set).iter().map(|&r| u128::from(r) * u128::from(r)).sum()
    } else {
        let mut counts: HashMap<usize, u64> = HashMap::with_capacity(pts.len() * pts.len());
        for &a in pts {
            for &b in pts {
                *counts.entry(a ^ b).or_default() += 1;
            }
        }
        counts.values().map(|&r| u128::from(r) * u128::from(r)).sum()
    };
    EnergyValue { value, algorithm: EnergyAlgorithm::Representation }
}

/// Dense representation function `r(s)` over all `s ∈ F₂ⁿ`.
pub fn representation_counts(set: &PointSet) -> Vec<u64> {
    let mut r = vec![0u64; 1 << set.n()];
    let pts = set.points();
    for &a in pts {
        for &b in pts {
            r[a ^ b] += 1;
        }
    }
    r
}

/// `E(A) = Σ_S k_S⁴ / 2ⁿ`.
pub fn energy_spectral(f: &BooleanFunction) -> EnergyValue {
    energy_from_spectrum(&wht(f))
}

/// Spectral energy from an already computed spectrum.
///
/// Panics if `Σ k_S⁴` is not divisible by `2ⁿ`; that can only happen when
/// the spectrum was not produced by [`wht`] on a Boolean function.
pub fn energy_from_spectrum(s: &Spectrum) -> EnergyValue {
    let fourth = s.sum_fourth_powers();
    let mask = (1u128 << s.n()) - 1;
    assert!(fourth & mask == 0, "spectral energy not divisible by 2^n");
    EnergyValue { value: fourth >> s.n(), algorithm: EnergyAlgorithm::Spectral }
}

/// Per-coordinate disagreement counts `d_i = #{x : f(x) ≠ f(x ⊕ e_i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InfluenceProfile {
    pub n: u32,
    /// `d[i]` belongs to coordinate `i + 1`.
    pub d: Vec<u64>,
}

impl InfluenceProfile {
    /// `D = Σ d_i = I(f)·2ⁿ`.
    pub fn total_count(&self) -> u64 {
        self.d.iter().sum()
    }

    /// `Inf_{i+1}(f) = d_i / 2ⁿ` for a 0-based coordinate index.
    pub fn influence(&self, i: usize) -> Dyadic {
        Dyadic::new(u128::from(self.d[i]), self.n)
    }

    /// `I(f) = D / 2ⁿ`.
    pub fn total(&self) -> Dyadic {
        Dyadic::new(u128::from(self.total_count()), self.n)
    }
}

/// Bits of a word whose in-word index has bit `i` clear, `i < 6`.
const LOW_HALF_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Influence counts by XOR-ing the table with its shift along each `e_i`.
pub fn influence_counts(f: &BooleanFunction) -> InfluenceProfile {
    let words = f.words();
    let d = (0..f.n())
        .map(|i| {
            let half_pairs: u64 = if i < 6 {
                let shift = 1u32 << i;
                let mask = LOW_HALF_MASKS[i as usize];
                words.iter().map(|&w| u64::from(((w ^ (w >> shift)) & mask).count_ones())).sum()
            } else {
                let stride = 1usize << (i - 6);
                (0..words.len())
                    .filter(|j| j & stride == 0)
                    .map(|j| u64::from((words[j] ^ words[j + stride]).count_ones()))
                    .sum()
            };
            2 * half_pairs
        })
        .collect();
    InfluenceProfile { n: f.n(), d }
}

/// `4 Σ_S |S| k_S²`, which equals `D · 2ⁿ` for a Boolean function.
pub fn weighted_spectral_mass(s: &Spectrum) -> u128 {
    4 * s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(mask, &k)| u128::from(mask.count_ones()) * (k.unsigned_abs() as u128).pow(2))
        .sum::<u128>()
}

/// `I(f) = 4 Σ_S |S| f̂²(S) = 4 Σ_S |S| k_S² / 2^{2n}`.
pub fn total_influence_spectral(s: &Spectrum) -> Dyadic {
    Dyadic::new(weighted_spectral_mass(s), 2 * s.n())
}

/// Every statistic the inequalities consume, computed once: `E` by the
/// spectral route, `D` by table shifts, `|supp f̂|` from the transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionStats {
    pub n: u32,
    pub cardinality: u64,
    pub energy: u128,
    pub influence: InfluenceProfile,
    pub spectral_support: u64,
    pub spectrum: Spectrum,
}

impl FunctionStats {
    pub fn of(f: &BooleanFunction) -> Self {
        let spectrum = wht(f);
        Self {
            n: f.n(),
            cardinality: f.cardinality(),
            energy: energy_from_spectrum(&spectrum).value,
            influence: influence_counts(f),
            spectral_support: spectrum.support_size(),
            spectrum,
        }
    }

    /// `D = I(f)·2ⁿ`.
    pub fn influence_count(&self) -> u64 {
        self.influence.total_count()
    }

    pub fn is_constant(&self) -> bool {
        self.influence_count() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, pts: &[usize]) -> PointSet {
        PointSet::new(n, pts.to_vec()).unwrap()
    }

    #[test]
    fn naive_examples() {
        assert_eq!(energy_naive(&set(2, &[])).value, 0);
        assert_eq!(energy_naive(&set(2, &[0, 1, 2, 3])).value, 64);
        assert_eq!(energy_naive(&set(3, &[0, 1, 2, 4])).value, 40);
    }

    #[test]
    fn representation_examples() {
        assert_eq!(energy_representation(&set(3, &[0])).value, 1);
        let a = set(2, &[0, 1, 2]);
        assert_eq!(representation_counts(&a), vec![3, 2, 2, 2]);
        assert_eq!(energy_representation(&a).value, 21);
        assert_eq!(energy_representation(&set(3, &[0, 1, 2, 3])).value, 64);
        // sparse branch
        assert_eq!(energy_representation(&set(8, &[0, 1, 2, 4])).value, 40);
    }

    #[test]
    fn spectral_examples() {
        assert_eq!(energy_spectral(&BooleanFunction::ones(2).unwrap()).value, 64);
        let ball = set(3, &[0, 1, 2, 4]).to_function();
        assert_eq!(wht(&ball).sum_fourth_powers(), 320);
        assert_eq!(energy_spectral(&ball).value, 40);
        for n in 1..=6 {
            let f = BooleanFunction::from_points(n, &[(1 << n) - 1]).unwrap();
            assert_eq!(wht(&f).sum_fourth_powers(), 1 << n);
            assert_eq!(energy_spectral(&f).value, 1);
        }
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn spectral_divisibility_guard() {
        let bogus = Spectrum::from_coeffs(2, vec![1, 0, 0, 0]).unwrap();
        energy_from_spectrum(&bogus);
    }

    #[test]
    fn influence_examples() {
        let one = influence_counts(&BooleanFunction::ones(3).unwrap());
        assert_eq!(one.d, vec![0, 0, 0]);
        assert!(one.total().is_zero());

        for n in 1..=8u32 {
            let dictator = BooleanFunction::from_fn(n, |x| x >> (n - 1) & 1 == 0).unwrap();
            let p = influence_counts(&dictator);
            let mut expected = vec![0; n as usize];
            expected[n as usize - 1] = 1 << n;
            assert_eq!(p.d, expected);
            assert_eq!(p.total(), Dyadic::new(1, 0));
        }

        let ball = influence_counts(&set(3, &[0, 1, 2, 4]).to_function());
        assert_eq!(ball.d, vec![4, 4, 4]);
        assert_eq!(ball.total(), Dyadic::new(3, 1));
        assert_eq!(ball.influence(0), Dyadic::new(1, 1));
    }

    #[test]
    fn spectral_influence_examples() {
        assert!(total_influence_spectral(&wht(&BooleanFunction::ones(2).unwrap())).is_zero());
        let dictator = BooleanFunction::from_points(2, &[0, 1]).unwrap();
        assert_eq!(total_influence_spectral(&wht(&dictator)), Dyadic::new(1, 0));
        let ball = set(3, &[0, 1, 2, 4]).to_function();
        assert_eq!(weighted_spectral_mass(&wht(&ball)), 96);
        assert_eq!(total_influence_spectral(&wht(&ball)), Dyadic::new(3, 1));
    }
}
