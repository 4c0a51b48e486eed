//! Boolean functions on F₂ⁿ, their integer Walsh–Hadamard spectra, and
//! counting convolution.
//!
//! Coordinate `i ∈ [n]` is bit `i − 1` of a point's integer index; a subset
//! `S ⊆ [n]` is encoded as the analogous mask, so `|S| = popcount(S)`.
//! Spectra are stored unnormalized: `k_S = 2ⁿ · f̂(S) = Σ_x f(x)(−1)^{|S∧x|}`.

use std::ops::{Add, Mul, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default largest dimension accepted by constructors.
pub const DEFAULT_MAX_N: u32 = 24;
/// Ceiling for [`set_max_n`]; beyond this the 128-bit identity
/// accumulators are no longer guaranteed exact.
pub const HARD_MAX_N: u32 = 30;

static MAX_N: AtomicU32 = AtomicU32::new(DEFAULT_MAX_N);

/// Current dimension limit.
pub fn max_n() -> u32 {
    MAX_N.load(Ordering::Relaxed)
}

/// Override the dimension limit (clamped to `1..=HARD_MAX_N`).
pub fn set_max_n(n: u32) {
    MAX_N.store(n.clamp(1, HARD_MAX_N), Ordering::Relaxed);
}

pub(crate) fn check_dimension(n: u32) -> Result<()> {
    let max_n = max_n();
    if n == 0 || n > max_n {
        return Err(Error::Dimension { n, max_n });
    }
    Ok(())
}

/// Sorted, duplicate-free set of points of F₂ⁿ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointSet {
    n: u32,
    points: Vec<usize>,
}

impl PointSet {
    /// Builds a set from arbitrary points, sorting and removing duplicates.
    pub fn new(n: u32, mut points: Vec<usize>) -> Result<Self> {
        check_dimension(n)?;
        if let Some(&p) = points.iter().find(|&&p| p >> n != 0) {
            return Err(Error::PointOutOfRange { point: p as u64, n });
        }
        points.sort_unstable();
        points.dedup();
        Ok(Self { n, points })
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.points.binary_search(&x).is_ok()
    }

    pub fn into_points(self) -> Vec<usize> {
        self.points
    }

    pub fn to_function(&self) -> BooleanFunction {
        let mut f = BooleanFunction::zeros_unchecked(self.n);
        for &x in &self.points {
            f.set(x, true);
        }
        f
    }
}

/// Packed truth table of a function `{0,1}ⁿ → {0,1}`; bit `x` is `f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

fn word_count(n: u32) -> usize {
    (1usize << n).div_ceil(64)
}

/// Mask of the valid bits in the single word of a table with `n < 6`.
fn tail_mask(n: u32) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

impl BooleanFunction {
    fn zeros_unchecked(n: u32) -> Self {
        Self { n, words: vec![0; word_count(n)] }
    }

    pub fn zeros(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self::zeros_unchecked(n))
    }

    pub fn ones(n: u32) -> Result<Self> {
        check_dimension(n)?;
        let mut words = vec![u64::MAX; word_count(n)];
        words[0] &= tail_mask(n);
        Ok(Self { n, words })
    }

    /// Indicator of `points`; fails on any point `≥ 2ⁿ`.
    pub fn from_points(n: u32, points: &[usize]) -> Result<Self> {
        check_dimension(n)?;
        let mut f = Self::zeros_unchecked(n);
        for &x in points {
            if x >> n != 0 {
                return Err(Error::PointOutOfRange { point: x as u64, n });
            }
            f.set(x, true);
        }
        Ok(f)
    }

    /// From packed 64-bit words, little-endian bit order. Bits at or above
    /// `2ⁿ` must be clear.
    pub fn from_words(n: u32, words: Vec<u64>) -> Result<Self> {
        check_dimension(n)?;
        if words.len() != word_count(n) {
            return Err(Error::Table(format!("expected {} words, got {}", word_count(n), words.len())));
        }
        if words[0] & !tail_mask(n) != 0 {
            return Err(Error::Table("bits set beyond 2^n".into()));
        }
        Ok(Self { n, words })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_dimension(n)?;
        let mut g = Self::zeros_unchecked(n);
        for x in 0..1usize << n {
            if f(x) {
                g.set(x, true);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Domain size `2ⁿ`.
    pub fn domain_size(&self) -> usize {
        1 << self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, x: usize) -> bool {
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    pub fn set(&mut self, x: usize, value: bool) {
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    pub fn flip(&mut self, x: usize) {
        self.words[x >> 6] ^= 1u64 << (x & 63);
    }

    /// `|A| = |supp f|`.
    pub fn cardinality(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_constant(&self) -> bool {
        let c = self.cardinality();
        c == 0 || c == 1 << self.n
    }

    /// Iterator over the set bits in increasing order.
    pub fn iter_support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `supp f` as an explicit set.
    pub fn support(&self) -> PointSet {
        PointSet { n: self.n, points: self.iter_support().collect() }
    }

    /// Table as `⌈2ⁿ/8⌉` bytes, bit `x` at byte `x/8`, bit `x mod 8`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = (1usize << self.n).div_ceil(8);
        self.words.iter().flat_map(|w| w.to_le_bytes()).take(len).collect()
    }

    pub fn from_bytes(n: u32, bytes: &[u8]) -> Result<Self> {
        check_dimension(n)?;
        let len = (1usize << n).div_ceil(8);
        if bytes.len() != len {
            return Err(Error::Table(format!("expected {len} bytes, got {}", bytes.len())));
        }
        let mut words = vec![0u64; word_count(n)];
        for (i, &b) in bytes.iter().enumerate() {
            words[i / 8] |= u64::from(b) << (8 * (i % 8));
        }
        Self::from_words(n, words)
    }
}

/// Integer Walsh–Hadamard spectrum, `coeffs[S] = k_S = 2ⁿ f̂(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Spectrum {
    n: u32,
    coeffs: Vec<i64>,
}

impl Spectrum {
    pub fn from_coeffs(n: u32, coeffs: Vec<i64>) -> Result<Self> {
        check_dimension(n)?;
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: n, right: coeffs.len().trailing_zeros() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn get(&self, mask: usize) -> i64 {
        self.coeffs[mask]
    }

    /// `|supp f̂|`.
    pub fn support_size(&self) -> u64 {
        self.coeffs.iter().filter(|&&k| k != 0).count() as u64
    }

    /// `Σ_S k_S²`.
    pub fn sum_squares(&self) -> u128 {
        self.coeffs.iter().map(|&k| (k.unsigned_abs() as u128).pow(2)).sum()
    }

    /// `Σ_S k_S⁴`.
    pub fn sum_fourth_powers(&self) -> u128 {
        self.coeffs.iter().map(|&k| (k.unsigned_abs() as u128).pow(4)).sum()
    }
}

/// In-place unnormalized Walsh–Hadamard butterfly over any ring-like scalar.
///
/// Panics if the length is not a power of two.
pub fn fwht_in_place<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = data.len();
    assert!(len.is_power_of_two(), "butterfly length must be a power of two, got {len}");
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// Forward transform, `O(n·2ⁿ)` integer operations.
pub fn wht(f: &BooleanFunction) -> Spectrum {
    let mut coeffs: Vec<i64> = (0..f.domain_size()).map(|x| i64::from(f.get(x))).collect();
    fwht_in_place(&mut coeffs);
    Spectrum { n: f.n, coeffs }
}

/// Inverse transform; rejects spectra that do not come from a 0/1 function.
pub fn inverse_wht(s: &Spectrum) -> Result<BooleanFunction> {
    let mut values = s.coeffs.clone();
    fwht_in_place(&mut values);
    let full = 1i64 << s.n;
    let mut f = BooleanFunction::zeros_unchecked(s.n);
    for (x, &v) in values.iter().enumerate() {
        match v {
            0 => {}
            v if v == full => f.set(x, true),
            _ => return Err(Error::NotBooleanSpectrum),
        }
    }
    Ok(f)
}

/// Masks `S` with `k_S ≠ 0`.
pub fn spectral_support(s: &Spectrum) -> PointSet {
    let points = s.coeffs.iter().enumerate().filter(|(_, &k)| k != 0).map(|(m, _)| m).collect();
    PointSet { n: s.n, points }
}

/// `c(x) = Σ_y f(y) g(x ⊕ y) = 2ⁿ (f∗g)(x)`, by direct double loop over the
/// two supports.
pub fn counting_convolution(f: &BooleanFunction, g: &BooleanFunction) -> Result<Vec<u64>> {
    if f.n != g.n {
        return Err(Error::DimensionMismatch { left: f.n, right: g.n });
    }
    let mut c = vec![0u64; f.domain_size()];
    let g_support: Vec<usize> = g.iter_support().collect();
    for y in f.iter_support() {
        for &z in &g_support {
            c[y ^ z] += 1;
        }
    }
    Ok(c)
}

/// Dense XOR convolution `c(x) = Σ_y a(y) b(x ⊕ y)` of two arrays of equal
/// power-of-two length, by direct `O(4ⁿ)` summation.
pub fn xor_convolve<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Copy + Zero + Mul<Output = T>,
{
    assert_eq!(a.len(), b.len(), "convolution operands differ in length");
    (0..a.len()).map(|x| a.iter().enumerate().fold(T::zero(), |acc, (y, &ay)| acc + ay * b[x ^ y])).collect()
}
