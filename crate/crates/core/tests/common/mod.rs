//! Brute-force oracles, written straight from the definitions and sharing
//! no code with the library's fast paths.

#![allow(dead_code)]

use boolspec::{BooleanFunction, SplitMix64};

pub fn character(mask: usize, x: usize) -> i64 {
    if (mask & x).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `k_S = Σ_x f(x) χ_S(x)` by direct `O(4ⁿ)` summation.
pub fn direct_wht(n: u32, f: impl Fn(usize) -> bool) -> Vec<i64> {
    (0..1usize << n).map(|s| (0..1usize << n).filter(|&x| f(x)).map(|x| character(s, x)).sum()).collect()
}

/// `d_i` by visiting every ordered pair `(x, x ⊕ e_i)`.
pub fn direct_influence(n: u32, f: impl Fn(usize) -> bool) -> Vec<u64> {
    (0..n).map(|i| (0..1usize << n).filter(|&x| f(x) != f(x ^ (1 << i))).count() as u64).collect()
}

/// `Σ_x (f(x) − f(x ⊕ e_i))²`, the squared-difference form of influence.
pub fn squared_differences(n: u32, f: impl Fn(usize) -> bool) -> Vec<u64> {
    (0..n)
        .map(|i| {
            (0..1usize << n)
                .map(|x| {
                    let diff = i64::from(f(x)) - i64::from(f(x ^ (1 << i)));
                    (diff * diff) as u64
                })
                .sum()
        })
        .collect()
}

/// `E(A)` by counting all quadruples in `A⁴`.
pub fn quadruple_energy(points: &[usize]) -> u64 {
    let mut count = 0;
    for &a in points {
        for &b in points {
            for &c in points {
                for &d in points {
                    if a ^ b == c ^ d {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Uniform random function drawn bit by bit.
pub fn random_function(n: u32, rng: &mut SplitMix64) -> BooleanFunction {
    BooleanFunction::from_fn(n, |_| rng.next_u64() & 1 == 1).unwrap()
}

/// Random function with density chosen so that `|A|` stays near `target`.
pub fn random_sparse(n: u32, target: usize, rng: &mut SplitMix64) -> BooleanFunction {
    let p = (target as f64 / (1u64 << n) as f64).min(1.0);
    BooleanFunction::from_fn(n, |_| rng.next_f64() < p).unwrap()
}

pub fn all_functions(n: u32) -> impl Iterator<Item = BooleanFunction> {
    (0u64..1 << (1u32 << n)).map(move |t| BooleanFunction::from_fn(n, |x| t >> x & 1 == 1).unwrap())
}
