use boolspec::generators::{
    affine_subspace, coordinate_subspace, hamming_ball, is_independent, is_sidon, random_density, sidon_greedy,
};
use boolspec::{energy_naive, energy_representation, FunctionStats, GeneratorKind, GeneratorSpec, SplitMix64};

#[test]
fn coordinate_subspace_closed_forms() {
    for n in 1..=10u32 {
        for k in 0..=n {
            let set = coordinate_subspace(n, k).unwrap();
            assert_eq!(set.len(), 1 << (n - k));
            let stats = FunctionStats::of(&set.to_function());
            assert_eq!(stats.energy, 1u128 << (3 * (n - k)));
            assert_eq!(energy_representation(&set).value, stats.energy);
            assert_eq!(stats.spectral_support, 1 << k);
            assert_eq!(stats.influence_count(), u64::from(k) << (n + 1 - k));
            let nonzero: Vec<i64> = stats.spectrum.coeffs().iter().copied().filter(|&c| c != 0).collect();
            assert!(nonzero.iter().all(|&c| c.unsigned_abs() == 1 << (n - k)));
        }
    }
}

#[test]
fn n3_codim1_from_oracles() {
    let set = coordinate_subspace(3, 1).unwrap();
    assert_eq!(energy_naive(&set).value, 64);
    let stats = FunctionStats::of(&set.to_function());
    assert_eq!((stats.cardinality, stats.spectral_support, stats.influence_count()), (4, 2, 8));
}

fn random_basis(n: u32, dim: u32, rng: &mut SplitMix64) -> Vec<usize> {
    loop {
        let basis: Vec<usize> = (0..dim).map(|_| rng.below(1 << n) as usize).collect();
        if is_independent(&basis) {
            return basis;
        }
    }
}

#[test]
fn affine_subspaces_share_subspace_statistics() {
    let mut rng = SplitMix64::new(12);
    for n in 1..=9u32 {
        for dim in 0..=n {
            let basis = random_basis(n, dim, &mut rng);
            let shift = rng.below(1 << n) as usize;
            let set = affine_subspace(n, &basis, shift).unwrap();
            let k = n - dim;
            assert_eq!(set.len(), 1 << dim);
            let stats = FunctionStats::of(&set.to_function());
            assert_eq!(stats.energy, 1u128 << (3 * dim));
            assert_eq!(stats.spectral_support, 1 << k);
            // Influence depends on the basis, so only the bound D ≤ n·2ⁿ applies
            // unless the subspace is a coordinate one.
            assert!(stats.influence_count() <= u64::from(n) << n);
        }
    }
}

#[test]
fn coordinate_aligned_cosets_keep_influence_closed_form() {
    for n in 2..=8u32 {
        for k in 0..=n {
            let basis: Vec<usize> = (0..n - k).map(|i| 1 << i).collect();
            let shift = ((1usize << n) - 1) & !((1 << (n - k)) - 1);
            let stats = FunctionStats::of(&affine_subspace(n, &basis, shift).unwrap().to_function());
            assert_eq!(stats.influence_count(), u64::from(k) << (n + 1 - k));
        }
    }
}

#[test]
fn sidon_energy_law_up_to_64() {
    for m in 2..=64usize {
        let g = sidon_greedy(14, m, m as u64).unwrap();
        assert!(!g.flagged, "m={m}");
        assert!(is_sidon(&g.set));
        let m = m as u128;
        assert_eq!(energy_representation(&g.set).value, 3 * m * m - 2 * m);
    }
    for m in [2usize, 3, 5, 8] {
        let g = sidon_greedy(6, m, 1).unwrap();
        assert_eq!(energy_naive(&g.set).value, 3 * (m * m) as u128 - 2 * m as u128);
    }
}

#[test]
fn generators_are_deterministic() {
    let specs = [
        GeneratorSpec::new(10, GeneratorKind::RandomDensity { p: 0.3 }, 42),
        GeneratorSpec::new(10, GeneratorKind::SidonGreedy { m: 20 }, 42),
        GeneratorSpec::new(6, GeneratorKind::HammingBall { center: 5, radius: 2 }, 0),
        GeneratorSpec::new(6, GeneratorKind::AffineSubspace { basis: vec![3, 12], shift: 1 }, 0),
        GeneratorSpec::new(6, GeneratorKind::CoordinateSubspace { k: 2 }, 0),
    ];
    for spec in &specs {
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }
    assert_eq!(random_density(4, 0.5, 42).unwrap(), random_density(4, 0.5, 42).unwrap());
    assert_eq!(hamming_ball(3, 0, 1).unwrap().points(), &[0, 1, 2, 4]);
}
