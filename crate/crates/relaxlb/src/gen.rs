//! Seeded generators for random test instances.
//!
//! All generators take an explicit RNG so callers stay reproducible. The
//! fixed crate-wide RNG is ChaCha8 seeded from a 64-bit value; per-sample
//! generators are derived with [`derive_seed`].

use rand::Rng;

use crate::weights::{Potential, VertexId, WeightAssignment};

/// SplitMix64-style mix of a master seed and a stream index. Used to hand
/// each sample of an experiment its own independent generator.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform weights in `[-wmax, wmax]`; no structure, may contain negative
/// cycles. Suitable for checks that only compare path lengths.
pub fn random_assignment(n: usize, wmax: i64, rng: &mut impl Rng) -> WeightAssignment {
    WeightAssignment::from_fn(n, |_, _| rng.gen_range(-wmax..=wmax))
}

/// Uniform non-negative weights in `[0, wmax]`.
pub fn random_non_negative(n: usize, wmax: i64, rng: &mut impl Rng) -> WeightAssignment {
    WeightAssignment::from_fn(n, |_, _| rng.gen_range(0..=wmax))
}

/// Random assignment with negative weights but no negative cycle, obtained as
/// a non-negative base reweighted by a small random potential (cycle sums are
/// unchanged by the potential, hence stay non-negative). Weights land in
/// `[-6, 10]`.
pub fn random_no_negative_cycle(n: usize, rng: &mut impl Rng) -> WeightAssignment {
    let base = random_non_negative(n, 4, rng);
    let mut phi = vec![0i64; n];
    for p in phi.iter_mut().skip(1) {
        *p = rng.gen_range(-3..=3);
    }
    base.combine(&Potential::new(phi), 1)
        .expect("small weights cannot overflow")
}

/// A potential with uniform labels in `[-span, span]` and `phi[s] = 0`.
pub fn random_potential(n: usize, span: i64, rng: &mut impl Rng) -> Potential {
    let mut phi = vec![0i64; n];
    for p in phi.iter_mut().skip(1) {
        *p = rng.gen_range(-span..=span);
    }
    Potential::new(phi)
}

/// Uniform permutation of `0..n` that keeps the start vertex first
/// (Fisher-Yates over the tail).
pub fn sample_permutation(n: usize, rng: &mut impl Rng) -> Vec<VertexId> {
    assert!(n >= 1);
    let mut pi: Vec<VertexId> = (0..n).collect();
    for i in (2..n).rev() {
        let j = rng.gen_range(1..=i);
        pi.swap(i, j);
    }
    pi
}
