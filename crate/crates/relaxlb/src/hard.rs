//! Permutation-indexed hard instance families.
//!
//! For a permutation `pi = x_0, ..., x_{n-1}` with `x_0 = s`, both families
//! hide the shortest-path tree as the Hamiltonian path `x_0 ... x_{n-1}`:
//! consecutive path edges are cheap, all other edges are expensive, and the
//! expensive weights depend only on the *earlier* path position of their
//! endpoints. The assignments are symmetric and strictly positive.
//!
//! `hard_det` uses path-edge weight 2 and off-path weights `L` or `L - 5i/2`;
//! distances come out as `dist[x_j] = 2j`. `hard_rand` (the family sampled in
//! randomized experiments) uses path-edge weight `n` and off-path weights `L`
//! or `L - (n + 1/2)i`, giving `dist[x_j] = j*n` while keeping all tentative
//! distances of unreached vertices within `n/2` of each other.

use crate::weights::{VertexId, WeightAssignment, START};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HardInstanceError {
    #[error("vertex count {0} must be odd")]
    EvenVertexCount(usize),
    #[error("scale L = {found} is too small, need at least {need}")]
    ScaleTooSmall { need: i64, found: i64 },
    #[error("not a valid permutation starting at the start vertex")]
    BadPermutation,
}

fn validate(pi: &[VertexId], big_l: i64, min_l: i64) -> Result<(), HardInstanceError> {
    let n = pi.len();
    if n < 3 || n % 2 == 0 {
        return Err(HardInstanceError::EvenVertexCount(n));
    }
    if big_l < min_l {
        return Err(HardInstanceError::ScaleTooSmall {
            need: min_l,
            found: big_l,
        });
    }
    let mut seen = vec![false; n];
    for &x in pi {
        if x >= n || seen[x] {
            return Err(HardInstanceError::BadPermutation);
        }
        seen[x] = true;
    }
    if pi[0] != START {
        return Err(HardInstanceError::BadPermutation);
    }
    Ok(())
}

fn symmetric_from_positions(
    pi: &[VertexId],
    weight_at: impl Fn(usize, usize) -> i64,
) -> WeightAssignment {
    let n = pi.len();
    // pos[v] = position of v on the hidden path.
    let mut pos = vec![0usize; n];
    for (i, &x) in pi.iter().enumerate() {
        pos[x] = i;
    }
    WeightAssignment::from_fn(n, |u, v| {
        let (i, j) = if pos[u] < pos[v] {
            (pos[u], pos[v])
        } else {
            (pos[v], pos[u])
        };
        weight_at(i, j)
    })
}

/// Default scale for [`hard_det`].
pub fn det_scale(n: usize) -> i64 {
    5 * n as i64
}

/// Default scale for [`hard_rand`].
pub fn rand_scale(n: usize) -> i64 {
    5 * (n as i64) * (n as i64)
}

/// Deterministic hard family. For path positions `i < j`:
/// weight 2 if `j = i+1`; `L - 5i/2` if `j >= i+2` and `i` even; `L`
/// otherwise. Requires odd `n >= 3` and `L >= 5n`.
///
/// Every off-path edge is heavier than `2n` while every distance stays below
/// `2n`, so the shortest-path tree is exactly the hidden Hamiltonian path.
pub fn hard_det(pi: &[VertexId], big_l: i64) -> Result<WeightAssignment, HardInstanceError> {
    validate(pi, big_l, det_scale(pi.len()))?;
    Ok(symmetric_from_positions(pi, |i, j| {
        if j == i + 1 {
            2
        } else if i % 2 == 0 {
            big_l - 5 * (i as i64) / 2
        } else {
            big_l
        }
    }))
}

/// Randomized-distribution hard family. For path positions `i < j`:
/// weight `n` if `j = i+1`; `L - (n + 1/2)i` if `j >= i+2` and `i` even
/// (an integer since `i` is even); `L` otherwise. Requires odd `n >= 3` and
/// `L >= 5n^2`.
pub fn hard_rand(pi: &[VertexId], big_l: i64) -> Result<WeightAssignment, HardInstanceError> {
    let n = pi.len() as i64;
    validate(pi, big_l, rand_scale(pi.len()))?;
    Ok(symmetric_from_positions(pi, |i, j| {
        if j == i + 1 {
            n
        } else if i % 2 == 0 {
            big_l - (2 * n + 1) * (i as i64) / 2
        } else {
            big_l
        }
    }))
}
