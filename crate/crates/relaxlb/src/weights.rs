//! Weight assignments on complete directed graphs, potential functions, and
//! distance vectors.
//!
//! All weights are integers. A potential `phi` (with `phi[s] = 0`) induces the
//! assignment `dphi(u,v) = phi[v] - phi[u]`, which is path independent: every
//! path from `u` to `v` has length exactly `phi[v] - phi[u]`. Combining
//! `w' = w + c*dphi` therefore shifts the length of every `u -> v` path by the
//! same amount `c*(phi[v] - phi[u])`, preserving shortest-path structure.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

/// Vertex index in `[0, n)`. Vertex `0` is always the start vertex.
pub type VertexId = usize;

/// The designated start vertex.
pub const START: VertexId = 0;

/// Largest admissible absolute edge weight. All arithmetic on path lengths is
/// checked, so weights up to this bound can never silently wrap.
pub const WEIGHT_LIMIT: i64 = 1 << 62;

/// Adds two path-length values, panicking on (astronomically out-of-scope)
/// i64 overflow rather than wrapping.
#[inline]
pub(crate) fn checked_len_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("path length overflows i64")
}

#[derive(Debug, thiserror::Error)]
pub enum WeightError {
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("combined weight {0} exceeds the admissible range")]
    Overflow(i128),
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("invalid instance file: {0}")]
    Invalid(String),
}

/// Dense integer edge-weight function on a complete directed `n`-vertex
/// graph. Diagonal entries are stored as `0` and never read.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    n: usize,
    weights: Vec<i64>,
    max_abs: i64,
}

impl WeightAssignment {
    /// Builds an assignment from a weight function over ordered pairs.
    /// The function is never consulted for `u == v`.
    ///
    /// Panics if a produced weight exceeds [`WEIGHT_LIMIT`] in absolute value.
    pub fn from_fn(n: usize, mut f: impl FnMut(VertexId, VertexId) -> i64) -> Self {
        assert!(n >= 1, "need at least one vertex");
        let mut weights = vec![0i64; n * n];
        let mut max_abs = 0i64;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let w = f(u, v);
                assert!(
                    w.abs() <= WEIGHT_LIMIT,
                    "edge weight {w} out of admissible range"
                );
                max_abs = max_abs.max(w.abs());
                weights[u * n + v] = w;
            }
        }
        WeightAssignment { n, weights, max_abs }
    }

    /// All-zero assignment.
    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of the edge `(u, v)`, `u != v`.
    #[inline]
    pub fn weight(&self, u: VertexId, v: VertexId) -> i64 {
        debug_assert!(u != v, "self-loop weight is never read");
        self.weights[u * self.n + v]
    }

    /// Maximum absolute edge weight of this assignment.
    pub fn max_abs(&self) -> i64 {
        self.max_abs
    }

    /// Iterates over all ordered pairs `(u, v)` with `u != v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
    }

    /// Length of a path given as a vertex sequence, under this assignment.
    pub fn path_len(&self, path: &[VertexId]) -> i64 {
        path.windows(2)
            .fold(0i64, |acc, e| checked_len_add(acc, self.weight(e[0], e[1])))
    }

    /// Reweights this assignment by `c` copies of the potential-induced
    /// assignment: `w'(u,v) = w(u,v) + c*(phi[v] - phi[u])`.
    ///
    /// Every `u -> v` path length shifts by exactly `c*(phi[v] - phi[u])`, so
    /// the result has a negative cycle iff `self` has one.
    pub fn combine(&self, phi: &Potential, c: i64) -> Result<WeightAssignment, WeightError> {
        if phi.n() != self.n {
            return Err(WeightError::SizeMismatch(self.n, phi.n()));
        }
        let n = self.n;
        let mut weights = vec![0i64; n * n];
        let mut max_abs = 0i64;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let masked = self.weight(u, v) as i128
                    + c as i128 * (phi.value(v) as i128 - phi.value(u) as i128);
                if masked.unsigned_abs() > WEIGHT_LIMIT as u128 {
                    return Err(WeightError::Overflow(masked));
                }
                let w = masked as i64;
                max_abs = max_abs.max(w.abs());
                weights[u * n + v] = w;
            }
        }
        Ok(WeightAssignment { n, weights, max_abs })
    }

    /// Serializes to the instance file format: a single JSON document
    /// `{version: 1, n, s: 0, weights: [..]}` with row-major weights.
    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<(), InstanceFileError> {
        let doc = InstanceDoc {
            version: 1,
            n: self.n,
            s: START,
            weights: self.weights.clone(),
        };
        fs::write(path, serde_json::to_string(&doc)?)?;
        Ok(())
    }

    /// Reads and validates an instance file written by [`Self::write_file`].
    pub fn read_file(path: impl AsRef<Path>) -> Result<WeightAssignment, InstanceFileError> {
        let doc: InstanceDoc = serde_json::from_str(&fs::read_to_string(path)?)?;
        if doc.version != 1 {
            return Err(InstanceFileError::Invalid(format!(
                "unsupported version {}",
                doc.version
            )));
        }
        if doc.s != START {
            return Err(InstanceFileError::Invalid(format!(
                "start vertex must be {START}, got {}",
                doc.s
            )));
        }
        if doc.n == 0 || doc.weights.len() != doc.n * doc.n {
            return Err(InstanceFileError::Invalid(format!(
                "expected {} weights for n = {}, got {}",
                doc.n * doc.n,
                doc.n,
                doc.weights.len()
            )));
        }
        let mut max_abs = 0i64;
        for u in 0..doc.n {
            for v in 0..doc.n {
                let w = doc.weights[u * doc.n + v];
                if u == v {
                    if w != 0 {
                        return Err(InstanceFileError::Invalid(format!(
                            "diagonal entry ({u},{u}) must be 0, got {w}"
                        )));
                    }
                } else {
                    if w.abs() > WEIGHT_LIMIT {
                        return Err(InstanceFileError::Invalid(format!(
                            "weight ({u},{v}) = {w} out of range"
                        )));
                    }
                    max_abs = max_abs.max(w.abs());
                }
            }
        }
        Ok(WeightAssignment {
            n: doc.n,
            weights: doc.weights,
            max_abs,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    version: u32,
    n: usize,
    s: VertexId,
    weights: Vec<i64>,
}

/// Integer vertex labels with `phi[s] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    phi: Vec<i64>,
}

impl Potential {
    /// Panics if the label of the start vertex is nonzero.
    pub fn new(phi: Vec<i64>) -> Self {
        assert!(!phi.is_empty());
        assert_eq!(phi[START], 0, "potential must vanish at the start vertex");
        Potential { phi }
    }

    pub fn zero(n: usize) -> Self {
        Potential { phi: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    #[inline]
    pub fn value(&self, v: VertexId) -> i64 {
        self.phi[v]
    }

    pub fn values(&self) -> &[i64] {
        &self.phi
    }

    /// The induced assignment `dphi(u,v) = phi[v] - phi[u]`.
    ///
    /// Path independent: every `u -> v` path has length `phi[v] - phi[u]`,
    /// and every cycle has length `0` (the sum telescopes).
    pub fn delta(&self) -> WeightAssignment {
        WeightAssignment::from_fn(self.n(), |u, v| {
            self.value(v)
                .checked_sub(self.value(u))
                .expect("potential difference overflows i64")
        })
    }
}

/// Exact distances from the start vertex. `dist[s] = 0`; each entry is the
/// length of some simple path from `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub dist: Vec<i64>,
}

impl DistanceVector {
    pub fn n(&self) -> usize {
        self.dist.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::for_each_simple_path;
    use proptest::prelude::*;

    #[test]
    fn identity_potential_induces_zero_assignment() {
        let phi = Potential::new(vec![0, 0, 0]);
        assert_eq!(phi.delta(), WeightAssignment::zero(3));
    }

    #[test]
    fn delta_values_and_path_independence() {
        let phi = Potential::new(vec![0, 7, 13]);
        let d = phi.delta();
        assert_eq!(d.weight(0, 1), 7);
        assert_eq!(d.weight(1, 2), 6);
        assert_eq!(d.weight(2, 0), -13);
        // Every 0 -> 2 path has length phi[2] - phi[0] = 13.
        let mut seen = 0;
        for_each_simple_path(3, 0, &mut |path: &[VertexId]| {
            if *path.last().unwrap() == 2 {
                seen += 1;
                assert_eq!(d.path_len(path), 13);
            }
        });
        assert_eq!(seen, 2); // 0-2 and 0-1-2
    }

    #[test]
    fn combine_with_zero_mask_is_identity() {
        let l = WeightAssignment::from_fn(3, |u, v| (u * 3 + v) as i64);
        let phi = Potential::new(vec![0, 7, 13]);
        assert_eq!(l.combine(&phi, 0).unwrap(), l);
    }

    #[test]
    fn combine_all_ones_with_small_mask() {
        let l = WeightAssignment::from_fn(3, |_, _| 1);
        let phi = Potential::new(vec![0, 7, 13]);
        let m = l.combine(&phi, 7).unwrap();
        assert_eq!(m.weight(0, 1), 50);
        assert_eq!(m.weight(1, 2), 43);
        assert_eq!(m.weight(0, 2), 92);
        assert_eq!(m.weight(1, 0), -48);
        assert_eq!(m.weight(2, 1), -41);
        assert_eq!(m.weight(2, 0), -90);
        // Cross-check against the induced assignment directly.
        let d = phi.delta();
        for (u, v) in l.edges() {
            assert_eq!(m.weight(u, v), l.weight(u, v) + 7 * d.weight(u, v));
        }
    }

    #[test]
    fn combine_rejects_mismatched_sizes() {
        let l = WeightAssignment::zero(3);
        let phi = Potential::new(vec![0, 1, 2, 3]);
        assert!(matches!(
            l.combine(&phi, 1),
            Err(WeightError::SizeMismatch(3, 4))
        ));
    }

    #[test]
    fn instance_file_round_trip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("inst.json");
        let l = WeightAssignment::from_fn(4, |u, v| u as i64 * 5 - v as i64);
        l.write_file(&path).unwrap();
        assert_eq!(WeightAssignment::read_file(&path).unwrap(), l);

        // Nonzero diagonal is rejected.
        let bad = serde_json::json!({
            "version": 1, "n": 2, "s": 0, "weights": [1, 0, 0, 0]
        });
        std::fs::write(&path, bad.to_string()).unwrap();
        assert!(matches!(
            WeightAssignment::read_file(&path),
            Err(InstanceFileError::Invalid(_))
        ));
    }

    fn arb_potential(n: usize) -> impl Strategy<Value = Potential> {
        proptest::collection::vec(-1000i64..1000, n - 1)
            .prop_map(|mut tail| {
                let mut phi = vec![0i64];
                phi.append(&mut tail);
                Potential::new(phi)
            })
    }

    proptest! {
        // Cycle lengths under a potential-induced assignment telescope to 0.
        #[test]
        fn induced_cycles_have_zero_length(
            phi in arb_potential(6),
            cycle in proptest::collection::vec(0usize..6, 2..8),
        ) {
            let d = phi.delta();
            let mut walk: Vec<usize> = Vec::new();
            for &v in &cycle {
                if walk.last() != Some(&v) {
                    walk.push(v);
                }
            }
            if walk.len() >= 2 && walk.first() != walk.last() {
                let first = walk[0];
                walk.push(first);
                prop_assert_eq!(d.path_len(&walk), 0);
            }
        }

        // Reweighting shifts every path length by c*(phi[end] - phi[start]).
        #[test]
        fn combine_preserves_path_length_offsets(
            phi in arb_potential(6),
            weights in proptest::collection::vec(-50i64..50, 36),
            c in -100i64..100,
            path in proptest::collection::vec(0usize..6, 2..7),
        ) {
            let l = WeightAssignment::from_fn(6, |u, v| weights[u * 6 + v]);
            let m = l.combine(&phi, c).unwrap();
            let mut simple: Vec<usize> = Vec::new();
            for &v in &path {
                if !simple.contains(&v) {
                    simple.push(v);
                }
            }
            if simple.len() >= 2 {
                let (a, b) = (simple[0], *simple.last().unwrap());
                prop_assert_eq!(
                    m.path_len(&simple) - l.path_len(&simple),
                    c * (phi.value(b) - phi.value(a))
                );
            }
        }
    }
}
