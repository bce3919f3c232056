//! Trusted distance oracle plus an independent brute-force cross-check.
//!
//! [`true_distances`] runs a fixed reference relaxation schedule (`n` full
//! rounds over all edges, model initialization `d[s] = 0`, `d[v] = w(s,v)`)
//! and flags a negative cycle if one further round still improves anything.
//! [`enumerate_distances`] minimizes over all simple paths by exhaustive DFS;
//! it shares no code with the sweep and serves as its oracle in tests.

use crate::weights::{checked_len_add, DistanceVector, VertexId, WeightAssignment, START};

/// The instance has a negative cycle and is outside the supported model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("weight assignment has a negative cycle")]
pub struct NegativeCycle;

/// Exact shortest-path distances from the start vertex, or `NegativeCycle`.
pub fn true_distances(l: &WeightAssignment) -> Result<DistanceVector, NegativeCycle> {
    let n = l.n();
    let mut dist = vec![0i64; n];
    for v in 1..n {
        dist[v] = l.weight(START, v);
    }
    for round in 0..=n {
        let mut improved = false;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let cand = checked_len_add(dist[u], l.weight(u, v));
                if cand < dist[v] {
                    dist[v] = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
        if round == n {
            // n rounds settle every simple path; one more improvement means
            // lengths decrease along a cycle.
            return Err(NegativeCycle);
        }
    }
    Ok(DistanceVector { dist })
}

/// Invokes `visit` on every simple path starting at `from` (including the
/// trivial single-vertex path) in the complete `n`-vertex digraph.
///
/// Exhaustive: intended for small `n`.
pub fn for_each_simple_path(n: usize, from: VertexId, visit: &mut impl FnMut(&[VertexId])) {
    let mut stack = vec![from];
    let mut used = vec![false; n];
    used[from] = true;
    fn rec(
        n: usize,
        stack: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        visit: &mut impl FnMut(&[VertexId]),
    ) {
        visit(stack);
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                stack.push(v);
                rec(n, stack, used, visit);
                stack.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut stack, &mut used, visit);
}

/// Distances by exhaustive minimization over all simple paths from the start
/// vertex. With no negative cycles this equals [`true_distances`]; the two
/// take entirely independent routes.
pub fn enumerate_distances(l: &WeightAssignment) -> DistanceVector {
    let n = l.n();
    assert!(n <= 9, "exhaustive path enumeration is for small instances");
    let mut dist = vec![i64::MAX; n];
    for_each_simple_path(n, START, &mut |path: &[VertexId]| {
        let v = *path.last().unwrap();
        let len = l.path_len(path);
        if len < dist[v] {
            dist[v] = len;
        }
    });
    DistanceVector { dist }
}
