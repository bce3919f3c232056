//! Simulation and verification framework for *query/relaxation* shortest-path
//! algorithms on complete directed graphs.
//!
//! The computation model maintains a tentative distance `D[v]` per vertex,
//! initialized to `D[s] = 0` and `D[v] = w(s,v)`, and lets an algorithm issue
//! four operations:
//!
//! - relaxation update `D[v] := min(D[v], D[u] + w(u,v))`,
//! - edge query `D[u] + w(u,v) < D[v]?`,
//! - D-comparison query `D[u] < D[v]?`,
//! - weight-comparison query `w(u,v) < w(x,y)?`.
//!
//! The crate provides:
//!
//! - [`weights`]: integer weight assignments, potential functions and the
//!   reweighting `w' = w + c*(phi(v) - phi(u))`;
//! - [`oracle`]: a trusted reference distance solver plus an independent
//!   brute-force path enumerator;
//! - [`hard`]: the permutation-indexed hard instance families whose shortest
//!   path tree is a hidden Hamiltonian path;
//! - [`golomb`]: Golomb rulers (Sidon sets) and the potentials they induce;
//! - [`machine`]: operation semantics, transcripts, the run driver and the
//!   replay verifier;
//! - [`strategies`]: Bellman-Ford, Yen and randomized-Yen universal sequences,
//!   comparison-based Dijkstra, and two adaptive edge-query opponents;
//! - [`adversary`]: the interactive marking adversary that forces cubic
//!   operation counts on edge-query algorithms, with replay-based truthfulness
//!   and distance-invariant checkers;
//! - [`reduction`]: the query-splicing wrapper that removes D- and
//!   weight-queries using a Golomb-ruler potential mask;
//! - [`experiments`]: seeded sampling experiments over the randomized hard
//!   distribution, phase-time statistics and CSV reports;
//! - [`gen`]: seeded generators for random test instances.

pub mod adversary;
pub mod experiments;
pub mod gen;
pub mod golomb;
pub mod hard;
pub mod machine;
pub mod oracle;
pub mod reduction;
pub mod strategies;
pub mod weights;

pub use weights::{DistanceVector, Potential, VertexId, WeightAssignment, START};
