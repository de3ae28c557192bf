//! Output-sensitive subset sum.
//!
//! Computes the set of subset sums `S(X, t)` of a multiset of
//! `d`-dimensional items inside the box `[0..t]^d`, with running time that
//! scales with the size of the output rather than with `t`. The pieces:
//!
//! - [`baseline`]: preprocessing, Bellman's DP and exhaustive oracles.
//! - [`sumset`]: exact sumsets with a dense and an output-sensitive engine.
//! - [`prefix`]: sumsets capped to `[0..t]` in a prefix of the coordinates.
//! - [`color`]: large-item combination via a Reed-Solomon hash family, and
//!   random partitions for small items.
//! - [`solver`]: the randomized divide-and-conquer solver.
//! - [`unbounded`]: the deterministic solver for unbounded multiplicities.
//! - [`harness`]: instance files, generators, verification and benchmarks.

pub mod baseline;
pub mod color;
pub mod counters;
pub mod error;
pub mod harness;
mod ntt;
pub mod prefix;
pub mod primes;
pub mod solver;
pub mod sumset;
pub mod types;
pub mod unbounded;

pub use baseline::{bellman, naive_oracle, preprocess_items, unbounded_oracle};
pub use counters::{CounterSnapshot, WorkCounters};
pub use error::{Error, Result};
pub use prefix::{prefix_restricted_sumset, PrefixConfig};
pub use solver::{decide, fast_subset_sum, solve, SolverConfig};
pub use sumset::{sumset, Engine, SumsetEngineConfig};
pub use types::{ItemMultiset, PointSet, TargetBox};
pub use unbounded::fast_unbounded;
