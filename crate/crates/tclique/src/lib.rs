//! Clique-tensor spectral radius of graphs, and the machinery around it.
//!
//! For a graph `G` and an integer `t >= 2`, the order-`t` clique tensor has
//! entry `1/(t-1)!` on every index tuple that is a permutation of a `t`-clique
//! of `G` and `0` elsewhere. Its spectral radius `rho_t(G)` generalizes the
//! adjacency spectral radius (`t = 2`). This crate computes `rho_t` exactly
//! enough to compare graphs:
//!
//! * [`graph`] — bitset-backed simple graphs, the `S_{n,l,a}` join
//!   constructions, connectivity and diameter;
//! * [`graph6`] — bit-exact graph6 short-form I/O;
//! * [`cliques`] — `t`-clique enumeration (lexicographic) and pivot-based
//!   counting without materializing the list;
//! * [`spectral`] — shifted power iteration per clique component with
//!   Collatz–Wielandt brackets, closed forms for complete graphs, and a
//!   three-orbit reduced solver for `S_{n,a,b}` that runs in `O(t)` per
//!   iteration independent of `n`;
//! * [`transform`] — the shift `G_{u->v}` moving private neighbors of `u`
//!   over to `v`, stabilization to nested neighborhoods along every edge,
//!   universal-vertex sets, and level classification;
//! * [`pathcycle`] — exact circumference and longest-path order by bitmask
//!   DP (capped at [`pathcycle::DP_CAP`] vertices) plus `C_{>=k}`-free /
//!   `P_k`-free predicates with early exit;
//! * [`search`] — exhaustive enumeration of isomorphism classes at small
//!   orders, maximum-`rho_t` searches over forbidden families, verification
//!   suites for the extremal bounds, and crossover scans over the
//!   `S_{n,a,b}` family.
//!
//! All graph values are immutable after construction and all operations are
//! pure, so everything is safe to share across threads.

pub mod bitset;
pub mod canon;
pub mod cliques;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod pathcycle;
pub mod search;
pub mod spectral;
pub mod transform;

pub use error::{Error, Result};
pub use graph::{Diameter, Graph};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

/// Binomial coefficient `C(n, k)`, `0` when `k > n`.
///
/// Computed in `u128` to avoid intermediate overflow; panics if the final
/// value does not fit in `u64` (far beyond anything this crate touches).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// `C(n, k)` as `f64`, for spectral formulas.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
    binomial(n, k) as f64
}
