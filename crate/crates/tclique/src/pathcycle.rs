//! Exact longest cycle and longest path by bitmask DP, plus the
//! forbidden-family predicates.
//!
//! State is `O(2^n * n)` bits, so exact computation is capped at
//! [`DP_CAP`] vertices; exhaustive searches never exceed n = 10, and the
//! recognized constructions have closed forms beyond the cap
//! ([`snla_circumference`], [`snla_path_order`]), cross-validated against
//! the DP below it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for the exact DP (2^n masks).
pub const DP_CAP: usize = 20;

/// Circumference and longest-path order of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathCycleStats {
    /// Length of a longest cycle; 0 for acyclic graphs.
    pub circumference: usize,
    /// Vertices on a longest path; >= 1 whenever the graph has a vertex.
    pub longest_path_order: usize,
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > DP_CAP {
        return Err(Error::DpCap {
            n: g.n(),
            cap: DP_CAP,
        });
    }
    Ok(())
}

/// Longest-path DP: returns the largest vertex count of a simple path, with
/// an optional early exit once `stop_at` is reached.
fn path_dp(g: &Graph, stop_at: Option<usize>) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row_mask64(v) as u32).collect();
    // ends[mask] = endpoints of simple paths covering exactly `mask`
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1usize;
    for mask in 1u32..(1 << n) as u32 {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        best = best.max(size);
        if let Some(k) = stop_at {
            if best >= k {
                return best;
            }
        }
        let mut endpoints = e;
        while endpoints != 0 {
            let v = endpoints.trailing_zeros() as usize;
            endpoints &= endpoints - 1;
            let mut fresh = adj[v] & !mask;
            while fresh != 0 {
                let w = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    best
}

/// Longest-cycle DP: for each anchor (the cycle's minimum vertex), grows
/// paths from the anchor through larger vertices and closes back to it.
fn cycle_dp(g: &Graph, stop_at: Option<usize>) -> usize {
    let n = g.n();
    let mut best = 0usize;
    for anchor in 0..n {
        let m = n - anchor;
        if m < 3 || best == n {
            break;
        }
        // local index i <-> vertex anchor + i
        let adj: Vec<u32> = (0..m)
            .map(|i| (g.row_mask64(anchor + i) >> anchor) as u32 & ((1u32 << m) - 1))
            .collect();
        let mut ends = vec![0u32; 1 << m];
        ends[1] = 1; // the path [anchor]
        for mask in 1u32..(1 << m) as u32 {
            if mask & 1 == 0 {
                continue;
            }
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            let mut endpoints = e;
            while endpoints != 0 {
                let v = endpoints.trailing_zeros() as usize;
                endpoints &= endpoints - 1;
                if v != 0 && size >= 3 && adj[v] & 1 == 1 {
                    best = best.max(size);
                    if let Some(k) = stop_at {
                        if best >= k {
                            return best;
                        }
                    }
                }
                let mut fresh = adj[v] & !mask;
                while fresh != 0 {
                    let w = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    best
}

/// Length of a longest cycle; 0 for forests. Requires `n <= DP_CAP`.
pub fn circumference(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(cycle_dp(g, None))
}

/// Number of vertices on a longest path. Requires `n <= DP_CAP`.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(path_dp(g, None))
}

pub fn path_cycle_stats(g: &Graph) -> Result<PathCycleStats> {
    Ok(PathCycleStats {
        circumference: circumference(g)?,
        longest_path_order: longest_path_order(g)?,
    })
}

/// `C_{>=k}`-free: no cycle of length at least `k`. Aborts the DP as soon as
/// one is found.
pub fn is_c_geq_k_free(g: &Graph, k: usize) -> Result<bool> {
    check_cap(g)?;
    Ok(cycle_dp(g, Some(k)) < k)
}

/// `P_k`-free: no path on `k` vertices. Aborts the DP as soon as one is found.
pub fn is_p_k_free(g: &Graph, k: usize) -> Result<bool> {
    check_cap(g)?;
    if k == 0 {
        return Ok(false); // the empty path is everywhere
    }
    Ok(path_dp(g, Some(k)) < k)
}

/// Closed-form circumference of `S_{n,l,a}`: with `m = n-l-a` independent
/// vertices, a longest cycle threads `min(m, l-1)` of them between the
/// clique vertices, giving `l + a + min(m, l-1)` (Hamiltonian when
/// `m <= l-1`); values below 3 mean the graph is acyclic.
pub fn snla_circumference(n: usize, l: usize, a: usize) -> Result<usize> {
    check_snla(n, l, a)?;
    let m = n - l - a;
    let c = l + a + m.min(l - 1);
    Ok(if c < 3 { 0 } else { c })
}

/// Closed-form longest-path order of `S_{n,l,a}`: a path threads
/// `min(m, l)` independent vertices, giving `l + a + min(m, l)`.
pub fn snla_path_order(n: usize, l: usize, a: usize) -> Result<usize> {
    check_snla(n, l, a)?;
    let m = n - l - a;
    Ok(l + a + m.min(l))
}

fn check_snla(n: usize, l: usize, a: usize) -> Result<()> {
    if l < 1 || a < 1 || l + a > n {
        return Err(Error::domain(format!(
            "S_{{n,l,a}} needs l >= 1, a >= 1, l + a <= n; got n={n}, l={l}, a={a}"
        )));
    }
    Ok(())
}
