//! Clique-tensor spectral radius.
//!
//! The order-`t` clique tensor of `G` never exists in memory: applying it to
//! a vector is a sum over `K_t(G)` — the `1/(t-1)!` entry weight cancels the
//! `(t-1)!` permutations of each clique — so one application costs
//! `O(t * N_t)`. The spectral radius comes from a normalized power iteration
//! with an identity-diagonal shift (iterate `y = A_t x^{t-1} + x^{[t-1]}`),
//! which makes the map primitive so the iteration cannot cycle; the true
//! `rho` is the shifted limit minus 1. Each iterate yields Collatz–Wielandt
//! bounds `min_i / max_i` of `y_i / x_i^{t-1}` that bracket `rho + 1`, and
//! the iteration stops when the bracket gap closes below [`EIGEN_TOL`].
//!
//! A graph splits into `t`-clique connected components (cliques chained by
//! shared vertices); the tensor is weakly irreducible exactly on such
//! components and the global `rho` is the maximum over them, so the solver
//! iterates per component and embeds the winner's positive Perron vector at
//! the right coordinates, leaving exact zeros elsewhere.

use std::collections::VecDeque;

use serde::Serialize;

use crate::binomial_f64;
use crate::cliques::{enumerate_t_cliques, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Convergence tolerance on the Collatz–Wielandt bracket gap.
pub const EIGEN_TOL: f64 = 1e-10;

/// Iteration budget for the power method and the orbit solver.
pub const MAX_ITER: usize = 200_000;

/// Tolerance for comparing `rho` values of different graphs; ties within
/// this distance are reported as ties, never silently broken.
pub const CMP_TOL: f64 = 1e-8;

/// Converged output of [`rho_t`].
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    /// The `t`-clique spectral radius estimate (bracket midpoint).
    pub rho: f64,
    /// Perron vector: strictly positive with t-norm 1 on the achieving
    /// component, exactly 0 elsewhere.
    pub vector: Vec<f64>,
    /// Collatz–Wielandt lower bound on `rho` at the final iterate.
    pub bracket_lo: f64,
    /// Collatz–Wielandt upper bound on `rho` at the final iterate.
    pub bracket_hi: f64,
    /// Total iterations summed over all components.
    pub iterations: usize,
    /// `max_i |(A_t x^{t-1})_i - rho * x_i^{t-1}|` on the achieving component.
    pub residual: f64,
    /// Index (into [`clique_components`] order) of the component achieving
    /// `rho`; `None` when the graph has no `t`-clique.
    pub component_id: Option<usize>,
}

/// `(A_t x^{t-1})_i = sum over cliques containing i of the product of the
/// other members' entries`. Errors if `x` has the wrong length.
pub fn tensor_apply(cs: &CliqueSet, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != cs.n() {
        return Err(Error::domain(format!(
            "tensor_apply: vector has {} entries, graph has {} vertices",
            x.len(),
            cs.n()
        )));
    }
    let mut y = vec![0.0; cs.n()];
    apply_cliques(cs.iter(), cs.t(), x, &mut y, |v| v);
    Ok(y)
}

/// Accumulates clique products into `y`, mapping tuple entries through `idx`.
fn apply_cliques<'a>(
    cliques: impl Iterator<Item = &'a [usize]>,
    t: usize,
    x: &[f64],
    y: &mut [f64],
    idx: impl Fn(usize) -> usize,
) {
    let mut suffix = vec![1.0; t + 1];
    for c in cliques {
        // suffix[i] = prod of x over c[i..]
        suffix[t] = 1.0;
        for i in (0..t).rev() {
            suffix[i] = suffix[i + 1] * x[idx(c[i])];
        }
        let mut prefix = 1.0;
        for i in 0..t {
            let v = idx(c[i]);
            y[v] += prefix * suffix[i + 1];
            prefix *= x[v];
        }
    }
}

/// `t`-clique connected components: two cliques merge when they share a
/// vertex; a component is the vertex union of one merged class. Vertices in
/// no `t`-clique belong to no component. Components are sorted by minimum
/// vertex. Requires `t >= 2`.
pub fn clique_components(g: &Graph, t: usize) -> Vec<Vec<usize>> {
    assert!(t >= 2, "clique components need t >= 2");
    let cs = enumerate_t_cliques(g, t);
    components_of(&cs)
        .into_iter()
        .map(|c| c.vertices)
        .collect()
}

pub(crate) struct Component {
    pub vertices: Vec<usize>,
    /// Indices into the source `CliqueSet`.
    pub cliques: Vec<usize>,
}

pub(crate) fn components_of(cs: &CliqueSet) -> Vec<Component> {
    let count = cs.count();
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for v in 0..cs.n() {
        let inc = cs.incidence(v);
        for w in inc.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[b] = a;
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..count {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut comps: Vec<Component> = by_root
        .into_values()
        .map(|cliques| {
            let mut vertices: Vec<usize> =
                cliques.iter().flat_map(|&i| cs.clique(i).to_vec()).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Component { vertices, cliques }
        })
        .collect();
    comps.sort_by_key(|c| c.vertices[0]);
    comps
}

/// `rho_t(G)` with the default tolerance and iteration budget.
pub fn rho_t(g: &Graph, t: usize) -> Result<SpectralResult> {
    rho_t_with(g, t, EIGEN_TOL, MAX_ITER)
}

/// `rho_t(G)` with an explicit bracket tolerance and iteration budget.
///
/// Returns `rho = 0` with a zero vector when `K_t(G)` is empty. Otherwise
/// runs the shifted power iteration independently on every `t`-clique
/// component and returns the maximum, with the winning component's Perron
/// vector embedded at its coordinates. Requires `t >= 2`.
pub fn rho_t_with(g: &Graph, t: usize, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    assert!(t >= 2, "rho_t needs t >= 2");
    let cs = enumerate_t_cliques(g, t);
    if cs.is_empty() {
        return Ok(SpectralResult {
            rho: 0.0,
            vector: vec![0.0; g.n()],
            bracket_lo: 0.0,
            bracket_hi: 0.0,
            iterations: 0,
            residual: 0.0,
            component_id: None,
        });
    }
    let comps = components_of(&cs);
    let mut best: Option<(usize, ComponentSolution)> = None;
    let mut total_iterations = 0;
    for (id, comp) in comps.iter().enumerate() {
        let sol = iterate_component(&cs, comp, t, tol, max_iter)?;
        total_iterations += sol.iterations;
        let replace = match &best {
            None => true,
            Some((_, b)) => sol.rho > b.rho,
        };
        if replace {
            best = Some((id, sol));
        }
    }
    let (component_id, sol) = best.expect("at least one component");
    let comp = &comps[component_id];
    let mut vector = vec![0.0; g.n()];
    for (local, &v) in comp.vertices.iter().enumerate() {
        vector[v] = sol.vector[local];
    }
    Ok(SpectralResult {
        rho: sol.rho,
        vector,
        bracket_lo: sol.bracket_lo,
        bracket_hi: sol.bracket_hi,
        iterations: total_iterations,
        residual: sol.residual,
        component_id: Some(component_id),
    })
}

struct ComponentSolution {
    rho: f64,
    vector: Vec<f64>,
    bracket_lo: f64,
    bracket_hi: f64,
    iterations: usize,
    residual: f64,
}

fn iterate_component(
    cs: &CliqueSet,
    comp: &Component,
    t: usize,
    tol: f64,
    max_iter: usize,
) -> Result<ComponentSolution> {
    let m = comp.vertices.len();
    let mut local_of = std::collections::HashMap::with_capacity(m);
    for (i, &v) in comp.vertices.iter().enumerate() {
        local_of.insert(v, i);
    }
    // flatten the component's cliques into local indices
    let mut local_cliques = Vec::with_capacity(comp.cliques.len() * t);
    for &ci in &comp.cliques {
        for &v in cs.clique(ci) {
            local_cliques.push(local_of[&v]);
        }
    }

    let tm1 = (t - 1) as i32;
    let mut x = vec![(1.0 / m as f64).powf(1.0 / t as f64); m];
    let mut applied = vec![0.0; m];
    let mut last_lo = f64::NEG_INFINITY;
    let mut last_hi = f64::INFINITY;
    for iter in 1..=max_iter {
        applied.fill(0.0);
        apply_cliques(local_cliques.chunks_exact(t), t, &x, &mut applied, |v| v);
        // Collatz–Wielandt ratios of the shifted map
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..m {
            let xp = x[i].powi(tm1);
            let ratio = (applied[i] + xp) / xp;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        last_lo = lo;
        last_hi = hi;
        if hi - lo <= tol {
            let rho = (lo + hi) / 2.0 - 1.0;
            let residual = (0..m)
                .map(|i| (applied[i] - rho * x[i].powi(tm1)).abs())
                .fold(0.0, f64::max)
;
            return Ok(ComponentSolution {
                rho,
                vector: x,
                bracket_lo: lo - 1.0,
                bracket_hi: hi - 1.0,
                iterations: iter,
                residual,
            });
        }
        // next iterate: t-norm-normalized (t-1)-th root of the shifted image
        for i in 0..m {
            x[i] = (applied[i] + x[i].powi(tm1)).powf(1.0 / tm1 as f64);
        }
        let norm = x
            .iter()
            .map(|v| v.powi(t as i32))
            .sum::<f64>()
            .powf(1.0 / t as f64);
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        bracket_lo: last_lo - 1.0,
        bracket_hi: last_hi - 1.0,
    })
}

/// Closed form `rho_t(K_n) = (t/n) * C(n,t) = C(n-1, t-1)`, exactly integer.
/// Requires `2 <= t <= n`.
pub fn rho_complete(n: usize, t: usize) -> Result<f64> {
    if t < 2 {
        return Err(Error::domain(format!("rho_complete needs t >= 2, got t={t}")));
    }
    if t > n {
        return Err(Error::domain(format!(
            "rho_complete needs t <= n, got t={t}, n={n}"
        )));
    }
    Ok(binomial_f64(n as u64 - 1, t as u64 - 1))
}

/// Orbit-reduced Perron data for `S_{n,a,b} = K_a v (K_b u I_{n-a-b})`:
/// `x_a`, `x_b`, `x_c` are the (orbit-constant) Perron entries on the join
/// clique, the side clique, and the independent part.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitSolution {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub t: usize,
    pub x_a: f64,
    pub x_b: f64,
    pub x_c: f64,
    pub rho: f64,
}

/// One recorded step of the orbit fixed-point iteration (attached to
/// non-convergence errors).
#[derive(Debug, Clone, Serialize)]
pub struct OrbitIterate {
    pub iteration: usize,
    pub x_a: f64,
    pub x_b: f64,
    pub x_c: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
}

/// `rho_t(S_{n,a,b})` by the three-orbit symmetry reduction, `O(t)` per
/// iteration independent of `n`.
pub fn rho_snab_reduced(n: usize, a: usize, b: usize, t: usize) -> Result<OrbitSolution> {
    rho_snab_reduced_with(n, a, b, t, EIGEN_TOL, MAX_ITER)
}

/// See [`rho_snab_reduced`]. Requires `t >= 2`, `a >= t-1` (so the
/// independent part touches a `t`-clique), `b >= 1`, `n >= a+b`; the
/// boundary `n = a+b` degenerates to `K_{a+b}` and is allowed.
pub fn rho_snab_reduced_with(
    n: usize,
    a: usize,
    b: usize,
    t: usize,
    tol: f64,
    max_iter: usize,
) -> Result<OrbitSolution> {
    if t < 2 {
        return Err(Error::domain(format!("orbit solver needs t >= 2, got t={t}")));
    }
    if a + 1 < t {
        return Err(Error::domain(format!(
            "orbit solver needs a >= t-1 (got a={a}, t={t}); \
             smaller a leaves the independent part outside every t-clique"
        )));
    }
    if b < 1 {
        return Err(Error::domain("orbit solver needs b >= 1".to_string()));
    }
    if n < a + b {
        return Err(Error::domain(format!(
            "orbit solver needs n >= a+b, got n={n}, a={a}, b={b}"
        )));
    }
    let m = (n - a - b) as f64;
    let (au, bu, tu) = (a as u64, b as u64, t as u64);

    // characteristic-equation coefficients, one entry per mixing power of x_b
    let coef_a: Vec<f64> = (0..=(t - 1).min(b) as u64)
        .map(|j| binomial_f64(bu, j) * binomial_f64(au - 1, tu - 1 - j))
        .collect();
    let coef_a_shift = m * binomial_f64(au - 1, tu - 2);
    let coef_b: Vec<f64> = (0..=(t - 1).min(b.saturating_sub(1)) as u64)
        .map(|j| binomial_f64(bu - 1, j) * binomial_f64(au, tu - 1 - j))
        .collect();
    let coef_c = binomial_f64(au, tu - 1);

    let tm1 = (t - 1) as i32;
    let c_active = n > a + b;
    let start = (n as f64).powf(-1.0 / t as f64);
    let (mut xa, mut xb, mut xc) = (start, start, start);
    let mut trace: VecDeque<OrbitIterate> = VecDeque::with_capacity(8);

    for iter in 1..=max_iter {
        let fa: f64 = coef_a
            .iter()
            .enumerate()
            .map(|(j, c)| c * xb.powi(j as i32) * xa.powi(tm1 - j as i32))
            .sum::<f64>()
            + coef_a_shift * xc * xa.powi(tm1 - 1);
        let fb: f64 = coef_b
            .iter()
            .enumerate()
            .map(|(j, c)| c * xb.powi(j as i32) * xa.powi(tm1 - j as i32))
            .sum();
        let fc = coef_c * xa.powi(tm1);

        let ya = fa + xa.powi(tm1);
        let yb = fb + xb.powi(tm1);
        let yc = fc + xc.powi(tm1);
        let mut ratios = vec![ya / xa.powi(tm1), yb / xb.powi(tm1)];
        if c_active {
            ratios.push(yc / xc.powi(tm1));
        }
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);

        if trace.len() == 8 {
            trace.pop_front();
        }
        trace.push_back(OrbitIterate {
            iteration: iter,
            x_a: xa,
            x_b: xb,
            x_c: xc,
            bracket_lo: lo - 1.0,
            bracket_hi: hi - 1.0,
        });

        if hi - lo <= tol {
            let rho = (lo + hi) / 2.0 - 1.0;
            if !c_active {
                // no independent vertices; x_c is defined by its
                // characteristic equation rho x_c^{t-1} = C(a,t-1) x_a^{t-1}
                xc = (coef_c * xa.powi(tm1) / rho).powf(1.0 / tm1 as f64);
            }
            return Ok(OrbitSolution {
                n,
                a,
                b,
                t,
                x_a: xa,
                x_b: xb,
                x_c: xc,
                rho,
            });
        }

        xa = ya.powf(1.0 / tm1 as f64);
        xb = yb.powf(1.0 / tm1 as f64);
        if c_active {
            xc = yc.powf(1.0 / tm1 as f64);
        }
        let norm = (a as f64 * xa.powi(t as i32)
            + b as f64 * xb.powi(t as i32)
            + m * xc.powi(t as i32))
        .powf(1.0 / t as f64);
        xa /= norm;
        xb /= norm;
        if c_active {
            xc /= norm;
        }
    }
    Err(Error::OrbitNonConvergence {
        iterations: max_iter,
        trace: trace.into(),
    })
}
