//! Shared test oracles, deliberately independent of the library's
//! implementation paths: dense-matrix power iteration for the adjacency
//! spectral radius, subset scans for cliques, DFS for paths and cycles, and
//! full permutation scans for canonical forms.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tclique::graph::Graph;
use tclique::graph6::to_graph6;

/// Isomorphism-class counts on 0..=8 vertices.
pub const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Adjacency spectral radius via dense power iteration on `A + I` with a
/// Rayleigh-quotient readout; the shift keeps bipartite graphs from cycling.
pub fn adjacency_rho_oracle(g: &Graph) -> f64 {
    let n = g.n();
    if n == 0 || g.edge_count() == 0 {
        return 0.0;
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let matvec = |x: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| x[i] + (0..n).map(|j| a[i][j] * x[j]).sum::<f64>())
            .collect()
    };
    let mut x = vec![(n as f64).sqrt().recip(); n];
    let mut rayleigh = 1.0;
    for _ in 0..200_000 {
        let y = matvec(&x);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let y: Vec<f64> = y.iter().map(|v| v / norm).collect();
        let by = matvec(&y);
        rayleigh = y.iter().zip(&by).map(|(u, v)| u * v).sum::<f64>();
        let residual = (0..n)
            .map(|i| (by[i] - rayleigh * y[i]).abs())
            .fold(0.0, f64::max);
        x = y;
        if residual < 1e-13 {
            break;
        }
    }
    rayleigh - 1.0
}

/// Every t-subset of vertices that is pairwise adjacent, in lex order.
pub fn brute_force_t_cliques(g: &Graph, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    subsets(g, t, 0, &mut current, &mut out);
    out
}

fn subsets(g: &Graph, t: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == t {
        out.push(current.clone());
        return;
    }
    for v in from..g.n() {
        if current.iter().all(|&u| g.has_edge(u, v)) {
            current.push(v);
            subsets(g, t, v + 1, current, out);
            current.pop();
        }
    }
}

/// Longest-path order by exhaustive DFS over simple paths.
pub fn longest_path_dfs(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        path_dfs(g, start, 1, &mut visited, &mut best);
        visited[start] = false;
    }
    best
}

fn path_dfs(g: &Graph, v: usize, len: usize, visited: &mut [bool], best: &mut usize) {
    *best = (*best).max(len);
    for w in g.neighbors(v) {
        if !visited[w] {
            visited[w] = true;
            path_dfs(g, w, len + 1, visited, best);
            visited[w] = false;
        }
    }
}

/// Circumference by exhaustive DFS anchored at each cycle's minimum vertex.
pub fn longest_cycle_dfs(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    let mut visited = vec![false; n];
    for anchor in 0..n {
        visited[anchor] = true;
        cycle_dfs(g, anchor, anchor, 1, &mut visited, &mut best);
        visited[anchor] = false;
    }
    best
}

fn cycle_dfs(
    g: &Graph,
    anchor: usize,
    v: usize,
    len: usize,
    visited: &mut [bool],
    best: &mut usize,
) {
    for w in g.neighbors(v) {
        if w == anchor && len >= 3 {
            *best = (*best).max(len);
        }
        if w > anchor && !visited[w] {
            visited[w] = true;
            cycle_dfs(g, anchor, w, len + 1, visited, best);
            visited[w] = false;
        }
    }
}

/// Lexicographically minimal graph6 string over all vertex permutations,
/// by brute force (n <= 8 or so).
pub fn canonical_bruteforce(g: &Graph) -> String {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<String> = None;
    permute(&mut perm, 0, &mut |p| {
        let s = to_graph6(&g.relabel(p)).unwrap();
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    });
    best.unwrap_or_else(|| to_graph6(g).unwrap())
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
