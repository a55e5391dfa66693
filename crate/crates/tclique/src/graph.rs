//! Undirected simple graphs on dense 0-based vertex labels.
//!
//! Adjacency is stored as one bitset row per vertex (multi-word for n > 64).
//! Graphs are immutable after construction in all public pipelines; the
//! mutating edge methods exist for builders and tests. Invariants kept by
//! construction: no loops, symmetric rows, `degree(v) = popcount(row(v))`.

use crate::bitset::{self, words_for};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n.max(1) * words],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices (0-1-2-...-n-1).
    pub fn path_graph(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `C_n`; requires `n >= 3`.
    pub fn cycle_graph(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path_graph(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency row of `v` as a word slice.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row of `v` as a single word; panics if `n > 64`.
    pub fn row_mask64(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "row_mask64 requires n <= 64");
        self.bits[v * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && bitset::test_bit(self.row(u), v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n, "vertex out of range");
        let w = self.words;
        bitset::set_bit(&mut self.bits[u * w..(u + 1) * w], v);
        bitset::set_bit(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::clear_bit(&mut self.bits[u * w..(u + 1) * w], v);
        bitset::clear_bit(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count_ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, in column-major graph6 order
    /// (sorted by `v`, then `u`) — the crate's normative edge ordering.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The join-construction graph `S_{n,l,a} = K_l v (K_a u I_{n-l-a})`:
    /// vertices `0..l` are universal, `l..l+a` form a clique joined to them,
    /// and the remaining `n-l-a` vertices see exactly `0..l`.
    ///
    /// Requires `l >= 1`, `a >= 1`, `l + a <= n`. The boundary `a = n - l`
    /// is allowed and yields `K_n`.
    pub fn snla(n: usize, l: usize, a: usize) -> Result<Graph> {
        if l < 1 || a < 1 || l + a > n {
            return Err(Error::domain(format!(
                "S_{{n,l,a}} needs l >= 1, a >= 1, l + a <= n; got n={n}, l={l}, a={a}"
            )));
        }
        let mut g = Graph::empty(n);
        for u in 0..l {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        for u in l..l + a {
            for v in u + 1..l + a {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Join `G v H`: disjoint union plus all cross edges. `H`'s vertices are
    /// relabeled to `g.n..g.n+h.n`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union_disjoint(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union `G u H` with `H`'s vertices relabeled to `g.n..`.
    pub fn union_disjoint(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Subgraph induced by `verts`; vertex `verts[i]` becomes `i`.
    /// `verts` must be duplicate-free.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let dist = self.bfs(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| dist[v] != usize::MAX).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// A graph on 0 or 1 vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// 2-connected: connected, `n >= 3`, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        // Cut vertex check by vertex deletion; n stays small wherever this
        // predicate is used (enumeration caps at 8).
        for v in 0..self.n {
            let rest: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
            if !self.induced(&rest).is_connected() {
                return false;
            }
        }
        true
    }

    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        let mut best = 0usize;
        for v in 0..self.n {
            for d in self.bfs(v) {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }
}

/// Diameter of a graph; disconnected graphs report [`Diameter::Infinite`]
/// rather than an error so search code can filter on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl serde::Serialize for Diameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}
