//! `t`-clique enumeration and counting.
//!
//! [`enumerate_t_cliques`] lists every clique of size exactly `t` as a
//! strictly increasing vertex tuple, in lexicographic order, together with a
//! per-vertex incidence index — the layout [`crate::spectral::tensor_apply`]
//! walks. [`count_t_cliques`] returns the same cardinality without
//! materializing the list, via pivoted Bron–Kerbosch recursion with a size
//! cutoff (each leaf holding `h` forced vertices and `p` pivots accounts for
//! `C(p, t-h)` cliques at once).

use crate::binomial;
use crate::bitset::{self, words_for};
use crate::graph::Graph;

/// The set `K_t(G)` with a per-vertex incidence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    n: usize,
    t: usize,
    /// Flat tuple storage, stride `t`, lexicographically sorted.
    members: Vec<usize>,
    /// `incidence[v]` lists the indices of the cliques containing `v`.
    incidence: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `N_t(G)`: number of cliques in the set.
    pub fn count(&self) -> usize {
        if self.t == 0 {
            0
        } else {
            self.members.len() / self.t
        }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Vertex tuple of clique `i`, strictly increasing.
    pub fn clique(&self, i: usize) -> &[usize] {
        &self.members[i * self.t..(i + 1) * self.t]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.members.chunks_exact(self.t)
    }

    /// Indices of the cliques containing `v`.
    pub fn incidence(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }
}

/// Lists `K_t(G)` completely and duplicate-free; `t = 1` yields the vertices,
/// `t = 2` the edges. Requires `t >= 1`.
pub fn enumerate_t_cliques(g: &Graph, t: usize) -> CliqueSet {
    assert!(t >= 1, "clique size must be at least 1");
    let n = g.n();
    let words = words_for(n).max(1);
    let mut members = Vec::new();
    let mut chosen = Vec::with_capacity(t);
    // cand[d] = vertices above the last chosen one adjacent to all chosen
    let mut cand = vec![vec![0u64; words]; t + 1];
    for v in 0..n {
        bitset::set_bit(&mut cand[0], v);
    }
    extend(g, t, &mut chosen, &mut cand, 0, &mut members);

    let count = members.len() / t;
    let mut incidence = vec![Vec::new(); n];
    for i in 0..count {
        for &v in &members[i * t..(i + 1) * t] {
            incidence[v].push(i);
        }
    }
    CliqueSet {
        n,
        t,
        members,
        incidence,
    }
}

fn extend(
    g: &Graph,
    t: usize,
    chosen: &mut Vec<usize>,
    cand: &mut Vec<Vec<u64>>,
    depth: usize,
    out: &mut Vec<usize>,
) {
    if chosen.len() + bitset::count_ones(&cand[depth]) < t {
        return;
    }
    let verts: Vec<usize> = bitset::ones(&cand[depth]).collect();
    for v in verts {
        chosen.push(v);
        if chosen.len() == t {
            out.extend_from_slice(chosen);
        } else {
            let (head, tail) = cand.split_at_mut(depth + 1);
            bitset::and_into(&mut tail[0], &head[depth], g.row(v));
            bitset::keep_above(&mut tail[0], v);
            extend(g, t, chosen, cand, depth + 1, out);
        }
        chosen.pop();
    }
}

/// `N_t(G)` without materializing the list. Requires `t >= 1`.
pub fn count_t_cliques(g: &Graph, t: usize) -> u64 {
    assert!(t >= 1, "clique size must be at least 1");
    let n = g.n();
    let words = words_for(n).max(1);
    let mut cand = vec![0u64; words];
    for v in 0..n {
        bitset::set_bit(&mut cand, v);
    }
    let mut acc = 0u64;
    pivoter(g, cand, 0, 0, t as u64, &mut acc);
    acc
}

fn pivoter(g: &Graph, cand: Vec<u64>, held: u64, pivots: u64, t: u64, acc: &mut u64) {
    let remaining = bitset::count_ones(&cand) as u64;
    if held > t || held + pivots + remaining < t {
        return;
    }
    if remaining == 0 {
        *acc += binomial(pivots, t - held);
        return;
    }
    // pivot on the candidate with the largest candidate-neighborhood
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    let mut scratch = vec![0u64; cand.len()];
    for v in bitset::ones(&cand) {
        bitset::and_into(&mut scratch, &cand, g.row(v));
        let nb = bitset::count_ones(&scratch);
        if pivot == usize::MAX || nb > best {
            pivot = v;
            best = nb;
        }
    }

    // branch 1: the pivot joins the pivot pool
    bitset::and_into(&mut scratch, &cand, g.row(pivot));
    pivoter(g, scratch.clone(), held, pivots + 1, t, acc);

    // branch 2: each candidate outside the pivot's closed neighborhood is
    // held in turn (the pivot itself is covered by branch 1)
    let mut rest = cand.clone();
    let non_neighbors: Vec<usize> = bitset::ones(&cand)
        .filter(|&v| v != pivot && !bitset::test_bit(g.row(pivot), v))
        .collect();
    for v in non_neighbors {
        bitset::clear_bit(&mut rest, v);
        bitset::and_into(&mut scratch, &rest, g.row(v));
        pivoter(g, scratch.clone(), held + 1, pivots, t, acc);
    }
}

/// Closed-form `N_t(S_{n,l,a}) = C(l+a, t) + (n-l-a) * C(l, t-1)`.
pub fn snla_clique_count(n: u64, l: u64, a: u64, t: u64) -> u64 {
    assert!(l >= 1 && a >= 1 && l + a <= n, "invalid S_{{n,l,a}} parameters");
    assert!(t >= 1);
    binomial(l + a, t) + (n - l - a) * binomial(l, t - 1)
}
