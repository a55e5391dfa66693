//! Canonical forms and exhaustive enumeration of isomorphism classes.
//!
//! The canonical form of a graph is the lexicographically minimal graph6
//! string over all vertex orderings. It is found by depth-first search over
//! orderings, growing the upper-triangle bit string one column at a time and
//! pruning any ordering whose next column exceeds the best known prefix.
//! Rigid graphs prune almost everything; highly symmetric graphs degrade
//! toward n! leaves, so the operation is capped at [`CANON_CAP`] vertices —
//! more than enough for the exhaustive searches, which stop at [`ENUM_CAP`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest order accepted by [`canonical_form`] / [`canonical_graph6`].
pub const CANON_CAP: usize = 10;

/// Largest order accepted by [`enumerate_classes`].
pub const ENUM_CAP: usize = 8;

/// The canonical relabeling of `g` (lex-min graph6 representative).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::domain(format!(
            "canonical form supported for n <= {CANON_CAP}, got n = {n}"
        )));
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let order = Lexmin::new(g).run();
    // order[i] = original vertex placed at position i
    let mut perm = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    Ok(g.relabel(&perm))
}

/// The canonical graph6 string of `g`.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(to_graph6(&canonical_form(g)?).expect("canonical cap is below the graph6 limit"))
}

/// Isomorphism test by canonical-form equality; both graphs must be within
/// [`CANON_CAP`].
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Lex-min search state. `best[c]` is column `c` of the smallest bit string
/// found so far, valid for `c < valid`; columns are compared as integers with
/// the first-placed vertex in the most significant bit, matching graph6
/// column-major bit order.
struct Lexmin {
    n: usize,
    adj: Vec<u64>,
    best: Vec<u64>,
    valid: usize,
    sel: Vec<usize>,
    used: u64,
    best_order: Vec<usize>,
}

impl Lexmin {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        Lexmin {
            n,
            adj: (0..n).map(|v| g.row_mask64(v)).collect(),
            best: vec![u64::MAX; n - 1],
            valid: 0,
            sel: Vec::with_capacity(n),
            used: 0,
            best_order: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.dfs();
        self.best_order
    }

    fn dfs(&mut self) {
        let depth = self.sel.len();
        if depth == self.n {
            // any leaf reached is tight against the current best
            self.best_order = self.sel.clone();
            return;
        }
        if depth == 0 {
            for v in 0..self.n {
                self.push(v);
                self.dfs();
                self.pop(v);
            }
            return;
        }
        let col_idx = depth - 1;
        // candidate columns, ascending; ties broken by vertex index
        let mut cands: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| self.used & (1 << v) == 0)
            .map(|v| (self.column(v), v))
            .collect();
        cands.sort_unstable();
        for (col, v) in cands {
            if col_idx < self.valid {
                if col > self.best[col_idx] {
                    break; // everything after is larger too
                }
                if col < self.best[col_idx] {
                    self.best[col_idx] = col;
                    self.valid = col_idx + 1;
                }
            } else {
                self.best[col_idx] = col;
                self.valid = col_idx + 1;
            }
            self.push(v);
            self.dfs();
            self.pop(v);
        }
    }

    fn column(&self, v: usize) -> u64 {
        let mut col = 0u64;
        for &s in &self.sel {
            col = (col << 1) | ((self.adj[v] >> s) & 1);
        }
        col
    }

    fn push(&mut self, v: usize) {
        self.sel.push(v);
        self.used |= 1 << v;
    }

    fn pop(&mut self, v: usize) {
        self.sel.pop();
        self.used &= !(1 << v);
    }
}

/// One representative per isomorphism class on `n` vertices — the canonical
/// (lex-min graph6) representative of every class, sorted by graph6 string.
/// Equivalent to deduplicating all `2^C(n,2)` labeled graphs by canonical
/// form; built incrementally by extending the classes on `n-1` vertices with
/// every possible new-vertex neighborhood. Requires `n <= ENUM_CAP`.
pub fn enumerate_classes(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_CAP {
        return Err(Error::EnumCap { n, cap: ENUM_CAP });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut reps = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: HashSet<String> = HashSet::new();
        for r in &reps {
            for nb in 0u64..(1 << (m - 1)) {
                let mut g = Graph::empty(m);
                for (u, v) in r.edges() {
                    g.add_edge(u, v);
                }
                for v in 0..m - 1 {
                    if nb >> v & 1 == 1 {
                        g.add_edge(v, m - 1);
                    }
                }
                seen.insert(canonical_graph6(&g)?);
            }
        }
        let mut sorted: Vec<String> = seen.into_iter().collect();
        sorted.sort_unstable();
        reps = sorted
            .iter()
            .map(|s| crate::graph6::parse_graph6(s).expect("canonical strings parse"))
            .collect();
    }
    Ok(reps)
}
