//! The neighbor-shift operation and its closure.
//!
//! For vertices `u, v`, the shift set `P_v(u)` holds the neighbors of `u`
//! (other than `v`) that are not neighbors of `v`; the shifted graph
//! `G_{u->v}` rewires those vertices from `u` over to `v`. Shifting across
//! an edge never increases the circumference or the longest-path order, and
//! never decreases `rho_t`, so repeatedly shifting across violating edges
//! drives any graph into the nested-neighborhood condition: along every
//! edge `{u,v}`, `P_u(v)` or `P_v(u)` is empty.

use serde::Serialize;

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `P_v(u)`: neighbors of `u` other than `v` that `v` does not see.
/// Errors when `u == v` or a vertex is out of range.
pub fn shift_set(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    check_pair(g, u, v)?;
    Ok(shift_mask(g, u, v))
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::domain(format!(
            "vertex out of range: u={u}, v={v}, n={}",
            g.n()
        )));
    }
    if u == v {
        return Err(Error::domain(format!("shift needs u != v, got u = v = {u}")));
    }
    Ok(())
}

fn shift_mask(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let (ru, rv) = (g.row(u), g.row(v));
    bitset::ones(ru)
        .filter(|&i| i != v && !bitset::test_bit(rv, i))
        .collect()
}

/// The shifted graph `G_{u->v}`: edges `{u,i}` for `i` in `P_v(u)` are
/// replaced by `{v,i}`. Preserves the edge count. Errors when `u == v`.
pub fn kelmans_shift(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    let moved = shift_mask(g, u, v);
    let mut out = g.clone();
    for &i in &moved {
        out.remove_edge(u, i);
        out.add_edge(v, i);
    }
    Ok(out)
}

/// One recorded shift: `moved` (= `P_target(source)`, nonempty) was rewired
/// from `source` to `target`.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftStep {
    pub source: usize,
    pub target: usize,
    pub moved: Vec<usize>,
}

/// A stabilization run: replaying `steps` from `initial` reproduces `final`.
#[derive(Debug, Clone)]
pub struct ShiftTrace {
    pub initial: Graph,
    pub final_graph: Graph,
    pub steps: Vec<ShiftStep>,
}

impl ShiftTrace {
    /// Applies the recorded steps to `initial` again (test oracle for the
    /// replay invariant).
    pub fn replay(&self) -> Graph {
        let mut g = self.initial.clone();
        for step in &self.steps {
            for &i in &step.moved {
                g.remove_edge(step.source, i);
                g.add_edge(step.target, i);
            }
        }
        g
    }

    /// One JSON object per step, one step per line.
    pub fn steps_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("step serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Shifts across violating edges until every edge `{u,v}` has `P_u(v)` or
/// `P_v(u)` empty.
///
/// Scan order is fixed for reproducibility: edges in lexicographic order,
/// first violating edge shifted toward the endpoint with the larger
/// `(degree, index)` pair, then rescan. That orientation strictly increases
/// the degree-square sum, so at most `n^3` shifts can ever happen; exceeding
/// the budget returns an error carrying the trace so far.
pub fn stabilize(g: &Graph) -> Result<ShiftTrace> {
    let n = g.n();
    let budget = n * n * n;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    'outer: loop {
        for v in 1..n {
            for u in 0..v {
                if !cur.has_edge(u, v) {
                    continue;
                }
                let p_uv = shift_mask(&cur, v, u); // P_u(v): v's private neighbors
                let p_vu = shift_mask(&cur, u, v); // P_v(u): u's private neighbors
                if p_uv.is_empty() || p_vu.is_empty() {
                    continue;
                }
                // shift toward the endpoint maximizing (degree, index)
                let (source, target, moved) =
                    if (cur.degree(v), v) > (cur.degree(u), u) {
                        (u, v, p_vu)
                    } else {
                        (v, u, p_uv)
                    };
                for &i in &moved {
                    cur.remove_edge(source, i);
                    cur.add_edge(target, i);
                }
                steps.push(ShiftStep {
                    source,
                    target,
                    moved,
                });
                if steps.len() > budget {
                    return Err(Error::ShiftBudget {
                        budget,
                        trace: Box::new(ShiftTrace {
                            initial: g.clone(),
                            final_graph: cur,
                            steps,
                        }),
                    });
                }
                continue 'outer;
            }
        }
        return Ok(ShiftTrace {
            initial: g.clone(),
            final_graph: cur,
            steps,
        });
    }
}

/// True when every edge `{u,v}` has `P_u(v)` or `P_v(u)` empty.
pub fn is_shift_stable(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        if !shift_mask(g, v, u).is_empty() && !shift_mask(g, u, v).is_empty() {
            return false;
        }
    }
    true
}

/// `Un(G)`: vertices of degree `n-1`. Always induces a clique.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    (0..n).filter(|&v| g.degree(v) == n - 1).collect()
}

/// Level of a connected component under universal-vertex stripping.
///
/// `Level(1)` components are exactly cliques; `Level(k)` components have all
/// subordinate components of level `< k` with at least one of level `k-1`.
/// `Unclassified` marks a component whose recursion reaches a subgraph with
/// no universal vertex (impossible for shift-stable graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentLevel {
    Level(u32),
    Unclassified,
}

impl serde::Serialize for ComponentLevel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ComponentLevel::Level(k) => s.serialize_u32(*k),
            ComponentLevel::Unclassified => s.serialize_str("unclassified"),
        }
    }
}

/// Classifies every connected component of `g`, in order of minimum vertex.
pub fn level_classify(g: &Graph) -> Vec<(Vec<usize>, ComponentLevel)> {
    g.connected_components()
        .into_iter()
        .map(|comp| {
            let level = classify_component(&g.induced(&comp));
            (comp, level)
        })
        .collect()
}

fn classify_component(g: &Graph) -> ComponentLevel {
    let un = universal_vertices(g);
    if un.len() == g.n() {
        return ComponentLevel::Level(1);
    }
    if un.is_empty() {
        return ComponentLevel::Unclassified;
    }
    let rest: Vec<usize> = (0..g.n()).filter(|v| !un.contains(v)).collect();
    let sub = g.induced(&rest);
    let mut deepest = 0;
    for comp in sub.connected_components() {
        match classify_component(&sub.induced(&comp)) {
            ComponentLevel::Level(k) => deepest = deepest.max(k),
            ComponentLevel::Unclassified => return ComponentLevel::Unclassified,
        }
    }
    ComponentLevel::Level(deepest + 1)
}
