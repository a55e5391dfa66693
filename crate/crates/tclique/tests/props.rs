//! Property tests for the structural invariants.

mod common;

use proptest::prelude::*;

use tclique::cliques::{count_t_cliques, enumerate_t_cliques, snla_clique_count};
use tclique::graph::Graph;
use tclique::graph6::{parse_graph6, to_graph6};
use tclique::pathcycle::{circumference, longest_path_order};
use tclique::spectral::{rho_t, tensor_apply, EIGEN_TOL};
use tclique::transform::kelmans_shift;

/// A random graph strategy: n vertices, each possible edge independently.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let bits = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), bits))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[idx] {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(12)) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn incidence_sums_to_t_times_count(g in arb_graph(9), t in 1usize..=4) {
        let cs = enumerate_t_cliques(&g, t);
        let total: usize = (0..g.n()).map(|v| cs.incidence(v).len()).sum();
        prop_assert_eq!(total, t * cs.count());
    }

    #[test]
    fn pivot_count_matches_enumeration(g in arb_graph(9), t in 1usize..=5) {
        prop_assert_eq!(count_t_cliques(&g, t), enumerate_t_cliques(&g, t).count() as u64);
    }

    #[test]
    fn adding_an_edge_never_loses_cliques(g in arb_graph(8), t in 2usize..=4) {
        let before = count_t_cliques(&g, t);
        let mut h = g.clone();
        'outer: for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    h.add_edge(u, v);
                    break 'outer;
                }
            }
        }
        prop_assert!(count_t_cliques(&h, t) >= before);
    }

    #[test]
    fn shift_preserves_edge_count(g in arb_graph(8), u in 0usize..8, v in 0usize..8) {
        let (u, v) = (u % g.n(), v % g.n());
        prop_assume!(u != v);
        let shifted = kelmans_shift(&g, u, v).unwrap();
        prop_assert_eq!(shifted.edge_count(), g.edge_count());
        // degree sum preserved too
        let deg_sum: usize = (0..g.n()).map(|w| shifted.degree(w)).sum();
        prop_assert_eq!(deg_sum, 2 * g.edge_count());
    }

    #[test]
    fn deleting_an_edge_never_helps_paths_or_cycles(g in arb_graph(8)) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[0];
        let mut h = g.clone();
        h.remove_edge(u, v);
        prop_assert!(circumference(&h).unwrap() <= circumference(&g).unwrap());
        prop_assert!(longest_path_order(&h).unwrap() <= longest_path_order(&g).unwrap());
    }

    #[test]
    fn path_order_dominates_circumference(g in arb_graph(9)) {
        let c = circumference(&g).unwrap();
        let p = longest_path_order(&g).unwrap();
        if c >= 3 {
            prop_assert!(p >= c);
        }
        prop_assert!(p <= g.n());
        prop_assert!(c == 0 || (3..=g.n()).contains(&c));
    }

    /// Any nonnegative t-norm-1 vector certifies a lower bound on rho.
    #[test]
    fn variational_lower_bound(g in arb_graph(8), t in 2usize..=3, raw in proptest::collection::vec(0.01f64..1.0, 8)) {
        let n = g.n();
        let cs = enumerate_t_cliques(&g, t);
        let mut x: Vec<f64> = raw[..n].to_vec();
        let norm = x.iter().map(|v| v.powi(t as i32)).sum::<f64>().powf(1.0 / t as f64);
        for v in x.iter_mut() { *v /= norm; }
        let applied = tensor_apply(&cs, &x).unwrap();
        // x^T A x^{t-1} = t * sum over cliques of the full product
        let value: f64 = x.iter().zip(&applied).map(|(a, b)| a * b).sum();
        let rho = rho_t(&g, t).unwrap().rho;
        prop_assert!(value <= rho + EIGEN_TOL, "value {} > rho {}", value, rho);
    }

    #[test]
    fn snla_count_closed_form(n in 2u64..=10, l in 1u64..=9, a in 1u64..=9, t in 1u64..=5) {
        prop_assume!(l + a <= n);
        let g = Graph::snla(n as usize, l as usize, a as usize).unwrap();
        prop_assert_eq!(
            count_t_cliques(&g, t as usize),
            snla_clique_count(n, l, a, t)
        );
    }
}

#[test]
fn roundtrip_exhaustive_n_le_5() {
    for n in 0..=5usize {
        let bits = n * n.saturating_sub(1) / 2;
        for code in 0u32..(1 << bits) {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if code >> idx & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g, "roundtrip failed for {s}");
        }
    }
}

#[test]
fn brute_force_clique_agreement() {
    use rand::Rng;
    let mut rng = common::seeded(0xC11C0);
    for _ in 0..60 {
        let n = rng.random_range(3..=9);
        let p = rng.random_range(0.2..0.8);
        let g = common::random_graph(&mut rng, n, p);
        for t in 1..=4 {
            let ours: Vec<Vec<usize>> = enumerate_t_cliques(&g, t)
                .iter()
                .map(|c| c.to_vec())
                .collect();
            assert_eq!(ours, common::brute_force_t_cliques(&g, t));
        }
    }
}
