//! Shift monotonicity and stabilization structure.

mod common;

use rand::Rng;

use tclique::canon::enumerate_classes;
use tclique::graph::{Diameter, Graph};
use tclique::pathcycle::{circumference, longest_path_order};
use tclique::spectral::rho_t;
use tclique::transform::{
    is_shift_stable, kelmans_shift, shift_set, stabilize, universal_vertices,
};

#[test]
fn shift_never_decreases_rho_sampled() {
    let mut rng = common::seeded(31337);
    for _ in 0..300 {
        let n = rng.random_range(2..=9);
        let p = rng.random_range(0.2..0.8);
        let g = common::random_graph(&mut rng, n, p);
        let u = rng.random_range(0..n);
        let v = (u + rng.random_range(1..n)) % n;
        let t = rng.random_range(2..=4);
        let shifted = kelmans_shift(&g, u, v).unwrap();
        let before = rho_t(&g, t).unwrap().rho;
        let after = rho_t(&shifted, t).unwrap().rho;
        assert!(
            after >= before - 1e-8,
            "rho dropped: {before} -> {after} (n={n}, t={t}, u={u}, v={v})"
        );
    }
}

#[test]
fn shift_across_edges_never_helps_cycles_or_paths_exhaustive_n6() {
    // every class on up to 6 vertices, every oriented edge
    for n in 2..=6 {
        for g in enumerate_classes(n).unwrap() {
            let c = circumference(&g).unwrap();
            let p = longest_path_order(&g).unwrap();
            for (u, v) in g.edges() {
                for (s, t) in [(u, v), (v, u)] {
                    let shifted = kelmans_shift(&g, s, t).unwrap();
                    assert!(circumference(&shifted).unwrap() <= c);
                    assert!(longest_path_order(&shifted).unwrap() <= p);
                }
            }
        }
    }
}

#[test]
fn stabilized_components_have_universal_vertex_and_small_diameter() {
    let mut rng = common::seeded(555);
    for _ in 0..120 {
        let n = rng.random_range(2..=9);
        let p = rng.random_range(0.15..0.85);
        let g = common::random_graph(&mut rng, n, p);
        let trace = stabilize(&g).unwrap();
        let stable = &trace.final_graph;
        assert!(is_shift_stable(stable));
        assert_eq!(stable.edge_count(), g.edge_count());
        assert_eq!(trace.replay(), *stable);
        for comp in stable.connected_components() {
            let sub = stable.induced(&comp);
            assert!(
                !universal_vertices(&sub).is_empty(),
                "component without universal vertex"
            );
            match sub.diameter() {
                Diameter::Finite(d) => assert!(d <= 2, "diameter {d} > 2"),
                Diameter::Infinite => panic!("component must be connected"),
            }
        }
        // random connected induced subgraphs inherit the property
        for _ in 0..4 {
            let keep: Vec<usize> = (0..stable.n())
                .filter(|_| rng.random_bool(0.6))
                .collect();
            if keep.len() < 2 {
                continue;
            }
            let sub = stable.induced(&keep);
            if !sub.is_connected() {
                continue;
            }
            assert!(!universal_vertices(&sub).is_empty());
            match sub.diameter() {
                Diameter::Finite(d) => assert!(d <= 2),
                Diameter::Infinite => unreachable!(),
            }
        }
    }
}

#[test]
fn stabilize_only_moves_private_neighbors_across_edges() {
    let mut rng = common::seeded(808);
    for _ in 0..50 {
        let n = rng.random_range(3..=8);
        let g = common::random_graph(&mut rng, n, 0.4);
        let trace = stabilize(&g).unwrap();
        // replay, checking each recorded step against the shift definition
        let mut cur = trace.initial.clone();
        for step in &trace.steps {
            assert!(
                cur.has_edge(step.source, step.target),
                "stabilization shifted across a non-edge"
            );
            assert_eq!(
                shift_set(&cur, step.source, step.target).unwrap(),
                step.moved
            );
            assert!(!step.moved.is_empty());
            cur = kelmans_shift(&cur, step.source, step.target).unwrap();
        }
        assert_eq!(cur, trace.final_graph);
    }
}

#[test]
fn shift_trace_serializes_one_step_per_line() {
    let trace = stabilize(&Graph::path_graph(4)).unwrap();
    let lines = trace.steps_json_lines();
    assert_eq!(lines.lines().count(), trace.steps.len());
    for line in lines.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("source").is_some());
        assert!(v.get("target").is_some());
        assert!(v.get("moved").is_some());
    }
}
