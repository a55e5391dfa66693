//! Enumeration, canonical forms, searches, and verification suites.

mod common;

use rand::Rng;

use tclique::canon::{are_isomorphic, canonical_graph6, enumerate_classes};
use tclique::graph::Graph;
use tclique::graph6::to_graph6;
use tclique::pathcycle::path_cycle_stats;
use tclique::search::{
    crossover_scan, search_max_rho, verify_theorem, Family, GraphSource, SearchOptions,
    TheoremId, Verdict,
};
use tclique::spectral::{rho_complete, rho_t, CMP_TOL};
use tclique::transform::stabilize;

#[test]
fn canonical_matches_bruteforce_exhaustively_to_n6() {
    for n in 1..=6 {
        for g in enumerate_classes(n).unwrap() {
            assert_eq!(
                canonical_graph6(&g).unwrap(),
                common::canonical_bruteforce(&g),
                "disagreement at n={n}"
            );
        }
    }
}

#[test]
fn canonical_matches_bruteforce_random_n7() {
    let mut rng = common::seeded(70707);
    for _ in 0..40 {
        let p = rng.random_range(0.2..0.8);
        let g = common::random_graph(&mut rng, 7, p);
        assert_eq!(canonical_graph6(&g).unwrap(), common::canonical_bruteforce(&g));
    }
}

#[test]
fn canonical_invariant_under_relabeling() {
    let mut rng = common::seeded(1212);
    for _ in 0..60 {
        let n = rng.random_range(2..=8);
        let g = common::random_graph(&mut rng, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let h = g.relabel(&perm);
        assert_eq!(canonical_graph6(&g).unwrap(), canonical_graph6(&h).unwrap());
        assert!(are_isomorphic(&g, &h).unwrap());
    }
}

#[test]
fn builtin_enumeration_matches_class_counts() {
    for n in 1..=7 {
        assert_eq!(
            enumerate_classes(n).unwrap().len(),
            common::CLASS_COUNTS[n],
            "n = {n}"
        );
    }
}

#[test]
fn search_reports_are_deterministic_across_jobs() {
    let mut opts = SearchOptions::default();
    let a = search_max_rho(Family::CGeqK, 6, 5, 3, &GraphSource::Builtin, &opts).unwrap();
    opts.jobs = 3;
    let b = search_max_rho(Family::CGeqK, 6, 5, 3, &GraphSource::Builtin, &opts).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn search_c5_t3_n6_boundary_beats_the_complete_graph() {
    // t = 3 = floor((k+1)/2) sits at the boundary where the complete-graph
    // bound stops applying: the exhaustive argmax is K_1 v (K_3 u K_2)
    // ("EJbw"), whose orbit system rho = 12/(rho-1)^2 + 1/rho^2 puts rho_3
    // at about 3.0277, strictly above rho_3(K_4) = 3.
    let mut opts = SearchOptions::default();
    opts.collect_survivors = true;
    let report = search_max_rho(Family::CGeqK, 6, 5, 3, &GraphSource::Builtin, &opts).unwrap();
    assert!(report.assertion_failures.is_empty());
    assert!(report.argmax_rho > 3.0 + 1e-6);
    assert!((report.argmax_rho - 3.027_695_544_156).abs() < 1e-9);
    assert_eq!(report.argmax_graphs, vec!["EJbw".to_string()]);
    // K_4 u I_2 is still a survivor sitting exactly at rho_3(K_4) = 3
    let k4_plus = Graph::complete(4).union_disjoint(&Graph::empty(2));
    let c6 = canonical_graph6(&k4_plus).unwrap();
    let survivors = report.survivor_list.as_ref().unwrap();
    let entry = survivors.iter().find(|e| e.graph6 == c6).expect("K_4 u I_2 survives");
    assert!((entry.rho - 3.0).abs() <= 1e-9);
}

#[test]
fn search_c5_t4_boundary_case() {
    // t = 4 > floor((k+1)/2) = 3: bound rho_4(K_4) = 1
    let report = search_max_rho(
        Family::CGeqK,
        6,
        5,
        4,
        &GraphSource::Builtin,
        &SearchOptions::default(),
    )
    .unwrap();
    assert!((report.argmax_rho - 1.0).abs() <= 1e-9);
    assert!(report.matches_conjecture);
}

#[test]
fn search_p5_t2_edge_bound_holds() {
    // P_5-free on 6 vertices: e <= (k-2)n/2 = 9 asserted internally
    let report = search_max_rho(
        Family::PK,
        6,
        5,
        2,
        &GraphSource::Builtin,
        &SearchOptions::default(),
    )
    .unwrap();
    assert!(report.assertion_failures.is_empty());
    assert!(report.survivors > 0);
}

#[test]
fn search_c7_t2_n7_reports_argmax_without_asserting() {
    // at this small order the complete graph beats S_{7,3}; the report
    // records the facts and the conjecture mismatch
    let report = search_max_rho(
        Family::CGeqK,
        7,
        7,
        2,
        &GraphSource::Builtin,
        &SearchOptions::default(),
    )
    .unwrap();
    assert!(report.assertion_failures.is_empty());
    let k6_plus = Graph::complete(6).union_disjoint(&Graph::empty(1));
    let s73 = Graph::snla(7, 3, 1).unwrap();
    let rho_k6 = rho_t(&k6_plus, 2).unwrap().rho;
    let rho_s73 = rho_t(&s73, 2).unwrap().rho;
    assert!((report.argmax_rho - rho_k6.max(rho_s73)).abs() <= 1e-8);
    let winner = canonical_graph6(if rho_k6 > rho_s73 { &k6_plus } else { &s73 }).unwrap();
    assert!(report.argmax_graphs.contains(&winner));
}

#[test]
fn search_catalog_source_roundtrip() {
    // stream the builtin classes through a catalog file and get the same report
    let classes = enumerate_classes(5).unwrap();
    let mut text = String::new();
    for g in &classes {
        text.push_str(&to_graph6(g).unwrap());
        text.push('\n');
    }
    let dir = std::env::temp_dir().join(format!("tclique-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n5.g6");
    std::fs::write(&path, text).unwrap();

    let from_builtin =
        search_max_rho(Family::CGeqK, 5, 4, 2, &GraphSource::Builtin, &SearchOptions::default())
            .unwrap();
    let from_catalog = search_max_rho(
        Family::CGeqK,
        5,
        4,
        2,
        &GraphSource::Catalog(path.clone()),
        &SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(
        serde_json::to_string(&from_builtin).unwrap(),
        serde_json::to_string(&from_catalog).unwrap()
    );
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_t17_small_case_passes() {
    let report = verify_theorem(
        TheoremId::T1_7,
        5,
        Some(4),
        7,
        &SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Holds);
    assert!(report.side_condition_failures.is_empty());
    assert_eq!(report.bound, rho_complete(4, 4).unwrap());
    assert_eq!(report.candidates_seen, common::CLASS_COUNTS[7] as u64);
}

#[test]
fn verify_edge_bounds_exhaustively() {
    for n in 1..=7 {
        let r = verify_theorem(TheoremId::T1_1, 4, None, n, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "T1.1 n={n}");
    }
    for n in 1..=7 {
        let r = verify_theorem(TheoremId::T1_2, 4, None, n, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "T1.2 n={n}");
    }
}

#[test]
fn verify_luo_theorem_t13() {
    let r = verify_theorem(TheoremId::T1_3, 6, Some(3), 7, &SearchOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    // even branch: both candidate graphs coincide at S_{7,2,2}
    assert_eq!(r.bound, 7.0);
    let r5 = verify_theorem(TheoremId::T1_5, 6, Some(3), 7, &SearchOptions::default()).unwrap();
    assert_eq!(r5.verdict, Verdict::Holds);
}

#[test]
fn verify_t18_small_n_is_three_valued() {
    // k=7, t=2, n=7: the complete graph K_6 u I_1 beats S_{7,3} at this
    // order, which the theorem only forbids for large n
    let r = verify_theorem(TheoremId::T1_8, 7, Some(2), 7, &SearchOptions::default()).unwrap();
    assert!(
        matches!(r.verdict, Verdict::FailsBelowThreshold | Verdict::Holds),
        "unexpected verdict {:?}",
        r.verdict
    );
    if r.verdict == Verdict::FailsBelowThreshold {
        assert!(r.crossover_n.is_some());
        assert!(r.crossover_n.unwrap() > 7);
    }
}

#[test]
fn scan_finds_crossover_for_k5_t2() {
    let ns: Vec<usize> = (5..=120).collect();
    let scan = crossover_scan(Family::CGeqK, 5, 2, &ns, &SearchOptions::default()).unwrap();
    let crossover = scan.crossover_n.expect("crossover exists");
    assert!(crossover <= 52, "crossover {crossover} exceeds 52");
    // sanity: rho_2(S_{n,2}) beats rho_2(K_4) = 3 well before the threshold
    for row in scan.rows.iter().filter(|r| r.n >= 52) {
        assert!(row.dominates, "dominance lost at n = {}", row.n);
        assert!(row.rho_s > row.rho_k + CMP_TOL);
    }
}

#[test]
fn scan_rejects_large_t() {
    let ns = vec![10, 20];
    assert!(crossover_scan(Family::CGeqK, 5, 4, &ns, &SearchOptions::default()).is_err());
}

#[test]
fn kelmans_closure_of_argmax_graphs_is_consistent() {
    // stabilizing an argmax graph must not increase the family parameter
    // and must not lose rho beyond tolerance
    for (family, k, t) in [(Family::CGeqK, 5, 2), (Family::CGeqK, 6, 3), (Family::PK, 5, 2)] {
        let report = search_max_rho(family, 6, k, t, &GraphSource::Builtin, &SearchOptions::default())
            .unwrap();
        for g6 in &report.argmax_graphs {
            let g = tclique::graph6::parse_graph6(g6).unwrap();
            let trace = stabilize(&g).unwrap();
            let before = path_cycle_stats(&g).unwrap();
            let after = path_cycle_stats(&trace.final_graph).unwrap();
            match family {
                Family::CGeqK => assert!(after.circumference <= before.circumference),
                Family::PK => assert!(after.longest_path_order <= before.longest_path_order),
            }
            let rho_before = rho_t(&g, t).unwrap().rho;
            let rho_after = rho_t(&trace.final_graph, t).unwrap().rho;
            assert!(rho_after >= rho_before - CMP_TOL);
        }
    }
}

#[test]
fn survivor_list_collection() {
    let mut opts = SearchOptions::default();
    opts.collect_survivors = true;
    let report =
        search_max_rho(Family::CGeqK, 5, 4, 2, &GraphSource::Builtin, &opts).unwrap();
    let list = report.survivor_list.as_ref().unwrap();
    assert_eq!(list.len() as u64, report.survivors);
    // every survivor rho is dominated by the argmax
    for entry in list {
        assert!(entry.rho <= report.argmax_rho + CMP_TOL);
    }
}
