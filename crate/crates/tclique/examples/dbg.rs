use tclique::search::*;
use tclique::canon::canonical_graph6;
use tclique::graph::Graph;
use tclique::graph6::parse_graph6;
use tclique::pathcycle::*;
use tclique::spectral::rho_t;
fn main() {
    for (k, t, n) in [(5usize, 3usize, 6usize), (7, 2, 7)] {
        let r = search_max_rho(Family::CGeqK, n, k, t, &GraphSource::Builtin, &SearchOptions::default()).unwrap();
        println!("(k={k},t={t},n={n}): argmax_rho={} graphs={:?} conj={:?} conj_rho={:?} match={}",
            r.argmax_rho, r.argmax_graphs, r.conjectured_extremal, r.conjectured_rho, r.matches_conjecture);
        for g6 in &r.argmax_graphs {
            let g = parse_graph6(g6).unwrap();
            println!("  {} edges={:?} c={}", g6, g.edges(), circumference(&g).unwrap());
        }
    }
    let k4i2 = Graph::complete(4).union_disjoint(&Graph::empty(2));
    println!("K4+I2 canon = {}", canonical_graph6(&k4i2).unwrap());
    println!("rho_3(K4+I2) = {}", rho_t(&k4i2, 3).unwrap().rho);
    // check the T1.9 analogue on paths at (5,4,7) for the counterexample shape
    let bow = parse_graph6("FJaNw").unwrap();
    println!("bowtie p = {}", longest_path_order(&bow).unwrap());
    // verify T1.7 on the other combos
    for (k,t) in [(6usize,4usize),(7,5)] {
        for n in (k-1).max(1)..=7 {
            let r = verify_theorem(TheoremId::T1_7, k, Some(t), n, &SearchOptions::default()).unwrap();
            println!("T1.7 k={k} t={t} n={n}: {:?} violations={}", r.verdict, r.violations.len());
        }
    }
    for (k,t) in [(5usize,4usize),(6,4),(7,5)] {
        for n in (k-1).max(1)..=7 {
            let r = verify_theorem(TheoremId::T1_9, k, Some(t), n, &SearchOptions::default()).unwrap();
            println!("T1.9 k={k} t={t} n={n}: {:?} violations={}", r.verdict, r.violations.len());
        }
    }
}
