mod common;

use hamlab::coupling::{exact_event_counts, ChainEvent};
use hamlab::oracles::{
    count_loose_hc, find_dir_loose_hc, find_loose_hc, find_rainbow_dir_hc, find_rainbow_hc,
};
use hamlab::structures::{
    gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper, verify_dir_loose_hc,
    verify_loose_hc, verify_rainbow_hc, DirHypergraph, Seed,
};

fn ps(t: u64) -> f64 {
    [0.1, 0.2, 0.3, 0.45, 0.6, 0.8][t as usize % 6]
}

#[test]
fn loose_search_matches_permutation_enumeration() {
    for (n, k, runs) in [(6, 3, 300), (8, 3, 60), (9, 4, 6)] {
        for t in 0..runs {
            let h = gen_hyper(n, k, ps(t), &Seed::new(t).derive("loose")).unwrap();
            let brute = common::loose_cycles(&h);
            let found = find_loose_hc(&h).unwrap();
            assert_eq!(found.is_some(), !brute.is_empty(), "n={n} k={k} seed {t}");
            if let Some(w) = found {
                assert!(verify_loose_hc(&h, &w));
            }
            if n <= 8 {
                assert_eq!(
                    count_loose_hc(&h).unwrap(),
                    brute.len() as u128,
                    "n={n} seed {t}"
                );
            }
        }
    }
}

#[test]
fn directed_search_matches_permutation_enumeration() {
    for (n, k, runs) in [(6, 3, 200), (5, 2, 200), (6, 2, 100), (8, 3, 30)] {
        for t in 0..runs {
            let d = gen_dir_hyper(n, k, ps(t) + 0.15, &Seed::new(t).derive("dir")).unwrap();
            let link = if t % 2 == 0 {
                None
            } else {
                Some((t % n as u64) as u32)
            };
            let found = find_dir_loose_hc(&d, link).unwrap();
            assert_eq!(
                found.is_some(),
                common::has_dir_loose(&d, link),
                "n={n} k={k} seed {t} link {link:?}"
            );
            if let Some(w) = found {
                assert!(verify_dir_loose_hc(&d, &w));
                if let Some(l) = link {
                    assert!(w.is_link(l));
                }
            }
        }
    }
}

#[test]
fn no_out_arcs_means_not_a_link() {
    let full = gen_dir_hyper(6, 3, 1.0, &Seed::new(1)).unwrap();
    let d = DirHypergraph::from_arcs(6, 3, full.arcs().filter(|a| a[0] != 0).map(<[u32]>::to_vec))
        .unwrap();
    assert!(!common::has_dir_loose(&d, Some(0)));
    assert!(find_dir_loose_hc(&d, Some(0)).unwrap().is_none());
    // vertex 0 can still sit inside an arc of some cycle
    assert!(common::has_dir_loose(&d, None));
    assert!(find_dir_loose_hc(&d, None).unwrap().is_some());
}

#[test]
fn rainbow_searches_match_permutation_enumeration() {
    for (n, runs) in [(4, 200), (5, 200), (6, 100), (7, 20)] {
        for t in 0..runs {
            let s = Seed::new(t).derive("rainbow");
            let c = n + (t as usize % 2);
            let g = gen_colored_graph(n, ps(t) + 0.2, c, &s).unwrap();
            let found = find_rainbow_hc(&g).unwrap();
            assert_eq!(
                found.is_some(),
                common::has_rainbow(&g),
                "graph n={n} seed {t}"
            );
            if let Some(w) = found {
                assert!(verify_rainbow_hc(&g, &w));
            }
            let d = gen_colored_digraph(n, ps(t) + 0.2, c, &s).unwrap();
            let found = find_rainbow_dir_hc(&d).unwrap();
            assert_eq!(
                found.is_some(),
                common::has_rainbow_dir(&d),
                "digraph n={n} seed {t}"
            );
            if let Some(w) = found {
                assert!(verify_rainbow_hc(&d, &w));
            }
        }
    }
}

#[test]
fn directed_chain_end_matches_full_enumeration() {
    // all 2^12 digraphs on four vertices, grouped by arc count
    let mut by_weight = vec![0u64; 13];
    for mask in 0u64..1 << 12 {
        if common::digraph_mask_has_hc(4, mask) {
            by_weight[mask.count_ones() as usize] += 1;
        }
    }
    let exact = exact_event_counts(4, 2, 6, ChainEvent::DirHc).unwrap();
    assert_eq!(exact.by_weight, by_weight);
    let total: u64 = by_weight.iter().sum();
    assert_eq!(total, 1194);
    assert!((exact.probability(0.5) - 1194.0 / 4096.0).abs() < 1e-15);

    // Γ_0: the six undirected pairs, each giving both arcs or neither
    let mut start = vec![0u64; 7];
    for pairs in 0u64..1 << 6 {
        let mut mask = 0u64;
        let idx = |u: usize, v: usize| u * 3 + if v > u { v - 1 } else { v };
        let mut j = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                if pairs >> j & 1 == 1 {
                    mask |= 1 << idx(u, v) | 1 << idx(v, u);
                }
                j += 1;
            }
        }
        if common::digraph_mask_has_hc(4, mask) {
            start[pairs.count_ones() as usize] += 1;
        }
    }
    assert_eq!(
        exact_event_counts(4, 2, 0, ChainEvent::DirHc)
            .unwrap()
            .by_weight,
        start
    );
    assert_eq!(start.iter().sum::<u64>(), 10);
}

#[test]
fn complete_triple_system_on_six_vertices() {
    let h = hamlab::structures::Hypergraph::complete(6, 3).unwrap();
    assert_eq!(common::loose_cycles(&h).len(), 120);
    assert_eq!(count_loose_hc(&h).unwrap(), 120);
}
