mod common;

use common::*;
use ramsey_core::detect::{
    contains, find_embedding, has_biclique, has_cycle, has_multipartite, has_path, has_star, max_matching,
};
use ramsey_core::{SimpleGraph, TargetGraph};

fn specialized(g: &SimpleGraph, t: TargetGraph) -> bool {
    match t {
        TargetGraph::Path(n) => has_path(g, n),
        TargetGraph::Cycle(n) => has_cycle(g, n),
        TargetGraph::Matching(k) => max_matching(g) >= k,
        TargetGraph::Star(k) => has_star(g, k),
        TargetGraph::Biclique(a, b) => has_biclique(g, a, b),
        TargetGraph::CompleteMultipartite { parts, size } => has_multipartite(g, parts, size),
    }
}

#[test]
fn every_detector_matches_brute_force() {
    let targets = small_targets();
    for (g, adj) in oracle_corpus(200) {
        assert_eq!(max_matching(&g), oracle_matching_number(&adj), "matching number of {:?}", g.edges());
        for &t in &targets {
            let expected = oracle_contains(&adj, t);
            let ctx = || format!("{t} in {} vertices {:?}", g.order(), g.edges());
            assert_eq!(contains(&g, t), expected, "contains: {}", ctx());
            assert_eq!(specialized(&g, t), expected, "detector: {}", ctx());
            match find_embedding(&g, t) {
                Some(e) => {
                    assert!(expected, "spurious embedding: {}", ctx());
                    assert!(embedding_is_valid(&adj, t, &e.vertices), "bad embedding {:?}: {}", e.vertices, ctx());
                }
                None => assert!(!expected, "missed embedding: {}", ctx()),
            }
        }
    }
}

#[test]
fn complete_graph_facts() {
    for n in 1..=20 {
        assert_eq!(max_matching(&SimpleGraph::complete(n)), n / 2);
        if n >= 3 {
            assert!(has_cycle(&SimpleGraph::complete(n), n));
            assert!(!has_cycle(&SimpleGraph::complete(n), n + 1));
        }
    }
}

#[test]
fn one_edge_is_a_two_vertex_path() {
    for mask in 0..1u64 << 10 {
        let (g, _) = graph_from_mask(5, mask);
        assert_eq!(has_path(&g, 2), g.edge_count() > 0);
    }
}

#[test]
fn cycle_length_is_exact() {
    let c6 = SimpleGraph::cycle(6);
    assert!(has_cycle(&c6, 6));
    assert!(!has_cycle(&c6, 3) && !has_cycle(&c6, 4) && !has_cycle(&c6, 5));
    let k4 = SimpleGraph::complete(4);
    assert!(has_cycle(&k4, 3) && has_cycle(&k4, 4));
}

#[test]
fn larger_hosts_against_oracle() {
    // Sparse graphs on 10 to 12 vertices keep brute force affordable.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let targets = [
        TargetGraph::Path(6),
        TargetGraph::Path(9),
        TargetGraph::Cycle(5),
        TargetGraph::Cycle(8),
        TargetGraph::Matching(5),
        TargetGraph::Biclique(2, 3),
    ];
    for _ in 0..40 {
        let n = rng.random_range(10..=12);
        let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.random_bool(0.25)).collect();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        let adj = adjacency(n, &edges);
        for t in targets {
            assert_eq!(contains(&g, t), oracle_contains(&adj, t), "{t} in {edges:?}");
        }
    }
}

/// Clique on `q` vertices joined to an independent set of `n`.
fn complete_split(q: usize, n: usize) -> SimpleGraph {
    SimpleGraph::complete(q).join(&SimpleGraph::empty(n))
}

#[test]
fn complete_split_graphs_follow_counting_bounds() {
    // A path or cycle alternates through the clique to reach independent
    // vertices, so it holds at most q+1 (path) or q (cycle) of them.
    for q in 1..=8 {
        for n in 0..=14 {
            let g = complete_split(q, n);
            let longest_path = q + n.min(q + 1);
            assert!(has_path(&g, longest_path), "q={q} n={n}");
            assert!(!has_path(&g, longest_path + 1), "q={q} n={n}");
            let longest_cycle = if q >= 2 { q + n.min(q) } else { 0 };
            for len in 3..=q + n + 1 {
                assert_eq!(has_cycle(&g, len), len <= longest_cycle, "C{len} q={q} n={n}");
            }
            let nu = if n >= q { q } else { n + (q - n) / 2 };
            assert_eq!(max_matching(&g), nu, "q={q} n={n}");
        }
    }
}

#[test]
fn clique_unions_bound_paths_by_the_largest_part() {
    for a in 1..=20 {
        for b in 1..=a {
            let g = SimpleGraph::complete(a).union(&SimpleGraph::complete(b));
            assert!(has_path(&g, a) && !has_path(&g, a + 1), "K{a} u K{b}");
            assert_eq!(has_cycle(&g, a), a >= 3);
            assert!(!has_cycle(&g, a + 1));
            assert_eq!(max_matching(&g), a / 2 + b / 2);
        }
    }
}

#[test]
fn complete_bipartite_cycles_are_even_and_bounded() {
    for a in 1..=12 {
        for b in a..=14 {
            let g = SimpleGraph::complete_bipartite(a, b);
            for len in 3..=a + b {
                assert_eq!(has_cycle(&g, len), len % 2 == 0 && len <= 2 * a && a >= 2, "C{len} in K{a},{b}");
            }
            let longest_path = 2 * a + usize::from(b > a);
            assert!(has_path(&g, longest_path) && !has_path(&g, longest_path + 1), "K{a},{b}");
        }
    }
}
