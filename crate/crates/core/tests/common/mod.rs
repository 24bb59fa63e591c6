//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramsey_core::{SimpleGraph, TargetGraph};

/// Target pattern as (order, edge list), built without the library builders.
pub fn pattern(t: TargetGraph) -> (usize, Vec<(usize, usize)>) {
    match t {
        TargetGraph::Path(n) => (n, (1..n).map(|v| (v - 1, v)).collect()),
        TargetGraph::Cycle(n) => {
            let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            e.push((0, n - 1));
            (n, e)
        }
        TargetGraph::Matching(t) => (2 * t, (0..t).map(|i| (2 * i, 2 * i + 1)).collect()),
        TargetGraph::Star(k) => (k + 1, (1..=k).map(|l| (0, l)).collect()),
        TargetGraph::Biclique(a, b) => {
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        TargetGraph::CompleteMultipartite { parts, size } => {
            let n = parts * size;
            let e = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i / size != j / size)
                .collect();
            (n, e)
        }
    }
}

/// Adjacency matrix from an edge list.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Every injective map of pattern vertices into host vertices, tried in order.
pub fn oracle_embedding(adj: &[Vec<bool>], t: TargetGraph) -> Option<Vec<usize>> {
    let (p, edges) = pattern(t);
    if p > adj.len() {
        return None;
    }
    let pat = adjacency(p, &edges);
    let mut map = Vec::with_capacity(p);
    let mut used = vec![false; adj.len()];
    fn go(adj: &[Vec<bool>], pat: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == pat.len() {
            return true;
        }
        for h in 0..adj.len() {
            if used[h] || (0..i).any(|j| pat[i][j] && !adj[h][map[j]]) {
                continue;
            }
            used[h] = true;
            map.push(h);
            if go(adj, pat, map, used) {
                return true;
            }
            map.pop();
            used[h] = false;
        }
        false
    }
    go(adj, &pat, &mut map, &mut used).then_some(map)
}

pub fn oracle_contains(adj: &[Vec<bool>], t: TargetGraph) -> bool {
    oracle_embedding(adj, t).is_some()
}

/// Largest t with tK2 in the graph, by trying every t.
pub fn oracle_matching_number(adj: &[Vec<bool>]) -> usize {
    (1..=adj.len() / 2).take_while(|&t| oracle_contains(adj, TargetGraph::Matching(t))).last().unwrap_or(0)
}

/// `vertices[i]` hosts pattern vertex `i` and every pattern edge is present.
pub fn embedding_is_valid(adj: &[Vec<bool>], t: TargetGraph, vertices: &[usize]) -> bool {
    let (p, edges) = pattern(t);
    let mut seen = vertices.to_vec();
    seen.sort_unstable();
    seen.dedup();
    vertices.len() == p
        && seen.len() == p
        && vertices.iter().all(|&v| v < adj.len())
        && edges.iter().all(|&(a, b)| adj[vertices[a]][vertices[b]])
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph on `n` vertices whose edge `i` (in lexicographic order) is present
/// when bit `i` of `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> (SimpleGraph, Vec<Vec<bool>>) {
    let edges: Vec<_> = all_pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    (SimpleGraph::from_edges(n, &edges).unwrap(), adjacency(n, &edges))
}

/// All graphs on at most 5 vertices, then `count` random ones on 6 to 8
/// vertices with a fixed seed.
pub fn oracle_corpus(count: usize) -> Vec<(SimpleGraph, Vec<Vec<bool>>)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            out.push(graph_from_mask(n, mask));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..count {
        let n = rng.random_range(6..=8);
        let density = rng.random_range(0.2..0.9);
        let mask = (0..n * (n - 1) / 2).fold(0u64, |m, i| if rng.random_bool(density) { m | 1 << i } else { m });
        out.push(graph_from_mask(n, mask));
    }
    out
}

/// Targets that fit on at most 8 vertices.
pub fn small_targets() -> Vec<TargetGraph> {
    let mut t = Vec::new();
    t.extend((2..=8).map(TargetGraph::Path));
    t.extend((3..=8).map(TargetGraph::Cycle));
    t.extend((1..=4).map(TargetGraph::Matching));
    t.extend((1..=7).map(TargetGraph::Star));
    for a in 1..=4 {
        for b in a..=8 - a {
            t.push(TargetGraph::Biclique(a, b));
        }
    }
    for parts in 2..=8 {
        for size in 1..=8 / parts {
            t.push(TargetGraph::CompleteMultipartite { parts, size });
        }
    }
    t
}
