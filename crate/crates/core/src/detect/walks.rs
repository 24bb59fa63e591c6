//! Exact path and cycle containment by depth-first extension.
//!
//! Two prunings keep this fast on block-structured graphs:
//! - a branch dies when fewer unvisited vertices are reachable from the
//!   current endpoint than the pattern still needs;
//! - among unvisited candidates that are twins of each other only one is
//!   tried, since swapping twins is an automorphism fixing the partial walk.

use crate::graph::{bit, members, SimpleGraph, VertexSet};

/// Vertices in components with at least `n` vertices.
fn big_components(g: &SimpleGraph, alive: VertexSet, n: usize) -> VertexSet {
    g.components_within(alive)
        .into_iter()
        .filter(|c| c.count_ones() as usize >= n)
        .fold(0, |acc, c| acc | c)
}

/// A path on `n` vertices, as its vertex sequence.
pub fn find_path(g: &SimpleGraph, n: usize) -> Option<Vec<usize>> {
    if n == 0 || n > g.order() {
        return None;
    }
    let twins = g.twin_classes();
    let eligible = big_components(g, g.vertices(), n);
    let mut tried: VertexSet = 0;
    for s in members(eligible) {
        if tried & bit(twins[s]) != 0 {
            continue;
        }
        tried |= bit(twins[s]);
        let mut path = vec![s];
        if extend_path(g, Some(&twins), eligible, n, &mut path, bit(s)) {
            return Some(path);
        }
    }
    None
}

fn extend_path(
    g: &SimpleGraph,
    twins: Option<&[usize]>,
    allowed: VertexSet,
    n: usize,
    path: &mut Vec<usize>,
    visited: VertexSet,
) -> bool {
    if path.len() >= n {
        return true;
    }
    let last = *path.last().expect("path is never empty");
    let free = allowed & !visited;
    let need = n - path.len();
    let reach = g.reach(last, free) & !bit(last);
    if (reach.count_ones() as usize) < need {
        return false;
    }
    let mut tried: VertexSet = 0;
    for w in members(g.neighbors(last) & free) {
        if let Some(tw) = twins {
            if tried & bit(tw[w]) != 0 {
                continue;
            }
            tried |= bit(tw[w]);
        }
        path.push(w);
        if extend_path(g, twins, allowed, n, path, visited | bit(w)) {
            return true;
        }
        path.pop();
    }
    false
}

/// A cycle on exactly `n` vertices, as its vertex sequence.
pub fn find_cycle(g: &SimpleGraph, n: usize) -> Option<Vec<usize>> {
    if n < 3 || n > g.order() {
        return None;
    }
    let twins = g.twin_classes();
    let mut alive = g.vertices();
    for s in 0..g.order() {
        alive = prune_for_cycles(g, alive, n);
        if alive & bit(s) == 0 {
            continue;
        }
        let mut path = vec![s];
        if extend_cycle(g, &twins, alive, n, &mut path, bit(s)) {
            return Some(path);
        }
        // No cycle through s, hence none through any twin of s.
        for w in members(alive) {
            if twins[w] == twins[s] {
                alive &= !bit(w);
            }
        }
    }
    None
}

fn prune_for_cycles(g: &SimpleGraph, mut alive: VertexSet, n: usize) -> VertexSet {
    loop {
        let mut next = alive;
        for v in members(alive) {
            if (g.neighbors(v) & alive).count_ones() < 2 {
                next &= !bit(v);
            }
        }
        next = big_components(g, next, n);
        if next == alive {
            return alive;
        }
        alive = next;
    }
}

fn extend_cycle(
    g: &SimpleGraph,
    twins: &[usize],
    alive: VertexSet,
    n: usize,
    path: &mut Vec<usize>,
    visited: VertexSet,
) -> bool {
    let start = path[0];
    let last = *path.last().expect("path is never empty");
    if path.len() == n {
        return g.has_edge(last, start);
    }
    let free = alive & !visited;
    let need = n - path.len();
    let reach = g.reach(last, free) & !bit(last);
    if (reach.count_ones() as usize) < need || reach & g.neighbors(start) == 0 {
        return false;
    }
    let mut cand = g.neighbors(last) & free;
    if need == 1 {
        cand &= g.neighbors(start);
    }
    let mut tried: VertexSet = 0;
    for w in members(cand) {
        if tried & bit(twins[w]) != 0 {
            continue;
        }
        tried |= bit(twins[w]);
        path.push(w);
        if extend_cycle(g, twins, alive, n, path, visited | bit(w)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Whether some path on `n` vertices uses the edge `uv` (which must be in `g`).
pub(crate) fn path_through_edge(g: &SimpleGraph, n: usize, u: usize, v: usize) -> bool {
    if n < 2 || n > g.order() {
        return false;
    }
    let all = g.vertices();
    // Grow the arm hanging off u; for each arm ask for the rest hanging off v.
    fn grow(g: &SimpleGraph, n: usize, v: usize, arm: &mut Vec<usize>, visited: VertexSet, all: VertexSet) -> bool {
        let rest = n - arm.len();
        let mut right = vec![v];
        if extend_path(g, None, all, rest, &mut right, visited) {
            return true;
        }
        if rest <= 1 {
            return false;
        }
        let last = *arm.last().unwrap();
        for w in members(g.neighbors(last) & !visited) {
            arm.push(w);
            if grow(g, n, v, arm, visited | bit(w), all) {
                return true;
            }
            arm.pop();
        }
        false
    }
    let mut arm = vec![u];
    grow(g, n, v, &mut arm, bit(u) | bit(v), all)
}

/// Whether some cycle on `n` vertices uses the edge `uv` (which must be in `g`).
pub(crate) fn cycle_through_edge(g: &SimpleGraph, n: usize, u: usize, v: usize) -> bool {
    if n < 3 || n > g.order() {
        return false;
    }
    // A u..v path on n vertices that avoids the direct edge.
    fn walk(g: &SimpleGraph, n: usize, target: usize, last: usize, len: usize, visited: VertexSet) -> bool {
        if len == n - 1 {
            return g.has_edge(last, target);
        }
        let free = g.vertices() & !visited & !bit(target);
        for w in members(g.neighbors(last) & free) {
            if walk(g, n, target, w, len + 1, visited | bit(w)) {
                return true;
            }
        }
        false
    }
    walk(g, n, v, u, 1, bit(u))
}
