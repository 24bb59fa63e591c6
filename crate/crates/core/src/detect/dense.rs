//! Complete bipartite and complete multipartite containment by subset
//! enumeration over common neighborhoods.

use crate::graph::{above, bit, members, SimpleGraph, VertexSet};

/// `K_{a,b}` as (side of size `a`, side of size `b`).
pub fn find_biclique(g: &SimpleGraph, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let (p, q) = if a <= b { (a, b) } else { (b, a) };
    if p == 0 || p + q > g.order() {
        return None;
    }
    let cand = (0..g.order())
        .filter(|&v| g.degree(v) >= q)
        .fold(0, |acc, v| acc | bit(v));
    let mut small = Vec::with_capacity(p);
    let common = choose_side(g, cand, p, q, g.vertices(), &mut small)?;
    let large: Vec<usize> = members(common).take(q).collect();
    Some(if a <= b { (small, large) } else { (large, small) })
}

/// Pick `p` vertices from `cand` whose common neighborhood keeps at least
/// `q` vertices; returns that neighborhood.
fn choose_side(
    g: &SimpleGraph,
    cand: VertexSet,
    p: usize,
    q: usize,
    common: VertexSet,
    chosen: &mut Vec<usize>,
) -> Option<VertexSet> {
    if chosen.len() == p {
        return Some(common);
    }
    let still = p - chosen.len();
    for v in members(cand) {
        let rest = cand & above(v);
        if (rest.count_ones() as usize) + 1 < still {
            break;
        }
        let next = common & g.neighbors(v);
        if (next.count_ones() as usize) < q {
            continue;
        }
        chosen.push(v);
        if let Some(found) = choose_side(g, rest, p, q, next, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Complete `parts`-partite subgraph with parts of size `size`, as the list
/// of parts.
pub fn find_multipartite(g: &SimpleGraph, parts: usize, size: usize) -> Option<Vec<Vec<usize>>> {
    if parts == 0 || size == 0 || parts * size > g.order() {
        return None;
    }
    let mut chosen = Vec::with_capacity(parts);
    next_part(g, g.vertices(), parts, size, &mut chosen).then_some(chosen)
}

// Parts are produced with increasing smallest members, so every later part
// lives entirely above the first vertex of the current one.
fn next_part(
    g: &SimpleGraph,
    cand: VertexSet,
    parts: usize,
    size: usize,
    chosen: &mut Vec<Vec<usize>>,
) -> bool {
    let left = parts - chosen.len();
    if left == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < left * size {
        return false;
    }
    for first in members(cand) {
        let upper = cand & above(first);
        let mut part = vec![first];
        if fill_part(g, upper, parts, size, g.neighbors(first) & upper, &mut part, chosen) {
            return true;
        }
    }
    false
}

fn fill_part(
    g: &SimpleGraph,
    pool: VertexSet,
    parts: usize,
    size: usize,
    common: VertexSet,
    part: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
) -> bool {
    let later = (parts - chosen.len() - 1) * size;
    if (common.count_ones() as usize) < later {
        return false;
    }
    if part.len() == size {
        chosen.push(part.clone());
        if next_part(g, common, parts, size, chosen) {
            return true;
        }
        chosen.pop();
        return false;
    }
    let last = *part.last().unwrap();
    for v in members(pool & above(last)) {
        part.push(v);
        if fill_part(g, pool, parts, size, common & g.neighbors(v) & !bit(v), part, chosen) {
            return true;
        }
        part.pop();
    }
    false
}
