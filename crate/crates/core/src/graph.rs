//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one `u128` neighbor mask per vertex, which keeps the
//! exact (exponential) detectors cheap enough for the block-structured witness
//! colorings and the small exhaustive searches this crate runs.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

/// A vertex set as a bit mask.
pub type VertexSet = u128;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u128 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Vertices strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> VertexSet {
    !low_mask(v + 1)
}

/// Iterate the members of a vertex set in increasing order.
pub(crate) fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices, got {n}");
        SimpleGraph { adj: vec![0; n] }
    }

    /// Build a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Repeated pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g
    }

    /// `P_n`: the path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// `C_n`: the path on `n` vertices closed by the edge `(n-1, 0)`.
    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// `tK_2`: edges `(2i, 2i+1)` for `i < t`.
    pub fn matching(t: usize) -> Self {
        let mut g = SimpleGraph::empty(2 * t);
        for i in 0..t {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let mut g = SimpleGraph::empty(k + 1);
        for leaf in 1..=k {
            g.add_edge(0, leaf);
        }
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        SimpleGraph::empty(a).join(&SimpleGraph::empty(b))
    }

    /// Complete `parts`-partite graph with parts of size `r`; part `i` is
    /// `i*r..(i+1)*r`.
    pub fn complete_multipartite(parts: usize, r: usize) -> Self {
        (0..parts).fold(SimpleGraph::empty(0), |acc, _| acc.join(&SimpleGraph::empty(r)))
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        low_mask(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    /// Panics on loops or out-of-range endpoints; use [`try_add_edge`](Self::try_add_edge)
    /// for untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) has an endpoint outside 0..{n}"
            )));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order() && v < self.order() {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in members(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Complement within `K_n`.
    pub fn complement(&self) -> SimpleGraph {
        let all = self.vertices();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, m)| !m & all & !bit(v))
            .collect();
        SimpleGraph { adj }
    }

    /// Disjoint union; `other`'s vertices are shifted above `self`'s.
    pub fn union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.order();
        let mut g = SimpleGraph::empty(shift + other.order());
        g.adj[..shift].copy_from_slice(&self.adj);
        for (v, &m) in other.adj.iter().enumerate() {
            g.adj[shift + v] = m << shift;
        }
        g
    }

    /// Join: the disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.order();
        let mut g = self.union(other);
        let left = low_mask(shift);
        let right = g.vertices() & !left;
        for v in 0..g.order() {
            g.adj[v] |= if v < shift { right } else { left };
        }
        g
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `alive`.
    pub(crate) fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut left = alive;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start, alive);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `start` inside `allowed` (`start` included).
    pub(crate) fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Twin classes: `u` and `w` are twins when `N(u) \ {w} = N(w) \ {u}`,
    /// so swapping them is an automorphism. Returns, for every vertex, the
    /// smallest vertex of its class.
    pub(crate) fn twin_classes(&self) -> Vec<usize> {
        let n = self.order();
        let mut rep: Vec<usize> = (0..n).collect();
        for w in 0..n {
            for u in 0..w {
                if rep[u] == u && self.adj[u] & !bit(w) == self.adj[w] & !bit(u) {
                    rep[w] = u;
                    break;
                }
            }
        }
        rep
    }

    /// The subgraph induced on the vertices of `keep`, relabelled in order.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// True when every edge of `self` is an edge of `other` (same order).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.order() == other.order()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Two-coloring check (used to reject non-bipartite patterns on bipartite hosts).
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in members(self.adj[u]) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.order(), self.edges())
    }
}
