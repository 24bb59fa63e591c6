//! Exact containment tests for every target pattern, and the `violates`
//! check that certifies (or refutes) an avoiding coloring.
//!
//! All detectors are exact. Containment means "subgraph on exactly the
//! pattern's vertex count": `P_n` and `C_n` count vertices, and a star
//! `K_{1,k}` is present iff the maximum degree is at least `k`.

mod dense;
mod matching;
mod walks;

use serde::Serialize;

pub use dense::{find_biclique, find_multipartite};
pub use matching::{matching_edges, max_matching, maximum_matching};
pub use walks::{find_cycle, find_path};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::par::{self, Parallelism};
use crate::target::TargetGraph;

pub fn has_path(g: &SimpleGraph, n: usize) -> bool {
    find_path(g, n).is_some()
}

pub fn has_cycle(g: &SimpleGraph, n: usize) -> bool {
    find_cycle(g, n).is_some()
}

pub fn max_degree(g: &SimpleGraph) -> usize {
    g.max_degree()
}

pub fn has_star(g: &SimpleGraph, leaves: usize) -> bool {
    g.max_degree() >= leaves
}

pub fn has_biclique(g: &SimpleGraph, a: usize, b: usize) -> bool {
    find_biclique(g, a, b).is_some()
}

pub fn has_multipartite(g: &SimpleGraph, parts: usize, size: usize) -> bool {
    find_multipartite(g, parts, size).is_some()
}

/// An occurrence of a target: pattern vertex `i` (in the canonical vertex
/// order of [`TargetGraph::pattern`]) sits on host vertex `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub target: TargetGraph,
    pub vertices: Vec<usize>,
}

impl Embedding {
    /// Host edges the occurrence uses.
    pub fn image_edges(&self) -> Vec<(usize, usize)> {
        self.target
            .pattern()
            .edges()
            .into_iter()
            .map(|(a, b)| (self.vertices[a], self.vertices[b]))
            .collect()
    }

    /// Injective, of the right size, and every pattern edge lands on an edge of `g`.
    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.vertices.len()
            && self.vertices.len() == self.target.order()
            && self.image_edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Locate `target` in `g`.
pub fn find_embedding(g: &SimpleGraph, target: TargetGraph) -> Option<Embedding> {
    let vertices = match target {
        TargetGraph::Path(n) => find_path(g, n)?,
        TargetGraph::Cycle(n) => find_cycle(g, n)?,
        TargetGraph::Matching(t) => {
            let edges = matching_edges(g);
            if edges.len() < t {
                return None;
            }
            edges.into_iter().take(t).flat_map(|(u, v)| [u, v]).collect()
        }
        TargetGraph::Star(k) => {
            let center = (0..g.order()).find(|&v| g.degree(v) >= k)?;
            std::iter::once(center)
                .chain(crate::graph::members(g.neighbors(center)).take(k))
                .collect()
        }
        TargetGraph::Biclique(a, b) => {
            let (x, y) = find_biclique(g, a, b)?;
            x.into_iter().chain(y).collect()
        }
        TargetGraph::CompleteMultipartite { parts, size } => {
            find_multipartite(g, parts, size)?.concat()
        }
    };
    Some(Embedding { target, vertices })
}

pub fn contains(g: &SimpleGraph, target: TargetGraph) -> bool {
    match target {
        TargetGraph::Matching(t) => max_matching(g) >= t,
        TargetGraph::Star(k) => has_star(g, k),
        _ => find_embedding(g, target).is_some(),
    }
}

/// Whether `g` has an occurrence of `target` that uses the edge `uv`.
///
/// When `g - uv` avoids `target` this agrees with [`contains`]; the search
/// relies on that to re-check only the color that just received an edge.
pub(crate) fn completes_with_edge(g: &SimpleGraph, target: TargetGraph, u: usize, v: usize) -> bool {
    match target {
        TargetGraph::Path(n) => walks::path_through_edge(g, n, u, v),
        TargetGraph::Cycle(n) => walks::cycle_through_edge(g, n, u, v),
        TargetGraph::Star(k) => g.degree(u) >= k || g.degree(v) >= k,
        TargetGraph::Matching(t) => {
            let mut rest = g.clone();
            for w in crate::graph::members(g.neighbors(u) | g.neighbors(v)) {
                rest.remove_edge(u, w);
                rest.remove_edge(v, w);
            }
            max_matching(&rest) + 1 >= t
        }
        _ => contains(g, target),
    }
}

/// A monochromatic occurrence of `targets[color - 1]` in `color`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub color: Color,
    pub embedding: Embedding,
}

/// First color (in color order) whose class contains its target, with an
/// explicit embedding; `None` means the coloring avoids every target.
pub fn violates(coloring: &EdgeColoring, targets: &[TargetGraph]) -> Result<Option<Violation>> {
    violates_with(coloring, targets, Parallelism::default())
}

pub fn violates_with(
    coloring: &EdgeColoring,
    targets: &[TargetGraph],
    mode: Parallelism,
) -> Result<Option<Violation>> {
    if targets.len() != coloring.k() {
        return Err(Error::ArityMismatch { targets: targets.len(), colors: coloring.k() });
    }
    let classes = coloring.mono_classes();
    let jobs: Vec<(usize, &SimpleGraph)> = classes.iter().enumerate().collect();
    Ok(par::find_map_first(mode, &jobs, |&(i, g)| {
        find_embedding(g, targets[i]).map(|embedding| Violation { color: i + 1, embedding })
    }))
}
