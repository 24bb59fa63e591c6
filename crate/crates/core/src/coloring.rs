//! Hosts, edge colorings and the block-structured split builder.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Colors are 1-based: a `k`-coloring uses `1..=k`.
pub type Color = usize;

/// Largest supported color count.
pub const MAX_COLORS: usize = u8::MAX as usize;

/// The shape of a host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HostKind {
    /// `K_n` on vertices `0..n`.
    Complete { n: usize },
    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    Bipartite { a: usize, b: usize },
}

impl HostKind {
    pub fn order(self) -> usize {
        match self {
            HostKind::Complete { n } => n,
            HostKind::Bipartite { a, b } => a + b,
        }
    }
}

impl std::fmt::Display for HostKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HostKind::Complete { n } => write!(f, "K{n}"),
            HostKind::Bipartite { a, b } => write!(f, "K{a}x{b}"),
        }
    }
}

impl std::str::FromStr for HostKind {
    type Err = Error;

    /// `K<n>` or `K<a>x<b>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("host `{s}`: expected K<n> or K<a>x<b>"));
        let rest = s.trim().strip_prefix('K').ok_or_else(bad)?;
        match rest.split_once('x') {
            Some((a, b)) => Ok(HostKind::Bipartite {
                a: a.parse().map_err(|_| bad())?,
                b: b.parse().map_err(|_| bad())?,
            }),
            None => Ok(HostKind::Complete { n: rest.parse().map_err(|_| bad())? }),
        }
    }
}

/// A complete or complete-bipartite host with its canonical edge order.
///
/// The canonical order is lexicographic on `(u, v)` with `u < v`; every
/// serialization and every search branching order uses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Host {
    kind: HostKind,
    edges: Vec<(usize, usize)>,
    index: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

impl Host {
    pub fn new(kind: HostKind) -> Result<Self> {
        match kind {
            HostKind::Complete { n } if n == 0 => {
                return Err(Error::InvalidHost("complete host needs n >= 1".into()))
            }
            HostKind::Bipartite { a, b } if a == 0 || b == 0 => {
                return Err(Error::InvalidHost("bipartite host needs a, b >= 1".into()))
            }
            _ => {}
        }
        let n = kind.order();
        if n > MAX_VERTICES {
            return Err(Error::InvalidHost(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut edges = Vec::new();
        match kind {
            HostKind::Complete { n } => {
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
            }
            HostKind::Bipartite { a, b } => {
                for u in 0..a {
                    for v in a..a + b {
                        edges.push((u, v));
                    }
                }
            }
        }
        let mut index = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i as u32;
            index[v * n + u] = i as u32;
        }
        Ok(Host { kind, edges, index })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Host::new(HostKind::Complete { n })
    }

    pub fn bipartite(a: usize, b: usize) -> Result<Self> {
        Host::new(HostKind::Bipartite { a, b })
    }

    pub fn kind(&self) -> HostKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.kind.order()
    }

    /// Host edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical position of the edge `{u, v}`, if it is a host edge.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let n = self.order();
        if u >= n || v >= n {
            return None;
        }
        match self.index[u * n + v] {
            NO_EDGE => None,
            i => Some(i as usize),
        }
    }

    /// The host itself as a graph.
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.order());
        for &(u, v) in &self.edges {
            g.add_edge(u, v);
        }
        g
    }
}

/// A total assignment of colors `1..=k` to the edges of a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Arc<Host>,
    k: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// `colors[i]` is the color of the `i`-th canonical host edge.
    pub fn new(host: Arc<Host>, k: usize, colors: Vec<Color>) -> Result<Self> {
        check_k(k)?;
        if colors.len() != host.edge_count() {
            return Err(Error::InvalidGraph(format!(
                "coloring assigns {} colors but the host has {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        let colors = colors
            .into_iter()
            .map(|c| check_color(c, k).map(|c| c as u8))
            .collect::<Result<_>>()?;
        Ok(EdgeColoring { host, k, colors })
    }

    /// Color every host edge with `f(u, v)`.
    pub fn from_fn(host: Arc<Host>, k: usize, f: impl Fn(usize, usize) -> Color) -> Result<Self> {
        let colors = host.edges().iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColoring::new(host, k, colors)
    }

    /// Every edge of `K_n` in one color.
    pub fn monochromatic(n: usize, k: usize, color: Color) -> Result<Self> {
        EdgeColoring::from_fn(Arc::new(Host::complete(n)?), k, |_, _| color)
    }

    pub(crate) fn from_raw(host: Arc<Host>, k: usize, colors: Vec<u8>) -> Self {
        debug_assert_eq!(colors.len(), host.edge_count());
        EdgeColoring { host, k, colors }
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<Host> {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.host.order()
    }

    /// Colors in canonical edge order.
    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.colors.iter().map(|&c| c as Color)
    }

    /// `(u, v, color)` triples in canonical edge order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c as Color))
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        self.host.edge_index(u, v).map(|i| self.colors[i] as Color)
    }

    /// The graph on the host's vertices formed by the edges of color `c`.
    pub fn mono_class(&self, c: Color) -> Result<SimpleGraph> {
        check_color(c, self.k)?;
        let mut g = SimpleGraph::empty(self.order());
        for (u, v, col) in self.colored_edges() {
            if col == c {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// All color classes, index `i` holding color `i + 1`.
    pub fn mono_classes(&self) -> Vec<SimpleGraph> {
        let mut classes = vec![SimpleGraph::empty(self.order()); self.k];
        for (u, v, c) in self.colored_edges() {
            classes[c - 1].add_edge(u, v);
        }
        classes
    }

    /// Rename colors: old color `c` becomes `map[c - 1]`, in a `k`-coloring.
    pub fn relabel(&self, map: &[Color], k: usize) -> Result<EdgeColoring> {
        if map.len() != self.k {
            return Err(Error::InvalidRecipe(format!(
                "color map has {} entries for a {}-coloring",
                map.len(),
                self.k
            )));
        }
        let colors = self.colors().map(|c| map[c - 1]).collect();
        EdgeColoring::new(self.host.clone(), k, colors)
    }

    /// Restriction of a complete-host coloring to the listed vertices,
    /// relabelled `0..len` in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Result<EdgeColoring> {
        if !matches!(self.host.kind(), HostKind::Complete { .. }) {
            return Err(Error::InvalidHost("restriction needs a complete host".into()));
        }
        let host = Arc::new(Host::complete(vertices.len())?);
        let colors = host
            .edges()
            .iter()
            .map(|&(i, j)| {
                self.color_of(vertices[i], vertices[j])
                    .ok_or_else(|| Error::InvalidGraph(format!("({i},{j}) not a host edge")))
            })
            .collect::<Result<Vec<_>>>()?;
        EdgeColoring::new(host, self.k, colors)
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_COLORS {
        return Err(Error::InvalidGraph(format!("color count {k} outside 1..={MAX_COLORS}")));
    }
    Ok(())
}

fn check_color(c: Color, k: usize) -> Result<Color> {
    if c == 0 || c > k {
        Err(Error::ColorOutOfRange { color: c, k })
    } else {
        Ok(c)
    }
}

/// A vertex partition into consecutive blocks plus one color per block pair.
///
/// Block `i` occupies the vertices after all earlier blocks. Entry `(i, i)`
/// colors the edges inside block `i`; entry `(i, j)` colors every edge between
/// blocks `i` and `j`. A block may instead carry an explicit coloring of its
/// own complete graph (an override), which replaces only its `(i, i)` entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRecipe {
    blocks: Vec<usize>,
    matrix: Vec<Option<Color>>,
    overrides: Vec<(usize, EdgeColoring)>,
}

impl SplitRecipe {
    pub fn new(blocks: Vec<usize>) -> Self {
        let b = blocks.len();
        SplitRecipe { blocks, matrix: vec![None; b * b], overrides: Vec::new() }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Vertex range of block `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i].iter().sum();
        start..start + self.blocks[i]
    }

    /// Set the color of block pair `(i, j)` (order irrelevant).
    pub fn set(mut self, i: usize, j: usize, c: Color) -> Self {
        let b = self.blocks.len();
        assert!(i < b && j < b, "block pair ({i},{j}) out of range");
        self.matrix[i * b + j] = Some(c);
        self.matrix[j * b + i] = Some(c);
        self
    }

    /// Set every block pair that has no color yet.
    pub fn fill(mut self, c: Color) -> Self {
        for slot in &mut self.matrix {
            slot.get_or_insert(c);
        }
        self
    }

    pub fn with_override(mut self, block: usize, coloring: EdgeColoring) -> Self {
        self.overrides.push((block, coloring));
        self
    }

    /// Materialize the recipe as a `k`-coloring of `K_N`, `N` the sum of the
    /// block sizes.
    pub fn apply_split(&self, k: usize) -> Result<EdgeColoring> {
        check_k(k)?;
        let n = self.order();
        if self.blocks.is_empty() || n == 0 {
            return Err(Error::InvalidRecipe("recipe has no vertices".into()));
        }
        let b = self.blocks.len();
        for i in 0..b {
            for j in i..b {
                match self.matrix[i * b + j] {
                    None => {
                        return Err(Error::InvalidRecipe(format!(
                            "block pair ({i},{j}) has no color"
                        )))
                    }
                    Some(c) => {
                        check_color(c, k)?;
                    }
                }
            }
        }
        let mut nested: Vec<Option<&EdgeColoring>> = vec![None; b];
        for (block, coloring) in &self.overrides {
            let block = *block;
            if block >= b {
                return Err(Error::InvalidRecipe(format!("override on missing block {block}")));
            }
            if nested[block].is_some() {
                return Err(Error::InvalidRecipe(format!("block {block} overridden twice")));
            }
            if coloring.host().kind() != (HostKind::Complete { n: self.blocks[block] }) {
                return Err(Error::InvalidRecipe(format!(
                    "override for block {block} is on {} but the block has {} vertices",
                    coloring.host().kind(),
                    self.blocks[block]
                )));
            }
            if coloring.k() > k {
                return Err(Error::ColorOutOfRange { color: coloring.k(), k });
            }
            nested[block] = Some(coloring);
        }

        let mut block_of = Vec::with_capacity(n);
        let mut offset = Vec::with_capacity(b);
        for (i, &size) in self.blocks.iter().enumerate() {
            offset.push(block_of.len());
            block_of.extend(std::iter::repeat_n(i, size));
        }
        let host = Arc::new(Host::complete(n)?);
        let colors = host
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (i, j) = (block_of[u], block_of[v]);
                if i == j {
                    if let Some(inner) = nested[i] {
                        return inner
                            .color_of(u - offset[i], v - offset[i])
                            .expect("override host covers its block");
                    }
                }
                self.matrix[i * b + j].expect("checked above")
            })
            .collect();
        EdgeColoring::new(host, k, colors)
    }
}
