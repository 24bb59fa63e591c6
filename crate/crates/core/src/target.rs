//! Forbidden monochromatic patterns.
//!
//! Text form (used on the command line and in JSON): `P<n>` path on `n`
//! vertices, `C<n>` cycle on `n` vertices, `<t>K2` matching of size `t`
//! (`K2` alone is one edge), `S<k>` star with `k` leaves, `B<a>x<b>` complete
//! bipartite `K_{a,b}`, `M<p>x<r>` complete `p`-partite graph with parts of
//! size `r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetGraph {
    Path(usize),
    Cycle(usize),
    Matching(usize),
    Star(usize),
    Biclique(usize, usize),
    CompleteMultipartite { parts: usize, size: usize },
}

impl TargetGraph {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            TargetGraph::Path(n) => n >= 2,
            TargetGraph::Cycle(n) => n >= 3,
            TargetGraph::Matching(t) => t >= 1,
            TargetGraph::Star(k) => k >= 1,
            TargetGraph::Biclique(a, b) => a >= 1 && b >= 1,
            TargetGraph::CompleteMultipartite { parts, size } => parts >= 2 && size >= 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidTarget(format!("{self} has a parameter out of range")))
        }
    }

    /// The pattern graph in canonical vertex order (see the graph builders).
    pub fn pattern(self) -> SimpleGraph {
        match self {
            TargetGraph::Path(n) => SimpleGraph::path(n),
            TargetGraph::Cycle(n) => SimpleGraph::cycle(n),
            TargetGraph::Matching(t) => SimpleGraph::matching(t),
            TargetGraph::Star(k) => SimpleGraph::star(k),
            TargetGraph::Biclique(a, b) => SimpleGraph::complete_bipartite(a, b),
            TargetGraph::CompleteMultipartite { parts, size } => {
                SimpleGraph::complete_multipartite(parts, size)
            }
        }
    }

    /// Number of pattern vertices.
    pub fn order(self) -> usize {
        match self {
            TargetGraph::Path(n) | TargetGraph::Cycle(n) => n,
            TargetGraph::Matching(t) => 2 * t,
            TargetGraph::Star(k) => k + 1,
            TargetGraph::Biclique(a, b) => a + b,
            TargetGraph::CompleteMultipartite { parts, size } => parts * size,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            TargetGraph::Path(n) => n - 1,
            TargetGraph::Cycle(n) => n,
            TargetGraph::Matching(t) => t,
            TargetGraph::Star(k) => k,
            TargetGraph::Biclique(a, b) => a * b,
            TargetGraph::CompleteMultipartite { parts, size } => {
                parts * (parts - 1) / 2 * size * size
            }
        }
    }

    pub fn is_bipartite(self) -> bool {
        match self {
            TargetGraph::Cycle(n) => n % 2 == 0,
            TargetGraph::CompleteMultipartite { parts, .. } => parts <= 2,
            _ => true,
        }
    }
}

impl fmt::Display for TargetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TargetGraph::Path(n) => write!(f, "P{n}"),
            TargetGraph::Cycle(n) => write!(f, "C{n}"),
            TargetGraph::Matching(1) => write!(f, "K2"),
            TargetGraph::Matching(t) => write!(f, "{t}K2"),
            TargetGraph::Star(k) => write!(f, "S{k}"),
            TargetGraph::Biclique(a, b) => write!(f, "B{a}x{b}"),
            TargetGraph::CompleteMultipartite { parts, size } => write!(f, "M{parts}x{size}"),
        }
    }
}

impl FromStr for TargetGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::Parse(format!(
                "target `{s}`: expected P<n>, C<n>, <t>K2, S<k>, B<a>x<b> or M<p>x<r>"
            ))
        };
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let pair = |x: &str| -> Result<(usize, usize)> {
            let (a, b) = x.split_once('x').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let target = if let Some(t) = s.strip_suffix("K2") {
            TargetGraph::Matching(if t.is_empty() { 1 } else { num(t)? })
        } else if let Some(rest) = s.strip_prefix('P') {
            TargetGraph::Path(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('C') {
            TargetGraph::Cycle(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('S') {
            TargetGraph::Star(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('B') {
            let (a, b) = pair(rest)?;
            TargetGraph::Biclique(a, b)
        } else if let Some(rest) = s.strip_prefix('M') {
            let (parts, size) = pair(rest)?;
            TargetGraph::CompleteMultipartite { parts, size }
        } else {
            return Err(bad());
        };
        target.validate()
    }
}

/// Parse a comma-separated target list such as `C5,P4,2K2`.
pub fn parse_targets(list: &str) -> Result<Vec<TargetGraph>> {
    list.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

pub fn format_targets(targets: &[TargetGraph]) -> String {
    targets.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

impl Serialize for TargetGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TargetGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        let list = parse_targets("P4,C5,2K2,K2,S3,B2x3,M3x2").unwrap();
        assert_eq!(
            list,
            vec![
                TargetGraph::Path(4),
                TargetGraph::Cycle(5),
                TargetGraph::Matching(2),
                TargetGraph::Matching(1),
                TargetGraph::Star(3),
                TargetGraph::Biclique(2, 3),
                TargetGraph::CompleteMultipartite { parts: 3, size: 2 },
            ]
        );
        assert_eq!(format_targets(&list), "P4,C5,2K2,K2,S3,B2x3,M3x2");
    }

    #[test]
    fn rejects_degenerate() {
        assert!("C2".parse::<TargetGraph>().is_err());
        assert!("P1".parse::<TargetGraph>().is_err());
        assert!("0K2".parse::<TargetGraph>().is_err());
        assert!("Q7".parse::<TargetGraph>().is_err());
        assert!("B2".parse::<TargetGraph>().is_err());
    }

    #[test]
    fn pattern_sizes_match() {
        for t in parse_targets("P4,C5,3K2,S3,B2x3,M3x2").unwrap() {
            let p = t.pattern();
            assert_eq!(p.order(), t.order(), "{t}");
            assert_eq!(p.edge_count(), t.edge_count(), "{t}");
            assert_eq!(p.is_bipartite(), t.is_bipartite(), "{t}");
        }
    }
}
