//! Exhaustive arrowing search.
//!
//! Edges are colored in canonical host order, colors tried in increasing
//! order, and a branch dies as soon as the newest edge completes a
//! monochromatic target in its color. Colors whose targets are identical are
//! interchangeable, so among them a new color may only be opened when the
//! previous one is already in use. Under these rules the first leaf reached
//! is the lexicographically least avoiding coloring of the host, and that is
//! the certificate reported, whichever execution mode is used.

mod cnf;

use std::sync::Arc;

use serde::Serialize;

pub use cnf::{
    decode_model, enumerate_models, parse_model, to_cnf, CnfInstance, CLAUSE_BUDGET, ENUMERATION_VARS,
};

use crate::coloring::{EdgeColoring, Host, HostKind};
use crate::detect::{completes_with_edge, violates_with};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::par::{self, Parallelism};
use crate::target::TargetGraph;

/// Host size limits for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_complete: usize,
    pub max_bipartite: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_complete: 9, max_bipartite: 4 }
    }
}

impl Budget {
    pub fn admit(&self, kind: HostKind) -> Result<()> {
        match kind {
            HostKind::Complete { n } if n > self.max_complete => Err(Error::Budget(format!(
                "host {kind} exceeds the complete-host budget of {} vertices",
                self.max_complete
            ))),
            HostKind::Bipartite { a, b } if a.max(b) > self.max_bipartite => Err(Error::Budget(format!(
                "host {kind} exceeds the bipartite-host budget of K{m}x{m}",
                m = self.max_bipartite
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    pub mode: Parallelism,
}

/// Does every coloring of `host` with `targets.len()` colors contain a
/// color-`i` copy of `targets[i - 1]`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowQuery {
    host: Arc<Host>,
    targets: Vec<TargetGraph>,
}

impl ArrowQuery {
    pub fn new(kind: HostKind, targets: Vec<TargetGraph>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::InvalidTarget("at least one target is needed".into()));
        }
        if targets.len() > crate::coloring::MAX_COLORS {
            return Err(Error::InvalidTarget(format!("{} colors is too many", targets.len())));
        }
        for t in &targets {
            t.validate()?;
            if matches!(kind, HostKind::Bipartite { .. }) && !t.is_bipartite() {
                return Err(Error::InvalidTarget(format!("{t} cannot occur in a bipartite host")));
            }
        }
        Ok(ArrowQuery { host: Arc::new(Host::new(kind)?), targets })
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn targets(&self) -> &[TargetGraph] {
        &self.targets
    }

    pub fn k(&self) -> usize {
        self.targets.len()
    }
}

/// `arrows == true` exactly when no certificate exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowResult {
    pub arrows: bool,
    /// Lexicographically least avoiding coloring, when one exists.
    pub certificate: Option<EdgeColoring>,
}

pub fn arrows(q: &ArrowQuery, opts: &SearchOptions) -> Result<ArrowResult> {
    opts.budget.admit(q.host.kind())?;
    let dfs = Dfs::new(q);
    let found = if opts.mode.is_parallel() {
        let frontier = dfs.frontier(FRONTIER_TARGET);
        par::find_map_first(opts.mode, &frontier, |state| {
            let mut state = state.clone();
            dfs.run(&mut state).then_some(state.assign)
        })
    } else {
        let mut state = dfs.root();
        dfs.run(&mut state).then_some(state.assign)
    };
    let certificate = match found {
        None => None,
        Some(assign) => {
            let col = EdgeColoring::from_raw(q.host.clone(), q.k(), assign.iter().map(|&c| c + 1).collect());
            if let Some(v) = violates_with(&col, &q.targets, Parallelism::Sequential)? {
                return Err(Error::Verification(format!(
                    "search certificate has a color-{} {}",
                    v.color, v.embedding.target
                )));
            }
            Some(col)
        }
    };
    Ok(ArrowResult { arrows: certificate.is_none(), certificate })
}

const FRONTIER_TARGET: usize = 64;

#[derive(Debug, Clone)]
struct State {
    classes: Vec<SimpleGraph>,
    used: Vec<u32>,
    assign: Vec<u8>,
}

struct Dfs<'a> {
    edges: &'a [(usize, usize)],
    targets: &'a [TargetGraph],
    /// Previous color (0-based) with the same target, if any.
    prev_twin: Vec<Option<usize>>,
    n: usize,
}

impl<'a> Dfs<'a> {
    fn new(q: &'a ArrowQuery) -> Self {
        let prev_twin = (0..q.k())
            .map(|c| (0..c).rev().find(|&d| q.targets[d] == q.targets[c]))
            .collect();
        Dfs { edges: q.host.edges(), targets: &q.targets, prev_twin, n: q.host.order() }
    }

    fn root(&self) -> State {
        let k = self.targets.len();
        State {
            classes: vec![SimpleGraph::empty(self.n); k],
            used: vec![0; k],
            assign: Vec::with_capacity(self.edges.len()),
        }
    }

    /// Colors the next edge may take, in trial order.
    fn choices<'s>(&'s self, state: &'s State) -> impl Iterator<Item = usize> + 's {
        (0..self.targets.len()).filter(|&c| self.prev_twin[c].is_none_or(|d| state.used[d] > 0))
    }

    /// Give the next edge color `c`; false (and no change) if that completes
    /// a target.
    fn push(&self, state: &mut State, c: usize) -> bool {
        let (u, v) = self.edges[state.assign.len()];
        state.classes[c].add_edge(u, v);
        if completes_with_edge(&state.classes[c], self.targets[c], u, v) {
            state.classes[c].remove_edge(u, v);
            return false;
        }
        state.used[c] += 1;
        state.assign.push(c as u8);
        true
    }

    fn pop(&self, state: &mut State) {
        let c = state.assign.pop().expect("pop on empty assignment") as usize;
        let (u, v) = self.edges[state.assign.len()];
        state.classes[c].remove_edge(u, v);
        state.used[c] -= 1;
    }

    fn run(&self, state: &mut State) -> bool {
        if state.assign.len() == self.edges.len() {
            return true;
        }
        let choices: Vec<usize> = self.choices(state).collect();
        for c in choices {
            if self.push(state, c) {
                if self.run(state) {
                    return true;
                }
                self.pop(state);
            }
        }
        false
    }

    /// Viable partial assignments, in lexicographic order, deep enough that
    /// there are at least `want` of them (or all edges are assigned).
    fn frontier(&self, want: usize) -> Vec<State> {
        let mut level = vec![self.root()];
        while level.len() < want && level.first().is_some_and(|s| s.assign.len() < self.edges.len()) {
            let mut next = Vec::new();
            for state in &level {
                for c in self.choices(state).collect::<Vec<_>>() {
                    let mut child = state.clone();
                    if self.push(&mut child, c) {
                        next.push(child);
                    }
                }
            }
            if next.is_empty() {
                return next;
            }
            level = next;
        }
        level
    }
}

/// Result of a range scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SearchValue {
    /// The least arrowing host size.
    Exact(usize),
    /// The lower end of the range (above 1) already arrows.
    AtMost(usize),
    /// Nothing in the range arrows.
    GreaterThan(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStep {
    pub size: usize,
    pub arrows: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub value: SearchValue,
    /// Avoiding coloring at the largest non-arrowing size scanned.
    pub certificate: Option<EdgeColoring>,
    pub steps: Vec<SearchStep>,
}

/// Least `n` in `[lo, hi]` with `K_n -> targets`.
pub fn ramsey_search(targets: &[TargetGraph], lo: usize, hi: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    scan(targets, lo, hi, opts, |n| HostKind::Complete { n })
}

/// Least `b` in `[lo, hi]` with `K_{b,b} -> targets`.
pub fn bipartite_search(
    targets: &[TargetGraph],
    lo: usize,
    hi: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    scan(targets, lo, hi, opts, |b| HostKind::Bipartite { a: b, b })
}

fn scan(
    targets: &[TargetGraph],
    lo: usize,
    hi: usize,
    opts: &SearchOptions,
    host: impl Fn(usize) -> HostKind,
) -> Result<SearchOutcome> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidHost(format!("empty search range {lo}:{hi}")));
    }
    opts.budget.admit(host(hi))?;
    let mut steps = Vec::new();
    let mut certificate: Option<EdgeColoring> = None;
    for size in lo..=hi {
        let q = ArrowQuery::new(host(size), targets.to_vec())?;
        let res = arrows(&q, opts)?;
        steps.push(SearchStep { size, arrows: res.arrows });
        if res.arrows {
            let value = if size == lo && lo > 1 { SearchValue::AtMost(lo) } else { SearchValue::Exact(size) };
            return Ok(SearchOutcome { value, certificate, steps });
        }
        let cert = res.certificate.expect("non-arrowing result carries a certificate");
        check_hereditary(&cert, targets)?;
        certificate = Some(cert);
    }
    Ok(SearchOutcome { value: SearchValue::GreaterThan(hi), certificate, steps })
}

/// Arrowing is monotone in the host: an avoiding coloring restricts to an
/// avoiding coloring of every smaller host of the same kind. Checked on the
/// restriction that drops the last vertex (both last vertices for
/// `K_{b,b}`).
fn check_hereditary(cert: &EdgeColoring, targets: &[TargetGraph]) -> Result<()> {
    let smaller = match cert.host().kind() {
        HostKind::Complete { n } if n > 1 => {
            let keep: Vec<usize> = (0..n - 1).collect();
            cert.restrict(&keep)?
        }
        HostKind::Bipartite { a, b } if a > 1 && b > 1 => {
            let host = Arc::new(Host::bipartite(a - 1, b - 1)?);
            let shift = |v: usize| if v < a - 1 { v } else { v + 1 };
            let colors = host
                .edges()
                .iter()
                .map(|&(u, v)| cert.color_of(shift(u), shift(v)).expect("restriction stays in host"))
                .collect();
            EdgeColoring::new(host, cert.k(), colors)?
        }
        _ => return Ok(()),
    };
    match violates_with(&smaller, targets, Parallelism::Sequential)? {
        None => Ok(()),
        Some(v) => Err(Error::Verification(format!(
            "restriction of an avoiding coloring contains a color-{} {}",
            v.color, v.embedding.target
        ))),
    }
}
