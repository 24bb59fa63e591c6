//! CNF encoding of "some coloring avoids every target".
//!
//! Variable `e * k + c` (edge `e` 0-based in canonical host order, color `c`
//! 1-based) means "edge `e` has color `c`". Every edge gets one at-least-one
//! clause and pairwise at-most-one clauses; every copy of `targets[c - 1]`
//! in the host gets one clause forbidding all of its edges in color `c`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use super::ArrowQuery;
use crate::coloring::{EdgeColoring, Host};
use crate::error::{Error, Result};
use crate::graph::{bit, members, SimpleGraph, VertexSet};
use crate::target::{format_targets, TargetGraph};

/// Upper limit on the number of clauses an encoding may produce.
pub const CLAUSE_BUDGET: usize = 1_000_000;

/// Largest variable count [`enumerate_models`] accepts.
pub const ENUMERATION_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    host: Arc<Host>,
    targets: Vec<TargetGraph>,
}

impl CnfInstance {
    pub fn k(&self) -> usize {
        self.targets.len()
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn targets(&self) -> &[TargetGraph] {
        &self.targets
    }

    /// Variable for edge index `e` in color `c` (1-based).
    pub fn var(&self, e: usize, c: usize) -> i32 {
        (e * self.k() + c) as i32
    }

    /// `(edge index, color)` of variable `x`.
    pub fn decode_var(&self, x: i32) -> (usize, usize) {
        let x = x.unsigned_abs() as usize - 1;
        (x / self.k(), x % self.k() + 1)
    }

    /// Does the assignment (`values[i]` is variable `i + 1`) satisfy every clause?
    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|cl| cl.iter().any(|&l| lit(values, l)))
    }

    /// DIMACS text, with comment lines naming every variable.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c host {} targets {}", self.host.kind(), format_targets(&self.targets));
        for (e, &(u, v)) in self.host.edges().iter().enumerate() {
            for c in 1..=self.k() {
                let _ = writeln!(out, "c var {} edge {e} ({u},{v}) color {c}", self.var(e, c));
            }
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for cl in &self.clauses {
            for l in cl {
                let _ = write!(out, "{l} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

fn lit(values: &[bool], l: i32) -> bool {
    let v = values[l.unsigned_abs() as usize - 1];
    if l > 0 {
        v
    } else {
        !v
    }
}

pub fn to_cnf(q: &ArrowQuery) -> Result<CnfInstance> {
    let host = q.host.clone();
    let k = q.k();
    let e_count = host.edge_count();
    let num_vars = e_count * k;
    if num_vars > i32::MAX as usize {
        return Err(Error::Budget(format!("{num_vars} variables")));
    }
    let var = |e: usize, c: usize| (e * k + c) as i32;
    let mut clauses = Vec::new();
    for e in 0..e_count {
        clauses.push((1..=k).map(|c| var(e, c)).collect());
        for c in 1..=k {
            for d in c + 1..=k {
                clauses.push(vec![-var(e, c), -var(e, d)]);
            }
        }
    }
    let g = host.graph();
    for (i, &target) in q.targets.iter().enumerate() {
        let color = i + 1;
        let budget = CLAUSE_BUDGET.saturating_sub(clauses.len());
        for copy in edge_sets(&g, &host, target, budget)? {
            clauses.push(copy.into_iter().map(|e| -var(e, color)).collect());
        }
    }
    Ok(CnfInstance { num_vars, clauses, host, targets: q.targets.clone() })
}

/// Edge-index sets of all copies of `target` in `g`, deduplicated, in
/// lexicographic order.
fn edge_sets(g: &SimpleGraph, host: &Host, target: TargetGraph, budget: usize) -> Result<BTreeSet<Vec<usize>>> {
    let pattern = target.pattern();
    let order = bfs_order(&pattern);
    let pattern_edges = pattern.edges();
    let mut found = BTreeSet::new();
    let mut image = vec![usize::MAX; pattern.order()];
    let mut err = None;
    embed(g, &pattern, &order, 0, 0, &mut image, &mut |image| {
        let mut set: Vec<usize> = pattern_edges
            .iter()
            .map(|&(a, b)| host.edge_index(image[a], image[b]).expect("embedding uses host edges"))
            .collect();
        set.sort_unstable();
        found.insert(set);
        if found.len() > budget {
            err = Some(Error::Budget(format!("more than {CLAUSE_BUDGET} clauses for {target}")));
            return false;
        }
        true
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Pattern vertices ordered so that each one after the first of its
/// component has an earlier neighbor.
fn bfs_order(p: &SimpleGraph) -> Vec<usize> {
    let mut seen: VertexSet = 0;
    let mut order = Vec::with_capacity(p.order());
    for s in 0..p.order() {
        if seen & bit(s) != 0 {
            continue;
        }
        seen |= bit(s);
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            for w in members(p.neighbors(order[i]) & !seen) {
                seen |= bit(w);
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// Enumerate injective maps of the pattern into `g` preserving pattern
/// edges; `visit` returns false to stop.
fn embed(
    g: &SimpleGraph,
    p: &SimpleGraph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    image: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return visit(image);
    }
    let x = order[depth];
    let mut cand = g.vertices() & !used;
    for y in members(p.neighbors(x)) {
        if image[y] != usize::MAX {
            cand &= g.neighbors(image[y]);
        }
    }
    for v in members(cand) {
        image[x] = v;
        if !embed(g, p, order, depth + 1, used | bit(v), image, visit) {
            image[x] = usize::MAX;
            return false;
        }
    }
    image[x] = usize::MAX;
    true
}

/// Turn a model into a coloring. Fails unless every edge has exactly one
/// true color variable.
pub fn decode_model(inst: &CnfInstance, values: &[bool]) -> Result<EdgeColoring> {
    if values.len() != inst.num_vars {
        return Err(Error::Verification(format!(
            "model assigns {} variables, instance has {}",
            values.len(),
            inst.num_vars
        )));
    }
    let k = inst.k();
    let colors = (0..inst.host.edge_count())
        .map(|e| {
            let on: Vec<usize> = (1..=k).filter(|&c| values[e * k + c - 1]).collect();
            match on.as_slice() {
                [c] => Ok(*c),
                _ => {
                    let (u, v) = inst.host.edges()[e];
                    Err(Error::Verification(format!(
                        "edge ({u},{v}) has {} colors in the model, expected exactly one",
                        on.len()
                    )))
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::new(inst.host.clone(), k, colors)
}

/// Parse a solver model: signed literals, optionally on `v` lines, `c` and
/// `s` lines ignored, a `0` terminating. Unmentioned variables are false.
pub fn parse_model(text: &str, num_vars: usize) -> Result<Vec<bool>> {
    let mut values = vec![false; num_vars];
    'lines: for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('c') || line.starts_with('s') || line.is_empty() {
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let l: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: `{tok}` is not a literal", lineno + 1)))?;
            if l == 0 {
                break 'lines;
            }
            let x = l.unsigned_abs() as usize;
            if x > num_vars {
                return Err(Error::Parse(format!(
                    "line {}: variable {x} exceeds {num_vars}",
                    lineno + 1
                )));
            }
            values[x - 1] = l > 0;
        }
    }
    Ok(values)
}

/// Up to `limit` satisfying assignments, in lexicographic order with
/// `false < true`. Only for instances with at most [`ENUMERATION_VARS`]
/// variables.
pub fn enumerate_models(inst: &CnfInstance, limit: usize) -> Result<Vec<Vec<bool>>> {
    if inst.num_vars > ENUMERATION_VARS {
        return Err(Error::Budget(format!(
            "{} variables; model enumeration handles at most {ENUMERATION_VARS}",
            inst.num_vars
        )));
    }
    // Each clause is checked as soon as its largest variable is assigned.
    let mut by_last: Vec<Vec<&[i32]>> = vec![Vec::new(); inst.num_vars + 1];
    for cl in &inst.clauses {
        let last = cl.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        by_last[last].push(cl);
    }
    if !by_last[0].is_empty() {
        return Ok(Vec::new());
    }
    let mut models = Vec::new();
    let mut values = vec![false; inst.num_vars];
    fn go(
        depth: usize,
        values: &mut Vec<bool>,
        by_last: &[Vec<&[i32]>],
        models: &mut Vec<Vec<bool>>,
        limit: usize,
    ) {
        if models.len() >= limit {
            return;
        }
        if depth == values.len() {
            models.push(values.clone());
            return;
        }
        for b in [false, true] {
            values[depth] = b;
            if by_last[depth + 1].iter().all(|cl| cl.iter().any(|&l| lit(values, l))) {
                go(depth + 1, values, by_last, models, limit);
            }
        }
        values[depth] = false;
    }
    go(0, &mut values, &by_last, &mut models, limit);
    Ok(models)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::HostKind;
    use crate::detect::violates;
    use crate::target::parse_targets;

    fn query(kind: &str, t: &str) -> ArrowQuery {
        ArrowQuery::new(kind.parse::<HostKind>().unwrap(), parse_targets(t).unwrap()).unwrap()
    }

    #[test]
    fn triangle_p3_p3_is_unsat() {
        let inst = to_cnf(&query("K3", "P3,P3")).unwrap();
        assert_eq!(inst.num_vars, 6);
        // 3 edges x (1 + 1) exactly-one clauses, 3 copies of P3 per color.
        assert_eq!(inst.clauses.len(), 6 + 6);
        assert!(enumerate_models(&inst, 1).unwrap().is_empty());
    }

    #[test]
    fn single_edge_is_sat() {
        let inst = to_cnf(&query("K2", "P3,P3")).unwrap();
        let models = enumerate_models(&inst, usize::MAX).unwrap();
        assert_eq!(models.len(), 2);
        for m in models {
            let col = decode_model(&inst, &m).unwrap();
            assert_eq!(violates(&col, inst.targets()).unwrap(), None);
        }
    }

    #[test]
    fn k4_two_matchings_models_decode() {
        let inst = to_cnf(&query("K4", "2K2,2K2")).unwrap();
        // Clauses have the pattern's edge count.
        assert!(inst.clauses.iter().skip(6 * 2).all(|cl| cl.len() == 2));
        let models = enumerate_models(&inst, usize::MAX).unwrap();
        assert!(!models.is_empty());
        for m in &models {
            assert!(inst.satisfied_by(m));
            let col = decode_model(&inst, m).unwrap();
            assert_eq!(violates(&col, inst.targets()).unwrap(), None);
        }
    }

    #[test]
    fn dimacs_and_model_round_trip() {
        let inst = to_cnf(&query("K2", "P3,P3")).unwrap();
        let text = inst.to_dimacs();
        assert!(text.contains("p cnf 2 2\n"));
        assert!(text.contains("c var 2 edge 0 (0,1) color 2"));
        let values = parse_model("s SATISFIABLE\nv -1 2 0\n", 2).unwrap();
        assert_eq!(values, vec![false, true]);
        assert_eq!(decode_model(&inst, &values).unwrap().colors().collect::<Vec<_>>(), vec![2]);
        assert!(decode_model(&inst, &[true, true]).is_err());
        assert!(parse_model("v 3 0", 2).is_err());
        assert_eq!(inst.decode_var(-2), (0, 2));
    }
}
