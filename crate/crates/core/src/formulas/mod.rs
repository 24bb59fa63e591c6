//! Closed-form Ramsey and bipartite Ramsey values and bounds.
//!
//! Every catalog entry evaluates its preconditions first and refuses to
//! produce a value when any of them fails. Entries that only hold for
//! "sufficiently large" parameters (with an unspecified threshold) always
//! carry `large_n_caveat = true`; callers must treat those values as upper
//! bounds at small sizes.

mod catalog;
mod grid;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog, lookup, CatalogEntry};
pub(crate) use catalog::tk2_cn;
pub use grid::default_grid;

use crate::error::{Error, Result};
use crate::target::TargetGraph;

/// One parameter: an integer or an integer list (`m_list`, `k_list`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

/// Named integer parameters. Derived quantities (`Λ`, `Σ`, and `s`, `m` when
/// a path order is given) are computed by the entries, never trusted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormulaParams(BTreeMap<String, ParamValue>);

impl FormulaParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), ParamValue::Int(value));
        self
    }

    pub fn with_list(mut self, name: &str, values: Vec<i64>) -> Self {
        self.0.insert(name.to_string(), ParamValue::List(values));
        self
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        match self.0.get(name) {
            Some(ParamValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn list(&self, name: &str) -> Option<&[i64]> {
        match self.0.get(name) {
            Some(ParamValue::List(v)) => Some(v),
            _ => None,
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A catalog value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormulaValue {
    Exact { value: i64 },
    Upper { value: i64 },
    Bracket { lower: i64, upper: i64 },
    /// Ordered bipartite pair `(b_1, b_2)` for host `K_{b_1,b_2}`.
    Pair { first: i64, second: i64 },
}

impl FormulaValue {
    /// The exact integer, when there is one.
    pub fn exact(self) -> Option<i64> {
        match self {
            FormulaValue::Exact { value } => Some(value),
            _ => None,
        }
    }

    /// The least known upper bound.
    pub fn upper(self) -> Option<i64> {
        match self {
            FormulaValue::Exact { value } | FormulaValue::Upper { value } => Some(value),
            FormulaValue::Bracket { upper, .. } => Some(upper),
            FormulaValue::Pair { .. } => None,
        }
    }

    /// The best known lower bound.
    pub fn lower(self) -> Option<i64> {
        match self {
            FormulaValue::Exact { value } => Some(value),
            FormulaValue::Bracket { lower, .. } => Some(lower),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub text: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub id: String,
    pub statement: String,
    pub value: FormulaValue,
    pub preconditions: Vec<Precondition>,
    pub large_n_caveat: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Evaluate catalog entry `id`.
pub fn eval_formula(id: &str, params: &FormulaParams) -> Result<FormulaResult> {
    let entry = lookup(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let mut ctx = Ctx::new(entry.id, params);
    let value = (entry.eval)(&mut ctx)?;
    let failed: Vec<String> =
        ctx.checks.iter().filter(|c| !c.holds).map(|c| c.text.clone()).collect();
    if !failed.is_empty() {
        return Err(Error::Precondition { id: entry.id.to_string(), failed });
    }
    if let FormulaValue::Bracket { lower, upper } = value {
        debug_assert!(lower <= upper, "{id}: bracket {lower} > {upper}");
    }
    Ok(FormulaResult {
        id: entry.id.to_string(),
        statement: entry.statement.to_string(),
        value,
        preconditions: ctx.checks,
        large_n_caveat: entry.large_n,
        notes: ctx.notes,
    })
}

/// Evaluation context: parameter access plus the precondition log.
pub(crate) struct Ctx<'a> {
    id: &'static str,
    params: &'a FormulaParams,
    checks: Vec<Precondition>,
    notes: Vec<String>,
}

impl<'a> Ctx<'a> {
    fn new(id: &'static str, params: &'a FormulaParams) -> Self {
        Ctx { id, params, checks: Vec::new(), notes: Vec::new() }
    }

    pub(crate) fn int(&self, name: &str) -> Result<i64> {
        self.params.int(name).ok_or_else(|| self.missing(name))
    }

    pub(crate) fn opt(&self, name: &str) -> Option<i64> {
        self.params.int(name)
    }

    pub(crate) fn list(&self, name: &str) -> Result<Vec<i64>> {
        self.params.list(name).map(<[i64]>::to_vec).ok_or_else(|| self.missing(name))
    }

    pub(crate) fn opt_list(&self, name: &str) -> Option<Vec<i64>> {
        self.params.list(name).map(<[i64]>::to_vec)
    }

    pub(crate) fn has(&self, name: &str) -> bool {
        self.params.0.contains_key(name)
    }

    fn missing(&self, name: &str) -> Error {
        Error::MissingParam { id: self.id.to_string(), param: name.to_string() }
    }

    pub(crate) fn check(&mut self, text: impl Into<String>, holds: bool) -> bool {
        self.checks.push(Precondition { text: text.into(), holds });
        holds
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// A value derived from other parameters; a supplied value must agree.
    pub(crate) fn derived(&self, name: &str, value: i64, from: &str) -> Result<i64> {
        match self.opt(name) {
            Some(given) if given != value => Err(Error::InconsistentParams {
                id: self.id.to_string(),
                detail: format!("{name}={given} but {from} gives {name}={value}"),
            }),
            _ => Ok(value),
        }
    }
}

/// `Λ = Σ(m_i - 1)` over matching sizes.
pub fn lambda(m_list: &[i64]) -> i64 {
    m_list.iter().map(|m| m - 1).sum()
}

/// `Σ = Σ(k_i - 1)` over star sizes.
pub fn sigma(k_list: &[i64]) -> i64 {
    k_list.iter().map(|k| k - 1).sum()
}

/// The square host size used by the `K_{b,b}` chains, from an ordered
/// bipartite pair `(b_1, b_2)` with `b_1 >= b_2`: by convention `b_1`.
pub fn square_b(pair: (i64, i64)) -> Result<i64> {
    let (b1, b2) = pair;
    if b1 < b2 {
        return Err(Error::InconsistentParams {
            id: "square_b".into(),
            detail: format!("pair ({b1},{b2}) is not ordered (b_1 >= b_2)"),
        });
    }
    Ok(b1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "source", content = "id", rename_all = "snake_case")]
pub enum Provenance {
    Formula(String),
    Witness(String),
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub value: i64,
    pub provenance: Provenance,
    pub large_n_caveat: bool,
}

/// Upper bound on `R(H, G_1, ..., G_k)` through `R(H, K_{b,b})`, where
/// `b = b(G_1, ..., G_k)`: a cycle uses the cycle-versus-multipartite value
/// (caveated), a path the path-versus-biclique bound, a matching the
/// matching-versus-biclique value.
pub fn combine_upper(h: TargetGraph, b: i64) -> Result<Bound> {
    let (id, params) = match h {
        TargetGraph::Cycle(n) => {
            ("thm_M", FormulaParams::new().with("n", n as i64).with("t", 1).with("r", b))
        }
        TargetGraph::Path(m) => {
            ("thm_o", FormulaParams::new().with("m", m as i64).with("n", b).with("k", b))
        }
        TargetGraph::Matching(t) => ("thm_Z", FormulaParams::new().with("t", t as i64).with("n", b)),
        other => {
            return Err(Error::InvalidTarget(format!(
                "{other}: the K_(b,b) chain supports cycles, paths and matchings"
            )))
        }
    };
    if b < 1 {
        return Err(Error::Precondition { id: id.into(), failed: vec!["b >= 1".into()] });
    }
    let res = eval_formula(id, &params)?;
    let value = res.value.upper().expect("chain entries have an upper value");
    Ok(Bound {
        kind: BoundKind::Upper,
        value,
        provenance: Provenance::Formula(id.to_string()),
        large_n_caveat: res.large_n_caveat,
    })
}

/// A lower and an upper bound on the same quantity, checked for consistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundPair {
    pub lower: Bound,
    pub upper: Bound,
}

impl BoundPair {
    /// Fails when the lower bound exceeds an upper bound that carries no
    /// large-n caveat.
    pub fn assemble(lower: Bound, upper: Bound) -> Result<BoundPair> {
        if lower.value > upper.value && !upper.large_n_caveat {
            return Err(Error::Verification(format!(
                "lower bound {} ({:?}) exceeds upper bound {} ({:?})",
                lower.value, lower.provenance, upper.value, upper.provenance
            )));
        }
        Ok(BoundPair { lower, upper })
    }

    pub fn is_exact(&self) -> bool {
        self.lower.value == self.upper.value
    }
}
