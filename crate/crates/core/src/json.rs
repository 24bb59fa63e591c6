//! JSON forms of colorings and witness certificates.
//!
//! A coloring is `{"edges":[[u,v,c],...],"host":{"kind":"complete","n":N},"k":K}`
//! with edges in canonical host order. A witness file adds the header fields
//! `theorem`, `params`, `targets`, `claimed_value` and `verified`; a plain
//! coloring reader accepts it unchanged. Writers emit keys in sorted order
//! with no insignificant whitespace, so equal inputs give equal bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::coloring::{Color, EdgeColoring, Host, HostKind};
use crate::constructions::Witness;
use crate::error::{Error, Result};
use crate::formulas::FormulaParams;
use crate::target::TargetGraph;

/// Recursively rebuild every object with its keys in sorted order.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> = map.into_iter().map(|(k, v)| (k, canonical(v))).collect();
            Value::Object(sorted.into_iter().collect::<Map<_, _>>())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn to_canonical_string(v: Value) -> String {
    serde_json::to_string(&canonical(v)).expect("JSON values always serialize")
}

pub fn coloring_value(c: &EdgeColoring) -> Value {
    let edges: Vec<[usize; 3]> = c.colored_edges().map(|(u, v, col)| [u, v, col]).collect();
    json!({ "host": c.host().kind(), "k": c.k(), "edges": edges })
}

pub fn coloring_to_json(c: &EdgeColoring) -> String {
    to_canonical_string(coloring_value(c))
}

#[derive(Deserialize)]
struct ColoringFile {
    host: HostKind,
    k: usize,
    edges: Vec<(usize, usize, Color)>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Read a coloring. Edges may come in any order and either orientation, but
/// every host edge must appear exactly once.
pub fn coloring_from_json(text: &str) -> Result<EdgeColoring> {
    let file: ColoringFile = serde_json::from_str(text).map_err(parse_err)?;
    build(file)
}

fn build(file: ColoringFile) -> Result<EdgeColoring> {
    let host = Arc::new(Host::new(file.host).map_err(|e| Error::Parse(format!("field `host`: {e}")))?);
    let mut colors: Vec<Option<Color>> = vec![None; host.edge_count()];
    for (i, &(u, v, c)) in file.edges.iter().enumerate() {
        let idx = host.edge_index(u, v).ok_or_else(|| {
            Error::Parse(format!("field `edges[{i}]`: ({u},{v}) is not an edge of {}", file.host))
        })?;
        if colors[idx].replace(c).is_some() {
            return Err(Error::Parse(format!("field `edges[{i}]`: edge ({u},{v}) listed twice")));
        }
        if c == 0 || c > file.k {
            return Err(Error::Parse(format!("field `edges[{i}]`: color {c} outside 1..={}", file.k)));
        }
    }
    if let Some(missing) = colors.iter().position(Option::is_none) {
        let (u, v) = host.edges()[missing];
        return Err(Error::Parse(format!("field `edges`: edge ({u},{v}) has no color")));
    }
    EdgeColoring::new(host, file.k, colors.into_iter().flatten().collect())
        .map_err(|e| Error::Parse(format!("field `k`: {e}")))
}

/// Header fields of a witness file.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct WitnessHeader {
    pub theorem: String,
    pub params: FormulaParams,
    pub targets: Vec<TargetGraph>,
    pub claimed_value: i64,
}

pub fn witness_value(w: &Witness) -> Value {
    let mut v = coloring_value(&w.coloring);
    let spec = serde_json::to_value(&w.spec).expect("witness spec serializes");
    if let (Value::Object(out), Value::Object(header)) = (&mut v, spec) {
        for (k, val) in header {
            if k != "expected_order" {
                out.insert(k, val);
            }
        }
    }
    canonical(v)
}

pub fn witness_to_json(w: &Witness) -> String {
    to_canonical_string(witness_value(w))
}

#[derive(Deserialize)]
struct WitnessFile {
    #[serde(flatten)]
    header: WitnessHeader,
    host: HostKind,
    k: usize,
    edges: Vec<(usize, usize, Color)>,
}

pub fn witness_from_json(text: &str) -> Result<(WitnessHeader, EdgeColoring)> {
    let file: WitnessFile = serde_json::from_str(text).map_err(parse_err)?;
    let coloring = build(ColoringFile { host: file.host, k: file.k, edges: file.edges })?;
    Ok((file.header, coloring))
}
