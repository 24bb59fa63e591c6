//! Command implementations behind the `ramsey` binary, each producing a
//! [`Report`] whose canonical JSON depends only on the inputs.

use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::HostKind;
use crate::constructions::{witness, Inner};
use crate::detect::{violates_with, Violation};
use crate::error::{Error, ErrorClass, Result};
use crate::formulas::{catalog, default_grid, eval_formula, lookup, FormulaParams, FormulaValue};
use crate::json::{canonical, coloring_from_json, coloring_value, to_canonical_string, witness_from_json, witness_value};
use crate::search::{
    bipartite_search, decode_model, enumerate_models, parse_model, ramsey_search, to_cnf, ArrowQuery,
    SearchOptions, SearchOutcome, ENUMERATION_VARS,
};
use crate::target::TargetGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// A verification ran and the coloring avoids every target.
    Passed,
    /// A verification ran and found a monochromatic target.
    Failed,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub result: Value,
    #[serde(skip)]
    pub error_class: Option<ErrorClass>,
}

impl Report {
    fn ok(command: &str, inputs: Value, result: Value) -> Report {
        Report { command: command.into(), inputs, status: Status::Ok, result, error_class: None }
    }

    /// An error rendered as a report; precondition failures list each failed
    /// predicate.
    pub fn from_error(command: &str, inputs: Value, err: &Error) -> Report {
        let class = err.class();
        let mut body = json!({
            "class": class_name(class),
            "message": err.to_string(),
        });
        if let Error::Precondition { failed, .. } = err {
            body["failed_preconditions"] = json!(failed);
        }
        Report {
            command: command.into(),
            inputs,
            status: Status::Error,
            result: json!({ "error": body }),
            error_class: Some(class),
        }
    }

    pub fn payload(&self) -> Value {
        canonical(serde_json::to_value(self).expect("reports serialize"))
    }

    /// Canonical JSON: sorted keys, no timing, no whitespace.
    pub fn to_canonical_json(&self) -> String {
        to_canonical_string(self.payload())
    }

    /// The canonical payload with the wall time beside it.
    pub fn envelope(&self, wall_time_ms: u128) -> String {
        to_canonical_string(json!({ "report": self.payload(), "wall_time_ms": wall_time_ms }))
    }

    /// 0 success, 2 input or precondition error, 3 budget, 4 verification.
    pub fn exit_code(&self) -> i32 {
        match (self.status, self.error_class) {
            (Status::Failed, _) => 4,
            (Status::Error, Some(class)) => exit_code(class),
            (Status::Error, None) => 2,
            _ => 0,
        }
    }
}

pub fn exit_code(class: ErrorClass) -> i32 {
    match class {
        ErrorClass::Input => 2,
        ErrorClass::Budget => 3,
        ErrorClass::Verification => 4,
    }
}

fn class_name(class: ErrorClass) -> &'static str {
    match class {
        ErrorClass::Input => "input",
        ErrorClass::Budget => "budget",
        ErrorClass::Verification => "verification",
    }
}

fn violation_value(v: &Violation) -> Value {
    json!({
        "color": v.color,
        "target": v.embedding.target,
        "vertices": v.embedding.vertices,
        "edges": v.embedding.image_edges(),
    })
}

pub fn cmd_eval(id: &str, params: &FormulaParams) -> Result<Report> {
    let res = eval_formula(id, params)?;
    let inputs = json!({ "id": id, "params": params });
    Ok(Report::ok("eval", inputs, serde_json::to_value(&res).expect("formula results serialize")))
}

/// The report, and the witness file contents.
pub fn cmd_witness(id: &str, params: &FormulaParams, inner: Option<&Inner>) -> Result<(Report, String)> {
    let w = witness(id, params, inner)?;
    let mut inputs = json!({ "id": id, "params": params });
    if let Some(inner) = inner {
        inputs["inner"] = json!({ "coloring": coloring_value(&inner.coloring), "targets": inner.targets });
    }
    let file = witness_value(&w);
    let result = json!({
        "theorem": w.spec.theorem,
        "targets": w.spec.targets,
        "claimed_value": w.spec.claimed_value,
        "order": w.coloring.order(),
        "k": w.coloring.k(),
        "blocks": w.blocks,
        "verified": w.spec.verified,
        "certificate": file,
    });
    let text = to_canonical_string(file);
    Ok((Report::ok("witness", inputs, result), text))
}

/// Check a coloring (or witness) file. Targets default to the ones in a
/// witness header.
pub fn cmd_verify(text: &str, targets: Option<&[TargetGraph]>) -> Result<Report> {
    let (coloring, targets) = match targets {
        Some(t) => (coloring_from_json(text)?, t.to_vec()),
        None => {
            let (header, coloring) = witness_from_json(text).map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("{msg} (no --targets given and no witness header)")),
                other => other,
            })?;
            (coloring, header.targets)
        }
    };
    let found = violates_with(&coloring, &targets, Default::default())?;
    let inputs = json!({ "targets": targets, "host": coloring.host().kind(), "k": coloring.k() });
    let result = json!({
        "avoids_all_targets": found.is_none(),
        "violation": found.as_ref().map(violation_value),
    });
    let mut report = Report::ok("verify", inputs, result);
    report.status = if found.is_none() { Status::Passed } else { Status::Failed };
    Ok(report)
}

fn outcome_value(o: &SearchOutcome) -> Value {
    json!({
        "value": o.value,
        "steps": o.steps,
        "certificate": o.certificate.as_ref().map(coloring_value),
    })
}

pub fn cmd_search(targets: &[TargetGraph], lo: usize, hi: usize, opts: &SearchOptions) -> Result<Report> {
    let o = ramsey_search(targets, lo, hi, opts)?;
    let inputs = json!({ "targets": targets, "range": [lo, hi], "budget": opts.budget });
    Ok(Report::ok("search", inputs, outcome_value(&o)))
}

pub fn cmd_bsearch(targets: &[TargetGraph], lo: usize, hi: usize, opts: &SearchOptions) -> Result<Report> {
    let o = bipartite_search(targets, lo, hi, opts)?;
    let inputs = json!({ "targets": targets, "range": [lo, hi], "budget": opts.budget });
    Ok(Report::ok("bsearch", inputs, outcome_value(&o)))
}

/// The report, and the DIMACS text. Small instances are also solved by
/// enumeration and the first model is decoded and checked.
pub fn cmd_export_cnf(host: HostKind, targets: &[TargetGraph]) -> Result<(Report, String)> {
    let q = ArrowQuery::new(host, targets.to_vec())?;
    let inst = to_cnf(&q)?;
    let mut result = json!({
        "num_vars": inst.num_vars,
        "num_clauses": inst.clauses.len(),
        "satisfiable": Value::Null,
    });
    if inst.num_vars <= ENUMERATION_VARS {
        let models = enumerate_models(&inst, 1)?;
        result["satisfiable"] = json!(!models.is_empty());
        if let Some(m) = models.first() {
            let col = decode_model(&inst, m)?;
            if let Some(v) = violates_with(&col, targets, Default::default())? {
                return Err(Error::Verification(format!(
                    "decoded model has a color-{} {}",
                    v.color, v.embedding.target
                )));
            }
            result["first_model"] = coloring_value(&col);
        }
    }
    let inputs = json!({ "host": host, "targets": targets });
    Ok((Report::ok("export-cnf", inputs, result), inst.to_dimacs()))
}

/// Decode a solver model for the instance `(host, targets)` and verify it.
pub fn cmd_decode_model(host: HostKind, targets: &[TargetGraph], model: &str) -> Result<Report> {
    let q = ArrowQuery::new(host, targets.to_vec())?;
    let inst = to_cnf(&q)?;
    let values = parse_model(model, inst.num_vars)?;
    let satisfies = inst.satisfied_by(&values);
    let col = decode_model(&inst, &values)?;
    let found = violates_with(&col, targets, Default::default())?;
    let inputs = json!({ "host": host, "targets": targets });
    let result = json!({
        "satisfies_all_clauses": satisfies,
        "avoids_all_targets": found.is_none(),
        "violation": found.as_ref().map(violation_value),
        "coloring": coloring_value(&col),
    });
    let mut report = Report::ok("decode-model", inputs, result);
    report.status = if found.is_none() { Status::Passed } else { Status::Failed };
    Ok(report)
}

fn format_params(p: &FormulaParams) -> String {
    p.names()
        .map(|k| match (p.int(k), p.list(k)) {
            (Some(i), _) => format!("{k}={i}"),
            (_, Some(l)) => format!("{k}=[{}]", l.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
            _ => k.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_value(v: FormulaValue) -> String {
    match v {
        FormulaValue::Exact { value } => value.to_string(),
        FormulaValue::Upper { value } => format!("<= {value}"),
        FormulaValue::Bracket { lower, upper } => format!("[{lower}, {upper}]"),
        FormulaValue::Pair { first, second } => format!("({first}, {second})"),
    }
}

/// Evaluate catalog entries (all of them when `ids` is empty) over their
/// default grids. Returns the report and an aligned text table.
pub fn cmd_table(ids: &[String]) -> Result<(Report, String)> {
    let selected: Vec<&str> = if ids.is_empty() {
        catalog().iter().map(|e| e.id).collect()
    } else {
        ids.iter()
            .map(|id| lookup(id).map(|e| e.id).ok_or_else(|| Error::UnknownId(id.clone())))
            .collect::<Result<_>>()?
    };
    let mut rows = Vec::new();
    let mut text_rows = vec![["id".to_string(), "params".into(), "value".into(), "caveat".into()]];
    for id in &selected {
        for params in default_grid(id) {
            let res = eval_formula(id, &params)?;
            text_rows.push([
                id.to_string(),
                format_params(&params),
                format_value(res.value),
                if res.large_n_caveat { "large n".into() } else { String::new() },
            ]);
            rows.push(json!({
                "id": id,
                "params": params,
                "value": res.value,
                "large_n_caveat": res.large_n_caveat,
            }));
        }
    }
    let widths: Vec<usize> = (0..4).map(|i| text_rows.iter().map(|r| r[i].len()).max().unwrap_or(0)).collect();
    let mut text = String::new();
    for r in &text_rows {
        let line = format!("{:w0$}  {:w1$}  {:w2$}  {}", r[0], r[1], r[2], r[3], w0 = widths[0], w1 = widths[1], w2 = widths[2]);
        text.push_str(line.trim_end());
        text.push('\n');
    }
    let inputs = json!({ "ids": selected });
    Ok((Report::ok("table", inputs, json!({ "rows": rows })), text))
}
