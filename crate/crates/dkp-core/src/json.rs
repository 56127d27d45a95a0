//! On-disk representation format.
//!
//! ```json
//! {
//!   "D": 2,
//!   "dim": 3,
//!   "metric": [1, -1],
//!   "betas": [[[["0","0"], ["0","1"]], ...], ...]
//! }
//! ```
//!
//! Each matrix entry is a two-element array `[re, im]` of canonical
//! rational strings ("-3/2", "0", "1"). Matrices are row-major, one per
//! spacetime index. The format round-trips bit-exactly: writing a loaded
//! representation reproduces the same bytes.

use serde_json::{json, Value};

use crate::gaussian::{parse_rational, GaussianRational};
use crate::matrix::Matrix;
use crate::reps::{Metric, Representation};

/// Error with a JSON-path-style location, e.g. `betas[1][0][2]`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.into(),
        message: message.into(),
    }
}

pub fn representation_to_value(rep: &Representation) -> Value {
    let betas: Vec<Value> = rep
        .betas()
        .iter()
        .map(|b| {
            let rows: Vec<Value> = (0..b.rows())
                .map(|r| {
                    let row: Vec<Value> = (0..b.cols())
                        .map(|c| {
                            let e = b.at(r, c);
                            json!([e.re.to_string(), e.im.to_string()])
                        })
                        .collect();
                    Value::Array(row)
                })
                .collect();
            Value::Array(rows)
        })
        .collect();
    json!({
        "D": rep.d(),
        "dim": rep.dim(),
        "metric": rep.metric().signature().iter().map(|&s| s as i64).collect::<Vec<_>>(),
        "betas": betas,
    })
}

/// Deterministic pretty form: one matrix row per line, keys in sorted
/// order, so files are short enough to audit by eye and re-serializing
/// a loaded representation reproduces the same bytes.
pub fn representation_to_string(rep: &Representation) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"D\": {},\n", rep.d()));
    out.push_str("  \"betas\": [\n");
    for (mu, b) in rep.betas().iter().enumerate() {
        out.push_str("    [\n");
        for r in 0..b.rows() {
            let row: Vec<String> = (0..b.cols())
                .map(|c| {
                    let e = b.at(r, c);
                    format!("[{:?}, {:?}]", e.re.to_string(), e.im.to_string())
                })
                .collect();
            let row_comma = if r + 1 < b.rows() { "," } else { "" };
            out.push_str(&format!("      [{}]{row_comma}\n", row.join(", ")));
        }
        let mat_comma = if mu + 1 < rep.d() { "," } else { "" };
        out.push_str(&format!("    ]{mat_comma}\n"));
    }
    out.push_str("  ],\n");
    out.push_str(&format!("  \"dim\": {},\n", rep.dim()));
    let metric: Vec<String> = rep
        .metric()
        .signature()
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.push_str(&format!("  \"metric\": [{}]\n", metric.join(", ")));
    out.push('}');
    out
}

pub fn representation_from_str(s: &str) -> Result<Representation, SchemaError> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| err("<root>", format!("invalid JSON: {e}")))?;
    representation_from_value(&value)
}

pub fn representation_from_value(value: &Value) -> Result<Representation, SchemaError> {
    let obj = value
        .as_object()
        .ok_or_else(|| err("<root>", "expected a JSON object"))?;
    let d = obj
        .get("D")
        .and_then(Value::as_u64)
        .ok_or_else(|| err("D", "expected a positive integer"))? as usize;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| err("dim", "expected a positive integer"))? as usize;
    let metric_arr = obj
        .get("metric")
        .and_then(Value::as_array)
        .ok_or_else(|| err("metric", "expected an array of ±1"))?;
    let mut signature = Vec::with_capacity(metric_arr.len());
    for (k, v) in metric_arr.iter().enumerate() {
        match v.as_i64() {
            Some(1) => signature.push(1i8),
            Some(-1) => signature.push(-1i8),
            _ => return Err(err(format!("metric[{k}]"), "expected 1 or -1")),
        }
    }
    if signature.len() != d {
        return Err(err(
            "metric",
            format!("length {} does not match D={d}", signature.len()),
        ));
    }
    let metric = Metric::from_signature(signature).map_err(|e| err("metric", e.to_string()))?;

    let betas_arr = obj
        .get("betas")
        .and_then(Value::as_array)
        .ok_or_else(|| err("betas", "expected an array of matrices"))?;
    if betas_arr.len() != d {
        return Err(err(
            "betas",
            format!("expected {d} matrices, got {}", betas_arr.len()),
        ));
    }
    let mut betas = Vec::with_capacity(d);
    for (mu, mat) in betas_arr.iter().enumerate() {
        betas.push(matrix_from_value(mat, dim, &format!("betas[{mu}]"))?);
    }
    Representation::new(metric, betas).map_err(|e| err("betas", e.to_string()))
}

fn matrix_from_value(value: &Value, dim: usize, path: &str) -> Result<Matrix, SchemaError> {
    let rows = value
        .as_array()
        .ok_or_else(|| err(path, "expected an array of rows"))?;
    if rows.len() != dim {
        return Err(err(
            path,
            format!("expected {dim} rows, got {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        let row_arr = row
            .as_array()
            .ok_or_else(|| err(format!("{path}[{r}]"), "expected an array of entries"))?;
        if row_arr.len() != dim {
            return Err(err(
                format!("{path}[{r}]"),
                format!("expected {dim} entries, got {}", row_arr.len()),
            ));
        }
        let mut out_row = Vec::with_capacity(dim);
        for (c, entry) in row_arr.iter().enumerate() {
            out_row.push(entry_from_value(entry, &format!("{path}[{r}][{c}]"))?);
        }
        out.push(out_row);
    }
    Ok(Matrix::from_rows(out))
}

fn entry_from_value(value: &Value, path: &str) -> Result<GaussianRational, SchemaError> {
    let pair = value
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| err(path, "expected a [re, im] pair of rational strings"))?;
    let part = |idx: usize, name: &str| {
        pair[idx]
            .as_str()
            .ok_or_else(|| {
                err(
                    format!("{path}[{idx}]"),
                    format!("{name} part must be a string"),
                )
            })
            .and_then(|s| {
                parse_rational(s)
                    .map_err(|_| err(format!("{path}[{idx}]"), format!("invalid rational {s:?}")))
            })
    };
    Ok(GaussianRational::new(
        part(0, "real")?,
        part(1, "imaginary")?,
    ))
}
