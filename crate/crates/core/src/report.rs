//! Canonical JSON input handling and deterministic run reports.
//!
//! Keys are emitted sorted (serde_json's default map is ordered), integers
//! that fit in an `i64` are emitted as JSON numbers and larger ones as
//! decimal strings, so byte-identical inputs yield byte-identical output.

use crate::error::{ArcError, Result};
use crate::lattice::LatticePoint;
use crate::laurent::Laurent;
use num::BigInt;
use serde_json::{json, Map, Value};

/// One labelled result with an optional expectation.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub label: String,
    pub value: Value,
    pub expected: Option<Value>,
    pub status: RowStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail,
    Info,
}

impl ReportRow {
    pub fn info(label: impl Into<String>, value: Value) -> Self {
        ReportRow {
            label: label.into(),
            value,
            expected: None,
            status: RowStatus::Info,
        }
    }

    pub fn checked(label: impl Into<String>, value: Value, expected: Value) -> Self {
        let status = if value == expected {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        };
        ReportRow {
            label: label.into(),
            value,
            expected: Some(expected),
            status,
        }
    }
}

/// A full run: the echoed canonical input plus result rows. `status` is
/// "pass" when no row failed, "fail" otherwise.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<ReportRow>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, row: ReportRow) {
        self.results.push(row);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != RowStatus::Fail)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert("label".into(), Value::String(r.label.clone()));
                m.insert("value".into(), r.value.clone());
                if let Some(e) = &r.expected {
                    m.insert("expected".into(), e.clone());
                }
                let status = match r.status {
                    RowStatus::Pass => "PASS",
                    RowStatus::Fail => "FAIL",
                    RowStatus::Info => "INFO",
                };
                m.insert("status".into(), Value::String(status.into()));
                Value::Object(m)
            })
            .collect();
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": rows,
            "status": if self.passed() { "pass" } else { "fail" },
        })
    }

    /// Fixed-width table for humans; one line per row plus a verdict.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let width = self
            .results
            .iter()
            .map(|r| r.label.len())
            .max()
            .unwrap_or(0);
        for r in &self.results {
            let status = match r.status {
                RowStatus::Pass => "PASS",
                RowStatus::Fail => "FAIL",
                RowStatus::Info => "    ",
            };
            out.push_str(&format!("{status} {:width$}  {}", r.label, r.value));
            if let (Some(e), RowStatus::Fail) = (&r.expected, r.status) {
                out.push_str(&format!("  (expected {e})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {}\n",
            self.command,
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}

pub fn bigint_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

/// A v-Laurent coefficient as a map from v-exponent (as a string key) to
/// integer coefficient.
pub fn laurent_to_json(p: &Laurent) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), bigint_to_json(c));
    }
    Value::Object(m)
}

pub fn point_to_json(p: &LatticePoint) -> Value {
    Value::Array(p.0.iter().map(bigint_to_json).collect())
}

fn schema_err(path: &str, message: &str) -> ArcError {
    ArcError::InvalidInput {
        path: path.into(),
        message: message.into(),
    }
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| schema_err(path, "expected an integer"))
}

/// Validate a cone descriptor `{"rank": r, "generators": [[int,...],...]}`
/// and bring it to canonical form: keys sorted, generator rows deduplicated
/// and ordered by (coordinate sum, lexicographic). Idempotent.
pub fn canonicalize_input(input: &Value) -> Result<Value> {
    let obj = input
        .as_object()
        .ok_or_else(|| schema_err("", "expected an object"))?;
    for key in obj.keys() {
        if key != "rank" && key != "generators" {
            return Err(schema_err(&format!("/{key}"), "unknown field"));
        }
    }
    let rank_v = obj
        .get("rank")
        .ok_or_else(|| schema_err("/rank", "missing field"))?;
    let rank = as_i64(rank_v, "/rank")?;
    if rank < 0 {
        return Err(schema_err("/rank", "rank must be nonnegative"));
    }
    let gens_v = obj
        .get("generators")
        .ok_or_else(|| schema_err("/generators", "missing field"))?;
    let gens = gens_v
        .as_array()
        .ok_or_else(|| schema_err("/generators", "expected an array"))?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let row = g
            .as_array()
            .ok_or_else(|| schema_err(&format!("/generators/{i}"), "expected an array"))?;
        if row.len() != rank as usize {
            return Err(schema_err(
                &format!("/generators/{i}"),
                &format!("expected {rank} coordinates, got {}", row.len()),
            ));
        }
        let mut coords = Vec::with_capacity(row.len());
        for (j, c) in row.iter().enumerate() {
            coords.push(as_i64(c, &format!("/generators/{i}/{j}"))?);
        }
        rows.push(coords);
    }
    rows.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    rows.dedup();
    Ok(json!({ "rank": rank, "generators": rows }))
}

/// Parse a canonical (or canonicalizable) cone descriptor into its rank and
/// generator points.
pub fn parse_cone_input(input: &Value) -> Result<(usize, Vec<LatticePoint>)> {
    let canonical = canonicalize_input(input)?;
    let rank = canonical["rank"].as_i64().unwrap() as usize;
    let gens = canonical["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            let coords: Vec<i64> = row
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_i64().unwrap())
                .collect();
            LatticePoint::from_i64s(&coords)
        })
        .collect();
    Ok((rank, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_sorts_and_dedups() {
        let a = json!({"generators": [[1,2],[1,0],[1,2]], "rank": 2});
        let b = json!({"rank": 2, "generators": [[1,0],[1,2]]});
        let ca = canonicalize_input(&a).unwrap();
        let cb = canonicalize_input(&b).unwrap();
        assert_eq!(ca, cb);
        assert_eq!(canonicalize_input(&ca).unwrap(), ca); // idempotent
        assert_eq!(
            serde_json::to_string(&ca).unwrap(),
            r#"{"generators":[[1,0],[1,2]],"rank":2}"#
        );
    }

    #[test]
    fn schema_errors_carry_pointer_paths() {
        let err = canonicalize_input(&json!({"rank": -1, "generators": []})).unwrap_err();
        assert!(matches!(err, ArcError::InvalidInput { ref path, .. } if path == "/rank"));
        let err =
            canonicalize_input(&json!({"rank": 2, "generators": [[1]]})).unwrap_err();
        assert!(
            matches!(err, ArcError::InvalidInput { ref path, .. } if path == "/generators/0")
        );
        let err = canonicalize_input(&json!({"rank": 2, "generators": [[1, "x"]]}))
            .unwrap_err();
        assert!(
            matches!(err, ArcError::InvalidInput { ref path, .. } if path == "/generators/0/1")
        );
        let err = canonicalize_input(&json!([1, 2])).unwrap_err();
        assert!(matches!(err, ArcError::InvalidInput { ref path, .. } if path.is_empty()));
    }

    #[test]
    fn report_status_aggregates_rows() {
        let mut r = RunReport::new("toric", json!({}));
        r.push(ReportRow::info("note", json!("x")));
        r.push(ReportRow::checked("eq", json!(3), json!(3)));
        assert!(r.passed());
        assert_eq!(r.to_json()["status"], "pass");
        r.push(ReportRow::checked("eq2", json!(3), json!(4)));
        assert!(!r.passed());
        assert_eq!(r.to_json()["status"], "fail");
        assert!(r.render_table().contains("FAIL eq2"));
    }

    #[test]
    fn value_rendering() {
        let big: BigInt = BigInt::from(i64::MAX) * 2;
        assert_eq!(bigint_to_json(&big), json!(big.to_string()));
        assert_eq!(bigint_to_json(&BigInt::from(7)), json!(7));
        let mut p = Laurent::zero();
        p.add_term(-2, &BigInt::from(5));
        assert_eq!(laurent_to_json(&p), json!({"-2": 5}));
        assert_eq!(point_to_json(&LatticePoint::from_i64s(&[1, -3])), json!([1, -3]));
    }
}
