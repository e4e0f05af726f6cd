//! Polyhedron and Coxeter matrix files.
//!
//! Polyhedron: `{"faces": {"F1": [1, 2, 3, 4, 5], ...}, "angles": {"1-2": 2, ...}}`.
//! Every edge needs an angle key; a missing one is reported by validation.
//!
//! Coxeter matrix: `{"rank": 3, "labels": [[0, 1, 3], [1, 2, "inf"]]}`, with
//! omitted pairs meaning 2.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use hypgrowth_core::coxeter::{CoxeterMatrix, Label};
use hypgrowth_core::polyhedron::{edge_key, CombPolyhedron, Edge};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyhedronFile {
    faces: BTreeMap<String, Vec<u32>>,
    angles: BTreeMap<String, u32>,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Polyhedron(CombPolyhedron),
    Matrix(CoxeterMatrix),
}

impl Input {
    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        match self {
            Input::Polyhedron(p) => p.coxeter_matrix(),
            Input::Matrix(m) => m.clone(),
        }
    }

    pub fn into_polyhedron(self) -> Result<CombPolyhedron, CliError> {
        match self {
            Input::Polyhedron(p) => Ok(p),
            Input::Matrix(_) => Err(CliError::Usage("this command needs a polyhedron file".into())),
        }
    }
}

/// Parses `a-b` or `a,b`.
pub fn parse_edge(s: &str) -> Result<Edge, CliError> {
    let bad = || CliError::Usage(format!("bad edge `{s}`, expected A,B or A-B"));
    let (a, b) = s.split_once(['-', ',']).ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a == b {
        return Err(bad());
    }
    Ok(edge_key(a, b))
}

pub fn polyhedron_to_value(p: &CombPolyhedron) -> Value {
    let file = PolyhedronFile {
        faces: p.faces().clone(),
        angles: p.angles().iter().map(|(&(u, v), &m)| (format!("{u}-{v}"), m)).collect(),
    };
    serde_json::to_value(file).expect("plain data")
}

pub fn polyhedron_from_value(v: Value) -> Result<CombPolyhedron, CliError> {
    let file: PolyhedronFile =
        serde_json::from_value(v).map_err(|e| CliError::Usage(format!("bad polyhedron file: {e}")))?;
    let mut angles = BTreeMap::new();
    for (key, m) in &file.angles {
        let e = parse_edge(key)?;
        if angles.insert(e, *m).is_some() {
            return Err(CliError::Usage(format!("edge {}-{} labelled twice", e.0, e.1)));
        }
    }
    Ok(CombPolyhedron::new(file.faces, angles))
}

pub fn matrix_to_value(m: &CoxeterMatrix) -> Value {
    let labels: Vec<Value> = m
        .non_commuting_pairs()
        .map(|(i, j, l)| match l {
            Label::Finite(k) => json!([i, j, k]),
            Label::Infinite => json!([i, j, "inf"]),
        })
        .collect();
    json!({ "rank": m.rank(), "labels": labels })
}

pub fn matrix_from_value(v: &Value) -> Result<CoxeterMatrix, CliError> {
    let bad = |what: &str| CliError::Usage(format!("bad Coxeter matrix file: {what}"));
    let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
    if let Some(k) = obj.keys().find(|k| *k != "rank" && *k != "labels") {
        return Err(bad(&format!("unknown key `{k}`")));
    }
    let rank = obj.get("rank").and_then(Value::as_u64).ok_or_else(|| bad("missing rank"))? as usize;
    let mut entries = Vec::new();
    for entry in obj.get("labels").and_then(Value::as_array).into_iter().flatten() {
        let triple = entry.as_array().filter(|a| a.len() == 3).ok_or_else(|| bad("labels must be [i, j, m]"))?;
        let index = |x: &Value| x.as_u64().map(|k| k as usize).ok_or_else(|| bad("index is not a number"));
        let (i, j) = (index(&triple[0])?, index(&triple[1])?);
        let label = match &triple[2] {
            Value::String(s) if s == "inf" => Label::Infinite,
            Value::Number(n) => n
                .as_u64()
                .and_then(|k| u32::try_from(k).ok())
                .map(Label::Finite)
                .ok_or_else(|| bad("label is not a small integer"))?,
            _ => return Err(bad("label must be an integer or \"inf\"")),
        };
        entries.push((i, j, label));
    }
    Ok(CoxeterMatrix::from_labels(rank, entries)?)
}

/// Reads `path`, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("not JSON: {e}")))?;
    if v.get("faces").is_some() {
        polyhedron_from_value(v).map(Input::Polyhedron)
    } else if v.get("rank").is_some() {
        matrix_from_value(&v).map(Input::Matrix)
    } else {
        Err(CliError::Usage("expected a polyhedron (\"faces\") or a Coxeter matrix (\"rank\")".into()))
    }
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    parse_input(&read_text(path)?)
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}
