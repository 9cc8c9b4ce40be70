//! JSON file formats and their canonical serialization.
//!
//! Indices are 0-based. Scalars are strings in the ring named by the file's
//! `ring` field. Matrices of operators use the columns-are-images convention.
//! Representation, bimodule, tensor and form files may embed the algebra they
//! live on under `"algebra"`; [`store`](to_canonical_string) always embeds it
//! so that a written file is self-contained.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{default_basis, AlgebraKind, StructureTable};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::linalg::Matrix;
use crate::reps::{Bimodule, LinearMap, LinearRep};
use crate::scalar::{parse_scalar, Ring, Scalar};
use crate::ybe::{BilinearForm, TwoTensor};

pub const CONVENTION: &str = "columns-are-images";
pub const REPORT_FORMAT: u64 = 1;

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn check_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(&format!("{path}.{k}"), "unknown field")),
        None => Ok(()),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(path, format!("missing field `{key}`")))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn as_names(v: &Value, path: &str) -> Result<Vec<String>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_str(x, &format!("{path}[{i}]")).map(str::to_string))
        .collect()
}

fn scalar(v: &Value, ring: &Ring, path: &str) -> Result<Scalar> {
    let text = as_str(v, path)?;
    parse_scalar(text, ring).map_err(|e| schema(path, e.to_string()))
}

fn ring_field(obj: &Map<String, Value>, path: &str) -> Result<Ring> {
    match obj.get("ring") {
        None => Ok(Ring::rationals()),
        Some(v) => {
            let p = format!("{path}.ring");
            Ring::new(as_names(v, &p)?).map_err(|e| schema(&p, e.to_string()))
        }
    }
}

fn ring_json(ring: &Ring) -> Value {
    json!(ring.vars())
}

fn in_range(index: usize, dim: usize, path: &str) -> Result<usize> {
    if index < dim {
        Ok(index)
    } else {
        Err(schema(path, Error::IndexOutOfRange { index, dim }.to_string()))
    }
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Schema { .. } => e,
        other => schema(path, other.to_string()),
    }
}

pub fn algebra_from_json(v: &Value, path: &str) -> Result<StructureTable> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["dim", "basis", "ring", "kind", "table"])?;
    let dim = as_index(field(obj, path, "dim")?, &format!("{path}.dim"))?;
    let basis = match obj.get("basis") {
        Some(b) => {
            let p = format!("{path}.basis");
            let names = as_names(b, &p)?;
            if names.len() != dim {
                return Err(schema(&p, format!("{} names for dimension {dim}", names.len())));
            }
            names
        }
        None => default_basis("e", dim),
    };
    let ring = ring_field(obj, path)?;
    let kind_path = format!("{path}.kind");
    let kind = match as_str(field(obj, path, "kind")?, &kind_path)? {
        "anticommutative" => AlgebraKind::Anticommutative,
        "general" => AlgebraKind::General,
        other => return Err(schema(&kind_path, format!("unknown kind `{other}`"))),
    };
    let table_path = format!("{path}.table");
    let mut entries = Vec::new();
    for (n, row) in as_array(field(obj, path, "table")?, &table_path)?.iter().enumerate() {
        let p = format!("{table_path}[{n}]");
        let items = as_array(row, &p)?;
        if items.len() != 4 {
            return Err(schema(&p, "expected [i, j, k, \"coeff\"]"));
        }
        let i = in_range(as_index(&items[0], &format!("{p}[0]"))?, dim, &format!("{p}[0]"))?;
        let j = in_range(as_index(&items[1], &format!("{p}[1]"))?, dim, &format!("{p}[1]"))?;
        let k = in_range(as_index(&items[2], &format!("{p}[2]"))?, dim, &format!("{p}[2]"))?;
        let c = scalar(&items[3], &ring, &format!("{p}[3]"))?;
        if kind == AlgebraKind::Anticommutative && i >= j && !c.is_zero() {
            return Err(schema(&p, format!("anticommutative files list only pairs i < j, got ({i}, {j})")));
        }
        entries.push((i, j, k, c));
    }
    let table = match kind {
        AlgebraKind::Anticommutative => StructureTable::anticommutative(basis, ring, entries),
        AlgebraKind::General => StructureTable::from_entries(basis, ring, kind, entries),
    };
    table.map_err(|e| at(path, e))
}

pub fn algebra_to_json(a: &StructureTable) -> Value {
    let table: Vec<Value> = a
        .entries()
        .filter(|&(i, j, _, _)| a.kind() == AlgebraKind::General || i < j)
        .map(|(i, j, k, c)| json!([i, j, k, c.to_string()]))
        .collect();
    json!({
        "dim": a.dim(),
        "basis": a.basis(),
        "ring": ring_json(a.ring()),
        "kind": a.kind().as_str(),
        "table": table,
    })
}

fn embedded_algebra(obj: &Map<String, Value>, path: &str, given: Option<&StructureTable>) -> Result<StructureTable> {
    match (obj.get("algebra"), given) {
        (Some(v), _) => algebra_from_json(v, &format!("{path}.algebra")),
        (None, Some(a)) => Ok(a.clone()),
        (None, None) => Err(schema(path, "no `algebra` field and no algebra supplied")),
    }
}

fn operator_list(v: &Value, ring: &Ring, count: usize, m: usize, path: &str) -> Result<Vec<Matrix>> {
    let list = as_array(v, path)?;
    if list.len() != count {
        return Err(schema(path, format!("{} matrices for an algebra of dimension {count}", list.len())));
    }
    list.iter()
        .enumerate()
        .map(|(n, mat)| {
            let p = format!("{path}[{n}]");
            let rows = as_array(mat, &p)?;
            if rows.len() != m {
                return Err(schema(&p, format!("{} rows, expected {m}", rows.len())));
            }
            let data = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let rp = format!("{p}[{i}]");
                    let cells = as_array(row, &rp)?;
                    if cells.len() != m {
                        return Err(schema(&rp, format!("{} columns, expected {m}", cells.len())));
                    }
                    cells.iter().enumerate().map(|(j, c)| scalar(c, ring, &format!("{rp}[{j}]"))).collect()
                })
                .collect::<Result<Vec<Vec<Scalar>>>>()?;
            Matrix::from_rows(data).map_err(|e| at(&p, e))
        })
        .collect()
}

fn operators_json(ops: &[Matrix]) -> Value {
    Value::Array(
        ops.iter()
            .map(|m| {
                Value::Array(
                    (0..m.rows())
                        .map(|i| Value::Array((0..m.cols()).map(|j| json!(m.get(i, j).to_string())).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn convention(obj: &Map<String, Value>, path: &str) -> Result<()> {
    if let Some(v) = obj.get("convention") {
        let p = format!("{path}.convention");
        if as_str(v, &p)? != CONVENTION {
            return Err(schema(&p, format!("only `{CONVENTION}` is supported")));
        }
    }
    Ok(())
}

fn space_basis(obj: &Map<String, Value>, path: &str, m: usize) -> Result<Vec<String>> {
    match obj.get("basis") {
        Some(b) => {
            let p = format!("{path}.basis");
            let names = as_names(b, &p)?;
            if names.len() != m {
                return Err(schema(&p, format!("{} names for dimension {m}", names.len())));
            }
            Ok(names)
        }
        None => Ok(default_basis("v", m)),
    }
}

pub fn rep_from_json(v: &Value, path: &str, algebra: Option<&StructureTable>) -> Result<LinearRep> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["space_dim", "basis", "ring", "matrices", "convention", "algebra"])?;
    convention(obj, path)?;
    let algebra = embedded_algebra(obj, path, algebra)?;
    let m = as_index(field(obj, path, "space_dim")?, &format!("{path}.space_dim"))?;
    let basis = space_basis(obj, path, m)?;
    let ring = ring_field(obj, path)?;
    let action = operator_list(field(obj, path, "matrices")?, &ring, algebra.dim(), m, &format!("{path}.matrices"))?;
    LinearRep::new(algebra, basis, action).map_err(|e| at(path, e))
}

fn ring_of(ops: &[&[Matrix]]) -> Ring {
    let mut ring = Ring::rationals();
    for m in ops.iter().flat_map(|s| s.iter()) {
        if let Ok(r) = m.ring() {
            ring = ring.unify(&r).unwrap_or(ring);
        }
    }
    ring
}

pub fn rep_to_json(r: &LinearRep) -> Value {
    json!({
        "space_dim": r.space_dim(),
        "basis": r.space_basis,
        "ring": ring_json(&ring_of(&[&r.action])),
        "convention": CONVENTION,
        "matrices": operators_json(&r.action),
        "algebra": algebra_to_json(&r.algebra),
    })
}

pub fn bimodule_from_json(v: &Value, path: &str, algebra: Option<&StructureTable>) -> Result<Bimodule> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["space_dim", "basis", "ring", "left", "right", "convention", "algebra"])?;
    convention(obj, path)?;
    let algebra = embedded_algebra(obj, path, algebra)?;
    let m = as_index(field(obj, path, "space_dim")?, &format!("{path}.space_dim"))?;
    let basis = space_basis(obj, path, m)?;
    let ring = ring_field(obj, path)?;
    let left = operator_list(field(obj, path, "left")?, &ring, algebra.dim(), m, &format!("{path}.left"))?;
    let right = operator_list(field(obj, path, "right")?, &ring, algebra.dim(), m, &format!("{path}.right"))?;
    Bimodule::new(algebra, basis, left, right).map_err(|e| at(path, e))
}

pub fn bimodule_to_json(b: &Bimodule) -> Value {
    json!({
        "space_dim": b.space_dim(),
        "basis": b.space_basis,
        "ring": ring_json(&ring_of(&[&b.left, &b.right])),
        "convention": CONVENTION,
        "left": operators_json(&b.left),
        "right": operators_json(&b.right),
        "algebra": algebra_to_json(&b.algebra),
    })
}

/// Sparse `{rows, cols, ring?, entries}` body shared by map, tensor and form
/// files.
fn sparse_from_json(obj: &Map<String, Value>, path: &str) -> Result<Matrix> {
    let rows = as_index(field(obj, path, "rows")?, &format!("{path}.rows"))?;
    let cols = as_index(field(obj, path, "cols")?, &format!("{path}.cols"))?;
    let ring = ring_field(obj, path)?;
    let mut m = Matrix::zeros(rows, cols);
    let ep = format!("{path}.entries");
    for (n, e) in as_array(field(obj, path, "entries")?, &ep)?.iter().enumerate() {
        let p = format!("{ep}[{n}]");
        let items = as_array(e, &p)?;
        if items.len() != 3 {
            return Err(schema(&p, "expected [i, j, \"coeff\"]"));
        }
        let i = in_range(as_index(&items[0], &format!("{p}[0]"))?, rows, &format!("{p}[0]"))?;
        let j = in_range(as_index(&items[1], &format!("{p}[1]"))?, cols, &format!("{p}[1]"))?;
        let c = scalar(&items[2], &ring, &format!("{p}[2]"))?;
        let sum = m.get(i, j).try_add(&c).map_err(|e| schema(&p, e.to_string()))?;
        m.set(i, j, sum);
    }
    Ok(m)
}

fn sparse_to_json(m: &Matrix) -> Map<String, Value> {
    let entries: Vec<Value> = m
        .entries()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| json!([i, j, c.to_string()]))
        .collect();
    let mut obj = Map::new();
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    obj.insert("ring".into(), ring_json(&m.ring().unwrap_or_else(|_| Ring::rationals())));
    obj.insert("entries".into(), Value::Array(entries));
    obj
}

pub fn map_from_json(v: &Value, path: &str) -> Result<LinearMap> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["rows", "cols", "ring", "entries", "convention"])?;
    convention(obj, path)?;
    Ok(LinearMap::new(sparse_from_json(obj, path)?))
}

pub fn map_to_json(t: &LinearMap) -> Value {
    let mut obj = sparse_to_json(&t.matrix);
    obj.insert("convention".into(), json!(CONVENTION));
    Value::Object(obj)
}

pub fn tensor_from_json(v: &Value, path: &str, algebra: Option<&StructureTable>) -> Result<TwoTensor> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["rows", "cols", "ring", "entries", "algebra"])?;
    let algebra = embedded_algebra(obj, path, algebra)?;
    TwoTensor::new(algebra, sparse_from_json(obj, path)?).map_err(|e| at(path, e))
}

pub fn tensor_to_json(r: &TwoTensor) -> Value {
    let mut obj = sparse_to_json(&r.coeffs);
    obj.insert("algebra".into(), algebra_to_json(&r.algebra));
    Value::Object(obj)
}

pub fn form_from_json(v: &Value, path: &str, algebra: Option<&StructureTable>) -> Result<BilinearForm> {
    let obj = object(v, path)?;
    check_keys(obj, path, &["rows", "cols", "ring", "entries", "algebra"])?;
    let algebra = embedded_algebra(obj, path, algebra)?;
    BilinearForm::new(algebra, sparse_from_json(obj, path)?).map_err(|e| at(path, e))
}

pub fn form_to_json(b: &BilinearForm) -> Value {
    let mut obj = sparse_to_json(&b.matrix);
    obj.insert("algebra".into(), algebra_to_json(&b.algebra));
    Value::Object(obj)
}

pub fn fixture_to_json(f: &Fixture) -> Value {
    match f {
        Fixture::Algebra(a) => algebra_to_json(a),
        Fixture::Rep(r) => rep_to_json(r),
        Fixture::Map(t) => map_to_json(t),
        Fixture::Tensor(r) => tensor_to_json(r),
        Fixture::Form(b) => form_to_json(b),
    }
}

/// Loads a document of the kind `like` is.
pub fn fixture_from_json(v: &Value, path: &str, like: &Fixture) -> Result<Fixture> {
    Ok(match like {
        Fixture::Algebra(_) => Fixture::Algebra(algebra_from_json(v, path)?),
        Fixture::Rep(_) => Fixture::Rep(rep_from_json(v, path, None)?),
        Fixture::Map(_) => Fixture::Map(map_from_json(v, path)?),
        Fixture::Tensor(_) => Fixture::Tensor(tensor_from_json(v, path, None)?),
        Fixture::Form(_) => Fixture::Form(form_from_json(v, path, None)?),
    })
}

/// Canonical text: object keys sorted, arrays of scalars on one line, two
/// space indentation and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        _ => false,
    }
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (n, k) in keys.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&map[*k], depth + 1, out);
                if n + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&close);
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (n, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, depth + 1, out);
                if n + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&close);
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (n, x) in items.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn read_json(path: &Path) -> Result<Value> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: shown.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path: shown, source })
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, to_canonical_string(v)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn round_trip(v: &Value) -> String {
        to_canonical_string(v)
    }

    #[test]
    fn algebra_round_trip() {
        let a = fixtures::example2_1();
        let v = algebra_to_json(&a);
        let back = algebra_from_json(&v, "$").unwrap();
        assert_eq!(back, a);
        assert_eq!(round_trip(&algebra_to_json(&back)), round_trip(&v));
    }

    #[test]
    fn diagonal_entry_in_anticommutative_file_is_rejected() {
        let v = json!({"dim": 2, "kind": "anticommutative", "table": [[0, 0, 1, "1"]]});
        let err = algebra_from_json(&v, "$").unwrap_err();
        assert!(matches!(err, Error::Schema { ref path, .. } if path == "$.table[0]"), "{err}");
    }

    #[test]
    fn errors_carry_paths() {
        let v = json!({"dim": 2, "kind": "general", "table": [[0, 1, 5, "1"]]});
        match algebra_from_json(&v, "$").unwrap_err() {
            Error::Schema { path, .. } => assert_eq!(path, "$.table[0][2]"),
            e => panic!("{e}"),
        }
        let v = json!({"dim": 2, "kind": "general", "table": [[0, 1, 1, "1 +"]]});
        match algebra_from_json(&v, "$").unwrap_err() {
            Error::Schema { path, .. } => assert_eq!(path, "$.table[0][3]"),
            e => panic!("{e}"),
        }
        let v = json!({"dim": 2, "kind": "general", "table": [], "extra": 1});
        assert!(algebra_from_json(&v, "$").is_err());
    }

    #[test]
    fn parametric_objects_round_trip() {
        let t = fixtures::example2_5_f3();
        let back = map_from_json(&map_to_json(&t), "$").unwrap();
        assert_eq!(back, t);
        let f = fixtures::example3_5_form();
        let back = form_from_json(&form_to_json(&f), "$", None).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rep_and_bimodule_round_trip() {
        let r = fixtures::sl2_v();
        assert_eq!(rep_from_json(&rep_to_json(&r), "$", None).unwrap(), r);
        let b = Bimodule::regular(&fixtures::example4_1()).dual();
        assert_eq!(bimodule_from_json(&bimodule_to_json(&b), "$", None).unwrap(), b);
    }

    #[test]
    fn tensor_needs_an_algebra() {
        let v = json!({"rows": 1, "cols": 1, "entries": []});
        assert!(tensor_from_json(&v, "$", None).is_err());
    }

    #[test]
    fn canonical_layout() {
        let v = json!({"b": [1, 2], "a": {"x": [[0, "1"]]}});
        assert_eq!(to_canonical_string(&v), "{\n  \"a\": {\n    \"x\": [\n      [0, \"1\"]\n    ]\n  },\n  \"b\": [1, 2]\n}\n");
    }
}
