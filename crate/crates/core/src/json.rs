//! JSON interchange: algebras as dense structure-constant tensors of scalar
//! strings, optionally extended with quasitriangular data.

use serde_json::{json, Map, Value};

use crate::double::QuasiTriangular;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfParts, Tensor};
use crate::linalg::{to_sparse, FieldSpec, Matrix, Scalar};

fn schema<T>(path: impl Into<String>, message: impl Into<String>) -> Result<T> {
    Err(Error::Schema { path: path.into(), message: message.into() })
}

fn strings(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Serializes the structure constants in the dense interchange format.
pub fn algebra_to_json(h: &HopfAlgebra) -> Value {
    let n = h.dim();
    let field = h.field();
    let mult: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| strings(&crate::linalg::to_dense(field, n, h.mul_basis(i, j))))
                    .collect(),
            )
        })
        .collect();
    let comult: Vec<Value> = (0..n)
        .map(|i| {
            let mut rows = vec![vec![field.zero(); n]; n];
            for (j, k, c) in h.comult_basis(i) {
                rows[*j][*k] = c.clone();
            }
            Value::Array(rows.iter().map(|r| strings(r)).collect())
        })
        .collect();
    json!({
        "name": h.name(),
        "field": field,
        "dim": n,
        "basis": h.basis_names(),
        "mult": mult,
        "unit": strings(h.unit()),
        "comult": comult,
        "counit": strings(h.counit()),
        "antipode": h.antipode().to_rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
    })
}

/// The algebra JSON plus `r_matrix`, `u` and `monodromy` as dense
/// coordinate arrays over `A⊗A` (index `i·dim + j`).
pub fn quasitriangular_to_json(qt: &QuasiTriangular) -> Value {
    let n = qt.algebra.dim();
    let mut v = algebra_to_json(&qt.algebra);
    let obj = v.as_object_mut().expect("object");
    obj.insert("r_matrix".into(), strings(&qt.r_matrix.to_dense(n)));
    obj.insert("u".into(), strings(&qt.u));
    obj.insert("monodromy".into(), strings(&qt.monodromy.to_dense(n)));
    obj.insert("provenance".into(), Value::String(qt.provenance.clone()));
    v
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).map_or_else(|| schema(format!("$.{key}"), "missing field"), Ok)
}

fn array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a [Value]> {
    match v.as_array() {
        Some(a) if a.len() == len => Ok(a),
        Some(a) => schema(path, format!("expected {len} entries, found {}", a.len())),
        None => schema(path, "expected an array"),
    }
}

fn scalar(field: FieldSpec, v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s).or_else(|e| schema(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(field.from_i64(n.as_i64().expect("i64"))),
        _ => schema(path, "expected a scalar string"),
    }
}

fn vector(field: FieldSpec, v: &Value, path: &str, len: usize) -> Result<Vec<Scalar>> {
    array(v, path, len)?.iter().enumerate().map(|(i, x)| scalar(field, x, &format!("{path}[{i}]"))).collect()
}

fn parse_field(v: &Value) -> Result<FieldSpec> {
    let kind = v.get("kind").and_then(Value::as_str);
    match kind {
        Some("rational") => Ok(FieldSpec::Rational),
        Some("prime") => {
            let Some(p) = v.get("p").and_then(Value::as_u64) else {
                return schema("$.field.p", "expected a positive integer");
            };
            let p = u32::try_from(p).or_else(|_| schema("$.field.p", "too large"))?;
            FieldSpec::prime(p).or_else(|e| schema("$.field.p", e.to_string()))
        }
        _ => schema("$.field.kind", "expected \"rational\" or \"prime\""),
    }
}

/// A parsed input file: an algebra, and quasitriangular data when present.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(HopfAlgebra),
    QuasiTriangular(QuasiTriangular),
}

impl Loaded {
    pub fn algebra(&self) -> &HopfAlgebra {
        match self {
            Loaded::Algebra(h) => h,
            Loaded::QuasiTriangular(qt) => &qt.algebra,
        }
    }
}

/// Parses and shape-checks; the Hopf axioms are not run here.
pub fn algebra_from_value(v: &Value) -> Result<HopfAlgebra> {
    let Some(obj) = v.as_object() else {
        return schema("$", "expected an object");
    };
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return schema("$.name", "expected a string"),
        None => "unnamed".to_string(),
    };
    let field = parse_field(get(obj, "field")?)?;
    let n = match get(obj, "dim")?.as_u64() {
        Some(n) if n > 0 => n as usize,
        _ => return schema("$.dim", "expected a positive integer"),
    };
    let basis = match obj.get("basis") {
        None => (0..n).map(|i| format!("e{i}")).collect(),
        Some(b) => array(b, "$.basis", n)?
            .iter()
            .enumerate()
            .map(|(i, s)| s.as_str().map(str::to_string).map_or_else(|| schema(format!("$.basis[{i}]"), "expected a string"), Ok))
            .collect::<Result<Vec<_>>>()?,
    };
    let mut mult = Vec::with_capacity(n * n);
    let mult_v = array(get(obj, "mult")?, "$.mult", n)?;
    for (i, row) in mult_v.iter().enumerate() {
        for (j, prod) in array(row, &format!("$.mult[{i}]"), n)?.iter().enumerate() {
            mult.push(to_sparse(&vector(field, prod, &format!("$.mult[{i}][{j}]"), n)?));
        }
    }
    let mut comult = Vec::with_capacity(n);
    let comult_v = array(get(obj, "comult")?, "$.comult", n)?;
    for (i, mat) in comult_v.iter().enumerate() {
        let mut terms = Vec::new();
        for (j, row) in array(mat, &format!("$.comult[{i}]"), n)?.iter().enumerate() {
            for (k, c) in vector(field, row, &format!("$.comult[{i}][{j}]"), n)?.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((j, k, c));
                }
            }
        }
        comult.push(terms);
    }
    let unit = vector(field, get(obj, "unit")?, "$.unit", n)?;
    let counit = vector(field, get(obj, "counit")?, "$.counit", n)?;
    let rows = array(get(obj, "antipode")?, "$.antipode", n)?
        .iter()
        .enumerate()
        .map(|(r, row)| vector(field, row, &format!("$.antipode[{r}]"), n))
        .collect::<Result<Vec<_>>>()?;
    let antipode = Matrix::from_rows(field, rows)?;
    HopfAlgebra::from_parts(HopfParts { name, field, basis, mult, unit, comult, counit, antipode })
}

/// Reads an algebra, or an algebra with an `r_matrix`. Stored `u` and
/// `monodromy` fields must agree with the values recomputed from `R`.
pub fn load_value(v: &Value) -> Result<Loaded> {
    let h = algebra_from_value(v)?;
    let Some(r) = v.get("r_matrix") else {
        return Ok(Loaded::Algebra(h));
    };
    let n = h.dim();
    let field = h.field();
    let r = Tensor::from_dense(field, n, &vector(field, r, "$.r_matrix", n * n)?);
    let provenance = v.get("provenance").and_then(Value::as_str).unwrap_or("user-supplied").to_string();
    let qt = QuasiTriangular::new(h, r, provenance).or_else(|e| schema("$.r_matrix", e.to_string()))?;
    if let Some(u) = v.get("u") {
        if vector(field, u, "$.u", n)? != qt.u {
            return schema("$.u", "does not match the Drinfeld element of r_matrix");
        }
    }
    if let Some(q) = v.get("monodromy") {
        if vector(field, q, "$.monodromy", n * n)? != qt.monodromy.to_dense(n) {
            return schema("$.monodromy", "does not match R21·R");
        }
    }
    Ok(Loaded::QuasiTriangular(qt))
}

pub fn load_str(text: &str) -> Result<Loaded> {
    let v: Value = serde_json::from_str(text)?;
    load_value(&v)
}
