//! JSON interchange format for Hopf data and Cayley tables.
//!
//! A document holds the field, the structure constants as sparse triple
//! lists with canonical scalar strings, and optionally named tensor
//! elements (twists). Keys are emitted sorted and scalars in canonical
//! form, so emit is deterministic and `parse(emit(x)) = x`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use serde_json::{json, Map, Value};

use crate::error::{HopfError, Result};
use crate::groups::FiniteGroup;
use crate::hopf::{HopfAlgebra, Tensor3, TensorElement};
use crate::scalars::{FieldSpec, Matrix, Scalar};

#[derive(Debug, Clone)]
pub struct InterchangeDocument {
    pub hopf: HopfAlgebra,
    pub tensor_elements: BTreeMap<String, TensorElement>,
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| HopfError::ParseError(format!("bad integer: {t}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(HopfError::ParseError("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Fp(v) => Value::String(v.to_string()),
        Scalar::Cyc(c) => Value::Array(
            c.iter()
                .map(|r| Value::String(rational_to_string(r)))
                .collect(),
        ),
    }
}

pub fn scalar_from_json(field: &FieldSpec, v: &Value) -> Result<Scalar> {
    match (field, v) {
        (FieldSpec::Prime { p }, Value::String(s)) => {
            let n = i128::from_str(s.trim())
                .map_err(|_| HopfError::ParseError(format!("bad residue: {s}")))?;
            Ok(Scalar::Fp(n.rem_euclid(*p as i128) as u64))
        }
        (FieldSpec::Prime { p }, Value::Number(n)) => {
            let i = n
                .as_i64()
                .ok_or_else(|| HopfError::ParseError("residue out of range".into()))?;
            Ok(Scalar::Fp(i.rem_euclid(*p as i64) as u64))
        }
        (FieldSpec::Cyclotomic { phi, .. }, Value::Array(items)) => {
            if items.len() > *phi {
                return Err(HopfError::ParseError(format!(
                    "cyclotomic coefficient vector longer than degree {phi}"
                )));
            }
            let mut c = vec![BigRational::from_integer(0.into()); *phi];
            for (i, item) in items.iter().enumerate() {
                let s = item
                    .as_str()
                    .ok_or_else(|| HopfError::ParseError("cyclotomic entry not a string".into()))?;
                c[i] = rational_from_string(s)?;
            }
            Ok(Scalar::Cyc(c))
        }
        (FieldSpec::Cyclotomic { .. }, Value::String(s)) => {
            // Rational constant shorthand.
            let r = rational_from_string(s)?;
            match field.zero() {
                Scalar::Cyc(mut c) => {
                    c[0] = r;
                    Ok(Scalar::Cyc(c))
                }
                _ => unreachable!(),
            }
        }
        _ => Err(HopfError::ParseError("scalar/field kind mismatch".into())),
    }
}

fn field_to_json(f: &FieldSpec) -> Value {
    match f {
        FieldSpec::Prime { p } => json!({"type": "Fp", "p": p}),
        FieldSpec::Cyclotomic { n, .. } => json!({"type": "cyclotomic", "n": n}),
    }
}

fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let t = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| HopfError::ParseError("field.type missing".into()))?;
    match t {
        "Fp" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| HopfError::ParseError("field.p missing".into()))?;
            if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                return Err(HopfError::ParseError(format!("{p} is not prime")));
            }
            Ok(FieldSpec::prime(p))
        }
        "cyclotomic" => {
            let n = v
                .get("n")
                .and_then(Value::as_u64)
                .ok_or_else(|| HopfError::ParseError("field.n missing".into()))?;
            if n == 0 {
                return Err(HopfError::ParseError("conductor must be >= 1".into()));
            }
            Ok(FieldSpec::cyclotomic(n))
        }
        other => Err(HopfError::ParseError(format!("unknown field type {other}"))),
    }
}

fn tensor3_to_json(field: &FieldSpec, t: &Tensor3) -> Value {
    let mut triples = Vec::new();
    for (i, j, k, v) in t.iter_nonzero(field) {
        triples.push(json!([i, j, k, scalar_to_json(v)]));
    }
    Value::Array(triples)
}

fn tensor3_from_json(field: &FieldSpec, n: usize, v: &Value) -> Result<Tensor3> {
    let items = v
        .as_array()
        .ok_or_else(|| HopfError::ParseError("expected triple list".into()))?;
    let mut t = Tensor3::zeros(field, n);
    for item in items {
        let arr = item
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| HopfError::ParseError("triple must be [i,j,k,c]".into()))?;
        let idx = |x: &Value| -> Result<usize> {
            x.as_u64()
                .map(|u| u as usize)
                .filter(|&u| u < n)
                .ok_or_else(|| HopfError::ParseError("index out of range".into()))
        };
        let (i, j, k) = (idx(&arr[0])?, idx(&arr[1])?, idx(&arr[2])?);
        t.set(i, j, k, scalar_from_json(field, &arr[3])?);
    }
    Ok(t)
}

fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn vector_from_json(field: &FieldSpec, n: usize, v: &Value) -> Result<Vec<Scalar>> {
    let items = v
        .as_array()
        .filter(|a| a.len() == n)
        .ok_or_else(|| HopfError::ParseError(format!("expected vector of length {n}")))?;
    items.iter().map(|x| scalar_from_json(field, x)).collect()
}

fn matrix_to_json(field: &FieldSpec, m: &Matrix) -> Value {
    let mut pairs = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !field.is_zero(&m[(i, j)]) {
                pairs.push(json!([i, j, scalar_to_json(&m[(i, j)])]));
            }
        }
    }
    Value::Array(pairs)
}

fn matrix_from_json(field: &FieldSpec, n: usize, v: &Value) -> Result<Matrix> {
    let items = v
        .as_array()
        .ok_or_else(|| HopfError::ParseError("expected pair list".into()))?;
    let mut m = Matrix::zeros(field, n, n);
    for item in items {
        let arr = item
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| HopfError::ParseError("entry must be [i,j,c]".into()))?;
        let idx = |x: &Value| -> Result<usize> {
            x.as_u64()
                .map(|u| u as usize)
                .filter(|&u| u < n)
                .ok_or_else(|| HopfError::ParseError("index out of range".into()))
        };
        m[(idx(&arr[0])?, idx(&arr[1])?)] = scalar_from_json(field, &arr[2])?;
    }
    Ok(m)
}

pub fn tensor_element_to_json(field: &FieldSpec, t: &TensorElement) -> Value {
    let _ = field;
    let n = t.n();
    let rows: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| scalar_to_json(t.get(i, j))).collect()))
        .collect();
    Value::Array(rows)
}

pub fn tensor_element_from_json(field: &FieldSpec, n: usize, v: &Value) -> Result<TensorElement> {
    let rows = v
        .as_array()
        .filter(|a| a.len() == n)
        .ok_or_else(|| HopfError::ParseError(format!("tensor element must be {n} rows")))?;
    let mut t = TensorElement::zeros(field, n);
    for (i, row) in rows.iter().enumerate() {
        let cols = row
            .as_array()
            .filter(|a| a.len() == n)
            .ok_or_else(|| HopfError::ParseError(format!("tensor row must have {n} entries")))?;
        for (j, item) in cols.iter().enumerate() {
            t.set(i, j, scalar_from_json(field, item)?);
        }
    }
    Ok(t)
}

pub fn emit_value(doc: &InterchangeDocument) -> Value {
    let h = &doc.hopf;
    let f = h.field();
    let mut obj = Map::new();
    obj.insert("field".into(), field_to_json(f));
    obj.insert("dim".into(), json!(h.dim()));
    obj.insert("basis".into(), json!(h.basis_names()));
    obj.insert("mul".into(), tensor3_to_json(f, h.mul_tensor()));
    obj.insert("comul".into(), tensor3_to_json(f, h.comul_tensor()));
    obj.insert("unit".into(), vector_to_json(h.unit_vec()));
    obj.insert("counit".into(), vector_to_json(h.counit_vec()));
    obj.insert("antipode".into(), matrix_to_json(f, h.antipode_matrix()));
    if !doc.tensor_elements.is_empty() {
        let mut tens = Map::new();
        for (name, t) in &doc.tensor_elements {
            tens.insert(name.clone(), tensor_element_to_json(f, t));
        }
        obj.insert("tensor_elements".into(), Value::Object(tens));
    }
    Value::Object(obj)
}

/// Canonical serialization: UTF-8 JSON, keys sorted, one trailing newline.
pub fn emit(doc: &InterchangeDocument) -> String {
    let mut s = serde_json::to_string_pretty(&emit_value(doc)).expect("serializable");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<InterchangeDocument> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| HopfError::ParseError(format!("invalid JSON: {e}")))?;
    parse_value(&v)
}

pub fn parse_value(v: &Value) -> Result<InterchangeDocument> {
    let field = field_from_json(
        v.get("field")
            .ok_or_else(|| HopfError::ParseError("field missing".into()))?,
    )?;
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| HopfError::ParseError("dim missing".into()))? as usize;
    let basis: Vec<String> = match v.get("basis") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| HopfError::ParseError("basis name not a string".into()))
            })
            .collect::<Result<_>>()?,
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        _ => return Err(HopfError::ParseError("basis must be an array".into())),
    };
    if basis.len() != dim {
        return Err(HopfError::ParseError("basis length != dim".into()));
    }
    let get = |k: &str| -> Result<&Value> {
        v.get(k)
            .ok_or_else(|| HopfError::ParseError(format!("{k} missing")))
    };
    let mul = tensor3_from_json(&field, dim, get("mul")?)?;
    let comul = tensor3_from_json(&field, dim, get("comul")?)?;
    let unit = vector_from_json(&field, dim, get("unit")?)?;
    let counit = vector_from_json(&field, dim, get("counit")?)?;
    let antipode = matrix_from_json(&field, dim, get("antipode")?)?;
    let hopf = HopfAlgebra::new(field.clone(), basis, mul, unit, comul, counit, antipode)?;
    let mut tensor_elements = BTreeMap::new();
    if let Some(Value::Object(tens)) = v.get("tensor_elements") {
        for (name, tv) in tens {
            tensor_elements.insert(name.clone(), tensor_element_from_json(&field, dim, tv)?);
        }
    }
    Ok(InterchangeDocument {
        hopf,
        tensor_elements,
    })
}

// ---------------------------------------------------------------------------
// Cayley tables.
// ---------------------------------------------------------------------------

pub fn cayley_to_json(g: &FiniteGroup) -> Value {
    json!({
        "elements": g.labels(),
        "table": g.table(),
    })
}

pub fn cayley_from_json(v: &Value) -> Result<FiniteGroup> {
    let table_v = v
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| HopfError::ParseError("table missing".into()))?;
    let mut table = Vec::with_capacity(table_v.len());
    for row in table_v {
        let r = row
            .as_array()
            .ok_or_else(|| HopfError::ParseError("table row not an array".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| HopfError::ParseError("table entry not an index".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        table.push(r);
    }
    let labels = match v.get("elements") {
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| HopfError::ParseError("element label not a string".into()))
                })
                .collect::<Result<Vec<String>>>()?,
        ),
        _ => None,
    };
    FiniteGroup::from_table(table, labels)
}

pub fn parse_cayley(text: &str) -> Result<FiniteGroup> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| HopfError::ParseError(format!("invalid JSON: {e}")))?;
    cayley_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, FiniteGroup};
    use crate::zoo;

    #[test]
    fn sweedler_round_trips() {
        let h = zoo::sweedler_h4(FieldSpec::rationals()).unwrap();
        let tw = zoo::sweedler_twist(&h, &h.field().one()).unwrap();
        let mut tensor_elements = BTreeMap::new();
        tensor_elements.insert("J".to_string(), tw.j().clone());
        let doc = InterchangeDocument {
            hopf: h,
            tensor_elements,
        };
        let text = emit(&doc);
        let back = parse(&text).unwrap();
        assert_eq!(back.hopf.mul_tensor(), doc.hopf.mul_tensor());
        assert_eq!(back.hopf.comul_tensor(), doc.hopf.comul_tensor());
        assert_eq!(back.hopf.unit_vec(), doc.hopf.unit_vec());
        assert_eq!(back.hopf.counit_vec(), doc.hopf.counit_vec());
        assert_eq!(back.hopf.antipode_matrix(), doc.hopf.antipode_matrix());
        assert_eq!(back.tensor_elements["J"], doc.tensor_elements["J"]);
        // Emitting again is byte-identical.
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn group_algebra_round_trips_gf() {
        let g = FiniteGroup::elementary_abelian(2, 2);
        let h = group_algebra(&g, FieldSpec::prime(5)).unwrap();
        let doc = InterchangeDocument {
            hopf: h,
            tensor_elements: BTreeMap::new(),
        };
        let text = emit(&doc);
        let back = parse(&text).unwrap();
        assert_eq!(emit(&back), text);
        assert!(back.hopf.verify().all_pass());
    }

    #[test]
    fn cayley_round_trip() {
        let g = FiniteGroup::symmetric_3();
        let text = serde_json::to_string(&cayley_to_json(&g)).unwrap();
        let back = parse_cayley(&text).unwrap();
        assert_eq!(back.table(), g.table());
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse("{").is_err());
        assert!(parse("{\"field\": {\"type\": \"Fp\", \"p\": 6}}").is_err());
        let missing = r#"{"field": {"type": "Fp", "p": 5}, "dim": 1}"#;
        assert!(parse(missing).is_err());
    }

    #[test]
    fn rational_strings() {
        let q = FieldSpec::rationals();
        let half = q.from_ratio(-1, 2);
        let v = scalar_to_json(&half);
        assert_eq!(v, json!(["-1/2"]));
        assert_eq!(scalar_from_json(&q, &v).unwrap(), half);
    }
}
