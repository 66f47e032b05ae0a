//! JSON encoding of scalars, fields, matrices and algebras.
//!
//! Scalars over ℚ and GF(p) are strings (`"3"`, `"-1/2"`); elements of
//! ℚ(√d) are objects `{"a": "p/q", "b": "p/q", "d": "n"}`. An algebra is
//! `{"dim": n, "field": {...}, "brackets": [{"i", "j", "coeffs"}]}` with
//! 1-based i < j, zero brackets omitted and pairs in lexicographic order.
//! Object keys come out sorted.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::algebra::StructureTensor;
use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Vector};
use crate::recognize::ClassificationReport;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn rational_text(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(q) => Value::String(rational_text(q)),
        Scalar::Modular { value, .. } => Value::String(value.to_string()),
        Scalar::Quadratic { a, b, d } => json!({
            "a": rational_text(a),
            "b": rational_text(b),
            "d": d.to_string(),
        }),
    }
}

fn str_field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn int_value(v: &Value, what: &str) -> Result<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| parse_err(format!("{what} must be an integer, got {v}")))
}

pub fn scalar_from_json(v: &Value, field: Field) -> Result<Scalar> {
    match v {
        Value::String(s) => {
            if s.contains("sqrt") {
                return Err(parse_err(format!("write ℚ(√d) scalars as objects, got {s:?}")));
            }
            Scalar::parse(s, field)
        }
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| parse_err(format!("non-integer number {n}; use \"p/q\"")))?;
            Ok(field.from_bigint(&BigInt::from(i)))
        }
        Value::Object(o) => {
            let d = int_value(str_field(o, "d")?, "d")?;
            if field != Field::Quadratic(d) {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: Field::quadratic(d)?,
                });
            }
            let part = |k: &str| -> Result<BigRational> {
                match str_field(o, k)? {
                    Value::String(s) => match Scalar::parse(s, Field::Rationals)? {
                        Scalar::Rational(q) => Ok(q),
                        _ => unreachable!("rational field"),
                    },
                    Value::Number(n) => n
                        .as_i64()
                        .map(|i| BigRational::from_integer(i.into()))
                        .ok_or_else(|| parse_err(format!("{k} must be \"p/q\""))),
                    other => Err(parse_err(format!("{k} must be a string, got {other}"))),
                }
            };
            Ok(Scalar::Quadratic {
                a: part("a")?,
                b: part("b")?,
                d,
            })
        }
        other => Err(parse_err(format!("not a scalar: {other}"))),
    }
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!({"kind": "rationals"}),
        Field::Prime(p) => json!({"kind": "prime", "p": p}),
        Field::Quadratic(d) => json!({"kind": "quadratic", "d": d}),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let o = v.as_object().ok_or_else(|| parse_err("field must be an object"))?;
    let kind = str_field(o, "kind")?
        .as_str()
        .ok_or_else(|| parse_err("field kind must be a string"))?;
    let f = match kind {
        "rationals" => Field::Rationals,
        "prime" => {
            let p = int_value(str_field(o, "p")?, "p")?;
            Field::prime(u64::try_from(p).map_err(|_| Error::BadPrime { p: 0 })?)?
        }
        "quadratic" => Field::quadratic(int_value(str_field(o, "d")?, "d")?)?,
        other => return Err(parse_err(format!("unknown field kind {other:?}"))),
    };
    Ok(f)
}

/// Field from its display form (`Q`, `GF(5)`, `Q(sqrt(2))`) or a few
/// aliases (`rationals`, `prime:5`, `quadratic:2`).
pub fn field_from_text(s: &str) -> Result<Field> {
    let t = s.trim();
    let bad = || parse_err(format!("unknown field {s:?}"));
    if t == "Q" || t == "rationals" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).or_else(|| t.strip_prefix("prime:")) {
        return Field::prime(p.trim().parse().map_err(|_| bad())?);
    }
    if let Some(d) = t
        .strip_prefix("Q(sqrt(")
        .and_then(|r| r.strip_suffix("))"))
        .or_else(|| t.strip_prefix("quadratic:"))
    {
        return Field::quadratic(d.trim().parse().map_err(|_| bad())?);
    }
    Err(bad())
}

pub fn vector_to_json(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(scalar_to_json).collect())
}

/// Rows of the matrix.
pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(&m.row(i))).collect())
}

pub fn matrix_from_json(v: &Value, field: Field) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| parse_err("matrix must be an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("matrix row must be an array"))?
                .iter()
                .map(|x| scalar_from_json(x, field))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

pub fn algebra_to_json(l: &StructureTensor) -> Value {
    let brackets: Vec<Value> = l
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, v)| json!({"i": i + 1, "j": j + 1, "coeffs": vector_to_json(&v)}))
        .collect();
    json!({
        "dim": l.dim(),
        "field": field_to_json(l.field()),
        "brackets": brackets,
    })
}

pub fn algebra_from_json(v: &Value) -> Result<StructureTensor> {
    let o = v.as_object().ok_or_else(|| parse_err("algebra must be an object"))?;
    let n = str_field(o, "dim")?
        .as_u64()
        .ok_or_else(|| parse_err("dim must be a nonnegative integer"))? as usize;
    let field = match o.get("field") {
        Some(f) => field_from_json(f)?,
        None => Field::Rationals,
    };
    let mut l = StructureTensor::abelian(field, n);
    let empty = Vec::new();
    let brackets = match o.get("brackets") {
        Some(b) => b.as_array().ok_or_else(|| parse_err("brackets must be an array"))?,
        None => &empty,
    };
    let mut seen = std::collections::BTreeSet::new();
    for b in brackets {
        let bo = b.as_object().ok_or_else(|| parse_err("bracket must be an object"))?;
        let idx = |k: &str| -> Result<usize> {
            let i = str_field(bo, k)?
                .as_u64()
                .ok_or_else(|| parse_err(format!("{k} must be a positive integer")))?;
            if i == 0 || i as usize > n {
                return Err(parse_err(format!("{k} = {i} outside 1..={n}")));
            }
            Ok(i as usize - 1)
        };
        let (i, j) = (idx("i")?, idx("j")?);
        if i >= j {
            return Err(parse_err(format!("bracket needs i < j, got ({}, {})", i + 1, j + 1)));
        }
        if !seen.insert((i, j)) {
            return Err(parse_err(format!("bracket ({}, {}) given twice", i + 1, j + 1)));
        }
        let coeffs = str_field(bo, "coeffs")?
            .as_array()
            .ok_or_else(|| parse_err("coeffs must be an array"))?;
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coeffs.len(),
            });
        }
        let cs = coeffs.iter().map(|c| scalar_from_json(c, field)).collect::<Result<Vec<_>>>()?;
        l.set_bracket(i, j, &Vector::new(field, cs)?)?;
    }
    Ok(l)
}

/// Parses JSON text; syntax errors carry line and column.
pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("malformed JSON: {e}")))
}

pub fn algebra_from_str(text: &str) -> Result<StructureTensor> {
    algebra_from_json(&parse_value(text)?)
}

pub fn classification_to_json(r: &ClassificationReport) -> Value {
    json!({
        "family": r.family.to_string(),
        "parameter_orbit": match &r.parameter_orbit {
            Some((a, b)) => json!([scalar_to_json(a), scalar_to_json(b)]),
            None => Value::Null,
        },
        "witness": matrix_to_json(&r.witness),
        "verified": r.verified,
        "field_used": field_to_json(r.field_used),
    })
}

pub fn tag_to_json(t: &FamilyTag) -> Value {
    Value::String(t.to_string())
}
