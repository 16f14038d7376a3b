//! JSON forms of scalars, elements, superforms, supermatrices and trig
//! polynomials.
//!
//! Integers that fit in `i64` are written as JSON numbers and larger ones as
//! decimal strings, so nothing is lost to floating point on the way through
//! other tools. Parsing accepts both spellings.

use std::sync::Arc;

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::algebra::{Element, GeneratorTable, Parity};
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::matrix::{BlockOrder, BlockShape, Graded, SuperMatrix};
use crate::scalar::{Coeff, Gaussian, Rational, Scalar, Surd};
use crate::trig::{ChartFunction, TrigPoly};

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

fn int_to_json(n: i128) -> Value {
    match i64::try_from(n) {
        Ok(k) => Value::from(k),
        Err(_) => Value::from(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<i128> {
    match v {
        Value::Number(k) => k
            .as_i64()
            .map(i128::from)
            .ok_or_else(|| parse_err("an integer", v)),
        Value::String(s) => s.parse().map_err(|_| parse_err("an integer", v)),
        _ => Err(parse_err("an integer", v)),
    }
}

fn rational_to_json(q: &Rational) -> Value {
    json!([int_to_json(*q.numer()), int_to_json(*q.denom())])
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v.as_array().map(Vec::as_slice) {
        Some([n, d]) => {
            let d = int_from_json(d)?;
            if d == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Ratio::new(int_from_json(n)?, d))
        }
        _ => Err(parse_err("[numerator, denominator]", v)),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}` in {v}")))
}

/// `{re: [n, d], im: [n, d], radical: m, pi: k}`.
pub fn scalar_to_json(s: &Scalar) -> Value {
    json!({
        "re": rational_to_json(&s.value.re),
        "im": rational_to_json(&s.value.im),
        "radical": s.surd.radical(),
        "pi": s.surd.pi_exp(),
    })
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let re = rational_from_json(field(v, "re")?)?;
    let im = rational_from_json(field(v, "im")?)?;
    let radical = field(v, "radical")?
        .as_u64()
        .ok_or_else(|| parse_err("a positive radical", v))?;
    let pi = field(v, "pi")?
        .as_i64()
        .and_then(|k| i32::try_from(k).ok())
        .ok_or_else(|| parse_err("an integer π exponent", v))?;
    let surd = Surd::new(radical, pi)
        .ok_or_else(|| Error::Parse(format!("radical {radical} is not square-free")))?;
    Ok(Scalar::new(Gaussian::new(re, im), surd))
}

/// A list of scalars with distinct surds.
pub fn coeff_to_json(c: &Coeff) -> Value {
    Value::Array(c.scalars().map(|s| scalar_to_json(&s)).collect())
}

pub fn coeff_from_json(v: &Value) -> Result<Coeff> {
    let items = v.as_array().ok_or_else(|| parse_err("a list of scalars", v))?;
    let mut c = Coeff::zero();
    for s in items {
        c.add_scalar(scalar_from_json(s)?);
    }
    Ok(c)
}

/// Terms `{coeff, even: {name: exp}, odd: [names]}` in monomial order. A
/// coefficient with several surds becomes several terms on one monomial.
pub fn element_to_json(x: &Element) -> Value {
    let mut out = Vec::new();
    for t in x.terms() {
        let even: Map<String, Value> = t
            .even
            .iter()
            .map(|(name, e)| (name.clone(), Value::from(*e)))
            .collect();
        for s in t.coeff.scalars() {
            out.push(json!({
                "coeff": scalar_to_json(&s),
                "even": even.clone(),
                "odd": t.odd.clone(),
            }));
        }
    }
    Value::Array(out)
}

pub fn element_from_json(table: &Arc<GeneratorTable>, v: &Value) -> Result<Element> {
    let items = v.as_array().ok_or_else(|| parse_err("a list of terms", v))?;
    let mut raw: Vec<(Scalar, Vec<String>)> = Vec::with_capacity(items.len());
    for t in items {
        let coeff = scalar_from_json(field(t, "coeff")?)?;
        let mut word = Vec::new();
        let even = field(t, "even")?
            .as_object()
            .ok_or_else(|| parse_err("an exponent map", t))?;
        for (name, e) in even {
            let e = e.as_u64().ok_or_else(|| parse_err("an exponent", e))?;
            word.extend(std::iter::repeat_n(name.clone(), e as usize));
        }
        for name in field(t, "odd")?
            .as_array()
            .ok_or_else(|| parse_err("a list of odd generators", t))?
        {
            let name = name.as_str().ok_or_else(|| parse_err("a generator name", name))?;
            word.push(name.to_string());
        }
        raw.push((coeff, word));
    }
    let words: Vec<Vec<&str>> = raw
        .iter()
        .map(|(_, w)| w.iter().map(String::as_str).collect())
        .collect();
    let pairs: Vec<(Scalar, &[&str])> = raw
        .iter()
        .zip(&words)
        .map(|((c, _), w)| (*c, w.as_slice()))
        .collect();
    Element::normalize(table, &pairs)
}

/// Terms `{coeff: <element>, wedge: ["da", "dη", ...]}` in canonical order.
pub fn form_to_json(f: &SuperForm) -> Value {
    Value::Array(
        f.terms()
            .into_iter()
            .map(|t| json!({"coeff": element_to_json(&t.coeff), "wedge": t.wedge}))
            .collect(),
    )
}

pub fn form_from_json(table: &Arc<GeneratorTable>, v: &Value) -> Result<SuperForm> {
    let items = v.as_array().ok_or_else(|| parse_err("a list of form terms", v))?;
    let mut out = SuperForm::zero(table);
    for t in items {
        let mut term = SuperForm::from(element_from_json(table, field(t, "coeff")?)?);
        for d in field(t, "wedge")?
            .as_array()
            .ok_or_else(|| parse_err("a list of differentials", t))?
        {
            let d = d.as_str().ok_or_else(|| parse_err("a differential name", d))?;
            let name = d
                .strip_prefix('d')
                .ok_or_else(|| Error::Parse(format!("`{d}` is not a differential")))?;
            term = &term * &SuperForm::differential(table, name)?;
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Values that serialize through this module; lets matrices of elements and
/// of forms share one format.
pub trait JsonValue: Sized {
    fn to_json(&self) -> Value;
    fn from_json(table: &Arc<GeneratorTable>, v: &Value) -> Result<Self>;
}

impl JsonValue for Element {
    fn to_json(&self) -> Value {
        element_to_json(self)
    }

    fn from_json(table: &Arc<GeneratorTable>, v: &Value) -> Result<Self> {
        element_from_json(table, v)
    }
}

impl JsonValue for SuperForm {
    fn to_json(&self) -> Value {
        form_to_json(self)
    }

    fn from_json(table: &Arc<GeneratorTable>, v: &Value) -> Result<Self> {
        form_from_json(table, v)
    }
}

fn shape_to_json(s: &BlockShape) -> Value {
    let order = match s.order {
        BlockOrder::EvenFirst => "even_first",
        BlockOrder::OddFirst => "odd_first",
    };
    json!({"even": s.even, "odd": s.odd, "order": order})
}

fn shape_from_json(v: &Value) -> Result<BlockShape> {
    let count = |k| {
        field(v, k)?
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| parse_err("a block size", v))
    };
    let order = match field(v, "order")?.as_str() {
        Some("even_first") => BlockOrder::EvenFirst,
        Some("odd_first") => BlockOrder::OddFirst,
        _ => return Err(parse_err("`even_first` or `odd_first`", v)),
    };
    Ok(BlockShape::new(count("even")?, count("odd")?, order))
}

fn parity_to_json(p: Option<Parity>) -> Value {
    match p {
        Some(Parity::Even) => "even".into(),
        Some(Parity::Odd) => "odd".into(),
        None => Value::Null,
    }
}

fn parity_from_json(v: &Value) -> Result<Option<Parity>> {
    match v {
        Value::Null => Ok(None),
        Value::String(s) if s == "even" => Ok(Some(Parity::Even)),
        Value::String(s) if s == "odd" => Ok(Some(Parity::Odd)),
        _ => Err(parse_err("`even`, `odd` or null", v)),
    }
}

/// `{rows: <shape>, cols: <shape>, parity, entries: [[...], ...]}`, row-major.
pub fn matrix_to_json<T: Graded + JsonValue>(m: &SuperMatrix<T>) -> Value {
    let entries: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array(m.row(i).iter().map(JsonValue::to_json).collect()))
        .collect();
    json!({
        "rows": shape_to_json(&m.rows()),
        "cols": shape_to_json(&m.cols()),
        "parity": parity_to_json(m.declared_parity()),
        "entries": entries,
    })
}

pub fn matrix_from_json<T: Graded + JsonValue>(
    table: &Arc<GeneratorTable>,
    v: &Value,
) -> Result<SuperMatrix<T>> {
    let rows = shape_from_json(field(v, "rows")?)?;
    let cols = shape_from_json(field(v, "cols")?)?;
    let parity = parity_from_json(field(v, "parity")?)?;
    let entries = field(v, "entries")?
        .as_array()
        .ok_or_else(|| parse_err("a list of rows", v))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("a row", row))?
                .iter()
                .map(|x| T::from_json(table, x))
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SuperMatrix::from_rows(table, rows, cols, parity, entries)
}

/// Terms `{cos_theta, sin_theta, cos_phi, sin_phi, coeff}` of a trig
/// polynomial.
pub fn trig_to_json(f: &TrigPoly) -> Value {
    Value::Array(
        f.terms()
            .map(|((p, q, r, s), c)| {
                json!({
                    "cos_theta": p,
                    "sin_theta": q,
                    "cos_phi": r,
                    "sin_phi": s,
                    "coeff": coeff_to_json(c),
                })
            })
            .collect(),
    )
}

pub fn trig_from_json(v: &Value) -> Result<TrigPoly> {
    let items = v.as_array().ok_or_else(|| parse_err("a list of trig terms", v))?;
    let mut out = TrigPoly::zero();
    for t in items {
        let exp = |k| {
            field(t, k)?
                .as_u64()
                .ok_or_else(|| parse_err("an exponent", t))
        };
        let c = coeff_from_json(field(t, "coeff")?)?;
        out = out.add(&TrigPoly::monomial(
            exp("cos_theta")? as u32,
            exp("sin_theta")? as u32,
            exp("cos_phi")? as u32,
            exp("sin_phi")? as u32,
            c,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monopole::Supersphere;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(int_to_json(5), json!(5));
        let big = i128::from(i64::MAX) + 1;
        assert_eq!(int_to_json(big), json!(big.to_string()));
        assert_eq!(int_from_json(&int_to_json(big)).unwrap(), big);
    }

    #[test]
    fn scalar_format() {
        let s = Scalar::ratio(-3, 4) * Scalar::sqrt(2) * Scalar::pi_pow(-1);
        let v = scalar_to_json(&s);
        assert_eq!(v, json!({"re": [-3, 4], "im": [0, 1], "radical": 2, "pi": -1}));
        assert_eq!(scalar_from_json(&v).unwrap(), s);
    }

    #[test]
    fn element_format() {
        let ss = Supersphere::shared();
        let x = (&ss.gen("a") * &ss.gen("η")).scale(Scalar::int(2));
        let v = element_to_json(&x);
        assert_eq!(
            v,
            json!([{"coeff": {"re": [2, 1], "im": [0, 1], "radical": 1, "pi": 0},
                    "even": {"a": 1}, "odd": ["η"]}])
        );
        assert_eq!(element_from_json(ss.table(), &v).unwrap(), x);
    }

    #[test]
    fn rejects_bad_input() {
        let ss = Supersphere::shared();
        assert!(element_from_json(ss.table(), &json!({"coeff": 1})).is_err());
        let bad_radical = json!({"re": [1, 1], "im": [0, 1], "radical": 4, "pi": 0});
        assert!(scalar_from_json(&bad_radical).is_err());
        let unknown = json!([{"coeff": {"re": [1, 1], "im": [0, 1], "radical": 1, "pi": 0},
                              "even": {"q": 1}, "odd": []}]);
        assert!(matches!(
            element_from_json(ss.table(), &unknown),
            Err(Error::UnknownGenerator(_))
        ));
    }
}
