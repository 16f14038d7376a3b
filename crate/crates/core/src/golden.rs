//! Hand-transcribed reference values, compiled into the crate.
//!
//! The projectors are stored in base coordinates and compared after pulling
//! them back to the group generators, where equality is decidable.

use serde_json::Value;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::json::{form_from_json, matrix_from_json};
use crate::matrix::SuperMatrix;
use crate::monopole::{Sign, Supersphere};

const P_MINUS_1: &str = include_str!("../fixtures/p_minus_1.json");
const P_PLUS_1: &str = include_str!("../fixtures/p_plus_1.json");
const CONNECTION_MINUS_1: &str = include_str!("../fixtures/connection_minus_1.json");
const CHERN_FORM_MINUS_1: &str = include_str!("../fixtures/chern_form_minus_1.json");

/// A parsed fixture file.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: String,
    /// `"base"` or `"group"`.
    pub coordinates: String,
    pub value: Value,
}

fn load(name: &'static str, text: &str) -> Fixture {
    let v: Value = serde_json::from_str(text).expect("fixture is valid JSON");
    let s = |k: &str| v[k].as_str().expect("fixture header field").to_string();
    Fixture {
        name,
        description: s("description"),
        coordinates: s("coordinates"),
        value: v["value"].clone(),
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        load("p_minus_1", P_MINUS_1),
        load("p_plus_1", P_PLUS_1),
        load("connection_minus_1", CONNECTION_MINUS_1),
        load("chern_form_minus_1", CHERN_FORM_MINUS_1),
    ]
}

/// The charge-one projector of the given sign, in base coordinates.
pub fn projector(ss: &Supersphere, sign: Sign) -> Result<SuperMatrix<Element>> {
    let text = match sign {
        Sign::Minus => P_MINUS_1,
        Sign::Plus => P_PLUS_1,
    };
    matrix_from_json(ss.table(), &load("projector", text).value)
}

/// `A₋₁` in group generators.
pub fn connection_minus_1(ss: &Supersphere) -> Result<SuperForm> {
    form_from_json(ss.table(), &load("connection_minus_1", CONNECTION_MINUS_1).value)
}

/// `−(1/2πi)⟨dψ₋₁|dψ₋₁⟩` in group generators.
pub fn chern_form_minus_1(ss: &Supersphere) -> Result<SuperForm> {
    form_from_json(ss.table(), &load("chern_form_minus_1", CHERN_FORM_MINUS_1).value)
}

/// Entries where the pulled-back golden projector and the computed one
/// differ modulo the group relation, with the difference.
pub fn projector_mismatches(ss: &Supersphere, sign: Sign) -> Result<Vec<(usize, usize, Element)>> {
    let golden = projector(ss, sign)?.map(|x| ss.coordinates_to_group(x));
    let computed = ss.projector_for(sign, 1)?;
    if golden.rows() != computed.rows() || golden.cols() != computed.cols() {
        return Err(Error::Shape(format!(
            "golden projector is {}×{}, computed is {}×{}",
            golden.nrows(),
            golden.ncols(),
            computed.nrows(),
            computed.ncols()
        )));
    }
    golden
        .mismatches(&computed, |x| ss.reduce(x).is_zero())
        .map(|v| v.into_iter().map(|(i, j, x)| (i, j, ss.reduce(&x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        let ss = Supersphere::shared();
        for f in fixtures() {
            assert!(!f.description.is_empty());
            match f.name {
                "p_minus_1" | "p_plus_1" => {
                    assert_eq!(f.coordinates, "base");
                    matrix_from_json::<Element>(ss.table(), &f.value).unwrap();
                }
                _ => {
                    assert_eq!(f.coordinates, "group");
                    form_from_json(ss.table(), &f.value).unwrap();
                }
            }
        }
    }
}
