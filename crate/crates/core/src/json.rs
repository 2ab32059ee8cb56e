//! Canonical JSON forms: coefficients are `"p/q"` strings, terms are listed in
//! the canonical order of the underlying maps.

use serde_json::{json, Value};

use crate::central::{CentralElement, EigenvalueRecord, Provenance};
use crate::enveloping::{EnvelopingElement, Generator};
use crate::shifted::{EstarPolynomial, ShiftedPolynomial};
use crate::superspace::Symbol;
use crate::{format_rational, parse_rational, Error, Partition, Result};

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(&format!("missing field {key:?}")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| bad(&format!("{key:?} is not a string")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(&format!("{what} is not an array")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| bad(&format!("{key:?} is not an integer")))
}

pub fn enveloping_to_json(x: &EnvelopingElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let word: Vec<Value> = w.iter().map(|g| json!([g.row.to_string(), g.col.to_string()])).collect();
            json!({ "word": word, "coeff": format_rational(c) })
        })
        .collect();
    json!({ "pbw_canonical": x.is_pbw_canonical(), "terms": terms })
}

pub fn enveloping_from_json(v: &Value) -> Result<EnvelopingElement> {
    let mut x = EnvelopingElement::zero();
    for term in array(field(v, "terms")?, "terms")? {
        let word = array(field(term, "word")?, "word")?
            .iter()
            .map(|pair| {
                let pair = array(pair, "generator")?;
                let sym = |i: usize| -> Result<Symbol> {
                    pair.get(i).and_then(Value::as_str).ok_or_else(|| bad("generator symbol"))?.parse()
                };
                if pair.len() != 2 {
                    return Err(bad("generator must have two symbols"));
                }
                Ok(Generator::new(sym(0)?, sym(1)?))
            })
            .collect::<Result<Vec<_>>>()?;
        x.add_term(word, parse_rational(str_field(term, "coeff")?)?);
    }
    Ok(x)
}

pub fn central_to_json(x: &CentralElement) -> Value {
    json!({
        "provenance": serde_json::to_value(x.provenance()).expect("provenance serializes"),
        "label": x.provenance().to_string(),
        "n": x.n(),
        "element": enveloping_to_json(x.body()),
    })
}

/// Parses and re-checks centrality.
pub fn central_from_json(v: &Value) -> Result<CentralElement> {
    let provenance: Provenance =
        serde_json::from_value(field(v, "provenance")?.clone()).map_err(|e| bad(&e.to_string()))?;
    let body = enveloping_from_json(field(v, "element")?)?;
    CentralElement::new(&body, usize_field(v, "n")?, provenance)
}

fn exponent_terms<'a>(terms: impl Iterator<Item = (&'a Vec<u32>, &'a crate::Rational)>) -> Vec<Value> {
    terms.map(|(e, c)| json!({ "exponents": e, "coeff": format_rational(c) })).collect()
}

fn parse_exponent_terms(v: &Value, n: usize) -> Result<Vec<(Vec<u32>, crate::Rational)>> {
    array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| {
            let e = array(field(t, "exponents")?, "exponents")?
                .iter()
                .map(|k| k.as_u64().map(|k| k as u32).ok_or_else(|| bad("exponent")))
                .collect::<Result<Vec<u32>>>()?;
            if e.len() != n {
                return Err(bad("exponent vector length"));
            }
            Ok((e, parse_rational(str_field(t, "coeff")?)?))
        })
        .collect()
}

pub fn shifted_to_json(p: &ShiftedPolynomial) -> Value {
    json!({ "n": p.n(), "terms": exponent_terms(p.terms()) })
}

pub fn shifted_from_json(v: &Value) -> Result<ShiftedPolynomial> {
    let n = usize_field(v, "n")?;
    let mut p = ShiftedPolynomial::zero(n);
    for (e, c) in parse_exponent_terms(v, n)? {
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn estar_to_json(p: &EstarPolynomial) -> Value {
    json!({ "n": p.n(), "terms": exponent_terms(p.terms()) })
}

pub fn estar_from_json(v: &Value) -> Result<EstarPolynomial> {
    let n = usize_field(v, "n")?;
    let mut p = EstarPolynomial::zero(n);
    for (e, c) in parse_exponent_terms(v, n)? {
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn eigenvalue_to_json(r: &EigenvalueRecord) -> Value {
    json!({ "mu": r.mu.to_string(), "value": format_rational(&r.value) })
}

pub fn eigenvalue_from_json(v: &Value) -> Result<EigenvalueRecord> {
    let mu: Partition = str_field(v, "mu")?.parse()?;
    Ok(EigenvalueRecord { mu, value: parse_rational(str_field(v, "value")?)? })
}
