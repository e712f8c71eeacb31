//! JSON encoding and decoding of the core objects.
//!
//! Conventions: polynomial coefficients are arrays of `[re, im]` pairs
//! in ascending degree; exact rationals are `"p/q"` strings (or `"p"`
//! for integers); floats are JSON numbers; the point at infinity is the
//! token `"inf"`. Emission is deterministic: identical values produce
//! byte-identical text.

use serde_json::{json, Map, Value};

use crate::algebra::divisor::{Divisor, SpherePoint};
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::{MeromorphicForm, RationalFunction};
use crate::algebra::scalar::{rat_parse, ComplexScalar, Rat};
use crate::curves::{Hyperplane, ProjectiveCurve};
use crate::error::{Error, Result};
use crate::weierstrass::{PuncturedSphere, WData, WData3, WData4, WDataN};

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

// ---------------------------------------------------------------------
// Scalars and points
// ---------------------------------------------------------------------

pub fn rat_to_json(r: &Rat) -> Value {
    if r.is_integer() {
        Value::String(r.numer().to_string())
    } else {
        Value::String(r.to_string())
    }
}

/// `[re, im]`: exact Gaussian-rational parts as strings; anything else
/// (floats, scalars with a surd part) as float numbers.
pub fn scalar_to_json(s: &ComplexScalar) -> Value {
    if let Some(g) = s.as_gauss() {
        json!([rat_to_json(&g.re), rat_to_json(&g.im)])
    } else {
        let z = s.to_c64();
        json!([z.re, z.im])
    }
}

fn component_from_json(v: &Value) -> Result<(ComplexScalar, bool)> {
    match v {
        Value::String(s) => {
            let r = rat_parse(s).ok_or_else(|| malformed(format!("bad rational \"{}\"", s)))?;
            Ok((ComplexScalar::from_rat(r), true))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok((ComplexScalar::from_int(i), true))
            } else {
                let f = n.as_f64().ok_or_else(|| malformed("number out of range"))?;
                Ok((ComplexScalar::from_f64(f, 0.0), false))
            }
        }
        _ => Err(malformed("scalar component must be a number or \"p/q\" string")),
    }
}

/// Parse `[re, im]`. Integer numbers and `"p/q"` strings are exact;
/// non-integer numbers force the float representation.
pub fn scalar_from_json(v: &Value) -> Result<ComplexScalar> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| malformed("scalar must be an [re, im] pair"))?;
    let (re, re_exact) = component_from_json(&arr[0])?;
    let (im, im_exact) = component_from_json(&arr[1])?;
    let sum = &re + &(&im * &ComplexScalar::i());
    if re_exact && im_exact {
        Ok(sum)
    } else {
        Ok(sum.to_float())
    }
}

pub fn point_to_json(p: &SpherePoint) -> Value {
    match p {
        SpherePoint::Infinity => Value::String("inf".into()),
        SpherePoint::Finite(z) => scalar_to_json(z),
    }
}

pub fn point_from_json(v: &Value) -> Result<SpherePoint> {
    if v.as_str() == Some("inf") {
        return Ok(SpherePoint::infinity());
    }
    Ok(SpherePoint::Finite(scalar_from_json(v)?))
}

// ---------------------------------------------------------------------
// Polynomials, rational functions, forms
// ---------------------------------------------------------------------

pub fn poly_to_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Polynomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| malformed("polynomial must be an array of [re, im] pairs"))?;
    let coeffs = arr.iter().map(scalar_from_json).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_to_json(f.num()), "den": poly_to_json(f.den()) })
}

pub fn ratfunc_from_json(v: &Value) -> Result<RationalFunction> {
    let obj = v
        .as_object()
        .ok_or_else(|| malformed("rational function must be {\"num\":…, \"den\":…}"))?;
    let num = poly_from_json(obj.get("num").ok_or_else(|| malformed("missing \"num\""))?)?;
    let den = match obj.get("den") {
        Some(d) => poly_from_json(d)?,
        None => Polynomial::one(),
    };
    RationalFunction::new(num, den)
}

pub fn form_to_json(f: &MeromorphicForm) -> Value {
    ratfunc_to_json(&f.coeff)
}

pub fn form_from_json(v: &Value) -> Result<MeromorphicForm> {
    Ok(MeromorphicForm::new(ratfunc_from_json(v)?))
}

pub fn divisor_to_json(d: &Divisor) -> Value {
    Value::Array(
        d.entries()
            .iter()
            .map(|(p, m)| json!([point_to_json(p), m]))
            .collect(),
    )
}

// ---------------------------------------------------------------------
// Weierstrass data
// ---------------------------------------------------------------------

fn domain_to_json(obj: &mut Map<String, Value>, domain: &PuncturedSphere) {
    obj.insert(
        "punctures".into(),
        Value::Array(domain.punctures().iter().map(point_to_json).collect()),
    );
    obj.insert("genus".into(), json!(domain.genus()));
}

pub fn data_to_json(d: &WData) -> Value {
    let mut obj = Map::new();
    match d {
        WData::R3(d3) => {
            obj.insert("kind".into(), json!("r3"));
            obj.insert("h".into(), form_to_json(&d3.h_form));
            obj.insert("g".into(), ratfunc_to_json(&d3.g));
            domain_to_json(&mut obj, &d3.domain);
        }
        WData::R4(d4) => {
            obj.insert("kind".into(), json!("r4"));
            obj.insert("h".into(), form_to_json(&d4.h_form));
            obj.insert("g1".into(), ratfunc_to_json(&d4.g1));
            obj.insert("g2".into(), ratfunc_to_json(&d4.g2));
            domain_to_json(&mut obj, &d4.domain);
        }
        WData::RN(dn) => {
            obj.insert("kind".into(), json!("rn"));
            obj.insert(
                "phis".into(),
                Value::Array(dn.phis.iter().map(form_to_json).collect()),
            );
            domain_to_json(&mut obj, &dn.domain);
        }
    }
    Value::Object(obj)
}

fn domain_from_json(obj: &Map<String, Value>) -> Result<PuncturedSphere> {
    let punctures = match obj.get("punctures") {
        None => vec![],
        Some(v) => v
            .as_array()
            .ok_or_else(|| malformed("\"punctures\" must be an array"))?
            .iter()
            .map(point_from_json)
            .collect::<Result<Vec<_>>>()?,
    };
    let genus = obj.get("genus").and_then(Value::as_i64).unwrap_or(0);
    PuncturedSphere::new(punctures, genus)
}

pub fn data_from_json(v: &Value) -> Result<WData> {
    let obj = v.as_object().ok_or_else(|| malformed("data must be a JSON object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| malformed("missing \"kind\" (one of \"r3\", \"r4\", \"rn\")"))?;
    let domain = domain_from_json(obj)?;
    let field = |k: &str| obj.get(k).ok_or_else(|| malformed(format!("missing \"{}\"", k)));
    match kind {
        "r3" => Ok(WData::R3(WData3 {
            domain,
            h_form: form_from_json(field("h")?)?,
            g: ratfunc_from_json(field("g")?)?,
        })),
        "r4" => Ok(WData::R4(WData4 {
            domain,
            h_form: form_from_json(field("h")?)?,
            g1: ratfunc_from_json(field("g1")?)?,
            g2: ratfunc_from_json(field("g2")?)?,
        })),
        "rn" => {
            let phis = field("phis")?
                .as_array()
                .ok_or_else(|| malformed("\"phis\" must be an array of forms"))?
                .iter()
                .map(form_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(WData::RN(WDataN { domain, phis }))
        }
        other => Err(malformed(format!("unknown data kind \"{}\"", other))),
    }
}

pub fn data_from_str(s: &str) -> Result<WData> {
    let v: Value = serde_json::from_str(s).map_err(|e| malformed(format!("invalid JSON: {}", e)))?;
    data_from_json(&v)
}

// ---------------------------------------------------------------------
// Curves and hyperplane arrangements
// ---------------------------------------------------------------------

pub fn curve_to_json(c: &ProjectiveCurve) -> Value {
    json!({ "components": c.components().iter().map(poly_to_json).collect::<Vec<_>>() })
}

pub fn curve_from_json(v: &Value) -> Result<ProjectiveCurve> {
    let obj = v.as_object().ok_or_else(|| malformed("curve must be a JSON object"))?;
    let comps = obj
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("curve needs a \"components\" array of polynomials"))?
        .iter()
        .map(poly_from_json)
        .collect::<Result<Vec<_>>>()?;
    ProjectiveCurve::new(comps)
}

pub fn arrangement_to_json(hs: &[Hyperplane]) -> Value {
    json!({
        "hyperplanes": hs
            .iter()
            .map(|h| Value::Array(h.coeffs.iter().map(scalar_to_json).collect()))
            .collect::<Vec<_>>()
    })
}

pub fn arrangement_from_json(v: &Value) -> Result<Vec<Hyperplane>> {
    let obj = v.as_object().ok_or_else(|| malformed("arrangement must be a JSON object"))?;
    obj.get("hyperplanes")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("arrangement needs a \"hyperplanes\" array of coefficient rows"))?
        .iter()
        .map(|row| {
            let coeffs = row
                .as_array()
                .ok_or_else(|| malformed("hyperplane row must be an array of [re, im] pairs"))?
                .iter()
                .map(scalar_from_json)
                .collect::<Result<Vec<_>>>()?;
            Hyperplane::new(coeffs)
        })
        .collect()
}

/// Deterministic text form used for all emitted JSON.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}
