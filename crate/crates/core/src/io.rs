//! JSON formats. Every document carries `"format_version": 1`.
//!
//! Coefficients are written as a rational string `"p/q"` when they lie in
//! `Q`, and otherwise as the list of rational strings of their coordinates
//! in the power basis `1, z, z^2, …` of `Q(ζ_r)`. Permutations are 1-based
//! one-line arrays; characters list the root indices `1..=r`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{Character, Composition, Permutation};
use crate::error::{Error, Result};
use crate::hecke::{HElement, HMonomial, MatrixOverH};
use crate::iso::FullImage;
use crate::rewrite::Variant;
use crate::scalar::{format_rational, parse_rational, CycScalar, CyclotomicField};
use crate::yokonuma::{TElement, TMonomial, YAlgebra, YElement, YMonomial, YParams};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub r: usize,
    pub n: usize,
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<String>>,
}

impl ParamsJson {
    pub fn from_params(p: &YParams) -> Self {
        match &p.variant {
            Variant::Affine => ParamsJson {
                r: p.r,
                n: p.n,
                variant: "affine".into(),
                d: None,
                v: None,
            },
            Variant::Cyclotomic { v } => ParamsJson {
                r: p.r,
                n: p.n,
                variant: "cyclotomic".into(),
                d: Some(v.len()),
                v: Some(v.iter().map(format_rational).collect()),
            },
        }
    }

    pub fn to_params(&self) -> Result<YParams> {
        let variant = match self.variant.as_str() {
            "affine" => Variant::Affine,
            "cyclotomic" => {
                let v = self
                    .v
                    .as_ref()
                    .ok_or_else(|| Error::Parse("cyclotomic params need \"v\"".into()))?;
                if let Some(d) = self.d {
                    if d != v.len() {
                        return Err(Error::ParameterMismatch(format!("d = {d} but {} parameters given", v.len())));
                    }
                }
                Variant::cyclotomic(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?)?
            }
            other => return Err(Error::Parse(format!("unknown variant {other:?}"))),
        };
        Ok(YParams {
            r: self.r,
            n: self.n,
            variant,
        })
    }
}

pub fn scalar_to_json(c: &CycScalar) -> Value {
    match c.to_rational() {
        Some(q) => Value::String(format_rational(&q)),
        None => Value::Array(c.coeffs().iter().map(|q| Value::String(format_rational(q))).collect()),
    }
}

pub fn scalar_from_json(v: &Value, field: &std::sync::Arc<CyclotomicField>) -> Result<CycScalar> {
    match v {
        Value::String(s) => Ok(CycScalar::from_rational(field, parse_rational(s)?)),
        Value::Number(n) => {
            let k = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer; use \"p/q\"")))?;
            Ok(CycScalar::from_integer(field, k))
        }
        Value::Array(items) => {
            let coeffs = items
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => n
                        .as_i64()
                        .map(|k| crate::scalar::Rational::from_integer(k.into()))
                        .ok_or_else(|| Error::Parse(format!("bad coordinate {n}"))),
                    _ => Err(Error::Parse("coordinates must be rational strings".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            // Longer coordinate lists are reduced modulo the cyclotomic polynomial.
            Ok(CycScalar::from_poly(field, coeffs))
        }
        _ => Err(Error::Parse(format!("bad coefficient {v}"))),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn term_list(v: &Value) -> Result<&Vec<Value>> {
    get(v, "terms")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"terms\" must be an array".into()))
}

pub fn y_terms_to_json(e: &YElement) -> Value {
    Value::Array(
        e.iter()
            .map(|(m, c)| json!({"coeff": scalar_to_json(c), "chi": m.chi, "x": m.x, "w": m.w}))
            .collect(),
    )
}

pub fn t_terms_to_json(e: &TElement) -> Value {
    Value::Array(
        e.iter()
            .map(|(m, c)| json!({"coeff": scalar_to_json(c), "t": m.t, "x": m.x, "w": m.w}))
            .collect(),
    )
}

pub fn h_terms_to_json(e: &HElement) -> Value {
    Value::Array(
        e.iter()
            .map(|(m, c)| json!({"coeff": scalar_to_json(c), "x": m.x, "w": m.w}))
            .collect(),
    )
}

pub fn y_element_to_json(params: &YParams, e: &YElement) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "params": ParamsJson::from_params(params),
        "terms": y_terms_to_json(e),
    })
}

pub fn t_element_to_json(params: &YParams, e: &TElement) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "params": ParamsJson::from_params(params),
        "terms": t_terms_to_json(e),
    })
}

/// Reads the `"params"` of a document and checks the format version.
pub fn read_params(doc: &Value) -> Result<YParams> {
    check_version(doc)?;
    from_value::<ParamsJson>(get(doc, "params")?, "params")?.to_params()
}

pub fn check_version(doc: &Value) -> Result<()> {
    match doc.get("format_version").and_then(Value::as_u64) {
        Some(FORMAT_VERSION) => Ok(()),
        Some(v) => Err(Error::Parse(format!("unsupported format_version {v}"))),
        None => Err(Error::Parse("missing \"format_version\"".into())),
    }
}

/// Parses the terms of a Yokonuma element written either in the
/// idempotent basis (`"chi"`) or the `t`-basis (`"t"`), and returns its
/// normal form. Exponents at or above `d` are reduced.
pub fn read_y_element(y: &YAlgebra, doc: &Value) -> Result<YElement> {
    let mut e_part = YElement::zero();
    let mut t_part = TElement::zero();
    for term in term_list(doc)? {
        let c = scalar_from_json(get(term, "coeff")?, y.field())?;
        let x: Vec<u32> = from_value(get(term, "x")?, "x")?;
        let w: Permutation = from_value(get(term, "w")?, "w")?;
        match (term.get("chi"), term.get("t")) {
            (Some(chi), None) => {
                let chi: Character = from_value(chi, "chi")?;
                let m = YMonomial::new(chi, x, w);
                e_part.add_scaled(&y.basis_element(&m)?, &c);
            }
            (None, Some(t)) => {
                let t: Vec<u32> = from_value(t, "t")?;
                t_part.add_term(TMonomial { t, x, w }, c);
            }
            _ => return Err(Error::Parse("each term needs exactly one of \"chi\" and \"t\"".into())),
        }
    }
    for (m, _) in &t_part {
        if m.x.len() != y.n() || m.w.degree() != y.n() {
            return Err(Error::SizeMismatch {
                expected: y.n(),
                got: m.x.len(),
            });
        }
    }
    e_part.add_assign(&y.from_t(&t_part)?);
    Ok(e_part)
}

pub fn read_h_terms(h: &crate::hecke::HAlgebra, terms: &Value) -> Result<HElement> {
    let list = terms
        .as_array()
        .ok_or_else(|| Error::Parse("Hecke terms must be an array".into()))?;
    let mut out = HElement::zero();
    for term in list {
        let c = scalar_from_json(get(term, "coeff")?, h.field())?;
        let m = HMonomial::new(from_value(get(term, "x")?, "x")?, from_value(get(term, "w")?, "w")?);
        out.add_scaled(&h.basis_element(&m)?, &c);
    }
    Ok(out)
}

pub fn matrix_to_json(a: &MatrixOverH) -> Value {
    let entries: Vec<Value> = a
        .nonzero_entries()
        .map(|(row, col, h)| json!({"row_chi": row, "col_chi": col, "value": h_terms_to_json(h)}))
        .collect();
    json!({"mu": a.mu, "entries": entries})
}

pub fn read_matrix(iso: &crate::iso::Isomorphism, v: &Value) -> Result<MatrixOverH> {
    let mu: Composition = from_value(get(v, "mu")?, "mu")?;
    let h = iso.hecke(&mu)?;
    let mut out = MatrixOverH::zero(&mu);
    let entries = get(v, "entries")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"entries\" must be an array".into()))?;
    for entry in entries {
        let row: Character = from_value(get(entry, "row_chi")?, "row_chi")?;
        let col: Character = from_value(get(entry, "col_chi")?, "col_chi")?;
        let value = read_h_terms(h, get(entry, "value")?)?;
        out.entry_mut(&row, &col)?.add_assign(&value);
    }
    Ok(out)
}

pub fn full_image_to_json(params: &YParams, image: &FullImage) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "params": ParamsJson::from_params(params),
        "blocks": image.values().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a full image; blocks not listed are zero.
pub fn read_full_image(iso: &crate::iso::Isomorphism, doc: &Value) -> Result<FullImage> {
    let mut image: FullImage = iso
        .compositions()
        .map(|mu| (mu.clone(), MatrixOverH::zero(mu)))
        .collect();
    let blocks = get(doc, "blocks")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"blocks\" must be an array".into()))?;
    for b in blocks {
        let a = read_matrix(iso, b)?;
        image
            .get_mut(&a.mu)
            .expect("read_matrix checks the composition")
            .add_assign(&a)?;
    }
    Ok(image)
}

/// A verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format_version: u64,
    pub check: String,
    pub version: String,
    pub params: ParamsJson,
    pub status: String,
    pub summary: Value,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(check: &str, params: &YParams, passed: bool, summary: Value, witnesses: Vec<Value>) -> Self {
        Report {
            format_version: FORMAT_VERSION,
            check: check.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            params: ParamsJson::from_params(params),
            status: if passed { "pass" } else { "fail" }.to_string(),
            summary,
            witnesses,
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

pub fn to_pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn alg() -> YAlgebra {
        YAlgebra::new(YParams::cyclotomic(3, 2, vec![Rational::from_integer(0.into()), Rational::new(1.into(), 2.into())])).unwrap()
    }

    #[test]
    fn element_round_trip() {
        let y = alg();
        let mut e = y.f(0);
        e.add_assign(&y.t(1));
        e.add_assign(&y.x(1).scaled(&CycScalar::zeta(y.field(), 2).unwrap()));
        let doc = y_element_to_json(y.params(), &e);
        let back = read_y_element(&y, &doc).unwrap();
        assert_eq!(back, e);
        assert_eq!(y_element_to_json(y.params(), &back), doc);
        assert_eq!(read_params(&doc).unwrap(), *y.params());
    }

    #[test]
    fn t_presentation_input() {
        let y = alg();
        let chi = Character::new(vec![2, 1]);
        let doc = t_element_to_json(y.params(), &y.idempotent_t(&chi).unwrap());
        assert_eq!(read_y_element(&y, &doc).unwrap(), y.idempotent(&chi).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        let y = alg();
        let doc = json!({"format_version": 1, "params": ParamsJson::from_params(y.params()),
            "terms": [{"coeff": "1", "x": [0, 0], "w": [1, 2]}]});
        assert!(matches!(read_y_element(&y, &doc), Err(Error::Parse(_))));
        let doc = json!({"format_version": 2, "params": ParamsJson::from_params(y.params())});
        assert!(read_params(&doc).is_err());
        let bad = ParamsJson {
            r: 2,
            n: 2,
            variant: "cyclotomic".into(),
            d: Some(3),
            v: Some(vec!["0".into()]),
        };
        assert!(matches!(bad.to_params(), Err(Error::ParameterMismatch(_))));
        let doc = json!({"format_version": 1, "params": ParamsJson::from_params(y.params()),
            "terms": [{"coeff": "1", "chi": [1, 1], "x": [0, 0], "w": [1, 1]}]});
        assert!(matches!(read_y_element(&y, &doc), Err(Error::InvalidPermutation(_)) | Err(Error::Parse(_))));
    }

    #[test]
    fn scalar_forms() {
        let f = CyclotomicField::new(3);
        let z = CycScalar::zeta(&f, 2).unwrap();
        assert_eq!(scalar_to_json(&z), json!(["0", "1"]));
        assert_eq!(scalar_from_json(&json!(["0", "1"]), &f).unwrap(), z);
        // z^2 = -1 - z
        assert_eq!(scalar_from_json(&json!(["0", "0", "1"]), &f).unwrap(), &(-&CycScalar::one(&f)) - &z);
        assert_eq!(scalar_from_json(&json!("-3/4"), &f).unwrap().to_string(), "-3/4");
    }
}
