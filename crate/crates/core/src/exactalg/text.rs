//! Parsing and JSON forms of integer Laurent polynomials.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use super::canonical::{canonicalize, CanonicalPoly};
use super::laurent::{IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial {input:?}: {reason}")]
pub struct PolyParseError {
    pub input: String,
    pub reason: String,
}

impl FromStr for IntPoly {
    type Err = PolyParseError;

    /// Accepts forms like `2t^2+27t+2`, `-t^-1 + 3`, `2*t^2`, and the
    /// Unicode minus sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PolyParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, c) in cleaned.chars().enumerate() {
            let after_caret = cur.ends_with('^');
            if (c == '+' || c == '-') && i > 0 && !after_caret {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        terms.push(cur);
        let mut out = IntPoly::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coef, exp) = match body.find('t') {
                None => (body, 0),
                Some(pos) => {
                    let coef = &body[..pos];
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.trim_matches(|c| c == '{' || c == '}').parse::<i64>().ok())
                            .ok_or_else(|| err("bad exponent"))?
                    };
                    (if coef.is_empty() { "1" } else { coef }, exp)
                }
            };
            let mut c: BigInt = coef.parse().map_err(|_| err("bad coefficient"))?;
            if neg {
                c = -c;
            }
            out.add_term(exp, &c);
        }
        Ok(out)
    }
}

impl FromStr for CanonicalPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p: IntPoly = s.parse()?;
        canonicalize(&p).map_err(|e| PolyParseError {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

fn int_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// JSON object `{shift, coeffs, text}`; coefficients lowest exponent first,
/// as numbers when they fit in `i64` and decimal strings otherwise.
pub fn int_poly_to_json(p: &IntPoly) -> Value {
    let (shift, coeffs) = p.to_dense();
    serde_json::json!({
        "shift": shift,
        "coeffs": coeffs.iter().map(int_to_json).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn int_poly_from_json(v: &Value) -> Option<IntPoly> {
    let shift = v.get("shift")?.as_i64()?;
    let coeffs = v
        .get("coeffs")?
        .as_array()?
        .iter()
        .map(int_from_json)
        .collect::<Option<Vec<_>>>()?;
    Some(IntPoly::from_coeffs(shift, coeffs))
}

/// Rational coefficients serialize as `[numerator, denominator]` pairs.
pub fn rat_poly_to_json(p: &RatPoly) -> Value {
    let (shift, coeffs) = p.to_dense();
    let coeffs: Vec<Value> = coeffs
        .iter()
        .map(|c| Value::Array(vec![int_to_json(c.numer()), int_to_json(c.denom())]))
        .collect();
    serde_json::json!({ "shift": shift, "coeffs": coeffs })
}

pub fn rat_poly_from_json(v: &Value) -> Option<RatPoly> {
    let shift = v.get("shift")?.as_i64()?;
    let coeffs = v
        .get("coeffs")?
        .as_array()?
        .iter()
        .map(|pair| {
            let pair = pair.as_array()?;
            let (n, d) = (int_from_json(pair.first()?)?, int_from_json(pair.get(1)?)?);
            (d != BigInt::from(0)).then(|| BigRational::new(n, d))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(RatPoly::from_coeffs(shift, coeffs))
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        int_poly_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        int_poly_from_json(&v).ok_or_else(|| D::Error::custom("expected {shift, coeffs} polynomial"))
    }
}

impl Serialize for CanonicalPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.poly().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CanonicalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = IntPoly::deserialize(d)?;
        let c = canonicalize(&p).map_err(D::Error::custom)?;
        if c.poly() != &p {
            return Err(D::Error::custom("polynomial is not in canonical form"));
        }
        Ok(c)
    }
}
