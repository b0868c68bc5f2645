//! JSON encodings of codes, links, polynomials and label tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use vkt_core::labeling::{ArcLabels, CrossingWeightTable};
use vkt_core::{CrossingId, GaussCode, GaussEntry, LaurentPoly, OrderedTwoComponentLink, Passage, Sign};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad crossing label {0:?}")]
    Label(String),
    #[error("sign must be 1 or -1, got {0}")]
    Sign(i64),
    #[error("bad exponent {0:?}")]
    Exponent(String),
    #[error("bad coefficient for exponent {0}")]
    Coefficient(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
enum PassageRepr {
    O,
    U,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct EntryRepr {
    crossing: String,
    passage: PassageRepr,
    sign: i64,
}

impl From<&GaussEntry> for EntryRepr {
    fn from(e: &GaussEntry) -> Self {
        EntryRepr {
            crossing: e.crossing.to_string(),
            passage: match e.passage {
                Passage::Over => PassageRepr::O,
                Passage::Under => PassageRepr::U,
            },
            sign: e.sign.value(),
        }
    }
}

impl TryFrom<EntryRepr> for GaussEntry {
    type Error = JsonError;

    fn try_from(r: EntryRepr) -> Result<Self, JsonError> {
        if !CrossingId::is_valid_name(&r.crossing) {
            return Err(JsonError::Label(r.crossing));
        }
        let sign = Sign::from_value(r.sign).ok_or(JsonError::Sign(r.sign))?;
        let passage = match r.passage {
            PassageRepr::O => Passage::Over,
            PassageRepr::U => Passage::Under,
        };
        Ok(GaussEntry::new(CrossingId::new(r.crossing), passage, sign))
    }
}

pub fn entries_to_json(entries: &[GaussEntry]) -> Value {
    serde_json::to_value(entries.iter().map(EntryRepr::from).collect::<Vec<_>>()).expect("entries serialize")
}

pub fn entries_from_json(v: &Value) -> Result<Vec<GaussEntry>, JsonError> {
    let reprs: Vec<EntryRepr> = serde_json::from_value(v.clone())?;
    reprs.into_iter().map(GaussEntry::try_from).collect()
}

/// `[{"crossing": "1", "passage": "O", "sign": 1}, ...]`
pub fn code_to_json(code: &GaussCode) -> Value {
    entries_to_json(code.entries())
}

pub fn code_from_json(v: &Value) -> Result<GaussCode, JsonError> {
    entries_from_json(v).map(GaussCode::new)
}

/// `{"first": [entries], "second": [entries]}`
pub fn link_to_json(link: &OrderedTwoComponentLink) -> Value {
    json!({ "first": entries_to_json(&link.first), "second": entries_to_json(&link.second) })
}

pub fn link_from_json(v: &Value) -> Result<OrderedTwoComponentLink, JsonError> {
    let first = entries_from_json(v.get("first").unwrap_or(&Value::Null))?;
    let second = entries_from_json(v.get("second").unwrap_or(&Value::Null))?;
    Ok(OrderedTwoComponentLink::new(first, second))
}

fn int_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(c.to_string()),
    }
}

/// `{"-1": 1, "0": -2, "1": 1}`. Coefficients beyond `i64` are written as
/// decimal strings.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let map: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), int_to_json(c))).collect();
    Value::Object(map)
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, JsonError> {
    let map: BTreeMap<String, Value> = serde_json::from_value(v.clone())?;
    let mut p = LaurentPoly::zero();
    for (e, c) in map {
        let exp: i64 = e.parse().map_err(|_| JsonError::Exponent(e.clone()))?;
        let coef: BigInt = match &c {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => s.parse().ok(),
            _ => None,
        }
        .ok_or_else(|| JsonError::Coefficient(e.clone()))?;
        p.add_term(exp, coef);
    }
    Ok(p)
}

pub fn weights_to_json(weights: &CrossingWeightTable) -> Value {
    Value::Object(weights.iter().map(|(id, w)| (id.to_string(), Value::from(*w))).collect())
}

/// `{"labels": [ints], "weights": {"crossing": int}}`
pub fn labeling_to_json(labels: &ArcLabels, weights: &CrossingWeightTable) -> Value {
    json!({ "labels": labels.labels, "weights": weights_to_json(weights) })
}
