//! JSON rendering rules shared by every report.
//!
//! Integers of magnitude at most 2^53 are emitted as JSON numbers; anything
//! larger becomes a decimal string so that double-based parsers downstream do
//! not silently round it. Parsing accepts either form.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};
use serde_json::Value;

/// Largest magnitude rendered as a bare JSON number.
pub const MAX_SAFE_INTEGER: i64 = 1 << 53;

pub fn big_to_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn value_to_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => {
            let s = s.trim();
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            s.parse().ok()
        }
        _ => None,
    }
}

pub fn serialize_big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => s.serialize_i64(v),
        _ => s.serialize_str(&x.to_string()),
    }
}

pub fn serialize_big_seq<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(big_to_value))
}

pub fn serialize_big_opt<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => serialize_big(x, s),
        None => s.serialize_none(),
    }
}

pub fn deserialize_big<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let v = Value::deserialize(d)?;
    value_to_big(&v).ok_or_else(|| D::Error::custom(format!("expected an integer, found {v}")))
}

/// True when `x` would be emitted as a string rather than a number.
pub fn needs_string(x: &BigInt) -> bool {
    x.abs() > BigInt::from(MAX_SAFE_INTEGER)
}
