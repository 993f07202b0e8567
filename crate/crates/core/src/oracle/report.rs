use serde::Serialize;
use serde_json::{Map, Value};

use crate::laurent::MultiLaurent;
use crate::qring::{QLaurentPoly, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The instance hits a vanishing denominator and was not evaluated.
    Degenerate,
}

/// Outcome of checking one identity on one instance. `witness` holds the
/// rendered difference of the two sides and is present only on failure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub instance: Value,
    pub status: Status,
    pub witness: Option<Value>,
}

impl VerificationReport {
    pub fn pass(identity: &str, instance: Value) -> Self {
        Self {
            identity: identity.to_string(),
            instance,
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(identity: &str, instance: Value, witness: Value) -> Self {
        Self {
            identity: identity.to_string(),
            instance,
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    pub fn degenerate(identity: &str, instance: Value) -> Self {
        Self {
            identity: identity.to_string(),
            instance,
            status: Status::Degenerate,
            witness: None,
        }
    }

    pub fn compare_poly(identity: &str, instance: Value, lhs: &QLaurentPoly, rhs: &QLaurentPoly) -> Self {
        if lhs == rhs {
            Self::pass(identity, instance)
        } else {
            Self::fail(identity, instance, to_value(&(lhs - rhs)))
        }
    }

    pub fn compare_rat(identity: &str, instance: Value, lhs: &QRat, rhs: &QRat) -> Self {
        if lhs == rhs {
            Self::pass(identity, instance)
        } else {
            Self::fail(identity, instance, to_value(&(lhs - rhs)))
        }
    }

    pub fn compare_multi(identity: &str, instance: Value, lhs: &MultiLaurent, rhs: &MultiLaurent) -> Self {
        match lhs.sub(rhs) {
            Ok(d) if d.is_zero() => Self::pass(identity, instance),
            Ok(d) => Self::fail(identity, instance, to_value(&d)),
            Err(e) => Self::fail(identity, instance, Value::String(e.to_string())),
        }
    }

    pub fn compare_int(identity: &str, instance: Value, lhs: i64, rhs: i64) -> Self {
        if lhs == rhs {
            Self::pass(identity, instance)
        } else {
            Self::fail(identity, instance, to_value(&QLaurentPoly::constant(lhs - rhs)))
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Combines several sub-checks on the same instance: the first failure
    /// wins, otherwise the first degenerate, otherwise pass.
    pub fn all_of(identity: &str, instance: Value, parts: Vec<VerificationReport>) -> Self {
        if let Some(f) = parts.iter().find(|r| r.failed()) {
            let mut w = Map::new();
            w.insert("check".into(), Value::String(f.identity.clone()));
            w.insert("difference".into(), f.witness.clone().unwrap_or(Value::Null));
            return Self::fail(identity, instance, Value::Object(w));
        }
        if parts.iter().any(|r| r.status == Status::Degenerate) {
            return Self::degenerate(identity, instance);
        }
        Self::pass(identity, instance)
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialisable")
}

/// Builds an instance record from `(key, value)` pairs.
#[macro_export]
macro_rules! instance {
    ($($k:literal => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = serde_json::Map::new();
        $( m.insert($k.to_string(), serde_json::to_value(&$v).expect("serialisable")); )*
        serde_json::Value::Object(m)
    }};
}
