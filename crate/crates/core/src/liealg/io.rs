use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::LieAlgebraData;
use crate::error::{Error, Result};
use crate::scalars::{QSqrt2, Ring};

fn index(item: &Value, key: &str, n: usize) -> Result<usize> {
    let raw = item
        .get(key)
        .ok_or_else(|| Error::Input(format!("bracket entry {item} lacks `{key}`")))?;
    let k = match raw {
        Value::Number(x) => x.as_u64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    };
    match k {
        Some(k) if k >= 1 && k as usize <= n => Ok(k as usize - 1),
        _ => Err(Error::Input(format!(
            "`{key}` = {raw} is not an index in 1..={n}"
        ))),
    }
}

fn token(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(x) => Ok(x.to_string()),
        _ => Err(Error::Input(format!(
            "coefficient {v} is not a scalar token"
        ))),
    }
}

impl<T: Ring> LieAlgebraData<T> {
    /// Reads `{"dim": n, "brackets": [{"i": i, "j": j, "c": {"k": token}}]}`
    /// with 1-based indices. Unlisted pairs commute.
    pub fn from_json_with(v: &Value, parse: impl Fn(&str) -> Result<T>) -> Result<Self> {
        let n = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("missing integer field `dim`".into()))?
            as usize;
        if n == 0 {
            return Err(Error::Input("`dim` must be positive".into()));
        }
        let mut g = Self::abelian(n);
        let brackets = match v.get("brackets") {
            None => return Ok(g),
            Some(Value::Array(a)) => a,
            Some(_) => return Err(Error::Input("`brackets` must be an array".into())),
        };
        let mut seen = BTreeMap::new();
        for item in brackets {
            let i = index(item, "i", n)?;
            let j = index(item, "j", n)?;
            if i == j {
                return Err(Error::Input(format!("bracket of e{} with itself", i + 1)));
            }
            if seen.insert((i.min(j), i.max(j)), ()).is_some() {
                return Err(Error::Input(format!(
                    "pair ({}, {}) listed twice",
                    i + 1,
                    j + 1
                )));
            }
            let c = item
                .get("c")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Input(format!("bracket entry {item} lacks object `c`")))?;
            let mut value = vec![T::zero(); n];
            for (k, tok) in c {
                let k: usize = k
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&k| (1..=n).contains(&k))
                    .ok_or_else(|| {
                        Error::Input(format!("component key `{k}` is not in 1..={n}"))
                    })?;
                value[k - 1] = parse(&token(tok)?)?;
            }
            g.set_bracket(i, j, value);
        }
        Ok(g)
    }

    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .nonzero_brackets()
            .map(|(i, j, v)| {
                let mut c = Map::new();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        c.insert((k + 1).to_string(), Value::String(x.to_string()));
                    }
                }
                json!({"i": i + 1, "j": j + 1, "c": c})
            })
            .collect();
        json!({"dim": self.dim(), "brackets": brackets})
    }
}

impl LieAlgebraData<QSqrt2> {
    pub fn from_json(v: &Value) -> Result<Self> {
        Self::from_json_with(v, QSqrt2::parse)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::Input(format!("malformed JSON: {e}")))?;
        Self::from_json(&v)
    }
}
