//! Canonical text output: a pretty notation that parses back, and a structured
//! JSON tree meant for golden diffs.

use std::str::FromStr;

use serde_json::{json, Map, Value as Json};

use super::eval::Value;
use crate::decorated::{Decoration, DecoratedNumber};
use crate::dimtype::DimensionType;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::group::PrimeMembership;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Pretty,
    Structured,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "structured" => Ok(Format::Structured),
            other => Err(format!("unknown format `{other}` (pretty|structured)")),
        }
    }
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Pretty => match value {
            Value::Type(d) => d.to_string(),
            Value::Nat(n) => n.to_string(),
            Value::Group(g) => g.to_string(),
            Value::Sigma(s) => s.to_string(),
            Value::Bool(b) => b.to_string(),
        },
        Format::Structured => {
            serde_json::to_string_pretty(&to_tree(value)).expect("JSON trees always serialize")
        }
    }
}

fn nat_json(n: ExtNat) -> Json {
    match n {
        ExtNat::Finite(v) => json!(v),
        ExtNat::Infinite => json!("inf"),
    }
}

fn entry_json(e: DecoratedNumber) -> Json {
    json!({ "base": nat_json(e.base()), "decoration": e.decoration().name() })
}

fn membership_json(m: &PrimeMembership) -> Json {
    json!({ "Z_p": m.cyclic, "Z_p^inf": m.circle, "Z_(p)": m.local })
}

/// The structured tree for `value`. Object keys are sorted, so output is stable.
pub fn to_tree(value: &Value) -> Json {
    match value {
        Value::Type(d) => {
            let exceptions: Map<String, Json> = d
                .exceptions()
                .map(|(p, e)| (p.to_string(), entry_json(e)))
                .collect();
            json!({
                "kind": "type",
                "q": nat_json(d.q()),
                "default": entry_json(d.default_entry()),
                "exceptions": exceptions,
            })
        }
        Value::Nat(n) => json!({ "kind": "number", "value": nat_json(*n) }),
        Value::Bool(b) => json!({ "kind": "boolean", "value": b }),
        Value::Group(g) => json!({ "kind": "group", "value": g.to_string() }),
        Value::Sigma(s) => {
            let exceptions: Map<String, Json> = s
                .membership
                .exceptions()
                .iter()
                .map(|(p, m)| (p.to_string(), membership_json(m)))
                .collect();
            json!({
                "kind": "sigma",
                "q": s.contains_q,
                "default": membership_json(s.membership.default_value()),
                "exceptions": exceptions,
            })
        }
    }
}

fn bad(message: impl Into<String>) -> Error {
    Error::Validity(format!("structured input: {}", message.into()))
}

fn nat_from(j: &Json) -> Result<ExtNat> {
    match j {
        Json::Number(n) => n.as_u64().map(ExtNat::Finite).ok_or_else(|| bad("base out of range")),
        Json::String(s) if s == "inf" => Ok(ExtNat::Infinite),
        other => Err(bad(format!("expected a number or \"inf\", found {other}"))),
    }
}

fn entry_from(j: &Json) -> Result<DecoratedNumber> {
    let base = nat_from(j.get("base").ok_or_else(|| bad("entry without base"))?)?;
    let decoration = match j.get("decoration").and_then(Json::as_str) {
        Some("minus") => Decoration::Minus,
        Some("none") => Decoration::None,
        Some("plus") => Decoration::Plus,
        _ => return Err(bad("decoration must be minus, none or plus")),
    };
    DecoratedNumber::new(base, decoration)
}

/// Reads back a structured dimension type or number.
pub fn from_structured(text: &str) -> Result<Value> {
    let tree: Json = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    match tree.get("kind").and_then(Json::as_str) {
        Some("type") => {
            let q = nat_from(tree.get("q").ok_or_else(|| bad("missing q"))?)?;
            let default = entry_from(tree.get("default").ok_or_else(|| bad("missing default"))?)?;
            let mut d = DimensionType::uniform(q, default)?;
            if let Some(ex) = tree.get("exceptions").and_then(Json::as_object) {
                for (p, e) in ex {
                    let p: u64 = p.parse().map_err(|_| bad(format!("bad prime key {p}")))?;
                    d = d.with_entry(p, entry_from(e)?)?;
                }
            }
            Ok(Value::Type(d))
        }
        Some("number") => Ok(Value::Nat(nat_from(
            tree.get("value").ok_or_else(|| bad("missing value"))?,
        )?)),
        Some("boolean") => tree
            .get("value")
            .and_then(Json::as_bool)
            .map(Value::Bool)
            .ok_or_else(|| bad("missing value")),
        _ => Err(bad("unsupported kind")),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evaluate, parse, Env};

    fn eval(src: &str) -> Value {
        evaluate(&parse(src).unwrap(), &Env::new()).unwrap()
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(render(&eval("B(6)"), Format::Pretty), "{q=5; *=5+}");
        assert_eq!(render(&eval("C(0)"), Format::Pretty), "{q=0; *=0}");
        assert_eq!(render(&eval("dim(C(inf))"), Format::Pretty), "inf");
    }

    #[test]
    fn structured_type() {
        let v = eval("{q=2; *=3-; 7=2}");
        let text = render(&v, Format::Structured);
        let tree: Json = serde_json::from_str(&text).unwrap();
        assert_eq!(tree["kind"], "type");
        assert_eq!(tree["q"], 2);
        assert_eq!(tree["default"]["decoration"], "minus");
        assert_eq!(tree["exceptions"]["7"]["base"], 2);
        assert_eq!(from_structured(&text).unwrap(), v);
    }

    #[test]
    fn structured_round_trip_of_golden_type() {
        let v = eval("{q=2;*=3-}");
        assert_eq!(from_structured(&render(&v, Format::Structured)).unwrap(), v);
        let inf = eval("{q=4; *=inf+}");
        assert_eq!(from_structured(&render(&inf, Format::Structured)).unwrap(), inf);
    }

    #[test]
    fn structured_sigma() {
        let text = render(&eval("sigma(Z + Z/2)"), Format::Structured);
        let tree: Json = serde_json::from_str(&text).unwrap();
        assert_eq!(tree["default"]["Z_(p)"], true);
        assert_eq!(tree["exceptions"]["2"]["Z_p"], true);
    }

    #[test]
    fn malformed_structured_input() {
        assert!(from_structured("{").is_err());
        assert!(from_structured(r#"{"kind":"type","q":2,"default":{"base":5,"decoration":"none"}}"#).is_err());
        assert!(from_structured(r#"{"kind":"type","q":2,"default":{"base":3,"decoration":"sideways"}}"#).is_err());
    }
}
