//! Scenario scripts: parameters, named definitions and claims about dimension types.
//!
//! ```text
//! # comment
//! param n = 6
//! let D1 = {q=2; *=3-}
//! (D1 oplus D1) + 1 <= B(n)
//! dim(D1 boxplus D1) == 6   # trailing comments are fine too
//! ```
//!
//! Every non-comment line is a `param`, a `let`, or a claim: a `<=` or `==`
//! comparison. `==` against `dim(...)` is recorded as a dimension claim.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Position, Result};
use crate::expr::{check, compare, evaluate, parse_at, CmpOp, Env, Expr, ExprKind, Func, Kind, Value};
use crate::extnat::ExtNat;

#[derive(Debug, Clone, PartialEq)]
pub enum ClaimKind {
    Leq(Expr, Expr),
    Eq(Expr, Expr),
    /// `dim(expr) == value`.
    Dim(Expr, Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub line: usize,
    pub kind: ClaimKind,
}

impl Claim {
    fn sides(&self) -> (&Expr, &Expr) {
        match &self.kind {
            ClaimKind::Leq(l, r) | ClaimKind::Eq(l, r) | ClaimKind::Dim(l, r) => (l, r),
        }
    }

    fn label(&self) -> &'static str {
        match self.kind {
            ClaimKind::Leq(..) => "leq",
            ClaimKind::Eq(..) => "eq",
            ClaimKind::Dim(..) => "dim",
        }
    }

    pub fn source(&self) -> String {
        match &self.kind {
            ClaimKind::Leq(l, r) => format!("{l} <= {r}"),
            ClaimKind::Eq(l, r) => format!("{l} == {r}"),
            ClaimKind::Dim(l, r) => format!("dim({l}) == {r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    /// Integer parameters with their default values.
    pub parameters: BTreeMap<String, u64>,
    pub definitions: Vec<(String, Expr)>,
    pub claims: Vec<Claim>,
}

fn line_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos: Position { line, column },
        message: message.into(),
        expected: vec![],
    }
}

fn split_binding(rest: &str, line: usize, indent: usize) -> Result<(&str, &str, usize)> {
    let eq = rest
        .find('=')
        .ok_or_else(|| line_error(line, indent + rest.len() + 1, "expected `=`"))?;
    let name = rest[..eq].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(line_error(line, indent + 1, format!("bad name `{name}`")));
    }
    Ok((name, &rest[eq + 1..], indent + eq + 1))
}

impl Scenario {
    pub fn parse(name: &str, text: &str) -> Result<Scenario> {
        let mut scenario = Scenario {
            name: name.to_string(),
            parameters: BTreeMap::new(),
            definitions: Vec::new(),
            claims: Vec::new(),
        };
        let mut kinds = Env::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            // `#` never occurs in expressions, so it always starts a comment
            let raw = raw.split_once('#').map_or(raw, |(code, _)| code).trim_end();
            let trimmed = raw.trim_start();
            let indent = raw.len() - trimmed.len();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("param ") {
                let (pname, value, _) = split_binding(rest, line, indent + 6)?;
                let v = value.trim().parse::<u64>().map_err(|_| {
                    line_error(line, indent + 1, format!("parameter `{pname}` needs an integer default"))
                })?;
                kinds.insert(pname.to_string(), Value::Nat(ExtNat::Finite(v)));
                scenario.parameters.insert(pname.to_string(), v);
            } else if let Some(rest) = trimmed.strip_prefix("let ") {
                let (lname, body, offset) = split_binding(rest, line, indent + 4)?;
                let expr = parse_padded(body, line, offset)?;
                let kind = check(&expr, &kinds)?;
                kinds.insert(lname.to_string(), placeholder(kind));
                scenario.definitions.push((lname.to_string(), expr));
            } else {
                let expr = parse_padded(trimmed, line, indent)?;
                let pos = expr.pos;
                if check(&expr, &kinds)? != Kind::Bool {
                    return Err(Error::TypeMismatch { pos, message: "a claim must be a comparison".to_string() });
                }
                let kind = match expr.kind {
                    ExprKind::Cmp(CmpOp::Leq, l, r) => ClaimKind::Leq(*l, *r),
                    ExprKind::Cmp(CmpOp::Eq, l, r) => match l.kind {
                        ExprKind::Call(Func::Dim, mut args) => ClaimKind::Dim(args.remove(0), *r),
                        _ => ClaimKind::Eq(*l, *r),
                    },
                    _ => {
                        return Err(Error::TypeMismatch {
                            pos,
                            message: "a claim must be a `<=` or `==` comparison".to_string(),
                        })
                    }
                };
                scenario.claims.push(Claim { line, kind });
            }
        }
        Ok(scenario)
    }
}

/// Parses `text` as if it started at `column_offset + 1` of `line`.
fn parse_padded(text: &str, line: usize, column_offset: usize) -> Result<Expr> {
    let padded = format!("{}{}", " ".repeat(column_offset), text);
    parse_at(&padded, line)
}

/// A value of the given kind, used only for static checking.
fn placeholder(kind: Kind) -> Value {
    use crate::dimtype::DimensionType;
    use crate::group::{AbelianGroupExpr, SigmaSet};
    match kind {
        Kind::Type => Value::Type(DimensionType::constant(0)),
        Kind::Nat => Value::Nat(ExtNat::ZERO),
        Kind::Group => Value::Group(AbelianGroupExpr::Rationals),
        Kind::Sigma => Value::Sigma(SigmaSet::empty()),
        Kind::Bool => Value::Bool(true),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub line: usize,
    pub kind: &'static str,
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub bindings: BTreeMap<String, u64>,
    pub claims: Vec<ClaimReport>,
    pub passed: bool,
}

impl Report {
    pub fn to_text(&self) -> String {
        let bindings: Vec<String> = self.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!("scenario {} [{}]\n", self.scenario, bindings.join(", "));
        for c in &self.claims {
            out.push_str(&format!(
                "  {:<4} line {}: {}\n        lhs = {}\n        rhs = {}\n",
                if c.passed { "ok" } else { "FAIL" },
                c.line,
                c.claim,
                c.lhs,
                c.rhs
            ));
        }
        let ok = self.claims.iter().filter(|c| c.passed).count();
        out.push_str(&format!(
            "result: {} ({ok}/{} claims)\n",
            if self.passed { "pass" } else { "FAIL" },
            self.claims.len()
        ));
        out
    }
}

fn pretty(v: &Value) -> String {
    crate::expr::render(v, crate::expr::Format::Pretty)
}

/// Evaluates every claim of `scenario` with `bindings` overriding parameter defaults.
pub fn run_scenario(scenario: &Scenario, bindings: &BTreeMap<String, u64>) -> Result<Report> {
    let mut env = Env::new();
    let mut effective = scenario.parameters.clone();
    for (k, v) in bindings {
        if !scenario.parameters.contains_key(k) {
            return Err(Error::Validity(format!(
                "scenario `{}` has no parameter `{k}`",
                scenario.name
            )));
        }
        effective.insert(k.clone(), *v);
    }
    for (k, v) in &effective {
        env.insert(k.clone(), Value::Nat(ExtNat::Finite(*v)));
    }
    for (name, expr) in &scenario.definitions {
        let value = evaluate(expr, &env).map_err(|e| named(expr, e))?;
        env.insert(name.clone(), value);
    }
    let mut claims = Vec::new();
    for claim in &scenario.claims {
        let (l, r) = claim.sides();
        let lhs = evaluate(l, &env).map_err(|e| named(l, e))?;
        let rhs = evaluate(r, &env).map_err(|e| named(r, e))?;
        let passed = match &claim.kind {
            ClaimKind::Leq(..) => compare(CmpOp::Leq, &lhs, &rhs),
            ClaimKind::Eq(..) => compare(CmpOp::Eq, &lhs, &rhs),
            ClaimKind::Dim(..) => match &lhs {
                Value::Type(d) => compare(CmpOp::Eq, &Value::Nat(d.dim()), &rhs),
                _ => compare(CmpOp::Eq, &lhs, &rhs),
            },
        }
        .map_err(|e| named(l, e))?;
        let lhs_text = match (&claim.kind, &lhs) {
            (ClaimKind::Dim(..), Value::Type(d)) => format!("dim {} = {}", d, d.dim()),
            _ => pretty(&lhs),
        };
        claims.push(ClaimReport {
            line: claim.line,
            kind: claim.label(),
            claim: claim.source(),
            lhs: lhs_text,
            rhs: pretty(&rhs),
            passed,
        });
    }
    Ok(Report {
        scenario: scenario.name.clone(),
        bindings: effective,
        passed: claims.iter().all(|c| c.passed),
        claims,
    })
}

fn named(expr: &Expr, err: Error) -> Error {
    match err {
        Error::Evaluation { .. } => err,
        other => Error::Evaluation {
            expr: expr.to_string(),
            source: Box::new(other),
        },
    }
}
