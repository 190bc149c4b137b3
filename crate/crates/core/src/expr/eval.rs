use std::collections::BTreeMap;
use std::fmt;

use super::ast::{BinOp, CmpOp, EntryLiteral, Expr, ExprKind, Func, TypeLiteral};
use crate::decorated::DecoratedNumber;
use crate::dimtype::DimensionType;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::group::{bockstein_basis, dim_with_coefficients, AbelianGroupExpr, SigmaSet};
use crate::harness::bounds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Type,
    Nat,
    Group,
    Sigma,
    Bool,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Type => "dimension type",
            Kind::Nat => "number",
            Kind::Group => "group",
            Kind::Sigma => "Bockstein basis",
            Kind::Bool => "boolean",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Type(DimensionType),
    Nat(ExtNat),
    Group(AbelianGroupExpr),
    Sigma(SigmaSet),
    Bool(bool),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Type(_) => Kind::Type,
            Value::Nat(_) => Kind::Nat,
            Value::Group(_) => Kind::Group,
            Value::Sigma(_) => Kind::Sigma,
            Value::Bool(_) => Kind::Bool,
        }
    }
}

/// Named values visible to an expression.
pub type Env = BTreeMap<String, Value>;

fn mismatch(expr: &Expr, message: impl Into<String>) -> Error {
    Error::TypeMismatch {
        pos: expr.pos,
        message: message.into(),
    }
}

fn want(expr: &Expr, env: &Env, allowed: &[Kind]) -> Result<Kind> {
    let k = check(expr, env)?;
    if allowed.contains(&k) {
        Ok(k)
    } else {
        let names: Vec<String> = allowed.iter().map(Kind::to_string).collect();
        Err(mismatch(
            expr,
            format!("`{expr}` is a {k}, expected {}", names.join(" or ")),
        ))
    }
}

/// Number operands stand for constant dimension types in type positions.
const TYPE_LIKE: [Kind; 2] = [Kind::Type, Kind::Nat];

/// Static kind of `expr`; rejects ill-typed expressions before anything is evaluated.
pub fn check(expr: &Expr, env: &Env) -> Result<Kind> {
    Ok(match &expr.kind {
        ExprKind::Num(_) | ExprKind::Inf => Kind::Nat,
        ExprKind::Bool(_) => Kind::Bool,
        ExprKind::Ident(name) => env
            .get(name)
            .map(Value::kind)
            .ok_or_else(|| mismatch(expr, format!("unbound name `{name}`")))?,
        ExprKind::TypeLiteral(lit) => {
            want(&lit.q, env, &[Kind::Nat])?;
            want(&lit.default.base, env, &[Kind::Nat])?;
            for (_, e) in &lit.exceptions {
                want(&e.base, env, &[Kind::Nat])?;
            }
            Kind::Type
        }
        ExprKind::GroupLiteral(_) => Kind::Group,
        ExprKind::Call(func, args) => match func {
            Func::Dim | Func::IsFullValued => {
                want(&args[0], env, &TYPE_LIKE)?;
                if *func == Func::Dim {
                    Kind::Nat
                } else {
                    Kind::Bool
                }
            }
            Func::Sigma => {
                want(&args[0], env, &[Kind::Group])?;
                Kind::Sigma
            }
            Func::Boltyanskii | Func::Constant => {
                want(&args[0], env, &[Kind::Nat])?;
                Kind::Type
            }
            Func::DimWith => {
                want(&args[0], env, &TYPE_LIKE)?;
                want(&args[1], env, &[Kind::Group])?;
                Kind::Nat
            }
            Func::IsBoltyanskii => {
                want(&args[0], env, &TYPE_LIKE)?;
                want(&args[1], env, &[Kind::Nat])?;
                Kind::Bool
            }
            Func::UnionBound | Func::FiberBound => {
                want(&args[0], env, &TYPE_LIKE)?;
                want(&args[1], env, &TYPE_LIKE)?;
                Kind::Type
            }
            Func::Decomposes => {
                for a in args {
                    want(a, env, &TYPE_LIKE)?;
                }
                Kind::Bool
            }
        },
        ExprKind::Binary(op, lhs, rhs) => match op {
            BinOp::BoxPlus | BinOp::OPlus => {
                let l = want(lhs, env, &TYPE_LIKE)?;
                let r = want(rhs, env, &TYPE_LIKE)?;
                if l == Kind::Nat && r == Kind::Nat {
                    return Err(mismatch(
                        expr,
                        "boxplus/oplus need at least one dimension type operand",
                    ));
                }
                Kind::Type
            }
            BinOp::Add => match want(lhs, env, &[Kind::Type, Kind::Nat, Kind::Group])? {
                Kind::Group => {
                    want(rhs, env, &[Kind::Group])?;
                    Kind::Group
                }
                k => {
                    want(rhs, env, &[Kind::Nat])?;
                    k
                }
            },
            BinOp::Sub => {
                want(lhs, env, &[Kind::Nat])?;
                want(rhs, env, &[Kind::Nat])?;
                Kind::Nat
            }
        },
        ExprKind::Star(inner) => {
            want(inner, env, &[Kind::Type])?;
            Kind::Type
        }
        ExprKind::Cmp(op, lhs, rhs) => {
            let allowed: &[Kind] = match op {
                CmpOp::Leq => &TYPE_LIKE,
                CmpOp::Eq => &[Kind::Type, Kind::Nat, Kind::Sigma, Kind::Bool],
            };
            let l = want(lhs, env, allowed)?;
            let r = want(rhs, env, allowed)?;
            let compatible = l == r || (TYPE_LIKE.contains(&l) && TYPE_LIKE.contains(&r));
            if !compatible {
                return Err(mismatch(expr, format!("cannot compare a {l} with a {r}")));
            }
            Kind::Bool
        }
    })
}

fn at(expr: &Expr, err: Error) -> Error {
    match err {
        Error::Evaluation { .. } => err,
        other => Error::Evaluation {
            expr: expr.to_string(),
            source: Box::new(other),
        },
    }
}

/// Type-checks and evaluates.
pub fn evaluate(expr: &Expr, env: &Env) -> Result<Value> {
    check(expr, env)?;
    eval(expr, env)
}

fn nat(expr: &Expr, env: &Env) -> Result<ExtNat> {
    match eval(expr, env)? {
        Value::Nat(n) => Ok(n),
        other => Err(mismatch(expr, format!("expected a number, found a {}", other.kind()))),
    }
}

fn finite(expr: &Expr, env: &Env) -> Result<u64> {
    nat(expr, env)?.finite().ok_or_else(|| {
        at(expr, Error::Validity("a finite number is required here".to_string()))
    })
}

fn dim_type(expr: &Expr, env: &Env) -> Result<DimensionType> {
    match eval(expr, env)? {
        Value::Type(d) => Ok(d),
        Value::Nat(n) => Ok(DimensionType::constant(n)),
        other => Err(mismatch(expr, format!("expected a dimension type, found a {}", other.kind()))),
    }
}

fn group(expr: &Expr, env: &Env) -> Result<AbelianGroupExpr> {
    match eval(expr, env)? {
        Value::Group(g) => Ok(g),
        other => Err(mismatch(expr, format!("expected a group, found a {}", other.kind()))),
    }
}

fn entry(e: &EntryLiteral, env: &Env) -> Result<DecoratedNumber> {
    DecoratedNumber::new(nat(&e.base, env)?, e.decoration)
}

fn literal(lit: &TypeLiteral, env: &Env) -> Result<DimensionType> {
    let mut d = DimensionType::uniform(nat(&lit.q, env)?, entry(&lit.default, env)?)?;
    for (p, e) in &lit.exceptions {
        d = d.with_entry(*p, entry(e, env)?)?;
    }
    Ok(d)
}

fn eval(expr: &Expr, env: &Env) -> Result<Value> {
    let v = match &expr.kind {
        ExprKind::Num(n) => Value::Nat(ExtNat::Finite(*n)),
        ExprKind::Inf => Value::Nat(ExtNat::Infinite),
        ExprKind::Bool(b) => Value::Bool(*b),
        ExprKind::Ident(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| mismatch(expr, format!("unbound name `{name}`")))?,
        ExprKind::TypeLiteral(lit) => Value::Type(literal(lit, env).map_err(|e| at(expr, e))?),
        ExprKind::GroupLiteral(g) => Value::Group(g.clone()),
        ExprKind::Call(func, args) => call(*func, args, env).map_err(|e| at(expr, e))?,
        ExprKind::Binary(op, lhs, rhs) => binary(*op, lhs, rhs, env).map_err(|e| at(expr, e))?,
        ExprKind::Star(inner) => Value::Type(dim_type(inner, env)?.star().map_err(|e| at(expr, e))?),
        ExprKind::Cmp(op, lhs, rhs) => {
            let (l, r) = (eval(lhs, env)?, eval(rhs, env)?);
            Value::Bool(compare(*op, &l, &r).map_err(|e| at(expr, e))?)
        }
    };
    Ok(v)
}

/// Decides `lhs <= rhs` or `lhs == rhs`. Numbers compare with dimension types
/// as constant types.
pub fn compare(op: CmpOp, lhs: &Value, rhs: &Value) -> Result<bool> {
    let as_type = |v: &Value| match v {
        Value::Type(d) => Some(d.clone()),
        Value::Nat(n) => Some(DimensionType::constant(*n)),
        _ => None,
    };
    Ok(match (op, lhs, rhs) {
        (CmpOp::Leq, Value::Nat(a), Value::Nat(b)) => a <= b,
        (CmpOp::Eq, Value::Nat(a), Value::Nat(b)) => a == b,
        (CmpOp::Leq, _, _) => {
            let (a, b) = as_type(lhs).zip(as_type(rhs)).ok_or_else(|| {
                Error::Validity(format!(
                    "cannot order a {} and a {}",
                    lhs.kind(),
                    rhs.kind()
                ))
            })?;
            a.leq(&b)
        }
        (CmpOp::Eq, _, _) => match as_type(lhs).zip(as_type(rhs)) {
            Some((a, b)) => a == b,
            None if lhs.kind() == rhs.kind() => lhs == rhs,
            None => {
                return Err(Error::Validity(format!(
                    "cannot compare a {} and a {}",
                    lhs.kind(),
                    rhs.kind()
                )))
            }
        },
    })
}

fn call(func: Func, args: &[Expr], env: &Env) -> Result<Value> {
    Ok(match func {
        Func::Dim => Value::Nat(dim_type(&args[0], env)?.dim()),
        Func::Sigma => Value::Sigma(bockstein_basis(&group(&args[0], env)?)?),
        Func::Boltyanskii => Value::Type(DimensionType::boltyanskii(finite(&args[0], env)?)?),
        Func::Constant => Value::Type(DimensionType::constant(nat(&args[0], env)?)),
        Func::DimWith => Value::Nat(dim_with_coefficients(
            &dim_type(&args[0], env)?,
            &group(&args[1], env)?,
        )?),
        Func::IsBoltyanskii => {
            let d = dim_type(&args[0], env)?;
            Value::Bool(match nat(&args[1], env)? {
                ExtNat::Finite(n) => d.is_boltyanskii(n),
                ExtNat::Infinite => false,
            })
        }
        Func::IsFullValued => Value::Bool(dim_type(&args[0], env)?.is_full_valued()),
        Func::UnionBound => Value::Type(bounds::union_bound(
            &dim_type(&args[0], env)?,
            &dim_type(&args[1], env)?,
        )?),
        Func::FiberBound => Value::Type(bounds::fiber_bound(
            &dim_type(&args[0], env)?,
            &dim_type(&args[1], env)?,
        )?),
        Func::Decomposes => Value::Bool(bounds::decomposition_bound_holds(
            &dim_type(&args[0], env)?,
            &dim_type(&args[1], env)?,
            &dim_type(&args[2], env)?,
        )?),
    })
}

fn binary(op: BinOp, lhs: &Expr, rhs: &Expr, env: &Env) -> Result<Value> {
    Ok(match op {
        BinOp::BoxPlus => Value::Type(dim_type(lhs, env)?.boxplus(&dim_type(rhs, env)?)?),
        BinOp::OPlus => Value::Type(dim_type(lhs, env)?.oplus(&dim_type(rhs, env)?)?),
        BinOp::Sub => {
            let (a, b) = (nat(lhs, env)?, finite(rhs, env)?);
            Value::Nat(match a {
                ExtNat::Infinite => ExtNat::Infinite,
                ExtNat::Finite(a) => ExtNat::Finite(a.checked_sub(b).ok_or_else(|| {
                    Error::Validity(format!("{a} - {b} is negative"))
                })?),
            })
        }
        BinOp::Add => match eval(lhs, env)? {
            Value::Type(d) => Value::Type(d.plus_int(finite(rhs, env)?)?),
            Value::Nat(a) => Value::Nat(a.checked_add(nat(rhs, env)?)?),
            Value::Group(g) => {
                let mut parts = flatten(g);
                parts.extend(flatten(group(rhs, env)?));
                Value::Group(AbelianGroupExpr::direct_sum(parts)?)
            }
            other => return Err(mismatch(lhs, format!("cannot add to a {}", other.kind()))),
        },
    })
}

fn flatten(g: AbelianGroupExpr) -> Vec<AbelianGroupExpr> {
    match g {
        AbelianGroupExpr::DirectSum(parts) => parts,
        other => vec![other],
    }
}
