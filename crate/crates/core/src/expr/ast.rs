use std::fmt;

use crate::decorated::Decoration;
use crate::error::Position;
use crate::group::AbelianGroupExpr;

/// Built-in functions of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Dim,
    Sigma,
    Boltyanskii,
    Constant,
    DimWith,
    IsBoltyanskii,
    IsFullValued,
    UnionBound,
    FiberBound,
    Decomposes,
}

impl Func {
    pub const ALL: [Func; 10] = [
        Func::Dim,
        Func::Sigma,
        Func::Boltyanskii,
        Func::Constant,
        Func::DimWith,
        Func::IsBoltyanskii,
        Func::IsFullValued,
        Func::UnionBound,
        Func::FiberBound,
        Func::Decomposes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Dim => "dim",
            Func::Sigma => "sigma",
            Func::Boltyanskii => "B",
            Func::Constant => "C",
            Func::DimWith => "dimg",
            Func::IsBoltyanskii => "boltyanskii",
            Func::IsFullValued => "fullvalued",
            Func::UnionBound => "unionbound",
            Func::FiberBound => "fiberbound",
            Func::Decomposes => "decomposes",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Dim | Func::Sigma | Func::Boltyanskii | Func::Constant | Func::IsFullValued => 1,
            Func::DimWith | Func::IsBoltyanskii | Func::UnionBound | Func::FiberBound => 2,
            Func::Decomposes => 3,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    BoxPlus,
    OPlus,
    Add,
    Sub,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::BoxPlus => "boxplus",
            BinOp::OPlus => "oplus",
            BinOp::Add => "+",
            BinOp::Sub => "-",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::BoxPlus | BinOp::OPlus => 2,
            BinOp::Add | BinOp::Sub => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Leq,
    Eq,
}

/// A decorated entry `base^ε` whose base may be an integer expression.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryLiteral {
    pub base: Box<Expr>,
    pub decoration: Decoration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeLiteral {
    pub q: Box<Expr>,
    pub default: EntryLiteral,
    pub exceptions: Vec<(u64, EntryLiteral)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Num(u64),
    Inf,
    Bool(bool),
    Ident(String),
    TypeLiteral(TypeLiteral),
    GroupLiteral(AbelianGroupExpr),
    Call(Func, Vec<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Position,
}

impl Expr {
    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Cmp(..) => 1,
            ExprKind::Binary(op, ..) => op.precedence(),
            ExprKind::Star(_) => 4,
            ExprKind::GroupLiteral(AbelianGroupExpr::DirectSum(_)) => 3,
            _ => 5,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for EntryLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decoration != Decoration::None && self.base.precedence() < 4 {
            write!(f, "({}){}", self.base, self.decoration.suffix())
        } else {
            write!(f, "{}{}", self.base, self.decoration.suffix())
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Num(n) => write!(f, "{n}"),
            ExprKind::Inf => f.write_str("inf"),
            ExprKind::Bool(b) => write!(f, "{b}"),
            ExprKind::Ident(name) => f.write_str(name),
            ExprKind::TypeLiteral(lit) => {
                write!(f, "{{q={}; *={}", lit.q, lit.default)?;
                for (p, e) in &lit.exceptions {
                    write!(f, "; {p}={e}")?;
                }
                f.write_str("}")
            }
            ExprKind::GroupLiteral(AbelianGroupExpr::DirectSum(parts)) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" + "))
            }
            ExprKind::GroupLiteral(g) => write!(f, "{g}"),
            ExprKind::Call(func, args) => {
                let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                write!(f, "{}({})", func.name(), args.join(", "))
            }
            ExprKind::Binary(op, lhs, rhs) => {
                let p = op.precedence();
                // mixed boxplus/oplus chains always carry parentheses
                let lhs_min = match (&lhs.kind, op) {
                    (ExprKind::Binary(inner, ..), BinOp::BoxPlus | BinOp::OPlus)
                        if inner != op && inner.precedence() == p =>
                    {
                        p + 1
                    }
                    _ => p,
                };
                lhs.fmt_child(f, lhs_min)?;
                write!(f, " {} ", op.symbol())?;
                rhs.fmt_child(f, p + 1)
            }
            ExprKind::Star(inner) => {
                inner.fmt_child(f, 4)?;
                f.write_str("*")
            }
            ExprKind::Cmp(op, lhs, rhs) => {
                lhs.fmt_child(f, 2)?;
                f.write_str(match op {
                    CmpOp::Leq => " <= ",
                    CmpOp::Eq => " == ",
                })?;
                rhs.fmt_child(f, 2)
            }
        }
    }
}
