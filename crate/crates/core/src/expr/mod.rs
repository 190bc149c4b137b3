//! The calculator's expression language: parsing, kind checking, evaluation, rendering.

mod ast;
mod eval;
mod lexer;
mod parser;
mod render;

pub use ast::{BinOp, CmpOp, EntryLiteral, Expr, ExprKind, Func, TypeLiteral};
pub use eval::{check, compare, evaluate, Env, Kind, Value};
pub use parser::{parse, parse_at};
pub use render::{from_structured, render, to_tree, Format};
