//! Recursive-descent parser for the calculator language.
//!
//! ```text
//! cmp     := sum [ ("<=" | "==") sum ]
//! sum     := add { ("boxplus" | "oplus") add }     mixed chains need parentheses
//! add     := postfix { ("+" | "-") postfix }
//! postfix := primary { "*" }
//! primary := NUM | "inf" | "true" | "false" | IDENT | FUNC "(" args ")"
//!          | ["DT"] "{" "q" "=" add ";" "*" "=" entry { ";" NUM "=" entry } "}"
//!          | group | "(" cmp ")"
//! entry   := add [ "+" | "-" ]                     a trailing sign is the decoration
//! group   := "Z" [ "^" NUM | "/" NUM ] | "Q" | "Zpinf(" NUM ")" | "Zloc(" NUM ")"
//!          | "pres" "[" row { "," row } "]"
//! ```

use std::collections::BTreeSet;

use super::ast::{BinOp, CmpOp, EntryLiteral, Expr, ExprKind, Func, TypeLiteral};
use super::lexer::{tokenize, Tok, Token};
use crate::decorated::{Decoration, DecoratedNumber};
use crate::dimtype::DimensionType;
use crate::error::{Error, Position, Result};
use crate::extnat::ExtNat;
use crate::group::AbelianGroupExpr;
use crate::prime::is_prime;

const GROUP_WORDS: [&str; 5] = ["Z", "Q", "Zpinf", "Zloc", "pres"];

/// Parses a single expression.
pub fn parse(input: &str) -> Result<Expr> {
    parse_at(input, 1)
}

/// Parses an expression whose first line is line `first_line` of some larger file.
pub fn parse_at(input: &str, first_line: usize) -> Result<Expr> {
    let mut parser = Parser {
        tokens: tokenize(input, first_line)?,
        at: 0,
    };
    let expr = parser.cmp()?;
    parser.expect(Tok::Eof, &["an operator", "end of input"])?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

fn syntax(pos: Position, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn validity(pos: Position, err: Error) -> Error {
    let message = match err {
        Error::Validity(m) => m,
        other => other.to_string(),
    };
    Error::LiteralValidity { pos, message }
}

fn constant_of(expr: &Expr) -> Option<ExtNat> {
    match expr.kind {
        ExprKind::Num(n) => Some(ExtNat::Finite(n)),
        ExprKind::Inf => Some(ExtNat::Infinite),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.at + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        let t = self.peek();
        syntax(t.pos, format!("unexpected {}", t.tok.describe()), expected)
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expect_sym(&mut self, tok: Tok) -> Result<Token> {
        let label = format!("`{}`", tok.symbol());
        self.expect(tok, &[label.as_str()])
    }

    fn is_word(&self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn number(&mut self) -> Result<(u64, Position)> {
        match self.peek().tok {
            Tok::Num(n) => {
                let pos = self.bump().pos;
                Ok((n, pos))
            }
            _ => Err(self.unexpected(&["a number"])),
        }
    }

    fn cmp(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        let op = match self.peek().tok {
            Tok::Leq => CmpOp::Leq,
            Tok::EqEq => CmpOp::Eq,
            _ => return Ok(lhs),
        };
        let pos = self.bump().pos;
        let rhs = self.sum()?;
        if matches!(self.peek().tok, Tok::Leq | Tok::EqEq) {
            return Err(syntax(
                self.peek().pos,
                "comparisons do not chain",
                &["end of input", "`)`"],
            ));
        }
        Ok(Expr {
            kind: ExprKind::Cmp(op, Box::new(lhs), Box::new(rhs)),
            pos,
        })
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.add(false)?;
        let mut chain_op = None;
        loop {
            let op = if self.is_word("boxplus") {
                BinOp::BoxPlus
            } else if self.is_word("oplus") {
                BinOp::OPlus
            } else {
                return Ok(lhs);
            };
            let pos = self.bump().pos;
            if chain_op.is_some_and(|prev| prev != op) {
                return Err(syntax(
                    pos,
                    "mixed boxplus/oplus chain needs parentheses",
                    &["`(`"],
                ));
            }
            chain_op = Some(op);
            let rhs = self.add(false)?;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    /// In an entry, a `+`/`-` directly before `;` or `}` is a decoration, not an operator.
    fn add(&mut self, in_entry: bool) -> Result<Expr> {
        let mut lhs = self.postfix()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            if in_entry && matches!(self.peek_at(1), Tok::Semi | Tok::RBrace) {
                return Ok(lhs);
            }
            let pos = self.bump().pos;
            let rhs = self.postfix()?;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while self.peek().tok == Tok::Star {
            let pos = self.bump().pos;
            e = Expr {
                kind: ExprKind::Star(Box::new(e)),
                pos,
            };
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        const EXPECTED: [&str; 6] = [
            "a number",
            "an identifier",
            "a type literal",
            "a group",
            "a function call",
            "`(`",
        ];
        let token = self.peek().clone();
        let pos = token.pos;
        let kind = match token.tok {
            Tok::Num(n) => {
                self.bump();
                ExprKind::Num(n)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.cmp()?;
                self.expect(Tok::RParen, &["`)`"])?;
                return Ok(inner);
            }
            Tok::LBrace => return self.type_literal(),
            Tok::Ident(ref word) => match word.as_str() {
                "inf" => {
                    self.bump();
                    ExprKind::Inf
                }
                "true" | "false" => {
                    self.bump();
                    ExprKind::Bool(word == "true")
                }
                "DT" => {
                    self.bump();
                    if self.peek().tok != Tok::LBrace {
                        return Err(self.unexpected(&["`{`"]));
                    }
                    return self.type_literal();
                }
                "boxplus" | "oplus" => return Err(self.unexpected(&EXPECTED)),
                w if GROUP_WORDS.contains(&w) => return self.group_literal(),
                w => match Func::from_name(w) {
                    Some(func) if *self.peek_at(1) == Tok::LParen => return self.call(func),
                    _ => {
                        self.bump();
                        ExprKind::Ident(word.clone())
                    }
                },
            },
            _ => return Err(self.unexpected(&EXPECTED)),
        };
        Ok(Expr { kind, pos })
    }

    fn call(&mut self, func: Func) -> Result<Expr> {
        let pos = self.bump().pos;
        self.expect_sym(Tok::LParen)?;
        let mut args = vec![self.cmp()?];
        while self.peek().tok == Tok::Comma {
            self.bump();
            args.push(self.cmp()?);
        }
        let close = self.peek().pos;
        self.expect(Tok::RParen, &["`,`", "`)`"])?;
        if args.len() != func.arity() {
            return Err(syntax(
                close,
                format!(
                    "{} takes {} argument(s), found {}",
                    func.name(),
                    func.arity(),
                    args.len()
                ),
                &[],
            ));
        }
        let expr = Expr {
            kind: ExprKind::Call(func, args),
            pos,
        };
        if let (Func::Boltyanskii, Some(ExtNat::Finite(0))) = (func, self_arg_const(&expr)) {
            return Err(validity(pos, Error::Validity("B(n) needs n >= 1".to_string())));
        }
        Ok(expr)
    }

    fn entry(&mut self) -> Result<EntryLiteral> {
        let base = self.add(true)?;
        let decoration = match self.peek().tok {
            Tok::Plus => Decoration::Plus,
            Tok::Minus => Decoration::Minus,
            _ => Decoration::None,
        };
        if decoration != Decoration::None {
            self.bump();
        }
        Ok(EntryLiteral {
            base: Box::new(base),
            decoration,
        })
    }

    fn type_literal(&mut self) -> Result<Expr> {
        let pos = self.expect_sym(Tok::LBrace)?.pos;
        if !self.is_word("q") {
            return Err(self.unexpected(&["`q`"]));
        }
        self.bump();
        self.expect_sym(Tok::Assign)?;
        let q = self.add(false)?;
        self.expect_sym(Tok::Semi)?;
        self.expect_sym(Tok::Star)?;
        self.expect_sym(Tok::Assign)?;
        let default = self.entry()?;
        let mut exceptions = Vec::new();
        let mut seen = BTreeSet::new();
        loop {
            match self.peek().tok {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Semi => {
                    self.bump();
                }
                _ => return Err(self.unexpected(&["`;`", "`}`"])),
            }
            let (p, key_pos) = self.number()?;
            if !is_prime(p) {
                return Err(validity(key_pos, Error::NotPrime(p)));
            }
            if !seen.insert(p) {
                return Err(validity(
                    key_pos,
                    Error::Validity(format!("prime {p} listed twice")),
                ));
            }
            self.expect_sym(Tok::Assign)?;
            exceptions.push((p, self.entry()?));
        }
        let lit = TypeLiteral {
            q: Box::new(q),
            default,
            exceptions,
        };
        if let Some(Err(err)) = literal_type(&lit) {
            return Err(validity(pos, err));
        }
        Ok(Expr {
            kind: ExprKind::TypeLiteral(lit),
            pos,
        })
    }

    fn group_literal(&mut self) -> Result<Expr> {
        let Token { tok, pos } = self.bump();
        let Tok::Ident(word) = tok else { unreachable!() };
        let group = match word.as_str() {
            "Q" => AbelianGroupExpr::Rationals,
            "Z" => match self.peek().tok {
                Tok::Caret => {
                    self.bump();
                    AbelianGroupExpr::FreePart(self.number()?.0 as usize)
                }
                Tok::Slash => {
                    self.bump();
                    let (m, mpos) = self.number()?;
                    AbelianGroupExpr::cyclic(m).map_err(|e| validity(mpos, e))?
                }
                _ => AbelianGroupExpr::FreePart(1),
            },
            "Zpinf" | "Zloc" => {
                self.expect_sym(Tok::LParen)?;
                let (p, ppos) = self.number()?;
                self.expect_sym(Tok::RParen)?;
                let g = if word == "Zpinf" {
                    AbelianGroupExpr::circle(p)
                } else {
                    AbelianGroupExpr::local(p)
                };
                g.map_err(|e| validity(ppos, e))?
            }
            _ => self.presentation(pos)?,
        };
        Ok(Expr {
            kind: ExprKind::GroupLiteral(group),
            pos,
        })
    }

    fn presentation(&mut self, pos: Position) -> Result<AbelianGroupExpr> {
        self.expect_sym(Tok::LBracket)?;
        let mut rows = Vec::new();
        if self.peek().tok != Tok::RBracket {
            loop {
                rows.push(self.matrix_row()?);
                if self.peek().tok == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket, &["`,`", "`]`"])?;
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(validity(
                pos,
                Error::Validity("rows of a presentation must have equal length".to_string()),
            ));
        }
        Ok(AbelianGroupExpr::presentation(rows))
    }

    fn matrix_row(&mut self) -> Result<Vec<i64>> {
        self.expect_sym(Tok::LBracket)?;
        let mut row = Vec::new();
        if self.peek().tok == Tok::RBracket {
            self.bump();
            return Ok(row);
        }
        loop {
            let negative = self.peek().tok == Tok::Minus;
            if negative {
                self.bump();
            }
            let (n, npos) = self.number()?;
            let v = if negative {
                0i64.checked_sub_unsigned(n)
            } else {
                i64::try_from(n).ok()
            };
            row.push(v.ok_or_else(|| {
                validity(npos, Error::Overflow(format!("matrix entry {n} exceeds 64 bits")))
            })?);
            match self.peek().tok {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(row);
                }
                _ => return Err(self.unexpected(&["`,`", "`]`"])),
            }
        }
    }
}

fn self_arg_const(call: &Expr) -> Option<ExtNat> {
    match &call.kind {
        ExprKind::Call(_, args) => args.first().and_then(constant_of),
        _ => None,
    }
}

/// Builds the literal's value when every component is a constant.
pub(crate) fn literal_type(lit: &TypeLiteral) -> Option<Result<DimensionType>> {
    let q = constant_of(&lit.q)?;
    let entry = |e: &EntryLiteral| -> Option<Result<DecoratedNumber>> {
        constant_of(&e.base).map(|b| DecoratedNumber::new(b, e.decoration))
    };
    let default = entry(&lit.default)?;
    let mut entries = Vec::new();
    for (p, e) in &lit.exceptions {
        entries.push((*p, entry(e)?));
    }
    Some((|| {
        let mut d = DimensionType::uniform(q, default?)?;
        for (p, e) in entries {
            d = d.with_entry(p, e?)?;
        }
        Ok(d)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos_of(err: &Error) -> (usize, usize) {
        let p = err.position().expect("diagnostic carries a position");
        (p.line, p.column)
    }

    #[test]
    fn type_literal_forms() {
        let e = parse("DT{q=2; *=3-}").unwrap();
        let ExprKind::TypeLiteral(lit) = &e.kind else { panic!() };
        let d = literal_type(lit).unwrap().unwrap();
        assert_eq!(d.to_string(), "{q=2; *=3-}");
        assert!(parse("{q=5; *=5+; 2=4-; 3=5}").is_ok());
        assert!(parse("{q = inf; * = inf}").is_ok());
    }

    #[test]
    fn parametric_entries() {
        let e = parse("{q=n-4; *=(n-5)+}").unwrap();
        assert_eq!(e.to_string(), "{q=n - 4; *=(n - 5)+}");
        let e = parse("{q=n; *=n-1+}").unwrap();
        let ExprKind::TypeLiteral(lit) = &e.kind else { panic!() };
        assert_eq!(lit.default.decoration, Decoration::Plus);
        assert!(matches!(lit.default.base.kind, ExprKind::Binary(BinOp::Sub, ..)));
    }

    #[test]
    fn validity_errors() {
        let err = parse("DT{q=2; *=5}").unwrap_err();
        assert!(matches!(err, Error::LiteralValidity { .. }), "{err}");
        assert_eq!(pos_of(&err), (1, 3));
        assert!(matches!(parse("{q=0; *=0-}"), Err(Error::LiteralValidity { .. })));
        assert!(matches!(parse("{q=3; *=inf-}"), Err(Error::LiteralValidity { .. })));
        let err = parse("{q=2; *=2; 4=3+}").unwrap_err();
        assert_eq!(pos_of(&err), (1, 12));
        assert!(matches!(parse("B(0)"), Err(Error::LiteralValidity { .. })));
        assert!(matches!(parse("Z/1"), Err(Error::LiteralValidity { .. })));
        assert!(matches!(parse("Zloc(4)"), Err(Error::LiteralValidity { .. })));
        assert!(matches!(parse("pres[[1,2],[3]]"), Err(Error::LiteralValidity { .. })));
    }

    #[test]
    fn precedence() {
        let e = parse("D1 + 1 boxplus D2").unwrap();
        assert_eq!(e.to_string(), "D1 + 1 boxplus D2");
        let ExprKind::Binary(BinOp::BoxPlus, lhs, _) = &e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprKind::Binary(BinOp::Add, ..)));

        let e = parse("(D1 oplus D2) + 1 == B(6)").unwrap();
        let ExprKind::Cmp(CmpOp::Eq, lhs, _) = &e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprKind::Binary(BinOp::Add, ..)));
        assert_eq!(e.to_string(), "(D1 oplus D2) + 1 == B(6)");

        let e = parse("D* + 2").unwrap();
        let ExprKind::Binary(BinOp::Add, lhs, _) = &e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprKind::Star(_)));
    }

    #[test]
    fn mixed_chain_needs_parentheses() {
        let err = parse("A boxplus B oplus C").unwrap_err();
        assert_eq!(pos_of(&err), (1, 13));
        assert!(parse("(A boxplus B) oplus C").is_ok());
        assert!(parse("A boxplus B boxplus C").is_ok());
        let e = parse("(A boxplus B) oplus C").unwrap();
        assert_eq!(e.to_string(), "(A boxplus B) oplus C");
    }

    #[test]
    fn groups() {
        for src in ["Z", "Z^3", "Z/12", "Q", "Zpinf(3)", "Zloc(5)", "pres[[2,0],[0,-12]]", "pres[[]]"] {
            let e = parse(src).unwrap();
            assert!(matches!(e.kind, ExprKind::GroupLiteral(_)), "{src}");
        }
        let e = parse("sigma(Z/2 + Z/12)").unwrap();
        assert!(matches!(e.kind, ExprKind::Call(Func::Sigma, _)));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        for (src, at) in [
            ("dim(B(4)", (1, 9)),
            ("B(4) boxplus", (1, 13)),
            ("{q=2 *=3}", (1, 7)),
            ("{q=2; 3=3}", (1, 7)),
            ("1 <= 2 <= 3", (1, 8)),
            ("B(4, 5)", (1, 7)),
            ("\n  )", (2, 3)),
            ("dim(B(4)) 7", (1, 11)),
        ] {
            let err = parse(src).unwrap_err();
            assert!(matches!(err, Error::Syntax { .. }), "{src}: {err}");
            assert_eq!(pos_of(&err), at, "{src}: {err}");
        }
    }

    #[test]
    fn expected_tokens_are_listed() {
        let Error::Syntax { expected, .. } = parse("{q=2; *=3").unwrap_err() else {
            panic!()
        };
        assert!(expected.iter().any(|e| e == "`}`"));
    }
}
