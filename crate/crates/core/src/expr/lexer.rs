use crate::error::{Error, Position, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Num(u64),
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Assign,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Leq,
    EqEq,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.symbol()),
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Semi => ";",
            Tok::Comma => ",",
            Tok::Assign => "=",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Leq => "<=",
            Tok::EqEq => "==",
            Tok::Num(_) | Tok::Ident(_) | Tok::Eof => "",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Position,
}

/// Splits `input` into tokens. `first_line` is the line number of the first input line.
pub fn tokenize(input: &str, first_line: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (first_line, 1);

    while let Some(&c) = chars.peek() {
        let pos = Position { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            let n = digits.parse::<u64>().map_err(|_| Error::Syntax {
                pos,
                message: format!("number `{digits}` does not fit in 64 bits"),
                expected: vec![],
            })?;
            out.push(Token { tok: Tok::Num(n), pos });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                ident.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Ident(ident), pos });
            continue;
        }
        chars.next();
        column += 1;
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '<' | '=' => {
                if chars.peek() == Some(&'=') {
                    chars.next();
                    column += 1;
                    if c == '<' {
                        Tok::Leq
                    } else {
                        Tok::EqEq
                    }
                } else if c == '=' {
                    Tok::Assign
                } else {
                    return Err(Error::Syntax {
                        pos,
                        message: "unexpected `<`".to_string(),
                        expected: vec!["`<=`".to_string()],
                    });
                }
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    message: format!("unexpected character `{other}`"),
                    expected: vec![],
                })
            }
        };
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Position { line, column },
    });
    Ok(out)
}
