//! Recursive-descent parser for the ASCII surface syntax.
//!
//! ```text
//! type       := atom | atom "->" type
//! atom       := identifier | "(" type ")"
//! constraint := type "=" type
//! ```
//!
//! Constraint files hold one constraint per line; `#` starts a comment and
//! blank lines are skipped.

use std::fmt;

use thiserror::Error;

use crate::constraint::{Constraint, ConstraintList};
use crate::term::{TypeTerm, TypeVar};

/// Positions are 1-based and count characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Arrow,
    Equals,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::Equals => f.write_str("'='"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
                continue;
            }
            '(' | ')' | '=' => {
                chars.next();
                column += 1;
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Equals,
                };
                out.push(Spanned {
                    tok,
                    line: start_line,
                    column: start_col,
                });
            }
            '-' => {
                chars.next();
                column += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    column += 1;
                    out.push(Spanned {
                        tok: Tok::Arrow,
                        line: start_line,
                        column: start_col,
                    });
                } else {
                    return Err(ParseError {
                        line: start_line,
                        column: start_col,
                        message: "expected '->' after '-'".to_string(),
                        expected: vec!["'->'".to_string()],
                    });
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(name),
                    line: start_line,
                    column: start_col,
                });
            }
            other => {
                return Err(ParseError {
                    line: start_line,
                    column: start_col,
                    message: format!("unexpected character {other:?}"),
                    expected: vec![
                        "identifier".into(),
                        "'('".into(),
                        "')'".into(),
                        "'->'".into(),
                    ],
                });
            }
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let at = self.peek();
        let list = match expected {
            [one] => one.to_string(),
            [init @ .., last] => format!("{} or {}", init.join(", "), last),
            [] => "nothing".to_string(),
        };
        ParseError {
            line: at.line,
            column: at.column,
            message: format!("expected {list}, found {}", at.tok),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn ty(&mut self) -> Result<TypeTerm, ParseError> {
        let left = self.atom()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let right = self.ty()?;
            Ok(TypeTerm::arrow(left, right))
        } else {
            Ok(left)
        }
    }

    fn atom(&mut self) -> Result<TypeTerm, ParseError> {
        match &self.peek().tok {
            Tok::Ident(name) => {
                let v = TypeVar::new(name).expect("lexer only yields valid identifiers");
                self.bump();
                Ok(TypeTerm::Var(v))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.ty()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error(&["'->'", "')'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&["identifier", "'('"])),
        }
    }

    fn finish(&self, expected: &[&str]) -> Result<(), ParseError> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }
}

pub fn parse_type(text: &str) -> Result<TypeTerm, ParseError> {
    let mut p = Parser {
        toks: lex(text, 1)?,
        pos: 0,
    };
    let t = p.ty()?;
    p.finish(&["'->'", "end of input"])?;
    Ok(t)
}

fn parse_constraint_line(line: &str, line_no: usize) -> Result<Constraint, ParseError> {
    let mut p = Parser {
        toks: lex(line, line_no)?,
        pos: 0,
    };
    let lhs = p.ty()?;
    if p.peek().tok != Tok::Equals {
        return Err(p.error(&["'->'", "'='"]));
    }
    p.bump();
    let rhs = p.ty()?;
    p.finish(&["'->'", "end of line"])?;
    Ok(Constraint::new(lhs, rhs))
}

pub fn parse_constraints(text: &str) -> Result<ConstraintList, ParseError> {
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        items.push(parse_constraint_line(body, i + 1)?);
    }
    Ok(ConstraintList::new(items))
}
