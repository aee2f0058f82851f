//! Recursive-descent parser for the expression language.
//!
//! Grammar (whitespace insensitive):
//!   expr  = set | atom | ident | call | fnlit
//!   set   = "{" [expr ("," expr)*] "}"
//!   call  = opname "(" [expr ("," expr)*] ")"
//!   fnlit = "fn" "(" expr "," expr "," "{" [x "->" y ("," x "->" y)*] "}" ")"
//!   atom  = ident | ident "*" | ident "_T"
//!   ident = [A-Za-z0-9]+
//!
//! Input-only aliases: `∅` for `{}` and a `Θ` suffix (with or without the
//! underscore) for `_T`.

use crate::ast::{Expr, Op};
use sigma_core::Polarity;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{col}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Arrow,
    EmptySet,
    Word { name: String, suffix: Option<Polarity> },
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Arrow => "'->'".into(),
            Tok::EmptySet => "'{}'".into(),
            Tok::Word { name, suffix } => match suffix {
                None => format!("'{name}'"),
                Some(Polarity::Starred) => format!("'{name}*'"),
                Some(Polarity::Theta) => format!("'{name}_T'"),
                Some(Polarity::Plain) => format!("'{name}'"),
            },
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, expected: &[&str], found: String) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn tokens(mut self) -> Result<(Vec<(Tok, u32, u32)>, (u32, u32)), ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(&c) = self.chars.peek() else {
                return Ok((out, (line, col)));
            };
            let tok = match c {
                '{' => {
                    self.bump();
                    Tok::LBrace
                }
                '}' => {
                    self.bump();
                    Tok::RBrace
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '∅' => {
                    self.bump();
                    Tok::EmptySet
                }
                '-' => {
                    self.bump();
                    match self.chars.peek() {
                        Some('>') => {
                            self.bump();
                            Tok::Arrow
                        }
                        other => {
                            let found = other.map_or("end of input".into(), |c| format!("'{c}'"));
                            return Err(self.error(&["'>'"], found));
                        }
                    }
                }
                c if c.is_ascii_alphanumeric() => {
                    let mut name = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                        name.push(self.bump().unwrap());
                    }
                    let suffix = self.atom_suffix()?;
                    Tok::Word { name, suffix }
                }
                other => {
                    return Err(self.error(&["expression"], format!("'{other}'")));
                }
            };
            out.push((tok, line, col));
        }
    }

    fn atom_suffix(&mut self) -> Result<Option<Polarity>, ParseError> {
        match self.chars.peek() {
            Some('*') => {
                self.bump();
                Ok(Some(Polarity::Starred))
            }
            Some('Θ') => {
                self.bump();
                Ok(Some(Polarity::Theta))
            }
            Some('_') => {
                self.bump();
                match self.chars.peek() {
                    Some('T') | Some('Θ') => {
                        self.bump();
                        Ok(Some(Polarity::Theta))
                    }
                    other => {
                        let found = other.map_or("end of input".into(), |c| format!("'{c}'"));
                        Err(self.error(&["'T'"], found))
                    }
                }
            }
            _ => Ok(None),
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, u32, u32)>,
    pos: usize,
    eof: (u32, u32),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let tok = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn here(&self) -> (u32, u32) {
        self.tokens
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.eof)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Tok::describe)
            .unwrap_or_else(|| "end of input".into())
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[expected]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::EmptySet) => {
                self.next();
                Ok(Expr::SetLit(Vec::new()))
            }
            Some(Tok::LBrace) => self.set_literal(),
            Some(Tok::Word { .. }) => {
                let Some(Tok::Word { name, suffix }) = self.next() else {
                    unreachable!()
                };
                match suffix {
                    Some(polarity) => Ok(Expr::Atom { name, polarity }),
                    None if self.peek() == Some(&Tok::LParen) => self.call(name),
                    None => Ok(Expr::Ident(name)),
                }
            }
            _ => Err(self.error(&["expression"])),
        }
    }

    fn set_literal(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LBrace, "'{'")?;
        let mut members = Vec::new();
        if self.peek() == Some(&Tok::RBrace) {
            self.next();
            return Ok(Expr::SetLit(members));
        }
        loop {
            members.push(self.expr()?);
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBrace) => return Ok(Expr::SetLit(members)),
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.error(&["','", "'}'"]));
                }
            }
        }
    }

    fn call(&mut self, name: String) -> Result<Expr, ParseError> {
        if name == "fn" {
            return self.fn_literal();
        }
        let Some(op) = Op::from_name(&name) else {
            // Point at the opname, one token back.
            let (line, col) = self
                .tokens
                .get(self.pos.saturating_sub(1))
                .map(|(_, l, c)| (*l, *c))
                .unwrap_or(self.eof);
            return Err(ParseError {
                line,
                col,
                expected: vec!["an operation name".into()],
                found: format!("'{name}'"),
            });
        };
        self.expect(Tok::LParen, "'('")?;
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::RParen) {
            self.next();
        } else {
            loop {
                args.push(self.expr()?);
                match self.next() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::RParen) => break,
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        return Err(self.error(&["','", "')'"]));
                    }
                }
            }
        }
        if args.len() != op.arity() {
            return Err(self.error(&[&format!(
                "{} argument(s) for {}",
                op.arity(),
                op.name()
            )]));
        }
        Ok(Expr::Call(op, args))
    }

    fn fn_literal(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let domain = Box::new(self.expr()?);
        self.expect(Tok::Comma, "','")?;
        let codomain = Box::new(self.expr()?);
        self.expect(Tok::Comma, "','")?;
        self.expect(Tok::LBrace, "'{'")?;
        let mut mappings = Vec::new();
        if self.peek() == Some(&Tok::RBrace) {
            self.next();
        } else {
            loop {
                let from = self.expr()?;
                self.expect(Tok::Arrow, "'->'")?;
                let to = self.expr()?;
                mappings.push((from, to));
                match self.next() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::RBrace) => break,
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        return Err(self.error(&["','", "'}'"]));
                    }
                }
            }
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(Expr::FnLit {
            domain,
            codomain,
            mappings,
        })
    }
}

/// Parses one complete expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let (tokens, eof) = Lexer::new(input).tokens()?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        eof,
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.error(&["end of input"]));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_fusion_example() {
        let e = parse("fuse({1_T,2*},{1_T,2})").unwrap();
        let Expr::Call(Op::Fuse, args) = e else {
            panic!("not a fuse call")
        };
        assert_eq!(args.len(), 2);
        assert_eq!(
            args[0],
            Expr::SetLit(vec![
                Expr::Atom {
                    name: "1".into(),
                    polarity: Polarity::Theta
                },
                Expr::Atom {
                    name: "2".into(),
                    polarity: Polarity::Starred
                },
            ])
        );
    }

    #[test]
    fn exclusion_violations_still_parse() {
        assert!(parse("{1,1*}").is_ok());
    }

    #[test]
    fn truncated_input_reports_the_column() {
        let err = parse("pair(1,").unwrap_err();
        assert_eq!((err.line, err.col), (1, 8));
        assert_eq!(err.found, "end of input");
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("∅").unwrap(), Expr::SetLit(vec![]));
        let theta = Expr::Atom {
            name: "1".into(),
            polarity: Polarity::Theta,
        };
        assert_eq!(parse("1_Θ").unwrap(), theta);
        assert_eq!(parse("1Θ").unwrap(), theta);
        assert_eq!(parse("1_T").unwrap(), theta);
    }

    #[test]
    fn bare_idents_and_suffixed_atoms() {
        assert_eq!(parse("x1").unwrap(), Expr::Ident("x1".into()));
        assert_eq!(
            parse("2*").unwrap(),
            Expr::Atom {
                name: "2".into(),
                polarity: Polarity::Starred
            }
        );
    }

    #[test]
    fn fn_literal() {
        let e = parse("fn({1,2}, {1,2}, {1 -> 2, 2 -> 1})").unwrap();
        let Expr::FnLit { mappings, .. } = e else {
            panic!("not a fn literal")
        };
        assert_eq!(mappings.len(), 2);
        // Zero mappings make the empty function.
        assert!(parse("fn({}, {}, {})").is_ok());
    }

    #[test]
    fn arity_is_checked_at_parse_time() {
        let err = parse("fuse({1})").unwrap_err();
        assert!(err.to_string().contains("2 argument(s) for fuse"));
        assert!(parse("star(1,2)").is_err());
    }

    #[test]
    fn unknown_operations_are_rejected() {
        let err = parse("frobnicate(1)").unwrap_err();
        assert!(err.to_string().contains("operation name"));
        assert_eq!(err.col, 1);
    }

    #[test]
    fn whitespace_is_insensitive() {
        assert_eq!(
            parse("fuse( {1_T, 2*} , {1_T,2} )").unwrap(),
            parse("fuse({1_T,2*},{1_T,2})").unwrap()
        );
    }

    #[test]
    fn trailing_garbage_is_an_error() {
        let err = parse("{1} {2}").unwrap_err();
        assert_eq!(err.expected, vec!["end of input".to_string()]);
    }
}
