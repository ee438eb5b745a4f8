//! Recursive-descent parser for the formula grammar.
//!
//! Grammar, loosest first: `<->` (right-associative), `->` (right-associative),
//! `|` (left), `&` (left), `!` (tightest). Atoms match `[a-z][a-z0-9_]*`;
//! `true` and `false` are constants; whitespace is insignificant.

use crate::error::ParseError;
use crate::formula::{and, atom, canonicalize, iff, implies, not, or, Formula};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Bang => "`!`".into(),
            Token::Amp => "`&`".into(),
            Token::Pipe => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::DoubleArrow => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(usize, Token), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Token::Eof));
        }
        let c = self.src[self.pos];
        match c {
            b'!' => {
                self.pos += 1;
                Ok((start, Token::Bang))
            }
            b'&' => {
                self.pos += 1;
                Ok((start, Token::Amp))
            }
            b'|' => {
                self.pos += 1;
                Ok((start, Token::Pipe))
            }
            b'(' => {
                self.pos += 1;
                Ok((start, Token::LParen))
            }
            b')' => {
                self.pos += 1;
                Ok((start, Token::RParen))
            }
            b'-' => {
                if self.src.get(self.pos + 1) == Some(&b'>') {
                    self.pos += 2;
                    Ok((start, Token::Arrow))
                } else {
                    Err(ParseError {
                        position: start,
                        expected: vec!["`->`"],
                        found: "`-`".into(),
                    })
                }
            }
            b'<' => {
                if self.src.get(self.pos + 1) == Some(&b'-')
                    && self.src.get(self.pos + 2) == Some(&b'>')
                {
                    self.pos += 3;
                    Ok((start, Token::DoubleArrow))
                } else {
                    Err(ParseError {
                        position: start,
                        expected: vec!["`<->`"],
                        found: "`<`".into(),
                    })
                }
            }
            b'a'..=b'z' => {
                let mut end = self.pos + 1;
                while end < self.src.len()
                    && (self.src[end].is_ascii_lowercase()
                        || self.src[end].is_ascii_digit()
                        || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end])
                    .expect("identifier bytes are ascii")
                    .to_string();
                self.pos = end;
                match name.as_str() {
                    "true" => Ok((start, Token::True)),
                    "false" => Ok((start, Token::False)),
                    _ => Ok((start, Token::Ident(name))),
                }
            }
            other => Err(ParseError {
                position: start,
                expected: vec!["atom", "`true`", "`false`", "`!`", "`(`"],
                found: format!("`{}`", char::from(other)),
            }),
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Token) {
        &self.tokens[self.index]
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (pos, tok) = self.peek();
        ParseError {
            position: *pos,
            expected,
            found: tok.describe(),
        }
    }

    // iff := implies ('<->' iff)?
    fn parse_iff(&mut self) -> Result<Formula, ParseError> {
        let left = self.parse_implies()?;
        if self.peek().1 == Token::DoubleArrow {
            self.bump();
            let right = self.parse_iff()?;
            Ok(iff(left, right))
        } else {
            Ok(left)
        }
    }

    // implies := or ('->' implies)?
    fn parse_implies(&mut self) -> Result<Formula, ParseError> {
        let left = self.parse_or()?;
        if self.peek().1 == Token::Arrow {
            self.bump();
            let right = self.parse_implies()?;
            Ok(implies(left, right))
        } else {
            Ok(left)
        }
    }

    // or := and ('|' and)*
    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_and()?;
        while self.peek().1 == Token::Pipe {
            self.bump();
            let rhs = self.parse_and()?;
            acc = or(acc, rhs);
        }
        Ok(acc)
    }

    // and := unary ('&' unary)*
    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_unary()?;
        while self.peek().1 == Token::Amp {
            self.bump();
            let rhs = self.parse_unary()?;
            acc = and(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        if self.peek().1 == Token::Bang {
            self.bump();
            let child = self.parse_unary()?;
            return Ok(not(child));
        }
        self.parse_primary()
    }

    fn parse_primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().1.clone() {
            Token::Ident(name) => {
                self.bump();
                Ok(atom(&name))
            }
            Token::True => {
                self.bump();
                Ok(Formula::Top)
            }
            Token::False => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Token::LParen => {
                self.bump();
                let inner = self.parse_iff()?;
                if self.peek().1 == Token::RParen {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.error(vec!["`)`"]))
                }
            }
            _ => Err(self.error(vec!["atom", "`true`", "`false`", "`!`", "`(`"])),
        }
    }
}

/// Parses a formula and returns it in canonical form.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    loop {
        let (pos, tok) = lexer.next()?;
        let done = tok == Token::Eof;
        tokens.push((pos, tok));
        if done {
            break;
        }
    }
    let mut parser = Parser { tokens, index: 0 };
    let f = parser.parse_iff()?;
    if parser.peek().1 != Token::Eof {
        return Err(parser.error(vec!["end of input", "binary operator"]));
    }
    Ok(canonicalize(&f))
}
