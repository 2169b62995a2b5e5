//! A small TriG/Turtle reader covering the subset this crate emits:
//! `@prefix` declarations, named graph blocks, subject blocks with `;` and
//! `,` lists, IRIs, prefixed names, `a`, string literals with the common
//! escapes, integers, and `[ ... ]` blank nodes.

use std::collections::BTreeMap;

use crate::serialization::SerializationError;

/// One term of a triple. Prefixed names are expanded to full IRIs during
/// parsing; blank nodes get fresh `_:bN` labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Term {
    Iri(String),
    Blank(String),
    Literal(String),
    Integer(i64),
}

impl Term {
    pub fn as_iri(&self) -> Option<&str> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&str> {
        match self {
            Term::Literal(text) => Some(text),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
}

/// Parsed triples, split into the default graph and named graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dataset {
    pub default: Vec<Triple>,
    pub graphs: BTreeMap<String, Vec<Triple>>,
}

impl Dataset {
    pub fn triple_count(&self) -> usize {
        self.default.len() + self.graphs.values().map(Vec::len).sum::<usize>()
    }

    /// Finds a named graph whose IRI ends with `suffix`.
    pub fn graph_by_suffix(&self, suffix: &str) -> Option<(&String, &Vec<Triple>)> {
        self.graphs.iter().find(|(name, _)| name.ends_with(suffix))
    }
}

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

/// Parses TriG (or plain Turtle, which lands in the default graph).
pub fn parse_trig(text: &str) -> Result<Dataset, SerializationError> {
    Parser::new(text).parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Iri(String),
    PName(String, String),
    Literal(String),
    Integer(i64),
    A,
    Dot,
    Semi,
    Comma,
    OpenBrace,
    CloseBrace,
    OpenBracket,
    CloseBracket,
    PrefixKeyword,
    Eof,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        if let Some(c) = c {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        c
    }

    fn error(&self, message: impl Into<String>) -> SerializationError {
        SerializationError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn next_token(&mut self) -> Result<(Token, usize, usize), SerializationError> {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        let line = self.line;
        let column = self.column;
        let Some(&c) = self.chars.peek() else {
            return Ok((Token::Eof, line, column));
        };
        let token = match c {
            '<' => {
                self.bump();
                let mut iri = String::new();
                loop {
                    match self.bump() {
                        Some('>') => break,
                        Some(c) => iri.push(c),
                        None => return Err(self.error("unterminated IRI")),
                    }
                }
                Token::Iri(iri)
            }
            '"' => {
                self.bump();
                let mut value = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some('\\') => value.push('\\'),
                            Some('"') => value.push('"'),
                            Some('n') => value.push('\n'),
                            Some('r') => value.push('\r'),
                            Some('t') => value.push('\t'),
                            Some(other) => {
                                return Err(self.error(format!("unknown escape \\{other}")))
                            }
                            None => return Err(self.error("unterminated string")),
                        },
                        Some(c) => value.push(c),
                        None => return Err(self.error("unterminated string")),
                    }
                }
                Token::Literal(value)
            }
            '.' => {
                self.bump();
                Token::Dot
            }
            ';' => {
                self.bump();
                Token::Semi
            }
            ',' => {
                self.bump();
                Token::Comma
            }
            '{' => {
                self.bump();
                Token::OpenBrace
            }
            '}' => {
                self.bump();
                Token::CloseBrace
            }
            '[' => {
                self.bump();
                Token::OpenBracket
            }
            ']' => {
                self.bump();
                Token::CloseBracket
            }
            '@' => {
                self.bump();
                let word = self.take_word();
                if word == "prefix" {
                    Token::PrefixKeyword
                } else {
                    return Err(self.error(format!("unsupported directive @{word}")));
                }
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' => {
                let mut number = String::new();
                number.push(self.bump().unwrap());
                while let Some(&d) = self.chars.peek() {
                    if d.is_ascii_digit() {
                        number.push(self.bump().unwrap());
                    } else {
                        break;
                    }
                }
                let value = number
                    .parse::<i64>()
                    .map_err(|_| self.error(format!("bad integer {number}")))?;
                Token::Integer(value)
            }
            _ => {
                let word = self.take_word();
                if word.is_empty() {
                    return Err(self.error(format!("unexpected character {c:?}")));
                }
                if word == "a" {
                    Token::A
                } else if let Some(colon) = word.find(':') {
                    Token::PName(word[..colon].to_owned(), word[colon + 1..].to_owned())
                } else {
                    return Err(self.error(format!("unexpected token {word:?}")));
                }
            }
        };
        Ok((token, line, column))
    }

    /// Reads a prefixed-name-ish word: letters, digits and name punctuation.
    fn take_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_alphanumeric() || matches!(c, ':' | '_' | '-' | '.' | '%') {
                // a trailing '.' terminates the statement, not the name
                if c == '.' {
                    let mut clone = self.chars.clone();
                    clone.next();
                    match clone.peek() {
                        Some(&next) if next.is_alphanumeric() || next == '_' => {}
                        _ => break,
                    }
                }
                word.push(self.bump().unwrap());
            } else {
                break;
            }
        }
        word
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<(Token, usize, usize)>,
    prefixes: BTreeMap<String, String>,
    blank_counter: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(text),
            lookahead: None,
            prefixes: BTreeMap::new(),
            blank_counter: 0,
        }
    }

    fn peek(&mut self) -> Result<&Token, SerializationError> {
        if self.lookahead.is_none() {
            self.lookahead = Some(self.lexer.next_token()?);
        }
        Ok(&self.lookahead.as_ref().unwrap().0)
    }

    fn next(&mut self) -> Result<(Token, usize, usize), SerializationError> {
        match self.lookahead.take() {
            Some(t) => Ok(t),
            None => self.lexer.next_token(),
        }
    }

    fn syntax(&self, line: usize, column: usize, message: impl Into<String>) -> SerializationError {
        SerializationError::Syntax { line, column, message: message.into() }
    }

    fn parse(mut self) -> Result<Dataset, SerializationError> {
        let mut dataset = Dataset::default();
        loop {
            match self.peek()? {
                Token::Eof => break,
                Token::PrefixKeyword => {
                    self.next()?;
                    let (token, line, column) = self.next()?;
                    let Token::PName(prefix, rest) = token else {
                        return Err(self.syntax(line, column, "expected prefix name"));
                    };
                    if !rest.is_empty() {
                        return Err(self.syntax(line, column, "malformed prefix declaration"));
                    }
                    let (token, line, column) = self.next()?;
                    let Token::Iri(iri) = token else {
                        return Err(self.syntax(line, column, "expected namespace IRI"));
                    };
                    self.expect_dot()?;
                    self.prefixes.insert(prefix, iri);
                }
                _ => {
                    let (token, line, column) = self.next()?;
                    let subject = self.term_from(token, line, column, &mut dataset.default)?;
                    if matches!(self.peek()?, Token::OpenBrace) {
                        self.next()?;
                        let Term::Iri(graph_name) = subject else {
                            return Err(self.syntax(line, column, "graph name must be an IRI"));
                        };
                        let mut triples = Vec::new();
                        loop {
                            if matches!(self.peek()?, Token::CloseBrace) {
                                self.next()?;
                                break;
                            }
                            let (token, line, column) = self.next()?;
                            let subject = self.term_from(token, line, column, &mut triples)?;
                            self.parse_predicate_object_list(subject, &mut triples)?;
                            self.expect_dot()?;
                        }
                        dataset.graphs.insert(graph_name, triples);
                    } else {
                        self.parse_predicate_object_list(subject, &mut dataset.default)?;
                        self.expect_dot()?;
                    }
                }
            }
        }
        Ok(dataset)
    }

    fn expect_dot(&mut self) -> Result<(), SerializationError> {
        let (token, line, column) = self.next()?;
        if token != Token::Dot {
            return Err(self.syntax(line, column, format!("expected '.', found {token:?}")));
        }
        Ok(())
    }

    fn parse_predicate_object_list(
        &mut self,
        subject: Term,
        sink: &mut Vec<Triple>,
    ) -> Result<(), SerializationError> {
        loop {
            let (token, line, column) = self.next()?;
            let predicate = match token {
                Token::A => Term::Iri(RDF_TYPE.to_owned()),
                other => self.term_from(other, line, column, sink)?,
            };
            loop {
                let (token, line, column) = self.next()?;
                let object = self.term_from(token, line, column, sink)?;
                sink.push(Triple {
                    subject: subject.clone(),
                    predicate: predicate.clone(),
                    object,
                });
                if matches!(self.peek()?, Token::Comma) {
                    self.next()?;
                } else {
                    break;
                }
            }
            if matches!(self.peek()?, Token::Semi) {
                self.next()?;
                // a dangling ';' before '.' is legal Turtle
                if matches!(self.peek()?, Token::Dot | Token::CloseBracket) {
                    break;
                }
            } else {
                break;
            }
        }
        Ok(())
    }

    fn term_from(
        &mut self,
        token: Token,
        line: usize,
        column: usize,
        sink: &mut Vec<Triple>,
    ) -> Result<Term, SerializationError> {
        Ok(match token {
            Token::Iri(iri) => Term::Iri(iri),
            Token::Literal(text) => Term::Literal(text),
            Token::Integer(value) => Term::Integer(value),
            Token::PName(prefix, local) => {
                let namespace = self.prefixes.get(&prefix).ok_or_else(|| {
                    self.syntax(line, column, format!("undeclared prefix {prefix}:"))
                })?;
                Term::Iri(format!("{namespace}{local}"))
            }
            Token::OpenBracket => {
                self.blank_counter += 1;
                let node = Term::Blank(format!("_:b{}", self.blank_counter));
                if matches!(self.peek()?, Token::CloseBracket) {
                    self.next()?;
                } else {
                    self.parse_predicate_object_list(node.clone(), sink)?;
                    let (token, line, column) = self.next()?;
                    if token != Token::CloseBracket {
                        return Err(self.syntax(line, column, "expected ']'"));
                    }
                }
                node
            }
            other => {
                return Err(self.syntax(line, column, format!("unexpected token {other:?}")))
            }
        })
    }
}
