//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Grammar (precedence unary > `&` > `|` > `->` > `<->`; the arrows are
//! right-associative, `&` and `|` left-associative):
//!
//! ```text
//! atoms:  p<N>  i<N>  bot  top
//! unary:  ~f  []f  [<N>]f  [~<N>]f  [e]f  [.<N>]f
//!         <>f  <<N>>f  <~<N>>f  <e>f  <.<N>>f  A f  E f
//! binary: f & f   f | f   f -> f   f <-> f   (f)
//! ```

use super::{Formula, EMOD};

/// Syntax error with a byte offset and the tokens that would have been
/// accepted at that position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "syntax error at byte {}: found {}, expected one of: {}",
            self.offset,
            self.found,
            self.expected.join(", ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    IffOp,
    BoxOp(ModTok),
    DiaOp(ModTok),
    UWord,
    EWord,
    PVar(u32),
    INom(u32),
    Bot,
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ModTok {
    Plain(u32),
    Conv(u32),
    Dot(u32),
}

fn tok_name(t: &Tok) -> String {
    match t {
        Tok::LParen => "\"(\"".into(),
        Tok::RParen => "\")\"".into(),
        Tok::Tilde => "\"~\"".into(),
        Tok::Amp => "\"&\"".into(),
        Tok::Pipe => "\"|\"".into(),
        Tok::Arrow => "\"->\"".into(),
        Tok::IffOp => "\"<->\"".into(),
        Tok::BoxOp(m) => format!("box {m:?}"),
        Tok::DiaOp(m) => format!("diamond {m:?}"),
        Tok::UWord => "\"A\"".into(),
        Tok::EWord => "\"E\"".into(),
        Tok::PVar(n) => format!("\"p{n}\""),
        Tok::INom(n) => format!("\"i{n}\""),
        Tok::Bot => "\"bot\"".into(),
        Tok::Top => "\"top\"".into(),
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, found: String, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.pos,
            found,
            expected,
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self
                .src
                .get(self.pos)
                .map(|c| format!("{:?}", *c as char))
                .unwrap_or_else(|| "end of input".into());
            return Err(self.err(found, vec!["digit"]));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| ParseError {
                offset: start,
                found: "oversized index".into(),
                expected: vec!["index below 2^32"],
            })
    }

    fn expect_byte(&mut self, b: u8, name: &'static str) -> Result<(), ParseError> {
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self
                .src
                .get(self.pos)
                .map(|c| format!("{:?}", *c as char))
                .unwrap_or_else(|| "end of input".into());
            Err(self.err(found, vec![name]))
        }
    }

    fn next(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let at = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'~' => {
                self.pos += 1;
                Tok::Tilde
            }
            b'&' => {
                self.pos += 1;
                Tok::Amp
            }
            b'|' => {
                self.pos += 1;
                Tok::Pipe
            }
            b'-' => {
                self.pos += 1;
                self.expect_byte(b'>', "\">\" (in \"->\")")?;
                Tok::Arrow
            }
            b'[' => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(b']') => {
                        self.pos += 1;
                        Tok::BoxOp(ModTok::Plain(0))
                    }
                    Some(b'~') => {
                        self.pos += 1;
                        let n = self.number()?;
                        self.expect_byte(b']', "\"]\"")?;
                        Tok::BoxOp(ModTok::Conv(n))
                    }
                    Some(b'e') => {
                        self.pos += 1;
                        self.expect_byte(b']', "\"]\"")?;
                        Tok::BoxOp(ModTok::Plain(EMOD))
                    }
                    Some(b'.') => {
                        self.pos += 1;
                        let n = self.number()?;
                        self.expect_byte(b']', "\"]\"")?;
                        Tok::BoxOp(ModTok::Dot(n))
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let n = self.number()?;
                        self.expect_byte(b']', "\"]\"")?;
                        Tok::BoxOp(ModTok::Plain(n))
                    }
                    other => {
                        let found = other
                            .map(|c| format!("{:?}", *c as char))
                            .unwrap_or_else(|| "end of input".into());
                        return Err(
                            self.err(found, vec!["\"]\"", "\"~\"", "\"e\"", "\".\"", "digit"])
                        );
                    }
                }
            }
            b'<' => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(b'-') => {
                        self.pos += 1;
                        self.expect_byte(b'>', "\">\" (in \"<->\")")?;
                        Tok::IffOp
                    }
                    Some(b'>') => {
                        self.pos += 1;
                        Tok::DiaOp(ModTok::Plain(0))
                    }
                    Some(b'~') => {
                        self.pos += 1;
                        let n = self.number()?;
                        self.expect_byte(b'>', "\">\"")?;
                        Tok::DiaOp(ModTok::Conv(n))
                    }
                    Some(b'e') => {
                        self.pos += 1;
                        self.expect_byte(b'>', "\">\"")?;
                        Tok::DiaOp(ModTok::Plain(EMOD))
                    }
                    Some(b'.') => {
                        self.pos += 1;
                        let n = self.number()?;
                        self.expect_byte(b'>', "\">\"")?;
                        Tok::DiaOp(ModTok::Dot(n))
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let n = self.number()?;
                        self.expect_byte(b'>', "\">\"")?;
                        Tok::DiaOp(ModTok::Plain(n))
                    }
                    other => {
                        let found = other
                            .map(|c| format!("{:?}", *c as char))
                            .unwrap_or_else(|| "end of input".into());
                        return Err(self.err(
                            found,
                            vec!["\">\"", "\"-\"", "\"~\"", "\"e\"", "\".\"", "digit"],
                        ));
                    }
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match word {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    "A" => Tok::UWord,
                    "E" => Tok::EWord,
                    _ => {
                        if let Some(rest) = word.strip_prefix('p') {
                            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                                let n = rest.parse::<u32>().map_err(|_| ParseError {
                                    offset: start,
                                    found: "oversized index".into(),
                                    expected: vec!["index below 2^32"],
                                })?;
                                return Ok(Some((at, Tok::PVar(n))));
                            }
                        }
                        if let Some(rest) = word.strip_prefix('i') {
                            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                                let n = rest.parse::<u32>().map_err(|_| ParseError {
                                    offset: start,
                                    found: "oversized index".into(),
                                    expected: vec!["index below 2^32"],
                                })?;
                                return Ok(Some((at, Tok::INom(n))));
                            }
                        }
                        return Err(ParseError {
                            offset: start,
                            found: format!("unknown token \"{word}\""),
                            expected: vec!["p<N>", "i<N>", "bot", "top", "A", "E"],
                        });
                    }
                }
            }
            other => return Err(self.err(format!("{:?}", other as char), vec!["formula"])),
        };
        Ok(Some((at, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

const ATOM_EXPECTED: &[&str] = &[
    "p<N>", "i<N>", "bot", "top", "\"~\"", "\"[\"", "\"<\"", "\"A\"", "\"E\"", "\"(\"",
];

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.toks.get(self.idx).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.toks
            .get(self.idx)
            .map(|(_, t)| tok_name(t))
            .unwrap_or_else(|| "end of input".into())
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.here(),
            found: self.found(),
            expected,
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if matches!(self.peek(), Some(Tok::IffOp)) {
            self.bump();
            let rhs = self.iff()?;
            Ok(Formula::iff(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if matches!(self.peek(), Some(Tok::Arrow)) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while matches!(self.peek(), Some(Tok::Pipe)) {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some(Tok::Amp)) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Some(Tok::BoxOp(_)) => {
                let Some((_, Tok::BoxOp(m))) = self.bump() else {
                    unreachable!()
                };
                let inner = self.unary()?;
                Ok(match m {
                    ModTok::Plain(i) => Formula::bx(i, inner),
                    ModTok::Conv(i) => Formula::conv_box(i, inner),
                    ModTok::Dot(i) => Formula::boxdot(i, inner),
                })
            }
            Some(Tok::DiaOp(_)) => {
                let Some((_, Tok::DiaOp(m))) = self.bump() else {
                    unreachable!()
                };
                let inner = self.unary()?;
                Ok(match m {
                    ModTok::Plain(i) => Formula::dia(i, inner),
                    ModTok::Conv(i) => Formula::conv_dia(i, inner),
                    ModTok::Dot(i) => Formula::diadot(i, inner),
                })
            }
            Some(Tok::UWord) => {
                self.bump();
                Ok(Formula::ubox(self.unary()?))
            }
            Some(Tok::EWord) => {
                self.bump();
                Ok(Formula::ex(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::PVar(n)) => {
                let n = *n;
                self.bump();
                Ok(Formula::var(n))
            }
            Some(Tok::INom(n)) => {
                let n = *n;
                self.bump();
                Ok(Formula::nom(n))
            }
            Some(Tok::Bot) => {
                self.bump();
                Ok(Formula::Bot)
            }
            Some(Tok::Top) => {
                self.bump();
                Ok(Formula::Top)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.iff()?;
                if matches!(self.peek(), Some(Tok::RParen)) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.error(vec!["\")\""]))
                }
            }
            _ => Err(self.error(ATOM_EXPECTED.to_vec())),
        }
    }
}

/// Parses a formula from its textual form, expanding all sugar.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut lexer = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut toks = Vec::new();
    while let Some(t) = lexer.next()? {
        toks.push(t);
    }
    let mut parser = Parser {
        toks,
        idx: 0,
        end: text.len(),
    };
    let f = parser.iff()?;
    if parser.idx != parser.toks.len() {
        return Err(parser.error(vec!["end of input", "binary operator"]));
    }
    Ok(f)
}
