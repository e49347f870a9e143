//! The presentation language: `field`, `quiver { ... }`, `relations { ... }`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::quiver::{AlgebraElement, Path, Presentation, Quiver};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Sym(&'static str),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const SYMBOLS: [&str; 12] = ["->", "{", "}", ";", ":", "*", "^", "+", "-", "/", "(", ")"];

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line_no, column) = (lineno + 1, i + 1);
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                // numerals glued to letters form identifiers, e.g. `1a`
                if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_') {
                    while i < chars.len() && is_ident_char(chars[i]) {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    out.push(Token {
                        tok: Tok::Ident(s),
                        line: line_no,
                        column,
                    });
                } else {
                    let s: String = chars[start..i].iter().collect();
                    out.push(Token {
                        tok: Tok::Number(s),
                        line: line_no,
                        column,
                    });
                }
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Ident(s),
                    line: line_no,
                    column,
                });
            } else {
                let rest: String = chars[i..].iter().take(2).collect();
                let sym = SYMBOLS
                    .iter()
                    .find(|s| rest.starts_with(**s))
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        column,
                        message: format!("unexpected character `{c}`"),
                    })?;
                i += sym.len();
                out.push(Token {
                    tok: Tok::Sym(sym),
                    line: line_no,
                    column,
                });
            }
        }
    }
    Ok(out)
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn location(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column))
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.location();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn error_at(&self, at: (usize, usize), message: impl Into<String>) -> Error {
        Error::Parse {
            line: at.0,
            column: at.1,
            message: message.into(),
        }
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(x)) if x == kw)
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn vertex_name(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) | Some(Tok::Number(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected vertex identifier")),
        }
    }

    fn number(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Number(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected number")),
        }
    }

    fn field(&mut self) -> Result<Field> {
        let at = self.location();
        let name = self.ident("`Q` or `GF`")?;
        let field = match name.as_str() {
            "Q" => Field::Rational,
            "GF" => {
                self.expect_sym("(")?;
                let q = self.number()?;
                self.expect_sym(")")?;
                let q: u32 = q
                    .parse()
                    .map_err(|_| self.error_at(at, "modulus too large"))?;
                Field::prime(q).map_err(|e| self.error_at(at, e.to_string()))?
            }
            other => return Err(self.error_at(at, format!("unknown field `{other}`"))),
        };
        self.eat_sym(";");
        Ok(field)
    }

    fn quiver(&mut self) -> Result<Quiver> {
        let mut q = Quiver::new();
        self.expect_sym("{")?;
        loop {
            if self.eat_sym("}") {
                return Ok(q);
            }
            let at = self.location();
            let kw = self.ident("`vertex`, `arrow` or `}`")?;
            match kw.as_str() {
                "vertex" | "vertices" => {
                    let mut any = false;
                    while !self.eat_sym(";") {
                        let at = self.location();
                        let v = self.vertex_name()?;
                        q.add_vertex(&v)
                            .map_err(|e| self.error_at(at, e.to_string()))?;
                        any = true;
                    }
                    if !any {
                        return Err(self.error_at(at, "`vertex` needs at least one identifier"));
                    }
                }
                "arrow" => {
                    let name = self.ident("arrow name")?;
                    self.expect_sym(":")?;
                    let s_at = self.location();
                    let s = self.vertex_name()?;
                    self.expect_sym("->")?;
                    let t = self.vertex_name()?;
                    self.expect_sym(";")?;
                    q.add_arrow(&name, &s, &t)
                        .map_err(|e| self.error_at(s_at, e.to_string()))?;
                }
                other => {
                    return Err(self.error_at(at, format!("unexpected `{other}` in quiver block")))
                }
            }
        }
    }

    fn coefficient(&mut self, field: Field) -> Result<FieldElement> {
        let at = self.location();
        let num = self.number()?;
        let text = if self.eat_sym("/") {
            format!("{num}/{}", self.number()?)
        } else {
            num
        };
        field
            .parse_element(&text)
            .map_err(|e| self.error_at(at, e.to_string()))
    }

    fn term(&mut self, quiver: &Quiver, field: Field) -> Result<(Path, FieldElement)> {
        let at = self.location();
        let mut coef = field.one();
        if matches!(self.peek(), Some(Tok::Number(_))) {
            coef = self.coefficient(field)?;
            if matches!(self.peek(), Some(Tok::Ident(_))) {
                // `2 alpha` without `*`
            } else {
                self.expect_sym("*")?;
            }
        }
        let mut arrows = Vec::new();
        loop {
            let f_at = self.location();
            let name = self.ident("arrow name")?;
            let a = quiver
                .arrow_id(&name)
                .map_err(|_| self.error_at(f_at, format!("unknown arrow `{name}`")))?;
            let mut power = 1usize;
            if self.eat_sym("^") {
                power = self
                    .number()?
                    .parse()
                    .map_err(|_| self.error("exponent too large"))?;
                if power == 0 {
                    return Err(self.error_at(f_at, "exponent must be positive"));
                }
            }
            for _ in 0..power {
                arrows.push(a);
            }
            if !self.eat_sym("*") {
                break;
            }
        }
        arrows.reverse();
        let path =
            Path::from_arrows(quiver, arrows).map_err(|e| self.error_at(at, e.to_string()))?;
        Ok((path, coef))
    }

    fn relation(&mut self, quiver: &Quiver, field: Field) -> Result<AlgebraElement> {
        let mut r = AlgebraElement::zero(field);
        let mut negative = if self.eat_sym("-") {
            true
        } else {
            self.eat_sym("+");
            false
        };
        loop {
            let (p, c) = self.term(quiver, field)?;
            r.add_term(p, if negative { -&c } else { c });
            if self.eat_sym("+") {
                negative = false;
            } else if self.eat_sym("-") {
                negative = true;
            } else {
                return Ok(r);
            }
        }
    }
}

/// Parses presentation source; returns the presentation and notes about
/// normalizations applied to the relations.
pub fn parse_presentation_with_report(src: &str) -> Result<(Presentation, Vec<String>)> {
    let toks = lex(src)?;
    let end = (
        src.lines().count().max(1),
        src.lines().last().map_or(1, |l| l.len() + 1),
    );
    let mut p = Parser { toks, pos: 0, end };
    let mut field = Field::Rational;
    if p.is_keyword("field") {
        p.pos += 1;
        field = p.field()?;
    }
    if !p.is_keyword("quiver") {
        return Err(p.error("expected `quiver` block"));
    }
    p.pos += 1;
    let quiver = p.quiver()?;
    let mut relations = Vec::new();
    let mut starts = Vec::new();
    if p.is_keyword("relations") {
        p.pos += 1;
        p.expect_sym("{")?;
        while !p.eat_sym("}") {
            if p.peek().is_none() {
                return Err(p.error("unterminated relations block"));
            }
            starts.push(p.location());
            relations.push(p.relation(&quiver, field)?);
            p.expect_sym(";")?;
        }
    }
    if p.peek().is_some() {
        return Err(p.error("unexpected input after presentation"));
    }
    for (r, at) in relations.iter().zip(&starts) {
        if let Some((path, _)) = r.terms().find(|(path, _)| path.len() < 2) {
            return Err(p.error_at(
                *at,
                format!(
                    "inadmissible relation: path `{}` has length {}, relations need length at least 2",
                    path.display(&quiver),
                    path.len()
                ),
            ));
        }
    }
    Presentation::new(field, quiver, relations)
}

pub fn parse_presentation(src: &str) -> Result<Presentation> {
    parse_presentation_with_report(src).map(|(p, _)| p)
}

/// Canonical source text; parsing it yields an equal presentation.
pub fn print_presentation(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut out = String::new();
    let _ = writeln!(out, "field {};", p.field);
    let _ = writeln!(out, "quiver {{");
    let _ = writeln!(out, "  vertex {};", q.vertices().join(" "));
    for a in q.arrows() {
        let _ = writeln!(
            out,
            "  arrow {} : {} -> {};",
            a.name,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        );
    }
    let _ = writeln!(out, "}}");
    if !p.relations.is_empty() {
        let _ = writeln!(out, "relations {{");
        for r in &p.relations {
            let _ = writeln!(out, "  {};", r.display(q));
        }
        let _ = writeln!(out, "}}");
    }
    out
}
