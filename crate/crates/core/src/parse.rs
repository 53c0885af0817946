//! Text input: polynomials, ideals, rings, gradings, orders and point lists.
//!
//! Positions in parse errors are 1-based character offsets into the input;
//! errors at end of input point one past the last character.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{GradingMap, Monomial, MonomialOrder, Polynomial, RingSpec};
use crate::scalar::{Field, Scalar};

/// Order used for polynomials produced by the parser.
pub const PARSE_ORDER: MonomialOrder = MonomialOrder::Lex;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == den_start {
                    return Err(Error::parse(
                        offset + i + 1,
                        "expected denominator after `/`",
                    ));
                }
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::parse(pos, format!("unexpected character `{c}`"))),
        };
        out.push((tok, pos));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    ring: &'a Arc<RingSpec>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.at += 1;
            }
            Some(Tok::Plus) => self.at += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut after_number = matches!(self.peek(), Some(Tok::Num(_)));
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    after_number = matches!(self.peek(), Some(Tok::Num(_)));
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) if after_number => {
                    after_number = false;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Num(_)) => {
                    return Err(Error::parse(
                        self.pos(),
                        "implicit multiplication: write `*` between factors",
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let pos = self.pos();
            match self.toks.get(self.at) {
                Some((Tok::Num(n), _)) if !n.contains('/') => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("malformed exponent `{n}`")))?;
                    self.at += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::parse(pos, "malformed exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        let Some((tok, _)) = self.toks.get(self.at).cloned() else {
            return Err(Error::parse(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Num(n) => {
                let c = self
                    .ring
                    .field()
                    .parse_scalar(&n)
                    .map_err(|e| Error::parse(pos, e.to_string()))?;
                Ok(Polynomial::constant(self.ring, PARSE_ORDER, c))
            }
            Tok::Ident(name) => match self.ring.variable_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, PARSE_ORDER, i)),
                None => Err(Error::parse(pos, format!("unknown variable `{name}`"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::parse(self.pos(), "expected `)`"));
                }
                self.at += 1;
                Ok(inner)
            }
            _ => Err(Error::parse(pos, "expected a term")),
        }
    }
}

fn parse_at(text: &str, offset: usize, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let toks = tokenize(text, offset)?;
    let end = offset + text.chars().count() + 1;
    if toks.is_empty() {
        return Err(Error::parse(offset + 1, "empty input"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end,
        ring,
    };
    let poly = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::parse(p.pos(), "unexpected token"));
    }
    Ok(poly)
}

pub fn parse_polynomial(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    parse_at(text, 0, ring)
}

/// Parses a comma-separated generator list such as `x^2, x*y, y^3`.
pub fn parse_generators(text: &str, ring: &Arc<RingSpec>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_at(piece, offset, ring)?);
        offset += piece.chars().count() + 1;
    }
    Ok(out)
}

/// Parses `QQ`, `GF(p)`.
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(Field::Rational);
    }
    if let Some(inner) = t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
        let p: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::parse(4, format!("malformed modulus `{inner}`")))?;
        return Field::prime(p);
    }
    Err(Error::parse(1, format!("unknown field `{t}`")))
}

/// Parses `QQ[x,y]` or `GF(32003)[a,b,c]`.
pub fn parse_ring(text: &str) -> Result<Arc<RingSpec>> {
    let t = text.trim();
    let open = t
        .find('[')
        .ok_or_else(|| Error::parse(t.chars().count() + 1, "expected `[` in ring"))?;
    let inner = t[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| Error::parse(t.chars().count() + 1, "expected `]` closing ring"))?;
    let field = parse_field(&t[..open])?;
    let vars: Vec<&str> = inner
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .collect();
    RingSpec::new(field, vars)
}

/// Parses an integer weight matrix literal like `[[1,1]]` or `[[1,0],[0,1]]`.
pub fn parse_grading(text: &str, nvars: usize) -> Result<GradingMap> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text.trim()).map_err(|e| Error::Parse {
        position: e.column().max(1),
        message: format!("malformed weight matrix: {e}"),
    })?;
    GradingMap::new(nvars, rows)
}

pub fn format_grading(g: &GradingMap) -> String {
    let rows: Vec<String> = g
        .rows()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Parses `lex`, `grevlex` or `elim(k)`.
pub fn parse_order(text: &str) -> Result<MonomialOrder> {
    let t = text.trim();
    match t {
        "lex" => Ok(MonomialOrder::Lex),
        "grevlex" => Ok(MonomialOrder::GrevLex),
        _ => t
            .strip_prefix("elim(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|k| k.trim().parse().ok())
            .map(MonomialOrder::Elimination)
            .ok_or_else(|| Error::parse(1, format!("unknown monomial order `{t}`"))),
    }
}

pub fn format_order(order: MonomialOrder) -> String {
    match order {
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::Elimination(k) => format!("elim({k})"),
    }
}

/// Parses a list of tuples such as `(0,1); (1/2,-3)`.
pub fn parse_tuples(text: &str, field: Field) -> Result<Vec<Vec<Scalar>>> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    loop {
        let skip = rest.len()
            - rest
                .trim_start_matches(|c: char| c.is_whitespace() || c == ';')
                .len();
        offset += rest[..skip].chars().count();
        rest = &rest[skip..];
        if rest.is_empty() {
            break;
        }
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(offset + 1, "expected `(`"));
        };
        let close = body
            .find(')')
            .ok_or_else(|| Error::parse(offset + rest.chars().count() + 1, "expected `)`"))?;
        let mut tuple = Vec::new();
        for part in body[..close].split(',') {
            tuple.push(field.parse_scalar(part).map_err(|_| {
                Error::parse(
                    offset + 2,
                    format!("malformed coordinate `{}`", part.trim()),
                )
            })?);
        }
        out.push(tuple);
        let used = 1 + close + 1;
        offset += rest[..used].chars().count();
        rest = &rest[used..];
    }
    Ok(out)
}

/// Prints a monomial the way the parser reads it back.
pub fn format_monomial(ring: &RingSpec, mono: &Monomial) -> String {
    struct Show<'a>(&'a RingSpec, &'a Monomial);
    impl std::fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            crate::ring::write_monomial(f, self.0, self.1)
        }
    }
    Show(ring, mono).to_string()
}
