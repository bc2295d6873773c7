//! The expression mini-language: tokens, parser, pretty-printer and normalization.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := sum ( "(x)" sum )?
//! sum     := "-"? term ( ("+" | "-") term )*
//! term    := factor ( "*" factor )*
//! factor  := rational | generator | "[" expr "," expr "]" | "{" expr "," expr "}" | "(" expr ")"
//! rational:= INT ( "/" INT )?
//! generator := "x+[" i "," r "]" | "x-[" i "," r "]" | "h[" i "," r "]" | "ht[" i "," r "]"
//!            | "P+[" r "]" | "P-[" r "]" | "E[" i "," j "]" | "C0"
//! ```
//!
//! A term whose first factor is a scalar literal is a scaled expression.

use std::fmt;
use std::ops::Range;

use logos::Logos;
use yangverify_core::free_superalgebra::{Expr, GeneratorSymbol as G, Scalar};

/// The parsed form of an expression.
pub type ExpressionAst = Expr;

/// Errors of [`parse_expression`]. Positions are byte offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{name}` at column {}", position + 1)]
    UnknownGenerator { position: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownGenerator { position, .. } => {
                *position
            }
        }
    }

    /// The input line with a caret under the error position.
    pub fn render(&self, input: &str) -> String {
        let col = input[..self.position().min(input.len())].chars().count();
        format!("{input}\n{}^\n{self}", " ".repeat(col))
    }
}

#[derive(Logos, Debug, Clone, PartialEq, Eq)]
#[logos(skip r"[ \t\r\n]+")]
enum Token {
    #[token("(x)")]
    Tensor,
    #[token("x+")]
    XPlus,
    #[token("x-")]
    XMinus,
    #[token("ht")]
    TildeH,
    #[token("h")]
    H,
    #[token("P+")]
    PPlus,
    #[token("P-")]
    PMinus,
    #[token("E")]
    E,
    #[token("C0")]
    C0,
    #[regex(r"[A-Za-z_][A-Za-z0-9_]*", priority = 1)]
    Ident,
    #[regex(r"[0-9]+")]
    Int,
    #[token("[")]
    LBracket,
    #[token("]")]
    RBracket,
    #[token("{")]
    LBrace,
    #[token("}")]
    RBrace,
    #[token("(")]
    LParen,
    #[token(")")]
    RParen,
    #[token(",")]
    Comma,
    #[token("*")]
    Star,
    #[token("+")]
    Plus,
    #[token("-")]
    Minus,
    #[token("/")]
    Slash,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::Tensor => "`(x)`",
            Token::XPlus => "`x+`",
            Token::XMinus => "`x-`",
            Token::TildeH => "`ht`",
            Token::H => "`h`",
            Token::PPlus => "`P+`",
            Token::PMinus => "`P-`",
            Token::E => "`E`",
            Token::C0 => "`C0`",
            Token::Ident => "an identifier",
            Token::Int => "an integer",
            Token::LBracket => "`[`",
            Token::RBracket => "`]`",
            Token::LBrace => "`{`",
            Token::RBrace => "`}`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::Comma => "`,`",
            Token::Star => "`*`",
            Token::Plus => "`+`",
            Token::Minus => "`-`",
            Token::Slash => "`/`",
        };
        f.write_str(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<(Token, Range<usize>)>,
    pos: usize,
}

/// Parses one expression.
pub fn parse_expression(text: &str) -> Result<ExpressionAst, ParseError> {
    let mut tokens = Vec::new();
    for (tok, span) in Token::lexer(text).spanned() {
        match tok {
            Ok(t) => tokens.push((t, span)),
            Err(()) => {
                return Err(ParseError::Syntax {
                    position: span.start,
                    message: format!("unexpected character `{}`", &text[span]),
                })
            }
        }
    }
    let mut p = Parser {
        src: text,
        tokens,
        pos: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some((t, span)) => Err(p.syntax(
            span.start,
            format!("unexpected {t} after a complete expression"),
        )),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<(Token, Range<usize>)> {
        self.tokens.get(self.pos).cloned()
    }

    fn syntax(&self, position: usize, message: String) -> ParseError {
        ParseError::Syntax { position, message }
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek().is_some_and(|(u, _)| &u == t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Token) -> Result<Range<usize>, ParseError> {
        match self.peek() {
            Some((u, span)) if u == t => {
                self.pos += 1;
                Ok(span)
            }
            Some((u, span)) => Err(self.syntax(span.start, format!("expected {t}, found {u}"))),
            None => Err(self.syntax(self.src.len(), format!("expected {t}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let a = self.sum()?;
        if self.eat(&Token::Tensor) {
            let b = self.sum()?;
            if let Some((Token::Tensor, span)) = self.peek() {
                return Err(self.syntax(
                    span.start,
                    "only tensor pairs are supported; parenthesize".into(),
                ));
            }
            return Ok(Expr::tensor(a, b));
        }
        Ok(a)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let negate_first = self.eat(&Token::Minus);
        let first = self.term()?;
        terms.push(if negate_first { negate(first) } else { first });
        loop {
            if self.eat(&Token::Plus) {
                terms.push(self.term()?);
            } else if self.eat(&Token::Minus) {
                let t = self.term()?;
                terms.push(negate(t));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Add(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat(&Token::Star) {
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        if let Expr::Scalar(c) = &factors[0] {
            let c = c.clone();
            let mut rest: Vec<Expr> = factors.drain(1..).collect();
            let body = if rest.len() == 1 {
                rest.pop().unwrap()
            } else {
                Expr::Mul(rest)
            };
            return Ok(Expr::Scale(c, Box::new(body)));
        }
        Ok(Expr::Mul(factors))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let Some((tok, span)) = self.peek() else {
            return Err(self.syntax(
                self.src.len(),
                "expected an expression, found end of input".into(),
            ));
        };
        self.pos += 1;
        match tok {
            Token::Int => self.rational(span),
            Token::LBracket | Token::LBrace => {
                let a = self.expr()?;
                self.expect(Token::Comma)?;
                let b = self.expr()?;
                if tok == Token::LBracket {
                    self.expect(Token::RBracket)?;
                    Ok(Expr::bracket(a, b))
                } else {
                    self.expect(Token::RBrace)?;
                    Ok(Expr::anti(a, b))
                }
            }
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Token::C0 => Ok(Expr::C0),
            Token::XPlus | Token::XMinus | Token::H | Token::TildeH | Token::E => {
                self.expect(Token::LBracket)?;
                let a = self.index()?;
                self.expect(Token::Comma)?;
                let b = self.index()?;
                let end = self.expect(Token::RBracket)?.end;
                let name = &self.src[span.start..end];
                let node = u8::try_from(a).ok();
                let sym = match (tok, node) {
                    (Token::XPlus, Some(i)) => G::try_x_plus(i, b).ok(),
                    (Token::XMinus, Some(i)) => G::try_x_minus(i, b).ok(),
                    (Token::H, Some(i)) => G::try_cartan(i, b).ok(),
                    (Token::TildeH, Some(i)) => G::try_tilde_cartan(i, b).ok(),
                    (Token::E, Some(i)) => u8::try_from(b)
                        .ok()
                        .and_then(|j| G::try_matrix_unit(i, j).ok()),
                    _ => None,
                };
                sym.map(Expr::sym)
                    .ok_or_else(|| ParseError::UnknownGenerator {
                        position: span.start,
                        name: name.into(),
                    })
            }
            Token::PPlus | Token::PMinus => {
                self.expect(Token::LBracket)?;
                let r = self.index()?;
                self.expect(Token::RBracket)?;
                Ok(Expr::sym(if tok == Token::PPlus {
                    G::p_plus(r)
                } else {
                    G::p_minus(r)
                }))
            }
            Token::Ident => {
                let mut end = span.end;
                if let Some((Token::LBracket, _)) = self.peek() {
                    while let Some((t, s)) = self.peek() {
                        self.pos += 1;
                        end = s.end;
                        if t == Token::RBracket {
                            break;
                        }
                    }
                }
                Err(ParseError::UnknownGenerator {
                    position: span.start,
                    name: self.src[span.start..end].into(),
                })
            }
            t => Err(self.syntax(span.start, format!("expected an expression, found {t}"))),
        }
    }

    fn rational(&mut self, num: Range<usize>) -> Result<Expr, ParseError> {
        let mut end = num.end;
        if self.eat(&Token::Slash) {
            end = self.expect(Token::Int)?.end;
        }
        let text = &self.src[num.start..end];
        text.parse::<Scalar>()
            .map(Expr::Scalar)
            .map_err(|_| self.syntax(num.start, format!("`{text}` has a zero denominator")))
    }

    fn index(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some((Token::Int, span)) => {
                self.pos += 1;
                self.src[span.clone()]
                    .parse()
                    .map_err(|_| self.syntax(span.start, "index too large".into()))
            }
            Some((Token::Minus, span)) => {
                Err(self.syntax(span.start, "indices and levels must be non-negative".into()))
            }
            Some((t, span)) => {
                Err(self.syntax(span.start, format!("expected an index, found {t}")))
            }
            None => Err(self.syntax(
                self.src.len(),
                "expected an index, found end of input".into(),
            )),
        }
    }
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Scalar(c) => Expr::Scalar(-c),
        Expr::Scale(c, inner) => Expr::Scale(-c, inner),
        other => Expr::Scale(Scalar::from_int(-1), Box::new(other)),
    }
}

/// The canonical form that [`parse_expression`] gives back for the printout of `e`.
pub fn normalize(e: &Expr) -> Expr {
    match e {
        Expr::Scalar(_) | Expr::Sym(_) | Expr::C0 => e.clone(),
        Expr::Add(v) => {
            let mut v: Vec<Expr> = v.iter().map(normalize).collect();
            match v.len() {
                0 => Expr::int(0),
                1 => v.pop().unwrap(),
                _ => Expr::Add(v),
            }
        }
        Expr::Mul(v) => {
            let mut v: Vec<Expr> = v.iter().map(normalize).collect();
            match v.len() {
                0 => Expr::int(1),
                1 => v.pop().unwrap(),
                _ => match &v[0] {
                    Expr::Scalar(c) => {
                        let c = c.clone();
                        normalize(&Expr::Scale(c, Box::new(Expr::Mul(v.split_off(1)))))
                    }
                    _ => Expr::Mul(v),
                },
            }
        }
        Expr::Scale(c, inner) => Expr::Scale(c.clone(), Box::new(normalize(inner))),
        Expr::Bracket(a, b) => Expr::bracket(normalize(a), normalize(b)),
        Expr::AntiBracket(a, b) => Expr::anti(normalize(a), normalize(b)),
        Expr::Tensor(a, b) => Expr::tensor(normalize(a), normalize(b)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Ctx {
    Top,
    Sum,
    Summand,
    Factor,
}

/// Prints an expression in the input grammar.
pub fn pretty(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, Ctx::Top);
    s
}

fn write_expr(out: &mut String, e: &Expr, ctx: Ctx) {
    let wrap = |out: &mut String, inner: &Expr| {
        out.push('(');
        write_expr(out, inner, Ctx::Top);
        out.push(')');
    };
    match e {
        Expr::Scalar(c) if c.is_negative() => {
            out.push('(');
            out.push_str(&c.to_string());
            out.push(')');
        }
        Expr::Scalar(c) => out.push_str(&c.to_string()),
        Expr::Sym(s) => out.push_str(&s.to_string()),
        Expr::C0 => out.push_str("C0"),
        Expr::Add(v) if v.len() >= 2 => {
            if ctx > Ctx::Sum {
                return wrap(out, e);
            }
            for (k, t) in v.iter().enumerate() {
                if k > 0 {
                    out.push_str(" + ");
                }
                write_expr(out, t, Ctx::Summand);
            }
        }
        Expr::Mul(v) if v.len() >= 2 && !matches!(v[0], Expr::Scalar(_)) => {
            if ctx > Ctx::Summand {
                return wrap(out, e);
            }
            for (k, t) in v.iter().enumerate() {
                if k > 0 {
                    out.push_str(" * ");
                }
                write_expr(out, t, Ctx::Factor);
            }
        }
        Expr::Add(_) | Expr::Mul(_) => write_expr(out, &normalize(e), ctx),
        Expr::Scale(c, inner) => {
            if ctx > Ctx::Summand {
                return wrap(out, e);
            }
            write_expr(out, &Expr::Scalar(c.clone()), Ctx::Factor);
            out.push_str(" * ");
            match inner.as_ref() {
                Expr::Mul(v) if v.len() >= 2 && !matches!(v[0], Expr::Scalar(_)) => {
                    write_expr(out, inner, Ctx::Summand)
                }
                other => write_expr(out, other, Ctx::Factor),
            }
        }
        Expr::Bracket(a, b) | Expr::AntiBracket(a, b) => {
            let (open, close) = if matches!(e, Expr::Bracket(..)) {
                ('[', ']')
            } else {
                ('{', '}')
            };
            out.push(open);
            write_expr(out, a, Ctx::Top);
            out.push_str(", ");
            write_expr(out, b, Ctx::Top);
            out.push(close);
        }
        Expr::Tensor(a, b) => {
            if ctx > Ctx::Top {
                return wrap(out, e);
            }
            write_expr(out, a, Ctx::Sum);
            out.push_str(" (x) ");
            write_expr(out, b, Ctx::Sum);
        }
    }
}
