//! Small shared expression parser used by the text forms of scalars, Hecke
//! elements and noncommutative polynomials.
//!
//! Grammar (explicit operators only, no implicit multiplication):
//!
//! ```text
//! expr   := term { ('+' | '-') term }
//! term   := factor { ('*' | '.' | '/') factor }
//! factor := '-' factor | primary [ '^' [-]int ]
//! primary:= int | ident [ '(' [-]int ',' [-]int ')' ] | '(' expr ')'
//! ```
//!
//! `.` is ordinary multiplication; it reads naturally in generator words such
//! as `t2.t1` or `g(1,2).g(2,1)`.

use num::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Dot,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(digits.parse().expect("digits")));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '.' => {
                chars.next();
                out.push(Token::Dot);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            ',' => {
                chars.next();
                out.push(Token::Comma);
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Algebra hooks the parser evaluates into.
pub(crate) trait ExprContext {
    type Value: Clone;

    fn int_value(&self, n: &BigInt) -> Self::Value;
    fn atom(&self, name: &str, args: Option<(i64, i64)>) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn pow(&self, a: Self::Value, k: i64) -> Result<Self::Value>;

    fn sub(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        let nb = self.neg(b);
        self.add(a, nb)
    }
}

struct Parser<'c, C: ExprContext> {
    ctx: &'c C,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'c, C: ExprContext> Parser<'c, C> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(found) if found == t => Ok(()),
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let mut negative = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negative = true;
        }
        match self.next() {
            Some(Token::Int(n)) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse("integer too large".into()))?;
                Ok(if negative { -v } else { v })
            }
            other => Err(Error::Parse(format!("expected integer, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<C::Value> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.ctx.add(acc, rhs);
                }
                Some(Token::Minus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.ctx.sub(acc, rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<C::Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) | Some(Token::Dot) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = self.ctx.mul(acc, rhs);
                }
                Some(Token::Slash) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = self.ctx.div(acc, rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<C::Value> {
        if self.peek() == Some(&Token::Minus) {
            self.next();
            let v = self.factor()?;
            return Ok(self.ctx.neg(v));
        }
        let base = self.primary()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let k = self.signed_int()?;
            return self.ctx.pow(base, k);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<C::Value> {
        match self.next() {
            Some(Token::Int(n)) => Ok(self.ctx.int_value(&n)),
            Some(Token::Ident(name)) => {
                if self.peek() == Some(&Token::LParen) {
                    self.next();
                    let a = self.signed_int()?;
                    self.expect(Token::Comma)?;
                    let b = self.signed_int()?;
                    self.expect(Token::RParen)?;
                    self.ctx.atom(&name, Some((a, b)))
                } else {
                    self.ctx.atom(&name, None)
                }
            }
            Some(Token::LParen) => {
                let v = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_expr<C: ExprContext>(ctx: &C, input: &str) -> Result<C::Value> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { ctx, tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(value)
}
