//! A small integer expression language used by the seiferter catalog.
//!
//! Catalog entries describe infinite families, so their linking numbers,
//! validity conditions, and hyperbolicity conditions are expressions over
//! the host parameters `p`, `q`, `m` and an optional family parameter `n`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! or    := and ("||" and)*
//! and   := cmp ("&&" cmp)*
//! cmp   := sum (("==" | "!=" | "<=" | ">=" | "<" | ">") sum)?
//! sum   := prod (("+" | "-") prod)*
//! prod  := unary (("*" | "%") unary)*
//! unary := "-" unary | "!" unary | atom
//! atom  := integer | "p" | "q" | "m" | "n" | "true" | "false"
//!        | "abs" "(" or ")" | "sgn" "(" or ")" | "(" or ")"
//! ```
//!
//! Arithmetic is exact over 128-bit integers and overflow is an error.
//! `%` is the truncated remainder (the sign follows the dividend), which
//! is all the catalog needs for divisibility tests.  `&&` and `||`
//! short-circuit, so a guard such as `m != 0 && 60 % m == 0` is safe.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Variables available to catalog expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    P,
    Q,
    M,
    N,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
            Var::M => "m",
            Var::N => "n",
        }
    }
}

/// Unary operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Not,
    Abs,
    Sgn,
}

/// Binary operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Mod,
    Eq,
    Ne,
    Le,
    Ge,
    Lt,
    Gt,
    And,
    Or,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Mod => "%",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::Le => "<=",
            BinOp::Ge => ">=",
            BinOp::Lt => "<",
            BinOp::Gt => ">",
            BinOp::And => "&&",
            BinOp::Or => "||",
        }
    }
}

/// A parsed expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i128),
    Bool(bool),
    Var(Var),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

/// Values produced by evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Int(i128),
    Bool(bool),
}

/// Variable bindings for evaluation.  Unbound variables evaluate to an
/// [`EvalError::UnboundVar`] error rather than a default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Env {
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub m: Option<i64>,
    pub n: Option<i64>,
}

impl Env {
    /// Bindings for a surgery host `(T(p,q), m)`.
    pub fn host(p: i64, q: i64, m: i64) -> Self {
        Env {
            p: Some(p),
            q: Some(q),
            m: Some(m),
            n: None,
        }
    }

    /// Adds a family-parameter binding.
    pub fn with_n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    fn get(&self, var: Var) -> Option<i64> {
        match var {
            Var::P => self.p,
            Var::Q => self.q,
            Var::M => self.m,
            Var::N => self.n,
        }
    }
}

/// Errors raised while parsing an expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("integer literal out of range")]
    IntOutOfRange,
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("expected {expected} but found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("trailing input starting at token {0:?}")]
    TrailingInput(String),
    #[error("comparison chains like a < b < c are not supported")]
    ChainedComparison,
}

/// Errors raised while evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0} is not bound in this context")]
    UnboundVar(&'static str),
    #[error("expected an integer value but found a boolean")]
    ExpectedInt,
    #[error("expected a boolean value but found an integer")]
    ExpectedBool,
    #[error("remainder by zero")]
    RemainderByZero,
    #[error("integer overflow during evaluation")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i128),
    Ident(String),
    Op(BinOp),
    Not,
    Minus,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &input[start..i];
                let value = lit.parse().map_err(|_| ParseError::IntOutOfRange)?;
                tokens.push(Token::Int(value));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token::Ident(input[start..i].to_owned()));
            }
            '+' => {
                tokens.push(Token::Op(BinOp::Add));
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Op(BinOp::Mul));
                i += 1;
            }
            '%' => {
                tokens.push(Token::Op(BinOp::Mod));
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '=' | '!' | '<' | '>' | '&' | '|' => {
                let two = bytes.get(i + 1).map(|&b| b as char);
                let token = match (c, two) {
                    ('=', Some('=')) => Some((Token::Op(BinOp::Eq), 2)),
                    ('!', Some('=')) => Some((Token::Op(BinOp::Ne), 2)),
                    ('<', Some('=')) => Some((Token::Op(BinOp::Le), 2)),
                    ('>', Some('=')) => Some((Token::Op(BinOp::Ge), 2)),
                    ('&', Some('&')) => Some((Token::Op(BinOp::And), 2)),
                    ('|', Some('|')) => Some((Token::Op(BinOp::Or), 2)),
                    ('<', _) => Some((Token::Op(BinOp::Lt), 1)),
                    ('>', _) => Some((Token::Op(BinOp::Gt), 1)),
                    ('!', _) => Some((Token::Not, 1)),
                    _ => None,
                };
                match token {
                    Some((t, len)) => {
                        tokens.push(t);
                        i += len;
                    }
                    None => return Err(ParseError::UnexpectedChar(c, i)),
                }
            }
            _ => return Err(ParseError::UnexpectedChar(c, i)),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, ParseError> {
        let token = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        token.ok_or(ParseError::UnexpectedEnd)
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            Token::RParen => Ok(()),
            other => Err(ParseError::Unexpected {
                expected: "')'",
                found: format!("{other:?}"),
            }),
        }
    }

    fn parse_or(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_and()?;
        while matches!(self.peek(), Some(Token::Op(BinOp::Or))) {
            self.pos += 1;
            let rhs = self.parse_and()?;
            lhs = Expr::Binary(BinOp::Or, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_cmp()?;
        while matches!(self.peek(), Some(Token::Op(BinOp::And))) {
            self.pos += 1;
            let rhs = self.parse_cmp()?;
            lhs = Expr::Binary(BinOp::And, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_cmp(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.parse_sum()?;
        let op = match self.peek() {
            Some(Token::Op(op @ (BinOp::Eq | BinOp::Ne | BinOp::Le | BinOp::Ge | BinOp::Lt | BinOp::Gt))) => *op,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.parse_sum()?;
        if matches!(
            self.peek(),
            Some(Token::Op(BinOp::Eq | BinOp::Ne | BinOp::Le | BinOp::Ge | BinOp::Lt | BinOp::Gt))
        ) {
            return Err(ParseError::ChainedComparison);
        }
        Ok(Expr::Binary(op, Box::new(lhs), Box::new(rhs)))
    }

    fn parse_sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_prod()?;
        loop {
            let op = match self.peek() {
                Some(Token::Op(BinOp::Add)) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.parse_prod()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_prod(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_unary()?;
        while let Some(Token::Op(op @ (BinOp::Mul | BinOp::Mod))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.parse_unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                let inner = self.parse_unary()?;
                Ok(Expr::Unary(UnaryOp::Neg, Box::new(inner)))
            }
            Some(Token::Not) => {
                self.pos += 1;
                let inner = self.parse_unary()?;
                Ok(Expr::Unary(UnaryOp::Not, Box::new(inner)))
            }
            _ => self.parse_atom(),
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.next()? {
            Token::Int(value) => Ok(Expr::Int(value)),
            Token::Ident(name) => match name.as_str() {
                "p" => Ok(Expr::Var(Var::P)),
                "q" => Ok(Expr::Var(Var::Q)),
                "m" => Ok(Expr::Var(Var::M)),
                "n" => Ok(Expr::Var(Var::N)),
                "true" => Ok(Expr::Bool(true)),
                "false" => Ok(Expr::Bool(false)),
                "abs" | "sgn" => {
                    let op = if name == "abs" { UnaryOp::Abs } else { UnaryOp::Sgn };
                    match self.next()? {
                        Token::LParen => {}
                        other => {
                            return Err(ParseError::Unexpected {
                                expected: "'(' after function name",
                                found: format!("{other:?}"),
                            })
                        }
                    }
                    let inner = self.parse_or()?;
                    self.expect_rparen()?;
                    Ok(Expr::Unary(op, Box::new(inner)))
                }
                _ => Err(ParseError::UnknownIdentifier(name)),
            },
            Token::LParen => {
                let inner = self.parse_or()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            other => Err(ParseError::Unexpected {
                expected: "an integer, variable, or '('",
                found: format!("{other:?}"),
            }),
        }
    }
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(input)?;
        let mut parser = Parser { tokens, pos: 0 };
        let expr = parser.parse_or()?;
        match parser.peek() {
            None => Ok(expr),
            Some(token) => Err(ParseError::TrailingInput(format!("{token:?}"))),
        }
    }
}

impl Expr {
    /// Evaluates the expression under `env`.
    pub fn eval(&self, env: &Env) -> Result<Value, EvalError> {
        match self {
            Expr::Int(value) => Ok(Value::Int(*value)),
            Expr::Bool(value) => Ok(Value::Bool(*value)),
            Expr::Var(var) => env
                .get(*var)
                .map(|v| Value::Int(v as i128))
                .ok_or(EvalError::UnboundVar(var.name())),
            Expr::Unary(op, inner) => match op {
                UnaryOp::Neg => {
                    let v = inner.eval_int(env)?;
                    v.checked_neg().map(Value::Int).ok_or(EvalError::Overflow)
                }
                UnaryOp::Not => Ok(Value::Bool(!inner.eval_bool(env)?)),
                UnaryOp::Abs => {
                    let v = inner.eval_int(env)?;
                    v.checked_abs().map(Value::Int).ok_or(EvalError::Overflow)
                }
                UnaryOp::Sgn => Ok(Value::Int(inner.eval_int(env)?.signum())),
            },
            Expr::Binary(op, lhs, rhs) => match op {
                BinOp::And => {
                    if !lhs.eval_bool(env)? {
                        return Ok(Value::Bool(false));
                    }
                    Ok(Value::Bool(rhs.eval_bool(env)?))
                }
                BinOp::Or => {
                    if lhs.eval_bool(env)? {
                        return Ok(Value::Bool(true));
                    }
                    Ok(Value::Bool(rhs.eval_bool(env)?))
                }
                BinOp::Add | BinOp::Sub | BinOp::Mul | BinOp::Mod => {
                    let a = lhs.eval_int(env)?;
                    let b = rhs.eval_int(env)?;
                    let out = match op {
                        BinOp::Add => a.checked_add(b),
                        BinOp::Sub => a.checked_sub(b),
                        BinOp::Mul => a.checked_mul(b),
                        BinOp::Mod => {
                            if b == 0 {
                                return Err(EvalError::RemainderByZero);
                            }
                            a.checked_rem(b)
                        }
                        _ => unreachable!(),
                    };
                    out.map(Value::Int).ok_or(EvalError::Overflow)
                }
                BinOp::Eq | BinOp::Ne | BinOp::Le | BinOp::Ge | BinOp::Lt | BinOp::Gt => {
                    let a = lhs.eval_int(env)?;
                    let b = rhs.eval_int(env)?;
                    let out = match op {
                        BinOp::Eq => a == b,
                        BinOp::Ne => a != b,
                        BinOp::Le => a <= b,
                        BinOp::Ge => a >= b,
                        BinOp::Lt => a < b,
                        BinOp::Gt => a > b,
                        _ => unreachable!(),
                    };
                    Ok(Value::Bool(out))
                }
            },
        }
    }

    /// Evaluates and requires an integer result.
    pub fn eval_int(&self, env: &Env) -> Result<i128, EvalError> {
        match self.eval(env)? {
            Value::Int(v) => Ok(v),
            Value::Bool(_) => Err(EvalError::ExpectedInt),
        }
    }

    /// Evaluates and requires a boolean result.
    pub fn eval_bool(&self, env: &Env) -> Result<bool, EvalError> {
        match self.eval(env)? {
            Value::Bool(v) => Ok(v),
            Value::Int(_) => Err(EvalError::ExpectedBool),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(BinOp::Or, ..) => 1,
            Expr::Binary(BinOp::And, ..) => 2,
            Expr::Binary(
                BinOp::Eq | BinOp::Ne | BinOp::Le | BinOp::Ge | BinOp::Lt | BinOp::Gt,
                ..,
            ) => 3,
            Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 4,
            Expr::Binary(BinOp::Mul | BinOp::Mod, ..) => 5,
            Expr::Unary(UnaryOp::Neg | UnaryOp::Not, _) => 6,
            _ => 7,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Expr::Int(v) => write!(f, "{v}")?,
            Expr::Bool(v) => write!(f, "{v}")?,
            Expr::Var(var) => f.write_str(var.name())?,
            Expr::Unary(UnaryOp::Neg, inner) => {
                f.write_str("-")?;
                inner.fmt_prec(f, prec + 1)?;
            }
            Expr::Unary(UnaryOp::Not, inner) => {
                f.write_str("!")?;
                inner.fmt_prec(f, prec + 1)?;
            }
            Expr::Unary(UnaryOp::Abs, inner) => {
                f.write_str("abs(")?;
                inner.fmt_prec(f, 0)?;
                f.write_str(")")?;
            }
            Expr::Unary(UnaryOp::Sgn, inner) => {
                f.write_str("sgn(")?;
                inner.fmt_prec(f, 0)?;
                f.write_str(")")?;
            }
            Expr::Binary(op, lhs, rhs) => {
                lhs.fmt_prec(f, prec)?;
                write!(f, " {} ", op.symbol())?;
                rhs.fmt_prec(f, prec + 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Serialize for Expr {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Expr {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
