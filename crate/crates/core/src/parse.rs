//! The coefficient grammar and the expression parser shared by every input format.
//!
//! Integers, `a/b`, `zeta(n,k)`, `i`, `+ - * / ^` and parentheses. Whitespace is
//! ignored. The same parser reads relations (identifiers are generators) and
//! Hilbert series (the identifier `t`).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cyclotomic::{CycNumber, Rational};
use crate::error::{Error, Result};
use crate::series::Poly;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ident(String),
    Call(String, Vec<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Int(digits.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::parse(0, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(0, format!("expected '{c}' at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e = n
                        .to_i64()
                        .ok_or_else(|| Error::parse(0, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
                }
                _ => Err(Error::parse(0, "exponent must be an integer literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.eat('(') {
                    let mut args = vec![self.expr()?];
                    while self.eat(',') {
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Ident(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(t) => Err(Error::parse(0, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(0, "unexpected end of input")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(0, format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

fn int_arg(e: &Expr) -> Result<i64> {
    match e {
        Expr::Int(n) => n.to_i64().ok_or_else(|| Error::parse(0, "integer too large")),
        Expr::Neg(inner) => Ok(-int_arg(inner)?),
        _ => Err(Error::parse(0, "expected an integer argument")),
    }
}

/// Evaluates `zeta(n,k)` calls.
pub fn eval_call(name: &str, args: &[Expr]) -> Result<CycNumber> {
    match (name, args) {
        ("zeta", [n, k]) => {
            let n = int_arg(n)?;
            if n < 1 {
                return Err(Error::parse(0, "zeta order must be positive"));
            }
            Ok(CycNumber::zeta(n as u64, int_arg(k)?))
        }
        _ => Err(Error::parse(0, format!("unknown function {name}/{}", args.len()))),
    }
}

/// Evaluation of an [`Expr`] into some ring-like target.
pub trait Domain: Sized + Clone {
    fn scalar(c: CycNumber) -> Self;
    fn add(a: Self, b: Self) -> Self;
    fn sub(a: Self, b: Self) -> Self;
    fn mul(a: Self, b: Self) -> Result<Self>;
    fn div(a: Self, b: Self) -> Result<Self>;
    fn neg(a: Self) -> Self;
    fn one() -> Self {
        Self::scalar(CycNumber::one())
    }
    fn recip(a: Self) -> Result<Self> {
        Self::div(Self::one(), a)
    }
}

/// Evaluates `e`; `ident` resolves bare identifiers.
pub fn eval<D: Domain>(e: &Expr, ident: &dyn Fn(&str) -> Result<D>) -> Result<D> {
    Ok(match e {
        Expr::Int(n) => D::scalar(CycNumber::from_rational(Rational::from_integer(n.clone()))),
        Expr::Ident(name) => ident(name)?,
        Expr::Call(name, args) => D::scalar(eval_call(name, args)?),
        Expr::Neg(a) => D::neg(eval(a, ident)?),
        Expr::Add(a, b) => D::add(eval(a, ident)?, eval(b, ident)?),
        Expr::Sub(a, b) => D::sub(eval(a, ident)?, eval(b, ident)?),
        Expr::Mul(a, b) => D::mul(eval(a, ident)?, eval(b, ident)?)?,
        Expr::Div(a, b) => D::div(eval(a, ident)?, eval(b, ident)?)?,
        Expr::Pow(a, k) => {
            let base: D = eval(a, ident)?;
            let mut acc = D::one();
            for _ in 0..k.unsigned_abs() {
                acc = D::mul(acc, base.clone())?;
            }
            if *k < 0 {
                D::recip(acc)?
            } else {
                acc
            }
        }
    })
}

impl Domain for CycNumber {
    fn scalar(c: CycNumber) -> Self {
        c
    }
    fn add(a: Self, b: Self) -> Self {
        a + b
    }
    fn sub(a: Self, b: Self) -> Self {
        a - b
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        Ok(a * b)
    }
    fn div(a: Self, b: Self) -> Result<Self> {
        a.checked_div(&b)
    }
    fn neg(a: Self) -> Self {
        -a
    }
}

fn unknown<T>(name: &str) -> Result<T> {
    Err(Error::parse(0, format!("unknown symbol {name}")))
}

/// Resolves `i`; anything else is an error.
pub fn cyc_ident(name: &str) -> Result<CycNumber> {
    match name {
        "i" => Ok(CycNumber::i()),
        _ => unknown(name),
    }
}

pub fn parse_cyc(s: &str) -> Result<CycNumber> {
    eval(&parse_expr(s)?, &cyc_ident)
}

/// A quotient of polynomials in `t`, unreduced.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl Domain for RatFunc {
    fn scalar(c: CycNumber) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }
    fn add(a: Self, b: Self) -> Self {
        RatFunc { num: &a.num * &b.den + &b.num * &a.den, den: &a.den * &b.den }
    }
    fn sub(a: Self, b: Self) -> Self {
        RatFunc { num: &a.num * &b.den - &b.num * &a.den, den: &a.den * &b.den }
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        Ok(RatFunc { num: &a.num * &b.num, den: &a.den * &b.den })
    }
    fn div(a: Self, b: Self) -> Result<Self> {
        if b.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num: &a.num * &b.den, den: &a.den * &b.num })
    }
    fn neg(a: Self) -> Self {
        RatFunc { num: -&a.num, den: a.den }
    }
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let ident = |name: &str| match name {
        "t" => Ok(RatFunc { num: Poly::t(), den: Poly::one() }),
        _ => cyc_ident(name).map(RatFunc::scalar),
    };
    let f: RatFunc = eval(&parse_expr(s)?, &ident)?;
    // Normalise so the denominator has constant term 1.
    let c0 = f.den.coeff(0);
    if c0.is_zero() {
        return Err(Error::parse(0, "denominator vanishes at t = 0"));
    }
    let inv = c0.inverse()?;
    Ok(RatFunc { num: f.num.scale(&inv), den: f.den.scale(&inv) })
}

/// Splits on commas that are not inside parentheses.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rat;

    #[test]
    fn coefficient_grammar() {
        assert_eq!(parse_cyc("3/4").unwrap(), CycNumber::from_rational(rat(3, 4)));
        assert_eq!(parse_cyc(" i * i ").unwrap(), CycNumber::from_integer(-1));
        assert_eq!(
            parse_cyc("zeta(6,1)+zeta(6, 5)").unwrap(),
            CycNumber::one()
        );
        assert_eq!(parse_cyc("-zeta(4,-1)").unwrap(), CycNumber::i());
        assert_eq!(parse_cyc("(1 + i)^2").unwrap(), CycNumber::i() * CycNumber::from_integer(2));
        assert_eq!(parse_cyc("2^-1").unwrap(), CycNumber::from_rational(rat(1, 2)));
        assert!(parse_cyc("1/0").is_err());
        assert!(parse_cyc("x").is_err());
        assert!(parse_cyc("zeta(0,1)").is_err());
        assert!(parse_cyc("1 +").is_err());
    }

    #[test]
    fn rational_functions() {
        let f = parse_ratfunc("1/((1-t)^3)").unwrap();
        assert!(f.num.is_one());
        assert_eq!(f.den.degree(), Some(3));
        let g = parse_ratfunc("(1 - t + t^2)/((1-t)^2*(1+t^2))").unwrap();
        assert_eq!(g.num.degree(), Some(2));
        assert_eq!(g.den.degree(), Some(4));
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("zeta(3,1), 0, i"), vec!["zeta(3,1)", " 0", " i"]);
    }
}
