//! Expression parser shared by scalar, polynomial and specialization text formats.

use num_bigint::BigInt;

use super::cyclo::CycNum;
use super::ppoly::Sym;
use super::prat::ParamRat;
use super::Q;
use crate::error::{Error, Result};

/// Indexed main or auxiliary variable named in an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarName {
    X(usize),
    Y(usize),
    Z(usize),
}

/// Values an expression can evaluate into.
pub trait ExprRing: Sized + Clone {
    fn from_scalar(c: ParamRat) -> Self;
    fn var(&self, v: VarName) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn pow(&self, e: i32) -> Result<Self>;
}

impl ExprRing for ParamRat {
    fn from_scalar(c: ParamRat) -> Self {
        c
    }
    fn var(&self, v: VarName) -> Result<Self> {
        Err(Error::Parse(format!("variable {:?} not allowed in a scalar", v)))
    }
    fn add(&self, o: &Self) -> Self {
        ParamRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ParamRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ParamRat::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        ParamRat::div(self, o)
    }
    fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamRat::pow(self, e))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Param(Sym),
    Zeta,
    Var(VarName),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[st..i].iter().collect();
            out.push(Tok::Int(txt.parse().map_err(|_| Error::Parse(txt.clone()))?));
        } else if c == 'κ' {
            out.push(Tok::Param(Sym::Kappa));
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[st..i].iter().collect();
            if word == "kappa" {
                out.push(Tok::Param(Sym::Kappa));
                continue;
            }
            let letters: Vec<char> = word.chars().collect();
            for (j, &l) in letters.iter().enumerate() {
                let last = j + 1 == letters.len();
                let indexed = last && i < chars.len() && chars[i].is_ascii_digit();
                if indexed && matches!(l, 'x' | 'y' | 'z') {
                    let st = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let txt: String = chars[st..i].iter().collect();
                    let n: usize = txt.parse().map_err(|_| Error::Parse(txt.clone()))?;
                    if n == 0 {
                        return Err(Error::Parse(format!("{l}0: indices start at 1")));
                    }
                    out.push(Tok::Var(match l {
                        'x' => VarName::X(n),
                        'y' => VarName::Y(n),
                        _ => VarName::Z(n),
                    }));
                } else if l == 'z' {
                    out.push(Tok::Zeta);
                } else if let Some(sym) = Sym::parse(&l.to_string()) {
                    out.push(Tok::Param(sym));
                } else {
                    return Err(Error::Parse(format!("unknown symbol '{l}' in '{word}'")));
                }
            }
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a, R: ExprRing> {
    toks: Vec<Tok>,
    pos: usize,
    conductor: u32,
    proto: &'a R,
}

impl<'a, R: ExprRing> Parser<'a, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<R> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Param(_)) | Some(Tok::Zeta) | Some(Tok::Var(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<R> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<R> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(R::from_scalar(ParamRat::zero()).sub(&v));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let v = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                i32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            other => return Err(Error::Parse(format!("expected exponent, found {:?}", other))),
        };
        if paren && !self.eat(')') {
            return Err(Error::Parse("expected ')'".into()));
        }
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<R> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<R> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Int(n)) => Ok(R::from_scalar(ParamRat::from_rational(Q::from_integer(n)))),
            Some(Tok::Param(s)) => Ok(R::from_scalar(ParamRat::param(s))),
            Some(Tok::Zeta) => {
                if self.conductor == 1 {
                    return Err(Error::Parse(
                        "'z' needs a declared root of unity (for example z^3=1)".into(),
                    ));
                }
                Ok(R::from_scalar(ParamRat::from_cyc(CycNum::zeta(self.conductor)?)))
            }
            Some(Tok::Var(v)) => self.proto.var(v),
            Some(Tok::Op('(')) => {
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parses `s` into a value of `R`; `z` denotes ζ_conductor.
pub fn parse_expr<R: ExprRing>(s: &str, conductor: u32, proto: &R) -> Result<R> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, conductor, proto };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

/// Parses a scalar in the canonical text format.
pub fn parse_scalar(s: &str, conductor: u32) -> Result<ParamRat> {
    parse_expr(s, conductor, &ParamRat::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["(-1/2)*q^2*t^-1 + z*t", "(t + 1)/(q*t + -3)", "k^2 + (1/3)*k", "0"] {
            let v = parse_scalar(s, 3).unwrap();
            let back = parse_scalar(&v.to_string(), 3).unwrap();
            assert_eq!(v, back, "{s} -> {v}");
        }
    }

    #[test]
    fn juxtaposition_and_precedence() {
        let a = parse_scalar("qt", 1).unwrap();
        assert_eq!(a, ParamRat::q() * ParamRat::t());
        let b = parse_scalar("-t^2", 1).unwrap();
        assert_eq!(b, -(ParamRat::t() * ParamRat::t()));
        let c = parse_scalar("2(1+t)", 1).unwrap();
        assert_eq!(c, ParamRat::from_int(2) + ParamRat::from_int(2) * ParamRat::t());
    }

    #[test]
    fn errors() {
        assert!(parse_scalar("z*t", 1).is_err());
        assert!(parse_scalar("w", 1).is_err());
        assert!(parse_scalar("1/(t-t)", 1).is_err());
        assert!(parse_scalar("x1", 1).is_err());
    }
}
