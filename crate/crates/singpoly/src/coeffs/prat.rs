//! Rational functions in the parameter symbols, kept in gcd-reduced canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::cyclo::{fmt_rational, CycNum};
use super::ppoly::{gcd, PMono, PPoly, Sym, NPARAM};
use super::Q;
use crate::error::{Error, Result};

/// `num / den` with gcd(num, den) = 1 and `den` of leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamRat {
    num: PPoly,
    den: PPoly,
}

impl Default for ParamRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamRat {
    pub fn zero() -> Self {
        ParamRat { num: PPoly::zero(), den: PPoly::one() }
    }

    pub fn one() -> Self {
        ParamRat { num: PPoly::one(), den: PPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(PPoly::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Q::new(n.into(), d.into()))
    }

    pub fn from_rational(r: Q) -> Self {
        Self::from_cyc(CycNum::from_rational(r))
    }

    pub fn from_cyc(c: CycNum) -> Self {
        Self::from_poly(PPoly::constant(c))
    }

    pub fn from_poly(p: PPoly) -> Self {
        ParamRat { num: p, den: PPoly::one() }
    }

    pub fn param(s: Sym) -> Self {
        Self::from_poly(PPoly::var(s))
    }

    pub fn kappa() -> Self {
        Self::param(Sym::Kappa)
    }

    pub fn q() -> Self {
        Self::param(Sym::Q)
    }

    pub fn t() -> Self {
        Self::param(Sym::T)
    }

    pub fn u() -> Self {
        Self::param(Sym::U)
    }

    /// A Laurent monomial c·Π s^{e_s}.
    pub fn laurent_monomial(c: CycNum, exps: [i32; NPARAM]) -> Self {
        let mut pos: PMono = [0; NPARAM];
        let mut neg: PMono = [0; NPARAM];
        for i in 0..NPARAM {
            if exps[i] >= 0 {
                pos[i] = exps[i] as u16;
            } else {
                neg[i] = (-exps[i]) as u16;
            }
        }
        ParamRat { num: PPoly::monomial(pos, c), den: PPoly::monomial(neg, CycNum::one()) }
    }

    /// Normalizes `num / den`.
    pub fn new(num: PPoly, den: PPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: PPoly, den: PPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        Self::scale_den(num, den)
    }

    fn scale_den(num: PPoly, den: PPoly) -> Self {
        let lc = den.lc();
        if lc.is_one() {
            ParamRat { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            ParamRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn num(&self) -> &PPoly {
        &self.num
    }

    pub fn den(&self) -> &PPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<CycNum> {
        if self.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn to_rational(&self) -> Option<Q> {
        self.constant_value().and_then(|c| c.to_rational().cloned())
    }

    pub fn conductor(&self) -> u32 {
        self.num.conductor().max(self.den.conductor())
    }

    pub fn uses(&self, s: Sym) -> bool {
        self.num.uses(s as usize) || self.den.uses(s as usize)
    }

    pub fn neg(&self) -> Self {
        ParamRat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return ParamRat { num, den: self.den.clone() };
            }
            return Self::normalize(num, self.den.clone());
        }
        if self.den.is_one() {
            return ParamRat { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return ParamRat { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return Self::scale_den(num, den);
        }
        let ad = self.den.exact_div(&g).expect("gcd divides");
        let bd = other.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&bd).add(&other.num.mul(&ad));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&bd);
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            Self::scale_den(num, den)
        } else {
            Self::scale_den(
                num.exact_div(&g2).expect("gcd divides"),
                den.exact_div(&g2).expect("gcd divides"),
            )
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return ParamRat { num: self.num.mul(&other.num), den: PPoly::one() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let (an, bd) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), other.den.exact_div(&g1).unwrap())
        };
        let (bn, ad) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        Self::scale_den(an.mul(&bn), ad.mul(&bd))
    }

    pub fn scale_cyc(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamRat { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scale_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("power of zero") } else { self.clone() };
        let e = e.unsigned_abs();
        ParamRat { num: base.num.pow(e), den: base.den.pow(e) }
    }

    /// Field operation selector used by the scalar-arithmetic entry point.
    pub fn arith(&self, other: &Self, op: RatOp) -> Result<Self> {
        match op {
            RatOp::Add => Ok(self.add(other)),
            RatOp::Mul => Ok(self.mul(other)),
            RatOp::Div => self.div(other),
        }
    }

    /// When the value is c·Π s^{e_s}, returns (c, e).
    pub fn as_laurent_monomial(&self) -> Option<(CycNum, [i32; NPARAM])> {
        if self.num.len() != 1 || self.den.len() != 1 {
            return None;
        }
        let (nm, nc) = &self.num.terms()[0];
        let (dm, dc) = &self.den.terms()[0];
        let c = nc.div(dc).ok()?;
        let mut e = [0i32; NPARAM];
        for i in 0..NPARAM {
            e[i] = nm[i] as i32 - dm[i] as i32;
        }
        Some((c, e))
    }

    /// True for c·Π s^{e_s} with c a root of unity (including ±1).
    pub fn is_unit_monomial(&self) -> bool {
        self.as_laurent_monomial().is_some_and(|(c, _)| c.root_of_unity_index().is_some())
    }
}

/// Operation selector for [`ParamRat::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Mul,
    Div,
}

impl From<i64> for ParamRat {
    fn from(n: i64) -> Self {
        ParamRat::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&ParamRat> for &ParamRat {
            type Output = ParamRat;
            fn $m(self, rhs: &ParamRat) -> ParamRat {
                ParamRat::$f(self, rhs)
            }
        }
        impl $tr<ParamRat> for ParamRat {
            type Output = ParamRat;
            fn $m(self, rhs: ParamRat) -> ParamRat {
                ParamRat::$f(&self, &rhs)
            }
        }
        impl $tr<&ParamRat> for ParamRat {
            type Output = ParamRat;
            fn $m(self, rhs: &ParamRat) -> ParamRat {
                ParamRat::$f(&self, rhs)
            }
        }
        impl $tr<ParamRat> for &ParamRat {
            type Output = ParamRat;
            fn $m(self, rhs: ParamRat) -> ParamRat {
                ParamRat::$f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat::neg(&self)
    }
}

impl Neg for &ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat::neg(self)
    }
}

fn fmt_mono(m: &[i32; NPARAM], f: &mut fmt::Formatter<'_>, first: bool) -> fmt::Result {
    let mut first = first;
    for s in Sym::ALL {
        let e = m[s as usize];
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", s.name())?;
        } else {
            write!(f, "{}^{}", s.name(), e)?;
        }
    }
    Ok(())
}

/// Writes a sum of terms c·m with the den monomial folded in as negative exponents.
fn fmt_terms(p: &PPoly, shift: &PMono, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        if idx > 0 {
            write!(f, " + ")?;
        }
        let mut e = [0i32; NPARAM];
        for i in 0..NPARAM {
            e[i] = m[i] as i32 - shift[i] as i32;
        }
        let trivial = e.iter().all(|&x| x == 0);
        if trivial {
            write!(f, "{}", c)?;
            continue;
        }
        match c.to_rational() {
            Some(r) if r.is_one() => fmt_mono(&e, f, true)?,
            Some(r) if (-r).is_one() => {
                write!(f, "-")?;
                fmt_mono(&e, f, true)?
            }
            Some(r) => {
                fmt_rational(r, f)?;
                fmt_mono(&e, f, false)?
            }
            None => {
                write!(f, "{}", c)?;
                fmt_mono(&e, f, false)?
            }
        }
    }
    Ok(())
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() {
            let (m, c) = &self.den.terms()[0];
            debug_assert!(c.is_one());
            let _ = c;
            return fmt_terms(&self.num, m, f);
        }
        let zero = [0u16; NPARAM];
        write!(f, "(")?;
        fmt_terms(&self.num, &zero, f)?;
        write!(f, ")/(")?;
        fmt_terms(&self.den, &zero, f)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> ParamRat {
        ParamRat::t()
    }
    fn c(n: i64) -> ParamRat {
        ParamRat::from_int(n)
    }

    #[test]
    fn cancellation() {
        let a = (c(1) - t()).div(&(c(1) - t() * t())).unwrap();
        let b = c(1).div(&(c(1) + t())).unwrap();
        assert_eq!(a.clone() + c(0), b);
        let d = t() - c(1);
        assert!((d.clone() * d.inv().unwrap()).is_one());
        let k = ParamRat::kappa();
        let e = k.div(&(c(1) + k.clone())).unwrap() * (c(1) + k.clone());
        assert_eq!(e, k);
    }

    #[test]
    fn laurent_display() {
        let a = ParamRat::laurent_monomial(CycNum::from_rational(Q::new((-1).into(), 2.into())), [0, 2, -1, 0]);
        assert_eq!(a.to_string(), "(-1/2)*q^2*t^-1");
        let b = (c(1) - t()).div(&(c(1) + t())).unwrap();
        assert_eq!(b.to_string(), "(-t + 1)/(t + 1)");
    }

    #[test]
    fn unit_monomials() {
        let a = ParamRat::laurent_monomial(CycNum::from_int(-1), [0, 0, 3, 0]);
        assert!(a.is_unit_monomial());
        assert!(!(c(1) + t()).is_unit_monomial());
        assert!(!c(2).is_unit_monomial());
    }
}
