//! Elements of the cyclotomic field Q(ζ_k), stored densely modulo Φ_k.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;
use crate::error::{Error, Result};

/// Largest conductor supported.
pub const MAX_CONDUCTOR: u32 = 60;

fn cyclotomic_table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Vec<i64>> = vec![Vec::new(); MAX_CONDUCTOR as usize + 1];
        for k in 1..=MAX_CONDUCTOR as usize {
            // x^k - 1, low degree first
            let mut p = vec![0i64; k + 1];
            p[0] = -1;
            p[k] = 1;
            for d in 1..k {
                if k % d == 0 {
                    p = int_div_exact(&p, &table[d]);
                }
            }
            table[k] = p;
        }
        table
    })
}

fn int_div_exact(p: &[i64], d: &[i64]) -> Vec<i64> {
    let mut r = p.to_vec();
    let dd = d.len() - 1;
    let lead = d[dd];
    let mut out = vec![0i64; r.len() - dd];
    for i in (0..out.len()).rev() {
        let c = r[i + dd] / lead;
        out[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    out
}

/// Coefficients of Φ_k, constant term first.
pub fn cyclotomic_poly(k: u32) -> &'static [i64] {
    &cyclotomic_table()[k as usize]
}

/// Euler's totient.
pub fn euler_phi(k: u32) -> usize {
    cyclotomic_poly(k).len() - 1
}

fn canonical_conductor(k: u32) -> u32 {
    if k == 2 {
        1
    } else {
        k
    }
}

/// An element Σ c_j ζ^j of Q(ζ_k) with j < φ(k).
#[derive(Clone, Debug)]
pub struct CycNum {
    k: u32,
    c: Vec<Q>,
}

impl CycNum {
    pub fn from_rational(r: Q) -> Self {
        CycNum { k: 1, c: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Q::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The primitive root ζ_k = exp(2πi/k).
    pub fn zeta(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_CONDUCTOR {
            return Err(Error::InvalidConductor(k));
        }
        match k {
            1 => Ok(Self::one()),
            2 => Ok(Self::from_int(-1)),
            _ => {
                let phi = euler_phi(k);
                let mut c = vec![Q::zero(); phi];
                if phi == 1 {
                    unreachable!()
                }
                c[1] = Q::one();
                Ok(CycNum { k, c })
            }
        }
    }

    /// Builds an element from coordinates, reducing modulo Φ_k.
    pub fn from_coords(k: u32, coords: Vec<Q>) -> Result<Self> {
        if k == 0 || k > MAX_CONDUCTOR {
            return Err(Error::InvalidConductor(k));
        }
        let k = canonical_conductor(k);
        Ok(Self::reduce(k, coords))
    }

    pub fn conductor(&self) -> u32 {
        self.k
    }

    pub fn coords(&self) -> &[Q] {
        &self.c
    }

    fn reduce(k: u32, mut p: Vec<Q>) -> Self {
        let phi_poly = cyclotomic_poly(k);
        let phi = phi_poly.len() - 1;
        if k == 2 {
            // ζ = -1
            let mut s = Q::zero();
            for (j, c) in p.into_iter().enumerate() {
                if j % 2 == 0 {
                    s += c;
                } else {
                    s -= c;
                }
            }
            return CycNum { k: 1, c: vec![s] };
        }
        if k == 1 {
            let s = p.into_iter().fold(Q::zero(), |a, b| a + b);
            return CycNum { k: 1, c: vec![s] };
        }
        while p.len() > phi {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = p.len() - phi;
            for (j, &pj) in phi_poly[..phi].iter().enumerate() {
                if pj != 0 {
                    p[base + j] -= &top * Q::from_integer(pj.into());
                }
            }
        }
        p.resize(phi, Q::zero());
        let mut out = CycNum { k, c: p };
        out.demote();
        out
    }

    fn demote(&mut self) {
        if self.k != 1 && self.c[1..].iter().all(|x| x.is_zero()) {
            let r = std::mem::take(&mut self.c[0]);
            self.k = 1;
            self.c = vec![r];
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.k == 1 && self.c[0].is_one()
    }

    /// The value as a rational, when it lies in Q.
    pub fn to_rational(&self) -> Option<&Q> {
        if self.k == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.k == 1
    }

    /// Embeds into Q(ζ_l); `l` must be a multiple of the conductor.
    pub fn lift(&self, l: u32) -> Result<Self> {
        let l = canonical_conductor(l);
        if self.k == l {
            return Ok(self.clone());
        }
        if l == 0 || l > MAX_CONDUCTOR || !l.is_multiple_of(self.k) {
            return Err(Error::ConductorMismatch(self.k, l));
        }
        let step = (l / self.k) as usize;
        let mut p = vec![Q::zero(); (self.c.len() - 1) * step + 1];
        for (j, c) in self.c.iter().enumerate() {
            p[j * step] = c.clone();
        }
        let mut out = Self::reduce(l, p);
        if out.k != l && !out.is_rational() {
            out.k = l;
        }
        Ok(out)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.k == b.k {
            return (a.clone(), b.clone());
        }
        let l = (a.k as u64).lcm(&(b.k as u64)) as u32;
        let l = l.min(MAX_CONDUCTOR);
        (
            a.lift(l).expect("conductor out of range"),
            b.lift(l).expect("conductor out of range"),
        )
    }

    fn raw_add(&self, other: &Self) -> Self {
        if self.k == other.k {
            let c = self.c.iter().zip(&other.c).map(|(x, y)| x + y).collect();
            let mut out = CycNum { k: self.k, c };
            out.demote();
            return out;
        }
        if self.k == 1 || other.k == 1 {
            let (r, v) = if self.k == 1 { (&self.c[0], other) } else { (&other.c[0], self) };
            let mut out = v.clone();
            out.c[0] += r;
            return out;
        }
        let (a, b) = Self::common(self, other);
        a.raw_add(&b)
    }

    fn raw_mul(&self, other: &Self) -> Self {
        if self.k == 1 && other.k == 1 {
            return CycNum::from_rational(&self.c[0] * &other.c[0]);
        }
        if self.k == 1 || other.k == 1 {
            let (r, v) = if self.k == 1 { (&self.c[0], other) } else { (&other.c[0], self) };
            let c = v.c.iter().map(|x| x * r).collect();
            let mut out = CycNum { k: v.k, c };
            out.demote();
            return out;
        }
        if self.k != other.k {
            let (a, b) = Self::common(self, other);
            return a.raw_mul(&b);
        }
        let mut p = vec![Q::zero(); self.c.len() + other.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        Self::reduce(self.k, p)
    }

    /// Field operation in a common conductor; mismatched conductors are an error.
    pub fn arith(&self, other: &Self, op: CycOp) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::ConductorMismatch(self.k, other.k));
        }
        match op {
            CycOp::Add => Ok(self.raw_add(other)),
            CycOp::Mul => Ok(self.raw_mul(other)),
            CycOp::Inv => self.inv(),
        }
    }

    pub fn neg(&self) -> Self {
        CycNum { k: self.k, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.raw_add(other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.raw_add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.raw_mul(other)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.k == 1 {
            return Ok(CycNum::from_rational(self.c[0].recip()));
        }
        let modulus: Vec<Q> =
            cyclotomic_poly(self.k).iter().map(|&x| Q::from_integer(x.into())).collect();
        let inv = upoly_inverse_mod(&self.c, &modulus);
        Ok(Self::reduce(self.k, inv))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = CycNum::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Returns `Some(j)` when the element equals ±ζ^j for some j (sign folded into j).
    pub fn root_of_unity_index(&self) -> Option<u32> {
        let order = if self.k % 2 == 1 { 2 * self.k } else { self.k };
        let zeta = CycNum::zeta(order).ok()?;
        let mut acc = CycNum::one();
        for j in 0..order {
            if acc == *self {
                return Some(j);
            }
            acc = acc.mul(&zeta);
        }
        None
    }
}

/// Operation selector for [`CycNum::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
    Inv,
}

fn trim(p: &mut Vec<Q>) {
    while p.len() > 1 && p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

fn upoly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![Q::zero()], r);
    }
    let lead = b[db].clone();
    let mut qv = vec![Q::zero(); r.len() - db];
    for i in (0..qv.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        qv[i] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (qv, r)
}

fn upoly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut p = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j] += x * y;
        }
    }
    p
}

fn upoly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut p = vec![Q::zero(); n];
    for (i, x) in a.iter().enumerate() {
        p[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        p[i] -= x;
    }
    trim(&mut p);
    p
}

/// Inverse of `a` modulo the irreducible `m` by the extended Euclidean algorithm.
fn upoly_inverse_mod(a: &[Q], m: &[Q]) -> Vec<Q> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Q::zero()], vec![Q::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (qv, r) = upoly_divrem(&r0, &r1);
        let s = upoly_sub(&s0, &upoly_mul(&qv, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant
    let c = r0[0].clone();
    s0.iter().map(|x| x / &c).collect()
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.k == other.k {
            return self.c == other.c;
        }
        if self.k == 1 || other.k == 1 {
            // demoted elements are rational exactly when k == 1
            return false;
        }
        let (a, b) = Self::common(self, other);
        a.c == b.c
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if self.k == 1 {
            self.c[0].hash(state);
        } else {
            0xC7C7u16.hash(state);
        }
    }
}

pub(crate) fn fmt_rational(r: &Q, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else if r.is_negative() {
        write!(f, "(-{}/{})", r.numer().abs(), r.denom())
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            return fmt_rational(&self.c[0], f);
        }
        write!(f, "(")?;
        let mut first = true;
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => fmt_rational(c, f)?,
                _ => {
                    if c.is_one() {
                    } else if (-c).is_one() {
                        write!(f, "-")?;
                    } else {
                        fmt_rational(c, f)?;
                        write!(f, "*")?;
                    }
                    if j == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", j)?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(cyclotomic_poly(3), &[1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), &[1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), &[1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta3_squared_reduces() {
        let z = CycNum::zeta(3).unwrap();
        let zz = z.arith(&z, CycOp::Mul).unwrap();
        assert_eq!(zz.coords(), &[q(-1), q(-1)]);
    }

    #[test]
    fn zeta4_inverse() {
        let z = CycNum::zeta(4).unwrap();
        assert_eq!(z.arith(&z, CycOp::Inv).unwrap(), z.neg());
    }

    #[test]
    fn root_sum_vanishes() {
        let z = CycNum::zeta(3).unwrap();
        let s = CycNum::one().add(&z).add(&z.mul(&z));
        assert!(s.is_zero());
        assert!(s.is_rational());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = CycNum::zeta(3).unwrap();
        let b = CycNum::zeta(4).unwrap();
        assert!(matches!(a.arith(&b, CycOp::Add), Err(Error::ConductorMismatch(3, 4))));
        assert!(matches!(CycNum::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn lift_embeds() {
        let z3 = CycNum::zeta(3).unwrap();
        let z6 = CycNum::zeta(6).unwrap();
        // ζ_3 = ζ_6^2
        assert_eq!(z3.lift(6).unwrap(), z6.mul(&z6));
        assert_eq!(z3, z6.mul(&z6));
        assert_eq!(z6.pow(6), CycNum::one());
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let z = CycNum::zeta(5).unwrap();
        let a = CycNum::from_int(2).add(&z).sub(&z.pow(3));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
    }
}
