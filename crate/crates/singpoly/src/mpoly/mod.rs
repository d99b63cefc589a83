//! Sparse polynomials in x-variables and auxiliary y/z variables over [`ParamRat`].

pub mod io;
pub mod order;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeffs::{ParamRat, SpecMap};
use crate::error::{Error, Result};

pub use io::{JsonTerm, Layout};
pub use order::{dominates, sorted_desc, total_cmp, triangle_gt, MonomialOrder};

/// Maximum number of x-variables.
pub const XMAX: usize = 16;
/// Maximum number of y-variables.
pub const YMAX: usize = 8;
/// Maximum number of z-variables.
pub const ZMAX: usize = 8;
/// Total variable slots: x occupy `0..XMAX`, y occupy `Y0..Z0`, z occupy `Z0..NVARS`.
pub const NVARS: usize = XMAX + YMAX + ZMAX;
pub const Y0: usize = XMAX;
pub const Z0: usize = XMAX + YMAX;

/// Exponent vector over all variable slots.
pub type Mono = [u8; NVARS];

/// Monomial with the given x-exponents and no auxiliary variables.
pub fn mono_x(exps: &[u8]) -> Mono {
    let mut m = [0u8; NVARS];
    m[..exps.len()].copy_from_slice(exps);
    m
}

/// Sparse polynomial; only nonzero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct XPoly {
    terms: BTreeMap<Mono, ParamRat>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(ParamRat::one())
    }

    pub fn constant(c: ParamRat) -> Self {
        XPoly::monomial([0; NVARS], c)
    }

    pub fn monomial(m: Mono, c: ParamRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        XPoly { terms }
    }

    fn slot(slot: usize) -> Self {
        let mut m = [0u8; NVARS];
        m[slot] = 1;
        XPoly::monomial(m, ParamRat::one())
    }

    /// The variable x_i (1-based).
    pub fn x(i: usize) -> Self {
        assert!((1..=XMAX).contains(&i), "x{i} out of range");
        XPoly::slot(i - 1)
    }

    /// The variable y_j (1-based).
    pub fn y(j: usize) -> Self {
        assert!((1..=YMAX).contains(&j), "y{j} out of range");
        XPoly::slot(Y0 + j - 1)
    }

    /// The variable z_j (1-based).
    pub fn z(j: usize) -> Self {
        assert!((1..=ZMAX).contains(&j), "z{j} out of range");
        XPoly::slot(Z0 + j - 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, ParamRat)>>(it: I) -> Self {
        let mut p = XPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &ParamRat)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn coeff(&self, m: &Mono) -> ParamRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds c·x^m in place.
    pub fn add_term(&mut self, m: Mono, c: ParamRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &XPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn add(&self, o: &XPoly) -> XPoly {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        big.add_assign(small);
        big
    }

    pub fn neg(&self) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, o: &XPoly) -> XPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.neg());
        }
        r
    }

    pub fn scale(&self, c: &ParamRat) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XPoly { terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect() }
    }

    pub fn mul_mono(&self, mono: &Mono) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(m, c)| (mono_mul(m, mono), c.clone())).collect() }
    }

    pub fn mul(&self, o: &XPoly) -> XPoly {
        let mut r = XPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(mono_mul(m1, m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut r = XPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Total degree over all variables.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as u32).sum()).max()
    }

    /// Degree in the x-variables only.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(x_deg).max()
    }

    pub fn is_homogeneous_x(&self) -> bool {
        let mut it = self.terms.keys().map(x_deg);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Number of x-variables up to the last one occurring.
    pub fn x_extent(&self) -> usize {
        self.terms
            .keys()
            .map(|m| (0..XMAX).rev().find(|&i| m[i] > 0).map_or(0, |i| i + 1))
            .max()
            .unwrap_or(0)
    }

    /// Conductor of the cyclotomic field carrying all coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms.values().map(|c| c.conductor()).fold(1, num_integer::lcm)
    }

    /// Exchanges two variable slots.
    pub fn swap_slots(&self, a: usize, b: usize) -> XPoly {
        XPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut k = *m;
                    k.swap(a, b);
                    (k, c.clone())
                })
                .collect(),
        }
    }

    /// The transposition action p ↦ p(x s_ij) on x-variables (1-based).
    pub fn swap_x(&self, i: usize, j: usize) -> XPoly {
        self.swap_slots(i - 1, j - 1)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&ParamRat) -> Result<ParamRat>>(&self, f: F) -> Result<XPoly> {
        let mut r = XPoly::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, f(c)?);
        }
        Ok(r)
    }

    /// Specializes every coefficient; a pole names the offending monomial.
    pub fn specialize(&self, spec: &SpecMap) -> Result<XPoly> {
        let mut r = XPoly::zero();
        for (m, c) in &self.terms {
            match spec.apply(c) {
                Ok(v) => r.add_term(*m, v),
                Err(Error::PoleAtSpecialization { denominator, .. }) => {
                    return Err(Error::PoleAtSpecialization {
                        denominator,
                        at: Some(io::mono_text(m)),
                    })
                }
                Err(e) => return Err(e),
            }
        }
        Ok(r)
    }

    /// Homomorphic image under x_i ↦ point[i-1]; other variables are kept.
    pub fn substitute(&self, point: &[XPoly]) -> XPoly {
        let n = point.len().min(XMAX);
        let mut powers: Vec<Vec<XPoly>> = vec![vec![XPoly::one()]; n];
        let mut r = XPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut term = XPoly::one();
            for i in 0..n {
                let e = m[i] as usize;
                if e == 0 {
                    continue;
                }
                rest[i] = 0;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&point[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e]);
            }
            r.add_assign(&term.mul_mono(&rest).scale(c));
        }
        r
    }

    /// Closed-form divided difference (p − p s_ij)/(x_i − x_j) (1-based indices).
    pub fn divided_difference(&self, i: usize, j: usize) -> XPoly {
        assert_ne!(i, j, "divided difference needs distinct indices");
        let (a, b) = (i - 1, j - 1);
        let mut r = XPoly::zero();
        for (m, c) in &self.terms {
            let (ea, eb) = (m[a], m[b]);
            if ea == eb {
                continue;
            }
            // x_a^ea x_b^eb − x_a^eb x_b^ea = sign · (x_a x_b)^lo (x_hi^d − x_lo^d)
            let (lo, d, sign_neg) = if ea > eb { (eb, ea - eb, false) } else { (ea, eb - ea, true) };
            let coeff = if sign_neg { c.neg() } else { c.clone() };
            let mut base = *m;
            base[a] = lo;
            base[b] = lo;
            for k in 0..d {
                let mut t = base;
                t[a] += d - 1 - k;
                t[b] += k;
                r.add_term(t, coeff.clone());
            }
        }
        r
    }

    /// Exact division by the variable in `slot`.
    pub fn div_slot(&self, slot: usize) -> Result<XPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m[slot] == 0 {
                return Err(Error::NotDivisible(format!(
                    "term {} has no factor {}",
                    io::mono_text(m),
                    io::slot_name(slot)
                )));
            }
            let mut k = *m;
            k[slot] -= 1;
            terms.insert(k, c.clone());
        }
        Ok(XPoly { terms })
    }

    /// Returns r with r·q = self, or `NotDivisible`.
    pub fn exact_divide(&self, q: &XPoly) -> Result<XPoly> {
        let (lm, lc) = q.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        if q.len() == 1 {
            let inv = lc.inv()?;
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let k = mono_div(m, lm).ok_or_else(|| Error::NotDivisible(io::mono_text(m)))?;
                terms.insert(k, c.mul(&inv));
            }
            return Ok(XPoly { terms });
        }
        let inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = XPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let k = match mono_div(&m, lm) {
                Some(k) => k,
                None => return Err(Error::NotDivisible(rem.to_string())),
            };
            let f = c.mul(&inv);
            for (qm, qc) in &q.terms {
                rem.add_term(mono_mul(qm, &k), qc.mul(&f).neg());
            }
            quot.add_term(k, f);
        }
        Ok(quot)
    }

    /// Leading term under `ord` on the x-part; ties broken by the full exponent vector.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Mono, ParamRat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(&a[..XMAX], &b[..XMAX]).then_with(|| a.cmp(b)))
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Terms in display order (descending under the monomial order).
    pub fn sorted_terms(&self) -> Vec<(&Mono, &ParamRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| total_cmp(&b[..XMAX], &a[..XMAX]).then_with(|| b.cmp(a)));
        v
    }

    /// Whether self = c·o for a scalar c; returns c.
    pub fn scalar_ratio(&self, o: &XPoly) -> Option<ParamRat> {
        if self.len() != o.len() {
            return None;
        }
        let (m0, c0) = o.terms.iter().next()?;
        let r = self.terms.get(m0)?.div(c0).ok()?;
        for (m, c) in &o.terms {
            if self.terms.get(m)? != &c.mul(&r) {
                return None;
            }
        }
        Some(r)
    }
}

fn x_deg(m: &Mono) -> u32 {
    m[..XMAX].iter().map(|&e| e as u32).sum()
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] = r[i].checked_add(b[i]).expect("exponent overflow");
    }
    r
}

pub fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] = r[i].checked_sub(b[i])?;
    }
    Some(r)
}

impl From<ParamRat> for XPoly {
    fn from(c: ParamRat) -> Self {
        XPoly::constant(c)
    }
}

macro_rules! xpoly_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<&XPoly> for &XPoly {
            type Output = XPoly;
            fn $m(self, o: &XPoly) -> XPoly {
                XPoly::$m(self, o)
            }
        }
    };
}
xpoly_ops!(Add, add);
xpoly_ops!(Sub, sub);
xpoly_ops!(Mul, mul);

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> XPoly {
        XPoly::parse(s, 1).unwrap()
    }

    #[test]
    fn leading_terms() {
        let (m, _) = p("x1 x2 + x1^2").leading_term(MonomialOrder::default()).unwrap();
        assert_eq!(&m[..2], &[2, 0]);
        assert!(XPoly::zero().leading_term(MonomialOrder::default()).is_err());
    }

    #[test]
    fn substitution() {
        let q = p("t*x1 - x2");
        let pt = [p("y1"), p("t*y1")];
        assert!(q.substitute(&pt).is_zero());
        assert_eq!(p("x1 + x2").substitute(&[p("z1"), p("z2")]), p("z1 + z2"));
    }

    #[test]
    fn division() {
        let r = p("t^2*x1^2 - x2^2").exact_divide(&p("t*x1 - x2")).unwrap();
        assert_eq!(r, p("t*x1 + x2"));
        assert!(matches!(p("x1 + x2").exact_divide(&p("x1 - x2")), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn divided_differences() {
        assert_eq!(p("x1").divided_difference(1, 2), XPoly::one());
        assert!(p("x1 x2").divided_difference(1, 2).is_zero());
        assert_eq!(p("x1^2").divided_difference(1, 2), p("x1 + x2"));
        let f = p("x1^3 x2 y1 + 2*x2^4 - x3");
        let d = f.divided_difference(1, 2);
        assert_eq!(d.mul(&p("x1 - x2")), f.sub(&f.swap_x(1, 2)));
    }
}
