//! Sparse polynomials in the parameter symbols κ, q, t, u over Q(ζ_k).

use std::collections::HashMap;

use super::cyclo::CycNum;

/// Number of parameter symbols.
pub const NPARAM: usize = 4;

/// Parameter symbols, in the canonical order used by monomial comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Kappa = 0,
    Q = 1,
    T = 2,
    U = 3,
}

impl Sym {
    pub const ALL: [Sym; NPARAM] = [Sym::Kappa, Sym::Q, Sym::T, Sym::U];

    pub fn name(self) -> &'static str {
        match self {
            Sym::Kappa => "k",
            Sym::Q => "q",
            Sym::T => "t",
            Sym::U => "u",
        }
    }

    pub fn parse(s: &str) -> Option<Sym> {
        match s {
            "k" | "kappa" | "κ" => Some(Sym::Kappa),
            "q" => Some(Sym::Q),
            "t" => Some(Sym::T),
            "u" => Some(Sym::U),
            _ => None,
        }
    }
}

pub type PMono = [u16; NPARAM];

const ONE_MONO: PMono = [0; NPARAM];

fn mono_mul(a: &PMono, b: &PMono) -> PMono {
    let mut m = *a;
    for i in 0..NPARAM {
        m[i] += b[i];
    }
    m
}

fn mono_divides(d: &PMono, m: &PMono) -> bool {
    (0..NPARAM).all(|i| d[i] <= m[i])
}

fn mono_div(m: &PMono, d: &PMono) -> PMono {
    let mut r = *m;
    for i in 0..NPARAM {
        r[i] -= d[i];
    }
    r
}

/// A parameter polynomial; terms sorted by descending lexicographic monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PPoly {
    terms: Vec<(PMono, CycNum)>,
}

impl PPoly {
    pub fn zero() -> Self {
        PPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn constant(c: CycNum) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PPoly { terms: vec![(ONE_MONO, c)] }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(CycNum::from_int(n))
    }

    pub fn var(s: Sym) -> Self {
        let mut m = ONE_MONO;
        m[s as usize] = 1;
        PPoly { terms: vec![(m, CycNum::one())] }
    }

    pub fn monomial(m: PMono, c: CycNum) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from unsorted terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (PMono, CycNum)>) -> Self {
        let mut map: HashMap<PMono, CycNum> = HashMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        PPoly { terms }
    }

    pub fn terms(&self) -> &[(PMono, CycNum)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ONE_MONO)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ONE_MONO && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<CycNum> {
        if self.terms.is_empty() {
            Some(CycNum::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(PMono, CycNum)> {
        self.terms.first()
    }

    pub fn lc(&self) -> CycNum {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(CycNum::zero)
    }

    pub fn neg(&self) -> Self {
        PPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        PPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        PPoly { terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect() }
    }

    pub fn mul_term(&self, m: &PMono, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PPoly { terms: self.terms.iter().map(|(mm, x)| (mono_mul(mm, m), x.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.is_monomial() {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: HashMap<PMono, CycNum> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = mono_mul(ma, mb);
                let c = ca.mul(cb);
                match map.get_mut(&m) {
                    Some(acc) => *acc = acc.add(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        PPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
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

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dm, dc) = &d.terms[0];
        let dc_inv = dc.inv().ok()?;
        if d.is_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !mono_divides(dm, m) {
                    return None;
                }
                terms.push((mono_div(m, dm), c.mul(&dc_inv)));
            }
            return Some(PPoly { terms });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !mono_divides(dm, m) {
                return None;
            }
            let qm = mono_div(m, dm);
            let qc = c.mul(&dc_inv);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(PPoly { terms: quot })
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exps(&self) -> PMono {
        let mut m = [u16::MAX; NPARAM];
        for (mm, _) in &self.terms {
            for i in 0..NPARAM {
                m[i] = m[i].min(mm[i]);
            }
        }
        if self.terms.is_empty() {
            ONE_MONO
        } else {
            m
        }
    }

    pub fn div_mono(&self, d: &PMono) -> Self {
        PPoly { terms: self.terms.iter().map(|(m, c)| (mono_div(m, d), c.clone())).collect() }
    }

    pub fn mul_mono(&self, d: &PMono) -> Self {
        PPoly { terms: self.terms.iter().map(|(m, c)| (mono_mul(m, d), c.clone())).collect() }
    }

    pub fn degree_in(&self, s: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m[s]).max().unwrap_or(0)
    }

    pub fn uses(&self, s: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[s] > 0)
    }

    /// Coefficients with respect to symbol `s`, indexed by its power.
    pub fn coeffs_in(&self, s: usize) -> Vec<PPoly> {
        let d = self.degree_in(s) as usize;
        let mut buckets: Vec<Vec<(PMono, CycNum)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm[s] as usize;
            mm[s] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.0.cmp(&a.0));
                PPoly { terms: t }
            })
            .collect()
    }

    pub fn from_coeffs_in(s: usize, coeffs: &[PPoly]) -> Self {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut mm = *m;
                mm[s] += e as u16;
                terms.push((mm, x.clone()));
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        PPoly { terms }
    }

    /// Largest conductor among the coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms.iter().map(|(_, c)| c.conductor()).max().unwrap_or(1)
    }
}

/// Greatest common divisor, normalized to leading coefficient 1 (zero if both are zero).
pub fn gcd(a: &PPoly, b: &PPoly) -> PPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return PPoly::one();
    }
    let ma = a.min_exps();
    let mb = b.min_exps();
    let mut m = ONE_MONO;
    for i in 0..NPARAM {
        m[i] = ma[i].min(mb[i]);
    }
    if a.is_monomial() || b.is_monomial() {
        return PPoly::monomial(m, CycNum::one());
    }
    if a == b {
        return a.monic();
    }
    let a1 = a.div_mono(&ma);
    let b1 = b.div_mono(&mb);
    if modp::coprime(&a1, &b1) {
        return PPoly::monomial(m, CycNum::one());
    }
    let vars: Vec<usize> = (0..NPARAM).filter(|&s| a1.uses(s) || b1.uses(s)).collect();
    let g = gcd_rec(&a1, &b1, &vars);
    g.mul_mono(&m).monic()
}

fn gcd_rec(a: &PPoly, b: &PPoly, vars: &[usize]) -> PPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return PPoly::one();
    }
    let Some(pos) = vars.iter().rposition(|&s| a.uses(s) || b.uses(s)) else {
        return PPoly::one();
    };
    let v = vars[pos];
    let rest = &vars[..pos];
    let ac = a.coeffs_in(v);
    let bc = b.coeffs_in(v);
    let ca = content(&ac, rest);
    let cb = content(&bc, rest);
    let c = gcd_rec(&ca, &cb, rest);
    if ac.len() == 1 || bc.len() == 1 {
        return c;
    }
    let pa: Vec<PPoly> = ac.iter().map(|x| x.exact_div(&ca).expect("content divides")).collect();
    let pb: Vec<PPoly> = bc.iter().map(|x| x.exact_div(&cb).expect("content divides")).collect();
    let g = primitive_prs(pa, pb, rest);
    c.mul(&PPoly::from_coeffs_in(v, &g)).monic()
}

fn content(coeffs: &[PPoly], rest: &[usize]) -> PPoly {
    let mut acc: Option<PPoly> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = Some(match acc {
            None => c.monic(),
            Some(g) => gcd_rec(&g, c, rest),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            return PPoly::one();
        }
    }
    acc.unwrap_or_else(PPoly::one)
}

fn udeg(p: &[PPoly]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn uis_zero(p: &[PPoly]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn primitive_prs(a: Vec<PPoly>, b: Vec<PPoly>, rest: &[usize]) -> Vec<PPoly> {
    let (mut f, mut g) = if udeg(&a) >= udeg(&b) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_rem(&f, &g);
        if uis_zero(&r) {
            return g;
        }
        if udeg(&r) == 0 {
            return vec![PPoly::one()];
        }
        let c = content(&r, rest);
        let r: Vec<PPoly> = r.iter().map(|x| x.exact_div(&c).expect("content divides")).collect();
        let r = if rest.is_empty() { umonic(r) } else { r };
        f = std::mem::replace(&mut g, r);
    }
}

/// Coprimality certificates from images modulo a prime.
mod modp {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};

    use super::{PPoly, NPARAM};

    const P: u64 = (1 << 61) - 1;
    const POINTS: [u64; NPARAM] = [1_000_003, 7_654_321, 2_718_281_828, 31_415_926_535];

    fn mulm(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn powm(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        r
    }

    fn int_mod(n: &BigInt) -> u64 {
        let r = (n.abs() % BigInt::from(P)).to_u64().expect("reduced");
        if n.is_negative() && r != 0 {
            P - r
        } else {
            r
        }
    }

    /// Univariate image in symbol `main` with the other symbols at fixed points.
    fn image(a: &PPoly, main: usize) -> Option<Vec<u64>> {
        let mut out = vec![0u64; a.degree_in(main) as usize + 1];
        for (m, c) in a.terms() {
            let r = c.to_rational()?;
            let d = int_mod(r.denom());
            if d == 0 {
                return None;
            }
            let mut v = mulm(int_mod(r.numer()), powm(d, P - 2));
            for (s, &e) in m.iter().enumerate() {
                if s != main && e > 0 {
                    v = mulm(v, powm(POINTS[s], e as u64));
                }
            }
            let slot = &mut out[m[main] as usize];
            *slot = (*slot + v) % P;
        }
        Some(out)
    }

    fn trim(p: &mut Vec<u64>) {
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
    }

    fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        trim(&mut a);
        trim(&mut b);
        loop {
            if b.len() == 1 && b[0] == 0 {
                return a.len() - 1;
            }
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let inv = powm(*b.last().unwrap(), P - 2);
            while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
                let f = mulm(*a.last().unwrap(), inv);
                let s = a.len() - b.len();
                for (j, &bj) in b.iter().enumerate() {
                    a[j + s] = (a[j + s] + P - mulm(f, bj)) % P;
                }
                a.pop();
                if a.is_empty() {
                    a.push(0);
                }
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
    }

    /// True only when gcd(a, b) is provably constant.
    pub(super) fn coprime(a: &PPoly, b: &PPoly) -> bool {
        for s in 0..NPARAM {
            let (da, db) = (a.degree_in(s) as usize, b.degree_in(s) as usize);
            if da == 0 || db == 0 {
                continue;
            }
            let (Some(ia), Some(ib)) = (image(a, s), image(b, s)) else {
                return false;
            };
            if ia[da] == 0 || ib[db] == 0 || gcd_degree(ia, ib) > 0 {
                return false;
            }
        }
        true
    }
}

fn umonic(p: Vec<PPoly>) -> Vec<PPoly> {
    let d = udeg(&p);
    let lc = p[d].constant_value().expect("constant coefficient");
    let inv = lc.inv().expect("nonzero");
    p.into_iter().map(|c| c.scale(&inv)).collect()
}

fn pseudo_rem(f: &[PPoly], g: &[PPoly]) -> Vec<PPoly> {
    let dg = udeg(g);
    let lg = &g[dg];
    let mut r: Vec<PPoly> = f[..=udeg(f)].to_vec();
    while !uis_zero(&r) && udeg(&r) >= dg {
        let dr = udeg(&r);
        let lr = r[dr].clone();
        let s = dr - dg;
        let mut next: Vec<PPoly> = r.iter().map(|c| c.mul(lg)).collect();
        for (j, gj) in g[..=dg].iter().enumerate() {
            if !gj.is_zero() {
                next[j + s] = next[j + s].sub(&gj.mul(&lr));
            }
        }
        next.truncate(dr);
        if next.is_empty() {
            next.push(PPoly::zero());
        }
        r = next;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> PPoly {
        PPoly::var(Sym::T)
    }
    fn q() -> PPoly {
        PPoly::var(Sym::Q)
    }
    fn c(n: i64) -> PPoly {
        PPoly::from_int(n)
    }

    #[test]
    fn exact_division() {
        let a = t().mul(&t()).sub(&c(1));
        let b = t().sub(&c(1));
        assert_eq!(a.exact_div(&b).unwrap(), t().add(&c(1)));
        assert!(a.exact_div(&t()).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let a = t().pow(4).sub(&c(1));
        let b = t().pow(6).sub(&c(1));
        assert_eq!(gcd(&a, &b), t().pow(2).sub(&c(1)));
    }

    #[test]
    fn gcd_bivariate() {
        let f1 = q().mul(&t()).sub(&c(1));
        let f2 = q().add(&t().pow(2));
        let f3 = q().pow(2).mul(&t()).add(&c(3));
        let a = f1.mul(&f2).mul(&f2);
        let b = f2.mul(&f3).mul(&f1).mul(&t());
        let g = gcd(&a, &b);
        assert_eq!(g, f1.mul(&f2).monic());
    }

    #[test]
    fn gcd_coprime_and_monomial() {
        let a = q().mul(&t()).add(&c(1));
        let b = q().sub(&t());
        assert!(gcd(&a, &b).is_one());
        let m = q().pow(2).mul(&t());
        let p = q().mul(&t()).add(&q().pow(3));
        assert_eq!(gcd(&m, &p), q());
    }
}
