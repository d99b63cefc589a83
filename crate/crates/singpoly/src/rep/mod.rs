//! Irreducible modules V_τ: action formulas for s_i and T_i, Jucys–Murphy elements, inner products.

use std::collections::BTreeMap;

use crate::coeffs::ParamRat;
use crate::combin::{Partition, Tableau};
use crate::error::{Error, Result};
use crate::mpoly::XPoly;

/// Which algebra acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// The symmetric group (t = 1).
    Group,
    /// H_N(t).
    Hecke,
    /// H_N(1/t).
    HeckeInv,
}

impl Algebra {
    /// The Hecke parameter this algebra uses.
    pub fn t(&self) -> ParamRat {
        match self {
            Algebra::Group => ParamRat::one(),
            Algebra::Hecke => ParamRat::t(),
            Algebra::HeckeInv => ParamRat::t().pow(-1),
        }
    }
}

/// Case of the action formulas for the pair (i, i+1) in S.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionCase {
    /// Same row.
    SameRow,
    /// Same column.
    SameCol,
    /// row(i) < row(i+1) and col(i) > col(i+1); b = c(i) − c(i+1) ≥ 2.
    Up(i32),
    /// c(i) − c(i+1) ≤ −2.
    Down(i32),
}

/// Classifies (S, i), asserting the four cases are exhaustive and exclusive.
pub fn action_case(s: &Tableau, i: usize) -> ActionCase {
    let (r1, r2, c1, c2) = (s.row(i), s.row(i + 1), s.col(i), s.col(i + 1));
    let b = s.content(i) - s.content(i + 1);
    let flags = [r1 == r2, c1 == c2, r1 < r2 && c1 > c2, b <= -2];
    assert_eq!(flags.iter().filter(|&&f| f).count(), 1, "action cases not exclusive for {s} at {i}");
    if flags[0] {
        ActionCase::SameRow
    } else if flags[1] {
        ActionCase::SameCol
    } else if flags[2] {
        ActionCase::Up(b)
    } else {
        ActionCase::Down(b)
    }
}

/// A vector of V_τ in the tableau basis.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ModuleVector {
    pub coords: BTreeMap<Tableau, ParamRat>,
}

impl ModuleVector {
    pub fn basis(s: &Tableau) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(s.clone(), ParamRat::one());
        ModuleVector { coords }
    }

    pub fn add_term(&mut self, s: Tableau, c: ParamRat) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(s).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.coords.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &ModuleVector) -> ModuleVector {
        let mut r = self.clone();
        for (s, c) in &o.coords {
            r.add_term(s.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &ParamRat) -> ModuleVector {
        let mut r = ModuleVector::default();
        for (s, v) in &self.coords {
            r.add_term(s.clone(), v.mul(c));
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn act<F: Fn(&Tableau) -> Vec<(Tableau, ParamRat)>>(&self, f: F) -> ModuleVector {
        let mut r = ModuleVector::default();
        for (s, c) in &self.coords {
            for (s2, k) in f(s) {
                r.add_term(s2, k.mul(c));
            }
        }
        r
    }
}

/// S·τ(s_i) in the tableau basis.
pub fn si_on_basis(s: &Tableau, i: usize) -> Vec<(Tableau, ParamRat)> {
    match action_case(s, i) {
        ActionCase::SameRow => vec![(s.clone(), ParamRat::one())],
        ActionCase::SameCol => vec![(s.clone(), ParamRat::from_int(-1))],
        ActionCase::Up(b) => vec![
            (s.swapped(i).expect("adjacent swap"), ParamRat::one()),
            (s.clone(), ParamRat::from_ratio(1, b as i64)),
        ],
        ActionCase::Down(b) => {
            let b = b as i64;
            vec![
                (s.swapped(i).expect("adjacent swap"), ParamRat::from_ratio(b * b - 1, b * b)),
                (s.clone(), ParamRat::from_ratio(1, b)),
            ]
        }
    }
}

/// S·τ(T_i) with Hecke parameter `t`.
pub fn ti_on_basis(s: &Tableau, i: usize, t: &ParamRat) -> Vec<(Tableau, ParamRat)> {
    if t.is_one() {
        return si_on_basis(s, i);
    }
    let one = ParamRat::one();
    match action_case(s, i) {
        ActionCase::SameRow => vec![(s.clone(), t.clone())],
        ActionCase::SameCol => vec![(s.clone(), ParamRat::from_int(-1))],
        ActionCase::Up(b) => {
            let c = t.sub(&one).div(&one.sub(&t.pow(-b))).expect("generic t");
            vec![(s.swapped(i).expect("adjacent swap"), one), (s.clone(), c)]
        }
        ActionCase::Down(b) => {
            let tb = t.pow(b);
            let den = tb.sub(&one);
            let a = t
                .mul(&t.pow(b + 1).sub(&one))
                .mul(&t.pow(b - 1).sub(&one))
                .div(&den.mul(&den))
                .expect("generic t");
            let d = tb.mul(&t.sub(&one)).div(&den).expect("generic t");
            vec![(s.swapped(i).expect("adjacent swap"), a), (s.clone(), d)]
        }
    }
}

/// v·τ(s_i).
pub fn act_si(v: &ModuleVector, i: usize) -> ModuleVector {
    v.act(|s| si_on_basis(s, i))
}

/// v·τ(T_i), or v·τ(T_i)⁻¹ = v·(τ(T_i) − (t−1))/t.
pub fn act_ti(v: &ModuleVector, i: usize, inverse: bool, t: &ParamRat) -> ModuleVector {
    let w = v.act(|s| ti_on_basis(s, i, t));
    if !inverse {
        return w;
    }
    let tm1 = t.sub(&ParamRat::one());
    w.add(&v.scale(&tm1.neg())).scale(&t.inv().expect("t nonzero"))
}

/// v·τ(s_ij) for i < j via s_i s_{i+1} ⋯ s_{j−1} ⋯ s_{i+1} s_i.
pub fn act_sij(v: &ModuleVector, i: usize, j: usize) -> ModuleVector {
    let mut w = v.clone();
    for k in i..j {
        w = act_si(&w, k);
    }
    for k in (i..j - 1).rev() {
        w = act_si(&w, k);
    }
    w
}

/// v·τ(ω_i) with ω_i = Σ_{j>i} s_ij.
pub fn act_omega(v: &ModuleVector, i: usize, n: usize) -> ModuleVector {
    let mut r = ModuleVector::default();
    for j in i + 1..=n {
        r = r.add(&act_sij(v, i, j));
    }
    r
}

/// v·τ(φ_i) with φ_N = 1 and φ_i = (1/t) T_i φ_{i+1} T_i.
pub fn act_phi(v: &ModuleVector, i: usize, n: usize, t: &ParamRat) -> ModuleVector {
    if i == n {
        return v.clone();
    }
    let w = act_ti(v, i, false, t);
    let w = act_phi(&w, i + 1, n, t);
    act_ti(&w, i, false, t).scale(&t.inv().expect("t nonzero"))
}

/// Applies ω_i (group) or φ_i (Hecke) to S for every i and returns the eigenvalues.
pub fn jucys_murphy_eigencheck(s: &Tableau, algebra: Algebra) -> Result<Vec<ParamRat>> {
    let n = s.n();
    let v = ModuleVector::basis(s);
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let w = match algebra {
            Algebra::Group => act_omega(&v, i, n),
            _ => act_phi(&v, i, n, &algebra.t()),
        };
        let ev = w.coords.get(s).cloned().unwrap_or_default();
        if w.coords.len() > 1 || (w.coords.len() == 1 && !w.coords.contains_key(s)) {
            return Err(Error::NotEigenvector(format!("{s} under the element at {i}")));
        }
        out.push(ev);
    }
    Ok(out)
}

/// Inner-product variants on V_τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerMode {
    /// ⟨S,S⟩_t = γ(S; t).
    T,
    /// The t → 1 limit, from its own closed product.
    Limit1,
}

/// γ(S; t) = Π over i<j with d = c(j)−c(i) ≥ 2 of (1−t^{d−1})(1−t^{d+1})/(1−t^d)².
pub fn gamma(s: &Tableau, t: &ParamRat) -> ParamRat {
    let c = s.contents();
    let one = ParamRat::one();
    let mut num = ParamRat::one();
    let mut den = ParamRat::one();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let d = c[j] - c[i];
            if d >= 2 {
                num = num.mul(&one.sub(&t.pow(d - 1))).mul(&one.sub(&t.pow(d + 1)));
                let f = one.sub(&t.pow(d));
                den = den.mul(&f).mul(&f);
            }
        }
    }
    num.div(&den).expect("generic t")
}

/// ⟨S,S⟩₁ = Π over i<j with c(i) ≤ c(j)−2 of (1 − 1/(c(i)−c(j))²).
pub fn gamma1(s: &Tableau) -> ParamRat {
    let c = s.contents();
    let mut r = ParamRat::one();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[i] <= c[j] - 2 {
                let d = (c[i] - c[j]) as i64;
                r = r.mul(&ParamRat::from_ratio(d * d - 1, d * d));
            }
        }
    }
    r
}

pub fn inner_product(s: &Tableau, s2: &Tableau, mode: InnerMode) -> ParamRat {
    if s != s2 {
        return ParamRat::zero();
    }
    match mode {
        InnerMode::T => gamma(s, &ParamRat::t()),
        InnerMode::Limit1 => gamma1(s),
    }
}

/// Polynomials indexed by Tab_τ, meant to transform under the action formulas.
#[derive(Clone, Debug, PartialEq)]
pub struct IsotypeBasis {
    pub shape: Partition,
    pub algebra: Algebra,
    pub polys: BTreeMap<Tableau, XPoly>,
}

impl IsotypeBasis {
    pub fn get(&self, s: &Tableau) -> &XPoly {
        &self.polys[s]
    }

    pub fn n(&self) -> usize {
        self.shape.size() as usize
    }

    /// Applies a coefficient map to every polynomial.
    pub fn map<F: Fn(&XPoly) -> Result<XPoly>>(&self, f: F) -> Result<IsotypeBasis> {
        let mut polys = BTreeMap::new();
        for (s, p) in &self.polys {
            polys.insert(s.clone(), f(p)?);
        }
        Ok(IsotypeBasis { shape: self.shape.clone(), algebra: self.algebra, polys })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn group_examples() {
        let s0 = Tableau::s0(&shape("2,1"));
        let s1 = Tableau::s1(&shape("2,1"));
        let w = act_si(&ModuleVector::basis(&s0), 1);
        assert_eq!(w.coords[&s1], ParamRat::one());
        assert_eq!(w.coords[&s0], ParamRat::from_ratio(1, 2));
        let row = Tableau::s0(&shape("3"));
        assert_eq!(act_si(&ModuleVector::basis(&row), 2), ModuleVector::basis(&row));
        let col = Tableau::s0(&shape("1,1,1"));
        assert_eq!(act_si(&ModuleVector::basis(&col), 1), ModuleVector::basis(&col).scale(&ParamRat::from_int(-1)));
    }

    #[test]
    fn jucys_murphy_examples() {
        let s0 = Tableau::s0(&shape("2,1"));
        let ev = jucys_murphy_eigencheck(&s0, Algebra::Group).unwrap();
        assert_eq!(ev, vec![ParamRat::from_int(1), ParamRat::from_int(-1), ParamRat::from_int(0)]);
        let s = Tableau::parse("4,3,1/7,6,5,2", crate::combin::TableauKind::Rsyt).unwrap();
        let ev = jucys_murphy_eigencheck(&s, Algebra::Hecke).unwrap();
        let want: Vec<ParamRat> = [1, 3, 0, -1, 2, 1, 0].iter().map(|&c| ParamRat::t().pow(c)).collect();
        assert_eq!(ev, want);
    }

    #[test]
    fn inner_products() {
        let s0 = Tableau::s0(&shape("2,1"));
        let s1 = Tableau::s1(&shape("2,1"));
        assert!(inner_product(&s0, &s1, InnerMode::T).is_zero());
        assert!(gamma(&Tableau::s0(&shape("2")), &ParamRat::t()).is_one());
        let t = ParamRat::t();
        let one = ParamRat::one();
        let direct = one
            .sub(&t)
            .mul(&one.sub(&t.pow(3)))
            .div(&one.sub(&t.pow(2)).pow(2))
            .unwrap();
        assert!(gamma(&s0, &t).is_one());
        assert_eq!(gamma(&s1, &t), direct);
        assert_eq!(gamma1(&s1), ParamRat::from_ratio(3, 4));
    }
}
