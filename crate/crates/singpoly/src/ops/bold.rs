//! Vector-valued polynomials P ⊗ V_τ and the operators acting on them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{apply_s, apply_t, dunkl_group, mul_x, omega, omega_q, partial, OpContext};
use crate::coeffs::ParamRat;
use crate::combin::Tableau;
use crate::error::Result;
use crate::mpoly::XPoly;
use crate::rep::{act_si, act_sij, act_ti, ModuleVector};

/// Σ_S f_S ⊗ S.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VPoly {
    pub comps: BTreeMap<Tableau, XPoly>,
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly::default()
    }

    /// f ⊗ S.
    pub fn single(f: XPoly, s: Tableau) -> Self {
        let mut v = VPoly::zero();
        v.add_comp(s, &f);
        v
    }

    /// f ⊗ v.
    pub fn tensor(f: &XPoly, v: &ModuleVector) -> Self {
        let mut r = VPoly::zero();
        for (s, c) in &v.coords {
            r.add_comp(s.clone(), &f.scale(c));
        }
        r
    }

    pub fn add_comp(&mut self, s: Tableau, f: &XPoly) {
        if f.is_zero() {
            return;
        }
        match self.comps.entry(s) {
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(f);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(f.clone());
            }
        }
    }

    pub fn get(&self, s: &Tableau) -> XPoly {
        self.comps.get(s).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(XPoly::is_zero)
    }

    pub fn add(&self, o: &VPoly) -> VPoly {
        let mut r = self.clone();
        for (s, f) in &o.comps {
            r.add_comp(s.clone(), f);
        }
        r
    }

    pub fn sub(&self, o: &VPoly) -> VPoly {
        self.add(&o.scale(&ParamRat::from_int(-1)))
    }

    pub fn scale(&self, c: &ParamRat) -> VPoly {
        if c.is_zero() {
            return VPoly::zero();
        }
        VPoly { comps: self.comps.iter().map(|(s, f)| (s.clone(), f.scale(c))).collect() }
    }

    /// Applies `f` to every component.
    pub fn map_poly<F: Fn(&XPoly) -> XPoly>(&self, f: F) -> VPoly {
        let mut r = VPoly::zero();
        for (s, g) in &self.comps {
            r.add_comp(s.clone(), &f(g));
        }
        r
    }

    pub fn try_map_poly<F: Fn(&XPoly) -> Result<XPoly>>(&self, f: F) -> Result<VPoly> {
        let mut r = VPoly::zero();
        for (s, g) in &self.comps {
            r.add_comp(s.clone(), &f(g)?);
        }
        Ok(r)
    }

    /// (f ⊗ S)(A ⊗ B) = fA ⊗ SB.
    pub fn tensor_apply<A, B>(&self, poly: A, module: B) -> VPoly
    where
        A: Fn(&XPoly) -> XPoly,
        B: Fn(&ModuleVector) -> ModuleVector,
    {
        let mut r = VPoly::zero();
        for (s, f) in &self.comps {
            let g = poly(f);
            if g.is_zero() {
                continue;
            }
            for (s2, c) in &module(&ModuleVector::basis(s)).coords {
                r.add_comp(s2.clone(), &g.scale(c));
            }
        }
        r
    }

    /// Ratio c with self = c·o, if any.
    pub fn scalar_ratio(&self, o: &VPoly) -> Option<ParamRat> {
        if self.comps.len() != o.comps.len() {
            return None;
        }
        let mut ratio: Option<ParamRat> = None;
        for (s, f) in &self.comps {
            let g = o.comps.get(s)?;
            let r = f.scalar_ratio(g)?;
            match &ratio {
                None => ratio = Some(r),
                Some(r0) if *r0 == r => {}
                _ => return None,
            }
        }
        ratio.or(Some(ParamRat::zero()))
    }

    pub fn specialize(&self, spec: &crate::coeffs::SpecMap) -> Result<VPoly> {
        self.try_map_poly(|f| f.specialize(spec))
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, g)) in self.comps.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{s}: {g}")?;
        }
        Ok(())
    }
}

/// Operators on P ⊗ V_τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoldOp {
    /// s_i ⊗ τ(s_i).
    S(usize),
    /// ω ⊗ τ(s_1 ⋯ s_{N−1}).
    W,
    /// ∂_i ⊗ 1 + κ Σ_{j≠i} ∂_ij ⊗ τ(s_ij).
    D(usize),
    /// Σ_{j>i} s_ij ⊗ τ(s_ij).
    Wi(usize),
    /// D_i x_i + 1 + κ w_i.
    U(usize),
    /// (1−t) ∂_i x_{i+1} ⊗ 1 + s_i ⊗ τ(T_i).
    T(usize),
    /// Inverse of `T`.
    Tinv(usize),
    /// t^{1−N} ω^q ⊗ τ(T_1 ⋯ T_{N−1}).
    Wq,
    /// t^{i−1} T_{i−1}⁻¹ ⋯ T_1⁻¹ w^q T_{N−1} ⋯ T_i.
    E(usize),
    /// D_N^{q,t} = (1 − E_N)x_N⁻¹, D_i^{q,t} = (1/t) T_i D_{i+1}^{q,t} T_i.
    Dqt(usize),
}

fn sij(v: &ModuleVector, i: usize, j: usize) -> ModuleVector {
    if i < j {
        act_sij(v, i, j)
    } else {
        act_sij(v, j, i)
    }
}

fn t_inv(ctx: &OpContext) -> ParamRat {
    ctx.t.inv().expect("t must be nonzero")
}

/// v·op.
pub fn bold_apply(v: &VPoly, op: BoldOp, ctx: &OpContext) -> Result<VPoly> {
    let n = ctx.n;
    Ok(match op {
        BoldOp::S(i) => v.tensor_apply(|f| apply_s(f, i), |m| act_si(m, i)),
        BoldOp::W => v.tensor_apply(
            |f| omega(f, n),
            |m| (1..n).fold(m.clone(), |acc, i| act_si(&acc, i)),
        ),
        BoldOp::D(i) => {
            let mut r = v.map_poly(|f| partial(f, i));
            for j in (1..=n).filter(|&j| j != i) {
                let part = v.tensor_apply(|f| f.divided_difference(i, j), |m| sij(m, i, j));
                r = r.add(&part.scale(&ctx.kappa));
            }
            r
        }
        BoldOp::Wi(i) => {
            let mut r = VPoly::zero();
            for j in i + 1..=n {
                r = r.add(&v.tensor_apply(|f| f.swap_x(i, j), |m| act_sij(m, i, j)));
            }
            r
        }
        BoldOp::U(i) => {
            let d = bold_apply(v, BoldOp::D(i), ctx)?.map_poly(|f| mul_x(f, i));
            let w = bold_apply(v, BoldOp::Wi(i), ctx)?;
            d.add(v).add(&w.scale(&ctx.kappa))
        }
        BoldOp::T(i) => {
            let one = ParamRat::one();
            let dd = v.map_poly(|f| mul_x(&f.divided_difference(i, i + 1), i + 1).scale(&one.sub(&ctx.t)));
            dd.add(&v.tensor_apply(|f| apply_s(f, i), |m| act_ti(m, i, false, &ctx.t)))
        }
        BoldOp::Tinv(i) => {
            let w = bold_apply(v, BoldOp::T(i), ctx)?;
            w.sub(&v.scale(&ctx.t.sub(&ParamRat::one()))).scale(&t_inv(ctx))
        }
        BoldOp::Wq => v
            .tensor_apply(
                |f| omega_q(f, ctx),
                |m| (1..n).fold(m.clone(), |acc, i| act_ti(&acc, i, false, &ctx.t)),
            )
            .scale(&ctx.t.pow(1 - n as i32)),
        BoldOp::E(i) => {
            let mut r = v.clone();
            for j in (1..i).rev() {
                r = bold_apply(&r, BoldOp::Tinv(j), ctx)?;
            }
            r = bold_apply(&r, BoldOp::Wq, ctx)?;
            for j in (i..n).rev() {
                r = bold_apply(&r, BoldOp::T(j), ctx)?;
            }
            r.scale(&ctx.t.pow(i as i32 - 1))
        }
        BoldOp::Dqt(i) => {
            if i == n {
                let e = bold_apply(v, BoldOp::E(n), ctx)?;
                v.sub(&e).try_map_poly(|f| f.div_slot(n - 1))?
            } else {
                let r = bold_apply(v, BoldOp::T(i), ctx)?;
                let r = bold_apply(&r, BoldOp::Dqt(i + 1), ctx)?;
                bold_apply(&r, BoldOp::T(i), ctx)?.scale(&t_inv(ctx))
            }
        }
    })
}

/// Scalar T_i on every component, without touching the module factor.
pub fn scalar_t(v: &VPoly, i: usize, ctx: &OpContext) -> VPoly {
    v.map_poly(|f| apply_t(f, i, false, ctx))
}

/// Scalar D_i on every component.
pub fn scalar_dunkl(v: &VPoly, i: usize, ctx: &OpContext) -> VPoly {
    v.map_poly(|f| dunkl_group(f, i, ctx))
}

/// ρ(Σ f_S ⊗ S) = Σ f_S g_S for an isotype basis g.
pub fn project_rho<F: Fn(&Tableau) -> XPoly>(v: &VPoly, g: F) -> XPoly {
    let mut r = XPoly::zero();
    for (s, f) in &v.comps {
        r.add_assign(&f.mul(&g(s)));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Partition;

    fn shape21() -> Partition {
        Partition::new(vec![2, 1]).unwrap()
    }

    fn basis_vpoly(f: &str) -> VPoly {
        let f = XPoly::parse(f, 1).unwrap();
        let mut v = VPoly::zero();
        for s in Tableau::enumerate_rsyt(&shape21()) {
            v.add_comp(s, &f);
        }
        v
    }

    #[test]
    fn quadratic_relation() {
        let ctx = OpContext::generic(3);
        let v = basis_vpoly("x1^2 x3 + t*x2");
        for i in 1..3 {
            let t1 = bold_apply(&v, BoldOp::T(i), &ctx).unwrap();
            let t2 = bold_apply(&t1, BoldOp::T(i), &ctx).unwrap();
            let lhs = t2.sub(&t1.scale(&ctx.t.sub(&ParamRat::one())));
            assert_eq!(lhs, v.scale(&ctx.t));
            let back = bold_apply(&t1, BoldOp::Tinv(i), &ctx).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn constants_and_dunkl() {
        let ctx = OpContext::generic(3);
        let s0 = Tableau::s0(&shape21());
        let one = VPoly::single(XPoly::one(), s0.clone());
        for i in 1..=3 {
            assert!(bold_apply(&one, BoldOp::D(i), &ctx).unwrap().is_zero());
            assert!(bold_apply(&one, BoldOp::Dqt(i), &ctx).unwrap().is_zero());
        }
    }

    #[test]
    fn s_matches_group_t() {
        let ctx = OpContext::generic(3).with_kappa(ParamRat::kappa());
        let mut ctx1 = ctx.clone();
        ctx1.t = ParamRat::one();
        let v = basis_vpoly("x1^2 x3 + x2");
        for i in 1..3 {
            assert_eq!(bold_apply(&v, BoldOp::T(i), &ctx1).unwrap(), bold_apply(&v, BoldOp::S(i), &ctx).unwrap());
        }
    }

    #[test]
    fn dunkl_commute() {
        let ctx = OpContext::generic(3);
        let v = basis_vpoly("x1^2 x3 + 2*x2");
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let ab = bold_apply(&bold_apply(&v, BoldOp::D(a), &ctx).unwrap(), BoldOp::D(b), &ctx).unwrap();
            let ba = bold_apply(&bold_apply(&v, BoldOp::D(b), &ctx).unwrap(), BoldOp::D(a), &ctx).unwrap();
            assert_eq!(ab, ba, "D_{a} D_{b}");
        }
    }

    #[test]
    fn commuting_families() {
        let ctx = OpContext::generic(3);
        let v = basis_vpoly("x1^2 x3 + 2*x2");
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let ab = bold_apply(&bold_apply(&v, BoldOp::U(a), &ctx).unwrap(), BoldOp::U(b), &ctx).unwrap();
            let ba = bold_apply(&bold_apply(&v, BoldOp::U(b), &ctx).unwrap(), BoldOp::U(a), &ctx).unwrap();
            assert_eq!(ab, ba, "U_{a} U_{b}");
            let ab = bold_apply(&bold_apply(&v, BoldOp::E(a), &ctx).unwrap(), BoldOp::E(b), &ctx).unwrap();
            let ba = bold_apply(&bold_apply(&v, BoldOp::E(b), &ctx).unwrap(), BoldOp::E(a), &ctx).unwrap();
            assert_eq!(ab, ba, "E_{a} E_{b}");
        }
    }
}
