//! Operators on polynomials, all acting on the right: p·A·B means apply A, then B.

pub mod bold;

use crate::coeffs::{ParamRat, SpecMap};
use crate::combin::Partition;
use crate::error::Result;
use crate::mpoly::{Mono, XPoly};

pub use bold::{bold_apply, BoldOp, VPoly};

/// Variable count, parameter values, and an optional module shape.
#[derive(Clone, Debug, PartialEq)]
pub struct OpContext {
    pub n: usize,
    pub kappa: ParamRat,
    pub q: ParamRat,
    pub t: ParamRat,
    pub shape: Option<Partition>,
}

impl OpContext {
    /// Generic parameters κ, q, t.
    pub fn generic(n: usize) -> Self {
        OpContext { n, kappa: ParamRat::kappa(), q: ParamRat::q(), t: ParamRat::t(), shape: None }
    }

    pub fn with_shape(mut self, shape: Partition) -> Self {
        self.shape = Some(shape);
        self
    }

    pub fn with_kappa(mut self, kappa: ParamRat) -> Self {
        self.kappa = kappa;
        self
    }

    /// Parameters specialized by `spec`.
    pub fn specialized(&self, spec: &SpecMap) -> Result<Self> {
        Ok(OpContext {
            n: self.n,
            kappa: spec.apply(&self.kappa)?,
            q: spec.apply(&self.q)?,
            t: spec.apply(&self.t)?,
            shape: self.shape.clone(),
        })
    }

    fn t_inv(&self) -> ParamRat {
        self.t.inv().expect("t must be nonzero")
    }
}

/// p·s_i.
pub fn apply_s(p: &XPoly, i: usize) -> XPoly {
    p.swap_x(i, i + 1)
}

/// Partial derivative ∂/∂x_i.
pub fn partial(p: &XPoly, i: usize) -> XPoly {
    let k = i - 1;
    XPoly::from_terms(p.terms().filter(|(m, _)| m[k] > 0).map(|(m, c)| {
        let mut e = *m;
        e[k] -= 1;
        (e, c.mul(&ParamRat::from_int(m[k] as i64)))
    }))
}

/// Multiplication by x_i.
pub fn mul_x(p: &XPoly, i: usize) -> XPoly {
    let mut m: Mono = [0; crate::mpoly::NVARS];
    m[i - 1] = 1;
    p.mul_mono(&m)
}

/// pT_i = (1−t)x_{i+1}(p − p s_i)/(x_i − x_{i+1}) + t·p s_i; the inverse is (T_i − (t−1))/t.
pub fn apply_t(p: &XPoly, i: usize, inverse: bool, ctx: &OpContext) -> XPoly {
    let one = ParamRat::one();
    let dd = mul_x(&p.divided_difference(i, i + 1), i + 1).scale(&one.sub(&ctx.t));
    let r = dd.add(&apply_s(p, i).scale(&ctx.t));
    if !inverse {
        return r;
    }
    r.sub(&p.scale(&ctx.t.sub(&one))).scale(&ctx.t_inv())
}

/// D_i = ∂_i + κ Σ_{j≠i} ∂_ij.
pub fn dunkl_group(p: &XPoly, i: usize, ctx: &OpContext) -> XPoly {
    let mut acc = XPoly::zero();
    for j in 1..=ctx.n {
        if j != i {
            acc.add_assign(&p.divided_difference(i, j));
        }
    }
    partial(p, i).add(&acc.scale(&ctx.kappa))
}

/// p·ω_i = Σ_{j>i} p s_ij.
pub fn omega_i(p: &XPoly, i: usize, n: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for j in i + 1..=n {
        acc.add_assign(&p.swap_x(i, j));
    }
    acc
}

/// U_i: p ↦ x_i·(pD_i) + p + κ·p ω_i.
pub fn cherednik_group(p: &XPoly, i: usize, ctx: &OpContext) -> XPoly {
    mul_x(&dunkl_group(p, i, ctx), i).add(p).add(&omega_i(p, i, ctx.n).scale(&ctx.kappa))
}

/// p·ω = p s_1 s_2 ⋯ s_{N−1}.
pub fn omega(p: &XPoly, n: usize) -> XPoly {
    let mut r = p.clone();
    for i in 1..n {
        r = apply_s(&r, i);
    }
    r
}

/// fω^q = f(q x_N, x_1, …, x_{N−1}).
pub fn omega_q(p: &XPoly, ctx: &OpContext) -> XPoly {
    let n = ctx.n;
    let mut qpow: Vec<ParamRat> = vec![ParamRat::one()];
    XPoly::from_terms(p.terms().map(|(m, c)| {
        let mut e = *m;
        let a1 = m[0];
        for k in 0..n - 1 {
            e[k] = m[k + 1];
        }
        e[n - 1] = a1;
        while qpow.len() <= a1 as usize {
            let next = qpow.last().unwrap().mul(&ctx.q);
            qpow.push(next);
        }
        (e, c.mul(&qpow[a1 as usize]))
    }))
}

/// ξ_i = t^{i−1} T_{i−1}⁻¹ ⋯ T_1⁻¹ ω^q T_{N−1} ⋯ T_i.
pub fn xi(p: &XPoly, i: usize, ctx: &OpContext) -> XPoly {
    let mut r = p.clone();
    for j in (1..i).rev() {
        r = apply_t(&r, j, true, ctx);
    }
    r = omega_q(&r, ctx);
    for j in (i..ctx.n).rev() {
        r = apply_t(&r, j, false, ctx);
    }
    r.scale(&ctx.t.pow(i as i32 - 1))
}

/// D_N^{q,t} = (1 − ξ_N)x_N⁻¹ and D_i^{q,t} = (1/t) T_i D_{i+1}^{q,t} T_i.
pub fn dunkl_qt(p: &XPoly, i: usize, ctx: &OpContext) -> Result<XPoly> {
    if i == ctx.n {
        return p.sub(&xi(p, ctx.n, ctx)).div_slot(ctx.n - 1);
    }
    let r = apply_t(p, i, false, ctx);
    let r = dunkl_qt(&r, i + 1, ctx)?;
    Ok(apply_t(&r, i, false, ctx).scale(&ctx.t_inv()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> XPoly {
        XPoly::parse(s, 1).unwrap()
    }

    fn vandermonde_t() -> XPoly {
        p("(t*x1 - x2)*(t*x1 - x3)*(t*x2 - x3)")
    }

    #[test]
    fn hecke_examples() {
        let ctx = OpContext::generic(3);
        assert_eq!(apply_t(&XPoly::one(), 1, false, &ctx), XPoly::constant(ParamRat::t()));
        let v = vandermonde_t();
        assert_eq!(apply_t(&v, 1, false, &ctx), v.neg());
        assert_eq!(apply_t(&v, 2, false, &ctx), v.neg());
        assert_eq!(apply_t(&apply_t(&v, 1, false, &ctx), 2, false, &ctx), v);
        assert_eq!(omega_q(&v, &ctx), p("(t*q*x3 - x1)*(t*q*x3 - x2)*(t*x1 - x2)"));
        assert_eq!(omega_q(&p("x1"), &ctx), p("q*x3"));
        assert_eq!(omega_q(&p("x2"), &ctx), p("x1"));
    }

    #[test]
    fn group_examples() {
        let ctx = OpContext::generic(2);
        assert!(dunkl_group(&XPoly::one(), 1, &ctx).is_zero());
        assert_eq!(dunkl_group(&p("x1"), 1, &ctx), p("1 + k"));
        assert_eq!(cherednik_group(&XPoly::one(), 1, &ctx), p("1 + k"));
        assert_eq!(cherednik_group(&XPoly::one(), 2, &ctx), XPoly::one());
    }

    #[test]
    fn xi_and_dunkl_on_constants() {
        let ctx = OpContext::generic(3);
        for i in 1..=3 {
            assert_eq!(xi(&XPoly::one(), i, &ctx), XPoly::constant(ParamRat::t().pow(3 - i as i32)));
            assert!(dunkl_qt(&XPoly::one(), i, &ctx).unwrap().is_zero());
        }
    }

    #[test]
    fn derivative_convention() {
        // p(x_i ∂_i) = p + p(∂_i x_i)
        let f = p("x1^3 x2 + t*x1 x2^2 + 5");
        let lhs = partial(&mul_x(&f, 1), 1);
        let rhs = f.add(&mul_x(&partial(&f, 1), 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commuting_families() {
        let ctx = OpContext::generic(3);
        let f = p("x1^2 x3 + 2*x2 + x1 x2 x3^2");
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let ab = cherednik_group(&cherednik_group(&f, a, &ctx), b, &ctx);
            assert_eq!(ab, cherednik_group(&cherednik_group(&f, b, &ctx), a, &ctx));
            let ab = xi(&xi(&f, a, &ctx), b, &ctx);
            assert_eq!(ab, xi(&xi(&f, b, &ctx), a, &ctx));
            let ab = dunkl_qt(&dunkl_qt(&f, a, &ctx).unwrap(), b, &ctx).unwrap();
            assert_eq!(ab, dunkl_qt(&dunkl_qt(&f, b, &ctx).unwrap(), a, &ctx).unwrap());
        }
    }
}
