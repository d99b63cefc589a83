//! Operator identities: Hecke relations, spectral vectors, Jucys–Murphy eigenvalues, intertwining by ρ.

use num_rational::Ratio;

use super::{Budget, VerifyReport};
use crate::build::{build_nonsym, cherednik, support_basis, PolyKind, SpectralVector};
use crate::coeffs::ParamRat;
use crate::combin::{Composition, Family, Partition, Tableau};
use crate::error::Result;
use crate::mpoly::XPoly;
use crate::ops::{apply_s, apply_t, bold_apply, dunkl_group, dunkl_qt, omega_q, xi, BoldOp, OpContext, VPoly};
use crate::rep::{jucys_murphy_eigencheck, Algebra, IsotypeBasis};

/// (T_i − t)(T_i + 1) = 0, T_iT_{i+1}T_i = T_{i+1}T_iT_{i+1} and T_iT_j = T_jT_i for |i − j| ≥ 2, on each input.
pub fn check_hecke_relations(polys: &[XPoly], n: usize) -> VerifyReport {
    let ctx = OpContext::generic(n);
    check_hecke_relations_for(polys, n, &ctx.t, |p, i| apply_t(p, i, false, &ctx))
}

/// The Hecke relations with parameter `t` for an arbitrary family of operators `tt(p, i)`.
pub fn check_hecke_relations_for<F: Fn(&XPoly, usize) -> XPoly>(polys: &[XPoly], n: usize, t: &ParamRat, tt: F) -> VerifyReport {
    let mut r = VerifyReport::new("operators", &format!("hecke relations N={n}"));
    for (k, p) in polys.iter().enumerate() {
        for i in 1..n {
            let pt = tt(p, i);
            let quad = tt(&pt, i).sub(&pt.scale(&t.sub(&ParamRat::one()))).sub(&p.scale(t));
            r.check(format!("#{k} quadratic T_{i}"), quad.is_zero(), || format!("p = {p}: residual {quad}"));
            if i + 1 < n {
                let a = tt(&tt(&pt, i + 1), i);
                let b = tt(&tt(&tt(p, i + 1), i), i + 1);
                r.check(format!("#{k} braid T_{i}"), a == b, || format!("p = {p}: difference {}", a.sub(&b)));
            }
            for j in i + 2..n {
                let a = tt(&pt, j);
                let b = tt(&tt(p, j), i);
                r.check(format!("#{k} far T_{i} T_{j}"), a == b, || format!("p = {p}: difference {}", a.sub(&b)));
            }
        }
    }
    r
}

/// J_α·U_i = ς_α(i) J_α or M_α·ξ_i = ζ_α(i) M_α for every i, at generic parameters.
pub fn check_spectral(kind: PolyKind, alpha: &Composition, budget: &Budget) -> Result<VerifyReport> {
    VerifyReport::run("spectral", &format!("{kind:?} {alpha}"), |r| {
        budget.admit(support_basis(alpha).len())?;
        let p = build_nonsym(kind, alpha, &OpContext::generic(alpha.len()))?;
        r.absorb("built", check_spectral_of(kind, &p, alpha));
        Ok(())
    })
}

/// p·U_i = ς_α(i) p or p·ξ_i = ζ_α(i) p for every i, for a claimed J_α or M_α.
pub fn check_spectral_of(kind: PolyKind, p: &XPoly, alpha: &Composition) -> VerifyReport {
    let mut r = VerifyReport::new("spectral", &format!("{kind:?} {alpha}"));
    let ctx = OpContext::generic(alpha.len());
    let sv = SpectralVector::nonsym(kind, alpha, &ctx);
    for (i, v) in sv.values.iter().enumerate() {
        let d = cherednik(kind, p, i + 1, &ctx).sub(&p.scale(v));
        r.check(format!("eigenvalue {}", i + 1), d.is_zero(), || format!("expected {v}, residual {d}"));
    }
    r
}

/// S·τ(ω_i) = c_S(i) S (group) or S·τ(φ_i) = t^{c_S(i)} S (Hecke) for every S of the shape.
pub fn check_jucys_murphy(shape: &Partition, algebra: Algebra) -> VerifyReport {
    check_jucys_murphy_against(shape, algebra, |c| match algebra {
        Algebra::Group => ParamRat::from_int(c as i64),
        _ => algebra.t().pow(c),
    })
}

/// The Jucys–Murphy eigenvalues of every S compared with `expected(c_S(i))`.
pub fn check_jucys_murphy_against<F: Fn(i32) -> ParamRat>(shape: &Partition, algebra: Algebra, expected: F) -> VerifyReport {
    let mut r = VerifyReport::new("jucys-murphy", &format!("{shape} {algebra:?}"));
    for s in Tableau::enumerate_rsyt(shape) {
        let expected: Vec<ParamRat> = s.contents().iter().map(|&c| expected(c)).collect();
        match jucys_murphy_eigencheck(&s, algebra) {
            Ok(ev) => {
                r.check(format!("{s}"), ev == expected, || {
                    let show = |v: &[ParamRat]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                    format!("eigenvalues [{}], expected [{}]", show(&ev), show(&expected))
                });
            }
            Err(e) => {
                r.check(format!("{s}"), false, || e.to_string());
            }
        }
    }
    r
}

/// α(S)_k + κ₀(N − r(α(S), k)) = κ₀ c_S(k) for every S ∈ Tab_τ and every k, for the family (N, m, n).
pub fn check_spectral_contents(family: &Family) -> VerifyReport {
    let case = format!("N={},m={},n={}", family.n_vars, family.m, family.n);
    let mut r = VerifyReport::new("spectral-contents", &case);
    r.input("tau", &family.tau);
    let k0 = family.kappa0;
    let n = family.n_vars as i64;
    for s in Tableau::enumerate_rsyt(&family.tau) {
        let alpha = s.alpha(family.m, family.m0);
        let bad = (1..=family.n_vars).find(|&k| {
            let lhs = Ratio::from_integer(alpha.parts()[k - 1] as i64) + k0 * (n - alpha.rank(k) as i64);
            lhs != k0 * s.content(k) as i64
        });
        r.check(format!("{s}"), bad.is_none(), || format!("α(S) = {alpha} fails at k = {}", bad.unwrap_or(0)));
    }
    r
}

/// Operators paired by the projection ρ: the bold operator on P ⊗ V_τ and its scalar counterpart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Intertwined {
    /// 𝐬_i / s_i or 𝐓_i / T_i, following the basis algebra.
    Reflection,
    /// 𝐃_i / D_i (group) or 𝐃_i^{q,t} / D_i^{q,t} (Hecke).
    Dunkl,
    /// 𝐔_i / U_i.
    Cherednik,
    /// 𝐰^q / ω^q.
    CyclicQ,
    /// 𝐄_i / ξ_i.
    Xi,
}

fn scalar_side(p: &XPoly, op: Intertwined, i: usize, algebra: Algebra, ctx: &OpContext) -> Result<XPoly> {
    Ok(match (op, algebra) {
        (Intertwined::Reflection, Algebra::Group) => apply_s(p, i),
        (Intertwined::Reflection, _) => apply_t(p, i, false, ctx),
        (Intertwined::Dunkl, Algebra::Group) => dunkl_group(p, i, ctx),
        (Intertwined::Dunkl, _) => dunkl_qt(p, i, ctx)?,
        (Intertwined::Cherednik, _) => cherednik(PolyKind::Jack, p, i, ctx),
        (Intertwined::CyclicQ, _) => omega_q(p, ctx),
        (Intertwined::Xi, _) => xi(p, i, ctx),
    })
}

fn bold_op(op: Intertwined, i: usize, algebra: Algebra) -> BoldOp {
    match (op, algebra) {
        (Intertwined::Reflection, Algebra::Group) => BoldOp::S(i),
        (Intertwined::Reflection, _) => BoldOp::T(i),
        (Intertwined::Dunkl, Algebra::Group) => BoldOp::D(i),
        (Intertwined::Dunkl, _) => BoldOp::Dqt(i),
        (Intertwined::Cherednik, _) => BoldOp::U(i),
        (Intertwined::CyclicQ, _) => BoldOp::Wq,
        (Intertwined::Xi, _) => BoldOp::E(i),
    }
}

/// (v·𝐀)·ρ = (v·ρ)·A for every input v and every index of each operator, with ρ given by `basis`.
pub fn check_intertwining(basis: &IsotypeBasis, inputs: &[VPoly], ops: &[Intertwined], ctx: &OpContext) -> Result<VerifyReport> {
    VerifyReport::run("intertwining", &format!("{} {:?}", basis.shape, basis.algebra), |r| {
        let n = basis.n();
        let ctx = OpContext { shape: Some(basis.shape.clone()), ..ctx.clone() };
        for &op in ops {
            let indices: Vec<usize> = match op {
                Intertwined::Reflection => (1..n).collect(),
                Intertwined::CyclicQ => vec![1],
                _ => (1..=n).collect(),
            };
            for (k, v) in inputs.iter().enumerate() {
                let rho_v = crate::build::project_rho(v, basis)?;
                let bad = indices.iter().try_fold(None, |bad, &i| -> Result<Option<String>> {
                    if bad.is_some() {
                        return Ok(bad);
                    }
                    let lhs = crate::build::project_rho(&bold_apply(v, bold_op(op, i, basis.algebra), &ctx)?, basis)?;
                    let rhs = scalar_side(&rho_v, op, i, basis.algebra, &ctx)?;
                    Ok((lhs != rhs).then(|| format!("index {i}: difference {}", lhs.sub(&rhs))))
                })?;
                r.check(format!("{op:?} on input #{k}"), bad.is_none(), || bad.clone().unwrap_or_default());
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::build_h_basis;
    use crate::coeffs::SpecMap;
    use crate::verify::sample::{random_polys, random_vpolys};
    use crate::verify::singular_family;

    #[test]
    fn hecke_relations_hold() {
        let polys = random_polys(11, 3, 2, 3);
        assert!(check_hecke_relations(&polys, 3).passed());
        let p = XPoly::parse("x1^2*x2 + 3*x3", 1).unwrap();
        let r = check_hecke_relations(&[p], 4);
        assert!(r.passed() && r.checks.len() == 6);
    }

    #[test]
    fn spectral_small() {
        for kind in [PolyKind::Jack, PolyKind::Macdonald] {
            let r = check_spectral(kind, &Composition::new(vec![0, 2, 1]), &Budget::default()).unwrap();
            assert!(r.passed(), "{:?}", r.failed());
        }
    }

    #[test]
    fn jucys_murphy_small() {
        for alg in [Algebra::Group, Algebra::Hecke] {
            assert!(check_jucys_murphy(&Partition::parse("3,2").unwrap(), alg).passed());
        }
    }

    #[test]
    fn spectral_contents_family() {
        let f = Family::new(4, 2, 3).unwrap();
        assert!(check_spectral_contents(&f).passed());
        let wrong = Family { m: f.m + 1, ..f.clone() };
        assert!(!check_spectral_contents(&wrong).passed());
    }

    #[test]
    fn intertwining_reflections_and_dunkl() {
        let sh = Partition::parse("2,1").unwrap();
        let inputs = random_vpolys(5, &sh, 2, 3);
        for alg in [Algebra::Group, Algebra::Hecke] {
            let b = build_h_basis(&sh, alg).unwrap();
            let ctx = OpContext { t: alg.t(), ..OpContext::generic(3) };
            let r = check_intertwining(&b, &inputs, &[Intertwined::Reflection], &ctx).unwrap();
            assert!(r.passed(), "{alg:?}: {:?}", r.failed());
        }
        let spec = SpecMap::parse("kappa=-2/3").unwrap();
        let fam = singular_family(PolyKind::Jack, &Partition::parse("2,2").unwrap(), 2, 2, &spec, &Budget::default()).unwrap();
        let ctx = OpContext::generic(4).specialized(&spec).unwrap();
        let inputs = random_vpolys(9, &fam.shape, 1, 2);
        let ops = [Intertwined::Reflection, Intertwined::Dunkl, Intertwined::Cherednik];
        let r = check_intertwining(&fam, &inputs, &ops, &ctx).unwrap();
        assert!(r.passed(), "{:?}", r.failed());
    }
}
