//! Singularity, isotype, highest-weight and necessary-condition checks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Budget, VerifyReport};
use crate::build::{build_nonsym, PolyKind};
use crate::coeffs::{ParamRat, SpecMap};
use crate::combin::{Composition, Partition, Tableau};
use crate::error::{Error, Result};
use crate::mpoly::XPoly;
use crate::ops::{apply_s, apply_t, bold_apply, dunkl_group, dunkl_qt, xi, BoldOp, OpContext, VPoly};
use crate::rep::{action_case, ti_on_basis, ActionCase, Algebra, IsotypeBasis};

fn dunkl(p: &XPoly, i: usize, algebra: Algebra, ctx: &OpContext) -> Result<XPoly> {
    match algebra {
        Algebra::Group => Ok(dunkl_group(p, i, ctx)),
        _ => dunkl_qt(p, i, ctx),
    }
}

/// Specializes `p` and checks that every Dunkl operator annihilates it.
pub fn check_singular(p: &XPoly, n: usize, algebra: Algebra, spec: &SpecMap) -> Result<VerifyReport> {
    VerifyReport::run("singular", &format!("N={n} at {}", spec.description()), |r| {
        r.input("spec", spec.description());
        r.input("algebra", format!("{algebra:?}"));
        let ctx = OpContext::generic(n).specialized(spec)?;
        let ps = p.specialize(spec)?;
        r.check("nonzero", !ps.is_zero(), || "the specialized polynomial is 0".into());
        for i in 1..=n {
            let d = dunkl(&ps, i, algebra, &ctx)?;
            r.check(format!("D_{i} p = 0"), d.is_zero(), || format!("D_{i} p = {d}"));
        }
        Ok(())
    })
}

fn ctx_for(algebra: Algebra, n: usize) -> OpContext {
    OpContext { t: algebra.t(), ..OpContext::generic(n.max(1)) }
}

fn act(p: &XPoly, i: usize, algebra: Algebra, ctx: &OpContext) -> XPoly {
    match algebra {
        Algebra::Group => apply_s(p, i),
        _ => apply_t(p, i, false, ctx),
    }
}

/// Checks g_S·T_i = Σ c·g_{S'} for S·τ(T_i) = Σ c·S', for every S and i.
pub fn check_isotype(basis: &IsotypeBasis) -> VerifyReport {
    let mut r = VerifyReport::new("isotype", &format!("{} {:?}", basis.shape, basis.algebra));
    let start = std::time::Instant::now();
    let n = basis.n();
    let t = basis.algebra.t();
    let ctx = ctx_for(basis.algebra, n);
    let expected: BTreeSet<Tableau> = Tableau::enumerate_rsyt(&basis.shape).into_iter().collect();
    let have: BTreeSet<Tableau> = basis.polys.keys().cloned().collect();
    r.check("indexed by Tab_τ", expected == have, || format!("basis has {} of {} tableaux", have.len(), expected.len()));
    for (s, g) in &basis.polys {
        for i in 1..n {
            let lhs = act(g, i, basis.algebra, &ctx);
            let mut rhs = Some(XPoly::zero());
            for (s2, c) in ti_on_basis(s, i, &t) {
                rhs = rhs.zip(basis.polys.get(&s2)).map(|(acc, g2)| acc.add(&g2.scale(&c)));
            }
            let ok = rhs.as_ref() == Some(&lhs);
            r.check(format!("{s} · T_{i}"), ok, || match &rhs {
                Some(rhs) => format!("g_{s}·T_{i} − Σ c g = {}", lhs.sub(rhs)),
                None => format!("g_{s}·T_{i} involves a tableau missing from the basis"),
            });
        }
    }
    r.ms = start.elapsed().as_millis() as u64;
    r
}

/// Rescales `polys` along adjacent pairs from S₀ so that g_{S^{(i)}} = g_S·T_i − c·g_S wherever the two sides
/// are proportional. Relations that fail to be proportional are left for [`check_isotype`] to report.
pub fn normalize_isotype(shape: &Partition, algebra: Algebra, mut polys: BTreeMap<Tableau, XPoly>) -> IsotypeBasis {
    let n = shape.size() as usize;
    let ctx = ctx_for(algebra, n);
    let t = algebra.t();
    let s0 = Tableau::s0(shape);
    let mut seen = BTreeSet::from([s0.clone()]);
    let mut queue = VecDeque::from([s0]);
    while let Some(s) = queue.pop_front() {
        let Some(g) = polys.get(&s).cloned() else { continue };
        for i in 1..n {
            if !matches!(action_case(&s, i), ActionCase::Up(_)) {
                continue;
            }
            let next = s.swapped(i).expect("adjacent pair");
            if !seen.insert(next.clone()) {
                continue;
            }
            let own = ti_on_basis(&s, i, &t).into_iter().find(|(x, _)| *x == s).map(|(_, c)| c).unwrap_or_default();
            let moved = act(&g, i, algebra, &ctx).sub(&g.scale(&own));
            if let Some(old) = polys.get_mut(&next) {
                if let Some(c) = moved.scalar_ratio(old) {
                    *old = old.scale(&c);
                }
            }
            queue.push_back(next);
        }
    }
    IsotypeBasis { shape: shape.clone(), algebra, polys }
}

/// {J_{α(S)}} or {M_{α(S)}} at `spec`, with α(S) built from (m, m₀), normalized to transform like Tab_τ.
pub fn singular_family(
    kind: PolyKind,
    shape: &Partition,
    m: u32,
    m0: u32,
    spec: &SpecMap,
    budget: &Budget,
) -> Result<IsotypeBasis> {
    let mut polys = BTreeMap::new();
    for s in Tableau::enumerate_rsyt(shape) {
        let p = budget.build(kind, &s.alpha(m, m0), Some(spec))?;
        polys.insert(s, p);
    }
    let algebra = match kind {
        PolyKind::Jack => Algebra::Group,
        PolyKind::Macdonald => Algebra::Hecke,
    };
    Ok(normalize_isotype(shape, algebra, polys))
}

/// Σ_i p·D_i = 0 with group or (q, t) Dunkl operators.
pub fn check_highest_weight(p: &XPoly, algebra: Algebra, ctx: &OpContext) -> Result<VerifyReport> {
    VerifyReport::run("highest-weight", &format!("N={} {algebra:?}", ctx.n), |r| {
        r.input("algebra", format!("{algebra:?}"));
        let mut sum = XPoly::zero();
        for i in 1..=ctx.n {
            sum.add_assign(&dunkl(p, i, algebra, ctx)?);
        }
        r.check("Σ D_i p = 0", sum.is_zero(), || format!("Σ D_i p = {sum}"));
        Ok(())
    })
}

/// Σ_i v·𝐃_i = 0 for the operators on P ⊗ V_τ.
pub fn check_highest_weight_vv(v: &VPoly, algebra: Algebra, ctx: &OpContext) -> Result<VerifyReport> {
    VerifyReport::run("highest-weight", &format!("N={} {algebra:?} vector-valued", ctx.n), |r| {
        let mut sum = VPoly::zero();
        for i in 1..=ctx.n {
            let op = match algebra {
                Algebra::Group => BoldOp::D(i),
                _ => BoldOp::Dqt(i),
            };
            sum = sum.add(&bold_apply(v, op, ctx)?);
        }
        r.check("Σ 𝐃_i v = 0", sum.is_zero(), || format!("Σ 𝐃_i v = {sum}"));
        Ok(())
    })
}

/// q^{|α|} t^{N(N−1)/2 − Σ(τ)} = 1 (Macdonald) or |α| + κ(N(N−1)/2 − Σ(τ)) = 0 (Jack) at `spec`;
/// with `mn = Some((m, n))` also the reduced form q^{mA} t^{nA} = 1, A = (N(N−1)/2 − Σ(τ))/n.
pub fn check_necessary_condition(
    kind: PolyKind,
    alpha: &Composition,
    tau: &Partition,
    spec: &SpecMap,
    mn: Option<(u32, u32)>,
) -> Result<VerifyReport> {
    VerifyReport::run("necessary-condition", &format!("{alpha} {tau}"), |r| {
        let n = alpha.len() as i64;
        if tau.size() as i64 != n {
            return Err(Error::ShapeMismatch(format!("{tau} does not partition {n}")));
        }
        let e = n * (n - 1) / 2 - tau.content_sum();
        let size = alpha.size() as i64;
        r.input("spec", spec.description());
        r.input("exponent", e);
        let (value, target) = match kind {
            PolyKind::Macdonald => (ParamRat::q().pow(size as i32).mul(&ParamRat::t().pow(e as i32)), ParamRat::one()),
            PolyKind::Jack => (ParamRat::from_int(size).add(&ParamRat::kappa().mul(&ParamRat::from_int(e))), ParamRat::zero()),
        };
        let v = spec.apply(&value)?;
        r.check("full form", v == target, || format!("specialized value {v}"));
        if let (PolyKind::Macdonald, Some((m, nn))) = (kind, mn) {
            let nn = nn as i64;
            if e % nn != 0 {
                r.check("reduced form", false, || format!("{e} is not divisible by n = {nn}"));
            } else {
                let a = (e / nn) as i32;
                let red = spec.apply(&ParamRat::q().pow(m as i32 * a).mul(&ParamRat::t().pow(nn as i32 * a)))?;
                r.check("reduced form", red.is_one(), || format!("q^(mA) t^(nA) = {red}"));
            }
        }
        Ok(())
    })
}

/// M_α·ξ_1⋯ξ_N = q^{|α|} t^{N(N−1)/2} M_α.
pub fn check_xi_product(alpha: &Composition, budget: &Budget) -> Result<VerifyReport> {
    budget.admit(crate::build::support_basis(alpha).len())?;
    let m = build_nonsym(PolyKind::Macdonald, alpha, &OpContext::generic(alpha.len()))?;
    Ok(check_xi_product_of(&m, alpha))
}

/// p·ξ_1⋯ξ_N = q^{|α|} t^{N(N−1)/2} p for a claimed M_α.
pub fn check_xi_product_of(p: &XPoly, alpha: &Composition) -> VerifyReport {
    let start = std::time::Instant::now();
    let mut r = VerifyReport::new("xi-product", &alpha.to_string());
    let n = alpha.len();
    let ctx = OpContext::generic(n);
    let mut v = p.clone();
    for i in 1..=n {
        v = xi(&v, i, &ctx);
    }
    let ev = ParamRat::q().pow(alpha.size() as i32).mul(&ParamRat::t().pow((n * (n - 1) / 2) as i32));
    let diff = v.sub(&p.scale(&ev));
    r.check("Π ξ_i eigenvalue", diff.is_zero(), || format!("residual {diff}"));
    r.ms = start.elapsed().as_millis() as u64;
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::build_h_basis;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn singular_two_zero() {
        let m = build_nonsym(PolyKind::Macdonald, &comp(&[2, 0]), &OpContext::generic(2)).unwrap();
        let yes = check_singular(&m, 2, Algebra::Hecke, &SpecMap::parse("q*t=-1").unwrap()).unwrap();
        assert!(yes.passed(), "{yes:?}");
        let no = check_singular(&m, 2, Algebra::Hecke, &SpecMap::parse("q*t=1").unwrap()).unwrap();
        assert!(!no.passed() && !no.witnesses.is_empty());
    }

    #[test]
    fn isotype_h_basis_and_perturbation() {
        let sh = Partition::parse("2,1").unwrap();
        for alg in [Algebra::Group, Algebra::Hecke, Algebra::HeckeInv] {
            let b = build_h_basis(&sh, alg).unwrap();
            assert!(check_isotype(&b).passed(), "{alg:?}");
        }
        let mut b = build_h_basis(&sh, Algebra::Hecke).unwrap();
        let (s0, s1) = (Tableau::s0(&sh), Tableau::s1(&sh));
        let bad = b.get(&s1).add(&XPoly::x(1).mul(b.get(&s0)));
        b.polys.insert(s1, bad);
        let r = check_isotype(&b);
        assert!(!r.passed() && !r.witnesses.is_empty());
    }

    #[test]
    fn normalization_recovers_scaled_basis() {
        let sh = Partition::parse("2,2").unwrap();
        let b = build_h_basis(&sh, Algebra::Hecke).unwrap();
        let scaled: BTreeMap<_, _> = b
            .polys
            .iter()
            .enumerate()
            .map(|(k, (s, p))| (s.clone(), p.scale(&ParamRat::t().pow(k as i32 + 1))))
            .collect();
        let n = normalize_isotype(&sh, Algebra::Hecke, scaled);
        assert!(check_isotype(&n).passed());
    }

    #[test]
    fn highest_weight_controls() {
        let ctx = OpContext::generic(3);
        let e1 = XPoly::parse("x1 + x2 + x3", 1).unwrap();
        assert!(!check_highest_weight(&e1, Algebra::Group, &ctx).unwrap().passed());
        assert!(check_highest_weight(&XPoly::one(), Algebra::Group, &ctx).unwrap().passed());
        assert!(check_highest_weight(&XPoly::one(), Algebra::Hecke, &ctx).unwrap().passed());
    }

    #[test]
    fn necessary_conditions() {
        let spec = SpecMap::parse("q*t^2=1").unwrap();
        let col = Partition::parse("1,1,1").unwrap();
        let r = check_necessary_condition(PolyKind::Macdonald, &comp(&[2, 1, 0]), &col, &spec, Some((1, 2))).unwrap();
        assert!(r.passed(), "{r:?}");
        let hook = Partition::parse("2,1").unwrap();
        let r = check_necessary_condition(PolyKind::Macdonald, &comp(&[2, 1, 0]), &hook, &spec, None).unwrap();
        assert!(!r.passed());
        let r = check_necessary_condition(PolyKind::Macdonald, &comp(&[0, 0, 0]), &Partition::parse("3").unwrap(), &spec, None)
            .unwrap();
        assert!(r.passed());
        let cube = SpecMap::parse("q=z*u^-1,t=u,z^3=1").unwrap();
        let r = check_necessary_condition(
            PolyKind::Macdonald,
            &comp(&[6, 6, 3, 3, 0, 0]),
            &Partition::parse("2,2,2").unwrap(),
            &cube,
            Some((3, 3)),
        )
        .unwrap();
        assert!(r.passed(), "{r:?}");
        let k = SpecMap::parse("kappa=-1/2").unwrap();
        assert!(check_necessary_condition(PolyKind::Jack, &comp(&[2, 1, 0]), &col, &k, None).unwrap().passed());
    }

    #[test]
    fn xi_product() {
        assert!(check_xi_product(&comp(&[1, 0, 2]), &Budget::default()).unwrap().passed());
    }
}
