//! Vanishing of isotype bases at special points and the self-point evaluations.

use super::{Budget, SpecialPoint, VerifyReport};
use crate::build::{build_a, build_f, build_h_basis};
use crate::coeffs::ParamRat;
use crate::combin::{Partition, Tableau, TableauKind};
use crate::error::Result;
use crate::mpoly::XPoly;
use crate::ops::apply_s;
use crate::rep::{action_case, ActionCase, Algebra, IsotypeBasis};

/// g_S(x̄(Y)) = 0 whenever Y ≠ S and inv₀(Y) ≤ inv₀(S), for a Hecke-type basis.
pub fn check_vanishing(basis: &IsotypeBasis) -> Result<VerifyReport> {
    VerifyReport::run("vanishing", &basis.shape.to_string(), |r| {
        let rst = Tableau::enumerate_rst(&basis.shape);
        let points: Vec<(Tableau, SpecialPoint)> =
            rst.into_iter().map(|y| SpecialPoint::hecke(&y).map(|p| (y, p))).collect::<Result<_>>()?;
        for (s, g) in &basis.polys {
            let own = s.as_rst();
            let mut count = 0;
            let mut bad = None;
            for (y, pt) in points.iter().filter(|(y, _)| *y != own && y.inv0() <= s.inv0()) {
                count += 1;
                let v = pt.eval(g);
                if bad.is_none() && !v.is_zero() {
                    bad = Some(format!("g_{s}(x̄({y})) = {v}"));
                }
            }
            r.check(format!("{s}: vanishes at {count} points"), bad.is_none(), || bad.clone().unwrap_or_default());
        }
        Ok(())
    })
}

/// The h_S vanishing suite: Hecke points (with the printed τ = (3,3) cases) or the group point.
pub fn check_vanishing_suite(tau: &Partition, algebra: Algebra, budget: &Budget) -> Result<VerifyReport> {
    VerifyReport::run("vanishing", &format!("{tau} {algebra:?}"), |r| {
        let tabs = Tableau::enumerate_rsyt(tau).len();
        budget.admit(tabs * Tableau::enumerate_rst(tau).len())?;
        if algebra == Algebra::Group {
            let b = build_h_basis(tau, Algebra::Group)?;
            let pt = SpecialPoint::group(tau)?;
            let s1 = Tableau::s1(tau);
            for (s, h) in &b.polys {
                let v = pt.eval(h);
                if *s == s1 {
                    let a = pt.eval(&build_a(s));
                    r.check("h_S₁(x̄) = a_S₁(x̄)", v == a, || format!("h = {v}, a = {a}"));
                    r.check("h_S₁(x̄) ≠ 0", !v.is_zero(), || "h_S₁(x̄) = 0".into());
                } else {
                    r.check(format!("h_{s}(x̄) = 0"), v.is_zero(), || format!("h_{s}(x̄) = {v}"));
                }
            }
            return Ok(());
        }
        let b = build_h_basis(tau, Algebra::Hecke)?;
        r.absorb("h", check_vanishing(&b)?);
        if tau.rows() == [3, 3] {
            let h0 = b.get(&Tableau::s0(tau));
            for (text, zero) in [("5,2,1/6,4,3", true), ("5,4,2/6,3,1", false)] {
                let y = Tableau::parse(text, TableauKind::Rst)?;
                let v = SpecialPoint::hecke(&y)?.eval(h0);
                r.check(format!("h_S₀(x̄({y})) {}", if zero { "= 0" } else { "≠ 0" }), v.is_zero() == zero, || {
                    format!("inv₀ = {}, value {v}", y.inv0())
                });
            }
        }
        Ok(())
    })
}

/// t^{−E(τ)} Π_k Π_{i<l} (t^{τ_i} z_k − y_i) · Π_{i<j<l} Π_{k ≤ τ_j} (t^{τ_i−k+1} y_j − y_i),
/// E(τ) = ½ Σ (i−1) τ_i (τ_i − 1).
pub fn fs1s1_closed_form(tau: &Partition) -> XPoly {
    let rows = tau.rows();
    let l = rows.len();
    let t = ParamRat::t();
    let e: i64 = rows.iter().enumerate().map(|(i, &r)| i as i64 * r as i64 * (r as i64 - 1)).sum::<i64>() / 2;
    let mut p = XPoly::constant(t.pow(-(e as i32)));
    for k in 1..=rows[l - 1] as usize {
        for i in 1..l {
            p = p.mul(&XPoly::z(k).scale(&t.pow(rows[i - 1] as i32)).sub(&XPoly::y(i)));
        }
    }
    for i in 1..l.saturating_sub(1) {
        for j in i + 1..l {
            for k in 1..=rows[j - 1] as i32 {
                p = p.mul(&XPoly::y(j).scale(&t.pow(rows[i - 1] as i32 - k + 1)).sub(&XPoly::y(i)));
            }
        }
    }
    p
}

/// h_S(x̄(S)) = f_S(x̄(S)), the closed form of f_S₁(x̄(S₁)), the adjacent-pair relation between f_S and
/// f_{S^{(i)}}, and, for a supplied basis, g_S(x̄(S))·f_S₀(x̄(S₀)) = g_S₀(x̄(S₀))·f_S(x̄(S)).
pub fn check_selfpoint_identities(tau: &Partition, basis: Option<&IsotypeBasis>) -> Result<VerifyReport> {
    VerifyReport::run("self-points", &tau.to_string(), |r| {
        let h = build_h_basis(tau, Algebra::Hecke)?;
        let t = ParamRat::t();
        for (s, hs) in &h.polys {
            let pt = SpecialPoint::hecke(s)?;
            let (a, b) = (pt.eval(hs), pt.eval(&build_f(s)));
            r.check(format!("h_{s}(x̄) = f_{s}(x̄)"), a == b, || format!("h = {a}, f = {b}"));
            for i in 1..s.n() {
                let ActionCase::Up(_) = action_case(s, i) else { continue };
                let next = s.swapped(i).expect("adjacent pair");
                let b = (s.col(i) - s.col(i + 1)) as i32;
                let u = s.entry(s.row(i), s.col(i + 1)).expect("cell exists") as usize;
                let lhs = build_f(&next).mul(&XPoly::x(i).scale(&t.pow(b)).sub(&XPoly::x(u)));
                let rhs = apply_s(&build_f(s), i).mul(&XPoly::x(i).scale(&t.pow(b + 1)).sub(&XPoly::x(u)));
                r.check(format!("f_{next} from f_{s}"), lhs == rhs, || format!("difference {}", lhs.sub(&rhs)));
            }
        }
        let s1 = Tableau::s1(tau);
        let direct = SpecialPoint::hecke(&s1)?.eval(&build_f(&s1));
        let closed = fs1s1_closed_form(tau);
        r.check("f_S₁(x̄(S₁)) closed form", direct == closed, || format!("direct {direct}, closed form {closed}"));
        if let Some(g) = basis {
            let s0 = Tableau::s0(tau);
            let p0 = SpecialPoint::hecke(&s0)?;
            let (g0, f0) = (p0.eval(g.get(&s0)), p0.eval(&build_f(&s0)));
            for (s, gs) in &g.polys {
                let pt = SpecialPoint::hecke(s)?;
                let lhs = pt.eval(gs).mul(&f0);
                let rhs = g0.mul(&pt.eval(&build_f(s)));
                r.check(format!("g ratio at {s}"), lhs == rhs, || format!("difference {}", lhs.sub(&rhs)));
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn vanishing_small() {
        for s in ["2,1", "2,2", "3,2", "2,1,1"] {
            for alg in [Algebra::Hecke, Algebra::Group] {
                let r = check_vanishing_suite(&shape(s), alg, &Budget::default()).unwrap();
                assert!(r.passed(), "{s} {alg:?}: {:?}", r.failed());
            }
        }
    }

    #[test]
    fn perturbed_basis_fails_vanishing() {
        let sh = shape("2,1");
        let mut b = build_h_basis(&sh, Algebra::Hecke).unwrap();
        let s1 = Tableau::s1(&sh);
        let bad = b.get(&s1).add(&XPoly::x(1));
        b.polys.insert(Tableau::s0(&sh), bad);
        assert!(!check_vanishing(&b).unwrap().passed());
    }

    #[test]
    fn self_points() {
        for s in ["3", "2,2", "3,1", "2,1,1"] {
            let r = check_selfpoint_identities(&shape(s), None).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failed());
        }
        assert_eq!(fs1s1_closed_form(&shape("4")), XPoly::one());
    }

    #[test]
    fn closed_form_4322_against_direct_substitution() {
        let sh = shape("4,3,2,2");
        let s1 = Tableau::s1(&sh);
        let direct = SpecialPoint::hecke(&s1).unwrap().eval(&build_f(&s1));
        assert_eq!(fs1s1_closed_form(&sh), direct);
    }
}
