use proptest::prelude::*;
use singpoly::coeffs::{ParamRat, SpecMap};
use singpoly::combin::{Composition, Partition, Tableau};
use singpoly::mpoly::{mono_x, XPoly};
use singpoly::ops::{apply_s, apply_t, cherednik_group, dunkl_group, mul_x, xi, OpContext};
use singpoly::rep::{act_si, act_ti, ModuleVector};

fn coeff() -> impl Strategy<Value = ParamRat> {
    (-3i64..=3, 0i32..=2, 0i32..=1).prop_map(|(c, tp, qp)| {
        let c = if c == 0 { 1 } else { c };
        ParamRat::from_int(c).mul(&ParamRat::t().pow(tp)).mul(&ParamRat::q().pow(qp))
    })
}

fn xpoly(n: usize, max_deg: u8) -> impl Strategy<Value = XPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), coeff()), 1..5)
        .prop_map(|terms| XPoly::from_terms(terms.into_iter().map(|(e, c)| (mono_x(&e), c))))
}

fn scalar() -> impl Strategy<Value = ParamRat> {
    prop::collection::vec(coeff(), 1..4).prop_map(|cs| cs.iter().fold(ParamRat::zero(), |a, c| a.add(c)))
}

fn partition() -> impl Strategy<Value = Partition> {
    (1u32..=6).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn tableau() -> impl Strategy<Value = Tableau> {
    partition().prop_flat_map(|sh| {
        let tabs = Tableau::enumerate_rsyt(&sh);
        (0..tabs.len()).prop_map(move |i| tabs[i].clone())
    })
}

fn vec_eq(a: &ModuleVector, b: &ModuleVector) -> bool {
    a.add(&b.scale(&ParamRat::from_int(-1))).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn text_roundtrip(p in xpoly(3, 3)) {
        prop_assert_eq!(XPoly::parse(&p.to_string(), 1).unwrap(), p);
    }

    #[test]
    fn json_roundtrip(p in xpoly(4, 2)) {
        let layout = p.layout();
        let terms = p.to_json_terms(layout).unwrap();
        prop_assert_eq!(XPoly::from_json_terms(&terms, layout, 1).unwrap(), p);
    }

    #[test]
    fn divided_difference_identity(p in xpoly(3, 3), i in 1usize..3) {
        let lhs = p.sub(&apply_s(&p, i));
        let rhs = p.divided_difference(i, i + 1).mul(&XPoly::x(i).sub(&XPoly::x(i + 1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hecke_quadratic_and_inverse(p in xpoly(3, 3), i in 1usize..3) {
        let ctx = OpContext::generic(3);
        let t = ParamRat::t();
        let pt = apply_t(&p, i, false, &ctx);
        let ptt = apply_t(&pt, i, false, &ctx);
        prop_assert_eq!(ptt, pt.scale(&t.sub(&ParamRat::one())).add(&p.scale(&t)));
        prop_assert_eq!(apply_t(&pt, i, true, &ctx), p);
    }

    #[test]
    fn hecke_braid_and_far(p in xpoly(4, 2)) {
        let ctx = OpContext::generic(4);
        let tt = |p: &XPoly, i: usize| apply_t(p, i, false, &ctx);
        prop_assert_eq!(tt(&tt(&tt(&p, 1), 2), 1), tt(&tt(&tt(&p, 2), 1), 2));
        prop_assert_eq!(tt(&tt(&p, 1), 3), tt(&tt(&p, 3), 1));
    }

    #[test]
    fn dunkl_operators_commute(p in xpoly(3, 2)) {
        let ctx = OpContext::generic(3);
        let d = |p: &XPoly, i: usize| dunkl_group(p, i, &ctx);
        prop_assert_eq!(d(&d(&p, 1), 2), d(&d(&p, 2), 1));
        prop_assert_eq!(d(&d(&p, 2), 3), d(&d(&p, 3), 2));
    }

    #[test]
    fn cherednik_operators_commute(p in xpoly(3, 2)) {
        let ctx = OpContext::generic(3);
        let u = |p: &XPoly, i: usize| cherednik_group(p, i, &ctx);
        prop_assert_eq!(u(&u(&p, 1), 3), u(&u(&p, 3), 1));
    }

    #[test]
    fn xi_operators_commute(p in xpoly(3, 2)) {
        let ctx = OpContext::generic(3);
        let x = |p: &XPoly, i: usize| xi(p, i, &ctx);
        prop_assert_eq!(x(&x(&p, 1), 2), x(&x(&p, 2), 1));
    }

    #[test]
    fn dunkl_is_a_derivation_on_x_only_for_kappa_zero(p in xpoly(3, 2), i in 1usize..=3) {
        let ctx = OpContext::generic(3).with_kappa(ParamRat::zero());
        let lhs = dunkl_group(&mul_x(&p, i), i, &ctx);
        prop_assert_eq!(lhs, p.add(&mul_x(&dunkl_group(&p, i, &ctx), i)));
    }

    #[test]
    fn specialization_is_multiplicative(p in xpoly(2, 2), q in xpoly(2, 2)) {
        let spec = SpecMap::parse("q*t=-1").unwrap();
        let lhs = p.mul(&q).specialize(&spec).unwrap();
        let rhs = p.specialize(&spec).unwrap().mul(&q.specialize(&spec).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_laws(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn partition_invariants(sh in partition()) {
        prop_assert_eq!(sh.conjugate().conjugate(), sh.clone());
        prop_assert_eq!(sh.conjugate().size(), sh.size());
        prop_assert_eq!(Tableau::enumerate_rsyt(&sh).len() as u64, sh.hook_count());
        let fact = |k: u32| (1..=k as u64).product::<u64>();
        let multinomial = fact(sh.size()) / sh.parts().iter().map(|&p| fact(p)).product::<u64>();
        prop_assert_eq!(Tableau::enumerate_rst(&sh).len() as u64, multinomial);
    }

    #[test]
    fn composition_rank_is_a_permutation(parts in prop::collection::vec(0u32..4, 1..6)) {
        let a = Composition::new(parts);
        let mut ranks: Vec<usize> = (1..=a.len()).map(|i| a.rank(i)).collect();
        ranks.sort();
        prop_assert_eq!(ranks, (1..=a.len()).collect::<Vec<_>>());
        let sorted = a.sorted();
        prop_assert!(sorted.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(sorted.size(), a.size());
    }

    #[test]
    fn tableau_contents_determine_tableau(s in tableau()) {
        let c = s.contents();
        prop_assert_eq!(c.iter().map(|&x| x as i64).sum::<i64>(), s.shape().content_sum());
        prop_assert_eq!(Tableau::from_contents(s.shape(), &c).unwrap(), s.clone());
        for i in 1..s.n() {
            if let Some(r) = s.swapped(i) {
                prop_assert_eq!(r.swapped(i).unwrap(), s.clone());
            }
        }
    }

    #[test]
    fn module_hecke_relations(s in tableau()) {
        let t = ParamRat::t();
        let v = ModuleVector::basis(&s);
        for i in 1..s.n() {
            let vt = act_ti(&v, i, false, &t);
            let vtt = act_ti(&vt, i, false, &t);
            let quad = vt.scale(&t.sub(&ParamRat::one())).add(&v.scale(&t));
            prop_assert!(vec_eq(&vtt, &quad));
            prop_assert!(vec_eq(&act_ti(&vt, i, true, &t), &v));
            prop_assert!(vec_eq(&act_si(&act_si(&v, i), i), &v));
        }
        for i in 1..s.n().saturating_sub(1) {
            let a = act_ti(&act_ti(&act_ti(&v, i, false, &t), i + 1, false, &t), i, false, &t);
            let b = act_ti(&act_ti(&act_ti(&v, i + 1, false, &t), i, false, &t), i + 1, false, &t);
            prop_assert!(vec_eq(&a, &b));
        }
    }
}
