//! Seeded pseudo-random inputs for operator identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::ParamRat;
use crate::combin::{Partition, Tableau};
use crate::mpoly::{mono_x, XPoly};
use crate::ops::VPoly;

fn random_coeff(rng: &mut ChaCha8Rng) -> ParamRat {
    let c = ParamRat::from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
    if rng.gen_bool(0.25) {
        c.mul(&ParamRat::t())
    } else {
        c
    }
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> XPoly {
    let mut p = XPoly::zero();
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=4) {
            let mut e = vec![0u8; n];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[rng.gen_range(0..n)] += 1;
            }
            p.add_term(mono_x(&e), random_coeff(rng));
        }
    }
    p
}

/// `count` nonzero polynomials in x₁..x_n of degree ≤ `max_deg`, with small integer or t-multiple coefficients.
pub fn random_polys(seed: u64, n: usize, max_deg: u32, count: usize) -> Vec<XPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_poly(&mut rng, n, max_deg)).collect()
}

/// `count` nonzero elements of P ⊗ V_τ, each with a random polynomial on a random subset of Tab_τ.
pub fn random_vpolys(seed: u64, shape: &Partition, max_deg: u32, count: usize) -> Vec<VPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = shape.size() as usize;
    let tabs = Tableau::enumerate_rsyt(shape);
    (0..count)
        .map(|_| {
            let mut v = VPoly::zero();
            while v.is_zero() {
                for s in &tabs {
                    if rng.gen_bool(0.6) {
                        v.add_comp(s.clone(), &random_poly(&mut rng, n, max_deg));
                    }
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(random_polys(7, 3, 3, 5), random_polys(7, 3, 3, 5));
        assert_ne!(random_polys(7, 3, 3, 5), random_polys(8, 3, 3, 5));
        for p in random_polys(1, 4, 3, 20) {
            assert!(!p.is_zero() && p.x_degree().unwrap() <= 3 && p.x_extent() <= 4);
        }
        let sh = Partition::parse("2,1").unwrap();
        assert_eq!(random_vpolys(3, &sh, 2, 4).len(), 4);
    }
}
