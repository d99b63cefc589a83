//! Dominance orders on compositions and their total refinement.

use std::cmp::Ordering;

/// Decreasing rearrangement α⁺.
pub fn sorted_desc(a: &[u8]) -> Vec<u8> {
    let mut v = a.to_vec();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Dominance of equal-size sequences: every partial sum of `a` is ≥ that of `b`.
pub fn dominates(a: &[u8], b: &[u8]) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    for i in 0..a.len().max(b.len()) {
        sa += *a.get(i).unwrap_or(&0) as u32;
        sb += *b.get(i).unwrap_or(&0) as u32;
        if sa < sb {
            return false;
        }
    }
    sa == sb
}

/// The partial order ⊳ on compositions: α⁺ strictly dominates β⁺, or α⁺ = β⁺ and α strictly dominates β.
pub fn triangle_gt(a: &[u8], b: &[u8]) -> bool {
    if a == b {
        return false;
    }
    let (ap, bp) = (sorted_desc(a), sorted_desc(b));
    if ap != bp {
        dominates(&ap, &bp)
    } else {
        dominates(a, b)
    }
}

/// Total order extending ⊳ on compositions of equal size: lexicographic on α⁺, then on α.
pub fn total_cmp(a: &[u8], b: &[u8]) -> Ordering {
    let (ap, bp) = (sorted_desc(a), sorted_desc(b));
    ap.cmp(&bp).then_with(|| a.cmp(b))
}

/// The monomial order used for leading terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    #[default]
    DominanceRefined,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u8], b: &[u8]) -> Ordering {
        match self {
            MonomialOrder::DominanceRefined => total_cmp(a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compositions(n: u8, parts: usize) -> Vec<Vec<u8>> {
        if parts == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn total_order_extends_triangle() {
        for parts in 1..=4 {
            for n in 0..=6 {
                let cs = compositions(n, parts);
                for a in &cs {
                    for b in &cs {
                        if triangle_gt(a, b) {
                            assert_eq!(total_cmp(a, b), Ordering::Greater, "{a:?} {b:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn examples() {
        assert!(triangle_gt(&[2, 0], &[1, 1]));
        assert!(triangle_gt(&[1, 0], &[0, 1]));
        assert!(!triangle_gt(&[0, 1], &[1, 0]));
        assert!(triangle_gt(&[0, 2], &[1, 1]));
    }
}
