//! Partitions, compositions, rank function and quasistaircases.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::mpoly::order;

/// A vector of nonnegative parts, standardized to N entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<u32>);

/// A weakly decreasing composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Decreasing rearrangement α⁺.
    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Exponent vector for monomials.
    pub fn exps(&self) -> Vec<u8> {
        self.0.iter().map(|&e| u8::try_from(e).expect("exponent exceeds 255")).collect()
    }

    /// Rank r(α, i) for 1-based i.
    pub fn rank(&self, i: usize) -> usize {
        rank(&self.0, i)
    }

    /// α s_i: exchanges parts i and i+1 (1-based).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// The partial order ⊳.
    pub fn triangle_gt(&self, o: &Composition) -> bool {
        order::triangle_gt(&self.exps(), &o.exps())
    }

    /// All compositions of `n` into `parts` parts, in lexicographically decreasing order.
    pub fn all(n: u32, parts: usize) -> Vec<Composition> {
        fn rec(n: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if parts == 1 {
                prefix.push(n);
                out.push(Composition(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=n).rev() {
                prefix.push(first);
                rec(n - first, parts - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if parts == 0 {
            if n == 0 {
                out.push(Composition(vec![]));
            }
            return out;
        }
        rec(n, parts, &mut Vec::new(), &mut out);
        out
    }

    /// Distinct rearrangements of the parts.
    pub fn permutations(&self) -> Vec<Composition> {
        let mut v = self.0.clone();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition(v.clone()));
        }
        out
    }

    pub fn parse(s: &str) -> Result<Composition> {
        parse_parts(s).map(Composition)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// r(α, i) = #{j : α_j > α_i} + #{j ≤ i : α_j = α_i}, with 1-based i.
pub fn rank(a: &[u32], i: usize) -> usize {
    let ai = a[i - 1];
    a.iter().filter(|&&x| x > ai).count() + a[..i].iter().filter(|&&x| x == ai).count()
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for piece in t.split(',') {
        let piece = piece.trim();
        if let Some((a, k)) = piece.split_once('^') {
            let a: u32 = a.trim().parse().map_err(|_| Error::Parse(format!("bad part '{piece}'")))?;
            let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity '{piece}'")))?;
            out.extend(std::iter::repeat_n(a, k));
        } else {
            out.push(piece.parse().map_err(|_| Error::Parse(format!("bad part '{piece}'")))?);
        }
    }
    Ok(out)
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Partition standardized to exactly `n` entries (zeros appended).
    pub fn padded(&self, n: usize) -> Result<Composition> {
        if self.length() > n {
            return Err(Error::InvalidShape(format!("{self} has more than {n} nonzero parts")));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(Composition(v))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Nonzero parts.
    pub fn rows(&self) -> &[u32] {
        &self.0[..self.length()]
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// ℓ(τ) = max{i : τ_i > 0}.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Σ(τ): the sum of the contents j − i over all cells.
    pub fn content_sum(&self) -> i64 {
        let mut s = 0i64;
        for (i, &p) in self.rows().iter().enumerate() {
            for j in 0..p as i64 {
                s += j - i as i64;
            }
        }
        s
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn hook_count(&self) -> u64 {
        let conj = self.conjugate();
        let mut den: u64 = 1;
        for (i, &p) in self.rows().iter().enumerate() {
            for j in 0..p as usize {
                den *= ((p as usize - j - 1) + (conj.0[j] as usize - i - 1) + 1) as u64;
            }
        }
        (1..=self.size() as u64).product::<u64>() / den
    }

    /// All partitions of n, in lexicographically decreasing order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Partition> {
        Partition::new(parse_parts(s)?)
    }

    /// Text form with multiplicities, e.g. `[17^2,12^3,7^3,2^3,0^7]`.
    pub fn to_power_string(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if j - i == 1 {
                out.push(self.0[i].to_string());
            } else {
                out.push(format!("{}^{}", self.0[i], j - i));
            }
            i = j;
        }
        format!("[{}]", out.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Parameters of the general quasistaircase qs(m, n, p, K, s, ν).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QsParams {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub k: u32,
    pub s: u32,
    pub nu: u32,
}

/// [((K−1)m+p)^ν, ((K−2)m+p)^n, …, p^n, 0^s].
pub fn quasistaircase(q: QsParams) -> Result<Partition> {
    if q.k == 0 {
        return Err(Error::InvalidParams("K must be at least 1".into()));
    }
    if q.nu == 0 {
        return Err(Error::InvalidParams("ν must be at least 1".into()));
    }
    if q.nu > q.n.max(1) {
        return Err(Error::InvalidParams(format!("ν = {} exceeds n = {}", q.nu, q.n)));
    }
    if q.p == 0 && q.k == 1 {
        return Err(Error::InvalidParams("p = 0 with K = 1 gives the zero partition".into()));
    }
    let mut parts = vec![(q.k - 1) * q.m + q.p; q.nu as usize];
    for step in (0..q.k - 1).rev() {
        parts.extend(std::iter::repeat_n(step * q.m + q.p, q.n as usize));
    }
    parts.extend(std::iter::repeat_n(0, q.s as usize));
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParams("parts are not weakly decreasing".into()));
    }
    Ok(Partition(parts))
}

/// The (N, m, n) description of a singular family and its derived data.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub n_vars: usize,
    pub m: u32,
    pub n: u32,
    pub d: u32,
    pub m0: u32,
    pub n0: u32,
    pub l: usize,
    pub tau: Partition,
    pub tau_l: u32,
    /// κ₀ = −m/n.
    pub kappa0: Ratio<i64>,
}

impl Family {
    /// Derives d, m₀, n₀, l, τ and κ₀ from (N, m, n).
    pub fn new(n_vars: usize, m: u32, n: u32) -> Result<Family> {
        if n < 2 || n as usize > n_vars {
            return Err(Error::InvalidParams(format!("need 2 ≤ n ≤ N, got n = {n}, N = {n_vars}")));
        }
        if m.is_multiple_of(n) {
            return Err(Error::InvalidParams(format!("m/n = {m}/{n} is an integer")));
        }
        let d = m.gcd(&n);
        let (m0, n0) = (m / d, n / d);
        let span = n_vars - n as usize + 1;
        let l = span.div_ceil(n0 as usize - 1) + 1;
        let mut parts = vec![n - 1];
        parts.extend(std::iter::repeat_n(n0 - 1, l - 2));
        let used: u32 = parts.iter().sum();
        let tau_l = n_vars as u32 - used;
        if tau_l == 0 || tau_l > n0 - 1 {
            return Err(Error::InvalidParams(format!("last row {tau_l} out of range for n₀ = {n0}")));
        }
        parts.push(tau_l);
        let tau = Partition::new(parts)?;
        Ok(Family {
            n_vars,
            m,
            n,
            d,
            m0,
            n0,
            l,
            tau,
            tau_l,
            kappa0: Ratio::new(-(m as i64), n as i64),
        })
    }

    /// μ = qs(m₀, n₀−1, m, l−1, n−1, τ_l), standardized to N parts.
    pub fn mu(&self) -> Result<Composition> {
        quasistaircase(self.mu_params())?.padded(self.n_vars)
    }

    pub fn mu_params(&self) -> QsParams {
        QsParams {
            m: self.m0,
            n: self.n0 - 1,
            p: self.m,
            k: self.l as u32 - 1,
            s: self.n - 1,
            nu: self.tau_l,
        }
    }

    /// λ = ((l−1)^{τ_l}, …, 1^{τ_2}, 0^{τ_1}), the minimal column-strict type.
    pub fn lambda(&self) -> Composition {
        minimal_lambda(&self.tau)
    }

    /// μ + λ = qs(m₀+1, n₀−1, m+1, l−1, n−1, τ_l).
    pub fn mu_plus_lambda_params(&self) -> QsParams {
        let mut q = self.mu_params();
        q.m += 1;
        q.p += 1;
        q
    }
}

/// λ with row i of τ contributing τ_i parts equal to i−1, sorted decreasingly.
pub fn minimal_lambda(tau: &Partition) -> Composition {
    let mut v = Vec::new();
    for (i, &p) in tau.rows().iter().enumerate().rev() {
        v.extend(std::iter::repeat_n(i as u32, p as usize));
    }
    Composition(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct_rank(a: &[u32], i: usize) -> usize {
        let mut c = 0;
        for (j, &x) in a.iter().enumerate() {
            if x > a[i - 1] || (x == a[i - 1] && j < i) {
                c += 1;
            }
        }
        c
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[0, 0, 0], 2), 2);
        assert_eq!(direct_rank(&[1, 4, 2, 0, 3], 1), 4);
        assert_eq!(rank(&[1, 4, 2, 0, 3], 1), 4);
        assert_eq!(direct_rank(&[2, 0, 2, 0, 2, 0], 3), 2);
        assert_eq!(rank(&[2, 0, 2, 0, 2, 0], 3), 2);
    }

    #[test]
    fn quasistaircases() {
        let q = quasistaircase(QsParams { m: 5, n: 3, p: 2, k: 4, s: 7, nu: 2 }).unwrap();
        assert_eq!(q.to_power_string(), "[17^2,12^3,7^3,2^3,0^7]");
        let f = Family::new(10, 4, 6).unwrap();
        assert_eq!(f.tau, Partition::parse("5,2,2,1").unwrap());
        assert_eq!(f.kappa0, Ratio::new(-2, 3));
        assert_eq!(f.mu().unwrap(), Composition::parse("8,6,6,4,4,0,0,0,0,0").unwrap());
        let q = quasistaircase(QsParams { m: 3, n: 2, p: 4, k: 1, s: 3, nu: 2 }).unwrap();
        assert_eq!(q.parts(), &[4, 4, 0, 0, 0]);
        assert!(quasistaircase(QsParams { m: 3, n: 2, p: 4, k: 1, s: 3, nu: 0 }).is_err());
    }

    #[test]
    fn families() {
        let f = Family::new(3, 1, 2).unwrap();
        assert_eq!(f.tau.parts(), &[1, 1, 1]);
        assert_eq!(f.mu().unwrap().parts(), &[2, 1, 0]);
        let f = Family::new(4, 1, 2).unwrap();
        assert_eq!(f.mu().unwrap().parts(), &[3, 2, 1, 0]);
        assert_eq!(f.lambda().parts(), &[3, 2, 1, 0]);
        assert_eq!(quasistaircase(f.mu_plus_lambda_params()).unwrap().parts(), &[6, 4, 2, 0]);
        let f = Family::new(4, 2, 3).unwrap();
        assert_eq!(f.tau.parts(), &[2, 2]);
        assert_eq!(f.mu().unwrap().parts(), &[2, 2, 0, 0]);
        assert!(Family::new(4, 4, 2).is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(5).len(), 7);
        let t = Partition::parse("3,2").unwrap();
        assert_eq!(t.hook_count(), 5);
        assert_eq!(t.conjugate().parts(), &[2, 2, 1]);
        assert_eq!(minimal_lambda(&Partition::parse("5,2,2,1").unwrap()).parts(), &[3, 2, 2, 1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(Composition::parse("1,1,0").unwrap().permutations().len(), 3);
    }
}
