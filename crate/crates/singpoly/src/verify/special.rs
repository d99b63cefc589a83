//! Special points: substitutions of the x-variables by t-power multiples of free y and z variables.

use std::fmt;

use crate::coeffs::ParamRat;
use crate::combin::{Partition, Tableau};
use crate::error::{Error, Result};
use crate::mpoly::XPoly;

/// Data for the doublebar point attached to S₁ of a quasistaircase family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoublebarParams {
    pub n_vars: usize,
    pub m: u32,
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub nu_k: u32,
}

impl DoublebarParams {
    /// τ = (dn − 1, (n − 1)^{K−1}, ν_K).
    pub fn tau(&self) -> Result<Partition> {
        let mut parts = vec![self.d * self.n - 1];
        parts.extend(std::iter::repeat_n(self.n - 1, self.k as usize - 1));
        parts.push(self.nu_k);
        Partition::new(parts)
    }

    /// μ = (((d+K−1)m)^{ν_K}, ((d+K−2)m)^{n−1}, …, (dm)^{n−1}, 0^{dn−1}).
    pub fn mu(&self) -> Vec<u32> {
        let mut v = vec![(self.d + self.k - 1) * self.m; self.nu_k as usize];
        for i in (0..self.k - 1).rev() {
            v.extend(std::iter::repeat_n((self.d + i) * self.m, self.n as usize - 1));
        }
        v.extend(std::iter::repeat_n(0, (self.d * self.n - 1) as usize));
        v
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 || self.d == 0 || self.k == 0 {
            return Err(Error::InvalidParams(format!("{self:?}: need n ≥ 2, d ≥ 1, K ≥ 1")));
        }
        if self.nu_k == 0 || self.nu_k > self.n - 1 {
            return Err(Error::InvalidParams(format!("ν_K = {} must lie in 1..=n−1", self.nu_k)));
        }
        let expect = (self.d * self.n - 1 + (self.n - 1) * (self.k - 1) + self.nu_k) as usize;
        if expect != self.n_vars {
            return Err(Error::InvalidParams(format!("N = {} but the parameters give N = {expect}", self.n_vars)));
        }
        Ok(())
    }
}

/// How a special point was made.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Group(Partition),
    Hecke(Tableau),
    Doublebar(DoublebarParams),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialPoint {
    pub assignments: Vec<XPoly>,
    pub provenance: Provenance,
}

impl SpecialPoint {
    /// x̄(Y)_k = t^{1−col}·y_row for rows below the top, z_{τ_l+1−col} in the top row l.
    pub fn hecke(y: &Tableau) -> Result<SpecialPoint> {
        let assignments = hecke_assignments(y, &ParamRat::t())?;
        Ok(SpecialPoint { assignments, provenance: Provenance::Hecke(y.clone()) })
    }

    /// The group special point: row j of S₁ carries y_j, the top row carries z's, read off S₁ at t = 1.
    pub fn group(tau: &Partition) -> Result<SpecialPoint> {
        let assignments = hecke_assignments(&Tableau::s1(tau), &ParamRat::one())?;
        Ok(SpecialPoint { assignments, provenance: Provenance::Group(tau.clone()) })
    }

    /// x̄̄_j = t^{j−ν_{i+1}−1} y_{K−i} for ν_{i+1} < j ≤ ν_i, z_j otherwise, where ν_0 = N,
    /// ν_1 = N − dn + 1 and ν_{i+1} = ν_i − (n − 1).
    pub fn doublebar(p: DoublebarParams) -> Result<SpecialPoint> {
        p.validate()?;
        let n = p.n_vars;
        let k = p.k as usize;
        let mut nu = vec![n as i64, n as i64 - (p.d * p.n) as i64 + 1];
        for _ in 1..k {
            let last = *nu.last().unwrap();
            nu.push(last - (p.n as i64 - 1));
        }
        check_counts(k, p.nu_k as usize)?;
        let mut assignments = Vec::with_capacity(n);
        for j in 1..=n as i64 {
            let block = (0..k).find(|&i| nu[i + 1] < j && j <= nu[i]);
            assignments.push(match block {
                Some(i) => XPoly::y(k - i).scale(&ParamRat::t().pow((j - nu[i + 1] - 1) as i32)),
                None => XPoly::z(j as usize),
            });
        }
        Ok(SpecialPoint { assignments, provenance: Provenance::Doublebar(p) })
    }

    /// p(x̄).
    pub fn eval(&self, p: &XPoly) -> XPoly {
        p.substitute(&self.assignments)
    }

    /// The point with x_i and x_{i+1} exchanged.
    pub fn swapped(&self, i: usize) -> Vec<XPoly> {
        let mut v = self.assignments.clone();
        v.swap(i - 1, i);
        v
    }
}

fn check_counts(ny: usize, nz: usize) -> Result<()> {
    if ny > crate::mpoly::YMAX || nz > crate::mpoly::ZMAX {
        return Err(Error::InvalidShape(format!("{ny} y-variables and {nz} z-variables exceed the layout")));
    }
    Ok(())
}

fn hecke_assignments(y: &Tableau, t: &ParamRat) -> Result<Vec<XPoly>> {
    let shape = y.shape();
    let l = shape.length();
    let tau_l = *shape.rows().last().ok_or_else(|| Error::InvalidShape("empty shape".into()))? as usize;
    check_counts(l - 1, tau_l)?;
    Ok((1..=y.n())
        .map(|k| {
            let (r, c) = (y.row(k), y.col(k));
            if r < l {
                XPoly::y(r).scale(&t.pow(1 - c as i32))
            } else {
                XPoly::z(tau_l + 1 - c)
            }
        })
        .collect())
}

impl fmt::Display for SpecialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.assignments.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", v.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::TableauKind;

    fn point(s: &str) -> Vec<XPoly> {
        s.split(',').map(|e| XPoly::parse(e, 1).unwrap()).collect()
    }

    #[test]
    fn printed_points() {
        let g = SpecialPoint::group(&Partition::parse("3,3,2").unwrap()).unwrap();
        assert_eq!(g.assignments, point("z1,z2,y2,y2,y2,y1,y1,y1"));
        let y = Tableau::parse("4,1/5,3,2", TableauKind::Rst).unwrap();
        let h = SpecialPoint::hecke(&y).unwrap();
        assert_eq!(h.assignments, point("z1,t^-2*y1,t^-1*y1,z2,y1"));
        let p = DoublebarParams { n_vars: 11, m: 2, n: 3, d: 2, k: 3, nu_k: 2 };
        let dd = SpecialPoint::doublebar(p).unwrap();
        assert_eq!(dd.assignments, point("z1,z2,y1,t*y1,y2,t*y2,y3,t*y3,t^2*y3,t^3*y3,t^4*y3"));
        assert_eq!(p.mu(), vec![8, 8, 6, 6, 4, 4, 0, 0, 0, 0, 0]);
        assert_eq!(p.tau().unwrap(), Partition::parse("5,2,2,2").unwrap());
    }

    #[test]
    fn flagship_points() {
        let sh = Partition::parse("3,3").unwrap();
        let s0 = SpecialPoint::hecke(&Tableau::s0(&sh)).unwrap();
        let s1 = SpecialPoint::hecke(&Tableau::s1(&sh)).unwrap();
        assert_eq!(s0.assignments, point("z1,t^-2*y1,z2,t^-1*y1,z3,y1"));
        assert_eq!(s1.assignments, point("z1,z2,z3,t^-2*y1,t^-1*y1,y1"));
    }

    #[test]
    fn degenerate_doublebar() {
        let p = DoublebarParams { n_vars: 3, m: 1, n: 2, d: 1, k: 2, nu_k: 0 };
        assert!(matches!(SpecialPoint::doublebar(p), Err(Error::InvalidParams(_))));
    }
}
