//! Text and JSON formats for [`XPoly`].

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Mono, XPoly, NVARS, XMAX, Y0, YMAX, Z0, ZMAX};
use crate::coeffs::text::{parse_expr, ExprRing, VarName};
use crate::coeffs::{parse_scalar, ParamRat};
use crate::error::{Error, Result};

pub(crate) fn slot_name(slot: usize) -> String {
    if slot < Y0 {
        format!("x{}", slot + 1)
    } else if slot < Z0 {
        format!("y{}", slot - Y0 + 1)
    } else {
        format!("z{}", slot - Z0 + 1)
    }
}

/// Monomial as `x1^2 x2 y1`; the empty monomial is `1`.
pub fn mono_text(m: &Mono) -> String {
    let parts: Vec<String> = (0..NVARS)
        .filter(|&i| m[i] > 0)
        .map(|i| if m[i] == 1 { slot_name(i) } else { format!("{}^{}", slot_name(i), m[i]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_one = m.iter().all(|&e| e == 0);
            if is_one {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono_text(m))?;
            } else {
                write!(f, "({c}) * {}", mono_text(m))?;
            }
        }
        Ok(())
    }
}

impl ExprRing for XPoly {
    fn from_scalar(c: ParamRat) -> Self {
        XPoly::constant(c)
    }
    fn var(&self, v: VarName) -> Result<Self> {
        let bad = |n: &str, i: usize, max: usize| Error::Parse(format!("{n}{i} exceeds the limit of {max}"));
        Ok(match v {
            VarName::X(i) if i <= XMAX => XPoly::x(i),
            VarName::Y(i) if i <= YMAX => XPoly::y(i),
            VarName::Z(i) if i <= ZMAX => XPoly::z(i),
            VarName::X(i) => return Err(bad("x", i, XMAX)),
            VarName::Y(i) => return Err(bad("y", i, YMAX)),
            VarName::Z(i) => return Err(bad("z", i, ZMAX)),
        })
    }
    fn add(&self, o: &Self) -> Self {
        XPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        XPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        XPoly::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_constant() {
            let c = o.coeff(&[0; NVARS]);
            return Ok(self.scale(&c.inv()?));
        }
        self.exact_divide(o)
    }
    fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            if self.is_constant() {
                let c = self.coeff(&[0; NVARS]);
                return Ok(XPoly::constant(c.inv()?.pow(-e)));
            }
            return Err(Error::Parse("negative power of a non-constant polynomial".into()));
        }
        Ok(XPoly::pow(self, e as u32))
    }
}

impl XPoly {
    /// Parses the text format; `z` alone denotes ζ of the given conductor.
    pub fn parse(s: &str, conductor: u32) -> Result<XPoly> {
        parse_expr(s, conductor, &XPoly::zero())
    }

    /// Serializes terms against a variable layout.
    pub fn to_json_terms(&self, layout: Layout) -> Result<Vec<JsonTerm>> {
        let mut out = Vec::with_capacity(self.len());
        for (m, c) in self.sorted_terms() {
            if !layout.covers(m) {
                return Err(Error::LayoutMismatch(format!("{} outside {:?}", mono_text(m), layout)));
            }
            out.push(JsonTerm { exps: layout.exps(m), coeff: c.to_string() });
        }
        Ok(out)
    }

    pub fn from_json_terms(terms: &[JsonTerm], layout: Layout, conductor: u32) -> Result<XPoly> {
        let mut p = XPoly::zero();
        for t in terms {
            let m = layout.mono(&t.exps)?;
            p.add_term(m, parse_scalar(&t.coeff, conductor)?);
        }
        Ok(p)
    }

    /// Smallest layout containing every variable in use.
    pub fn layout(&self) -> Layout {
        let mut l = Layout { nx: 0, ny: 0, nz: 0 };
        for m in self.terms.keys() {
            for i in 0..NVARS {
                if m[i] == 0 {
                    continue;
                }
                if i < Y0 {
                    l.nx = l.nx.max(i + 1);
                } else if i < Z0 {
                    l.ny = l.ny.max(i - Y0 + 1);
                } else {
                    l.nz = l.nz.max(i - Z0 + 1);
                }
            }
        }
        l
    }
}

/// Declared variable list x1..x_nx, y1..y_ny, z1..z_nz.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
}

impl Layout {
    pub fn x_only(n: usize) -> Layout {
        Layout { nx: n, ny: 0, nz: 0 }
    }

    fn slots(&self) -> impl Iterator<Item = usize> {
        (0..self.nx).chain(Y0..Y0 + self.ny).chain(Z0..Z0 + self.nz)
    }

    fn covers(&self, m: &Mono) -> bool {
        (0..NVARS).all(|i| m[i] == 0 || self.slots().any(|s| s == i))
    }

    fn exps(&self, m: &Mono) -> Vec<u32> {
        self.slots().map(|s| m[s] as u32).collect()
    }

    fn mono(&self, e: &[u32]) -> Result<Mono> {
        if self.nx > XMAX || self.ny > YMAX || self.nz > ZMAX {
            return Err(Error::LayoutMismatch(format!("{self:?} exceeds variable limits")));
        }
        let slots: Vec<usize> = self.slots().collect();
        if e.len() != slots.len() {
            return Err(Error::LayoutMismatch(format!("{} exponents for {} variables", e.len(), slots.len())));
        }
        let mut m = [0u8; NVARS];
        for (s, &v) in slots.iter().zip(e) {
            m[*s] = u8::try_from(v).map_err(|_| Error::Parse(format!("exponent {v} too large")))?;
        }
        Ok(m)
    }
}

/// One term of the JSON format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["(-1/2) * x1^2 x2 + (t + 1) * x3 + (q)", "x1 y1 - z2*t^-1", "0", "(1 + z) * x1"] {
            let p = XPoly::parse(s, 3).unwrap();
            let back = XPoly::parse(&p.to_string(), 3).unwrap();
            assert_eq!(p, back, "{s} -> {p}");
        }
    }

    #[test]
    fn json_round_trip() {
        let p = XPoly::parse("(t/(1+q)) * x1^2 x3 + y1 z2", 1).unwrap();
        let l = p.layout();
        assert_eq!(l, Layout { nx: 3, ny: 1, nz: 2 });
        let j = p.to_json_terms(l).unwrap();
        let s = serde_json::to_string(&j).unwrap();
        let back: Vec<JsonTerm> = serde_json::from_str(&s).unwrap();
        assert_eq!(XPoly::from_json_terms(&back, l, 1).unwrap(), p);
        assert!(p.to_json_terms(Layout::x_only(3)).is_err());
    }

    #[test]
    fn display_form() {
        let p = XPoly::parse("2*x1^2 x2 - x3", 1).unwrap();
        assert_eq!(p.to_string(), "(2) * x1^2 x2 + (-1) * x3");
    }
}
