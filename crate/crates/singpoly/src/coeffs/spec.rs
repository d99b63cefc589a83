//! Parameter specializations: substitution homomorphisms with pole detection.

use std::collections::HashMap;
use std::fmt;

use super::cyclo::CycNum;
use super::ppoly::{PMono, PPoly, Sym, NPARAM};
use super::prat::ParamRat;
use super::text::parse_scalar;
use crate::error::{Error, Result};

/// A substitution of parameter symbols by rational functions in target symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecMap {
    assignments: [Option<ParamRat>; NPARAM],
    conductor: u32,
    description: String,
}

impl SpecMap {
    pub fn identity() -> Self {
        SpecMap { assignments: Default::default(), conductor: 1, description: "generic".into() }
    }

    pub fn new(assignments: &[(Sym, ParamRat)], conductor: u32, description: &str) -> Self {
        let mut a: [Option<ParamRat>; NPARAM] = Default::default();
        for (s, v) in assignments {
            a[*s as usize] = Some(v.clone());
        }
        SpecMap { assignments: a, conductor, description: description.to_string() }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn assignment(&self, s: Sym) -> Option<&ParamRat> {
        self.assignments[s as usize].as_ref()
    }

    /// Image of the symbol `s` (itself when unassigned).
    pub fn image(&self, s: Sym) -> ParamRat {
        self.assignment(s).cloned().unwrap_or_else(|| ParamRat::param(s))
    }

    fn monomial_images(&self) -> Option<[(CycNum, [i32; NPARAM]); NPARAM]> {
        let mut out: [(CycNum, [i32; NPARAM]); NPARAM] = Default::default();
        for s in Sym::ALL {
            let img = self.image(s);
            out[s as usize] = img.as_laurent_monomial()?;
        }
        Some(out)
    }

    /// Applies the substitution to a polynomial, giving a rational function.
    pub fn apply_poly(&self, p: &PPoly) -> ParamRat {
        if let Some(imgs) = self.monomial_images() {
            // every term maps to a Laurent monomial
            let mut terms: Vec<(CycNum, [i32; NPARAM])> = Vec::with_capacity(p.len());
            let mut shift = [0i32; NPARAM];
            for (m, c) in p.terms() {
                let mut coeff = c.clone();
                let mut e = [0i32; NPARAM];
                for s in 0..NPARAM {
                    if m[s] == 0 {
                        continue;
                    }
                    let (ic, ie) = &imgs[s];
                    if !ic.is_one() {
                        coeff = coeff.mul(&ic.pow(m[s] as u32));
                    }
                    for j in 0..NPARAM {
                        e[j] += ie[j] * m[s] as i32;
                    }
                }
                for j in 0..NPARAM {
                    shift[j] = shift[j].min(e[j]);
                }
                terms.push((coeff, e));
            }
            let num = PPoly::from_terms(terms.into_iter().map(|(c, e)| {
                let mut m: PMono = [0; NPARAM];
                for j in 0..NPARAM {
                    m[j] = (e[j] - shift[j]) as u16;
                }
                (m, c)
            }));
            let mut dm: PMono = [0; NPARAM];
            for j in 0..NPARAM {
                dm[j] = (-shift[j]) as u16;
            }
            return ParamRat::new(num, PPoly::monomial(dm, CycNum::one())).expect("monomial");
        }
        let mut cache: HashMap<(usize, u16), ParamRat> = HashMap::new();
        let mut acc = ParamRat::zero();
        for (m, c) in p.terms() {
            let mut term = ParamRat::from_cyc(c.clone());
            for s in 0..NPARAM {
                if m[s] == 0 {
                    continue;
                }
                let pw = cache
                    .entry((s, m[s]))
                    .or_insert_with(|| self.image(Sym::ALL[s]).pow(m[s] as i32))
                    .clone();
                term = term.mul(&pw);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Specializes a scalar; a vanishing denominator is a pole.
    pub fn apply(&self, s: &ParamRat) -> Result<ParamRat> {
        if self.assignments.iter().all(|a| a.is_none()) {
            return Ok(s.clone());
        }
        let num = self.apply_poly(s.num());
        let den = if s.den().is_one() { ParamRat::one() } else { self.apply_poly(s.den()) };
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization { denominator: s.den().to_display(), at: None });
        }
        num.div(&den)
    }

    /// Parses relations such as `q*t^2=1`, `q=-t^-2`, `q=z*u^-1,t=u,z^3=1`, `kappa=-1/2`.
    pub fn parse(text: &str) -> Result<Self> {
        let rels: Vec<&str> = text.split(',').map(|r| r.trim()).filter(|r| !r.is_empty()).collect();
        if rels.is_empty() {
            return Err(Error::Parse("empty specialization".into()));
        }
        let mut conductor = 1u32;
        let mut rest = Vec::new();
        for r in &rels {
            let compact: String = r.chars().filter(|c| !c.is_whitespace()).collect();
            if compact == "z!=1" || compact == "z≠1" {
                continue;
            }
            let (l, rhs) = compact
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("relation '{r}' has no '='")))?;
            if let Some(k) = l.strip_prefix("z^") {
                if rhs != "1" {
                    return Err(Error::Parse(format!("root-of-unity relation must read z^k=1: '{r}'")));
                }
                conductor = k.parse().map_err(|_| Error::Parse(format!("bad order in '{r}'")))?;
                CycNum::zeta(conductor)?;
                continue;
            }
            rest.push((l.to_string(), rhs.to_string(), r.to_string()));
        }
        let mut assignments: Vec<(Sym, ParamRat)> = Vec::new();
        for (l, rhs, raw) in rest {
            let rv = parse_scalar(&rhs, conductor)?;
            if let Some(s) = Sym::parse(&l) {
                if assignments.iter().any(|(x, _)| *x == s) {
                    return Err(Error::Parse(format!("symbol {} assigned twice", s.name())));
                }
                assignments.push((s, rv));
                continue;
            }
            let lv = parse_scalar(&l, conductor)?;
            let (s, v) = solve_linear(&lv, &rv).ok_or_else(|| {
                Error::Parse(format!(
                    "cannot solve '{raw}' for a single parameter; write it as an assignment such as q=t^-2"
                ))
            })?;
            if assignments.iter().any(|(x, _)| *x == s) {
                return Err(Error::Parse(format!("symbol {} assigned twice", s.name())));
            }
            assignments.push((s, v));
        }
        let desc = if conductor > 1 {
            format!("{text} (z primitive root of order {conductor})")
        } else {
            text.to_string()
        };
        Ok(SpecMap::new(&assignments, conductor, &desc))
    }
}

/// Solves l = r for the first symbol (q, k, t, u) that occurs with degree one in the numerator of l − r.
fn solve_linear(l: &ParamRat, r: &ParamRat) -> Option<(Sym, ParamRat)> {
    let d = l.sub(r);
    let n = d.num();
    for s in [Sym::Q, Sym::Kappa, Sym::T, Sym::U] {
        let i = s as usize;
        if n.degree_in(i) != 1 {
            continue;
        }
        let cs = n.coeffs_in(i);
        let a = ParamRat::from_poly(cs[1].clone());
        let b = ParamRat::from_poly(cs[0].clone());
        if a.uses(s) || b.uses(s) {
            continue;
        }
        return Some((s, b.neg().div(&a).ok()?));
    }
    None
}

trait DisplayPoly {
    fn to_display(&self) -> String;
}

impl DisplayPoly for PPoly {
    fn to_display(&self) -> String {
        ParamRat::from_poly(self.clone()).to_string()
    }
}

impl fmt::Display for SpecMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in Sym::ALL {
            if let Some(v) = self.assignment(s) {
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{}={}", s.name(), v)?;
            }
        }
        if self.conductor > 1 {
            write!(f, "{}z^{}=1", if first { "" } else { "," }, self.conductor)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, k: u32) -> ParamRat {
        parse_scalar(s, k).unwrap()
    }

    #[test]
    fn specialize_examples() {
        let m = SpecMap::parse("q=t^-2").unwrap();
        assert!(m.apply(&p("q*t^2", 1)).unwrap().is_one());
        let m = SpecMap::parse("qt=1").unwrap();
        assert!(matches!(m.apply(&p("1/(1-q*t)", 1)), Err(Error::PoleAtSpecialization { .. })));
        let m = SpecMap::parse("q=z*u^-1,t=u,z^3=1").unwrap();
        assert_eq!(m.conductor(), 3);
        assert_eq!(m.apply(&p("q^3", 1)).unwrap(), p("u^-3", 1));
    }

    #[test]
    fn relations_are_solved() {
        let m = SpecMap::parse("q*t^2=1").unwrap();
        assert_eq!(m.assignment(Sym::Q).unwrap(), &p("t^-2", 1));
        let m = SpecMap::parse("qt=-1").unwrap();
        assert_eq!(m.assignment(Sym::Q).unwrap(), &p("-t^-1", 1));
        let m = SpecMap::parse("kappa=-1/2").unwrap();
        assert_eq!(m.assignment(Sym::Kappa).unwrap(), &p("-1/2", 1));
        assert!(SpecMap::parse("q^2=t^2").is_err());
        assert!(SpecMap::parse("q=z").is_err());
    }

    #[test]
    fn general_path_matches_monomial_path() {
        let m = SpecMap::parse("q=1+t").unwrap();
        let v = m.apply(&p("q^2 - 1", 1)).unwrap();
        assert_eq!(v, p("t^2 + 2*t", 1));
    }
}
