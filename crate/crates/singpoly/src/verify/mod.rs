//! Theorem-instance verifiers producing structured reports.

mod checks;
mod factor;
mod operators;
pub mod sample;
pub mod special;
pub mod suites;
mod vanishing;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::build::{build_nonsym, support_basis, PolyKind};
use crate::coeffs::{ParamRat, SpecMap};
use crate::combin::Composition;
use crate::error::{Error, Result};
use crate::mpoly::XPoly;
use crate::ops::OpContext;

pub use checks::{
    check_highest_weight, check_highest_weight_vv, check_isotype, check_necessary_condition, check_singular, check_xi_product,
    check_xi_product_of,
    normalize_isotype, singular_family,
};
pub use factor::{check_factorization_corollary, check_flagship, check_flagship_against, g_product, pochhammer, varpi};
pub use operators::{
    check_hecke_relations, check_hecke_relations_for, check_intertwining, check_jucys_murphy, check_jucys_murphy_against,
    check_spectral, check_spectral_contents, check_spectral_of, Intertwined,
};
pub use suites::{run_suite, SuiteOptions, SUITES};
pub use special::{DoublebarParams, Provenance, SpecialPoint};
pub use vanishing::{check_selfpoint_identities, check_vanishing, check_vanishing_suite, fs1s1_closed_form};

/// Version of the JSON report layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Gated,
}

/// One named check inside a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub case: String,
    pub inputs: BTreeMap<String, String>,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    pub ms: u64,
}

impl VerifyReport {
    pub fn new(suite: &str, case: &str) -> Self {
        VerifyReport {
            schema: REPORT_SCHEMA,
            suite: suite.into(),
            case: case.into(),
            inputs: BTreeMap::new(),
            status: Status::Pass,
            checks: Vec::new(),
            witnesses: Vec::new(),
            ms: 0,
        }
    }

    /// Runs `body`, timing it; a cost-gate error becomes a gated check instead of an error.
    pub fn run<F: FnOnce(&mut VerifyReport) -> Result<()>>(suite: &str, case: &str, body: F) -> Result<VerifyReport> {
        let start = Instant::now();
        let mut r = VerifyReport::new(suite, case);
        match body(&mut r) {
            Ok(()) => {}
            Err(e @ Error::CostGateExceeded { .. }) => r.gated("cost gate", &e.to_string()),
            Err(e) => return Err(e),
        }
        r.ms = start.elapsed().as_millis() as u64;
        Ok(r)
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.into(), value.to_string());
    }

    /// Records a check; the witness is only rendered on failure.
    pub fn check<W: FnOnce() -> String>(&mut self, name: impl Into<String>, ok: bool, witness: W) -> bool {
        let witness = if ok { None } else { Some(witness()) };
        if let Some(w) = &witness {
            self.witnesses.push(w.clone());
            self.status = Status::Fail;
        }
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, witness });
        ok
    }

    pub fn gated(&mut self, name: &str, reason: &str) {
        if self.status == Status::Pass {
            self.status = Status::Gated;
        }
        self.checks.push(Check { name: name.into(), status: Status::Gated, witness: Some(reason.into()) });
    }

    /// Appends the checks of another report under a prefix.
    pub fn absorb(&mut self, prefix: &str, o: VerifyReport) {
        for c in o.checks {
            let name = format!("{prefix}: {}", c.name);
            match c.status {
                Status::Pass => {
                    self.check(name, true, String::new);
                }
                Status::Fail => {
                    self.check(name, false, || c.witness.unwrap_or_default());
                }
                Status::Gated => self.gated(&name, c.witness.as_deref().unwrap_or("")),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

/// Maximum support-basis dimension a verifier may build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_dim: 5000 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_dim: usize::MAX }
    }

    pub fn admit(&self, needed: usize) -> Result<()> {
        if needed > self.max_dim {
            return Err(Error::CostGateExceeded { needed, budget: self.max_dim });
        }
        Ok(())
    }

    /// Builds J_α or M_α, specialized by `spec`, within the budget.
    ///
    /// The generic polynomial is built and specialized; if a coefficient has a pole there the
    /// eigen-system is solved directly at the specialized parameters.
    pub fn build(&self, kind: PolyKind, alpha: &Composition, spec: Option<&SpecMap>) -> Result<XPoly> {
        self.admit(support_basis(alpha).len())?;
        let ctx = OpContext::generic(alpha.len());
        let Some(spec) = spec else {
            return build_nonsym(kind, alpha, &ctx);
        };
        match build_nonsym(kind, alpha, &ctx)?.specialize(spec) {
            Err(Error::PoleAtSpecialization { .. }) => build_nonsym(kind, alpha, &ctx.specialized(spec)?),
            r => r,
        }
    }
}

/// The unit u = ζ^a·Π param^e with p = u·q, if there is one.
pub fn unit_monomial_ratio(p: &XPoly, q: &XPoly) -> Option<ParamRat> {
    if q.is_zero() {
        return None;
    }
    p.scalar_ratio(q).filter(|r| r.is_unit_monomial())
}

/// Records p =(∗) q.
pub(crate) fn check_unit(r: &mut VerifyReport, name: &str, p: &XPoly, q: &XPoly) -> bool {
    r.check(name, unit_monomial_ratio(p, q).is_some(), || {
        let ratio = p.scalar_ratio(q).map_or("not proportional".to_string(), |c| format!("ratio {c}"));
        format!("{name}: {p} vs {q}: {ratio}")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ratio_examples() {
        let q = XPoly::parse("x1 - t*x2", 1).unwrap();
        let p = q.scale(&ParamRat::t().pow(3).mul(&ParamRat::q()));
        assert_eq!(unit_monomial_ratio(&p, &q), Some(ParamRat::t().pow(3).mul(&ParamRat::q())));
        let p = q.scale(&ParamRat::t().add(&ParamRat::one()));
        assert_eq!(unit_monomial_ratio(&p, &q), None);
        assert_eq!(unit_monomial_ratio(&q.neg(), &q), Some(ParamRat::from_int(-1)));
        assert_eq!(unit_monomial_ratio(&q.scale(&ParamRat::from_int(2)), &q), None);
        assert_eq!(unit_monomial_ratio(&q, &XPoly::zero()), None);
    }

    #[test]
    fn report_status() {
        let r = VerifyReport::run("s", "c", |r| {
            r.check("a", true, String::new);
            r.gated("b", "too big");
            Ok(())
        })
        .unwrap();
        assert_eq!(r.status, Status::Gated);
        let r = VerifyReport::run("s", "c", |r| {
            r.check("a", false, || "w".into());
            Err(Error::CostGateExceeded { needed: 2, budget: 1 })
        })
        .unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses, vec!["w".to_string()]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerifyReport>(&json).unwrap(), r);
    }
}
