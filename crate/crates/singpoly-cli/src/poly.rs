use clap::{Args, ValueEnum};
use serde::Serialize;
use singpoly::build::cache::{CacheKey, Cached};
use singpoly::build::{build_a, build_f, build_f_tau, build_h_basis, build_nonsym_vv, build_symmetric, PolyKind};
use singpoly::coeffs::SpecMap;
use singpoly::combin::{Composition, Partition, Tableau, TableauKind};
use singpoly::mpoly::{JsonTerm, Layout, XPoly};
use singpoly::ops::{OpContext, VPoly};
use singpoly::rep::Algebra;
use singpoly::Error;

use crate::{print_json, CliConfig, Failure, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Jack,
    Macdonald,
    JackVv,
    MacdonaldVv,
    SymmetricJack,
    SymmetricMacdonald,
    HBasis,
    F,
    A,
    #[value(name = "F-tau")]
    FTau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Group,
    Hecke,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    family: Family,
    /// Number of variables; defaults to the length of --alpha or the size of --shape/--tableau.
    #[arg(long = "N", alias = "n-vars")]
    n: Option<usize>,
    /// Composition (or partition for the symmetric families), e.g. 2,1,0.
    #[arg(long)]
    alpha: Option<String>,
    /// Shape, e.g. 3,2.
    #[arg(long)]
    shape: Option<String>,
    /// Reverse standard Young tableau, rows top first, e.g. 2/3,1.
    #[arg(long)]
    tableau: Option<String>,
    /// Specialization relations, e.g. "q*t=-1" or "q=z*u^-1,t=u,z^3=1".
    #[arg(long)]
    spec: Option<String>,
    /// Algebra for h-basis and F-tau.
    #[arg(long, value_enum, default_value_t = AlgebraArg::Hecke)]
    algebra: AlgebraArg,
}

#[derive(Serialize)]
struct Component {
    #[serde(skip_serializing_if = "Option::is_none")]
    tableau: Option<String>,
    text: String,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct PolyOutput {
    schema: u32,
    family: String,
    n: usize,
    index: String,
    parameters: String,
    layout: Layout,
    components: Vec<Component>,
}

fn usage(m: impl Into<String>) -> Failure {
    Failure::Usage(m.into())
}

fn need<'a>(v: &'a Option<String>, flag: &str, family: Family) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| usage(format!("{family:?} needs --{flag}")))
}

fn composition(text: &str, n: Option<usize>) -> Result<Composition, Failure> {
    let mut c = Composition::parse(text)?;
    match n {
        Some(n) if n < c.len() => return Err(usage(format!("--alpha has {} parts but --N is {n}", c.len()))),
        Some(n) => c.0.resize(n, 0),
        None => {}
    }
    Ok(c)
}

fn vpoly_of(basis: &singpoly::rep::IsotypeBasis) -> VPoly {
    let mut v = VPoly::zero();
    for (s, h) in &basis.polys {
        v.add_comp(s.clone(), h);
    }
    v
}

fn algebra(a: AlgebraArg) -> Algebra {
    match a {
        AlgebraArg::Group => Algebra::Group,
        AlgebraArg::Hecke => Algebra::Hecke,
    }
}

fn build(a: &PolyArgs, config: &CliConfig, spec: Option<&SpecMap>) -> Result<(CacheKey, Cached), Failure> {
    let f = a.family;
    let family = format!("{f:?}");
    let params = spec.map_or("generic".to_string(), |s| s.description().to_string());
    let key = |n: usize, index: String, shape: Option<String>| CacheKey {
        family: family.clone(),
        n,
        index,
        shape,
        parameters: params.clone(),
    };
    let kind = |f: Family| match f {
        Family::Jack | Family::JackVv | Family::SymmetricJack => PolyKind::Jack,
        _ => PolyKind::Macdonald,
    };
    let specialize = |p: XPoly| spec.map_or(Ok(p.clone()), |s| p.specialize(s));
    let specialize_v = |v: VPoly| spec.map_or(Ok(v.clone()), |s| v.specialize(s));
    let with_cache = |k: CacheKey, vector: bool, b: &dyn Fn() -> singpoly::Result<Cached>| -> Result<(CacheKey, Cached), Failure> {
        let v = match config.cache()? {
            Some(c) => c.get_or_build(&k, vector, b)?,
            None => b()?,
        };
        Ok((k, v))
    };
    match f {
        Family::Jack | Family::Macdonald => {
            let alpha = composition(need(&a.alpha, "alpha", f)?, a.n)?;
            let k = key(alpha.len(), alpha.to_string(), None);
            with_cache(k, false, &|| config.budget().build(kind(f), &alpha, spec).map(Cached::Poly))
        }
        Family::JackVv | Family::MacdonaldVv => {
            let alpha = composition(need(&a.alpha, "alpha", f)?, a.n)?;
            let s = Tableau::parse(need(&a.tableau, "tableau", f)?, TableauKind::Rsyt)?;
            let k = key(alpha.len(), alpha.to_string(), Some(s.to_string()));
            with_cache(k, true, &|| {
                let ctx = OpContext::generic(alpha.len()).with_shape(s.shape().clone());
                specialize_v(build_nonsym_vv(kind(f), &alpha, &s, &ctx)?).map(Cached::Vector)
            })
        }
        Family::SymmetricJack | Family::SymmetricMacdonald => {
            let lam = Partition::parse(need(&a.alpha, "alpha", f)?)?;
            let n = a.n.unwrap_or(lam.parts().len());
            let k = key(n, lam.to_string(), None);
            with_cache(k, false, &|| {
                let ctx = OpContext::generic(n);
                specialize(build_symmetric(kind(f), &lam, &ctx)?).map(Cached::Poly)
            })
        }
        Family::HBasis | Family::FTau => {
            let sh = Partition::parse(need(&a.shape, "shape", f)?)?;
            let alg = algebra(a.algebra);
            let k = key(sh.size() as usize, format!("{alg:?}"), Some(sh.to_string()));
            with_cache(k, true, &|| {
                let v = match f {
                    Family::HBasis => vpoly_of(&build_h_basis(&sh, alg)?),
                    _ => build_f_tau(&sh, alg)?,
                };
                specialize_v(v).map(Cached::Vector)
            })
        }
        Family::F | Family::A => {
            let s = Tableau::parse(need(&a.tableau, "tableau", f)?, TableauKind::Rsyt)?;
            let k = key(s.n(), s.to_string(), Some(s.shape().to_string()));
            with_cache(k, false, &|| {
                let p = if f == Family::F { build_f(&s) } else { build_a(&s) };
                specialize(p).map(Cached::Poly)
            })
        }
    }
}

pub fn run(a: &PolyArgs, config: &CliConfig) -> Result<(), Failure> {
    let spec = a.spec.as_deref().map(SpecMap::parse).transpose()?;
    let (key, value) = build(a, config, spec.as_ref())?;
    let polys: Vec<(Option<&Tableau>, &XPoly)> = match &value {
        Cached::Poly(p) => vec![(None, p)],
        Cached::Vector(v) => v.comps.iter().map(|(s, p)| (Some(s), p)).collect(),
    };
    if config.format == Format::Text {
        for (s, p) in &polys {
            match s {
                Some(s) => println!("{s}: {p}"),
                None => println!("{p}"),
            }
        }
        return Ok(());
    }
    let mut layout = Layout::x_only(key.n);
    for (_, p) in &polys {
        let l = p.layout();
        layout = Layout { nx: layout.nx.max(l.nx), ny: layout.ny.max(l.ny), nz: layout.nz.max(l.nz) };
    }
    let components = polys
        .iter()
        .map(|(s, p)| {
            Ok(Component { tableau: s.map(|s| s.to_string()), text: p.to_string(), terms: p.to_json_terms(layout)? })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    print_json(&PolyOutput {
        schema: singpoly::verify::REPORT_SCHEMA,
        family: key.family,
        n: key.n,
        index: key.index,
        parameters: key.parameters,
        layout,
        components,
    });
    Ok(())
}
