use clap::{Args, ValueEnum};
use serde::Serialize;
use singpoly::build::PolyKind;
use singpoly::combin::{Composition, Partition};
use singpoly::verify::suites::singular_instance;
use singpoly::verify::{
    check_factorization_corollary, check_flagship, run_suite, DoublebarParams, Status, SuiteOptions, VerifyReport,
    REPORT_SCHEMA,
};

use crate::{print_json, CliConfig, Failure, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PaperExamples,
    Operators,
    Singular,
    Isotype,
    HighestWeight,
    SpecialPoints,
    Factorization,
    NegativeControls,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::PaperExamples => "paper-examples",
            Suite::Operators => "operators",
            Suite::Singular => "singular",
            Suite::Isotype => "isotype",
            Suite::HighestWeight => "highest-weight",
            Suite::SpecialPoints => "special-points",
            Suite::Factorization => "factorization",
            Suite::NegativeControls => "negative-controls",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Jack,
    Macdonald,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    suite: Suite,
    /// singular: composition to test instead of the declared instances.
    #[arg(long)]
    mu: Option<String>,
    /// singular: specialization for --mu.
    #[arg(long)]
    spec: Option<String>,
    /// singular: polynomial family for --mu.
    #[arg(long, value_enum, default_value_t = KindArg::Macdonald)]
    kind: KindArg,
    /// singular: isotype τ for the necessary condition on --mu.
    #[arg(long)]
    tau: Option<String>,
    /// factorization: `tau33` for the flagship case.
    #[arg(long)]
    case: Option<String>,
    /// factorization: corollary parameters m,n,K,nu,d.
    #[arg(long)]
    params: Option<String>,
    /// Seed for the pseudo-random operator inputs.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest N in the exhaustive shape sweeps.
    #[arg(long, default_value_t = 5)]
    max_n: u32,
}

#[derive(Serialize)]
struct Output<'a> {
    schema: u32,
    config: &'a CliConfig,
    status: Status,
    reports: &'a [VerifyReport],
}

fn overall(reports: &[VerifyReport]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|r| r.status == Status::Gated) {
        Status::Gated
    } else {
        Status::Pass
    }
}

fn doublebar(text: &str) -> Result<DoublebarParams, Failure> {
    let v: Vec<u32> = text
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--params expects m,n,K,nu,d, got '{text}'")))?;
    let [m, n, k, nu_k, d] = v[..] else {
        return Err(Failure::Usage(format!("--params expects five values m,n,K,nu,d, got '{text}'")));
    };
    if n < 1 || d < 1 || k < 1 {
        return Err(Failure::Usage("--params needs n, K, d ≥ 1".into()));
    }
    let n_vars = (d * n - 1 + (n - 1) * (k - 1) + nu_k) as usize;
    Ok(DoublebarParams { n_vars, m, n, d, k, nu_k })
}

fn reports(a: &VerifyArgs, opts: &SuiteOptions) -> Result<Vec<VerifyReport>, Failure> {
    match a.suite {
        Suite::Singular if a.mu.is_some() => {
            let mu = Composition::parse(a.mu.as_deref().unwrap_or_default())?;
            let spec = a.spec.as_deref().ok_or_else(|| Failure::Usage("--mu needs --spec".into()))?;
            let kind = match a.kind {
                KindArg::Jack => PolyKind::Jack,
                KindArg::Macdonald => PolyKind::Macdonald,
            };
            let tau = a.tau.as_deref().map(Partition::parse).transpose()?;
            Ok(vec![singular_instance(kind, &mu, spec, tau.as_ref(), None, &opts.budget)?])
        }
        Suite::Singular if a.spec.is_some() || a.tau.is_some() => Err(Failure::Usage("--spec and --tau need --mu".into())),
        Suite::Factorization if a.case.is_some() || a.params.is_some() => {
            let mut out = Vec::new();
            match a.case.as_deref() {
                Some("tau33") => out.push(check_flagship(&opts.budget)?),
                Some(c) => return Err(Failure::Usage(format!("unknown factorization case '{c}'; expected tau33"))),
                None => {}
            }
            if let Some(p) = &a.params {
                out.push(check_factorization_corollary(doublebar(p)?, &opts.budget)?);
            }
            Ok(out)
        }
        s => Ok(run_suite(s.name(), opts)?),
    }
}

pub fn run(a: &VerifyArgs, config: &CliConfig) -> Result<(), Failure> {
    let opts = SuiteOptions { budget: config.budget(), seed: a.seed, max_n: a.max_n };
    let reports = reports(a, &opts)?;
    let status = overall(&reports);
    match config.format {
        Format::Json => print_json(&Output { schema: REPORT_SCHEMA, config, status, reports: &reports }),
        Format::Text => {
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "PASS ",
                    Status::Fail => "FAIL ",
                    Status::Gated => "GATED",
                };
                println!("{tag} {} / {} ({} checks, {} ms)", r.suite, r.case, r.checks.len(), r.ms);
                for c in &r.checks {
                    if c.status != Status::Pass || config.verbosity > 0 {
                        let w = c.witness.as_deref().map(|w| format!(": {w}")).unwrap_or_default();
                        println!("    {:?} {}{w}", c.status, c.name);
                    }
                }
            }
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            println!(
                "{} reports: {} passed, {} failed, {} gated",
                reports.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Gated)
            );
        }
    }
    if status == Status::Fail {
        return Err(Failure::Checks);
    }
    Ok(())
}
