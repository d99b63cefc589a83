use clap::{Args, ValueEnum};
use serde::Serialize;
use singpoly::combin::{Partition, Tableau};
use singpoly::verify::SpecialPoint;

use crate::{print_json, CliConfig, Failure, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointKind {
    Group,
    Hecke,
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    /// Shape, e.g. 3,2.
    #[arg(long)]
    shape: String,
    /// List reverse standard tableaux (RST) instead of RSYT.
    #[arg(long)]
    rst: bool,
    /// Show α(S) built from --m and --m0.
    #[arg(long)]
    show_alpha: bool,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    m0: u32,
    /// Show the group special point of the shape or the Hecke point x̄(S) of each tableau.
    #[arg(long, value_enum)]
    special_point: Option<PointKind>,
}

#[derive(Serialize)]
struct Row {
    tableau: String,
    contents: Vec<i32>,
    inv: usize,
    inv0: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<String>,
}

#[derive(Serialize)]
struct Output {
    shape: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    group_point: Option<String>,
    tableaux: Vec<Row>,
}

pub fn run(a: &TableauxArgs, config: &CliConfig) -> Result<(), Failure> {
    let shape = Partition::parse(&a.shape)?;
    if shape.size() == 0 {
        return Err(Failure::Usage("--shape must be nonempty".into()));
    }
    let tabs = if a.rst { Tableau::enumerate_rst(&shape) } else { Tableau::enumerate_rsyt(&shape) };
    let group_point = match a.special_point {
        Some(PointKind::Group) => Some(SpecialPoint::group(&shape)?.to_string()),
        _ => None,
    };
    let rows = tabs
        .iter()
        .map(|s| {
            let point = match a.special_point {
                Some(PointKind::Hecke) => Some(SpecialPoint::hecke(s)?.to_string()),
                _ => None,
            };
            Ok(Row {
                tableau: s.to_string(),
                contents: s.contents(),
                inv: s.inv(),
                inv0: s.inv0(),
                alpha: a.show_alpha.then(|| s.alpha(a.m, a.m0).to_string()),
                point,
            })
        })
        .collect::<singpoly::Result<Vec<_>>>()?;
    let out = Output { shape: shape.to_string(), kind: if a.rst { "RST" } else { "RSYT" }, group_point, tableaux: rows };
    if config.format == Format::Json {
        print_json(&out);
        return Ok(());
    }
    println!("{} {} of shape {}", out.tableaux.len(), out.kind, out.shape);
    if let Some(p) = &out.group_point {
        println!("group point: {p}");
    }
    for r in &out.tableaux {
        let contents: Vec<String> = r.contents.iter().map(|c| c.to_string()).collect();
        let mut line = format!("{}  c=[{}]  inv={}  inv0={}", r.tableau, contents.join(","), r.inv, r.inv0);
        if let Some(al) = &r.alpha {
            line.push_str(&format!("  alpha={al}"));
        }
        if let Some(p) = &r.point {
            line.push_str(&format!("  point={p}"));
        }
        println!("{line}");
    }
    Ok(())
}
