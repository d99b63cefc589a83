use clap::{Args, Subcommand};
use serde::Serialize;
use singpoly::build::cache::{CacheKey, PolyFamilyCache};

use crate::{print_json, CliConfig, Failure, Format};

#[derive(Debug, Args)]
pub struct CacheArgs {
    #[command(subcommand)]
    action: Action,
}

#[derive(Debug, Subcommand)]
enum Action {
    /// List cached polynomials.
    List,
    /// Check every content hash; exits 1 if any entry is corrupted.
    Verify,
    /// Remove every cached polynomial.
    Clear,
}

#[derive(Serialize)]
struct Listed<'a> {
    #[serde(flatten)]
    key: &'a CacheKey,
    content_hash: &'a str,
}

pub fn run(a: &CacheArgs, config: &CliConfig) -> Result<(), Failure> {
    let cache: PolyFamilyCache = config
        .cache()?
        .ok_or_else(|| Failure::Usage("no cache directory: pass --cache-dir or set SINGPOLY_CACHE_DIR".into()))?;
    let json = config.format == Format::Json;
    match a.action {
        Action::List => {
            let entries = cache.list()?;
            let listed: Vec<Listed> = entries.iter().map(|e| Listed { key: &e.key, content_hash: &e.content_hash }).collect();
            if json {
                print_json(&listed);
            } else {
                for l in &listed {
                    let shape = l.key.shape.as_deref().map(|s| format!(" {s}")).unwrap_or_default();
                    println!("{} N={} {}{shape} [{}] {}", l.key.family, l.key.n, l.key.index, l.key.parameters, &l.content_hash[..12]);
                }
            }
        }
        Action::Verify => {
            let bad = cache.corrupted()?;
            if json {
                print_json(&bad);
            } else if bad.is_empty() {
                println!("{} entries verified", cache.list()?.len());
            } else {
                for k in &bad {
                    println!("corrupted: {} N={} {}", k.family, k.n, k.index);
                }
            }
            if !bad.is_empty() {
                return Err(Failure::Checks);
            }
        }
        Action::Clear => {
            let n = cache.clear()?;
            if json {
                print_json(&serde_json::json!({ "removed": n }));
            } else {
                println!("removed {n} entries");
            }
        }
    }
    Ok(())
}
