use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use subatomic_core::checker::verify::{verify, TagReport, VerifyConfig};
use subatomic_core::checker::{matrix_report, render, Format};
use subatomic_core::exact::parse_rat;
use subatomic_core::monoids::atoms_up_to;
use subatomic_core::{classify_all, classify_domain, domains, Domain, DomainId, MonoidElem, MonoidId, Rat, SearchBounds};

#[derive(Parser, Debug)]
#[command(name = "subatomic", version, about = "Classify factorization properties of constructed integral domains")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate every property on one domain.
    Classify { domain: String },
    /// List the atoms of a monoid within the bounds.
    Atoms { monoid: String },
    /// Run a named verification procedure, or `all`.
    Verify { tag: String },
    /// Classify every domain, check the implication graph and list the separations.
    Matrix,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// TOML file with defaults; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// json, markdown or csv.
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Truncation order of the series domain (a positive rational).
    #[arg(long, global = true)]
    truncation: Option<String>,
    #[arg(long = "bounds-max-degree", alias = "max-degree", global = true)]
    max_degree: Option<String>,
    #[arg(long = "bounds-max-denominator", alias = "max-denominator", global = true)]
    max_denominator: Option<u32>,
    #[arg(long = "bounds-max-coeff-height", alias = "max-coeff-height", global = true)]
    max_coeff_height: Option<u32>,
    #[arg(long = "bounds-max-factors", alias = "max-factors", global = true)]
    max_factors: Option<u32>,
    #[arg(long = "bounds-max-multiset", alias = "max-multiset", global = true)]
    max_multiset: Option<u32>,
    #[arg(long = "bounds-index-bound", alias = "index-bound", global = true)]
    index_bound: Option<u32>,
    #[arg(long = "bounds-entry-bound", alias = "entry-bound", global = true)]
    entry_bound: Option<u32>,
    #[arg(long = "bounds-limit-bound", alias = "limit-bound", global = true)]
    limit_bound: Option<u32>,
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    format: Option<String>,
    seed: Option<u64>,
    truncation: Option<String>,
    #[serde(default)]
    bounds: FileBounds,
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct FileBounds {
    max_degree: Option<String>,
    max_denominator: Option<u32>,
    max_coeff_height: Option<u32>,
    max_factors: Option<u32>,
    max_multiset: Option<u32>,
    index_bound: Option<u32>,
    entry_bound: Option<u32>,
    limit_bound: Option<u32>,
}

struct Config {
    bounds: SearchBounds,
    truncation: Rat,
    seed: u64,
    format: Format,
}

fn positive(q: Rat, what: &str) -> Result<Rat> {
    anyhow::ensure!(q > Rat::from_integer(0.into()), "{what} must be positive");
    Ok(q)
}

fn resolve(o: &Opts) -> Result<Config> {
    let file: FileConfig = match &o.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing {}", p.display()))?
        }
        None => FileConfig::default(),
    };
    let fb = file.bounds;
    let mut b = SearchBounds::default();
    if let Some(s) = o.max_degree.as_ref().or(fb.max_degree.as_ref()) {
        b.max_degree = positive(parse_rat(s)?, "max degree")?;
    }
    macro_rules! pick {
        ($($f:ident),*) => {$(
            if let Some(v) = o.$f.or(fb.$f) {
                anyhow::ensure!(v > 0 || stringify!($f) == "limit_bound", "{} must be positive", stringify!($f));
                b.$f = v;
            }
        )*};
    }
    pick!(max_denominator, max_coeff_height, max_factors, max_multiset, index_bound, entry_bound, limit_bound);
    let truncation = match o.truncation.as_ref().or(file.truncation.as_ref()) {
        Some(s) => positive(parse_rat(s)?, "truncation")?,
        None => Rat::from_integer(4.into()),
    };
    let format = o.format.as_deref().or(file.format.as_deref()).unwrap_or("json").parse()?;
    Ok(Config { bounds: b, truncation, seed: o.seed.or(file.seed).unwrap_or(0), format })
}

#[derive(Serialize)]
struct AtomsReport<'a> {
    monoid: MonoidId,
    bounds: &'a SearchBounds,
    count: usize,
    atoms: Vec<MonoidElem>,
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    tags: Vec<TagReport>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_atoms(tag: &str, cfg: &Config) -> Result<(String, bool)> {
    let mid = MonoidId::from_tag(tag)?;
    let mut atoms = atoms_up_to(mid, &cfg.bounds)?;
    atoms.sort();
    atoms.dedup();
    let out = match cfg.format {
        Format::Json => json(&AtomsReport { monoid: mid, bounds: &cfg.bounds, count: atoms.len(), atoms }),
        Format::Csv => atoms.iter().fold(String::from("atom\n"), |mut s, a| {
            let _ = writeln!(s, "{}", csv_field(&a.to_string()));
            s
        }),
        Format::Markdown => {
            let mut s = format!("Atoms of {mid} ({}):\n\n", atoms.len());
            for a in &atoms {
                let _ = writeln!(s, "- `{a}`");
            }
            s
        }
    };
    Ok((out, true))
}

fn cmd_verify(tag: &str, cfg: &Config) -> Result<(String, bool)> {
    let vc = VerifyConfig { bounds: cfg.bounds.clone(), seed: cfg.seed, truncation: cfg.truncation.clone() };
    let tags = verify(tag, &vc)?;
    let passed = tags.iter().all(|t| t.passed);
    let out = match cfg.format {
        Format::Json => json(&VerifyReport { passed, tags }),
        Format::Csv => {
            let mut s = String::from("tag,check,passed,detail\n");
            for t in &tags {
                for c in &t.checks {
                    let _ = writeln!(s, "{},{},{},{}", t.tag, csv_field(&c.name), c.passed, csv_field(&c.detail));
                }
            }
            s
        }
        Format::Markdown => {
            let mut s = String::new();
            for t in &tags {
                let _ = writeln!(s, "## {} {}\n", t.tag, if t.passed { "PASS" } else { "FAIL" });
                for c in &t.checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    if c.detail.is_empty() {
                        let _ = writeln!(s, "- [{mark}] {}", c.name);
                    } else {
                        let _ = writeln!(s, "- [{mark}] {}: {}", c.name, c.detail);
                    }
                }
                s.push('\n');
            }
            let _ = writeln!(s, "overall: {}", if passed { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok((out, passed))
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let cfg = resolve(&cli.opts)?;
    match &cli.cmd {
        Cmd::Classify { domain } => {
            let d = Domain::with_truncation(DomainId::from_tag(domain)?, cfg.truncation.clone());
            let samples = domains::sample_universe(&d, cfg.seed, &cfg.bounds);
            let row = classify_domain(&d, &cfg.bounds, &samples)?;
            let r = matrix_report(std::slice::from_ref(&row), false);
            Ok((render(&r, cfg.format), r.all_agree()))
        }
        Cmd::Atoms { monoid } => cmd_atoms(monoid, &cfg),
        Cmd::Verify { tag } => cmd_verify(tag, &cfg),
        Cmd::Matrix => {
            let rows = classify_all(&cfg.bounds, cfg.seed, &cfg.truncation)?;
            let r = matrix_report(&rows, true);
            Ok((render(&r, cfg.format), r.all_agree()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
