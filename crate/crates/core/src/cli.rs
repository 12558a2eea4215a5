//! The `hopf` command line. Exit codes: 0 pass, 1 a check failed, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{list_catalog, Built, CatalogEntry, Family};
use crate::cla::{conilpotency_index, enveloping, lantern_of_cla, verify_cla, Cla};
use crate::coalgebra::{
    verify_antipode, verify_coassociativity, verify_compatibility, verify_morphism,
    HopfPresentation,
};
use crate::cobar::h2_report;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::json::{load_str, ClaJson, Loaded, MorphismJson};
use crate::ore::verify_pbw_consistency;
use crate::replicate::run_all;
use crate::report::VerificationReport;
use crate::structure::{
    coradical_filtration, extract_cla, lantern_of_hopf, p2_space, primitive_space, FilteredSubspace,
};

#[derive(Parser, Debug)]
#[command(
    name = "hopf",
    version,
    about = "Connected Hopf algebras of low GK-dimension and coassociative Lie algebras"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Degree bound for truncated computations.
    #[arg(long, global = true, env = "HOPF_MAX_DEGREE", default_value_t = 5)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Catalog family: A, B, D, E, F, K, lie, cla-a, cla-b, cla35a … cla35h.
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated rationals, e.g. `1,0,0` or `2,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// JSON presentation, CLA or family reference.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every axiom check for a presentation or CLA.
    Verify(Source),
    /// Primitive space P within the degree bound.
    Primitives(Source),
    /// Anti-cocommutative space P₂ within the degree bound.
    P2(Source),
    /// A piece H_n of the coradical filtration.
    Coradical {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// The CLA on P₂ with its bracket and coproduct.
    ExtractCla(Source),
    /// The lantern as a graded Lie algebra.
    Lantern(Source),
    /// Second cobar cohomology of the truncated complex.
    Cohomology {
        #[command(flatten)]
        source: Source,
        /// Split by coalgebra bidegree instead of truncation level.
        #[arg(long)]
        bidegree: bool,
    },
    /// Check generator images define an algebra (or Hopf) map.
    Morphism {
        #[arg(long)]
        file: PathBuf,
    },
    /// List the built-in catalog.
    Catalog,
    /// Run the full replication table.
    Replicate,
}

/// Failure split by exit code.
enum Fail {
    Check(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Structural(_) => Fail::Check(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

/// Loading errors of any kind mean the input was malformed.
fn input(e: Error) -> Fail {
    Fail::Input(e.to_string())
}

struct Ctx<'a> {
    json: bool,
    d: u32,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(
        &mut self,
        value: &T,
        human: impl FnOnce() -> String,
    ) -> std::io::Result<()> {
        if self.json {
            writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(value).expect("serializable")
            )
        } else {
            write!(self.out, "{}", human())
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        d: cli.max_degree,
        out,
        err,
    };
    match dispatch(&cli.command, &mut ctx) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Fail::Check(m)) => {
            let _ = writeln!(ctx.err, "hopf: {m}");
            1
        }
        Err(Fail::Input(m)) => {
            let _ = writeln!(ctx.err, "hopf: {m}");
            2
        }
    }
}

fn parse_params(text: &str) -> Result<Vec<Scalar>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn load(src: &Source, ctx: &mut Ctx) -> Result<Loaded, Fail> {
    let from_file = |path: &PathBuf| -> Result<Loaded> {
        let text = std::fs::read_to_string(path)?;
        load_str(&text)
    };
    match (&src.family, &src.file) {
        (None, None) => Err(Fail::Input("give --family or --file".into())),
        (Some(f), Some(path)) => {
            if Family::parse(f).map_err(input)? != Family::Lie {
                return Err(Fail::Input("--file combines only with --family lie".into()));
            }
            match from_file(path).map_err(input)? {
                Loaded::Cla(l) => lie_from_cla(&l).map(Loaded::Hopf).map_err(input),
                Loaded::Hopf(h) => Ok(Loaded::Hopf(h)),
            }
        }
        (None, Some(path)) => {
            if src.params.is_some() {
                return Err(Fail::Input("--params needs --family".into()));
            }
            from_file(path).map_err(input)
        }
        (Some(f), None) => {
            let family = Family::parse(f).map_err(input)?;
            let values = parse_params(src.params.as_deref().unwrap_or("")).map_err(input)?;
            let entry = CatalogEntry::new(family, &values).map_err(input)?;
            for w in entry.warnings() {
                let _ = writeln!(ctx.err, "warning: {w}");
            }
            match entry.build().map_err(input)? {
                Built::Hopf(h) => Ok(Loaded::Hopf(h)),
                Built::Cla(l) => Ok(Loaded::Cla(l)),
            }
        }
    }
}

fn lie_from_cla(l: &Cla) -> Result<HopfPresentation> {
    if !l.has_zero_coproduct() {
        return Err(Error::Input(
            "a Lie algebra file must not carry a coproduct".into(),
        ));
    }
    if let Some(c) = verify_cla(l).check("jacobi").filter(|c| !c.passed) {
        return Err(Error::Parameter(format!(
            "Jacobi fails: {}",
            c.witness.clone().unwrap_or_default()
        )));
    }
    Ok(enveloping(l)?.with_label(format!("U(g) on {}", l.names().join(","))))
}

fn hopf_of(loaded: Loaded) -> Result<HopfPresentation, Fail> {
    match loaded {
        Loaded::Hopf(h) => Ok(h),
        Loaded::Cla(l) => {
            let u = enveloping(&l)?;
            Ok(u.with_inferred_bidegrees().unwrap_or(u))
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<bool, Fail> {
    let io = |e: std::io::Error| Fail::Input(e.to_string());
    match cmd {
        Command::Verify(src) => {
            let report = match load(src, ctx)? {
                Loaded::Hopf(h) => verify_hopf(&h, ctx.d),
                Loaded::Cla(l) => {
                    let mut r = verify_cla(&l);
                    match conilpotency_index(&l) {
                        Some(k) => r.info("conilpotent", true, Some(format!("index {k}"))),
                        None => r.info("conilpotent", false, None),
                    }
                    r
                }
            };
            ctx.emit(&report, || report.to_string()).map_err(io)?;
            Ok(report.passed())
        }
        Command::Primitives(src) => subspace_cmd(src, ctx, "P", primitive_space),
        Command::P2(src) => subspace_cmd(src, ctx, "P2", p2_space),
        Command::Coradical { source, level } => {
            let n = *level;
            subspace_cmd(source, ctx, &format!("H_{n}"), |h, d| {
                coradical_filtration(h, n, d)
            })
        }
        Command::ExtractCla(src) => {
            let h = hopf_of(load(src, ctx)?)?;
            let l = extract_cla(&h, ctx.d)?;
            ctx.emit(&ClaJson::from_cla(&l), || l.to_string())
                .map_err(io)?;
            Ok(true)
        }
        Command::Lantern(src) => {
            let g = match load(src, ctx)? {
                Loaded::Cla(l) => lantern_of_cla(&l)?,
                Loaded::Hopf(h) => lantern_of_hopf(&h, ctx.d)?,
            };
            let ok = g.verify().passed();
            ctx.emit(&g, || format!("{g}shape: {:?}\n", g.shape()))
                .map_err(io)?;
            Ok(ok)
        }
        Command::Cohomology { source, bidegree } => {
            let mut h = hopf_of(load(source, ctx)?)?;
            if !h.algebra().has_bidegrees() {
                h = h.with_inferred_bidegrees().unwrap_or(h);
            }
            let r = h2_report(&h, ctx.d, *bidegree)?;
            ctx.emit(&r, || {
                let mut s = format!(
                    "H² of the cobar complex of {} up to degree {}\n",
                    r.label, r.bound
                );
                for e in &r.entries {
                    let deg = e
                        .degree
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    let what = if r.by_bidegree {
                        "bidegree"
                    } else {
                        "degree ≤"
                    };
                    s += &format!(
                        "  {what} ({deg}): cocycles {}, coboundaries {}, H² {}\n",
                        e.cocycles, e.coboundaries, e.h2
                    );
                }
                s + &format!("total dim H² = {}\n", r.total_h2)
            })
            .map_err(io)?;
            Ok(r.squares_to_zero)
        }
        Command::Morphism { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Fail::Input(e.to_string()))?;
            let m: MorphismJson =
                serde_json::from_str(&text).map_err(|e| Fail::Input(e.to_string()))?;
            let req = m.resolve().map_err(input)?;
            let r = verify_morphism(&req.source, &req.target, &req.images, req.check_coalgebra)?;
            ctx.emit(&r, || r.to_string()).map_err(io)?;
            Ok(r.passed())
        }
        Command::Catalog => {
            let entries = list_catalog();
            ctx.emit(&entries, || {
                entries
                    .iter()
                    .map(|e| {
                        let kind = if e.family.is_cla() { "CLA" } else { "Hopf" };
                        let params: Vec<String> =
                            e.params.iter().map(|(_, v)| v.to_string()).collect();
                        let args = if params.is_empty() {
                            String::new()
                        } else {
                            format!(" --params {}", params.join(","))
                        };
                        format!(
                            "{:<30} {kind:<5} --family {}{args}\n",
                            e.label(),
                            e.family.tag()
                        )
                    })
                    .collect()
            })
            .map_err(io)?;
            Ok(true)
        }
        Command::Replicate => {
            let results = run_all();
            let ok = results.iter().all(|r| r.passed);
            ctx.emit(&json!({ "passed": ok, "criteria": results }), || {
                let mut s = String::new();
                for r in &results {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    s += &format!("[{tag}] {}. {} ({})\n", r.id, r.title, r.reference);
                    for d in &r.details {
                        s += &format!("       {d}\n");
                    }
                }
                s
            })
            .map_err(io)?;
            Ok(ok)
        }
    }
}

fn verify_hopf(h: &HopfPresentation, d: u32) -> VerificationReport {
    let mut r = VerificationReport::new(format!("verification of {}", h.label()));
    r.merge(verify_pbw_consistency(h.algebra()));
    r.merge(verify_coassociativity(h));
    r.merge(verify_compatibility(h));
    r.merge(verify_antipode(h, d.min(4)));
    r
}

fn subspace_cmd(
    src: &Source,
    ctx: &mut Ctx,
    kind: &str,
    f: impl Fn(&HopfPresentation, u32) -> FilteredSubspace,
) -> Result<bool, Fail> {
    let h = hopf_of(load(src, ctx)?)?;
    let d = ctx.d;
    let s = f(&h, d);
    let stable = d > 1 && f(&h, d - 1).dim() == s.dim();
    let value = json!({ "object": h.label(), "subspace": s, "stable": stable });
    ctx.emit(&value, || {
        let mut out = format!(
            "{kind} of {} within degree ≤ {d}: dimension {} (stable from {}: {})\n",
            h.label(),
            s.dim(),
            d.saturating_sub(1),
            if stable { "yes" } else { "no" }
        );
        for b in s.render_basis() {
            out += &format!("  {b}\n");
        }
        out
    })
    .map_err(|e| Fail::Input(e.to_string()))?;
    Ok(true)
}
