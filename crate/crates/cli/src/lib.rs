//! Command-line front end for `seshadri-core`.
//!
//! [`run`] parses arguments, dispatches to the core library and prints either a
//! fixed-width table or compact JSON with sorted keys. [`execute`] does the
//! same without touching standard output, which is what the tests use.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seshadri_core::candidates::{enumerate, EnumerationParams};
use seshadri_core::exclusion::{filter, DEFAULT_BOX_RADIUS};
use seshadri_core::expected::classify_subsqrt;
use seshadri_core::lattice::{check_box, scan, DEFAULT_SCAN_RADIUS};
use seshadri_core::seshadri::{
    analyze, general_dichotomy, known_upper_bound, theorem_table, DichotomyReport, SeshadriValue,
};
use seshadri_core::{
    CandidateTriple, Context, Error, ExpectedTuple, Filtered, GeometricFlags, GramMatrix2,
    LatticeScanResult, Rational, SeshadriOutcome, SurfaceSpec, TableCase, Tristate,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_OVERFLOW: i32 = 4;

/// Keeps `lattice` scans to a few hundred million classes.
const MAX_SCAN_BOX: i64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "seshadri",
    version,
    about = "Exact Seshadri constants of K3 polarizations"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Compute ε(L) for a surface described by the flags
    Analyze,
    /// List candidate triples (m, L.C, C²) below the cap
    Candidates,
    /// Run the exclusion rules and print certificates
    Exclude,
    /// Scan a rank-2 lattice for isotropic and (−2) classes
    Lattice,
    /// Tuples (L², n, m) whose expected multiplicity beats √L²
    Expected,
    /// Case table for degree 6 or 8
    Table,
    /// Candidates below 2 in degree ≥ 8
    Dichotomy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TriArg {
    True,
    False,
    Unknown,
}

impl From<TriArg> for Tristate {
    fn from(t: TriArg) -> Tristate {
        match t {
            TriArg::True => Tristate::True,
            TriArg::False => Tristate::False,
            TriArg::Unknown => Tristate::Unknown,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Degree L² (even, positive)
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub degree: Option<i64>,
    /// Gram matrix "L² d; d c" of the basis (L, C)
    #[arg(long, global = true)]
    pub gram: Option<String>,
    /// Strict upper bound for candidate ratios, "p/q"
    #[arg(long, global = true)]
    pub eps_max: Option<String>,
    /// Coefficient box radius
    #[arg(long = "box", global = true, allow_negative_numbers = true)]
    pub box_radius: Option<i64>,
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true)]
    pub very_ample: bool,
    #[arg(long, global = true)]
    pub globally_generated: bool,
    #[arg(long, global = true, value_enum, default_value = "unknown")]
    pub quadrics_only: TriArg,
    #[arg(long, global = true)]
    pub no_lines: bool,
    #[arg(long, global = true)]
    pub has_line: bool,
    /// Degree of a known elliptic pencil (repeatable)
    #[arg(long = "pencil-degree", global = true, allow_negative_numbers = true)]
    pub pencil_degree: Vec<i64>,
    #[arg(long, global = true)]
    pub has_conic: bool,
    #[arg(long, global = true)]
    pub picard_rank_one: bool,
    /// L ∼ 2B with B² = 2
    #[arg(long = "l-is-2b", global = true)]
    pub l_is_2b: bool,
    /// Also list multiplicity-one candidates
    #[arg(long = "include-m1", global = true)]
    pub include_m1: bool,
    /// Largest degree listed by `lattice`
    #[arg(long, global = true)]
    pub max_degree: Option<i64>,
    #[arg(long = "l2-max", global = true, default_value_t = 2000)]
    pub l2_max: i64,
    #[arg(long = "n-max", global = true, default_value_t = 50)]
    pub n_max: i64,
}

/// Error with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Overflow(_) => EXIT_OVERFLOW,
            Error::InconsistentFlags(_) => EXIT_INCONSISTENT,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Everything a subcommand can produce.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Analyze(SeshadriOutcome),
    Candidates {
        l2: i64,
        eps_sup: Rational,
        triples: Vec<CandidateTriple>,
    },
    Exclude {
        l2: i64,
        eps_sup: Rational,
        filtered: Filtered,
    },
    Lattice {
        gram: GramMatrix2,
        max_degree: i64,
        scan: LatticeScanResult,
    },
    Expected {
        l2_max: i64,
        n_max: i64,
        tuples: Vec<ExpectedTuple>,
    },
    Table {
        l2: i64,
        cases: Vec<TableCase>,
    },
    Dichotomy(DichotomyReport),
}

fn require_degree(o: &Options) -> Result<i64, CliError> {
    let l2 = o
        .degree
        .ok_or_else(|| CliError::usage("--degree is required for this subcommand"))?;
    check_degree(l2)?;
    Ok(l2)
}

fn check_degree(l2: i64) -> Result<(), CliError> {
    if l2 % 2 != 0 {
        return Err(CliError::usage(format!(
            "--degree {l2} is odd; K3 polarization degrees L² = 2g − 2 are always even"
        )));
    }
    if l2 <= 0 {
        return Err(CliError::usage(format!("--degree {l2} must be positive")));
    }
    Ok(())
}

fn context(o: &Options) -> Result<Context, CliError> {
    let mut ctx = Context::new(
        o.globally_generated,
        o.very_ample,
        o.quadrics_only.into(),
        false,
    )?;
    if o.no_lines {
        ctx = ctx.with_no_lines();
    }
    Ok(ctx)
}

fn parse_gram(o: &Options) -> Result<Option<GramMatrix2>, CliError> {
    o.gram
        .as_deref()
        .map(|s| s.parse::<GramMatrix2>().map_err(CliError::from))
        .transpose()
}

fn eps_sup(o: &Options, l2: i64) -> Result<Rational, CliError> {
    match &o.eps_max {
        Some(s) => Ok(s.parse::<Rational>()?),
        None => Ok(known_upper_bound(l2).unwrap_or_else(|| Rational::from_integer(2))),
    }
}

fn box_radius(o: &Options, default: i64) -> Result<i64, CliError> {
    let b = o.box_radius.unwrap_or(default);
    if b < 1 {
        return Err(CliError::usage(format!("--box {b} must be at least 1")));
    }
    Ok(b)
}

fn surface_spec(o: &Options) -> Result<SurfaceSpec, CliError> {
    let l2 = require_degree(o)?;
    let ctx = context(o)?;
    let flags = GeometricFlags {
        pencil_degrees: o.pencil_degree.iter().copied().collect::<BTreeSet<_>>(),
        has_conic: o.has_conic,
        has_line: o.has_line,
        picard_rank_one: o.picard_rank_one,
        l2_is_square: o.picard_rank_one && l2.isqrt() * l2.isqrt() == l2,
        l_is_2b: o.l_is_2b,
    };
    let mut spec = SurfaceSpec::new(l2, ctx).with_flags(flags);
    if let Some(g) = parse_gram(o)? {
        spec = spec.with_gram(g);
    }
    Ok(spec)
}

fn dispatch(cfg: &CliConfig) -> Result<Report, CliError> {
    let o = &cfg.opts;
    match cfg.command {
        Command::Analyze => Ok(Report::Analyze(analyze(&surface_spec(o)?)?)),
        Command::Candidates => {
            let l2 = require_degree(o)?;
            let eps = eps_sup(o, l2)?;
            let triples = enumerate(&EnumerationParams::new(l2, eps, o.include_m1))?;
            Ok(Report::Candidates {
                l2,
                eps_sup: eps,
                triples,
            })
        }
        Command::Exclude => {
            let l2 = require_degree(o)?;
            let eps = eps_sup(o, l2)?;
            let ctx = context(o)?;
            let b = box_radius(o, DEFAULT_BOX_RADIUS)?;
            let ts = enumerate(&EnumerationParams::new(l2, eps, o.include_m1))?;
            let filtered = filter(l2, &ts, &ctx, b)?;
            Ok(Report::Exclude {
                l2,
                eps_sup: eps,
                filtered,
            })
        }
        Command::Lattice => {
            let gram =
                parse_gram(o)?.ok_or_else(|| CliError::usage("--gram is required for lattice"))?;
            if let Some(l2) = o.degree {
                check_degree(l2)?;
                if l2 != gram.l2() {
                    return Err(CliError {
                        code: EXIT_INCONSISTENT,
                        message: format!("--degree {l2} disagrees with the Gram matrix"),
                    });
                }
            }
            let b = box_radius(o, DEFAULT_SCAN_RADIUS)?;
            check_box(&gram, b)?;
            if b > MAX_SCAN_BOX {
                return Err(CliError::usage(format!("--box {b} exceeds {MAX_SCAN_BOX}")));
            }
            let max_degree = o.max_degree.unwrap_or(gram.l2());
            let scan = scan(&gram, b, max_degree)?;
            Ok(Report::Lattice {
                gram,
                max_degree,
                scan,
            })
        }
        Command::Expected => {
            if o.l2_max < 0 || o.n_max < 0 {
                return Err(CliError::usage("--l2-max and --n-max must be nonnegative"));
            }
            if o.l2_max > 1_000_000 || o.n_max > 100_000 {
                return Err(CliError {
                    code: EXIT_OVERFLOW,
                    message: String::from("--l2-max or --n-max too large for exact evaluation"),
                });
            }
            Ok(Report::Expected {
                l2_max: o.l2_max,
                n_max: o.n_max,
                tuples: classify_subsqrt(o.l2_max, o.n_max),
            })
        }
        Command::Table => {
            let l2 = require_degree(o)?;
            Ok(Report::Table {
                l2,
                cases: theorem_table(l2)?,
            })
        }
        Command::Dichotomy => {
            let l2 = require_degree(o)?;
            Ok(Report::Dichotomy(general_dichotomy(l2)?))
        }
    }
}

/// Parses `argv` (including the program name) and returns the text that
/// [`run`] would print.
pub fn execute<I, T>(argv: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = CliConfig::try_parse_from(argv).map_err(|e| {
        let code = match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    })?;
    let report = dispatch(&cfg)?;
    Ok(format(&report, cfg.opts.json))
}

/// Runs the tool and returns its exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match execute(argv) {
        Ok(text) => {
            print!("{text}");
            EXIT_OK
        }
        Err(e) if e.code == EXIT_OK => {
            print!("{}", e.message);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {}", e.message.trim_end());
            e.code
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("core types serialize to JSON")
}

fn report_json(report: &Report) -> Value {
    match report {
        Report::Analyze(o) => to_json(o),
        Report::Candidates {
            l2,
            eps_sup,
            triples,
        } => json!({
            "l2": l2,
            "eps_sup": eps_sup,
            "triples": to_json(triples),
        }),
        Report::Exclude {
            l2,
            eps_sup,
            filtered,
        } => json!({
            "l2": l2,
            "eps_sup": eps_sup,
            "survivors": to_json(&filtered.survivors),
            "certificates": to_json(&filtered.certificates),
            "notes": to_json(&filtered.notes),
        }),
        Report::Lattice {
            gram,
            max_degree,
            scan,
        } => {
            let entries = |es: &[seshadri_core::ScanEntry]| {
                es.iter()
                    .map(|e| json!({"a": e.class.a, "b": e.class.b, "degree": e.degree}))
                    .collect::<Vec<_>>()
            };
            json!({
                "gram": gram.to_string(),
                "determinant": gram.determinant().to_string(),
                "box": scan.box_radius,
                "max_degree": max_degree,
                "isotropic": entries(&scan.isotropic),
                "minus_two": entries(&scan.minus_two),
            })
        }
        Report::Expected { tuples, .. } => to_json(tuples),
        Report::Table { cases, .. } => to_json(cases),
        Report::Dichotomy(d) => to_json(d),
    }
}

/// Renders a report. JSON mode is compact with keys in sorted order.
pub fn format(report: &Report, json: bool) -> String {
    if json {
        // serde_json::Value keeps object keys in a BTreeMap
        let mut s = report_json(report).to_string();
        s.push('\n');
        return s;
    }
    match report {
        Report::Analyze(o) => format_outcome(o, false),
        Report::Candidates {
            l2,
            eps_sup,
            triples,
        } => {
            let mut s = format!(
                "L² = {l2}, ratio < {eps_sup}: {} candidates\n",
                triples.len()
            );
            s.push_str(&triple_table(triples));
            s
        }
        Report::Exclude {
            l2,
            eps_sup,
            filtered,
        } => {
            let mut s = format!("L² = {l2}, ratio < {eps_sup}\n");
            s.push_str(&format!("excluded ({}):\n", filtered.certificates.len()));
            for tc in &filtered.certificates {
                let _ = writeln!(
                    s,
                    "  {:<14} {:<18} {}",
                    tc.triple.to_string(),
                    tc.certificate.kind.to_string(),
                    tc.certificate.rule_text
                );
            }
            if !filtered.notes.is_empty() {
                s.push_str(&format!("notes ({}):\n", filtered.notes.len()));
                for tc in &filtered.notes {
                    let _ = writeln!(
                        s,
                        "  {:<14} {:<18} {}",
                        tc.triple.to_string(),
                        tc.certificate.kind.to_string(),
                        tc.certificate.rule_text
                    );
                }
            }
            s.push_str(&format!("survivors ({}):\n", filtered.survivors.len()));
            s.push_str(&triple_table(&filtered.survivors));
            s
        }
        Report::Lattice {
            gram,
            max_degree,
            scan,
        } => {
            let mut s = format!(
                "Gram [{gram}], det = {}, box = {}, degree ≤ {max_degree}\n",
                gram.determinant(),
                scan.box_radius
            );
            for (name, es) in [("D² = 0", &scan.isotropic), ("D² = −2", &scan.minus_two)] {
                let _ = writeln!(s, "{name} ({}):", es.len());
                let _ = writeln!(s, "  {:>6} {:>6} {:>6}", "a", "b", "L.D");
                for e in es {
                    let _ = writeln!(s, "  {:>6} {:>6} {:>6}", e.class.a, e.class.b, e.degree);
                }
            }
            s
        }
        Report::Expected {
            l2_max,
            n_max,
            tuples,
        } => {
            let mut s = format!("L² ≤ {l2_max}, n ≤ {n_max}: {} tuples\n", tuples.len());
            let _ = writeln!(s, "{:>6} {:>4} {:>4}", "L²", "n", "m");
            for t in tuples {
                let _ = writeln!(s, "{:>6} {:>4} {:>4}", t.l2, t.n, t.m);
            }
            s
        }
        Report::Table { l2, cases } => {
            let mut s = format!("L² = {l2}: {} cases\n", cases.len());
            let _ = writeln!(s, "{:<6} {:>6}  witness", "case", "ε");
            for c in cases {
                let _ = writeln!(
                    s,
                    "{:<6} {:>6}  {}",
                    c.case_label,
                    c.value.to_string(),
                    c.witnesses.join("; ")
                );
            }
            s
        }
        Report::Dichotomy(d) => {
            let mut s = format!("L² = {}: survivors below 2\n", d.l2);
            s.push_str(&triple_table(&d.survivors));
            let _ = writeln!(s, "excluded: {}", d.certificates.len());
            let _ = writeln!(s, "{}", d.conclusion);
            s
        }
    }
}

fn triple_table(ts: &[CandidateTriple]) -> String {
    let mut s = format!("  {:>4} {:>6} {:>6} {:>8}\n", "m", "L.C", "C²", "ratio");
    for t in ts {
        let _ = writeln!(
            s,
            "  {:>4} {:>6} {:>6} {:>8}",
            t.m,
            t.d,
            t.c,
            t.ratio().to_string()
        );
    }
    s
}

fn value_text(v: &SeshadriValue) -> String {
    match v {
        SeshadriValue::Exact(x) => x.to_string(),
        SeshadriValue::Interval(i) => format!(
            "{}{}, {}{}",
            if i.lo_closed { '[' } else { '(' },
            i.lo,
            i.hi,
            if i.hi_closed { ']' } else { ')' }
        ),
        SeshadriValue::Possibilities(ps) => ps
            .iter()
            .map(|p| value_text(&p.value))
            .collect::<Vec<_>>()
            .join(" or "),
    }
}

/// Renders an `analyze` outcome.
pub fn format_outcome(o: &SeshadriOutcome, json: bool) -> String {
    if json {
        let mut s = to_json(o).to_string();
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    let _ = writeln!(s, "ε(L)      {}", value_text(&o.value));
    let _ = writeln!(s, "case      {}", o.case_label);
    for w in &o.witnesses {
        let _ = writeln!(s, "witness   {w}");
    }
    if let SeshadriValue::Possibilities(ps) = &o.value {
        s.push_str("possibilities:\n");
        for p in ps {
            let _ = writeln!(
                s,
                "  {:>14}  [{}] {}",
                value_text(&p.value),
                p.case_label,
                p.condition
            );
        }
    }
    let _ = writeln!(s, "survivors ({}):", o.survivors.len());
    if !o.survivors.is_empty() {
        let _ = writeln!(
            s,
            "  {:>4} {:>6} {:>6} {:>8} {:>8}  witness",
            "m", "L.C", "C²", "ratio", "real."
        );
        for r in &o.survivors {
            let real = to_json(&r.realizable);
            let _ = writeln!(
                s,
                "  {:>4} {:>6} {:>6} {:>8} {:>8}  {}",
                r.triple.m,
                r.triple.d,
                r.triple.c,
                r.ratio.to_string(),
                real.as_str().unwrap_or(""),
                r.witness
            );
        }
    }
    let _ = writeln!(s, "excluded: {}", o.certificates.len());
    for tc in &o.certificates {
        let _ = writeln!(
            s,
            "  {:<14} {}",
            tc.triple.to_string(),
            tc.certificate.rule_text
        );
    }
    s
}
