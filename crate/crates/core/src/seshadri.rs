//! From surface data to a Seshadri constant.
//!
//! [`analyze`] runs the full pipeline: special cases first, then a rational cap
//! (the triple-point bound in degrees 6 and 8, otherwise 2), candidate
//! enumeration, exclusion, and finally a realizability pass deciding which
//! surviving candidates actually occur on the surface. When realizability
//! cannot be decided the outcome is a list of conditional possibilities rather
//! than a guess.
//!
//! A supplied Gram matrix is read as the whole Picard lattice, so absence of a
//! class there is absence on the surface.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::candidates::{enumerate, CandidateTriple, EnumerationParams};
use crate::error::{Error, Result};
use crate::exclusion::{
    effective_ratio, filter, Context, TripleCertificate, Tristate, DEFAULT_BOX_RADIUS,
};
use crate::lattice::{represents, GramMatrix2};
use crate::rational::{ExactReal, Rational};

pub const TRIPLE_POINT_WITNESS: &str = "hyperplane section with a triple point";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeometricFlags {
    /// Degrees `k` of known elliptic pencils `|E|` with `E.L = k`.
    pub pencil_degrees: BTreeSet<i64>,
    pub has_conic: bool,
    pub has_line: bool,
    pub picard_rank_one: bool,
    pub l2_is_square: bool,
    /// `L ∼ 2B` with `B² = 2`.
    pub l_is_2b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub l2: i64,
    pub ctx: Context,
    pub gram: Option<GramMatrix2>,
    pub flags: GeometricFlags,
}

impl SurfaceSpec {
    pub fn new(l2: i64, ctx: Context) -> Self {
        SurfaceSpec {
            l2,
            ctx,
            gram: None,
            flags: GeometricFlags::default(),
        }
    }

    pub fn with_gram(mut self, gram: GramMatrix2) -> Self {
        self.gram = Some(gram);
        self
    }

    pub fn with_flags(mut self, flags: GeometricFlags) -> Self {
        self.flags = flags;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Realizability {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub lo: ExactReal,
    pub lo_closed: bool,
    pub hi: ExactReal,
    pub hi_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum SeshadriValue {
    #[cfg_attr(feature = "serde", serde(rename = "value"))]
    Exact(ExactReal),
    Interval(Interval),
    Possibilities(Vec<Possibility>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Possibility {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub value: SeshadriValue,
    pub condition: String,
    pub case_label: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SurvivorReport {
    pub triple: CandidateTriple,
    pub ratio: Rational,
    pub realizable: Realizability,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeshadriOutcome {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub value: SeshadriValue,
    pub case_label: String,
    pub witnesses: Vec<String>,
    pub certificates: Vec<TripleCertificate>,
    pub survivors: Vec<SurvivorReport>,
}

impl SeshadriOutcome {
    fn exact(value: ExactReal, case_label: &str, witness: String) -> Self {
        SeshadriOutcome {
            value: SeshadriValue::Exact(value),
            case_label: case_label.to_string(),
            witnesses: vec![witness],
            certificates: Vec::new(),
            survivors: Vec::new(),
        }
    }

    /// Largest value the outcome allows.
    pub fn upper(&self) -> ExactReal {
        fn upper(v: &SeshadriValue) -> ExactReal {
            match v {
                SeshadriValue::Exact(x) => *x,
                SeshadriValue::Interval(i) => i.hi,
                SeshadriValue::Possibilities(ps) => ps
                    .iter()
                    .map(|p| upper(&p.value))
                    .max()
                    .expect("possibility list is never empty"),
            }
        }
        upper(&self.value)
    }

    /// Smallest value the outcome allows.
    pub fn lower(&self) -> ExactReal {
        fn lower(v: &SeshadriValue) -> ExactReal {
            match v {
                SeshadriValue::Exact(x) => *x,
                SeshadriValue::Interval(i) => i.lo,
                SeshadriValue::Possibilities(ps) => ps
                    .iter()
                    .map(|p| lower(&p.value))
                    .min()
                    .expect("possibility list is never empty"),
            }
        }
        lower(&self.value)
    }

    /// Exact values the outcome allows, ignoring interval entries.
    pub fn exact_values(&self) -> Vec<ExactReal> {
        match &self.value {
            SeshadriValue::Exact(x) => vec![*x],
            SeshadriValue::Interval(_) => Vec::new(),
            SeshadriValue::Possibilities(ps) => ps
                .iter()
                .filter_map(|p| match p.value {
                    SeshadriValue::Exact(x) => Some(x),
                    _ => None,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TableCase {
    pub case_label: String,
    pub value: Rational,
    pub witnesses: Vec<String>,
    pub survivors: Vec<CandidateTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DichotomyReport {
    pub l2: i64,
    pub survivors: Vec<CandidateTriple>,
    pub certificates: Vec<TripleCertificate>,
    pub conclusion: String,
}

/// Upper bound on `ε(L)` from irreducible hyperplane sections with a triple
/// point: `L²/3` in degrees 6 and 8.
pub fn known_upper_bound(l2: i64) -> Option<Rational> {
    match l2 {
        6 | 8 => Rational::new(l2, 3),
        _ => None,
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InconsistentFlags(msg.into())
}

/// What is known about classes on the surface, from flags, the Gram matrix and
/// the context hypotheses.
struct Facts<'a> {
    spec: &'a SurfaceSpec,
}

impl<'a> Facts<'a> {
    fn resolve(spec: &'a SurfaceSpec) -> Result<Self> {
        let l2 = spec.l2;
        let ctx = &spec.ctx;
        let flags = &spec.flags;
        if l2 < 2 || l2 % 2 != 0 || l2 > crate::lattice::MAX_ENTRY {
            return Err(Error::InvalidArgument(format!(
                "L² = {l2} is not a K3 polarization degree (must be even and positive)"
            )));
        }
        if ctx.quadrics_only().is_true() && !ctx.is_very_ample() {
            return Err(inconsistent(
                "a quadrics-only ideal presupposes that L is very ample",
            ));
        }
        if let Some(g) = &spec.gram {
            if g.l2() != l2 {
                return Err(inconsistent(format!(
                    "Gram matrix has L² = {} but the degree is {l2}",
                    g.l2()
                )));
            }
        }
        if flags.has_line && ctx.no_lines() {
            return Err(inconsistent(
                "a line is asserted together with the no-lines hypothesis",
            ));
        }
        if flags.pencil_degrees.iter().any(|&k| k <= 0) {
            return Err(Error::InvalidArgument(String::from(
                "pencil degrees must be positive",
            )));
        }
        let square = l2.isqrt() * l2.isqrt() == l2;
        if flags.l2_is_square && !square {
            return Err(inconsistent(format!("L² = {l2} is not a square")));
        }
        if flags.picard_rank_one
            && (spec.gram.is_some()
                || !flags.pencil_degrees.is_empty()
                || flags.has_conic
                || flags.has_line
                || flags.l_is_2b)
        {
            return Err(inconsistent(
                "Picard rank one excludes a second lattice class, pencils, conics, lines and L ∼ 2B",
            ));
        }
        if flags.l_is_2b && l2 != 8 {
            return Err(inconsistent("L ∼ 2B with B² = 2 forces L² = 8"));
        }
        if flags.l_is_2b && ctx.is_very_ample() {
            return Err(inconsistent("L ∼ 2B with B² = 2 is not very ample"));
        }
        let facts = Facts { spec };
        if let Some(g) = &spec.gram {
            for &k in &flags.pencil_degrees {
                if represents(g, 0, k)?.is_none() {
                    return Err(inconsistent(format!(
                        "the Gram matrix has no isotropic class of degree {k}"
                    )));
                }
            }
            if flags.has_conic && represents(g, -2, 2)?.is_none() {
                return Err(inconsistent(
                    "the Gram matrix has no (−2)-class of degree 2",
                ));
            }
            if flags.has_line && represents(g, -2, 1)?.is_none() {
                return Err(inconsistent(
                    "the Gram matrix has no (−2)-class of degree 1",
                ));
            }
        }
        let pencil = |k| facts.lattice_class(0, k);
        if ctx.is_globally_generated() && pencil(1)? == Realizability::Yes {
            return Err(inconsistent(
                "an elliptic pencil of degree 1 obstructs global generation",
            ));
        }
        if ctx.is_very_ample() {
            if l2 == 2 {
                return Err(inconsistent("L² = 2 is never very ample"));
            }
            if pencil(2)? == Realizability::Yes {
                return Err(inconsistent(
                    "an elliptic pencil of degree 2 obstructs very ampleness",
                ));
            }
        }
        if ctx.no_lines() && facts.lattice_class(-2, 1)? == Realizability::Yes {
            return Err(inconsistent("the Gram matrix contains a line class"));
        }
        match ctx.quadrics_only() {
            Tristate::True if l2 <= 6 => {
                return Err(inconsistent(format!(
                    "a K3 surface of degree {l2} is not cut out by quadrics"
                )));
            }
            Tristate::True if pencil(3)? == Realizability::Yes => {
                return Err(inconsistent(
                    "an elliptic pencil of degree 3 obstructs a quadrics-only ideal",
                ));
            }
            Tristate::False if l2 >= 8 && pencil(3)? == Realizability::No => {
                return Err(inconsistent(
                    "an ideal not generated by quadrics needs an elliptic pencil of degree 3",
                ));
            }
            _ => {}
        }
        Ok(facts)
    }

    /// Whether a class with `(D², L.D) = (square, degree)` exists, using only
    /// the lattice data and explicit flags.
    fn lattice_class(&self, square: i64, degree: i64) -> Result<Realizability> {
        let spec = self.spec;
        if let Some(g) = &spec.gram {
            return Ok(if represents(g, square, degree)?.is_some() {
                Realizability::Yes
            } else {
                Realizability::No
            });
        }
        let flags = &spec.flags;
        let flagged = match (square, degree) {
            (0, k) => flags.pencil_degrees.contains(&k),
            (-2, 1) => flags.has_line,
            (-2, 2) => flags.has_conic,
            _ => false,
        };
        if flagged {
            return Ok(Realizability::Yes);
        }
        if flags.picard_rank_one {
            // only multiples kL: (k²L², kL²)
            let l2 = i128::from(spec.l2);
            let (s, d) = (i128::from(square), i128::from(degree));
            let proportional = d % l2 == 0 && s == (d / l2) * (d / l2) * l2;
            return Ok(if proportional {
                Realizability::Unknown
            } else {
                Realizability::No
            });
        }
        Ok(Realizability::Unknown)
    }

    /// Like [`Facts::lattice_class`], plus what the context hypotheses imply.
    fn class(&self, square: i64, degree: i64) -> Result<Realizability> {
        let found = self.lattice_class(square, degree)?;
        if found != Realizability::Unknown {
            return Ok(found);
        }
        let ctx = &self.spec.ctx;
        let l2 = self.spec.l2;
        Ok(match (square, degree) {
            (0, 1) if ctx.is_globally_generated() => Realizability::No,
            (0, 2) if ctx.is_very_ample() => Realizability::No,
            (0, 3) if ctx.quadrics_only().is_true() => Realizability::No,
            (0, 3) if ctx.quadrics_only() == Tristate::False && l2 >= 8 => Realizability::Yes,
            (-2, 1) if ctx.no_lines() => Realizability::No,
            _ => Realizability::Unknown,
        })
    }

    /// Whether the candidate `t` bounds `ε` on this surface: it does exactly
    /// when an effective class with its numbers exists and the class alone
    /// already gives the ratio `d/m`.
    fn realizability(&self, t: &CandidateTriple) -> Result<Realizability> {
        let found = self.class(t.c, t.d)?;
        let self_bounding = effective_ratio(t.c, t.d) == Some(t.ratio());
        Ok(match found {
            Realizability::Yes if self_bounding => Realizability::Yes,
            Realizability::No => Realizability::No,
            _ => Realizability::Unknown,
        })
    }
}

fn witness_for(t: &CandidateTriple) -> String {
    match (t.m, t.d, t.c) {
        (2, d, 0) => format!("double point member of elliptic pencil of degree {d}"),
        (1, 1, -2) => String::from("line"),
        (1, 2, -2) => String::from("conic"),
        (1, d, -2) => format!("smooth rational curve of degree {d}"),
        (m, d, c) => {
            format!("irreducible curve with a point of multiplicity {m}, L.C = {d}, C² = {c}")
        }
    }
}

fn condition_for(t: &CandidateTriple) -> String {
    match (t.m, t.d, t.c) {
        (2, d, 0) => format!("X has an elliptic pencil of degree {d}"),
        (1, 1, -2) => String::from("X contains a line"),
        (1, 2, -2) => String::from("X contains a conic"),
        (1, d, -2) => format!("X contains a smooth rational curve of degree {d}"),
        (m, d, c) => format!(
            "X has an irreducible curve with (L.C, C²) = ({d}, {c}) and a point of multiplicity {m}"
        ),
    }
}

fn theorem_labels(l2: i64, ctx: &Context) -> &'static [(i64, i64, &'static str)] {
    const DEGREE_SIX: &[(i64, i64, &str)] = &[(2, 1, "a-i"), (3, 2, "a-ii")];
    const DEGREE_EIGHT: &[(i64, i64, &str)] = &[(8, 3, "b-i"), (5, 2, "b-ii"), (2, 1, "b-iii")];
    match l2 {
        6 if ctx.is_very_ample() => DEGREE_SIX,
        8 if ctx.is_very_ample() && ctx.quadrics_only().is_true() => DEGREE_EIGHT,
        _ => &[],
    }
}

fn case_label(l2: i64, ctx: &Context, value: &ExactReal) -> String {
    if let Some(r) = value.as_rational() {
        for &(n, d, label) in theorem_labels(l2, ctx) {
            if r == q(n, d) {
                return label.to_string();
            }
        }
        if r == q(1, 2) {
            return String::from("pencil-1");
        }
        if r == q(1, 1) {
            return String::from("pencil-2-or-line");
        }
        if r == q(3, 2) && l2 >= 8 {
            return String::from("pencil-3");
        }
    }
    String::from("curve-bound")
}

/// Closed-form cases: degree-1 or degree-2 pencils, `L² = 2`, `L ∼ 2B`, lines,
/// Picard rank one with square degree, and quartics.
pub fn classify_special(spec: &SurfaceSpec) -> Result<Option<SeshadriOutcome>> {
    let facts = Facts::resolve(spec)?;
    let l2 = spec.l2;
    let ctx = &spec.ctx;
    let flags = &spec.flags;
    let r = |n, d| ExactReal::from(q(n, d));

    if facts.lattice_class(0, 1)? == Realizability::Yes {
        return Ok(Some(SeshadriOutcome::exact(
            r(1, 2),
            "pencil-1",
            witness_for(&CandidateTriple::new(2, 1, 0)),
        )));
    }
    if l2 == 2 {
        return Ok(Some(SeshadriOutcome::exact(
            r(1, 1),
            "degree-2",
            String::from("preimage of a line tangent to the branch sextic"),
        )));
    }
    if facts.lattice_class(0, 2)? == Realizability::Yes {
        return Ok(Some(SeshadriOutcome::exact(
            r(1, 1),
            "pencil-2",
            witness_for(&CandidateTriple::new(2, 2, 0)),
        )));
    }
    if flags.l_is_2b {
        return Ok(Some(SeshadriOutcome::exact(
            r(2, 1),
            "twice-b",
            String::from("L ∼ 2B with B² = 2, so ε(L) = 2ε(B)"),
        )));
    }
    if ctx.is_globally_generated() && facts.lattice_class(-2, 1)? == Realizability::Yes {
        return Ok(Some(SeshadriOutcome::exact(
            r(1, 1),
            "line",
            String::from("line"),
        )));
    }
    if flags.picard_rank_one && l2.isqrt() * l2.isqrt() == l2 {
        return Ok(Some(SeshadriOutcome::exact(
            ExactReal::sqrt(l2),
            "rank-one-square",
            String::from("Pic X = Z·L with L² a square"),
        )));
    }
    if l2 == 4 {
        let mut ps = Vec::new();
        if facts.class(-2, 1)? != Realizability::No {
            ps.push(Possibility {
                value: SeshadriValue::Exact(r(1, 1)),
                condition: String::from("X contains a line"),
                case_label: String::from("quartic-line"),
                witnesses: vec![String::from("line")],
            });
        }
        ps.push(Possibility {
            value: SeshadriValue::Exact(r(4, 3)),
            condition: String::from(
                "X contains no line and a rational curve C ∈ |L| with a triple point (the Hesse form vanishes at a point)",
            ),
            case_label: String::from("quartic-triple-point"),
            witnesses: vec![String::from("rational hyperplane section with a triple point")],
        });
        ps.push(Possibility {
            value: SeshadriValue::Exact(r(2, 1)),
            condition: String::from("all other cases"),
            case_label: String::from("quartic-general"),
            witnesses: vec![String::from("hyperplane section with a double point")],
        });
        let witnesses = ps.iter().flat_map(|p| p.witnesses.clone()).collect();
        return Ok(Some(SeshadriOutcome {
            value: SeshadriValue::Possibilities(ps),
            case_label: String::from("quartic"),
            witnesses,
            certificates: Vec::new(),
            survivors: Vec::new(),
        }));
    }
    Ok(None)
}

/// Computes `ε(L)` as an exact value, an interval, or conditional
/// possibilities.
pub fn analyze(spec: &SurfaceSpec) -> Result<SeshadriOutcome> {
    if let Some(outcome) = classify_special(spec)? {
        return Ok(outcome);
    }
    let facts = Facts::resolve(spec)?;
    let l2 = spec.l2;
    let ctx = &spec.ctx;
    let bound = known_upper_bound(l2);
    // l2 ≥ 6 here, so 2 < √l2
    let cap = bound.unwrap_or(q(2, 1));
    let ts = enumerate(&EnumerationParams::new(l2, cap, true))?;
    let filtered = filter(l2, &ts, ctx, DEFAULT_BOX_RADIUS)?;

    let mut survivors = Vec::with_capacity(filtered.survivors.len());
    for t in &filtered.survivors {
        survivors.push(SurvivorReport {
            triple: *t,
            ratio: t.ratio(),
            realizable: facts.realizability(t)?,
            witness: witness_for(t),
        });
    }

    let best_yes = survivors
        .iter()
        .filter(|s| s.realizable == Realizability::Yes)
        .map(|s| s.ratio)
        .min();

    // value reached when no undecided candidate below it occurs
    let (fallback, fallback_witnesses): (SeshadriValue, Vec<String>) = match (best_yes, bound) {
        (Some(r), _) => (
            SeshadriValue::Exact(r.into()),
            survivors
                .iter()
                .filter(|s| s.realizable == Realizability::Yes && s.ratio == r)
                .map(|s| s.witness.clone())
                .collect(),
        ),
        (None, Some(u)) => (
            SeshadriValue::Exact(u.into()),
            vec![String::from(TRIPLE_POINT_WITNESS)],
        ),
        (None, None) => (
            SeshadriValue::Interval(Interval {
                lo: cap.into(),
                lo_closed: true,
                hi: ExactReal::sqrt(l2),
                hi_closed: true,
            }),
            Vec::new(),
        ),
    };
    let fallback_label = match &fallback {
        SeshadriValue::Exact(x) => case_label(l2, ctx, x),
        _ => String::from("no-curve-below-2"),
    };

    let mut open: Vec<Possibility> = Vec::new();
    for s in survivors
        .iter()
        .filter(|s| s.realizable == Realizability::Unknown && best_yes.is_none_or(|b| s.ratio < b))
    {
        let value = SeshadriValue::Exact(s.ratio.into());
        match open.iter_mut().find(|p| p.value == value) {
            Some(p) => {
                p.condition = format!("{} or {}", p.condition, condition_for(&s.triple));
                p.witnesses.push(s.witness.clone());
            }
            None => open.push(Possibility {
                case_label: case_label(l2, ctx, &s.ratio.into()),
                value,
                condition: condition_for(&s.triple),
                witnesses: vec![s.witness.clone()],
            }),
        }
    }

    let (value, case_label, witnesses) = if open.is_empty() {
        (fallback, fallback_label, fallback_witnesses)
    } else {
        open.push(Possibility {
            value: fallback,
            condition: String::from("otherwise"),
            case_label: fallback_label,
            witnesses: fallback_witnesses,
        });
        let label = open
            .iter()
            .map(|p| p.case_label.as_str())
            .collect::<Vec<_>>()
            .join("|");
        let witnesses = open.iter().flat_map(|p| p.witnesses.clone()).collect();
        (SeshadriValue::Possibilities(open), label, witnesses)
    };

    let outcome = SeshadriOutcome {
        value,
        case_label,
        witnesses,
        certificates: filtered.certificates,
        survivors,
    };
    debug_assert!(outcome.upper() <= ExactReal::sqrt(l2));
    Ok(outcome)
}

fn theorem_context(l2: i64) -> Result<Context> {
    match l2 {
        6 => Ok(Context::very_ample()
            .with_no_lines()
            .with_quadrics_only(Tristate::False)),
        8 => Ok(Context::very_ample()
            .with_no_lines()
            .with_quadrics_only(Tristate::True)),
        4 => Err(Error::UnsupportedDegree(
            4,
            "quartic surfaces are classified by the special-case rules",
        )),
        _ => Err(Error::UnsupportedDegree(
            l2,
            "case tables exist for degrees 6 and 8 only",
        )),
    }
}

/// Every case for surfaces of degree 6 (type (2,3)) or degree 8 (type
/// (2,2,2)) without lines, in decreasing order of `ε`.
pub fn theorem_table(l2: i64) -> Result<Vec<TableCase>> {
    let ctx = theorem_context(l2)?;
    let bound = known_upper_bound(l2).expect("degree 6 or 8");
    let ts = enumerate(&EnumerationParams::new(l2, bound, true))?;
    let filtered = filter(l2, &ts, &ctx, DEFAULT_BOX_RADIUS)?;

    let mut cases = vec![TableCase {
        case_label: case_label(l2, &ctx, &bound.into()),
        value: bound,
        witnesses: vec![String::from(TRIPLE_POINT_WITNESS)],
        survivors: Vec::new(),
    }];
    let mut ratios: Vec<Rational> = filtered.survivors.iter().map(|t| t.ratio()).collect();
    ratios.dedup();
    ratios.reverse();
    for r in ratios {
        let group: Vec<CandidateTriple> = filtered
            .survivors
            .iter()
            .copied()
            .filter(|t| t.ratio() == r)
            .collect();
        cases.push(TableCase {
            case_label: case_label(l2, &ctx, &r.into()),
            value: r,
            witnesses: group.iter().map(witness_for).collect(),
            survivors: group,
        });
    }
    Ok(cases)
}

/// Candidates below 2 for an embedded surface of degree `l2 ≥ 8` without
/// lines, with quadric generation left open.
pub fn general_dichotomy(l2: i64) -> Result<DichotomyReport> {
    if l2 < 8 || l2 % 2 != 0 || l2 > crate::lattice::MAX_ENTRY {
        return Err(Error::UnsupportedDegree(
            l2,
            "the dichotomy applies to even degrees L² ≥ 8",
        ));
    }
    let ctx = Context::very_ample().with_no_lines();
    let ts = enumerate(&EnumerationParams::new(l2, q(2, 1), false))?;
    let filtered = filter(l2, &ts, &ctx, DEFAULT_BOX_RADIUS)?;
    let conclusion = if filtered.survivors == [CandidateTriple::new(2, 3, 0)] {
        String::from(
            "1 < ε < 2 iff a degree-3 elliptic pencil exists iff the ideal is not generated only by quadrics, and then ε = 3/2",
        )
    } else {
        format!(
            "unexpected survivors below 2: {}",
            filtered
                .survivors
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    Ok(DichotomyReport {
        l2,
        survivors: filtered.survivors,
        certificates: filtered.certificates,
        conclusion,
    })
}
