//! Certificate-producing elimination of candidate Seshadri curves.
//!
//! A candidate `(m, d, c)` spans, together with `L`, a rank-2 lattice with Gram
//! matrix `[[L², d], [d, c]]`. Auxiliary divisors `D = aL + bC` in a small box
//! are tested against the Saint-Donat criteria (an elliptic pencil of degree
//! 1, 2 or 3 obstructs global generation, very ampleness, or quadric generation
//! of the ideal) and against the existence of a curve with a smaller Seshadri
//! ratio. Each elimination is recorded as a [`Certificate`] that can be checked
//! independently.
//!
//! Rules are tried in a fixed priority, and within one rule divisors are visited
//! row-major over `(a, b)`:
//!
//! 1. [`RuleKind::LineViolation`]
//! 2. [`RuleKind::GGViolation`]
//! 3. [`RuleKind::VAViolation`]
//! 4. [`RuleKind::QuadricsViolation`]
//! 5. [`RuleKind::BetterSeshadri`]
//! 6. [`RuleKind::Proportionality`] (informational, never eliminates)

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::candidates::CandidateTriple;
use crate::error::{Error, Result};
use crate::lattice::{pair_raw, DivisorClass};
use crate::rational::Rational;

/// Default half-width of the auxiliary divisor box.
pub const DEFAULT_BOX_RADIUS: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Tristate {
    True,
    False,
    #[default]
    Unknown,
}

impl Tristate {
    pub fn is_true(self) -> bool {
        self == Tristate::True
    }
}

impl fmt::Display for Tristate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tristate::True => "true",
            Tristate::False => "false",
            Tristate::Unknown => "unknown",
        })
    }
}

impl core::str::FromStr for Tristate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "true" => Ok(Tristate::True),
            "false" => Ok(Tristate::False),
            "unknown" => Ok(Tristate::Unknown),
            other => Err(Error::Parse(format!(
                "expected true, false or unknown, got {other:?}"
            ))),
        }
    }
}

/// Standing hypotheses on `(X, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Context {
    globally_generated: bool,
    very_ample: bool,
    quadrics_only: Tristate,
    no_lines: bool,
}

impl Context {
    /// Very ampleness implies global generation; `quadrics_only = true` needs
    /// an embedding and is rejected without very ampleness.
    pub fn new(
        globally_generated: bool,
        very_ample: bool,
        quadrics_only: Tristate,
        no_lines: bool,
    ) -> Result<Self> {
        if quadrics_only.is_true() && !very_ample {
            return Err(Error::InconsistentFlags(String::from(
                "a quadrics-only ideal presupposes that L is very ample",
            )));
        }
        Ok(Context {
            globally_generated: globally_generated || very_ample,
            very_ample,
            quadrics_only,
            no_lines,
        })
    }

    pub fn globally_generated() -> Self {
        Context {
            globally_generated: true,
            ..Context::default()
        }
    }

    pub fn very_ample() -> Self {
        Context {
            globally_generated: true,
            very_ample: true,
            ..Context::default()
        }
    }

    pub fn with_quadrics_only(self, quadrics_only: Tristate) -> Self {
        Context::new(
            self.globally_generated,
            self.very_ample || quadrics_only.is_true(),
            quadrics_only,
            self.no_lines,
        )
        .expect("very ampleness forced above")
    }

    pub fn with_no_lines(self) -> Self {
        Context {
            no_lines: true,
            ..self
        }
    }

    pub fn is_globally_generated(&self) -> bool {
        self.globally_generated
    }

    pub fn is_very_ample(&self) -> bool {
        self.very_ample
    }

    pub fn quadrics_only(&self) -> Tristate {
        self.quadrics_only
    }

    pub fn no_lines(&self) -> bool {
        self.no_lines
    }

    /// Every hypothesis of `other` also holds in `self`.
    pub fn implies(&self, other: &Context) -> bool {
        (self.globally_generated || !other.globally_generated)
            && (self.very_ample || !other.very_ample)
            && (self.no_lines || !other.no_lines)
            && (other.quadrics_only == Tristate::Unknown
                || self.quadrics_only == other.quadrics_only)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RuleKind {
    LineViolation,
    GGViolation,
    VAViolation,
    QuadricsViolation,
    Proportionality,
    BetterSeshadri,
}

impl RuleKind {
    /// Order in which [`certificate_for`] tries the rules.
    pub const PRIORITY: [RuleKind; 6] = [
        RuleKind::LineViolation,
        RuleKind::GGViolation,
        RuleKind::VAViolation,
        RuleKind::QuadricsViolation,
        RuleKind::BetterSeshadri,
        RuleKind::Proportionality,
    ];

    /// Whether a certificate of this kind rules the candidate out.
    pub fn eliminates(self) -> bool {
        self != RuleKind::Proportionality
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub kind: RuleKind,
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub divisor: DivisorClass,
    pub d_square: i64,
    pub d_degree: i64,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub better_ratio: Option<Rational>,
    pub rule_text: String,
}

/// A candidate together with the certificate that removed (or annotated) it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TripleCertificate {
    pub triple: CandidateTriple,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Filtered {
    /// Sorted by ratio `d/m`, then `(m, d, c)`.
    pub survivors: Vec<CandidateTriple>,
    /// Eliminated candidates, in input order.
    pub certificates: Vec<TripleCertificate>,
    /// Proportionality notes attached to survivors.
    pub notes: Vec<TripleCertificate>,
}

/// `(D², L.D)` for `D = aL + bC` in the lattice of `(l2, t)`.
pub fn aux_intersections(l2: i64, t: &CandidateTriple, a: i64, b: i64) -> Result<(i64, i64)> {
    let class = DivisorClass::new(a, b);
    let sq = pair_raw(l2, t.d, t.c, class, class)?;
    let deg = pair_raw(l2, t.d, t.c, DivisorClass::L, class)?;
    Ok((sq, deg))
}

/// Upper bound on `ε(L)` supplied by an effective class with the given
/// numbers: a singular member when `D² ≥ 0` gives `L.D / 2`, a `(−2)`-curve
/// gives `L.D`.
pub fn effective_ratio(d_square: i64, d_degree: i64) -> Option<Rational> {
    if d_degree <= 0 || d_square < -2 {
        None
    } else if d_square >= 0 {
        Rational::new(d_degree, 2)
    } else if d_square == -2 {
        Some(Rational::from_integer(d_degree))
    } else {
        None
    }
}

/// `"3L−C"`-style rendering of `aL + bC`, positive terms first.
pub fn divisor_expr(class: DivisorClass) -> String {
    fn term(coef: i64, sym: char) -> String {
        match coef.unsigned_abs() {
            1 => format!("{sym}"),
            k => format!("{k}{sym}"),
        }
    }
    let mut terms: Vec<(i64, char)> = [(class.a, 'L'), (class.b, 'C')]
        .into_iter()
        .filter(|(k, _)| *k != 0)
        .collect();
    if terms.is_empty() {
        return String::from("0");
    }
    terms.sort_by_key(|(k, _)| *k < 0);
    let mut out = String::new();
    for (i, (k, sym)) in terms.into_iter().enumerate() {
        if k < 0 {
            out.push('−');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(&term(k, sym));
    }
    out
}

fn rule_text(
    kind: RuleKind,
    divisor: DivisorClass,
    numbers: (i64, i64),
    better: Option<Rational>,
    t: &CandidateTriple,
) -> String {
    let head = format!(
        "Set D:={}; (D²,L.D)=({},{})",
        divisor_expr(divisor),
        numbers.0,
        numbers.1
    );
    let tail = match kind {
        RuleKind::LineViolation => String::from("C is a line, contradicting the absence of lines"),
        RuleKind::GGViolation => String::from("contradicts global generation of L"),
        RuleKind::VAViolation if numbers == (0, 2) => {
            String::from("contradicts very ampleness of L")
        }
        RuleKind::VAViolation => {
            String::from("Hodge index equality gives L ∼ 2D, contradicting very ampleness of L")
        }
        RuleKind::QuadricsViolation => String::from("contradicts quadrics-only ideal"),
        RuleKind::Proportionality => {
            String::from("Hodge index equality, C is numerically proportional to L")
        }
        RuleKind::BetterSeshadri => {
            let r = better.expect("better ratio present");
            let source = if numbers.0 >= 0 {
                "a singular member of |D|"
            } else {
                "the curve D"
            };
            format!("{source} gives ε ≤ {r} < {}", t.ratio())
        }
    };
    format!("{head}: {tail}")
}

fn make(
    kind: RuleKind,
    divisor: DivisorClass,
    numbers: (i64, i64),
    better: Option<Rational>,
    t: &CandidateTriple,
) -> Certificate {
    Certificate {
        kind,
        divisor,
        d_square: numbers.0,
        d_degree: numbers.1,
        better_ratio: better,
        rule_text: rule_text(kind, divisor, numbers, better, t),
    }
}

struct BoxEntry {
    class: DivisorClass,
    numbers: (i64, i64),
}

fn box_entries(l2: i64, t: &CandidateTriple, box_radius: i64) -> Result<Vec<BoxEntry>> {
    if box_radius < 1 {
        return Err(Error::InvalidArgument(format!(
            "box radius must be at least 1, got {box_radius}"
        )));
    }
    let mut out = Vec::new();
    for a in -box_radius..=box_radius {
        for b in -box_radius..=box_radius {
            out.push(BoxEntry {
                class: DivisorClass::new(a, b),
                numbers: aux_intersections(l2, t, a, b)?,
            });
        }
    }
    Ok(out)
}

fn is_half_of_l(l2: i64, t: &CandidateTriple) -> bool {
    i128::from(t.d) * i128::from(t.d) == i128::from(l2) * i128::from(t.c)
        && i128::from(l2) == 2 * i128::from(t.d)
}

fn hodge_equality(l2: i64, t: &CandidateTriple) -> bool {
    i128::from(t.d) * i128::from(t.d) == i128::from(l2) * i128::from(t.c)
}

/// All certificates produced by one rule, in search order.
fn rule_hits(
    kind: RuleKind,
    l2: i64,
    t: &CandidateTriple,
    ctx: &Context,
    entries: &[BoxEntry],
    first_only: bool,
) -> Vec<Certificate> {
    let mut out = Vec::new();
    let self_numbers = (t.c, t.d);
    let pencil = |target: (i64, i64), out: &mut Vec<Certificate>| {
        for e in entries.iter().filter(|e| e.numbers == target) {
            out.push(make(kind, e.class, e.numbers, None, t));
            if first_only {
                break;
            }
        }
    };
    match kind {
        RuleKind::LineViolation => {
            if ctx.no_lines && self_numbers == (-2, 1) {
                out.push(make(kind, DivisorClass::C, self_numbers, None, t));
            }
        }
        RuleKind::GGViolation => {
            if ctx.globally_generated || ctx.very_ample {
                pencil((0, 1), &mut out);
            }
        }
        RuleKind::VAViolation => {
            if ctx.very_ample {
                pencil((0, 2), &mut out);
                if (out.is_empty() || !first_only) && is_half_of_l(l2, t) {
                    out.push(make(kind, DivisorClass::C, self_numbers, None, t));
                }
            }
        }
        RuleKind::QuadricsViolation => {
            if ctx.quadrics_only.is_true() {
                pencil((0, 3), &mut out);
            }
        }
        RuleKind::BetterSeshadri => {
            let ratio = t.ratio();
            for e in entries {
                if let Some(r) = effective_ratio(e.numbers.0, e.numbers.1) {
                    if r < ratio {
                        out.push(make(kind, e.class, e.numbers, Some(r), t));
                        if first_only {
                            break;
                        }
                    }
                }
            }
        }
        RuleKind::Proportionality => {
            if hodge_equality(l2, t) {
                out.push(make(kind, DivisorClass::C, self_numbers, None, t));
            }
        }
    }
    out
}

/// The first certificate for `t` under the fixed rule priority, searching
/// `|a|, |b| ≤ box_radius`.
pub fn certificate_for(
    l2: i64,
    t: &CandidateTriple,
    ctx: &Context,
    box_radius: i64,
) -> Result<Option<Certificate>> {
    let entries = box_entries(l2, t, box_radius)?;
    Ok(RuleKind::PRIORITY.iter().find_map(|&kind| {
        rule_hits(kind, l2, t, ctx, &entries, true)
            .into_iter()
            .next()
    }))
}

/// Every certificate any rule produces for `t` within the box, grouped by rule
/// priority and ordered row-major within a rule.
pub fn all_certificates(
    l2: i64,
    t: &CandidateTriple,
    ctx: &Context,
    box_radius: i64,
) -> Result<Vec<Certificate>> {
    let entries = box_entries(l2, t, box_radius)?;
    Ok(RuleKind::PRIORITY
        .iter()
        .flat_map(|&kind| rule_hits(kind, l2, t, ctx, &entries, false))
        .collect())
}

/// Splits `ts` into survivors and eliminated candidates.
pub fn filter(l2: i64, ts: &[CandidateTriple], ctx: &Context, box_radius: i64) -> Result<Filtered> {
    let mut out = Filtered::default();
    for t in ts {
        match certificate_for(l2, t, ctx, box_radius)? {
            Some(cert) if cert.kind.eliminates() => out.certificates.push(TripleCertificate {
                triple: *t,
                certificate: cert,
            }),
            note => {
                if let Some(cert) = note {
                    out.notes.push(TripleCertificate {
                        triple: *t,
                        certificate: cert,
                    });
                }
                out.survivors.push(*t);
            }
        }
    }
    out.survivors
        .sort_by(|x, y| x.ratio().cmp(&y.ratio()).then(x.cmp(y)));
    Ok(out)
}

impl Certificate {
    /// Recomputes the intersection numbers and re-checks the rule's
    /// preconditions against `ctx`.
    pub fn verify(&self, l2: i64, t: &CandidateTriple, ctx: &Context) -> bool {
        let Ok(numbers) = aux_intersections(l2, t, self.divisor.a, self.divisor.b) else {
            return false;
        };
        if numbers != (self.d_square, self.d_degree) {
            return false;
        }
        let is_c = self.divisor == DivisorClass::C;
        match self.kind {
            RuleKind::LineViolation => ctx.no_lines && is_c && numbers == (-2, 1),
            RuleKind::GGViolation => ctx.globally_generated && numbers == (0, 1),
            RuleKind::VAViolation => {
                ctx.very_ample && (numbers == (0, 2) || (is_c && is_half_of_l(l2, t)))
            }
            RuleKind::QuadricsViolation => ctx.quadrics_only.is_true() && numbers == (0, 3),
            RuleKind::Proportionality => is_c && hodge_equality(l2, t),
            RuleKind::BetterSeshadri => {
                match (self.better_ratio, effective_ratio(numbers.0, numbers.1)) {
                    (Some(claimed), Some(r)) => claimed == r && r < t.ratio(),
                    _ => false,
                }
            }
        }
    }
}
