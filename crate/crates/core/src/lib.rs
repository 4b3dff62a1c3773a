//! Exact-arithmetic computation of Seshadri constants of polarized K3 surfaces.
//!
//! The engine works purely with numerical data: a polarization degree `L²`,
//! optional rank-2 intersection data `[[L², L.C], [L.C, C²]]`, and a small set of
//! context hypotheses (global generation, very ampleness, quadric generation of
//! the ideal, absence of lines). From these it
//!
//! * enumerates every numerically admissible Seshadri-curve triple
//!   `(mult, L.C, C²)` below a rational cap ([`candidates`]),
//! * eliminates triples with machine-checkable certificates built from auxiliary
//!   divisors `aL + bC` ([`exclusion`]),
//! * assembles the survivors into an exact value, interval, or set of
//!   conditional possibilities ([`seshadri`]).
//!
//! Everything is integer or rational arithmetic; no floating point is used.
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod candidates;
pub mod error;
pub mod exclusion;
pub mod expected;
pub mod lattice;
pub mod oracle;
pub mod rational;
pub mod seshadri;

pub use candidates::{CandidateTriple, EnumerationParams};
pub use error::{Error, Result};
pub use exclusion::{Certificate, Context, Filtered, RuleKind, Tristate};
pub use expected::ExpectedTuple;
pub use lattice::{DivisorClass, GramMatrix2, LatticeScanResult, ScanEntry, Violation};
pub use rational::{ExactReal, Rational};
pub use seshadri::{
    GeometricFlags, Interval, Possibility, Realizability, SeshadriOutcome, SeshadriValue,
    SurfaceSpec, SurvivorReport, TableCase,
};
