use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::Violation;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An intermediate value left the checked 64-bit range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid Gram matrix: {}", join_violations(.0))]
    InvalidGram(Vec<Violation>),

    /// The rational cap is at or above the Kleiman bound, so no finite
    /// multiplicity bound exists.
    #[error("multiplicity cap is unbounded: eps_sup = {eps_sup} is not below sqrt({l2})")]
    UnboundedCap { l2: i64, eps_sup: String },

    #[error("inconsistent hypotheses: {0}")]
    InconsistentFlags(String),

    #[error("unsupported degree {0}: {1}")]
    UnsupportedDegree(i64, &'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn join_violations(vs: &[Violation]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{v}");
    }
    out
}
