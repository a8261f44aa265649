//! Error types shared across the crate.

use std::fmt;

/// Reasons a cubic polynomial is rejected as a Pisot-unit base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// |constant term| != 1, so the dominant root is not an algebraic unit.
    NotUnit,
    /// Akiyama's inequality fails; the dominant root is not a Pisot number.
    NotPisot,
    /// Negative discriminant: one real root and two complex conjugates.
    ComplexConjugates,
    /// The polynomial has a rational root (±1) and factors over Q.
    Reducible,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rejection::NotUnit => "NotUnit",
            Rejection::NotPisot => "NotPisot",
            Rejection::ComplexConjugates => "ComplexConjugates",
            Rejection::Reducible => "Reducible",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Rejected(Rejection),
    /// Operation not defined for this family (e.g. HK estimates for bases
    /// with two negative conjugates).
    FamilyUnsupported(String),
    /// A digit exceeds the alphabet bound ceil(beta) - 1.
    AlphabetViolation { digit: u32, max: u32 },
    /// Operand has digits after the point where a beta-integer is required.
    NotBetaInteger,
    /// Digit string is not an admissible greedy expansion.
    NotAdmissible,
    /// Parameters fall outside a lemma's or proposition's validity range.
    OutOfRange(String),
    /// A step budget ran out before the expansion resolved.
    BudgetExceeded,
    /// Quantity depends on an expansion that exceeded its budget.
    Undetermined,
    /// Interval refinement hit the precision cap. Signals a bug for
    /// nonzero algebraic inputs, never an expected outcome.
    PrecisionExhausted { bits: u32 },
    /// Norm search exhausted all levels without certifying a bound.
    Inconclusive { lmax: usize },
    /// |beta'| enclosure touches 1; value iteration would not contract.
    NonContraction,
    Parse { pos: usize, msg: String },
    /// Root isolation could not reach the requested width.
    WidthUnreachable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Rejected(r) => write!(f, "rejected: {r}"),
            Error::FamilyUnsupported(what) => write!(f, "unsupported for this family: {what}"),
            Error::AlphabetViolation { digit, max } => {
                write!(f, "digit {digit} exceeds alphabet maximum {max}")
            }
            Error::NotBetaInteger => write!(f, "operand is not a beta-integer"),
            Error::NotAdmissible => write!(f, "digit string is not admissible"),
            Error::OutOfRange(what) => write!(f, "out of validity range: {what}"),
            Error::BudgetExceeded => write!(f, "step budget exceeded"),
            Error::Undetermined => write!(f, "undetermined: expansion exceeded its budget"),
            Error::PrecisionExhausted { bits } => {
                write!(f, "precision exhausted at {bits} bits")
            }
            Error::Inconclusive { lmax } => {
                write!(f, "inconclusive: no level up to {lmax} certified the bound")
            }
            Error::NonContraction => write!(f, "conjugate enclosure touches 1"),
            Error::Parse { pos, msg } => write!(f, "parse error at token {pos}: {msg}"),
            Error::WidthUnreachable => write!(f, "requested enclosure width unreachable"),
        }
    }
}

impl std::error::Error for Error {}

impl From<Rejection> for Error {
    fn from(r: Rejection) -> Self {
        Error::Rejected(r)
    }
}
