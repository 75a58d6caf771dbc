use core::fmt;

use crate::classifier::LounestoClass;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The realified 8x8 matrix of an antilinear operator is numerically
    /// singular; its inverse does not exist.
    SingularOperator { det: f64, threshold: f64 },
    /// A bilinear covariant came out with an imaginary residue above
    /// tolerance. This signals an implementation bug, not bad input.
    NonRealBilinear { component: &'static str, residue: f64 },
    /// The divisor of a P/Q class relation (omega + sigma*e0123, sigma, or
    /// omega) is below tolerance for the requested class.
    DivisionDegenerate { class: u8 },
    /// Flagpole extraction requires a class-5 spinor.
    NotFlagpole { actual: LounestoClass },
    /// Majorana decomposition requires a class-6 (Weyl) spinor.
    NotWeyl { actual: LounestoClass },
    /// A helicity spinor needs a nonzero direction.
    ZeroDirection,
    /// Grade index outside 0..=4.
    GradeOutOfRange { grade: usize },
    /// The ELKO dual needs the opposite-helicity partner of the same label.
    LabelMismatch,
    /// A rest-frame Dirac spinor must have equal Weyl halves before boosting.
    OffShell { deviation: f64 },
    /// Newton iteration failed over all restarts.
    NoConvergence { best_residual: f64 },
    /// A converged solver point failed class membership over all restarts.
    WrongClass {
        requested: LounestoClass,
        actual: LounestoClass,
    },
    /// Rejection sampling gave up (pathological tolerance settings).
    ExhaustedRetries { attempts: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularOperator { det, threshold } => write!(
                f,
                "singular operator: |det| = {det:.3e} <= threshold {threshold:.3e}"
            ),
            Error::NonRealBilinear { component, residue } => write!(
                f,
                "bilinear {component} has imaginary residue {residue:.3e} above tolerance"
            ),
            Error::DivisionDegenerate { class } => {
                write!(f, "degenerate divisor in class-{class} P/Q relation")
            }
            Error::NotFlagpole { actual } => {
                write!(f, "flagpole extraction needs class 5, got {actual}")
            }
            Error::NotWeyl { actual } => {
                write!(f, "Majorana decomposition needs class 6, got {actual}")
            }
            Error::ZeroDirection => write!(f, "helicity direction is (numerically) zero"),
            Error::GradeOutOfRange { grade } => write!(f, "grade {grade} outside 0..=4"),
            Error::LabelMismatch => write!(f, "ELKO dual partner label mismatch"),
            Error::OffShell { deviation } => write!(
                f,
                "rest-frame spinor has unequal Weyl halves (deviation {deviation:.3e})"
            ),
            Error::NoConvergence { best_residual } => write!(
                f,
                "Newton iteration did not converge (best residual {best_residual:.3e})"
            ),
            Error::WrongClass { requested, actual } => write!(
                f,
                "converged point classifies as {actual}, requested {requested}"
            ),
            Error::ExhaustedRetries { attempts } => {
                write!(f, "rejection sampling exhausted after {attempts} attempts")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
