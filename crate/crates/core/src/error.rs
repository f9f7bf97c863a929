//! Error type shared across the crate.

use std::fmt;

/// Everything that can go wrong while computing a generic fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not a prime in the supported range.
    InvalidModulus(u64),
    /// Inversion of zero.
    DivisionByZero,
    /// An operation requiring a zero-dimensional ideal met an infinite
    /// staircase.
    NotZeroDimensional,
    /// The ideal is the whole ring.
    IdealIsUnit,
    /// A lifting linear system has no solution.
    NoSolution,
    /// A lifting linear system has more than one solution.
    NonUniqueSolution,
    /// The Padé linear system has no solution with nonzero constant
    /// denominator term.
    NoPadeSolution,
    /// A truncation staircase does not match the expected product shape.
    StaircaseUnstable,
    /// The block to invert in the structured solver is singular.
    SingularBlock,
    /// All shift retries were exhausted without finding a specialization
    /// point at which the lift succeeds.
    SpecializationExhausted { attempts: u32 },
}

impl Error {
    /// Signals that the chosen specialization point is (probably) bad and a
    /// fresh coordinate shift should be tried.
    pub fn is_bad_specialization(&self) -> bool {
        matches!(
            self,
            Error::NoSolution
                | Error::NonUniqueSolution
                | Error::StaircaseUnstable
                | Error::SingularBlock
                | Error::NotZeroDimensional
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(p) => write!(f, "invalid modulus {p}: need a prime in (2, 2^62)"),
            Error::DivisionByZero => write!(f, "division by zero in the prime field"),
            Error::NotZeroDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::IdealIsUnit => write!(f, "ideal is the whole ring"),
            Error::NoSolution => write!(f, "lift system is inconsistent"),
            Error::NonUniqueSolution => write!(f, "lift system is rank deficient"),
            Error::NoPadeSolution => write!(f, "no Padé approximant with invertible denominator"),
            Error::StaircaseUnstable => write!(f, "truncation staircase lost its product structure"),
            Error::SingularBlock => write!(f, "structured solve hit a singular block"),
            Error::SpecializationExhausted { attempts } => {
                write!(f, "no good specialization point found after {attempts} attempts")
            }
        }
    }
}

impl std::error::Error for Error {}
